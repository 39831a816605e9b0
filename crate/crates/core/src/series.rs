//! Degree-truncated multivariate power series with exact coefficients, and
//! the series maps produced by formal integration.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{AxiomReport, FlatKey};
use crate::error::{Error, Result};
use crate::linear::{LinComb, Vector};
use crate::pbw::Monomial;
use crate::scalar::Q;

/// A scalar polynomial in `nvars` commuting variables, truncated above
/// total degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncPoly {
    nvars: usize,
    order: usize,
    terms: LinComb<Monomial>,
}

impl TruncPoly {
    pub fn zero(nvars: usize, order: usize) -> Self {
        Self {
            nvars,
            order,
            terms: LinComb::zero(),
        }
    }

    pub fn constant(nvars: usize, order: usize, c: Q) -> Self {
        Self {
            nvars,
            order,
            terms: LinComb::term(Monomial::one(nvars), c),
        }
    }

    pub fn var(nvars: usize, order: usize, i: usize) -> Self {
        let mut out = Self::zero(nvars, order);
        if order >= 1 {
            out.terms.add_term(Monomial::letter(nvars, i), Q::one());
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &LinComb<Monomial> {
        &self.terms
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if m.degree() <= self.order {
            self.terms.add_term(m, c);
        }
    }

    pub fn add_scaled(&mut self, other: &TruncPoly, c: &Q) {
        self.terms.add_scaled(&other.terms, c);
    }

    pub fn mul(&self, other: &TruncPoly) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, self.order.min(other.order));
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.degree() + b.degree() <= out.order {
                    out.terms.add_term(a.mul(b), x * y);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> TruncPoly {
        (0..e).fold(
            TruncPoly::constant(self.nvars, self.order, Q::one()),
            |acc, _| acc.mul(self),
        )
    }
}

/// `Π polys[i]^{m_i}`, with powers cached per variable.
struct PowerCache<'a> {
    polys: &'a [TruncPoly],
    powers: Vec<Vec<TruncPoly>>,
}

impl<'a> PowerCache<'a> {
    fn new(polys: &'a [TruncPoly]) -> Self {
        let powers = polys
            .iter()
            .map(|p| vec![TruncPoly::constant(p.nvars, p.order, Q::one())])
            .collect();
        Self { polys, powers }
    }

    fn power(&mut self, i: usize, e: u32) -> TruncPoly {
        while self.powers[i].len() <= e as usize {
            let next = self.powers[i].last().expect("seeded").mul(&self.polys[i]);
            self.powers[i].push(next);
        }
        self.powers[i][e as usize].clone()
    }

    fn monomial(&mut self, m: &Monomial, nvars: usize, order: usize) -> TruncPoly {
        let mut acc = TruncPoly::constant(nvars, order, Q::one());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&self.power(i, e));
            }
        }
        acc
    }
}

/// A vector-valued power series `f(x, y)` in two sets of variables:
/// `coeffs[(α, β)]` is the coefficient vector of `x^α y^β`, for
/// `|α| + |β| ≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMap {
    pub order: usize,
    pub n_in1: usize,
    pub n_in2: usize,
    pub n_out: usize,
    coeffs: BTreeMap<(Monomial, Monomial), Vector>,
}

impl SeriesMap {
    pub fn new(order: usize, n_in1: usize, n_in2: usize, n_out: usize) -> Self {
        Self {
            order,
            n_in1,
            n_in2,
            n_out,
            coeffs: BTreeMap::new(),
        }
    }

    /// Sets a coefficient. Zero vectors and keys above the order are dropped.
    pub fn set(&mut self, alpha: Monomial, beta: Monomial, value: Vector) {
        assert_eq!(alpha.nvars(), self.n_in1);
        assert_eq!(beta.nvars(), self.n_in2);
        if alpha.degree() + beta.degree() > self.order {
            return;
        }
        if value.is_zero() {
            self.coeffs.remove(&(alpha, beta));
        } else {
            self.coeffs.insert((alpha, beta), value);
        }
    }

    pub fn coeff(&self, alpha: &Monomial, beta: &Monomial) -> Vector {
        self.coeffs
            .get(&(alpha.clone(), beta.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<(Monomial, Monomial), Vector> {
        &self.coeffs
    }

    /// `x + y` on an `n`-dimensional space.
    pub fn additive(n: usize, order: usize) -> Self {
        let mut out = Self::new(order, n, n, n);
        for i in 0..n {
            out.set(Monomial::letter(n, i), Monomial::one(n), Vector::basis(i));
            out.set(Monomial::one(n), Monomial::letter(n, i), Vector::basis(i));
        }
        out
    }

    /// Evaluates `f(x, y)` at vectors of truncated polynomials, one per
    /// input variable, giving one polynomial per output coordinate.
    pub fn substitute(
        &self,
        x: &[TruncPoly],
        y: &[TruncPoly],
        nvars: usize,
        order: usize,
    ) -> Vec<TruncPoly> {
        assert_eq!(x.len(), self.n_in1);
        assert_eq!(y.len(), self.n_in2);
        let mut xs = PowerCache::new(x);
        let mut ys = PowerCache::new(y);
        let mut out = vec![TruncPoly::zero(nvars, order); self.n_out];
        for ((alpha, beta), coeff) in &self.coeffs {
            let term = xs
                .monomial(alpha, nvars, order)
                .mul(&ys.monomial(beta, nvars, order));
            for (k, c) in coeff {
                out[*k].add_scaled(&term, c);
            }
        }
        out
    }
}

/// The degree 1 series `g(v, y)` of a formal group in LM, linear in `v`:
/// `coeffs[(v, β)]` is the coefficient of `v · y^β`, for `|β| + 1 ≤ order`.
///
/// The α-dependence table holds every non-zero coefficient found with a
/// non-trivial first-slot monomial `α`; it is empty when the right action's
/// primitive part does not depend on `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2Series {
    pub order: usize,
    pub n_vars: usize,
    pub module_dim: usize,
    coeffs: BTreeMap<(usize, Monomial), Vector>,
    pub alpha_dependence: BTreeMap<(Monomial, usize, Monomial), Vector>,
}

impl G2Series {
    pub fn new(order: usize, n_vars: usize, module_dim: usize) -> Self {
        Self {
            order,
            n_vars,
            module_dim,
            coeffs: BTreeMap::new(),
            alpha_dependence: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, v: usize, beta: Monomial, value: Vector) {
        assert_eq!(beta.nvars(), self.n_vars);
        if beta.degree() + 1 > self.order {
            return;
        }
        if value.is_zero() {
            self.coeffs.remove(&(v, beta));
        } else {
            self.coeffs.insert((v, beta), value);
        }
    }

    pub fn coeff(&self, v: usize, beta: &Monomial) -> Vector {
        self.coeffs
            .get(&(v, beta.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, Monomial), Vector> {
        &self.coeffs
    }

    /// `g(v, y) = v`.
    pub fn identity(module_dim: usize, n_vars: usize, order: usize) -> Self {
        let mut out = Self::new(order, n_vars, module_dim);
        for v in 0..module_dim {
            out.set(v, Monomial::one(n_vars), Vector::basis(v));
        }
        out
    }

    /// `w ↦ Σ_u w_u · coeff(u, β)`.
    fn apply_coeff(&self, w: &Vector, beta: &Monomial) -> Vector {
        w.apply(|u| self.coeff(*u, beta))
    }

    /// `self(v, f(y, z))`: substitution of a series map into the variable
    /// slot. The result's variables are those of `f`, first set then second.
    pub fn substitute_vars(&self, inner: &SeriesMap, order: usize) -> Result<G2Series> {
        check_order(order, self.order)?;
        check_order(order, inner.order)?;
        if inner.n_out != self.n_vars {
            return Err(Error::DimensionMismatch(format!(
                "series has {} outputs, slot has {} variables",
                inner.n_out, self.n_vars
            )));
        }
        let nvars = inner.n_in1 + inner.n_in2;
        let poly_order = order.saturating_sub(1);
        let x: Vec<TruncPoly> = (0..inner.n_in1)
            .map(|i| TruncPoly::var(nvars, poly_order, i))
            .collect();
        let y: Vec<TruncPoly> = (0..inner.n_in2)
            .map(|i| TruncPoly::var(nvars, poly_order, inner.n_in1 + i))
            .collect();
        let components = inner.substitute(&x, &y, nvars, poly_order);
        let mut cache = PowerCache::new(&components);
        let mut out = G2Series::new(order, nvars, self.module_dim);
        let mut acc: BTreeMap<(usize, Monomial), Vector> = BTreeMap::new();
        for ((v, beta), value) in &self.coeffs {
            let poly = cache.monomial(beta, nvars, poly_order);
            for (m, c) in poly.terms() {
                acc.entry((*v, m.clone())).or_default().add_scaled(value, c);
            }
        }
        for ((v, m), value) in acc {
            out.set(v, m, value);
        }
        Ok(out)
    }

    /// `self(inner(v, y), z)`: substitution into the linear slot. The
    /// result's variables are `inner`'s followed by `self`'s.
    pub fn substitute_linear(&self, inner: &G2Series, order: usize) -> Result<G2Series> {
        check_order(order, self.order)?;
        check_order(order, inner.order)?;
        if inner.module_dim != self.module_dim {
            return Err(Error::DimensionMismatch("module dimensions differ".into()));
        }
        let nvars = inner.n_vars + self.n_vars;
        let mut out = G2Series::new(order, nvars, self.module_dim);
        let gammas: std::collections::BTreeSet<&Monomial> =
            self.coeffs.keys().map(|(_, m)| m).collect();
        for ((v, beta), w) in &inner.coeffs {
            for &gamma in &gammas {
                if beta.degree() + gamma.degree() + 1 > order {
                    continue;
                }
                let image = self.apply_coeff(w, gamma);
                if image.is_zero() {
                    continue;
                }
                let key = beta.concat(gamma);
                let current = out.coeff(*v, &key);
                out.set(*v, key, &current + &image);
            }
        }
        Ok(out)
    }

    /// Coefficientwise comparison, reporting one violation per differing
    /// key `(v, β)`; witnesses are `[exponents of β.., v]`.
    pub fn compare(&self, other: &G2Series, axiom: &str) -> AxiomReport {
        let mut report = AxiomReport::default();
        let keys: std::collections::BTreeSet<&(usize, Monomial)> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        for (v, beta) in keys {
            let mut witness = beta.flat();
            witness.push(*v);
            report.check(axiom, &witness, self.coeff(*v, beta), other.coeff(*v, beta));
        }
        report
    }
}

/// What gets substituted into a [`G2Series`] by [`compose_series`].
#[derive(Clone, Copy, Debug)]
pub enum Inner<'a> {
    /// `outer(v, f(y, z))`
    Vars(&'a SeriesMap),
    /// `outer(inner(v, y), z)`
    Linear(&'a G2Series),
}

/// Formal substitution into one slot of `outer`, re-truncated at `order`.
pub fn compose_series(outer: &G2Series, inner: Inner<'_>, order: usize) -> Result<G2Series> {
    match inner {
        Inner::Vars(f) => outer.substitute_vars(f, order),
        Inner::Linear(g) => outer.substitute_linear(g, order),
    }
}

fn check_order(needed: usize, found: usize) -> Result<()> {
    if found < needed {
        Err(Error::OrderMismatch { needed, found })
    } else {
        Ok(())
    }
}

/// The degree 1 series of the left action, `g¹(x, y, v)`:
/// `coeffs[(α, v, β)]` is the coefficient of `x^α · v · y^β`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct G1Series {
    pub order: usize,
    pub coeffs: BTreeMap<(Monomial, usize, Monomial), Vector>,
}

/// Builds the identity variables of `n` inputs shifted by `offset` inside
/// `nvars` variables.
pub fn variables(nvars: usize, offset: usize, n: usize, order: usize) -> Vec<TruncPoly> {
    (0..n)
        .map(|i| TruncPoly::var(nvars, order, offset + i))
        .collect()
}

/// Collects per-coordinate polynomials into `monomial -> vector`.
pub fn collect_vector(components: &[TruncPoly]) -> BTreeMap<Monomial, Vector> {
    let mut out: BTreeMap<Monomial, Vector> = BTreeMap::new();
    for (k, p) in components.iter().enumerate() {
        for (m, c) in p.terms() {
            out.entry(m.clone()).or_default().add_term(k, c.clone());
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

impl TruncPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }
}
