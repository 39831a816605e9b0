//! Formal integration: the truncated formal group law of a Lie algebra, its
//! independent Dynkin-series oracle, and the formal group in the LM category
//! integrating an LM-Lie algebra.

use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{check_lie, Algebra, AxiomReport, FlatKey};
use crate::envelope::{LmEnvelope, Trivialization};
use crate::error::{Error, Result};
use crate::linear::{LinComb, Vector};
use crate::lm::LmLieAlgebra;
use crate::pbw::{sym_mul, Monomial, SymElement, UniversalEnvelope};
use crate::scalar::{factorial, int, Q};
use crate::series::{
    collect_vector, compose_series, variables, G1Series, G2Series, Inner, SeriesMap,
};

/// Every pair `(α, β)` of monomials in `n` variables with `|α| + |β| ≤ order`.
fn monomial_pairs(n: usize, order: usize) -> Vec<(Monomial, Monomial)> {
    let all = Monomial::up_to_degree(n, order);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.degree() + b.degree() <= order {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// The group law `f(x, y)` of the formal group of `g`, truncated at total
/// degree `order`: the coefficient of `x^α y^β` is the primitive part of
/// `σ(x^α) σ(y^β)`, divided by `α! β!`.
pub fn integrate_lie(g: &Algebra, order: usize) -> Result<SeriesMap> {
    let ue = UniversalEnvelope::new(g)?;
    Ok(integrate_with(&ue, order))
}

pub(crate) fn integrate_with(ue: &UniversalEnvelope, order: usize) -> SeriesMap {
    let n = ue.dim();
    let pairs = monomial_pairs(n, order);
    let values: Vec<Vector> = pairs
        .par_iter()
        .map(|(a, b)| {
            let prod = ue.mul(&ue.symmetrize_monomial(a), &ue.symmetrize_monomial(b));
            let scale = Q::one() / (a.factorial() * b.factorial());
            ue.prim_proj(&prod).scaled(&scale)
        })
        .collect();
    let mut out = SeriesMap::new(order, n, n, n);
    for ((a, b), v) in pairs.into_iter().zip(values) {
        out.set(a, b, v);
    }
    out
}

/// A vector-valued truncated series in `2n` variables (`x` then `y`).
type LieSeries = LinComb<(Monomial, usize)>;

fn series_bracket(g: &Algebra, p: &LieSeries, q: &LieSeries, order: usize) -> LieSeries {
    let mut out = LieSeries::zero();
    for ((a, i), x) in p {
        for ((b, j), y) in q {
            if a.degree() + b.degree() > order {
                continue;
            }
            let m = a.mul(b);
            let c = x * y;
            for (k, z) in g.bracket_basis(*i, *j) {
                out.add_term((m.clone(), *k), &c * z);
            }
        }
    }
    out
}

/// Sequences `((r_1, s_1), …, (r_n, s_n))` with `r_i + s_i ≥ 1` and total
/// `Σ r_i + s_i = m`.
fn dynkin_sequences(m: usize) -> Vec<Vec<(usize, usize)>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for r in 0..=first {
            for mut tail in dynkin_sequences(m - first) {
                tail.insert(0, (r, first - r));
                out.push(tail);
            }
        }
    }
    out
}

/// The same group law as [`integrate_lie`], computed from the Dynkin form of
/// the Campbell–Baker–Hausdorff series with right-nested brackets. It uses
/// only the bracket table, never the universal envelope.
pub fn cbh_dynkin(g: &Algebra, order: usize) -> Result<SeriesMap> {
    let report = check_lie(g);
    if let Some(v) = report.first_violation() {
        return Err(Error::NotLie(format!(
            "{} fails at {:?}",
            v.axiom, v.witness
        )));
    }
    let n = g.dim();
    let vars = 2 * n;
    let x: LieSeries = (0..n)
        .map(|i| ((Monomial::letter(vars, i), i), Q::one()))
        .collect();
    let y: LieSeries = (0..n)
        .map(|i| ((Monomial::letter(vars, n + i), i), Q::one()))
        .collect();

    let mut z = LieSeries::zero();
    for m in 1..=order {
        for seq in dynkin_sequences(m) {
            let mut word = Vec::with_capacity(m);
            let mut denom = int(seq.len() as i64) * int(m as i64);
            for &(r, s) in &seq {
                word.extend(std::iter::repeat_n(&x, r));
                word.extend(std::iter::repeat_n(&y, s));
                denom *= factorial(r as u32) * factorial(s as u32);
            }
            let mut acc = (*word.last().expect("m ≥ 1")).clone();
            for w in word.iter().rev().skip(1) {
                if acc.is_zero() {
                    break;
                }
                acc = series_bracket(g, w, &acc, order);
            }
            let sign = if seq.len() % 2 == 1 { int(1) } else { int(-1) };
            z.add_scaled(&acc, &(sign / denom));
        }
    }

    let mut out = SeriesMap::new(order, n, n, n);
    let mut by_key: BTreeMap<(Monomial, Monomial), Vector> = BTreeMap::new();
    for ((mono, k), c) in &z {
        let (a, b) = mono.split_at(n);
        by_key.entry((a, b)).or_default().add_term(*k, c.clone());
    }
    for ((a, b), v) in by_key {
        out.set(a, b, v);
    }
    Ok(out)
}

/// The unique coalgebra morphism `S(V) -> S(V')` extending a linear map
/// `θ: S(V) -> V'` with `θ(1) = 0`:
/// `θ′(m) = Σ_n 1/n! · θ^{⊗n} Δ^{(n)}(m)`, multiplied out in `S(V')`.
/// Returns `θ′` on every monomial of degree `≤ order`.
pub fn extend_coalgebra_morphism(
    nvars: usize,
    out_dim: usize,
    order: usize,
    theta: impl Fn(&Monomial) -> Vector,
) -> BTreeMap<Monomial, SymElement> {
    let compositions = Compositions {
        nvars,
        out_dim,
        theta,
    };
    Monomial::up_to_degree(nvars, order)
        .into_iter()
        .map(|m| {
            let value = compositions.extension(&m);
            (m, value)
        })
        .collect()
}

/// The degree 1 extension `θ′₁(m ⊗ v)` of a pair `(θ₀, θ₁)`, where
/// `θ₁(c, v)` is the image of `c ⊗ v`:
/// `θ′₁(m ⊗ v) = Σ_{c ≤ m} m!/(c!(m−c)!) · θ′₀(m − c) · θ₁(c, v)`.
pub fn extend_coalgebra_morphism_degree1(
    nvars: usize,
    module_dim: usize,
    out_dim: usize,
    order: usize,
    theta0: impl Fn(&Monomial) -> Vector,
    theta1: impl Fn(&Monomial, usize) -> Vector,
) -> BTreeMap<(Monomial, usize), LinComb<(Monomial, usize)>> {
    let compositions = Compositions {
        nvars,
        out_dim,
        theta: theta0,
    };
    let mut out = BTreeMap::new();
    for m in Monomial::up_to_degree(nvars, order) {
        for v in 0..module_dim {
            let mut value = LinComb::zero();
            for (rest, c) in m.splittings() {
                let weight = m.factorial() / (rest.factorial() * c.factorial());
                let head = compositions.extension(&rest);
                let tail = theta1(&c, v);
                for (s, x) in &head {
                    for (w, y) in &tail {
                        value.add_term((s.clone(), *w), &weight * x * y);
                    }
                }
            }
            out.insert((m.clone(), v), value);
        }
    }
    out
}

/// `C_n(m) = Σ_{b ≠ 0, b ≤ m} m!/(b!(m−b)!) · θ(b) · C_{n−1}(m − b)`.
struct Compositions<F> {
    nvars: usize,
    out_dim: usize,
    theta: F,
}

impl<F: Fn(&Monomial) -> Vector> Compositions<F> {
    fn as_sym(&self, v: &Vector) -> SymElement {
        v.iter()
            .map(|(i, c)| (Monomial::letter(self.out_dim, *i), c.clone()))
            .collect()
    }

    fn extension(&self, m: &Monomial) -> SymElement {
        let out_vars = self.out_dim;
        let mut total = SymElement::zero();
        if m.is_one() {
            total.add_term(Monomial::one(out_vars), Q::one());
            return total;
        }
        // layer[k] holds C_n(k) for every sub-monomial k ≤ m
        let subs: Vec<Monomial> = m.splittings().into_iter().map(|(a, _)| a).collect();
        let mut layer: BTreeMap<Monomial, SymElement> = BTreeMap::new();
        layer.insert(
            Monomial::one(self.nvars),
            SymElement::term(Monomial::one(out_vars), Q::one()),
        );
        let mut nfact = Q::one();
        for n in 1..=m.degree() {
            let mut next: BTreeMap<Monomial, SymElement> = BTreeMap::new();
            for k in &subs {
                let mut acc = SymElement::zero();
                for (b, rest) in k.splittings() {
                    if b.is_one() {
                        continue;
                    }
                    let Some(prev) = layer.get(&rest) else {
                        continue;
                    };
                    let weight = k.factorial() / (b.factorial() * rest.factorial());
                    let image = self.as_sym(&(self.theta)(&b));
                    acc.add_scaled(&sym_mul(&image, prev), &weight);
                }
                if !acc.is_zero() {
                    next.insert(k.clone(), acc);
                }
            }
            layer = next;
            nfact *= int(n as i64);
            if let Some(c) = layer.get(m) {
                total.add_scaled(c, &(Q::one() / &nfact));
            }
        }
        total
    }
}

/// A formal group in LM: the group law `f`, the left action `g¹` and the
/// right action `g²`, all truncated at `order`.
#[derive(Clone, Debug)]
pub struct LmFormalGroup {
    pub order: usize,
    pub trivialization: Trivialization,
    pub f: SeriesMap,
    pub g1: G1Series,
    pub g2: G2Series,
    /// `δ` on the module, for compatibility checks.
    pub delta: crate::linear::LinearMap,
    pub identity_map: bool,
}

/// Integrates an LM-Lie algebra `(δ: M -> g)` to a truncated formal group
/// in LM under the given trivialization of the envelope's module part.
pub fn integrate_lm(
    algebra: &LmLieAlgebra,
    order: usize,
    triv: Trivialization,
) -> Result<LmFormalGroup> {
    let env = LmEnvelope::new(algebra)?;
    let n = algebra.g().dim();
    let mdim = algebra.module().dim();
    let f = integrate_with(env.ue(), order);

    let mut keys = Vec::new();
    if order >= 1 {
        for (a, b) in monomial_pairs(n, order - 1) {
            for v in 0..mdim {
                keys.push((a.clone(), v, b.clone()));
            }
        }
    }
    let values: Vec<(Vector, Vector)> = keys
        .par_iter()
        .map(|(a, v, b)| {
            let scale = Q::one() / (a.factorial() * b.factorial());
            let sa = env.ue().symmetrize_monomial(a);
            let sb = env.ue().symmetrize_monomial(b);
            let left = env.left_act(&sa, &env.lm_symmetrize_term(b, *v, triv));
            let right = env.right_act(&env.lm_symmetrize_term(a, *v, triv), &sb);
            (
                env.lm_prim_proj(&left, triv).scaled(&scale),
                env.lm_prim_proj(&right, triv).scaled(&scale),
            )
        })
        .collect();

    let mut g1 = G1Series {
        order,
        coeffs: BTreeMap::new(),
    };
    let mut g2 = G2Series::new(order, n, mdim);
    for ((a, v, b), (left, right)) in keys.into_iter().zip(values) {
        if !left.is_zero() {
            g1.coeffs.insert((a.clone(), v, b.clone()), left);
        }
        if a.is_one() {
            g2.set(v, b, right);
        } else if !right.is_zero() {
            g2.alpha_dependence.insert((a, v, b), right);
        }
    }
    Ok(LmFormalGroup {
        order,
        trivialization: triv,
        f,
        g1,
        g2,
        delta: algebra.delta().clone(),
        identity_map: algebra.is_identity_map(),
    })
}

/// Unitality `f(x, 0) = x = f(0, x)` and associativity
/// `f(f(x, y), z) = f(x, f(y, z))` up to total degree `order`.
pub fn verify_formal_group(f: &SeriesMap, order: usize) -> Result<AxiomReport> {
    if f.order < order {
        return Err(Error::OrderMismatch {
            needed: order,
            found: f.order,
        });
    }
    let n = f.n_out;
    if f.n_in1 != n || f.n_in2 != n {
        return Err(Error::DimensionMismatch(
            "group law must map V × V -> V".into(),
        ));
    }
    let mut report = AxiomReport::default();
    let one = Monomial::one(n);
    for m in Monomial::up_to_degree(n, order) {
        let expected = if m.degree() == 1 {
            Vector::basis(m.letters()[0])
        } else {
            Vector::zero()
        };
        report.check("unit-right", &m.flat(), f.coeff(&m, &one), expected.clone());
        report.check("unit-left", &m.flat(), f.coeff(&one, &m), expected);
    }

    let vars = 3 * n;
    let x = variables(vars, 0, n, order);
    let y = variables(vars, n, n, order);
    let z = variables(vars, 2 * n, n, order);
    let xy = f.substitute(&x, &y, vars, order);
    let yz = f.substitute(&y, &z, vars, order);
    let lhs = f.substitute(&xy, &z, vars, order);
    let rhs = f.substitute(&x, &yz, vars, order);
    let lhs = collect_vector(&lhs);
    let rhs = collect_vector(&rhs);
    let keys: std::collections::BTreeSet<&Monomial> = lhs.keys().chain(rhs.keys()).collect();
    for m in keys {
        report.check(
            "associativity",
            &m.flat(),
            lhs.get(m).cloned().unwrap_or_default(),
            rhs.get(m).cloned().unwrap_or_default(),
        );
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `g¹(x, y, v) = v`
    LeftActionSimple,
    /// the right action's primitive part does not depend on the first slot
    AlphaIndependence,
    /// `g²(g²(v, y), z) = g²(v, f(y, z))`
    Associativity,
    /// `δ(g²(v, y)) = f(δv, y)` to first order in `δv`
    DeltaCompatibility,
    /// for `δ = id`, `g²(v, y) = f(v, y)` to first order in `v`
    IdentityMap,
}

impl Claim {
    pub const ALL: [Claim; 5] = [
        Claim::LeftActionSimple,
        Claim::AlphaIndependence,
        Claim::Associativity,
        Claim::DeltaCompatibility,
        Claim::IdentityMap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::LeftActionSimple => "left-action-simple",
            Claim::AlphaIndependence => "alpha-independence",
            Claim::Associativity => "associativity",
            Claim::DeltaCompatibility => "delta-compatibility",
            Claim::IdentityMap => "identity-map",
        }
    }

    /// Whether the claim is expected to hold under `triv`.
    pub fn asserted(self, triv: Trivialization) -> bool {
        match triv {
            Trivialization::Left => matches!(
                self,
                Claim::LeftActionSimple | Claim::AlphaIndependence | Claim::Associativity
            ),
            Trivialization::Sym => matches!(self, Claim::DeltaCompatibility | Claim::IdentityMap),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: Claim,
    pub asserted: bool,
    pub status: ClaimStatus,
    pub discrepancies: AxiomReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmIntegrationReport {
    pub trivialization: Trivialization,
    pub order: usize,
    pub claims: Vec<ClaimResult>,
}

impl LmIntegrationReport {
    /// Every asserted claim holds.
    pub fn passed(&self) -> bool {
        self.claims
            .iter()
            .all(|c| !c.asserted || c.status != ClaimStatus::Fails)
    }

    pub fn claim(&self, claim: Claim) -> &ClaimResult {
        self.claims
            .iter()
            .find(|c| c.claim == claim)
            .expect("all claims are evaluated")
    }
}

/// Evaluates each claim about an integrated formal group up to `order`.
pub fn verify_lm_integration(group: &LmFormalGroup, order: usize) -> Result<LmIntegrationReport> {
    if group.order < order {
        return Err(Error::OrderMismatch {
            needed: order,
            found: group.order,
        });
    }
    let triv = group.trivialization;
    let n = group.f.n_out;
    let mut claims = Vec::new();
    let mut push = |claim: Claim, status: ClaimStatus, discrepancies: AxiomReport| {
        claims.push(ClaimResult {
            claim,
            asserted: claim.asserted(triv),
            status,
            discrepancies,
        });
    };
    let status = |r: &AxiomReport| {
        if r.passed() {
            ClaimStatus::Holds
        } else {
            ClaimStatus::Fails
        }
    };

    let mut simple = AxiomReport::default();
    let one = Monomial::one(n);
    let mut keys: std::collections::BTreeSet<(Monomial, usize, Monomial)> =
        group.g1.coeffs.keys().cloned().collect();
    for v in 0..group.g2.module_dim {
        keys.insert((one.clone(), v, one.clone()));
    }
    for (a, v, b) in keys {
        if a.degree() + b.degree() + 1 > order {
            continue;
        }
        let expected = if a.is_one() && b.is_one() {
            Vector::basis(v)
        } else {
            Vector::zero()
        };
        let got = group
            .g1
            .coeffs
            .get(&(a.clone(), v, b.clone()))
            .cloned()
            .unwrap_or_default();
        let mut witness = a.flat();
        witness.push(v);
        witness.extend(b.flat());
        simple.check("left-action-simple", &witness, got, expected);
    }
    push(Claim::LeftActionSimple, status(&simple), simple);

    let mut alpha = AxiomReport::default();
    for ((a, v, b), value) in &group.g2.alpha_dependence {
        if a.degree() + b.degree() + 1 > order {
            continue;
        }
        let mut witness = a.flat();
        witness.push(*v);
        witness.extend(b.flat());
        alpha.check(
            "alpha-independence",
            &witness,
            value.clone(),
            Vector::zero(),
        );
    }
    push(Claim::AlphaIndependence, status(&alpha), alpha);

    let lhs = compose_series(&group.g2, Inner::Linear(&group.g2), order)?;
    let rhs = compose_series(&group.g2, Inner::Vars(&group.f), order)?;
    let assoc = lhs.compare(&rhs, "associativity");
    push(Claim::Associativity, status(&assoc), assoc);

    let mut compat = AxiomReport::default();
    for v in 0..group.g2.module_dim {
        let dv = group.delta.column(v);
        for b in Monomial::up_to_degree(n, order.saturating_sub(1)) {
            let lhs = group.delta.apply(&group.g2.coeff(v, &b));
            let rhs = dv.apply(|i| group.f.coeff(&Monomial::letter(n, *i), &b));
            let mut witness = b.flat();
            witness.push(v);
            compat.check("delta-compatibility", &witness, lhs, rhs);
        }
    }
    push(Claim::DeltaCompatibility, status(&compat), compat);

    if group.identity_map {
        let mut ident = AxiomReport::default();
        for v in 0..group.g2.module_dim {
            for b in Monomial::up_to_degree(n, order.saturating_sub(1)) {
                let mut witness = b.flat();
                witness.push(v);
                ident.check(
                    "identity-map",
                    &witness,
                    group.g2.coeff(v, &b),
                    group.f.coeff(&Monomial::letter(n, v), &b),
                );
            }
        }
        push(Claim::IdentityMap, status(&ident), ident);
    } else {
        push(
            Claim::IdentityMap,
            ClaimStatus::NotApplicable,
            AxiomReport::default(),
        );
    }

    Ok(LmIntegrationReport {
        trivialization: triv,
        order,
        claims,
    })
}
