//! The universal enveloping algebra `U(g)` in the PBW basis of ordered
//! monomials, with its Hopf structure and the symmetrization isomorphism
//! `σ: S(g) -> U(g)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::algebra::{check_lie, Algebra, FlatKey};
use crate::error::{Error, Result};
use crate::linear::{LinComb, Vector};
use crate::scalar::{factorial, int, Q};

/// An exponent vector over an ordered basis. Serves as the ordered PBW
/// monomial `x_0^{a_0} ⋯ x_{n-1}^{a_{n-1}}` in `U(g)` and as the commutative
/// monomial in `S(g)`.
///
/// Monomials compare by total degree first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

impl FlatKey for Monomial {
    fn flat(&self) -> Vec<usize> {
        self.exponents.iter().map(|&e| e as usize).collect()
    }
}

impl FlatKey for (Monomial, usize) {
    fn flat(&self) -> Vec<usize> {
        let mut out = self.0.flat();
        out.push(self.1);
        out
    }
}

impl FlatKey for (Monomial, Monomial) {
    fn flat(&self) -> Vec<usize> {
        let mut out = self.0.flat();
        out.extend(self.1.flat());
        out
    }
}

impl Monomial {
    /// The empty monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Self {
            exponents: vec![0; n],
        }
    }

    pub fn letter(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exponents[i] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// Counts the letters of `word`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut m = Self::one(n);
        for &i in word {
            m.exponents[i] += 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `α! = Π a_i!`.
    pub fn factorial(&self) -> Q {
        self.exponents
            .iter()
            .fold(Q::one(), |acc, &e| acc * factorial(e))
    }

    /// The sorted word `0^{a_0} 1^{a_1} ⋯`.
    pub fn letters(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    /// Largest index with a non-zero exponent.
    pub fn last_letter(&self) -> Option<usize> {
        self.exponents.iter().rposition(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn times_letter(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[i] += 1;
        m
    }

    pub fn without_letter(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[i] -= 1;
        m
    }

    /// Monomial in the disjoint union of both variable sets.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.extend_from_slice(&other.exponents);
        Monomial { exponents }
    }

    /// Splits at variable `at`: the inverse of [`Monomial::concat`].
    pub fn split_at(&self, at: usize) -> (Monomial, Monomial) {
        let (a, b) = self.exponents.split_at(at);
        (
            Monomial::from_exponents(a.to_vec()),
            Monomial::from_exponents(b.to_vec()),
        )
    }

    /// Every `b ≤ self` componentwise, with `b` and `self - b`.
    pub fn splittings(&self) -> Vec<(Monomial, Monomial)> {
        let mut out = vec![(Vec::new(), Vec::new())];
        for &e in &self.exponents {
            out = out
                .into_iter()
                .flat_map(|(l, r): (Vec<u32>, Vec<u32>)| {
                    (0..=e).map(move |k| {
                        let mut l = l.clone();
                        let mut r = r.clone();
                        l.push(k);
                        r.push(e - k);
                        (l, r)
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|(l, r)| (Monomial::from_exponents(l), Monomial::from_exponents(r)))
            .collect()
    }

    /// All monomials in `n` variables of exactly degree `d`, ascending.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<Monomial> {
        fn go(n: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if cur.len() + 1 == n {
                cur.push(left as u32);
                out.push(Monomial::from_exponents(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e as u32);
                go(n, left - e, cur, out);
                cur.pop();
            }
        }
        if n == 0 {
            return if d == 0 {
                vec![Monomial::one(0)]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        go(n, d, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All monomials of degree at most `d`, ascending.
    pub fn up_to_degree(n: usize, d: usize) -> Vec<Monomial> {
        (0..=d)
            .flat_map(|k| Monomial::all_of_degree(n, k))
            .collect()
    }
}

/// An element of `U(g)` in the ordered PBW basis.
pub type UeaElement = LinComb<Monomial>;
/// An element of the symmetric algebra `S(g)` in the monomial basis.
pub type SymElement = LinComb<Monomial>;
/// An element of a tensor square, keyed by pairs of monomials.
pub type TensorSquare = LinComb<(Monomial, Monomial)>;

/// Coproduct of a monomial: `Δ x^a = Σ_{b ≤ a} Π C(a_i, b_i) x^b ⊗ x^{a-b}`.
///
/// This is both the coproduct of the ordered PBW monomial in `U(g)` (each
/// `x_i` primitive, ordered powers multiply without straightening) and the
/// standard coproduct of `S(g)`.
pub fn monomial_coproduct(m: &Monomial) -> TensorSquare {
    let fact = m.factorial();
    m.splittings()
        .into_iter()
        .map(|(b, c)| {
            let coeff = &fact / (b.factorial() * c.factorial());
            ((b, c), coeff)
        })
        .collect()
}

/// Product in `S(g)`.
pub fn sym_mul(a: &SymElement, b: &SymElement) -> SymElement {
    let mut out = SymElement::zero();
    for (m1, c1) in a {
        for (m2, c2) in b {
            out.add_term(m1.mul(m2), c1 * c2);
        }
    }
    out
}

/// Drops every term of degree above `order`.
pub fn truncate(u: &UeaElement, order: usize) -> UeaElement {
    let mut out = u.clone();
    out.retain(|m, _| m.degree() <= order);
    out
}

/// `ε(u)`: the coefficient of the empty monomial.
pub fn counit(u: &UeaElement) -> Q {
    u.iter()
        .find(|(m, _)| m.is_one())
        .map_or_else(Q::zero, |(_, c)| c.clone())
}

/// Distinct rearrangements of a word, starting from its sorted form.
pub(crate) fn distinct_permutations(word: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = word.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = cur.windows(2).rposition(|w| w[0] < w[1]) else {
            return out;
        };
        let j = cur
            .iter()
            .rposition(|&x| x > cur[i])
            .expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// PBW engine for one Lie algebra. Straightening results are memoized; the
/// memo tables are shared behind mutexes and only ever receive idempotent
/// inserts, so results do not depend on scheduling.
pub struct UniversalEnvelope {
    g: Algebra,
    right_letter: Mutex<HashMap<(Monomial, usize), UeaElement>>,
    products: Mutex<HashMap<(Monomial, Monomial), UeaElement>>,
    symmetrized: Mutex<HashMap<Monomial, UeaElement>>,
}

impl fmt::Debug for UniversalEnvelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UniversalEnvelope")
            .field("g", &self.g)
            .finish_non_exhaustive()
    }
}

impl UniversalEnvelope {
    pub fn new(g: &Algebra) -> Result<Self> {
        if let Some(v) = check_lie(g).first_violation() {
            return Err(Error::NotLie(format!(
                "{} fails on basis indices {:?}",
                v.axiom, v.witness
            )));
        }
        Ok(Self {
            g: g.clone(),
            right_letter: Mutex::new(HashMap::new()),
            products: Mutex::new(HashMap::new()),
            symmetrized: Mutex::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn one(&self) -> UeaElement {
        UeaElement::unit(Monomial::one(self.dim()))
    }

    /// The degree 1 element of `U(g)` corresponding to `v ∈ g`.
    pub fn embed(&self, v: &Vector) -> UeaElement {
        v.map_keys(|i| Monomial::letter(self.dim(), *i))
    }

    /// `m · x_j` in the PBW basis, using `x_k x_j = x_j x_k + [x_k, x_j]`
    /// to move `x_j` past the last letter of `m`.
    fn monomial_times_letter(&self, m: &Monomial, j: usize) -> UeaElement {
        match m.last_letter() {
            Some(k) if k > j => {}
            _ => return UeaElement::unit(m.times_letter(j)),
        }
        let key = (m.clone(), j);
        if let Some(hit) = self.right_letter.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let k = m.last_letter().expect("checked above");
        let prefix = m.without_letter(k);
        let swapped = self.mul_letter(&self.monomial_times_letter(&prefix, j), k);
        let mut out = swapped;
        for (l, c) in self.g.bracket_basis(k, j) {
            out.add_scaled(&self.monomial_times_letter(&prefix, *l), c);
        }
        self.right_letter
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    /// `u · x_j`.
    pub fn mul_letter(&self, u: &UeaElement, j: usize) -> UeaElement {
        u.apply(|m| self.monomial_times_letter(m, j))
    }

    /// Expands the product of the letters of `word` in the PBW basis.
    pub fn normalize(&self, word: &[usize]) -> UeaElement {
        word.iter()
            .fold(self.one(), |acc, &j| self.mul_letter(&acc, j))
    }

    /// `a · b` for PBW monomials.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> UeaElement {
        match (a.last_letter(), b.letters().first()) {
            (Some(k), Some(&j)) if k > j => {}
            _ => return UeaElement::unit(a.mul(b)),
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.products.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let out = b
            .letters()
            .iter()
            .fold(UeaElement::unit(a.clone()), |acc, &j| {
                self.mul_letter(&acc, j)
            });
        self.products
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    /// `u · v`.
    pub fn mul(&self, u: &UeaElement, v: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (a, c) in u {
            for (b, d) in v {
                out.add_scaled(&self.mul_monomials(a, b), &(c * d));
            }
        }
        out
    }

    /// `u · v` with every term above `order` dropped.
    pub fn mul_truncated(&self, u: &UeaElement, v: &UeaElement, order: usize) -> UeaElement {
        truncate(&self.mul(u, v), order)
    }

    /// The coproduct with every `x_i` primitive.
    pub fn coproduct(&self, u: &UeaElement) -> TensorSquare {
        let mut out = TensorSquare::zero();
        for (m, c) in u {
            out.add_scaled(&monomial_coproduct(m), c);
        }
        out
    }

    pub fn counit(&self, u: &UeaElement) -> Q {
        counit(u)
    }

    /// `σ(m)`: the average of the products of all rearrangements of the
    /// letters of `m`.
    pub fn symmetrize_monomial(&self, m: &Monomial) -> UeaElement {
        if m.degree() <= 1 {
            return UeaElement::unit(m.clone());
        }
        if let Some(hit) = self.symmetrized.lock().expect("memo lock").get(m) {
            return hit.clone();
        }
        let perms = distinct_permutations(&m.letters());
        let weight = Q::one() / int(perms.len() as i64);
        let mut out = UeaElement::zero();
        for p in &perms {
            out.add_scaled(&self.normalize(p), &weight);
        }
        self.symmetrized
            .lock()
            .expect("memo lock")
            .insert(m.clone(), out.clone());
        out
    }

    /// `σ` extended linearly to `S(g)`.
    pub fn symmetrize(&self, s: &SymElement) -> UeaElement {
        s.apply(|m| self.symmetrize_monomial(m))
    }

    /// `σ^{-1}`, by elimination from the top degree down: `σ(m)` is `m` plus
    /// terms of lower degree.
    pub fn desymmetrize(&self, u: &UeaElement) -> SymElement {
        let mut rest = u.clone();
        let mut out = SymElement::zero();
        while let Some(top) = rest.keys().next_back().map(Monomial::degree) {
            let leading: Vec<(Monomial, Q)> = rest
                .iter()
                .filter(|(m, _)| m.degree() == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            for (m, c) in leading {
                rest.add_scaled(&self.symmetrize_monomial(&m), &-c.clone());
                out.add_term(m, c);
            }
        }
        out
    }

    /// Degree 1 component of `σ^{-1}(u)`, as a vector of `g`.
    pub fn prim_proj(&self, u: &UeaElement) -> Vector {
        self.desymmetrize(u)
            .iter()
            .filter(|(m, _)| m.degree() == 1)
            .map(|(m, c)| (m.last_letter().expect("degree 1"), c.clone()))
            .collect()
    }
}
