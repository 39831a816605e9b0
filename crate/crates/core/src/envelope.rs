//! The enveloping algebra of a Lie algebra `(M -> g)` in LM: the bimodule
//! `U(g) ⊗ M` over `U(g)`, its structure map to `U(g)`, the dialgebra
//! products on the degree 1 part, and two identifications of the degree 1
//! part with `S(g) ⊗ M`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::AxiomReport;
use crate::error::Result;
use crate::linear::{LinComb, Vector};
use crate::lm::LmLieAlgebra;
use crate::pbw::{distinct_permutations, Monomial, UeaElement, UniversalEnvelope};
use crate::scalar::{int, Q};

/// An element of `U(g) ⊗ M`: PBW monomial times module basis index.
pub type BimoduleElement = LinComb<(Monomial, usize)>;
/// An element of `S(g) ⊗ M`.
pub type SymModuleElement = LinComb<(Monomial, usize)>;

/// How the degree 1 part `U(g) ⊗ M` is identified with `S(g) ⊗ M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Trivialization {
    /// `σ` on the `S(g)` factor, identity on `M`.
    Left,
    /// Full symmetrization: every interleaving of the letters with the module
    /// generator, multiplied out with the two actions and averaged.
    Sym,
}

impl Trivialization {
    pub const ALL: [Trivialization; 2] = [Trivialization::Left, Trivialization::Sym];

    pub fn name(self) -> &'static str {
        match self {
            Trivialization::Left => "left",
            Trivialization::Sym => "sym",
        }
    }
}

impl fmt::Display for Trivialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Enveloping algebra engine for one Lie algebra in LM.
pub struct LmEnvelope {
    algebra: LmLieAlgebra,
    ue: UniversalEnvelope,
    sym_memo: Mutex<HashMap<(Monomial, usize), BimoduleElement>>,
    right_memo: Mutex<HashMap<(Monomial, usize, Monomial), BimoduleElement>>,
}

impl fmt::Debug for LmEnvelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LmEnvelope")
            .field("algebra", &self.algebra)
            .finish_non_exhaustive()
    }
}

impl LmEnvelope {
    pub fn new(algebra: &LmLieAlgebra) -> Result<Self> {
        Ok(Self {
            ue: UniversalEnvelope::new(algebra.g())?,
            algebra: algebra.clone(),
            sym_memo: Mutex::new(HashMap::new()),
            right_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &LmLieAlgebra {
        &self.algebra
    }

    pub fn ue(&self) -> &UniversalEnvelope {
        &self.ue
    }

    fn n(&self) -> usize {
        self.algebra.g().dim()
    }

    /// `1 ⊗ e_v`.
    pub fn generator(&self, v: usize) -> BimoduleElement {
        BimoduleElement::unit((Monomial::one(self.n()), v))
    }

    /// `h ⊗ m`.
    pub fn tensor(&self, h: &UeaElement, m: &Vector) -> BimoduleElement {
        let mut out = BimoduleElement::zero();
        for (mono, a) in h {
            for (v, b) in m {
                out.add_term((mono.clone(), *v), a * b);
            }
        }
        out
    }

    /// Splits `b` as `Σ_v b_v ⊗ e_v`.
    fn by_module_index(b: &BimoduleElement) -> Vec<(usize, UeaElement)> {
        let mut grouped: BTreeMap<usize, UeaElement> = BTreeMap::new();
        for ((mono, v), c) in b {
            grouped
                .entry(*v)
                .or_default()
                .add_term(mono.clone(), c.clone());
        }
        grouped.into_iter().collect()
    }

    /// `h · (k ⊗ m) = hk ⊗ m`.
    pub fn left_act(&self, h: &UeaElement, b: &BimoduleElement) -> BimoduleElement {
        let mut out = BimoduleElement::zero();
        for (v, part) in Self::by_module_index(b) {
            let prod = self.ue.mul(h, &part);
            for (mono, c) in prod.iter() {
                out.add_term((mono.clone(), v), c.clone());
            }
        }
        out
    }

    /// `(h ⊗ m) · x_j = h x_j ⊗ m + h ⊗ [m, x_j]`.
    pub fn right_act_letter(&self, b: &BimoduleElement, j: usize) -> BimoduleElement {
        let module = self.algebra.module();
        let mut out = BimoduleElement::zero();
        for ((mono, v), c) in b {
            for (m2, c2) in self
                .ue
                .mul_letter(&UeaElement::unit(mono.clone()), j)
                .iter()
            {
                out.add_term((m2.clone(), *v), c * c2);
            }
            for (w, c2) in module.act_basis(*v, j) {
                out.add_term((mono.clone(), *w), c * c2);
            }
        }
        out
    }

    fn right_act_word(&self, b: &BimoduleElement, word: &[usize]) -> BimoduleElement {
        word.iter()
            .fold(b.clone(), |acc, &j| self.right_act_letter(&acc, j))
    }

    /// `(m ⊗ e_v) · h` for a PBW monomial `h`, peeling off its last letter.
    fn right_act_basis(&self, m: &Monomial, v: usize, h: &Monomial) -> BimoduleElement {
        let Some(last) = h.last_letter() else {
            return BimoduleElement::unit((m.clone(), v));
        };
        let key = (m.clone(), v, h.clone());
        if let Some(hit) = self.right_memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let out = self.right_act_letter(&self.right_act_basis(m, v, &h.without_letter(last)), last);
        self.right_memo
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    /// `b · h`, through each PBW monomial of `h`.
    pub fn right_act(&self, b: &BimoduleElement, h: &UeaElement) -> BimoduleElement {
        let mut out = BimoduleElement::zero();
        for ((m, v), c) in b {
            for (mono, d) in h {
                out.add_scaled(&self.right_act_basis(m, *v, mono), &(c * d));
            }
        }
        out
    }

    /// `δ_U(h ⊗ m) = h · δm`.
    pub fn delta_env(&self, b: &BimoduleElement) -> UeaElement {
        let delta = self.algebra.delta();
        let mut out = UeaElement::zero();
        for ((mono, v), c) in b {
            let h = UeaElement::unit(mono.clone());
            for (i, d) in delta.column(*v) {
                out.add_scaled(&self.ue.mul_letter(&h, *i), &(c * d));
            }
        }
        out
    }

    /// `x ⊣ y = x · δy`.
    pub fn dialg_left(&self, x: &BimoduleElement, y: &BimoduleElement) -> BimoduleElement {
        self.right_act(x, &self.delta_env(y))
    }

    /// `x ⊢ y = δx · y`.
    pub fn dialg_right(&self, x: &BimoduleElement, y: &BimoduleElement) -> BimoduleElement {
        self.left_act(&self.delta_env(x), y)
    }

    /// `(x ⊣ y, x ⊢ y)`.
    pub fn dialg_ops(
        &self,
        x: &BimoduleElement,
        y: &BimoduleElement,
    ) -> (BimoduleElement, BimoduleElement) {
        (self.dialg_left(x, y), self.dialg_right(x, y))
    }

    /// Elements `m ⊗ e_v` of total degree `|m| + 1 ≤ degree_bound`.
    pub fn spanning_set(&self, degree_bound: usize) -> Vec<BimoduleElement> {
        if degree_bound == 0 {
            return Vec::new();
        }
        Monomial::up_to_degree(self.n(), degree_bound - 1)
            .into_iter()
            .flat_map(|m| {
                (0..self.algebra.module().dim()).map(move |v| BimoduleElement::unit((m.clone(), v)))
            })
            .collect()
    }

    /// Checks the dialgebra axioms
    ///
    /// ```text
    /// x⊣(y⊣z) = (x⊣y)⊣z = x⊣(y⊢z)
    /// (x⊢y)⊣z = x⊢(y⊣z)
    /// (x⊣y)⊢z = (x⊢y)⊢z = x⊢(y⊢z)
    /// ```
    ///
    /// on every triple from [`LmEnvelope::spanning_set`]. Witnesses are
    /// indices into that set.
    pub fn check_dialgebra(&self, degree_bound: usize) -> AxiomReport {
        let span = self.spanning_set(degree_bound);
        let k = span.len();
        let pairs: Vec<Vec<(BimoduleElement, BimoduleElement)>> = span
            .par_iter()
            .map(|x| span.iter().map(|y| self.dialg_ops(x, y)).collect())
            .collect();
        let reports: Vec<AxiomReport> = (0..k)
            .into_par_iter()
            .map(|i| {
                let x = &span[i];
                let mut report = AxiomReport::default();
                for (j, (xl_y, xr_y)) in pairs[i].iter().enumerate() {
                    for (l, (z, (yl_z, yr_z))) in span.iter().zip(&pairs[j]).enumerate() {
                        let w = [i, j, l];
                        let a = self.dialg_left(x, yl_z);
                        let b = self.dialg_left(xl_y, z);
                        let c = self.dialg_left(x, yr_z);
                        report.check("x⊣(y⊣z)=(x⊣y)⊣z", &w, a.clone(), b);
                        report.check("x⊣(y⊣z)=x⊣(y⊢z)", &w, a, c);
                        report.check(
                            "(x⊢y)⊣z=x⊢(y⊣z)",
                            &w,
                            self.dialg_left(xr_y, z),
                            self.dialg_right(x, yl_z),
                        );
                        let d = self.dialg_right(xl_y, z);
                        let e = self.dialg_right(xr_y, z);
                        let f = self.dialg_right(x, yr_z);
                        report.check("(x⊣y)⊢z=(x⊢y)⊢z", &w, d, e.clone());
                        report.check("(x⊢y)⊢z=x⊢(y⊢z)", &w, e, f);
                    }
                }
                report
            })
            .collect();
        let mut out = AxiomReport::default();
        for r in reports {
            out.merge(r);
        }
        out
    }

    /// `σ₁(m ⊗ e_v)` for the chosen trivialization.
    pub fn lm_symmetrize_term(
        &self,
        m: &Monomial,
        v: usize,
        triv: Trivialization,
    ) -> BimoduleElement {
        match triv {
            Trivialization::Left => {
                let s = self.ue.symmetrize_monomial(m);
                s.iter()
                    .map(|(mono, c)| ((mono.clone(), v), c.clone()))
                    .collect()
            }
            Trivialization::Sym => {
                if m.is_one() {
                    return self.generator(v);
                }
                let key = (m.clone(), v);
                if let Some(hit) = self.sym_memo.lock().expect("memo lock").get(&key) {
                    return hit.clone();
                }
                let perms = distinct_permutations(&m.letters());
                let slots = m.degree() + 1;
                let weight = Q::one() / int((perms.len() * slots) as i64);
                let base = self.generator(v);
                let mut out = BimoduleElement::zero();
                for p in &perms {
                    for at in 0..slots {
                        let (before, after) = p.split_at(at);
                        let right = self.right_act_word(&base, after);
                        let prod = self.left_act(&self.ue.normalize(before), &right);
                        out.add_scaled(&prod, &weight);
                    }
                }
                self.sym_memo
                    .lock()
                    .expect("memo lock")
                    .insert(key, out.clone());
                out
            }
        }
    }

    /// `σ₁: S(g) ⊗ M -> U(g) ⊗ M`.
    pub fn lm_symmetrize(&self, s: &SymModuleElement, triv: Trivialization) -> BimoduleElement {
        s.apply(|(m, v)| self.lm_symmetrize_term(m, *v, triv))
    }

    /// `σ₁⁻¹`, eliminating from the top monomial degree down.
    pub fn lm_desymmetrize(&self, b: &BimoduleElement, triv: Trivialization) -> SymModuleElement {
        let mut rest = b.clone();
        let mut out = SymModuleElement::zero();
        while let Some(top) = rest.keys().next_back().map(|(m, _)| m.degree()) {
            let leading: Vec<((Monomial, usize), Q)> = rest
                .iter()
                .filter(|((m, _), _)| m.degree() == top)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect();
            for ((m, v), c) in leading {
                rest.add_scaled(&self.lm_symmetrize_term(&m, v, triv), &-c.clone());
                out.add_term((m, v), c);
            }
        }
        out
    }

    /// The empty-monomial component of `σ₁⁻¹(b)`, as a vector of `M`.
    pub fn lm_prim_proj(&self, b: &BimoduleElement, triv: Trivialization) -> Vector {
        self.lm_desymmetrize(b, triv)
            .iter()
            .filter(|((m, _), _)| m.is_one())
            .map(|((_, v), c)| (*v, c.clone()))
            .collect()
    }
}
