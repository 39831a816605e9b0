//! Lie algebras in the category of linear maps, and their correspondence
//! with Leibniz algebras.

use crate::algebra::{check_leibniz, check_lie, liezation, Algebra, AxiomReport};
use crate::error::{Error, Result};
use crate::linear::{LinearMap, Vector};
use crate::lm::object::LmObject;
use crate::right_module::RightModule;

/// A Lie algebra `(M -> g)` in LM: a Lie algebra `g`, a right `g`-module `M`
/// and a `g`-equivariant map `delta: M -> g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmLieAlgebra {
    g: Algebra,
    module: RightModule,
    delta: LinearMap,
}

impl LmLieAlgebra {
    /// Validating constructor; every axiom is checked.
    pub fn new(g: Algebra, module: RightModule, delta: LinearMap) -> Result<Self> {
        let out = Self::from_parts_unchecked(g, module, delta)?;
        if let Some(v) = out.componentwise_report().first_violation() {
            return Err(Error::InvalidLmAlgebra(format!(
                "{} fails on basis indices {:?}",
                v.axiom, v.witness
            )));
        }
        Ok(out)
    }

    /// Only dimensions are checked. Useful for exercising the axiom checks
    /// on deliberately broken data.
    pub fn from_parts_unchecked(g: Algebra, module: RightModule, delta: LinearMap) -> Result<Self> {
        if module.algebra_dim() != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "module is over a {}-dimensional algebra, g has dimension {}",
                module.algebra_dim(),
                g.dim()
            )));
        }
        if delta.rows() != g.dim() || delta.cols() != module.dim() {
            return Err(Error::DimensionMismatch(format!(
                "delta is {}x{}, expected {}x{}",
                delta.rows(),
                delta.cols(),
                g.dim(),
                module.dim()
            )));
        }
        Ok(Self { g, module, delta })
    }

    /// `(g -> g)` with the adjoint action and identity structure map.
    pub fn identity(g: &Algebra) -> Result<Self> {
        Self::new(
            g.clone(),
            RightModule::adjoint(g),
            LinearMap::identity(g.dim()),
        )
    }

    /// `(0 -> g)`.
    pub fn over_lie(g: &Algebra) -> Result<Self> {
        Self::new(
            g.clone(),
            RightModule::trivial(Vec::<String>::new(), g.dim()),
            LinearMap::zero(g.dim(), 0),
        )
    }

    /// `(V -> 0)`.
    pub fn over_vector_space<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let module = RightModule::trivial(names, 0);
        let m = module.dim();
        Self {
            g: Algebra::abelian(Vec::<String>::new()),
            module,
            delta: LinearMap::zero(0, m),
        }
    }

    pub fn g(&self) -> &Algebra {
        &self.g
    }

    pub fn module(&self) -> &RightModule {
        &self.module
    }

    pub fn delta(&self) -> &LinearMap {
        &self.delta
    }

    pub fn object(&self) -> LmObject {
        LmObject::new(self.delta.clone())
    }

    /// `delta` is the identity and `M` is the adjoint module.
    pub fn is_identity_map(&self) -> bool {
        self.delta == LinearMap::identity(self.g.dim())
            && self.module == RightModule::adjoint(&self.g)
    }

    /// `g` is Lie, `M` satisfies the right-module axiom and `delta` is
    /// equivariant: `delta([m, x]) = [delta m, x]`.
    pub fn componentwise_report(&self) -> AxiomReport {
        let mut report = check_lie(&self.g);
        report.merge(self.module.check_axiom(&self.g));
        for v in 0..self.module.dim() {
            for i in 0..self.g.dim() {
                let lhs = self.delta.apply(self.module.act_basis(v, i));
                let rhs = self.g.bracket_right_basis(self.delta.column(v), i);
                report.check("equivariance", &[v, i], lhs, rhs);
            }
        }
        report
    }
}

/// An element of one graded piece of `(M -> g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Graded {
    /// degree 0, in `g`
    Zero(Vector),
    /// degree 1, in `M`
    One(Vector),
}

impl Graded {
    fn vector(&self) -> &Vector {
        match self {
            Graded::Zero(v) | Graded::One(v) => v,
        }
    }
}

impl LmLieAlgebra {
    /// The bracket `mu` on `(M -> g)^{⊗2}`: degree 0 is the bracket of `g`,
    /// degree 1 is `m⊗x ↦ [m,x]` and `x⊗m ↦ -[m,x]`.
    fn mu(&self, a: &Graded, b: &Graded) -> Graded {
        match (a, b) {
            (Graded::Zero(x), Graded::Zero(y)) => Graded::Zero(self.g.bracket(x, y)),
            (Graded::One(m), Graded::Zero(x)) => Graded::One(self.module.act(m, x)),
            (Graded::Zero(x), Graded::One(m)) => Graded::One(-&self.module.act(m, x)),
            (Graded::One(_), Graded::One(_)) => unreachable!("degree 2 is truncated"),
        }
    }

    fn delta_graded(&self, a: &Graded) -> Graded {
        match a {
            Graded::One(m) => Graded::Zero(self.delta.apply(m)),
            Graded::Zero(_) => unreachable!("delta is defined on degree 1"),
        }
    }
}

/// Evaluates the Lie algebra axioms of `(M -> g)` as identities of maps in
/// LM: `mu` is a morphism (commutes with delta), antisymmetric on degree 0,
/// and `mu(1⊗mu) - mu(mu⊗1) + mu(mu⊗1)(1⊗τ) = 0` on every degree 0 and
/// degree 1 basis triple of the third tensor power.
pub fn check_lm_jacobi(a: &LmLieAlgebra) -> AxiomReport {
    let n = a.g.dim();
    let m = a.module.dim();
    let g = |i: usize| Graded::Zero(Vector::basis(i));
    let md = |v: usize| Graded::One(Vector::basis(v));
    let mut report = AxiomReport::default();

    for i in 0..n {
        for j in i..n {
            let lhs = a.mu(&g(i), &g(j));
            let rhs = a.mu(&g(j), &g(i));
            report.check("antisymmetry", &[i, j], lhs.vector().clone(), -rhs.vector());
        }
    }
    for v in 0..m {
        for i in 0..n {
            let d = a.delta_graded(&a.mu(&md(v), &g(i)));
            let e = a.mu(&a.delta_graded(&md(v)), &g(i));
            report.check("morphism", &[v, i], d.vector().clone(), e.vector().clone());
            let d = a.delta_graded(&a.mu(&g(i), &md(v)));
            let e = a.mu(&g(i), &a.delta_graded(&md(v)));
            report.check("morphism", &[i, v], d.vector().clone(), e.vector().clone());
        }
    }

    let mut jacobi = |x: Graded, y: Graded, z: Graded, name: &str, witness: [usize; 3]| {
        let t1 = a.mu(&x, &a.mu(&y, &z));
        let t2 = a.mu(&a.mu(&x, &y), &z);
        let t3 = a.mu(&a.mu(&x, &z), &y);
        let total = &(t1.vector() - t2.vector()) + t3.vector();
        report.check(name, &witness, total, Vector::zero());
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                jacobi(g(i), g(j), g(k), "jacobi-degree0", [i, j, k]);
            }
            for v in 0..m {
                jacobi(md(v), g(i), g(j), "jacobi-mgg", [v, i, j]);
                jacobi(g(i), md(v), g(j), "jacobi-gmg", [i, v, j]);
                jacobi(g(i), g(j), md(v), "jacobi-ggm", [i, j, v]);
            }
        }
    }
    report
}

/// `L ↦ (L -> L_Lie)`: the Lie quotient acts on `L` through any
/// representative, and the structure map is the quotient map.
pub fn lm_from_leibniz(l: &Algebra) -> Result<LmLieAlgebra> {
    let lz = liezation(l)?;
    let n = l.dim();
    let mut entries = Vec::new();
    for v in 0..n {
        for (a, &rep) in lz.representatives.iter().enumerate() {
            let image = l.bracket_basis(v, rep).clone();
            // a second representative of the same class must act identically
            for (_, row) in lz.ideal.basis() {
                let other = &Vector::basis(rep) + row;
                let alt = l.bracket_left_basis(v, &other);
                if alt != image {
                    return Err(Error::IllDefinedAction(format!(
                        "[{}, -] differs on representatives of class {}",
                        l.names()[v],
                        lz.quotient.names()[a]
                    )));
                }
            }
            entries.push((v, a, image));
        }
    }
    let module = RightModule::from_entries(l.names().to_vec(), lz.quotient.dim(), entries)?;
    LmLieAlgebra::new(lz.quotient, module, lz.projection)
}

/// `(M -> g) ↦ M` with `[x, y] = [x, delta y]`.
pub fn leibniz_from_lm(a: &LmLieAlgebra) -> Algebra {
    let m = a.module.dim();
    let mut entries = Vec::new();
    for x in 0..m {
        for y in 0..m {
            let v = a.module.act(&Vector::basis(x), a.delta.column(y));
            if !v.is_zero() {
                entries.push((x, y, v));
            }
        }
    }
    let out = Algebra::from_entries(a.module.names().to_vec(), entries)
        .expect("module action stays in range");
    debug_assert!(check_leibniz(&out).passed() || !a.componentwise_report().passed());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, vector};
    use crate::scalar::int;

    #[test]
    fn square_example_lm() {
        let a = lm_from_leibniz(&catalog::leibniz_square()).unwrap();
        assert_eq!(a.g().dim(), 1);
        assert!(a.g().is_abelian());
        assert_eq!(a.module().dim(), 2);
        // [b, t] = a, [a, t] = 0
        assert_eq!(a.module().act_basis(1, 0), &Vector::basis(0));
        assert!(a.module().act_basis(0, 0).is_zero());
        assert_eq!(a.delta().to_dense_rows(), vec![vec![int(0), int(1)]]);
        assert!(check_lm_jacobi(&a).passed());
    }

    #[test]
    fn lie_input_gives_identity() {
        let g = catalog::heisenberg();
        let a = lm_from_leibniz(&g).unwrap();
        assert!(a.is_identity_map());
        assert_eq!(a, LmLieAlgebra::identity(&g).unwrap());
        let ab = lm_from_leibniz(&catalog::abelian(2)).unwrap();
        assert!(ab.is_identity_map());
        assert!(ab.module().entries().next().is_none());
    }

    #[test]
    fn roundtrip_on_leibniz_corpus() {
        for (name, l) in catalog::leibniz_corpus()
            .into_iter()
            .chain(catalog::lie_corpus())
        {
            let a = lm_from_leibniz(&l).unwrap();
            assert_eq!(leibniz_from_lm(&a), l, "{name}");
        }
    }

    #[test]
    fn trivial_examples_to_leibniz() {
        let over = LmLieAlgebra::over_lie(&catalog::sl2()).unwrap();
        assert_eq!(leibniz_from_lm(&over).dim(), 0);
        let vs = LmLieAlgebra::over_vector_space(["u", "w"]);
        let l = leibniz_from_lm(&vs);
        assert_eq!(l.dim(), 2);
        assert!(l.is_abelian());
    }

    #[test]
    fn heisenberg_identity_passes_jacobi() {
        assert!(check_lm_jacobi(&catalog::heisenberg_adjoint()).passed());
    }

    #[test]
    fn broken_delta_is_detected() {
        let g = catalog::heisenberg();
        let mut delta = LinearMap::identity(3);
        delta.set_entry(0, 2, int(1)); // z ↦ z + x
        let a =
            LmLieAlgebra::from_parts_unchecked(g.clone(), RightModule::adjoint(&g), delta.clone())
                .unwrap();
        let report = check_lm_jacobi(&a);
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.axiom == "morphism"));
        assert!(!a.componentwise_report().passed());
        assert!(matches!(
            LmLieAlgebra::new(g.clone(), RightModule::adjoint(&g), delta),
            Err(Error::InvalidLmAlgebra(_))
        ));
    }

    #[test]
    fn categorical_and_componentwise_agree() {
        for (name, a) in catalog::lm_corpus() {
            assert!(check_lm_jacobi(&a).passed(), "{name}");
            assert!(a.componentwise_report().passed(), "{name}");
        }
        // a module over a non-Lie algebra: both must fail
        let l = catalog::leibniz_square();
        let bad = LmLieAlgebra::from_parts_unchecked(
            l.clone(),
            RightModule::trivial(["m"], 2),
            LinearMap::zero(2, 1),
        )
        .unwrap();
        assert!(!check_lm_jacobi(&bad).passed());
        assert!(!bad.componentwise_report().passed());
        // a broken module action over sl2
        let broken = RightModule::from_entries(
            ["p"],
            3,
            [(0, 2, vector(&[(0, 1)])), (0, 0, vector(&[(0, 1)]))],
        )
        .unwrap();
        let bad = LmLieAlgebra::from_parts_unchecked(catalog::sl2(), broken, LinearMap::zero(3, 1))
            .unwrap();
        assert_eq!(
            check_lm_jacobi(&bad).passed(),
            bad.componentwise_report().passed()
        );
        assert!(!check_lm_jacobi(&bad).passed());
    }
}
