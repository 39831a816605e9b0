//! Finite-dimensional algebras given by structure constants, the Leibniz and
//! Lie axiom checks, and the universal Lie quotient of a Leibniz algebra.

use num_traits::One;

use crate::error::{Error, Result};
use crate::linear::{LinComb, LinearMap, Span, Vector};
use crate::scalar::Q;

/// Keys that flatten to index lists, so violations in different spaces
/// share one representation.
pub trait FlatKey {
    fn flat(&self) -> Vec<usize>;
}

impl FlatKey for usize {
    fn flat(&self) -> Vec<usize> {
        vec![*self]
    }
}

impl FlatKey for Vec<usize> {
    fn flat(&self) -> Vec<usize> {
        self.clone()
    }
}

/// A linear combination keyed by flattened index lists.
pub type FlatComb = LinComb<Vec<usize>>;

pub fn flatten<K: FlatKey + Ord + Clone>(v: &LinComb<K>) -> FlatComb {
    v.map_keys(FlatKey::flat)
}

/// One failed instance of an identity, evaluated on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    /// Basis indices (or exponent vectors, for series identities) the
    /// identity was evaluated on.
    pub witness: Vec<usize>,
    pub lhs: FlatComb,
    pub rhs: FlatComb,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn check<K: FlatKey + Ord + Clone>(
        &mut self,
        axiom: &str,
        witness: &[usize],
        lhs: LinComb<K>,
        rhs: LinComb<K>,
    ) {
        if lhs != rhs {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                witness: witness.to_vec(),
                lhs: flatten(&lhs),
                rhs: flatten(&rhs),
            });
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// A bilinear product on `Q^n` given by its values on basis pairs:
/// `[e_i, e_j] = bracket(i, j)`. Nothing is assumed about the product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    names: Vec<String>,
    table: Vec<Vec<Vector>>,
}

impl Algebra {
    /// The abelian algebra on the given basis labels.
    pub fn abelian<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        Self {
            names,
            table: vec![vec![Vector::zero(); n]; n],
        }
    }

    /// Builds an algebra from sparse bracket entries `(i, j, [e_i, e_j])`.
    /// Pairs that are not listed bracket to zero; repeated pairs add up.
    pub fn from_entries<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        entries: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let mut alg = Self::abelian(names);
        for (i, j, v) in entries {
            alg.add_bracket(i, j, &v)?;
        }
        Ok(alg)
    }

    fn add_bracket(&mut self, i: usize, j: usize, v: &Vector) -> Result<()> {
        let n = self.dim();
        for index in [i, j].into_iter().chain(v.max_index()) {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, dim: n });
            }
        }
        self.table[i][j].add_scaled(v, &Q::one());
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in x {
            for (j, b) in y {
                out.add_scaled(&self.table[*i][*j], &(a * b));
            }
        }
        out
    }

    /// `[e_i, y]` for a general `y`.
    pub fn bracket_left_basis(&self, i: usize, y: &Vector) -> Vector {
        y.apply(|j| self.table[i][*j].clone())
    }

    /// `[x, e_j]` for a general `x`.
    pub fn bracket_right_basis(&self, x: &Vector, j: usize) -> Vector {
        x.apply(|i| self.table[*i][j].clone())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().all(Vector::is_zero)
    }

    /// Non-zero table entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.table.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(j, v)| (i, j, v))
        })
    }
}

/// Checks `[[x,y],z] = [[x,z],y] + [x,[y,z]]` on all basis triples.
pub fn check_leibniz(alg: &Algebra) -> AxiomReport {
    let n = alg.dim();
    let mut report = AxiomReport::default();
    for i in 0..n {
        for j in 0..n {
            let xy = alg.bracket_basis(i, j);
            for k in 0..n {
                let lhs = alg.bracket_right_basis(xy, k);
                let rhs = &alg.bracket_right_basis(alg.bracket_basis(i, k), j)
                    + &alg.bracket_left_basis(i, alg.bracket_basis(j, k));
                report.check("leibniz", &[i, j, k], lhs, rhs);
            }
        }
    }
    report
}

/// Checks antisymmetry (including `[e_i, e_i] = 0`) and the Jacobi identity
/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` on basis elements.
pub fn check_lie(alg: &Algebra) -> AxiomReport {
    let n = alg.dim();
    let mut report = AxiomReport::default();
    for i in 0..n {
        for j in i..n {
            report.check(
                "antisymmetry",
                &[i, j],
                alg.bracket_basis(i, j).clone(),
                -alg.bracket_basis(j, i),
            );
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut cyclic = alg.bracket_left_basis(i, alg.bracket_basis(j, k));
                cyclic = &cyclic + &alg.bracket_left_basis(j, alg.bracket_basis(k, i));
                cyclic = &cyclic + &alg.bracket_left_basis(k, alg.bracket_basis(i, j));
                report.check("jacobi", &[i, j, k], cyclic, Vector::zero());
            }
        }
    }
    report
}

/// The universal Lie quotient `L -> L / I` of a Leibniz algebra.
#[derive(Clone, Debug)]
pub struct Liezation {
    pub quotient: Algebra,
    /// `dim(quotient) x dim(L)` matrix of the quotient map.
    pub projection: LinearMap,
    /// The two-sided ideal generated by the symmetrized brackets.
    pub ideal: Span,
    /// For each quotient basis element, the index of the basis element of `L`
    /// it is the class of.
    pub representatives: Vec<usize>,
}

impl Liezation {
    /// The class of `v` in the quotient, in quotient coordinates.
    pub fn project(&self, v: &Vector) -> Vector {
        self.projection.apply(v)
    }
}

/// Quotient of a Leibniz algebra by the smallest two-sided ideal containing
/// every `[e_i, e_j] + [e_j, e_i]`.
///
/// The ideal is kept in reduced echelon form; the quotient basis consists of
/// the classes of the non-pivot basis elements, in input order.
pub fn liezation(alg: &Algebra) -> Result<Liezation> {
    if let Some(v) = check_leibniz(alg).first_violation() {
        return Err(Error::NotLeibniz(format!(
            "identity fails on basis triple {:?}",
            v.witness
        )));
    }
    let n = alg.dim();
    let mut ideal = Span::new();
    for i in 0..n {
        for j in i..n {
            ideal.insert(alg.bracket_basis(i, j) + alg.bracket_basis(j, i));
        }
    }
    loop {
        let rows: Vec<Vector> = ideal.basis().map(|(_, r)| r.clone()).collect();
        let mut grew = false;
        for r in &rows {
            for k in 0..n {
                grew |= ideal.insert(alg.bracket_right_basis(r, k));
                grew |= ideal.insert(alg.bracket_left_basis(k, r));
            }
        }
        if !grew {
            break;
        }
    }

    let representatives: Vec<usize> = (0..n).filter(|i| !ideal.is_pivot(*i)).collect();
    let mut position = vec![usize::MAX; n];
    for (q, &i) in representatives.iter().enumerate() {
        position[i] = q;
    }
    let reindex = |v: &Vector| v.map_keys(|i| position[*i]);
    let projection = LinearMap::from_columns(
        representatives.len(),
        (0..n)
            .map(|k| reindex(&ideal.reduce(&Vector::basis(k))))
            .collect(),
    );
    let names: Vec<String> = representatives
        .iter()
        .map(|&i| alg.names()[i].clone())
        .collect();
    let mut entries = Vec::new();
    for (a, &i) in representatives.iter().enumerate() {
        for (b, &j) in representatives.iter().enumerate() {
            let v = projection.apply(alg.bracket_basis(i, j));
            if !v.is_zero() {
                entries.push((a, b, v));
            }
        }
    }
    let quotient = Algebra::from_entries(names, entries)?;
    Ok(Liezation {
        quotient,
        projection,
        ideal,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::int;

    #[test]
    fn abelian_passes_both() {
        let a = catalog::abelian(3);
        assert!(check_leibniz(&a).passed());
        assert!(check_lie(&a).passed());
    }

    #[test]
    fn square_example_is_leibniz_not_lie() {
        let a = catalog::leibniz_square();
        assert!(check_leibniz(&a).passed());
        let lie = check_lie(&a);
        assert!(!lie.passed());
        assert_eq!(lie.violations[0].axiom, "antisymmetry");
        assert_eq!(lie.violations[0].witness, vec![1, 1]);
    }

    #[test]
    fn non_leibniz_witness() {
        // [a,b] = a, [b,a] = b
        let alg = Algebra::from_entries(
            ["a", "b"],
            [(0, 1, Vector::basis(0)), (1, 0, Vector::basis(1))],
        )
        .unwrap();
        let report = check_leibniz(&alg);
        assert!(!report.passed());
        let v = report
            .violations
            .iter()
            .find(|v| v.witness == [0, 1, 0])
            .expect("triple (a,b,a) must be a witness");
        // [[a,b],a] = [a,a] = 0 while [[a,a],b] + [a,[b,a]] = [a,b] = a
        assert_eq!(v.lhs, FlatComb::zero());
        assert_eq!(v.rhs, flatten(&Vector::basis(0)));
    }

    #[test]
    fn heisenberg_is_lie() {
        assert!(check_lie(&catalog::heisenberg()).passed());
        assert!(check_lie(&catalog::sl2()).passed());
    }

    #[test]
    fn liezation_of_lie_is_identity() {
        let g = catalog::sl2();
        let l = liezation(&g).unwrap();
        assert_eq!(l.quotient, g);
        assert_eq!(l.projection, LinearMap::identity(3));
        assert_eq!(l.ideal.dim(), 0);
    }

    #[test]
    fn liezation_of_square_example() {
        let l = liezation(&catalog::leibniz_square()).unwrap();
        assert_eq!(l.quotient.dim(), 1);
        assert!(l.quotient.is_abelian());
        assert_eq!(l.representatives, vec![1]);
        assert_eq!(l.projection.to_dense_rows(), vec![vec![int(0), int(1)]]);
    }

    #[test]
    fn liezation_rejects_non_leibniz() {
        let alg = Algebra::from_entries(
            ["a", "b"],
            [(0, 1, Vector::basis(0)), (1, 0, Vector::basis(1))],
        )
        .unwrap();
        assert!(matches!(liezation(&alg), Err(Error::NotLeibniz(_))));
    }

    #[test]
    fn out_of_range_entries_rejected() {
        let err = Algebra::from_entries(["a"], [(0, 1, Vector::zero())]).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 1, dim: 1 });
    }
}
