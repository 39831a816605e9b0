//! Small named algebras used throughout the examples and tests.

use crate::algebra::Algebra;
use crate::linear::{LinearMap, Vector};
use crate::lm::LmLieAlgebra;
use crate::right_module::RightModule;
use crate::scalar::int;

/// Sparse vector from `(index, integer coefficient)` pairs.
pub fn vector(terms: &[(usize, i64)]) -> Vector {
    terms.iter().map(|&(i, c)| (i, int(c))).collect()
}

/// `(i, j, [e_i, e_j])` with the bracket as `(index, coefficient)` pairs.
type Table<'a> = [(usize, usize, &'a [(usize, i64)])];

fn build(names: &[&str], entries: &Table<'_>) -> Algebra {
    Algebra::from_entries(
        names.iter().copied(),
        entries.iter().map(|&(i, j, v)| (i, j, vector(v))),
    )
    .expect("catalog entries are in range")
}

pub fn abelian(n: usize) -> Algebra {
    Algebra::abelian((1..=n).map(|i| format!("e{i}")))
}

/// Heisenberg algebra: `[x,y] = z`, `z` central.
pub fn heisenberg() -> Algebra {
    build(&["x", "y", "z"], &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])])
}

/// `sl2` in the basis `e, f, h`.
pub fn sl2() -> Algebra {
    build(
        &["e", "f", "h"],
        &[
            (0, 1, &[(2, 1)]),
            (1, 0, &[(2, -1)]),
            (2, 0, &[(0, 2)]),
            (0, 2, &[(0, -2)]),
            (2, 1, &[(1, -2)]),
            (1, 2, &[(1, 2)]),
        ],
    )
}

/// The non-abelian two-dimensional Lie algebra `[x,y] = y`.
pub fn solvable2() -> Algebra {
    build(&["x", "y"], &[(0, 1, &[(1, 1)]), (1, 0, &[(1, -1)])])
}

/// Two-dimensional Leibniz algebra with the single bracket `[b,b] = a`.
pub fn leibniz_square() -> Algebra {
    build(&["a", "b"], &[(1, 1, &[(0, 1)])])
}

/// Central extension of [`solvable2`] by `a` with `[x,x] = a`.
pub fn leibniz_central3() -> Algebra {
    build(
        &["x", "y", "a"],
        &[(0, 1, &[(1, 1)]), (1, 0, &[(1, -1)]), (0, 0, &[(2, 1)])],
    )
}

/// `c` acting on `span{a, b}` by a Jordan block, with `[c, -] = 0`.
pub fn leibniz_jordan3() -> Algebra {
    build(
        &["a", "b", "c"],
        &[(0, 2, &[(0, 1)]), (1, 2, &[(0, 1), (1, 1)])],
    )
}

/// The defining representation of [`sl2`], as a right module
/// `[v, x] = -x.v`.
pub fn sl2_standard_module() -> RightModule {
    RightModule::from_entries(
        ["p", "q"],
        3,
        [
            (1, 0, vector(&[(0, -1)])),
            (0, 1, vector(&[(1, -1)])),
            (0, 2, vector(&[(0, -1)])),
            (1, 2, vector(&[(1, 1)])),
        ],
    )
    .expect("catalog entries are in range")
}

/// `(V -> sl2)` with `V` the defining representation and zero structure map.
pub fn sl2_standard_lm() -> LmLieAlgebra {
    LmLieAlgebra::new(sl2(), sl2_standard_module(), LinearMap::zero(3, 2))
        .expect("valid Lie algebra in LM")
}

pub fn heisenberg_adjoint() -> LmLieAlgebra {
    LmLieAlgebra::identity(&heisenberg()).expect("Heisenberg is Lie")
}

pub fn lie_corpus() -> Vec<(&'static str, Algebra)> {
    vec![
        ("abelian2", abelian(2)),
        ("heisenberg", heisenberg()),
        ("sl2", sl2()),
        ("solvable2", solvable2()),
    ]
}

pub fn leibniz_corpus() -> Vec<(&'static str, Algebra)> {
    vec![
        ("leibniz_square", leibniz_square()),
        ("leibniz_central3", leibniz_central3()),
        ("leibniz_jordan3", leibniz_jordan3()),
    ]
}

/// Every Lie algebra in LM the test suites sweep over.
pub fn lm_corpus() -> Vec<(String, LmLieAlgebra)> {
    let mut out = Vec::new();
    for (name, g) in lie_corpus() {
        out.push((
            format!("{name}-adjoint"),
            LmLieAlgebra::identity(&g).expect("Lie"),
        ));
    }
    for (name, l) in leibniz_corpus() {
        out.push((
            name.to_string(),
            crate::lm::lm_from_leibniz(&l).expect("Leibniz"),
        ));
    }
    out.push(("sl2-standard".to_string(), sl2_standard_lm()));
    out.push((
        "heisenberg-over-zero".to_string(),
        LmLieAlgebra::over_lie(&heisenberg()).expect("Lie"),
    ));
    out.push((
        "vector-space2".to_string(),
        LmLieAlgebra::over_vector_space(["u", "w"]),
    ));
    out
}
