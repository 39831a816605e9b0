#![allow(dead_code)]

use coquecigrue::pbw::{Monomial, TensorSquare, UeaElement};
use coquecigrue::scalar::{int, Q};
use coquecigrue::{
    catalog, Algebra, BimoduleElement, LinComb, LmLieAlgebra, UniversalEnvelope, Vector,
};
use proptest::prelude::*;

/// Upper unitriangular integer matrix, as columns: `cols[j][i]` is entry `(i, j)`.
pub fn unitriangular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(-2i64..=2, n * n).prop_map(move |raw| {
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| match i.cmp(&j) {
                        std::cmp::Ordering::Less => raw[i * n + j],
                        std::cmp::Ordering::Equal => 1,
                        std::cmp::Ordering::Greater => 0,
                    })
                    .collect()
            })
            .collect()
    })
}

/// Coordinates of `v` in the basis given by the columns of an upper
/// unitriangular `p`, by back substitution.
fn solve_unitriangular(p: &[Vec<i64>], v: &Vector) -> Vector {
    let n = p.len();
    let mut rest = v.to_dense(n);
    let mut out = vec![Q::from_integer(0.into()); n];
    for j in (0..n).rev() {
        let c = rest[j].clone();
        for i in 0..=j {
            rest[i] -= &c * int(p[j][i]);
        }
        out[j] = c;
    }
    Vector::from_dense(&out)
}

/// The same algebra in the basis `e'_j = Σ_i p[j][i] e_i`.
pub fn change_basis(g: &Algebra, p: &[Vec<i64>]) -> Algebra {
    let n = g.dim();
    let new_basis: Vec<Vector> = p
        .iter()
        .map(|col| col.iter().enumerate().map(|(i, &c)| (i, int(c))).collect())
        .collect();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let b = g.bracket(&new_basis[i], &new_basis[j]);
            if !b.is_zero() {
                entries.push((i, j, solve_unitriangular(p, &b)));
            }
        }
    }
    Algebra::from_entries(g.names().to_vec(), entries).expect("same dimension")
}

fn pick<T: Clone + std::fmt::Debug + 'static>(items: Vec<T>) -> impl Strategy<Value = T> {
    let n = items.len();
    (0..n).prop_map(move |i| items[i].clone())
}

fn transformed(corpus: Vec<Algebra>) -> impl Strategy<Value = Algebra> {
    pick(corpus).prop_flat_map(|g| {
        let n = g.dim();
        unitriangular(n).prop_map(move |p| change_basis(&g, &p))
    })
}

/// Corpus Lie algebras in random bases.
pub fn arb_lie() -> impl Strategy<Value = Algebra> {
    transformed(catalog::lie_corpus().into_iter().map(|(_, g)| g).collect())
}

/// Corpus Leibniz algebras in random bases.
pub fn arb_leibniz() -> impl Strategy<Value = Algebra> {
    transformed(
        catalog::leibniz_corpus()
            .into_iter()
            .map(|(_, g)| g)
            .collect(),
    )
}

/// Arbitrary bracket tables with small entries; rarely Leibniz.
pub fn arb_table(max_dim: usize) -> impl Strategy<Value = Algebra> {
    (1..=max_dim).prop_flat_map(|n| {
        proptest::collection::vec(-1i64..=1, n * n * n).prop_map(move |raw| {
            let entries = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let v: Vector = (0..n).map(|k| (k, int(raw[(i * n + j) * n + k]))).collect();
                    (i, j, v)
                });
            let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            Algebra::from_entries(names, entries.collect::<Vec<_>>()).unwrap()
        })
    })
}

pub fn arb_lm() -> impl Strategy<Value = (String, LmLieAlgebra)> {
    pick(catalog::lm_corpus())
}

/// Up to `terms` monomials of degree `≤ max_degree` with small coefficients.
pub fn arb_uea(n: usize, max_degree: usize, terms: usize) -> impl Strategy<Value = UeaElement> {
    let monomials = Monomial::up_to_degree(n, max_degree);
    let k = monomials.len();
    proptest::collection::vec((0..k, -3i64..=3), 1..=terms).prop_map(move |picks| {
        picks
            .into_iter()
            .map(|(i, c)| (monomials[i].clone(), int(c)))
            .collect()
    })
}

pub fn arb_bimodule(
    n: usize,
    m: usize,
    max_degree: usize,
    terms: usize,
) -> impl Strategy<Value = BimoduleElement> {
    let keys: Vec<(Monomial, usize)> = Monomial::up_to_degree(n, max_degree)
        .into_iter()
        .flat_map(|mono| (0..m).map(move |v| (mono.clone(), v)))
        .collect();
    let k = keys.len().max(1);
    proptest::collection::vec((0..k, -3i64..=3), 1..=terms).prop_map(move |picks| {
        picks
            .into_iter()
            .filter(|(i, _)| *i < keys.len())
            .map(|(i, c)| (keys[i].clone(), int(c)))
            .collect()
    })
}

/// A Lie algebra in LM with random elements of its envelope.
pub fn lm_with<T: std::fmt::Debug + Clone>(
    f: impl Fn(&LmLieAlgebra) -> BoxedStrategy<T> + Clone + 'static,
) -> impl Strategy<Value = (String, LmLieAlgebra, T)> {
    arb_lm().prop_flat_map(move |(name, a)| {
        let s = f(&a);
        s.prop_map(move |t| (name.clone(), a.clone(), t))
    })
}

/// Non-commutative words, rewritten by hand.
pub type Words = LinComb<Vec<usize>>;

#[derive(Clone, Copy)]
pub enum Pick {
    Leftmost,
    Rightmost,
}

/// Resolves one inversion `x_k x_j` (k > j) at a time until every word is
/// sorted.
pub fn rewrite(g: &Algebra, start: Words, strategy: Pick) -> Words {
    let mut current = start;
    loop {
        let mut next = Words::zero();
        let mut changed = false;
        for (w, c) in &current {
            let inversions: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&i| w[i] > w[i + 1])
                .collect();
            let at = match strategy {
                Pick::Leftmost => inversions.first(),
                Pick::Rightmost => inversions.last(),
            };
            let Some(&i) = at else {
                next.add_term(w.clone(), c.clone());
                continue;
            };
            changed = true;
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            next.add_term(swapped, c.clone());
            for (l, d) in g.bracket_basis(w[i], w[i + 1]) {
                let mut shorter = w[..i].to_vec();
                shorter.push(*l);
                shorter.extend_from_slice(&w[i + 2..]);
                next.add_term(shorter, c * d);
            }
        }
        current = next;
        if !changed {
            return current;
        }
    }
}

pub fn sorted_to_uea(n: usize, w: &Words) -> UeaElement {
    w.map_keys(|word| Monomial::from_word(n, word))
}

/// `Δ` of a word, summing over which positions go to the left factor.
pub fn word_coproduct(ue: &UniversalEnvelope, word: &[usize]) -> TensorSquare {
    let k = word.len();
    let mut out = TensorSquare::zero();
    for mask in 0u32..(1 << k) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (i, &l) in word.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(l);
            } else {
                right.push(l);
            }
        }
        for (a, c) in &ue.normalize(&left) {
            for (b, d) in &ue.normalize(&right) {
                out.add_term((a.clone(), b.clone()), c * d);
            }
        }
    }
    out
}

/// All orderings of a multiset of letters, with repetition.
pub fn all_orderings(word: &[usize]) -> Vec<Vec<usize>> {
    if word.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..word.len() {
        let mut rest = word.to_vec();
        let l = rest.remove(i);
        for mut tail in all_orderings(&rest) {
            tail.insert(0, l);
            out.push(tail);
        }
    }
    out
}

/// Componentwise product in `U ⊗ U`.
pub fn tensor_mul(ue: &UniversalEnvelope, a: &TensorSquare, b: &TensorSquare) -> TensorSquare {
    let mut out = TensorSquare::zero();
    for ((a1, a2), c) in a {
        for ((b1, b2), d) in b {
            let left = ue.mul_monomials(a1, b1);
            let right = ue.mul_monomials(a2, b2);
            for (l, x) in &left {
                for (r, y) in &right {
                    out.add_term((l.clone(), r.clone()), c * d * x * y);
                }
            }
        }
    }
    out
}
