mod common;

use std::collections::BTreeMap;

use common::*;
use coquecigrue::pbw::{counit, monomial_coproduct, Monomial, TensorSquare, UeaElement};
use coquecigrue::scalar::{int, Q};
use coquecigrue::{catalog, Algebra, UniversalEnvelope, Vector};
use num_traits::One;
use proptest::prelude::*;

fn word_strategy() -> impl Strategy<Value = (Algebra, Vec<usize>)> {
    arb_lie().prop_flat_map(|g| {
        let n = g.dim();
        proptest::collection::vec(0..n, 0..=5).prop_map(move |w| (g.clone(), w))
    })
}

fn lie_with_elements(
    degree: usize,
    terms: usize,
    count: usize,
) -> impl Strategy<Value = (Algebra, Vec<UeaElement>)> {
    arb_lie().prop_flat_map(move |g| {
        let n = g.dim();
        proptest::collection::vec(arb_uea(n, degree, terms), count)
            .prop_map(move |es| (g.clone(), es))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalization_is_strategy_independent((g, w) in word_strategy()) {
        let n = g.dim();
        let ue = UniversalEnvelope::new(&g).unwrap();
        let left = rewrite(&g, Words::unit(w.clone()), Pick::Leftmost);
        let right = rewrite(&g, Words::unit(w.clone()), Pick::Rightmost);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(sorted_to_uea(n, &left), ue.normalize(&w));
    }

    #[test]
    fn multiplication_is_associative_and_unital((g, es) in lie_with_elements(4, 2, 3)) {
        let ue = UniversalEnvelope::new(&g).unwrap();
        let (a, b, c) = (&es[0], &es[1], &es[2]);
        prop_assert_eq!(ue.mul(&ue.mul(a, b), c), ue.mul(a, &ue.mul(b, c)));
        prop_assert_eq!(&ue.mul(&ue.one(), a), a);
        prop_assert_eq!(&ue.mul(a, &ue.one()), a);
    }

    #[test]
    fn bialgebra_law((g, es) in lie_with_elements(3, 3, 2)) {
        let ue = UniversalEnvelope::new(&g).unwrap();
        let (a, b) = (&es[0], &es[1]);
        let lhs = ue.coproduct(&ue.mul(a, b));
        let rhs = tensor_mul(&ue, &ue.coproduct(a), &ue.coproduct(b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_is_multiplicative((g, es) in lie_with_elements(4, 3, 2)) {
        let ue = UniversalEnvelope::new(&g).unwrap();
        let (a, b) = (&es[0], &es[1]);
        prop_assert_eq!(counit(&ue.mul(a, b)), counit(a) * counit(b));
    }

    #[test]
    fn symmetrization_is_a_coalgebra_morphism((g, m) in arb_lie().prop_flat_map(|g| {
        let monomials = Monomial::up_to_degree(g.dim(), 3);
        (Just(g), proptest::sample::select(monomials))
    })) {
        let ue = UniversalEnvelope::new(&g).unwrap();
        // σ(m) averaged over orderings, Δ computed on words
        let orderings = all_orderings(&m.letters());
        let weight = Q::one() / int(orderings.len() as i64);
        let mut lhs = TensorSquare::zero();
        for w in &orderings {
            lhs.add_scaled(&word_coproduct(&ue, w), &weight);
        }
        let mut rhs = TensorSquare::zero();
        for ((a, b), c) in &monomial_coproduct(&m) {
            for (x, p) in &ue.symmetrize_monomial(a) {
                for (y, q) in &ue.symmetrize_monomial(b) {
                    rhs.add_term((x.clone(), y.clone()), c * p * q);
                }
            }
        }
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(ue.coproduct(&ue.symmetrize_monomial(&m)), rhs);
    }

    #[test]
    fn symmetrization_roundtrips((g, es) in lie_with_elements(4, 4, 1)) {
        let ue = UniversalEnvelope::new(&g).unwrap();
        let u = &es[0];
        prop_assert_eq!(&ue.symmetrize(&ue.desymmetrize(u)), u);
        prop_assert_eq!(&ue.desymmetrize(&ue.symmetrize(u)), u);
    }

    #[test]
    fn primitive_projection((g, raw) in arb_lie().prop_flat_map(|g| {
        let n = g.dim();
        (Just(g), proptest::collection::vec(-3i64..=3, 2 * n))
    })) {
        let n = g.dim();
        let ue = UniversalEnvelope::new(&g).unwrap();
        let x: Vector = (0..n).map(|i| (i, int(raw[i]))).collect();
        let y: Vector = (0..n).map(|i| (i, int(raw[n + i]))).collect();
        let (ux, uy) = (ue.embed(&x), ue.embed(&y));
        prop_assert_eq!(ue.prim_proj(&ux), x.clone());
        let commutator = &ue.mul(&ux, &uy) - &ue.mul(&uy, &ux);
        prop_assert_eq!(ue.prim_proj(&commutator), g.bracket(&x, &y));
    }
}

#[test]
fn heisenberg_words() {
    let g = catalog::heisenberg();
    let ue = UniversalEnvelope::new(&g).unwrap();
    let mono = |e: &[u32]| Monomial::from_exponents(e.to_vec());
    let expected: UeaElement = [(mono(&[1, 1, 0]), int(1)), (mono(&[0, 0, 1]), int(-1))]
        .into_iter()
        .collect();
    assert_eq!(ue.normalize(&[1, 0]), expected);
    let left = rewrite(&g, Words::unit(vec![1, 1, 0, 0]), Pick::Leftmost);
    assert_eq!(sorted_to_uea(3, &left), ue.normalize(&[1, 1, 0, 0]));
}

#[test]
fn counts_of_coproduct_terms() {
    // Δ(x^a) has Π (a_i + 1) terms
    let mut seen = BTreeMap::new();
    for m in Monomial::up_to_degree(2, 4) {
        let terms = monomial_coproduct(&m).len();
        let expected: usize = m.exponents().iter().map(|&e| e as usize + 1).product();
        seen.insert(m.clone(), terms);
        assert_eq!(terms, expected);
    }
    assert_eq!(seen.len(), 15);
}
