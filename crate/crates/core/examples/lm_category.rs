// Linear maps as objects: tensor products, powers, and the passage between
// Leibniz algebras and Lie algebras in LM.

use coquecigrue::lm::{interchange, lm_exterior_power, lm_symmetric_power, lm_tensor, LmObject};
use coquecigrue::scalar::int;
use coquecigrue::{catalog, check_lm_jacobi, leibniz_from_lm, lm_from_leibniz, LinearMap};

pub fn run_example() -> coquecigrue::Result<()> {
    let a = LmObject::new(LinearMap::from_dense_rows(&[vec![int(1), int(0)]]));
    let (t, _) = lm_tensor(&a, &a);
    println!(
        "(k² -> k) ⊗ (k² -> k): degree 1 dim {}, degree 0 dim {}",
        t.dim_v(),
        t.dim_w()
    );
    let (tau1, tau0) = interchange(&a);
    println!("interchange squares to the identity: {}", {
        let (one1, one0) = (tau1.compose(&tau1), tau0.compose(&tau0));
        one1 == LinearMap::identity(t.dim_v()) && one0 == LinearMap::identity(t.dim_w())
    });

    let b = LmObject::identity(3);
    for k in 1..=3 {
        let s = lm_symmetric_power(&b, k);
        let e = lm_exterior_power(&b, k);
        println!(
            "k={k}: S^k dims ({}, {})  Λ^k dims ({}, {})",
            s.object.dim_v(),
            s.object.dim_w(),
            e.object.dim_v(),
            e.object.dim_w()
        );
    }

    let square = catalog::leibniz_square();
    let lm = lm_from_leibniz(&square)?;
    println!(
        "[b,b]=a as (M -> g): dim M = {}, dim g = {}, jacobi holds: {}",
        lm.module().dim(),
        lm.g().dim(),
        check_lm_jacobi(&lm).passed()
    );
    assert_eq!(leibniz_from_lm(&lm), square);
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
