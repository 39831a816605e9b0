// The enveloping bimodule of a Leibniz algebra and its two products.

use coquecigrue::{catalog, lm_from_leibniz, show, LmEnvelope, Trivialization};

pub fn run_example() -> coquecigrue::Result<()> {
    let square = catalog::leibniz_square();
    let a = lm_from_leibniz(&square)?;
    let env = LmEnvelope::new(&a)?;
    let (g, m) = (a.g().names(), a.module().names());

    for v in 0..a.module().dim() {
        for w in 0..a.module().dim() {
            let (x, y) = (env.generator(v), env.generator(w));
            let (left, right) = env.dialg_ops(&x, &y);
            println!(
                "1⊗{0} ⊣ 1⊗{1} = {2:<14} 1⊗{0} ⊢ 1⊗{1} = {3}",
                m[v],
                m[w],
                show::bimodule(&left, g, m),
                show::bimodule(&right, g, m)
            );
            // the primitive part of ⊣ is the original bracket
            let bracket = env.lm_prim_proj(&left, Trivialization::Left);
            assert_eq!(&bracket, square.bracket_basis(v, w));
        }
    }

    let report = env.check_dialgebra(3);
    println!("dialgebra axioms up to degree 3: {}", report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
