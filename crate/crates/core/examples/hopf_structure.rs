// Coproduct, counit, symmetrization and the primitive projection.

use coquecigrue::pbw::{counit, Monomial};
use coquecigrue::scalar::int;
use coquecigrue::{catalog, show, UniversalEnvelope};

pub fn run_example() -> coquecigrue::Result<()> {
    let g = catalog::heisenberg();
    let names = g.names();
    let ue = UniversalEnvelope::new(&g)?;
    let xy = Monomial::from_exponents(vec![1, 1, 0]);

    let sigma = ue.symmetrize_monomial(&xy);
    println!("σ(x∨y)      = {}", show::uea(&sigma, names));
    let prod = ue.normalize(&[0, 1]);
    println!(
        "σ⁻¹(xy)     = {}",
        show::uea(&ue.desymmetrize(&prod), names)
    );
    println!(
        "prim(xy)    = {}",
        show::vector(&ue.prim_proj(&prod), names)
    );
    println!(
        "ε(xy + 3)   = {}",
        counit(&(&prod + &ue.one().scaled(&int(3))))
    );

    for ((a, b), c) in ue.coproduct(&prod).iter() {
        println!(
            "Δ(xy) ∋ {c} · {} ⊗ {}",
            show::monomial(a, names),
            show::monomial(b, names)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
