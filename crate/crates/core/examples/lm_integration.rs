// Integrating a Lie algebra in LM to a formal group in LM.

use coquecigrue::{catalog, integrate_lm, show, verify_lm_integration, Trivialization};

pub fn run_example() -> coquecigrue::Result<()> {
    let a = catalog::heisenberg_adjoint();
    let group = integrate_lm(&a, 3, Trivialization::Left)?;
    let (g, m) = (a.g().names(), a.module().names());
    for ((v, b), value) in group.g2.coeffs() {
        println!(
            "g2({}, y^({})) = {}",
            m[*v],
            show::monomial(b, g),
            show::vector(value, m)
        );
    }
    let report = verify_lm_integration(&group, 3)?;
    for c in &report.claims {
        println!(
            "{:<20} {:?}{}",
            c.claim.name(),
            c.status,
            if c.asserted { " (asserted)" } else { "" }
        );
    }
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
