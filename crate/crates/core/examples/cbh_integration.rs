// The formal group law of a Lie algebra, computed twice.

use coquecigrue::{catalog, cbh_dynkin, integrate_lie, show, verify_formal_group};

pub fn run_example() -> coquecigrue::Result<()> {
    let g = catalog::sl2();
    let f = integrate_lie(&g, 3)?;
    let names = g.names();
    for ((a, b), v) in f.coeffs() {
        if a.degree() + b.degree() >= 2 {
            println!(
                "x^({}) y^({}) : {}",
                show::monomial(a, names),
                show::monomial(b, names),
                show::vector(v, names)
            );
        }
    }
    assert_eq!(f, cbh_dynkin(&g, 3)?);
    println!(
        "agrees with the Dynkin series; group law: {}",
        verify_formal_group(&f, 3)?.passed()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
