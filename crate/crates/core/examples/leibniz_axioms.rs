// Axiom checks on bracket tables, with witnesses on failure.

use coquecigrue::{catalog, check_leibniz, check_lie, Algebra, Vector};

pub fn run_example() -> coquecigrue::Result<()> {
    // [b, b] = a satisfies the Leibniz identity but is not antisymmetric
    let square = catalog::leibniz_square();
    println!("[b,b]=a   leibniz: {}", check_leibniz(&square).passed());
    let lie = check_lie(&square);
    if let Some(v) = lie.first_violation() {
        println!("          lie:     fails {} at {:?}", v.axiom, v.witness);
    }

    // [a, b] = a, [b, a] = b is neither
    let broken = Algebra::from_entries(
        ["a", "b"],
        [(0, 1, Vector::basis(0)), (1, 0, Vector::basis(1))],
    )?;
    for v in &check_leibniz(&broken).violations {
        println!("broken    {} at {:?}", v.axiom, v.witness);
    }

    for (name, g) in catalog::lie_corpus() {
        assert!(check_lie(&g).passed() && check_leibniz(&g).passed());
        println!("{name:<9} lie and leibniz");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
