// The universal Lie quotient of a Leibniz algebra.

use coquecigrue::{catalog, check_lie, liezation, show, Vector};

pub fn run_example() -> coquecigrue::Result<()> {
    for (name, l) in catalog::leibniz_corpus() {
        let lz = liezation(&l)?;
        println!("{name}: dim {} -> dim {}", l.dim(), lz.quotient.dim());
        for i in 0..l.dim() {
            let image = lz.project(&Vector::basis(i));
            println!(
                "  {} ↦ {}",
                l.names()[i],
                show::vector(&image, lz.quotient.names())
            );
        }
        assert!(check_lie(&lz.quotient).passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
