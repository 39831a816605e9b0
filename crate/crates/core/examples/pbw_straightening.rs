// Products in the universal enveloping algebra, in the ordered PBW basis.

use coquecigrue::{catalog, show, UniversalEnvelope};

pub fn run_example() -> coquecigrue::Result<()> {
    let h = catalog::heisenberg();
    let ue = UniversalEnvelope::new(&h)?;
    let names = h.names();
    for word in [vec![1, 0], vec![1, 0, 0], vec![1, 1, 0, 0]] {
        let letters: Vec<&str> = word.iter().map(|&i| names[i].as_str()).collect();
        println!(
            "{:<8} = {}",
            letters.join(""),
            show::uea(&ue.normalize(&word), names)
        );
    }

    let g = catalog::sl2();
    let ue = UniversalEnvelope::new(&g)?;
    println!(
        "in sl2: hfe = {}",
        show::uea(&ue.normalize(&[2, 1, 0]), g.names())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
