// The two identifications of the enveloping bimodule with S(g) ⊗ M, and
// which integration claims each one satisfies.

use coquecigrue::{catalog, integrate_lm, verify_lm_integration, Claim, Trivialization};

pub fn run_example() -> coquecigrue::Result<()> {
    let corpus = catalog::lm_corpus();
    print!("{:<28}", "");
    for claim in Claim::ALL {
        print!("{:>20}", claim.name());
    }
    println!();
    for (name, a) in &corpus {
        for triv in Trivialization::ALL {
            let group = integrate_lm(a, 3, triv)?;
            let report = verify_lm_integration(&group, 3)?;
            print!("{:<28}", format!("{name} [{triv}]"));
            for claim in Claim::ALL {
                let c = report.claim(claim);
                let mark = if c.asserted { "*" } else { "" };
                print!("{:>20}", format!("{:?}{mark}", c.status));
            }
            println!();
            assert!(report.passed(), "{name} [{triv}]");
        }
    }
    println!("(* asserted for that trivialization)");
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
