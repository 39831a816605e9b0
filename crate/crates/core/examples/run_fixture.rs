// Loading a presentation from a TOML file and running a command on it.

use coquecigrue::io::{parse_input, run_command, Command, Options, TrivChoice};

pub fn run_example() -> coquecigrue::Result<()> {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/heisenberg_adjoint.toml"
    );
    let doc = parse_input(path)?;
    let opts = Options {
        order: 3,
        triv: TrivChoice::Both,
        ..Options::default()
    };
    let report = run_command(Command::Integrate, &doc, &opts);
    print!("{}", report.to_text());
    assert_eq!(report.exit_code(), 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> coquecigrue::Result<()> {
    run_example()
}
