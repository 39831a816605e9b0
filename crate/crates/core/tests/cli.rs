mod common;

use std::path::PathBuf;
use std::process::{Command as Process, Output};

use common::*;
use coquecigrue::io::{
    parse_input, parse_str, run_command, Command, InputDocument, Kind, Options, TrivChoice,
};
use coquecigrue::scalar::Q;
use coquecigrue::{Algebra, Vector};
use proptest::prelude::*;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_coquecigrue"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fractional_table() -> impl Strategy<Value = Algebra> {
    (1usize..=3).prop_flat_map(|n| {
        proptest::collection::vec((-4i64..=4, 1i64..=3), n * n * n).prop_map(move |raw| {
            let mut entries = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let v: Vector = (0..n)
                        .map(|k| {
                            let (p, q) = raw[(i * n + j) * n + k];
                            (k, Q::new(p.into(), q.into()))
                        })
                        .collect();
                    entries.push((i, j, v));
                }
            }
            let names: Vec<String> = (0..n).map(|i| format!("b{i}")).collect();
            Algebra::from_entries(names, entries).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_roundtrip(g in fractional_table(), leibniz in any::<bool>()) {
        let kind = if leibniz { Kind::Leibniz } else { Kind::Lie };
        let doc = InputDocument::from_algebra("random", kind, &g);
        let parsed = parse_str(&doc.to_toml()).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(parsed.to_toml(), doc.to_toml());
        prop_assert_eq!(parsed.algebra().unwrap(), g);
    }

    #[test]
    fn lm_documents_roundtrip((name, a) in arb_lm()) {
        let doc = InputDocument::from_lm(&name, &a);
        let parsed = parse_str(&doc.to_toml()).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(parsed.lm_algebra().unwrap(), a);
    }
}

#[test]
fn empty_brackets_give_an_abelian_algebra() {
    let doc = parse_str("name = \"a\"\nkind = \"lie\"\nbasis = [\"p\", \"q\"]\n").unwrap();
    assert_eq!(
        doc.algebra().unwrap(),
        Algebra::from_entries(["p", "q"], []).unwrap()
    );
}

#[test]
fn reports_are_deterministic() {
    let doc = parse_input(fixture("heisenberg_adjoint.toml")).unwrap();
    let opts = Options {
        order: 4,
        triv: TrivChoice::Both,
        ..Options::default()
    };
    let first = run_command(Command::Integrate, &doc, &opts).to_json();
    for _ in 0..3 {
        assert_eq!(
            run_command(Command::Integrate, &doc, &opts).to_json(),
            first
        );
    }
}

#[test]
fn binary_output_is_byte_identical() {
    let path = fixture("leibniz_square.toml");
    let args = [
        "integrate",
        path.to_str().unwrap(),
        "--order",
        "4",
        "--triv",
        "both",
        "--json",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "toml") {
            for cmd in ["check", "integrate", "oracle"] {
                let out = run(&[cmd, path.to_str().unwrap(), "--order", "3"]);
                assert_eq!(out.status.code(), Some(0), "{cmd} {}", path.display());
            }
        }
    }

    let bad = run(&[
        "check",
        fixture("invalid/not_leibniz.toml").to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    let leibniz = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "leibniz-identity")
        .unwrap();
    assert_eq!(leibniz["status"], "fail");
    assert!(!leibniz["witnesses"].as_array().unwrap().is_empty());

    let unknown = run(&[
        "check",
        fixture("invalid/unknown_label.toml").to_str().unwrap(),
    ]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("\"w\""));

    assert_eq!(
        run(&["check", "/nonexistent/algebra.toml"]).status.code(),
        Some(2)
    );
}

#[test]
fn documented_invocations() {
    let out = run(&["check", fixture("leibniz_square.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "integrate",
        fixture("heisenberg_adjoint.toml").to_str().unwrap(),
        "--order",
        "3",
        "--triv",
        "left",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["payload"]["f"]["x;y"]["z"], "1/2");
    assert_eq!(report["payload"]["g2 [left]"]["v=x;y"]["z"], "1");

    let out = run(&[
        "oracle",
        fixture("sl2.toml").to_str().unwrap(),
        "--order",
        "4",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["payload"]
        .get("difference")
        .is_none_or(|d| d.as_object().unwrap().is_empty()));

    let out = run(&[
        "envelope",
        fixture("leibniz_jordan3.toml").to_str().unwrap(),
        "--degree",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("result   pass\n"));
}
