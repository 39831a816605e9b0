//! Command dispatch.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use sha2::{Digest, Sha256};

use crate::algebra::{check_leibniz, check_lie, liezation, Algebra, AxiomReport};
use crate::envelope::{BimoduleElement, LmEnvelope, Trivialization};
use crate::error::Error;
use crate::formal_group::{
    cbh_dynkin, integrate_lie, integrate_lm, verify_formal_group, verify_lm_integration,
    ClaimStatus,
};
use crate::io::document::{InputDocument, Kind};
use crate::io::report::{CheckResult, InputSummary, Payload, RunReport};
use crate::linear::Vector;
use crate::lm::{check_lm_jacobi, leibniz_from_lm, LmLieAlgebra};
use crate::pbw::Monomial;
use crate::scalar::format_rational;
use crate::series::SeriesMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Liezation,
    Envelope,
    Integrate,
    Oracle,
}

impl Command {
    pub const ALL: [Command; 5] = [
        Command::Check,
        Command::Liezation,
        Command::Envelope,
        Command::Integrate,
        Command::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Liezation => "liezation",
            Command::Envelope => "envelope",
            Command::Integrate => "integrate",
            Command::Oracle => "oracle",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrivChoice {
    Left,
    Sym,
    Both,
}

impl TrivChoice {
    pub fn trivializations(self) -> &'static [Trivialization] {
        match self {
            TrivChoice::Left => &[Trivialization::Left],
            TrivChoice::Sym => &[Trivialization::Sym],
            TrivChoice::Both => &Trivialization::ALL,
        }
    }
}

impl fmt::Display for TrivChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrivChoice::Left => "left",
            TrivChoice::Sym => "sym",
            TrivChoice::Both => "both",
        })
    }
}

impl FromStr for TrivChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(TrivChoice::Left),
            "sym" => Ok(TrivChoice::Sym),
            "both" => Ok(TrivChoice::Both),
            _ => Err(format!("unknown trivialization {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub order: usize,
    pub degree: usize,
    pub triv: TrivChoice,
    /// Adds wall-clock timings, which makes reports differ between runs.
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            order: 4,
            degree: 3,
            triv: TrivChoice::Left,
            timings: false,
        }
    }
}

fn echo(cmd: Command, opts: &Options) -> String {
    match cmd {
        Command::Check | Command::Liezation => cmd.name().to_string(),
        Command::Envelope => format!("envelope --degree {}", opts.degree),
        Command::Integrate => format!("integrate --order {} --triv {}", opts.order, opts.triv),
        Command::Oracle => format!("oracle --order {}", opts.order),
    }
}

pub fn digest(doc: &InputDocument) -> String {
    hex::encode(Sha256::digest(doc.to_toml().as_bytes()))
}

/// Runs one command. Failed preconditions become failing report entries.
pub fn run_command(cmd: Command, doc: &InputDocument, opts: &Options) -> RunReport {
    let summary = InputSummary {
        name: doc.name.clone(),
        kind: doc.kind,
        sha256: digest(doc),
    };
    let mut report = RunReport::new(echo(cmd, opts), summary);
    let mut timer = Timer::new(opts.timings);
    match cmd {
        Command::Check => run_check(doc, &mut report, &mut timer),
        Command::Liezation => run_liezation(doc, &mut report),
        Command::Envelope => run_envelope(doc, opts, &mut report, &mut timer),
        Command::Integrate => run_integrate(doc, opts, &mut report, &mut timer),
        Command::Oracle => run_oracle(doc, opts, &mut report, &mut timer),
    }
    report.timings_ms = timer.finish();
    report
}

struct Timer {
    enabled: bool,
    last: Instant,
    entries: BTreeMap<String, f64>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Self {
            enabled,
            last: Instant::now(),
            entries: BTreeMap::new(),
        }
    }

    fn lap(&mut self, name: &str) {
        if self.enabled {
            let now = Instant::now();
            self.entries
                .insert(name.to_string(), (now - self.last).as_secs_f64() * 1e3);
            self.last = now;
        }
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.entries)
    }
}

fn precondition(report: &mut RunReport, name: &str, err: &Error) {
    report.push(CheckResult::failed(name, true, err.to_string()));
}

fn lm_of(doc: &InputDocument, report: &mut RunReport) -> Option<LmLieAlgebra> {
    match doc.lm_algebra() {
        Ok(a) => Some(a),
        Err(e) => {
            precondition(report, "lm-algebra", &e);
            None
        }
    }
}

fn run_check(doc: &InputDocument, report: &mut RunReport, timer: &mut Timer) {
    let g = match doc.algebra() {
        Ok(g) => g,
        Err(e) => return precondition(report, "algebra", &e),
    };
    match doc.kind {
        Kind::Leibniz => {
            let leibniz = check_leibniz(&g);
            let ok = leibniz.passed();
            report.push(CheckResult::from_report("leibniz-identity", true, &leibniz));
            report.push(
                CheckResult::from_report("lie-axioms", false, &check_lie(&g))
                    .with_note("informational: a Leibniz algebra need not be Lie"),
            );
            if ok {
                match crate::lm::lm_from_leibniz(&g) {
                    Ok(a) => report.push(CheckResult::from_report(
                        "lm-jacobi",
                        true,
                        &check_lm_jacobi(&a),
                    )),
                    Err(e) => precondition(report, "lm-jacobi", &e),
                }
            } else {
                report.push(CheckResult::failed(
                    "lm-jacobi",
                    true,
                    "skipped: not a Leibniz algebra",
                ));
            }
        }
        Kind::Lie => {
            report.push(CheckResult::from_report("lie-axioms", true, &check_lie(&g)));
            report.push(CheckResult::from_report(
                "leibniz-identity",
                true,
                &check_leibniz(&g),
            ));
        }
        Kind::Lm => {
            let a = match doc.lm_parts() {
                Ok(a) => a,
                Err(e) => return precondition(report, "lm-algebra", &e),
            };
            report.push(CheckResult::from_report(
                "lm-components",
                true,
                &a.componentwise_report(),
            ));
            report.push(CheckResult::from_report(
                "lm-jacobi",
                true,
                &check_lm_jacobi(&a),
            ));
            let l = leibniz_from_lm(&a);
            report.push(CheckResult::from_report(
                "induced-leibniz-identity",
                true,
                &check_leibniz(&l),
            ));
        }
    }
    timer.lap("check");
}

fn leibniz_of(doc: &InputDocument) -> crate::error::Result<Algebra> {
    match doc.kind {
        Kind::Leibniz | Kind::Lie => doc.algebra(),
        Kind::Lm => Ok(leibniz_from_lm(&doc.lm_algebra()?)),
    }
}

fn run_liezation(doc: &InputDocument, report: &mut RunReport) {
    let l = match leibniz_of(doc) {
        Ok(l) => l,
        Err(e) => return precondition(report, "algebra", &e),
    };
    let lz = match liezation(&l) {
        Ok(lz) => lz,
        Err(e) => return precondition(report, "leibniz-identity", &e),
    };
    report.push(CheckResult::from_report(
        "leibniz-identity",
        true,
        &AxiomReport::default(),
    ));
    report.push(CheckResult::from_report(
        "quotient-lie-axioms",
        true,
        &check_lie(&lz.quotient),
    ));

    let q_names = lz.quotient.names();
    let projection: Payload = (0..l.dim())
        .map(|i| {
            (
                l.names()[i].clone(),
                render_vector(&lz.project(&Vector::basis(i)), q_names),
            )
        })
        .collect();
    let ideal: Payload = lz
        .ideal
        .basis()
        .map(|(pivot, v)| (l.names()[pivot].clone(), render_vector(v, l.names())))
        .collect();
    let brackets: Payload = lz
        .quotient
        .entries()
        .map(|(i, j, v)| {
            (
                format!("{};{}", q_names[i], q_names[j]),
                render_vector(v, q_names),
            )
        })
        .collect();
    report.payload.insert("projection".into(), projection);
    report.payload.insert("ideal".into(), ideal);
    report.payload.insert("quotient brackets".into(), brackets);
}

fn run_envelope(doc: &InputDocument, opts: &Options, report: &mut RunReport, timer: &mut Timer) {
    let Some(a) = lm_of(doc, report) else { return };
    let env = match LmEnvelope::new(&a) {
        Ok(env) => env,
        Err(e) => return precondition(report, "envelope", &e),
    };
    let sweep = env.check_dialgebra(opts.degree);
    timer.lap("dialgebra-axioms");
    report.push(CheckResult::from_report(
        format!("dialgebra-axioms (degree {})", opts.degree),
        true,
        &sweep,
    ));

    let g_names = a.g().names();
    let m_names = a.module().names();
    let leibniz = leibniz_from_lm(&a);
    let mut recovery = AxiomReport::default();
    let mut left = Payload::new();
    let mut right = Payload::new();
    for v in 0..a.module().dim() {
        for w in 0..a.module().dim() {
            let (l, r) = env.dialg_ops(&env.generator(v), &env.generator(w));
            let key = format!("{};{}", m_names[v], m_names[w]);
            left.insert(key.clone(), render_bimodule(&l, g_names, m_names));
            right.insert(key, render_bimodule(&r, g_names, m_names));
            let got = env.lm_prim_proj(&l, Trivialization::Left);
            recovery.check(
                "bracket-recovery",
                &[v, w],
                got,
                leibniz.bracket_basis(v, w).clone(),
            );
        }
    }
    timer.lap("products");
    report.push(CheckResult::from_report(
        "bracket-recovery",
        true,
        &recovery,
    ));
    report.payload.insert("⊣".into(), left);
    report.payload.insert("⊢".into(), right);
}

fn run_integrate(doc: &InputDocument, opts: &Options, report: &mut RunReport, timer: &mut Timer) {
    if opts.order == 0 {
        return report.push(CheckResult::failed(
            "order",
            true,
            "order must be at least 1",
        ));
    }
    let Some(a) = lm_of(doc, report) else { return };
    let g_names = a.g().names();
    let m_names = a.module().names();
    let f = match integrate_lie(a.g(), opts.order) {
        Ok(f) => f,
        Err(e) => return precondition(report, "formal-group", &e),
    };
    timer.lap("f");
    match verify_formal_group(&f, opts.order) {
        Ok(r) => report.push(CheckResult::from_report("formal-group", true, &r)),
        Err(e) => precondition(report, "formal-group", &e),
    }
    report
        .payload
        .insert("f".into(), render_series(&f, g_names));

    for &triv in opts.triv.trivializations() {
        let group = match integrate_lm(&a, opts.order, triv) {
            Ok(g) => g,
            Err(e) => {
                precondition(report, &format!("integration [{triv}]"), &e);
                continue;
            }
        };
        timer.lap(&format!("integrate [{triv}]"));
        match verify_lm_integration(&group, opts.order) {
            Ok(claims) => {
                for c in &claims.claims {
                    let name = format!("{} [{triv}]", c.claim.name());
                    report.push(match c.status {
                        ClaimStatus::NotApplicable => CheckResult::not_applicable(name, c.asserted),
                        _ => CheckResult::from_report(name, c.asserted, &c.discrepancies),
                    });
                }
            }
            Err(e) => precondition(report, &format!("claims [{triv}]"), &e),
        }
        timer.lap(&format!("verify [{triv}]"));

        let g1: Payload = group
            .g1
            .coeffs
            .iter()
            .map(|((al, v, be), val)| {
                let key = format!(
                    "{};v={};{}",
                    render_monomial(al, g_names),
                    m_names[*v],
                    render_monomial(be, g_names)
                );
                (key, render_vector(val, m_names))
            })
            .collect();
        let g2: Payload = group
            .g2
            .coeffs()
            .iter()
            .map(|((v, be), val)| {
                (
                    format!("v={};{}", m_names[*v], render_monomial(be, g_names)),
                    render_vector(val, m_names),
                )
            })
            .collect();
        let alpha: Payload = group
            .g2
            .alpha_dependence
            .iter()
            .map(|((al, v, be), val)| {
                let key = format!(
                    "{};v={};{}",
                    render_monomial(al, g_names),
                    m_names[*v],
                    render_monomial(be, g_names)
                );
                (key, render_vector(val, m_names))
            })
            .collect();
        report.payload.insert(format!("g1 [{triv}]"), g1);
        report.payload.insert(format!("g2 [{triv}]"), g2);
        report
            .payload
            .insert(format!("g2 alpha-dependence [{triv}]"), alpha);
    }
}

fn run_oracle(doc: &InputDocument, opts: &Options, report: &mut RunReport, timer: &mut Timer) {
    let g = match doc.kind {
        Kind::Lie => doc.algebra(),
        Kind::Leibniz => doc
            .algebra()
            .and_then(|l| liezation(&l))
            .map(|lz| lz.quotient),
        Kind::Lm => doc.lm_algebra().map(|a| a.g().clone()),
    };
    let g = match g {
        Ok(g) => g,
        Err(e) => return precondition(report, "cbh-agreement", &e),
    };
    let (f, c) = match (integrate_lie(&g, opts.order), cbh_dynkin(&g, opts.order)) {
        (Ok(f), Ok(c)) => (f, c),
        (Err(e), _) | (_, Err(e)) => return precondition(report, "cbh-agreement", &e),
    };
    timer.lap("series");
    let mut diff = AxiomReport::default();
    let keys: std::collections::BTreeSet<_> = f.coeffs().keys().chain(c.coeffs().keys()).collect();
    let mut payload = Payload::new();
    for (al, be) in keys {
        let (x, y) = (f.coeff(al, be), c.coeff(al, be));
        if x != y {
            let key = format!(
                "{};{}",
                render_monomial(al, g.names()),
                render_monomial(be, g.names())
            );
            payload.insert(key, render_vector(&(&x - &y), g.names()));
        }
        let mut at = crate::algebra::FlatKey::flat(al);
        at.extend(crate::algebra::FlatKey::flat(be));
        diff.check("cbh-agreement", &at, x, y);
    }
    report.push(CheckResult::from_report("cbh-agreement", true, &diff));
    report.payload.insert("difference".into(), payload);
}

pub fn render_monomial(m: &Monomial, names: &[String]) -> String {
    crate::show::monomial(m, names)
}

pub fn render_vector(v: &Vector, names: &[String]) -> BTreeMap<String, String> {
    v.iter()
        .map(|(i, c)| (names[*i].clone(), format_rational(c)))
        .collect()
}

fn render_bimodule(
    b: &BimoduleElement,
    g_names: &[String],
    m_names: &[String],
) -> BTreeMap<String, String> {
    b.iter()
        .map(|((m, v), c)| {
            (
                format!("{}⊗{}", render_monomial(m, g_names), m_names[*v]),
                format_rational(c),
            )
        })
        .collect()
}

pub fn render_series(f: &SeriesMap, names: &[String]) -> Payload {
    f.coeffs()
        .iter()
        .map(|((a, b), v)| {
            (
                format!(
                    "{};{}",
                    render_monomial(a, names),
                    render_monomial(b, names)
                ),
                render_vector(v, names),
            )
        })
        .collect()
}
