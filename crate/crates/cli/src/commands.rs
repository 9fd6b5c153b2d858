use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use brill_core::brill::{symbolic_brill, SymbolicJson};
use brill_core::chow::{sample, SampleKind};
use brill_core::kernel::binomial;
use brill_core::pairing::{pairing_table, PairingRow};
use brill_core::polyspace::wedge_len;
use brill_core::rep::{hwv_tilde, multiplicity, Partition};
use brill_core::{brill::brill_b, Error, SymElement};
use serde::Serialize;

use crate::config::{Caps, RunConfig};
use crate::eval::{evaluate, Request};

/// What a command prints and the process exit code.
#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent input (exit 2).
    Input(String),
    /// A resource cap would be exceeded (exit 3).
    Cap(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Cap(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CmdResult = Result<Output, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string(x).expect("serializable output");
    s.push('\n');
    s
}

fn dim_sym(n: usize, m: u32) -> u128 {
    u128::try_from(binomial(n as u64 + u64::from(m) - 1, u64::from(m))).unwrap_or(u128::MAX)
}

/// Size of the largest intermediate of `𝔅` on `S^dℂ^n`: `Q_d(f)` lives in
/// `S^dV ⊗ S^{d²-d}V` and `𝔅(f)` in `S^d(∧²V) ⊗ S^{d²-d}V`.
fn brill_term_estimate(d: u32, n: usize) -> u128 {
    let first = dim_sym(n, d).max(dim_sym(wedge_len(n), d));
    first.saturating_mul(dim_sym(n, d * d - d))
}

#[derive(Serialize)]
struct Verdict {
    brill_zero: bool,
    nonzero_terms: usize,
}

pub fn membership(cfg: &RunConfig, poly: &Path) -> CmdResult {
    let f: SymElement = parse_json(poly)?;
    if f.n() != cfg.n || f.grade() != cfg.d {
        return Err(CliError::Input(format!(
            "{}: expected an element of S^{}(C^{}), found S^{}(C^{})",
            poly.display(),
            cfg.d,
            cfg.n,
            f.grade(),
            f.n()
        )));
    }
    cfg.caps.check_terms("Brill map terms", brill_term_estimate(cfg.d, cfg.n))?;
    let b = brill_b(&f)?;
    let verdict = Verdict {
        brill_zero: b.is_zero(),
        nonzero_terms: b.len(),
    };
    Ok(Output {
        stdout: to_json(&verdict),
        code: if verdict.brill_zero { 0 } else { 1 },
    })
}

fn render_table(rows: &[PairingRow]) -> String {
    let mut out = String::from("d\tj\tclosed_form\tgeneric\tin_image\n");
    for r in rows {
        let generic = r.generic.as_ref().map_or("skipped".to_string(), ToString::to_string);
        writeln!(out, "{}\t{}\t{}\t{}\t{}", r.d, r.j, r.closed_form, generic, u8::from(r.in_image))
            .expect("writing to a String");
    }
    out
}

fn checked_table(ds: std::ops::RangeInclusive<u32>, max_generic_d: u32, caps: &Caps) -> Result<Vec<PairingRow>, CliError> {
    if *ds.start() < 2 {
        return Err(CliError::Input("need d ≥ 2".into()));
    }
    for d in ds.clone().filter(|&d| d <= max_generic_d) {
        caps.check_terms("polarized Brill map terms", brill_term_estimate(d, 3))?;
    }
    Ok(pairing_table(ds, max_generic_d)?)
}

pub fn verify_theorem(d: u32, max_generic_d: u32, caps: &Caps) -> CmdResult {
    let rows = checked_table(d..=d, max_generic_d, caps)?;
    let ok = rows.iter().all(PairingRow::pattern_matches);
    Ok(Output {
        stdout: render_table(&rows),
        code: if ok { 0 } else { 1 },
    })
}

pub fn pairing_table_cmd(dmax: u32, max_generic_d: u32, caps: &Caps) -> CmdResult {
    let rows = checked_table(2..=dmax, max_generic_d, caps)?;
    Ok(Output::ok(render_table(&rows)))
}

pub fn gen(cfg: &RunConfig) -> CmdResult {
    let out = cfg
        .out
        .as_ref()
        .ok_or_else(|| CliError::Input("--out is required".into()))?;
    let eqs = symbolic_brill(cfg.d, cfg.n, cfg.caps.terms)?;
    let terms: usize = eqs.iter().map(|e| e.poly.num_terms()).sum();
    fs::write(out, to_json(&SymbolicJson::new(cfg.d, cfg.n, &eqs)))
        .map_err(|e| CliError::Input(format!("{}: {e}", out.display())))?;
    Ok(Output::ok(format!("coordinates\t{}\nterms\t{terms}\n", eqs.len())))
}

pub fn hwv(d: u32, j: u32) -> CmdResult {
    Ok(Output::ok(to_json(&hwv_tilde(d, j)?)))
}

pub fn multiplicity_cmd(lambda: &Partition, k: u32, d: u32, caps: &Caps) -> CmdResult {
    let m = multiplicity(lambda, k, d, caps.columns)?;
    Ok(Output::ok(format!("{m}\n")))
}

pub fn sample_cmd(cfg: &RunConfig, kind: SampleKind) -> CmdResult {
    let f = sample(cfg.seed, cfg.d, cfg.n, kind);
    Ok(Output::ok(to_json(&f)))
}

pub fn eval(request: &Path) -> CmdResult {
    let req: Request = parse_json(request)?;
    Ok(Output::ok(to_json(&evaluate(&req)?)))
}
