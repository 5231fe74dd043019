//! Command implementations for the `dqsym` binary.
//!
//! Every command returns a [`RunReport`]; `main` only decides how to print
//! it and which exit code to use.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use dqsym::bicomp::Bicomposition;
use dqsym::checks::{self, CheckReport};
use dqsym::dqsym::{f_basis, m_expand_basis, m_mult, DQSymElt};
use dqsym::lincomb::rational_text;
use dqsym::quotient::{
    basis_check, conjectured_basis, harmonics_basis, hilbert_dq, hilbert_r_diag, hilbert_r_univariate,
    plethystic_guess, predicted_dq, psi, HilbertMatrix,
};
use dqsym::series::UnivariateSeries;
use dqsym::symfun::FROBENIUS_MAX_N;
use dqsym::Bidegree;

/// Largest `n` for the quotient of the polynomial ring without `--force`.
pub const DQ_MAX_N: usize = 5;
/// Largest total degree for other computations without `--force`.
pub const MAX_TOTAL: u32 = 6;

#[derive(Debug, Parser)]
#[command(name = "dqsym", version, about = "Diagonally quasi-symmetric functions and their quotients")]
pub struct Cli {
    /// Print the full report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Lift the resource guards.
    #[arg(long, global = true)]
    pub force: bool,
    /// Truncation box `d1,d2` for series; for `hilbert rdiag` the larger
    /// bound is the top total degree.
    #[arg(long, global = true, value_parser = parse_pair)]
    pub trunc: Option<Bidegree>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quasi-shuffle of two bicompositions, e.g. `2,0/1,3 0,2/1,0`.
    Shuffle { a: String, b: String },
    /// Product `M_a M_b` in the monomial basis.
    Mult { a: String, b: String },
    /// `F_b` expanded in the monomial basis.
    Fbasis { b: String },
    /// `M_a` as a polynomial in `n` pairs of variables.
    Expand { a: String, n: usize },
    /// Bigraded dimensions of a quotient space.
    Hilbert { space: Space, n: usize },
    /// Basis of the harmonic polynomials in bidegree `d1,d2`.
    Harmonics {
        n: usize,
        #[arg(value_parser = parse_pair)]
        d: Bidegree,
    },
    /// The candidate monomial basis and its check against the quotient.
    Basis { n: usize },
    /// Run a verification suite.
    Verify { suite: Suite, bound: Option<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// `Q[x, y]` modulo the diagonally quasi-symmetric ideal.
    Dq,
    /// `DQSym_n` modulo the diagonal symmetric invariants.
    Rdiag,
    /// `QSym_n` modulo the symmetric invariants.
    Runi,
    /// The plethystic series that `rdiag` would have if `DQSym_n` were free.
    Guess,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Kernel,
    Duality,
    Frobenius,
    Lyndon,
    Basis,
    Hopf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Computed,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Value,
    pub status: Status,
    pub payload: Value,
    /// Seconds; the only field that may differ between identical runs.
    pub wall_time: f64,
    #[serde(skip)]
    pub text: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] dqsym::Error),
    #[error("{0} (pass --force to run anyway)")]
    Guard(String),
}

pub fn parse_pair(s: &str) -> Result<Bidegree, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected d1,d2, got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

fn bicomposition(s: &str) -> Result<Bicomposition, CliError> {
    Ok(s.parse()?)
}

fn guard(ok: bool, force: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if ok || force {
        Ok(())
    } else {
        Err(CliError::Guard(what()))
    }
}

/// The documented JSON form of a Hilbert matrix.
pub fn hilbert_json(m: &HilbertMatrix) -> Value {
    json!({
        "n": m.n,
        "convention": "cartesian",
        "rows": m.rows(),
        "bidegrees": m.bidegrees().iter().map(|&(a, b, v)| json!([a, b, v])).collect::<Vec<_>>(),
    })
}

/// Inverse of [`hilbert_json`].
pub fn hilbert_from_json(v: &Value) -> Option<HilbertMatrix> {
    let n = v.get("n")?.as_u64()? as usize;
    let rows: Vec<Vec<u64>> = serde_json::from_value(v.get("rows")?.clone()).ok()?;
    Some(HilbertMatrix::from_rows(n, &rows))
}

fn series_json(s: &UnivariateSeries) -> Value {
    json!({
        "coefficients": s.coeffs().iter().map(rational_text).collect::<Vec<_>>(),
        "bound": s.bound(),
        "text": s.to_string(),
    })
}

fn element_json(u: &DQSymElt) -> Value {
    Value::Array(
        u.terms()
            .map(|(a, c)| json!([a.to_string(), rational_text(c)]))
            .collect(),
    )
}

fn check_json(r: &CheckReport) -> Value {
    json!({ "suite": r.suite, "checked": r.checked, "failures": r.failures })
}

fn check_text(r: &CheckReport) -> String {
    let mut out = format!(
        "{} {}: {} checks, {} failures",
        if r.passes() { "PASS" } else { "FAIL" },
        r.suite,
        r.checked,
        r.failures.len()
    );
    for f in &r.failures {
        out.push_str("\n  ");
        out.push_str(f);
    }
    out
}

fn report(command: &str, parameters: Value, status: Status, payload: Value, text: String) -> RunReport {
    RunReport {
        command: command.to_string(),
        parameters,
        status,
        payload,
        wall_time: 0.0,
        text,
    }
}

pub fn cmd_shuffle(a: &str, b: &str) -> Result<RunReport, CliError> {
    let (x, y) = (bicomposition(a)?, bicomposition(b)?);
    let set: Vec<String> = x.quasi_shuffle(&y).iter().map(|c| c.to_string()).collect();
    Ok(report(
        "shuffle",
        json!({ "a": a, "b": b }),
        Status::Computed,
        json!({ "count": set.len(), "elements": set }),
        set.join("\n"),
    ))
}

pub fn cmd_mult(a: &str, b: &str) -> Result<RunReport, CliError> {
    let p = m_mult(&bicomposition(a)?, &bicomposition(b)?);
    Ok(report(
        "mult",
        json!({ "a": a, "b": b }),
        Status::Computed,
        json!({ "terms": element_json(&p) }),
        p.to_string(),
    ))
}

pub fn cmd_fbasis(b: &str) -> Result<RunReport, CliError> {
    let f = f_basis(&bicomposition(b)?);
    Ok(report(
        "fbasis",
        json!({ "b": b }),
        Status::Computed,
        json!({ "terms": element_json(&f) }),
        f.to_string(),
    ))
}

pub fn cmd_expand(a: &str, n: usize, force: bool) -> Result<RunReport, CliError> {
    let x = bicomposition(a)?;
    guard(n <= 8, force, || format!("expanding in {n} variables"))?;
    let p = m_expand_basis(&x, n);
    Ok(report(
        "expand",
        json!({ "a": a, "n": n }),
        Status::Computed,
        json!({ "polynomial": p.to_string(), "terms": p.num_terms() }),
        p.to_string(),
    ))
}

pub fn cmd_hilbert(space: Space, n: usize, trunc: Option<Bidegree>, force: bool) -> Result<RunReport, CliError> {
    if n == 0 && space != Space::Guess {
        return Err(CliError::Input(dqsym::Error::InvalidIndices("n must be at least 1".into())));
    }
    match space {
        Space::Dq => {
            guard(n <= DQ_MAX_N, force, || format!("hilbert dq with n = {n}"))?;
            let m = hilbert_dq(n);
            let predicted = predicted_dq(n);
            let mismatches: Vec<Value> = m
                .bidegrees()
                .iter()
                .filter(|&&(a, b, v)| predicted.entry((a, b)) != v)
                .map(|&(a, b, v)| json!({ "bidegree": [a, b], "computed": v, "predicted": predicted.entry((a, b)) }))
                .collect();
            let band = m.band_vanishes == Some(true);
            let ok = mismatches.is_empty() && band;
            let verdict = if ok { "MATCH predicted matrix" } else { "MISMATCH predicted matrix" };
            let mut text = format!("{m}\n{verdict}");
            if !band {
                text.push_str(&format!("\ndegree {n} component does not vanish"));
            }
            Ok(report(
                "hilbert",
                json!({ "space": "dq", "n": n }),
                if ok { Status::Pass } else { Status::Fail },
                json!({
                    "matrix": hilbert_json(&m),
                    "band_vanishes": band,
                    "predicted": hilbert_json(&predicted),
                    "mismatches": mismatches,
                }),
                text,
            ))
        }
        Space::Rdiag => {
            let k = match trunc {
                Some((a, b)) => a.max(b),
                None => psi(n).degree().unwrap_or(0) as u32,
            };
            guard(k < MAX_TOTAL, force, || format!("hilbert rdiag up to total degree {}", k + 1))?;
            guard(n <= DQ_MAX_N, force, || format!("hilbert rdiag with n = {n}"))?;
            let m = hilbert_r_diag(n, k);
            let band = m.band_vanishes == Some(true);
            Ok(report(
                "hilbert",
                json!({ "space": "rdiag", "n": n, "max_total": k }),
                Status::Computed,
                json!({ "matrix": hilbert_json(&m), "band_vanishes": band }),
                format!("{m}\ndegree {} band {}", k + 1, if band { "vanishes" } else { "does not vanish" }),
            ))
        }
        Space::Runi => {
            guard(n <= 4, force, || format!("hilbert runi with n = {n}"))?;
            let s = hilbert_r_univariate(n);
            let expected = psi(n);
            let bound = s.bound().unwrap_or(0);
            let ok = s.agrees_up_to(&expected, bound);
            Ok(report(
                "hilbert",
                json!({ "space": "runi", "n": n }),
                if ok { Status::Pass } else { Status::Fail },
                json!({ "series": series_json(&s), "psi": series_json(&expected) }),
                format!("{s}\n{} psi({n}) = {expected}", if ok { "MATCH" } else { "MISMATCH" }),
            ))
        }
        Space::Guess => {
            let (a, b) = trunc.unwrap_or((4, 4));
            guard(a.max(b) <= 12, force, || format!("series box ({a}, {b})"))?;
            let g = plethystic_guess(n, (a as usize, b as usize));
            let terms = g.terms_up_to((a + b) as usize);
            let negative: Vec<Value> = terms
                .iter()
                .filter(|(_, _, c)| c < &dqsym::BigRational::from_integer(0.into()))
                .map(|(i, j, c)| json!([i, j, rational_text(c)]))
                .collect();
            let text = terms
                .iter()
                .map(|(i, j, c)| format!("{}*q^{i}*t^{j}", rational_text(c)))
                .collect::<Vec<_>>()
                .join(" + ");
            Ok(report(
                "hilbert",
                json!({ "space": "guess", "n": n, "trunc": [a, b] }),
                Status::Computed,
                json!({
                    "terms": terms.iter().map(|(i, j, c)| json!([i, j, rational_text(c)])).collect::<Vec<_>>(),
                    "negative": negative,
                }),
                text,
            ))
        }
    }
}

pub fn cmd_harmonics(n: usize, d: Bidegree, force: bool) -> Result<RunReport, CliError> {
    guard(d.0 + d.1 <= MAX_TOTAL && n <= 4, force, || {
        format!("harmonics with n = {n} at {d:?}")
    })?;
    let basis = harmonics_basis(n, d);
    let polys: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
    Ok(report(
        "harmonics",
        json!({ "n": n, "bidegree": [d.0, d.1] }),
        Status::Computed,
        json!({ "dimension": polys.len(), "basis": polys }),
        format!("dimension {}\n{}", polys.len(), polys.join("\n")),
    ))
}

pub fn cmd_basis(n: usize, force: bool) -> Result<RunReport, CliError> {
    if n == 0 {
        return Err(CliError::Input(dqsym::Error::InvalidIndices("n must be at least 1".into())));
    }
    guard(n <= DQ_MAX_N, force, || format!("basis with n = {n}"))?;
    let sets = conjectured_basis(n);
    let check = basis_check(n);
    let mut lines = Vec::new();
    let mut groups = Vec::new();
    for (d, ms) in &sets {
        let names: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        lines.push(format!("({}, {}): {}", d.0, d.1, names.join(", ")));
        groups.push(json!({ "bidegree": [d.0, d.1], "monomials": names }));
    }
    let failures = check.failures();
    let ok = check.passes();
    lines.push(if ok {
        "PASS basis of the quotient".to_string()
    } else {
        format!("FAIL at bidegrees {failures:?}")
    });
    Ok(report(
        "basis",
        json!({ "n": n }),
        if ok { Status::Pass } else { Status::Fail },
        json!({
            "sets": groups,
            "checks": check.rows.iter().map(|&(d, size, dim, rank)| json!({
                "bidegree": [d.0, d.1], "size": size, "dimension": dim, "independent": rank
            })).collect::<Vec<_>>(),
            "band_vanishes": check.band_vanishes,
            "failures": failures.iter().map(|d| json!([d.0, d.1])).collect::<Vec<_>>(),
        }),
        lines.join("\n"),
    ))
}

pub fn cmd_verify(suite: Suite, bound: Option<usize>, force: bool) -> Result<RunReport, CliError> {
    let r = match suite {
        Suite::Kernel => {
            let n = bound.unwrap_or(5);
            guard(n <= 6, force, || format!("kernel with n = {n}"))?;
            checks::kernel(n, (2, 2))
        }
        Suite::Duality => {
            let t = bound.unwrap_or(3) as u32;
            guard(t <= 4, force, || format!("duality up to total degree {t}"))?;
            checks::duality(t)
        }
        Suite::Frobenius => {
            let n = bound.unwrap_or(3);
            if n > FROBENIUS_MAX_N {
                return Err(CliError::Input(dqsym::Error::TooLarge(format!("frobenius with n = {n}"))));
            }
            checks::frobenius(n, (3, 3), n + 1, (2, 2))
        }
        Suite::Lyndon => {
            let t = bound.unwrap_or(4) as u32;
            guard(t <= MAX_TOTAL, force, || format!("lyndon up to total degree {t}"))?;
            checks::lyndon(t)
        }
        Suite::Basis => {
            let n = bound.unwrap_or(4);
            guard((1..=DQ_MAX_N).contains(&n), force, || format!("basis with n = {n}"))?;
            checks::basis(n)
        }
        Suite::Hopf => {
            let t = bound.unwrap_or(4) as u32;
            guard(t <= 5, force, || format!("hopf up to total degree {t}"))?;
            checks::hopf(t)
        }
    };
    let name = format!("{suite:?}").to_lowercase();
    Ok(report(
        "verify",
        json!({ "suite": name, "bound": bound }),
        if r.passes() { Status::Pass } else { Status::Fail },
        check_json(&r),
        check_text(&r),
    ))
}

/// Runs one parsed command line, timing it.
pub fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut r = match &cli.command {
        Command::Shuffle { a, b } => cmd_shuffle(a, b),
        Command::Mult { a, b } => cmd_mult(a, b),
        Command::Fbasis { b } => cmd_fbasis(b),
        Command::Expand { a, n } => cmd_expand(a, *n, cli.force),
        Command::Hilbert { space, n } => cmd_hilbert(*space, *n, cli.trunc, cli.force),
        Command::Harmonics { n, d } => cmd_harmonics(*n, *d, cli.force),
        Command::Basis { n } => cmd_basis(*n, cli.force),
        Command::Verify { suite, bound } => cmd_verify(*suite, *bound, cli.force),
    }?;
    r.wall_time = start.elapsed().as_secs_f64();
    Ok(r)
}

/// Exit code for a finished report: 0 unless a check failed.
pub fn exit_code(r: &RunReport) -> i32 {
    match r.status {
        Status::Fail => 1,
        Status::Pass | Status::Computed => 0,
    }
}

/// Sizes the global thread pool from `DQSYM_THREADS` when it is set.
pub fn configure_threads() {
    if let Some(n) = std::env::var("DQSYM_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Ignore the error from a second initialization.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}
