//! The `ncgraph` command line: sequence output, verification suites, and the
//! enumeration oracle.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::Integer;
use crate::congruence;
use crate::enumerate::{self, DEFAULT_MAX, HARD_CAP};
use crate::error::{Error, Result};
use crate::lagrange;
use crate::report::CheckReport;
use crate::sequences::{
    self, beta_series, verify_identity, IdentityId, IdentityParams, Method, SequenceId, SumParams,
};

/// Environment variable overriding the default oracle maximum.
pub const ORACLE_MAX_ENV: &str = "NCGRAPH_ORACLE_MAX";

pub const DEFAULT_ORDER: usize = 60;

#[derive(Debug, Parser)]
#[command(
    name = "ncgraph",
    version,
    about = "Exact computation and verification of connected noncrossing graph counts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sequence values over a range.
    Seq(SeqArgs),
    /// Run one verification check.
    Verify(VerifyArgs),
    /// Compare brute-force enumeration against the formulas.
    Oracle(OracleArgs),
    /// Run every check.
    All(AllArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Bfile,
    Csv,
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    /// N, f1, f2, f3, f4 or f5.
    pub sequence: String,
    /// First index (default 1 for N, 0 otherwise).
    #[arg(long)]
    pub from: Option<i64>,
    #[arg(long)]
    pub to: i64,
    /// sum (alias direct), lemma, gf or closed. Default: closed for N, sum otherwise.
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long, value_enum, default_value = "bfile")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity tag (e-n3, e-hjkl, e-f-rational, e-a1, e-2a, e-mh, fact-odd,
    /// fact-even, kummer, t-relations) or suite (congruence, congruence-closed,
    /// congruence-lucas, alpha-mod3, f-residues, h-residues, hjkl-sweep,
    /// n-agreement, f-agreement, lagrange, beta).
    pub check: String,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<i64>,
    #[arg(long)]
    pub i: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<i64>,
    #[arg(long)]
    pub n_max: Option<i64>,
    #[arg(long)]
    pub a_max: Option<i64>,
    /// Seed for the randomized Lagrange suite.
    #[arg(long, default_value_t = 2014)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub instances: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 1)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    /// Also compare total edge counts against f2.
    #[arg(long)]
    pub edges: bool,
    /// Largest n the enumeration may run at.
    #[arg(long)]
    pub max: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AllArgs {
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long)]
    pub max: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Settings taken from the environment rather than the command line.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub oracle_max: Option<usize>,
}

impl Env {
    pub fn from_process() -> Self {
        Env {
            oracle_max: std::env::var(ORACLE_MAX_ENV)
                .ok()
                .and_then(|v| v.trim().parse().ok()),
        }
    }
}

/// Runs the CLI with the given arguments (including the program name) and
/// returns the exit status: 0 when everything passed, 1 when a check failed,
/// 2 on usage or computation errors.
pub fn run<I, T>(args: I, env: &Env, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Seq(a) => cmd_seq(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Oracle(a) => cmd_oracle(&a, env, out),
        Command::All(a) => cmd_all(&a, env, out),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Precondition(format!("output failed: {e}"))
}

#[derive(Serialize)]
struct JsonValue {
    n: i64,
    value: String,
}

pub fn cmd_seq(args: &SeqArgs, out: &mut dyn Write) -> Result<bool> {
    let id: SequenceId = args.sequence.parse()?;
    let method = match &args.method {
        Some(m) => m.parse()?,
        None if id == SequenceId::N => Method::Closed,
        None => Method::Sum,
    };
    let from = args.from.unwrap_or(if id == SequenceId::N { 1 } else { 0 });
    let values = sequences::values(id, from, args.to, method)?;
    write_values(&values, args.format, out)?;
    Ok(true)
}

fn write_values(values: &[(i64, Integer)], format: Format, out: &mut dyn Write) -> Result<()> {
    let mut buf = String::new();
    match format {
        Format::Bfile => {
            for (n, v) in values {
                buf.push_str(&format!("{n} {v}\n"));
            }
        }
        Format::Csv => {
            buf.push_str("n,value\n");
            for (n, v) in values {
                buf.push_str(&format!("{n},{v}\n"));
            }
        }
        Format::Json => {
            let rows: Vec<JsonValue> = values
                .iter()
                .map(|(n, v)| JsonValue {
                    n: *n,
                    value: v.to_string(),
                })
                .collect();
            buf = serde_json::to_string_pretty(&rows).expect("serializable");
            buf.push('\n');
        }
        Format::Text => {
            let parts: Vec<String> = values.iter().map(|(_, v)| v.to_string()).collect();
            buf = parts.join(" ");
            buf.push('\n');
        }
    }
    out.write_all(buf.as_bytes()).map_err(io)
}

/// Parses b-file text: one `n value` pair per line, `#` comments and blank
/// lines ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, Integer)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut parts = line.split_whitespace();
            let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::BadParams(format!("malformed b-file line `{line}`")));
            };
            let n = n
                .parse()
                .map_err(|_| Error::BadParams(format!("bad index `{n}`")))?;
            let v = v
                .parse()
                .map_err(|_| Error::BadParams(format!("bad value `{v}`")))?;
            Ok((n, v))
        })
        .collect()
}

fn sum_params(args: &VerifyArgs) -> Option<SumParams> {
    match (args.j, args.k, args.l) {
        (Some(j), Some(k), Some(l)) => Some(SumParams::new(j, k, l)),
        _ => None,
    }
}

/// Runs a named check and returns its reports.
pub fn run_check(args: &VerifyArgs) -> Result<Vec<CheckReport>> {
    if let Ok(id) = args.check.parse::<IdentityId>() {
        let params = IdentityParams {
            r: args.r,
            i: args.i,
            sum: sum_params(args),
            n_max: args.n_max,
            a_max: args.a_max,
        };
        return Ok(vec![verify_identity(id, &params, args.order)?]);
    }
    let n_max = args.n_max;
    let reports = match args.check.as_str() {
        "congruence" => vec![congruence::check_digit_classes(
            n_max.unwrap_or(2187).max(1) as usize,
        )],
        "congruence-closed" => vec![congruence::check_closed_residues(n_max.unwrap_or(200))?],
        "congruence-lucas" => vec![congruence::check_lucas_residues(
            n_max.unwrap_or(200).max(1) as u64,
        )?],
        "alpha-mod3" => {
            let s = congruence::alpha_mod3_series(args.order)?;
            let mut r = CheckReport::new("alpha-mod3", format!("order={}", args.order));
            let f = congruence::f_cap_series(args.order);
            for n in 0..=args.order {
                r.compare(format!("n={n}"), &s.coeffs()[n], &f.coeffs()[n]);
            }
            vec![r]
        }
        "f-residues" => vec![congruence::check_f_residues(args.order)?],
        "h-residues" => match sum_params(args) {
            Some(p) => vec![congruence::check_h_residues(p, args.order)?],
            None => SequenceId::F_IDS
                .iter()
                .map(|id| congruence::check_h_residues(id.params().expect("f id"), args.order))
                .collect::<Result<_>>()?,
        },
        "hjkl-sweep" => sequences::hjkl_sweep(-2, 2, args.order)?
            .into_iter()
            .map(|(_, r)| r)
            .collect(),
        "n-agreement" => vec![sequences::check_n_agreement(n_max.unwrap_or(60))?],
        "f-agreement" => vec![sequences::check_f_agreement(n_max.unwrap_or(40))?],
        "lagrange" => vec![lagrange::random_suite(
            args.seed,
            args.instances,
            args.order.min(15),
        )?],
        "beta" => {
            beta_series(args.order)?;
            let mut r = CheckReport::new("beta", format!("order={}", args.order));
            r.compare("beta = alpha - alpha^2", &true, &true);
            vec![r]
        }
        other => return Err(Error::BadParams(format!("unknown check `{other}`"))),
    };
    Ok(reports)
}

fn write_reports(reports: &[CheckReport], format: Format, out: &mut dyn Write) -> Result<bool> {
    let mut buf = String::new();
    match format {
        Format::Json => {
            let rows: Vec<_> = reports.iter().map(CheckReport::to_json).collect();
            buf = serde_json::to_string_pretty(&rows).expect("serializable");
            buf.push('\n');
        }
        Format::Csv => {
            buf.push_str("check,params,status,compared,location,lhs,rhs\n");
            for r in reports {
                let (loc, lhs, rhs) = r
                    .mismatch
                    .as_ref()
                    .map(|m| (m.location.as_str(), m.lhs.as_str(), m.rhs.as_str()))
                    .unwrap_or(("", "", ""));
                buf.push_str(&format!(
                    "{},\"{}\",{},{},\"{}\",{},{}\n",
                    r.check,
                    r.params,
                    if r.passed() { "pass" } else { "fail" },
                    r.compared,
                    loc,
                    lhs,
                    rhs
                ));
            }
        }
        Format::Text | Format::Bfile => {
            for r in reports {
                buf.push_str(&format!("{r}\n"));
            }
        }
    }
    out.write_all(buf.as_bytes()).map_err(io)?;
    Ok(reports.iter().all(CheckReport::passed))
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    let reports = run_check(args)?;
    write_reports(&reports, args.format, out)
}

fn oracle_max(cli: Option<usize>, env: &Env) -> usize {
    cli.or(env.oracle_max).unwrap_or(DEFAULT_MAX).min(HARD_CAP)
}

/// One row of the oracle table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub n: usize,
    pub count: u64,
    pub formula: String,
    pub count_ok: bool,
    pub edges: u64,
    /// `f2(n-1)`, absent for `n = 1`.
    pub f2: Option<String>,
    pub edges_ok: bool,
    pub edge_bounds_ok: bool,
}

pub fn oracle_rows(from: usize, to: usize, max: usize) -> Result<Vec<OracleRow>> {
    if from == 0 || from > to {
        return Err(Error::BadParams(format!(
            "oracle range {from}..={to} is invalid"
        )));
    }
    (from..=to)
        .map(|n| {
            let stats = enumerate::enumerate(n, max)?;
            let formula = sequences::n_closed(n as i64)?;
            let f2 = if n >= 2 {
                Some(sequences::f_value(
                    SequenceId::F2,
                    n as i64 - 1,
                    Method::Sum,
                )?)
            } else {
                None
            };
            let edges_ok = match &f2 {
                Some(v) => *v == Integer::from(stats.total_edges),
                None => stats.total_edges == 0,
            };
            let edge_bounds_ok =
                n < 2 || (stats.min_edges >= Some(n - 1) && stats.max_edges <= Some(2 * n - 3));
            Ok(OracleRow {
                n,
                count: stats.connected_count,
                count_ok: formula == Integer::from(stats.connected_count),
                formula: formula.to_string(),
                edges: stats.total_edges,
                f2: f2.map(|v| v.to_string()),
                edges_ok,
                edge_bounds_ok,
            })
        })
        .collect()
}

fn ok(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "MISMATCH"
    }
}

pub fn cmd_oracle(args: &OracleArgs, env: &Env, out: &mut dyn Write) -> Result<bool> {
    let rows = oracle_rows(args.from, args.to, oracle_max(args.max, env))?;
    let mut buf = String::new();
    match args.format {
        Format::Json => {
            buf = serde_json::to_string_pretty(&rows).expect("serializable");
            buf.push('\n');
        }
        Format::Csv => {
            buf.push_str("n,count,formula,match");
            if args.edges {
                buf.push_str(",edges,f2,edges_match");
            }
            buf.push('\n');
            for r in &rows {
                buf.push_str(&format!(
                    "{},{},{},{}",
                    r.n,
                    r.count,
                    r.formula,
                    ok(r.count_ok)
                ));
                if args.edges {
                    let f2 = r.f2.as_deref().unwrap_or("-");
                    buf.push_str(&format!(",{},{},{}", r.edges, f2, ok(r.edges_ok)));
                }
                buf.push('\n');
            }
        }
        Format::Text | Format::Bfile => {
            buf.push_str(&format!(
                "{:>3} {:>10} {:>10} {:>8}",
                "n", "count", "formula", "match"
            ));
            if args.edges {
                buf.push_str(&format!(" {:>10} {:>10} {:>8}", "edges", "f2", "match"));
            }
            buf.push('\n');
            for r in &rows {
                buf.push_str(&format!(
                    "{:>3} {:>10} {:>10} {:>8}",
                    r.n,
                    r.count,
                    r.formula,
                    ok(r.count_ok)
                ));
                if args.edges {
                    let f2 = r.f2.as_deref().unwrap_or("-");
                    buf.push_str(&format!(
                        " {:>10} {:>10} {:>8}",
                        r.edges,
                        f2,
                        ok(r.edges_ok)
                    ));
                }
                buf.push('\n');
            }
        }
    }
    out.write_all(buf.as_bytes()).map_err(io)?;
    Ok(rows
        .iter()
        .all(|r| r.count_ok && r.edge_bounds_ok && (!args.edges || r.edges_ok)))
}

fn oracle_report(rows: &[OracleRow]) -> CheckReport {
    let (first, last) = (rows[0].n, rows[rows.len() - 1].n);
    let mut report = CheckReport::new("oracle", format!("n={first}..={last}"));
    for r in rows {
        report.compare(format!("n={} count", r.n), &r.count.to_string(), &r.formula);
        if let Some(f2) = &r.f2 {
            report.compare(format!("n={} edges", r.n), &r.edges.to_string(), f2);
        }
        report.compare(format!("n={} edge bounds", r.n), &r.edge_bounds_ok, &true);
    }
    report
}

/// Every check the tool knows, at the given truncation order and oracle cap.
pub fn full_suite(order: usize, oracle_max: usize) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let series_order = order.clamp(1, 30);
    let none = IdentityParams::default();

    reports.push(sequences::check_n_agreement(order as i64)?);
    reports.push(sequences::check_f_agreement(40)?);
    reports.push(oracle_report(&oracle_rows(
        1,
        oracle_max.max(1),
        oracle_max,
    )?));

    reports.push(congruence::check_digit_classes(2187));
    reports.push(congruence::check_closed_residues(200)?);
    reports.push(congruence::check_lucas_residues(200)?);
    reports.push(congruence::check_f_residues(100)?);
    for id in SequenceId::F_IDS {
        reports.push(congruence::check_h_residues(
            id.params().expect("f id"),
            40,
        )?);
    }

    reports.push(verify_identity(
        IdentityId::Kummer,
        &IdentityParams {
            n_max: Some(30),
            a_max: Some(20),
            ..Default::default()
        },
        0,
    )?);
    reports.push(verify_identity(
        IdentityId::ShiftedNSeries,
        &none,
        series_order,
    )?);
    for id in SequenceId::F_IDS {
        let params = IdentityParams {
            sum: id.params(),
            ..Default::default()
        };
        reports.push(verify_identity(IdentityId::HSeries, &params, series_order)?);
    }
    for r in -2..=3 {
        for i in 0..=3 {
            let params = IdentityParams {
                r: Some(r),
                i: Some(i),
                ..Default::default()
            };
            reports.push(verify_identity(
                IdentityId::AlphaBinomialExpansion,
                &params,
                series_order,
            )?);
        }
    }
    for r in 1..=4 {
        let params = IdentityParams {
            r: Some(r),
            ..Default::default()
        };
        reports.push(verify_identity(
            IdentityId::AlphaPowerExpansion,
            &params,
            series_order,
        )?);
    }
    reports.push(verify_identity(
        IdentityId::FRationalForms,
        &none,
        series_order,
    )?);
    reports.push(verify_identity(
        IdentityId::NClosedForm,
        &none,
        series_order,
    )?);
    let m_max = IdentityParams {
        n_max: Some(15),
        ..Default::default()
    };
    reports.push(verify_identity(IdentityId::FactorialOdd, &m_max, 0)?);
    reports.push(verify_identity(IdentityId::FactorialEven, &m_max, 0)?);
    reports.push(verify_identity(
        IdentityId::TermRelations,
        &IdentityParams {
            n_max: Some(12),
            ..Default::default()
        },
        0,
    )?);
    reports.push(lagrange::random_suite(2014, 100, 15)?);
    beta_series(series_order)?;
    Ok(reports)
}

pub fn cmd_all(args: &AllArgs, env: &Env, out: &mut dyn Write) -> Result<bool> {
    let reports = full_suite(args.order, oracle_max(args.max, env))?;
    write_reports(&reports, args.format, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("ncgraph").chain(args.iter().copied());
        let code = run(argv, &Env::default(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn seq_bfile() {
        let (code, out, _) = run_str(&[
            "seq", "N", "--from", "1", "--to", "9", "--method", "closed", "--format", "bfile",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 9);
        assert!(out.ends_with("9 644908\n"));
    }

    #[test]
    fn seq_text() {
        let (code, out, _) = run_str(&[
            "seq", "f3", "--from", "0", "--to", "4", "--method", "sum", "--format", "text",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "1 5 39 338 3075\n");
    }

    #[test]
    fn seq_f4_closed_at_zero_fails() {
        let (code, _, err) = run_str(&[
            "seq", "f4", "--from", "0", "--to", "0", "--method", "closed",
        ]);
        assert_ne!(code, 0);
        assert!(err.contains("f4 requires n >= 1"), "{err}");
    }

    #[test]
    fn seq_bad_range() {
        let (code, _, err) = run_str(&["seq", "N", "--from", "5", "--to", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("empty range"));
    }

    #[test]
    fn bfile_roundtrip() {
        let values = sequences::values(SequenceId::F5, 0, 20, Method::Closed).unwrap();
        let mut buf = Vec::new();
        write_values(&values, Format::Bfile, &mut buf).unwrap();
        assert_eq!(
            parse_bfile(std::str::from_utf8(&buf).unwrap()).unwrap(),
            values
        );
        assert!(parse_bfile("1 2 3\n").is_err());
    }

    #[test]
    fn csv_and_json_formats() {
        let (_, csv, _) = run_str(&["seq", "f1", "--to", "2", "--format", "csv"]);
        assert_eq!(csv, "n,value\n0,1\n1,6\n2,48\n");
        let (_, json, _) = run_str(&["seq", "f1", "--to", "1", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v[1]["value"], "6");
    }

    #[test]
    fn verify_examples() {
        let (code, out, _) = run_str(&["verify", "kummer", "--n-max", "30", "--a-max", "20"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_str(&["verify", "congruence", "--n-max", "2187"]);
        assert_eq!(code, 0);
        assert!(out.contains("2187 compared"), "{out}");
        let (code, out, _) = run_str(&["verify", "e-a1", "--r", "1", "--i", "2", "--order", "30"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_str(&["verify", "e-a1", "--r", "-2", "--i", "0", "--order", "10"]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn verify_json_schema() {
        let (code, out, _) = run_str(&[
            "verify", "e-2a", "--r", "2", "--order", "10", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let row = &v[0];
        for key in ["check", "params", "status", "lhs", "rhs", "location"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
        assert_eq!(row["status"], "pass");
    }

    #[test]
    fn verify_unknown_tag() {
        let (code, _, err) = run_str(&["verify", "e-nope"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown check"));
    }

    #[test]
    fn oracle_table() {
        let (code, out, _) = run_str(&["oracle", "--to", "6"]);
        assert_eq!(code, 0);
        let last = out.lines().last().unwrap();
        let cols: Vec<&str> = last.split_whitespace().collect();
        assert_eq!(cols, ["6", "1162", "1162", "OK"]);
        let (code, out, _) = run_str(&["oracle", "--to", "1"]);
        assert_eq!(code, 0);
        let cols: Vec<&str> = out.lines().last().unwrap().split_whitespace().collect();
        assert_eq!(cols, ["1", "1", "1", "OK"]);
    }

    #[test]
    fn oracle_cap() {
        let (code, _, err) = run_str(&["oracle", "--to", "9"]);
        assert_eq!(code, 2);
        assert!(err.contains("maximum 8"), "{err}");
        let mut out = Vec::new();
        let mut e = Vec::new();
        let env = Env {
            oracle_max: Some(5),
        };
        let code = run(["ncgraph", "oracle", "--to", "6"], &env, &mut out, &mut e);
        assert_eq!(code, 2);
    }

    #[test]
    fn deterministic_output() {
        let a = run_str(&[
            "verify", "e-hjkl", "--j", "0", "--k", "1", "--l", "0", "--order", "12",
        ]);
        let b = run_str(&[
            "verify", "e-hjkl", "--j", "0", "--k", "1", "--l", "0", "--order", "12",
        ]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }
}
