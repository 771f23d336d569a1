//! Command-line front end: `construct`, `spectrum`, `charpoly`, `symmetrize`
//! and `verify`.
//!
//! Exit codes: 0 success or pass, 1 a verification or identity check failed,
//! 2 usage or input error, 3 solver failure.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::charpoly::{self, check_identities};
use crate::constructions::{self, PartSizes};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{self, emit_report, ReportFormat, SearchOptions, VerifyParams};
use crate::spectra::{self, PSpectralOptions, SpectralResult};
use crate::symmetrize::{self, SymmetrizationTrace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spectral-turan",
    version,
    about = "Spectral extremal graph theory on small graphs"
)]
struct Cli {
    /// Seed for every randomised solver start.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Solver tolerance.
    #[arg(long, global = true, default_value_t = spectra::DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for exhaustive searches; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph; prints graph6 and a JSON summary.
    Construct(ConstructArgs),
    /// Spectral radius of graph6 graphs read from stdin or a file.
    Spectrum(SpectrumArgs),
    /// Exact characteristic polynomials and identity checks.
    Charpoly(CharpolyArgs),
    /// Spectral symmetrization of a connected graph to a complete multipartite one.
    Symmetrize(SymmetrizeArgs),
    /// Check a catalogued extremal statement by exhaustive search.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum Family {
    Turan,
    Multipartite,
    Sk,
    Y,
    Lemma42,
    #[value(name = "erdos_family", alias = "erdos-family")]
    ErdosFamily,
    Split,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    x1: Option<usize>,
    /// Clique size of the split graph.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpectrumObjective {
    #[value(alias = "λ")]
    Lambda,
    Q,
    #[value(name = "a_alpha", alias = "a-alpha")]
    AAlpha,
    P,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    /// Read graph6 lines from this file instead of stdin.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = SpectrumObjective::Lambda)]
    objective: SpectrumObjective,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    /// Random starts for the p-spectral solver.
    #[arg(long, default_value_t = 8)]
    restarts: usize,
}

#[derive(Args, Debug)]
struct CharpolyArgs {
    /// Read graph6 lines from this file instead of stdin.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Use D + A instead of A.
    #[arg(long)]
    signless: bool,
    /// Polynomial of the two-vertex-split family for these part sizes.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["file", "signless", "check_identities"])]
    parts: Option<Vec<usize>>,
    /// Check the family identities on a parameter grid.
    #[arg(long)]
    check_identities: bool,
    /// Grid bound for --check-identities.
    #[arg(long, default_value_t = 7, requires = "check_identities")]
    max: usize,
}

#[derive(Args, Debug)]
struct SymmetrizeArgs {
    /// Read a graph6 line from this file instead of stdin.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Step budget; n² by default.
    #[arg(long)]
    max_steps: Option<usize>,
    /// Use the majorization pipeline instead of Zykov moves.
    #[arg(long)]
    majorize: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    theorem: String,
    /// Vertex counts: `7`, `4-7` or `4,6,7`.
    #[arg(long, value_parser = parse_range)]
    n: Option<Range>,
    #[arg(long, value_parser = parse_range)]
    r: Option<Range>,
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<f64>>,
}

/// A list of counts given as `7`, `4-7` or `4,6-7`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Range(Vec<usize>);

fn parse_range(s: &str) -> std::result::Result<Range, String> {
    let mut out = Vec::new();
    for piece in s.split(',') {
        let piece = piece.trim();
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        match piece.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi) = (parse(lo)?, parse(hi)?);
                if lo > hi {
                    return Err(format!("empty range {piece}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(parse(piece)?),
        }
    }
    Ok(Range(out))
}

/// Ten significant digits, as a JSON number.
fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.9e}").parse().expect("formatted float parses");
    json!(rounded)
}

fn spectral_json(r: &SpectralResult) -> Value {
    json!({
        "value": num(r.value),
        "vector": r.vector.iter().map(|&v| num(v)).collect::<Vec<_>>(),
        "residual": num(r.residual),
        "iterations": r.iterations,
        "heuristic": r.heuristic,
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Convergence { .. } | Error::Budget { .. } => EXIT_SOLVER,
        _ => EXIT_USAGE,
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Domain(format!("--{flag} is required for this family")))
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.out, "{s}").map_err(|e| Error::Precondition(format!("write failed: {e}")))
    }

    fn graphs(&mut self, file: &Option<PathBuf>) -> Result<Vec<Graph>> {
        let text = match file {
            Some(path) => fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?,
            None => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Error::Precondition(format!("cannot read stdin: {e}")))?;
                s
            }
        };
        let graphs = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(Graph::from_graph6)
            .collect::<Result<Vec<_>>>()?;
        if graphs.is_empty() {
            return Err(Error::parse(0, "no graph6 input"));
        }
        Ok(graphs)
    }
}

/// Parses `args` (program name first) and runs the command. Diagnostics go to
/// `err`; the return value is the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let mut io = Io { stdin, out };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            if let Error::Budget { trace, .. } = &e {
                for line in trace_lines(trace) {
                    let _ = io.line(&line);
                }
            }
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32> {
    match &cli.command {
        Command::Construct(a) => construct(cli, a, io),
        Command::Spectrum(a) => spectrum(cli, a, io),
        Command::Charpoly(a) => charpoly_cmd(cli, a, io),
        Command::Symmetrize(a) => symmetrize_cmd(a, io),
        Command::Verify(a) => verify(cli, a, io),
    }
}

fn construct(cli: &Cli, a: &ConstructArgs, io: &mut Io) -> Result<i32> {
    let g = match a.family {
        Family::Turan => constructions::turan_graph(need(a.n, "n")?, need(a.r, "r")?)?,
        Family::Multipartite => {
            let parts = a
                .parts
                .clone()
                .ok_or_else(|| Error::Domain("--parts is required".into()))?;
            constructions::complete_multipartite(&PartSizes::new(parts)?)
        }
        Family::Sk => constructions::sk_graph(need(a.a, "a")?, need(a.b, "b")?)?,
        Family::Y => constructions::y_graph(need(a.n, "n")?, need(a.r, "r")?)?,
        Family::Lemma42 => {
            let parts = a
                .parts
                .clone()
                .ok_or_else(|| Error::Domain("--parts is required".into()))?;
            constructions::lemma42_graph(&PartSizes::new(parts)?)?
        }
        Family::ErdosFamily => constructions::erdos_family_graph(need(a.n, "n")?, need(a.x1, "x1")?)?,
        Family::Split => constructions::split_graph(need(a.n, "n")?, need(a.k, "k")?)?,
    };
    let summary = json!({
        "n": g.order(),
        "m": g.edge_count(),
        "omega": g.clique_number(),
        "chi": g.chromatic_number(),
        "lambda": num(spectra::adjacency_radius(&g, cli.tol)?.value),
        "q": num(spectra::signless_laplacian_radius(&g, cli.tol)?.value),
    });
    io.line(&g.to_graph6())?;
    io.line(&summary.to_string())?;
    Ok(EXIT_OK)
}

fn spectrum(cli: &Cli, a: &SpectrumArgs, io: &mut Io) -> Result<i32> {
    let graphs = io.graphs(&a.file)?;
    for g in &graphs {
        let r = match a.objective {
            SpectrumObjective::Lambda => spectra::adjacency_radius(g, cli.tol)?,
            SpectrumObjective::Q => spectra::signless_laplacian_radius(g, cli.tol)?,
            SpectrumObjective::AAlpha => {
                let alpha = a.alpha.ok_or_else(|| Error::Domain("--alpha is required".into()))?;
                spectra::a_alpha_radius(g, alpha, cli.tol)?
            }
            SpectrumObjective::P => {
                let p = a.p.ok_or_else(|| Error::Domain("--p is required".into()))?;
                let opts = PSpectralOptions::new(p)
                    .with_restarts(a.restarts)
                    .with_seed(cli.seed)
                    .with_tolerance(cli.tol);
                spectra::p_spectral_radius(g, &opts)?
            }
        };
        match cli.format {
            Format::Json => io.line(&spectral_json(&r).to_string())?,
            Format::Csv => io.line(&format!("{},{:.10}", g.to_graph6(), r.value))?,
            Format::Text => io.line(&format!("{:.10}", r.value))?,
        }
    }
    Ok(EXIT_OK)
}

fn charpoly_cmd(cli: &Cli, a: &CharpolyArgs, io: &mut Io) -> Result<i32> {
    if a.check_identities {
        let table = check_identities(a.max);
        match cli.format {
            Format::Json => {
                let failures: Vec<_> = table.checks.iter().filter(|c| !c.holds).collect();
                let doc = json!({
                    "max": table.max,
                    "summary": table.summary,
                    "failures": failures,
                    "pass": table.all_hold(),
                });
                io.line(&doc.to_string())?;
            }
            Format::Csv => {
                io.line("identity,checked,failed,pass")?;
                for s in &table.summary {
                    io.line(&format!("{},{},{},{}", s.identity, s.checked, s.failed, s.failed == 0))?;
                }
            }
            Format::Text => {
                for s in &table.summary {
                    let status = if s.failed == 0 { "PASS" } else { "FAIL" };
                    io.line(&format!(
                        "{:<14} {:>5} checked {:>3} failed  {status}  {}",
                        s.identity, s.checked, s.failed, s.statement
                    ))?;
                }
                io.line(if table.all_hold() {
                    "all identities hold"
                } else {
                    "some identities FAIL"
                })?;
            }
        }
        return Ok(if table.all_hold() { EXIT_OK } else { EXIT_FAIL });
    }
    let polys = match &a.parts {
        Some(parts) => vec![charpoly::f_parts(&PartSizes::new(parts.clone())?)],
        None => io
            .graphs(&a.file)?
            .iter()
            .map(|g| {
                if a.signless {
                    charpoly::charpoly_signless_exact(g)
                } else {
                    charpoly::charpoly_exact(g)
                }
            })
            .collect::<Result<Vec<_>>>()?,
    };
    for p in polys {
        let root = charpoly::largest_root(&p, cli.tol.min(1e-12))?;
        match cli.format {
            Format::Json => io.line(
                &json!({
                    "coefficients": p.to_strings(),
                    "polynomial": p.to_string(),
                    "largest_root": num(root),
                })
                .to_string(),
            )?,
            Format::Csv => io.line(&format!("\"{}\",{}", p.to_strings().join(" "), fmt_sig(root)))?,
            Format::Text => {
                io.line(&p.to_string())?;
                io.line(&format!("largest root {}", fmt_sig(root)))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn fmt_sig(x: f64) -> String {
    crate::search::fmt_num(x)
}

fn trace_lines(trace: &SymmetrizationTrace) -> Vec<String> {
    let mut lines: Vec<String> = trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "kind": s.kind,
                "vertices": s.vertices,
                "lambda_before": num(s.lambda_before),
                "lambda_after": num(s.lambda_after),
            })
            .to_string()
        })
        .collect();
    lines.push(trace.final_graph.to_graph6());
    lines
}

fn symmetrize_cmd(a: &SymmetrizeArgs, io: &mut Io) -> Result<i32> {
    let graphs = io.graphs(&a.file)?;
    if graphs.len() != 1 {
        return Err(Error::Precondition(format!("expected one graph, got {}", graphs.len())));
    }
    let trace = if a.majorize {
        symmetrize::erdos_majorization_pipeline(&graphs[0])?
    } else {
        symmetrize::symmetrize_to_multipartite(&graphs[0], a.max_steps)?
    };
    for line in trace_lines(&trace) {
        io.line(&line)?;
    }
    Ok(EXIT_OK)
}

fn verify(cli: &Cli, a: &VerifyArgs, io: &mut Io) -> Result<i32> {
    let params = VerifyParams {
        n: a.n.clone().map(|r| r.0),
        r: a.r.clone().map(|r| r.0),
        p: a.p.clone(),
        alpha: a.alpha.clone(),
        search: SearchOptions {
            jobs: cli.jobs,
            tolerance: cli.tol,
            seed: cli.seed,
            ..SearchOptions::default()
        },
    };
    let report = search::verify_theorem(&a.theorem, &params)?;
    write!(io.out, "{}", emit_report(&report, cli.format.into()))
        .map_err(|e| Error::Precondition(format!("write failed: {e}")))?;
    Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["spectral-turan"];
        full.extend_from_slice(args);
        let code = run(full, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("6-7").unwrap(), Range(vec![6, 7]));
        assert_eq!(parse_range("4,6-7").unwrap(), Range(vec![4, 6, 7]));
        assert!(parse_range("7-6").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn construct_examples() {
        let (code, out, _) = call(&["construct", "sk", "--a", "2", "--b", "2"], "");
        assert_eq!(code, 0);
        let g = Graph::from_graph6(out.lines().next().unwrap()).unwrap();
        let c5 = Graph::from_graph6("Dhc").unwrap();
        assert_eq!(g.canonical_form().unwrap(), c5.canonical_form().unwrap());
        let (_, out, _) = call(&["construct", "y", "--n", "13", "--r", "3"], "");
        let summary: Value = serde_json::from_str(out.lines().nth(1).unwrap()).unwrap();
        assert_eq!(summary["m"], 53);
        let (_, out, _) = call(&["construct", "turan", "--n", "5", "--r", "2"], "");
        let summary: Value = serde_json::from_str(out.lines().nth(1).unwrap()).unwrap();
        assert_eq!(summary["lambda"].as_f64().unwrap(), 2.449489743);
        assert_eq!(call(&["construct", "y", "--n", "6", "--r", "3"], "").0, EXIT_USAGE);
        assert_eq!(call(&["construct", "sk", "--a", "2"], "").0, EXIT_USAGE);
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(call(&["spectrum"], "Dhc\n").1, "2.0000000000\n");
        assert_eq!(call(&["spectrum", "--objective", "q"], "Dhc\n").1, "4.0000000000\n");
        let (code, out, _) = call(&["spectrum", "--objective", "p", "--p", "4"], "A_\n");
        assert_eq!(code, 0);
        assert_eq!(out, "1.4142135624\n");
        let (code, _, err) = call(&["spectrum"], "not graph6 \x01\n");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("error"));
        assert_eq!(call(&["spectrum", "--objective", "p"], "Dhc\n").0, EXIT_USAGE);
    }

    #[test]
    fn verify_and_symmetrize() {
        let (code, out, _) = call(
            &[
                "verify",
                "--theorem",
                "main",
                "--n",
                "6-7",
                "--r",
                "3",
                "--format",
                "csv",
            ],
            "",
        );
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("theorem,n,r,param,found,expected,witnesses,unique,pass\n"));
        assert_eq!(out.lines().count(), 3);
        let (code, out, _) = call(&["symmetrize"], "Dhc\n");
        assert_eq!(code, EXIT_OK);
        let last = Graph::from_graph6(out.lines().last().unwrap()).unwrap();
        assert_eq!(last.complete_multipartite_parts(), Some(vec![2, 3]));
        // a path on three vertices plus an isolated vertex
        assert_eq!(call(&["symmetrize"], "Cc\n").0, EXIT_USAGE);
        let (code, out, _) = call(&["symmetrize", "--max-steps", "1"], "Dhc\n");
        assert_eq!(code, EXIT_SOLVER);
        assert_eq!(out.lines().count(), 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[], "").0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--theorem", "nope"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
        assert_eq!(call(&["verify", "--theorem", "mantel", "--n", "9"], "").0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--theorem", "mantel", "--n", "a-b"], "").0, EXIT_USAGE);
    }
}
