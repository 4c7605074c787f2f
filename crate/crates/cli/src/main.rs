use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use degree_roots::asymptotics::{limit_set_sample, BkwForm, Grid};
use degree_roots::bounds::BoundName;
use degree_roots::families::{density_witness, FamilyRange, FamilySpec};
use degree_roots::float17;
use degree_roots::num_complex::Complex64;
use degree_roots::sweep::{run_sweep, SweepConfig, SweepRecord};
use degree_roots::{find_roots, DegreeSequence, Error, IntPolynomial};

mod plot;

const EXIT_USAGE: u8 = 1;
const EXIT_NONCONVERGENCE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "degree-roots",
    version,
    about = "Roots of graph degree polynomials"
)]
struct Cli {
    /// Relative residual tolerance for root certification.
    #[arg(long, global = true, env = "DEGREE_ROOTS_TOL", default_value_t = degree_roots::rootfind::DEFAULT_TOL)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certified roots of one polynomial, as JSON.
    Roots(RootsArgs),
    /// Check bounds over every enumerated degree sequence up to an order.
    Verify(VerifyArgs),
    /// Write roots.csv and curves.csv for plotting.
    Plotdata(PlotArgs),
    /// Degree polynomial and an explicit graph for named families.
    Families(FamiliesArgs),
    /// Sample the limit set of a built-in family form on a grid (CSV).
    Limits(LimitsArgs),
    /// Find a degree polynomial with a root near a target point.
    Witness(WitnessArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RootsInput {
    /// Polynomial such as "x^3 + 3x".
    #[arg(long)]
    poly: Option<String>,
    /// Comma-separated degree sequence.
    #[arg(long)]
    degrees: Option<String>,
    /// Family spec such as cl:5 or fgraph:9,4.
    #[arg(long)]
    family: Option<String>,
    /// JSON array of decimal coefficient strings, lowest power first.
    #[arg(long)]
    json_coeffs: Option<String>,
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    input: RootsInput,
}

#[derive(Args)]
struct VerifyArgs {
    /// graph, tree, multigraph or multigraph:<max multiplicity>.
    #[arg(long, default_value = "graph")]
    kind: String,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Comma-separated bounds: conjecture, annulus, imaginary, lagrange, enestrom_kakeya.
    #[arg(long, default_value = "conjecture")]
    bound: String,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// JSON-lines file receiving one record per violating sequence.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON-lines file receiving a record for every sequence.
    #[arg(long)]
    records: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// Family with an order range, e.g. cl:2..20.
    #[arg(long, conflicts_with = "sweep")]
    family: Option<String>,
    /// Every sequence of a kind at one order, e.g. graph:5.
    #[arg(long)]
    sweep: Option<String>,
    /// Comma-separated curves: conjecture:<n> or circle:<radius>.
    #[arg(long, default_value = "")]
    curves: String,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct FamiliesArgs {
    /// Family spec or range; lists the available families when omitted.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct LimitsArgs {
    /// cl, h-even or h-odd.
    #[arg(long)]
    form: String,
    /// Grid points per axis.
    #[arg(long, default_value_t = 400)]
    res: usize,
    /// re_min,re_max,im_min,im_max.
    #[arg(long, default_value = "-2,2,-2,2", allow_hyphen_values = true)]
    rect: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long, allow_hyphen_values = true)]
    re: f64,
    #[arg(long, allow_hyphen_values = true)]
    im: f64,
    /// Distance allowed between the witness root and the target.
    #[arg(long = "within", default_value_t = 1e-3)]
    within: f64,
    #[arg(long, default_value_t = 64)]
    max_a: u32,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        let code = match err.downcast_ref::<Error>() {
            Some(Error::NonConvergence { .. }) => EXIT_NONCONVERGENCE,
            _ => EXIT_USAGE,
        };
        Failure { code, err }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        anyhow::Error::from(err).into()
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        anyhow::Error::from(err).into()
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Roots(a) => cmd_roots(a, cli.tol),
        Command::Verify(a) => cmd_verify(a, cli.tol),
        Command::Plotdata(a) => plot::cmd_plotdata(a, cli.tol),
        Command::Families(a) => cmd_families(a),
        Command::Limits(a) => cmd_limits(a),
        Command::Witness(a) => cmd_witness(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if let Some(io) = f.err.downcast_ref::<io::Error>() {
                if io.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}

fn roots_input(input: &RootsInput) -> Result<(IntPolynomial, bool), Failure> {
    if let Some(s) = &input.poly {
        let p: IntPolynomial = s.parse()?;
        let regular = p.term_count() == 1;
        return Ok((p, regular));
    }
    if let Some(s) = &input.degrees {
        let seq: DegreeSequence = s.parse()?;
        return Ok((IntPolynomial::from_degrees(&seq), seq.is_regular()));
    }
    if let Some(s) = &input.family {
        let spec: FamilySpec = s.parse()?;
        let p = spec.degree_poly()?;
        let regular = p.term_count() == 1;
        return Ok((p, regular));
    }
    let s = input.json_coeffs.as_deref().unwrap_or_default();
    let p = IntPolynomial::from_json_coeffs(s)?;
    let regular = p.term_count() == 1;
    Ok((p, regular))
}

fn cmd_roots(a: &RootsArgs, tol: f64) -> Result<u8, Failure> {
    let (p, regular) = roots_input(&a.input)?;
    if regular {
        eprintln!("note: regular: all degree roots are 0");
    }
    match find_roots(&p, tol) {
        Ok(rs) => {
            println!("{}", rs.to_json());
            Ok(0)
        }
        Err(Error::NonConvergence { sweeps, partial }) => {
            println!("{}", partial.to_json());
            eprintln!("error: roots not certified after {sweeps} sweeps; partial result printed");
            Ok(EXIT_NONCONVERGENCE)
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_bounds(s: &str) -> Result<Vec<BoundName>, Failure> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let b: BoundName = part.parse()?;
        if !out.contains(&b) {
            out.push(b);
        }
    }
    if out.is_empty() {
        return Err(anyhow!("no bound given").into());
    }
    Ok(out)
}

fn cmd_verify(a: &VerifyArgs, tol: f64) -> Result<u8, Failure> {
    let config = SweepConfig {
        kind: a.kind.parse()?,
        n_min: a.n_min,
        n_max: a.n_max,
        bounds: parse_bounds(&a.bound)?,
        jobs: a.jobs,
        tol,
        keep_records: a.records.is_some(),
    };
    if a.n_max < 2 {
        return Err(anyhow!("--n-max must be at least 2").into());
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut io_err = None;
    let summary = run_sweep(&config, |n, c| {
        let line = writeln!(
            out,
            "n={n} sequences={} violations={} unasserted={} nonconvergent={}",
            c.sequences, c.violations, c.unasserted, c.nonconvergent
        );
        if let Err(e) = line {
            io_err.get_or_insert(e);
        }
    })?;
    if let Some(e) = io_err {
        return Err(e.into());
    }
    let violations = summary.violations.len();
    writeln!(
        out,
        "total sequences={} violations={violations} nonconvergent={}",
        summary.total_sequences(),
        summary.failures.len()
    )?;
    for (id, msg) in &summary.failures {
        eprintln!("nonconvergent {id}: {msg}");
    }
    for (path, records) in [
        (&a.out, &summary.violations),
        (&a.records, &summary.records),
    ] {
        if let Some(path) = path {
            write_jsonl(path, records)?;
        }
    }
    Ok(if violations > 0 {
        EXIT_VIOLATION
    } else if !summary.failures.is_empty() {
        EXIT_NONCONVERGENCE
    } else {
        0
    })
}

fn write_jsonl(path: &std::path::Path, records: &[SweepRecord]) -> anyhow::Result<()> {
    let mut text = String::new();
    for rec in records {
        text.push_str(&rec.to_json_line());
        text.push('\n');
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

const FAMILY_HELP: &str = "\
cl:<n>            K_(n-1) with a pendant leaf
anti:<n>          connected anti-regular graph
anti-c:<n>        complement of anti:<n>
star:<n>          K_(1,n-1)
two:<a>,<D>,<b>,<d>  a vertices of degree D, b of degree d
fgraph:<n>,<D>    one vertex of degree D, n-1 of degree D-1 (n odd, D even)
matching:<n>      K_(n-1) minus a perfect matching, plus a universal vertex (n odd)
paths:<n>         P_3 plus disjoint edges (n odd)
Single-parameter families accept ranges such as cl:2..20.";

fn cmd_families(a: &FamiliesArgs) -> Result<u8, Failure> {
    let Some(spec) = &a.family else {
        println!("{FAMILY_HELP}");
        return Ok(0);
    };
    let range: FamilyRange = spec.parse()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for member in range.members() {
        let g = member.realize()?;
        let seq = g.degree_sequence().context("empty graph")?;
        let line = serde_json::json!({
            "family": member.to_string(),
            "n": g.n,
            "polynomial": member.degree_poly()?.to_string(),
            "degrees": seq.to_string(),
            "edges": g.edges,
        });
        writeln!(out, "{line}")?;
    }
    Ok(0)
}

fn cmd_limits(a: &LimitsArgs) -> Result<u8, Failure> {
    let form: BkwForm = a.form.parse()?;
    let rect: Vec<f64> = a
        .rect
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .with_context(|| format!("bad --rect value `{s}`"))
        })
        .collect::<anyhow::Result<_>>()?;
    let [re_min, re_max, im_min, im_max] = rect[..] else {
        return Err(anyhow!("--rect needs four values").into());
    };
    if !(re_min < re_max && im_min < im_max) || rect.iter().any(|v| !v.is_finite()) {
        return Err(anyhow!("--rect must be a finite non-empty rectangle").into());
    }
    let grid = Grid {
        re_min,
        re_max,
        im_min,
        im_max,
        res: a.res,
    };
    let points = limit_set_sample(&form, &grid)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["re", "im", "condition"])
        .map_err(anyhow::Error::from)?;
    for p in points {
        w.write_record([
            float17::format(p.z.re),
            float17::format(p.z.im),
            p.class.to_string(),
        ])
        .map_err(anyhow::Error::from)?;
    }
    let bytes = w.into_inner().map_err(|e| anyhow!("{e}"))?;
    match &a.out {
        Some(path) => {
            fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().lock().write_all(&bytes)?,
    }
    Ok(0)
}

fn cmd_witness(a: &WitnessArgs) -> Result<u8, Failure> {
    if !a.within.is_finite() {
        return Err(anyhow!("--within must be finite").into());
    }
    let w = density_witness(Complex64::new(a.re, a.im), a.within, a.max_a)?;
    let line = serde_json::json!({
        "a": w.a,
        "p": w.p,
        "q": w.q,
        "root": [w.root.re, w.root.im],
        "polynomial": w.polynomial().to_string(),
        "distance": (w.root - Complex64::new(a.re, a.im)).norm(),
    });
    println!("{line}");
    Ok(0)
}
