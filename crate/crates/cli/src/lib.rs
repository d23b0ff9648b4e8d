//! Command-line front end for the `raocurve` library.

pub mod idealfile;
pub mod report;

use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use raocurve::construct::{catalog_d3_alternate, catalog_extremal, catalog_nonextremal};
use raocurve::formulas::{g_max, CurveSpec};
use raocurve::oracle::oracle_hilbert_function;
use raocurve::verify::{verify_extremal, CurveReport, VerifyOptions};
use raocurve::{Error, Rational, Zp32003};
use serde_json::{json, Value};

use idealfile::{FieldTag, FromInteger, IdealFile};

pub const EXIT_EXTREMAL: i32 = 0;
pub const EXIT_NOT_EXTREMAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "raocurve", version, about = "Construct and verify extremal curves in projective space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Catalog {
    /// Extremal curve of degree d and genus g.
    Ex45,
    /// Curve with the rao forms replaced, not extremal.
    Ex46,
    /// Cubic with the alternate gin (d = 3 only).
    Rem64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print g_max and the rho/mu tables.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        g: i64,
        #[arg(long, allow_hyphen_values = true)]
        jmin: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        jmax: Option<i64>,
    },
    /// Write a catalog curve as an ideal file.
    Construct {
        #[arg(long, value_enum)]
        catalog: Catalog,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        g: i64,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Analyze a curve and print its report.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exit 0 iff the curve is extremal.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Hilbert function by linear algebra alone.
    OracleHf {
        file: PathBuf,
        #[arg(long)]
        max_deg: u32,
    },
    /// Analyze catalog curves over a grid of (n, d, a).
    Sweep {
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        d: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        a: RangeInclusive<i64>,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s.split_once(':').unwrap_or((s, s));
    let a: i64 = a.trim().parse().map_err(|_| format!("bad range start in `{s}`"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end in `{s}`"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(m: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: m.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Degenerate | Error::NotACurve(_) | Error::NotSaturated => EXIT_NOT_EXTREMAL,
            Error::Invariant(_) | Error::GinDisagreement(_) | Error::HyperplaneExhausted(_) => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Bounds { n, d, g, jmin, jmax } => bounds(out, n, d, g, jmin, jmax),
        Command::Construct { catalog, n, d, g, output } => construct(out, catalog, n, d, g, &output),
        Command::Analyze { file, seed, format } => analyze(out, &file, seed, format),
        Command::Verify { file, seed } => verify(out, &file, seed),
        Command::OracleHf { file, max_deg } => oracle_hf(out, &file, max_deg),
        Command::Sweep { n, d, a, output, jobs, seed } => sweep(out, n, d, a, &output, jobs, seed),
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::usage(format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, s: &str) -> CmdResult {
    out.write_all(s.as_bytes()).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(0)
}

fn bounds(out: &mut dyn Write, n: usize, d: u32, g: i64, jmin: Option<i64>, jmax: Option<i64>) -> CmdResult {
    let spec = CurveSpec::new(n, d, g)?;
    let (lo, hi) = spec.window();
    let (lo, hi) = (jmin.unwrap_or(lo), jmax.unwrap_or(hi));
    if lo > hi {
        return Err(Failure::usage(format!("empty degree range {lo}..{hi}")));
    }
    let mut s = String::new();
    writeln!(s, "n = {n}  d = {d}  g = {g}  g_max = {}  a = {}", g_max(n, d)?, spec.a()).unwrap();
    let rows: Vec<[String; 3]> = (lo..=hi)
        .map(|j| {
            let mu = spec.mu(j).map_or("-".to_string(), |m| m.to_string());
            [j.to_string(), spec.rho(j).to_string(), mu]
        })
        .collect();
    let head = ["j", "rho", "mu"];
    let w: Vec<usize> =
        (0..3).map(|c| rows.iter().map(|r| r[c].len()).chain([head[c].len()]).max().unwrap()).collect();
    writeln!(s, "{:>w0$}  {:>w1$}  {:>w2$}", head[0], head[1], head[2], w0 = w[0], w1 = w[1], w2 = w[2]).unwrap();
    for r in &rows {
        writeln!(s, "{:>w0$}  {:>w1$}  {:>w2$}", r[0], r[1], r[2], w0 = w[0], w1 = w[1], w2 = w[2]).unwrap();
    }
    emit(out, &s)
}

fn construct(out: &mut dyn Write, catalog: Catalog, n: usize, d: u32, g: i64, path: &Path) -> CmdResult {
    let spec = CurveSpec::new(n, d, g)?;
    // degree of h in the construction; differs from g_max - g only for d = 2
    let a = u32::try_from(spec.construction_a()).map_err(|_| Failure::usage("genus exceeds g_max"))?;
    let mut comments = vec![format!("catalog {} n={n} d={d} g={g} a={a}", catalog_name(catalog))];
    let ideal = match catalog {
        Catalog::Ex45 => catalog_extremal::<Rational>(n, d, g)?,
        Catalog::Ex46 => {
            let (ideal, input) = catalog_nonextremal::<Rational>(n, a, d)?;
            for (k, f) in input.fs.iter().enumerate() {
                comments.push(format!("f{} = {f}", k + 1));
            }
            comments.push(format!("f = {}", input.f));
            ideal
        }
        Catalog::Rem64 => {
            if d != 3 {
                return Err(Failure::usage("rem64 requires d = 3"));
            }
            catalog_d3_alternate::<Rational>(n, a)?
        }
    };
    let gens = idealfile::integral(ideal.generators());
    let text = idealfile::emit(n, FieldTag::Rational, &gens, &comments);
    std::fs::write(path, text).map_err(|e| io_failure(path, e))?;
    emit(out, &format!("wrote {} generators to {}\n", gens.len(), path.display()))
}

fn catalog_name(c: Catalog) -> &'static str {
    match c {
        Catalog::Ex45 => "ex45",
        Catalog::Ex46 => "ex46",
        Catalog::Rem64 => "rem64",
    }
}

pub fn read_ideal_file(path: &Path) -> Result<IdealFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    idealfile::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn analyze_file(file: &IdealFile, seed: u64) -> Result<CurveReport, Failure> {
    fn go<F: FromInteger>(file: &IdealFile, seed: u64) -> Result<CurveReport, Failure> {
        let i = file.ideal::<F>()?;
        Ok(verify_extremal(&i, &VerifyOptions { seed, ..VerifyOptions::default() })?)
    }
    match file.field {
        FieldTag::Rational => go::<Rational>(file, seed),
        FieldTag::Zp32003 => go::<Zp32003>(file, seed),
    }
}

fn report_code(r: &CurveReport) -> i32 {
    if !r.violations.is_empty() {
        EXIT_INVARIANT
    } else if r.is_extremal() {
        EXIT_EXTREMAL
    } else {
        EXIT_NOT_EXTREMAL
    }
}

fn analyze(out: &mut dyn Write, path: &Path, seed: u64, format: Format) -> CmdResult {
    let file = read_ideal_file(path)?;
    let r = analyze_file(&file, seed)?;
    let v = report::report_json(&r, seed);
    match format {
        Format::Json => emit(out, &report::to_json_string(&v))?,
        Format::Text => emit(out, &report::to_text(&v))?,
    };
    Ok(if r.violations.is_empty() { 0 } else { EXIT_INVARIANT })
}

fn verify(out: &mut dyn Write, path: &Path, seed: u64) -> CmdResult {
    let file = read_ideal_file(path)?;
    let r = analyze_file(&file, seed)?;
    let mut s = format!("{}\n", r.verdict.as_str());
    for v in &r.violations {
        writeln!(s, "violation: {v}").unwrap();
    }
    emit(out, &s)?;
    Ok(report_code(&r))
}

fn oracle_hf(out: &mut dyn Write, path: &Path, max_deg: u32) -> CmdResult {
    fn go<F: FromInteger>(file: &IdealFile, max_deg: u32) -> String {
        let gens = file.polynomials::<F>();
        let mut s = String::new();
        for j in 0..=max_deg as i64 {
            writeln!(s, "{j} {}", oracle_hilbert_function(file.nvars(), &gens, j)).unwrap();
        }
        s
    }
    let file = read_ideal_file(path)?;
    let s = match file.field {
        FieldTag::Rational => go::<Rational>(&file, max_deg),
        FieldTag::Zp32003 => go::<Zp32003>(&file, max_deg),
    };
    emit(out, &s)
}

/// Grid points in sweep order; `d = 2` is only taken with `a >= 1`.
pub fn grid(n: RangeInclusive<i64>, d: RangeInclusive<i64>, a: RangeInclusive<i64>) -> Vec<(usize, u32, i64)> {
    let mut pts = Vec::new();
    for n in n.clone() {
        for d in d.clone() {
            for a in a.clone() {
                if n < 3 || d < 2 || a < 0 || (d == 2 && a == 0) {
                    continue;
                }
                pts.push((n as usize, d as u32, a));
            }
        }
    }
    pts
}

/// Report for one catalog grid point, or an error entry.
pub fn sweep_point(n: usize, d: u32, a: i64, seed: u64) -> Value {
    let point = json!({"n": n, "d": d, "a": a});
    let result = CurveSpec::from_a(n, d, a)
        .and_then(|spec| catalog_extremal::<Rational>(n, d, spec.g))
        .and_then(|i| verify_extremal(&i, &VerifyOptions { seed, ..VerifyOptions::default() }));
    match result {
        Ok(r) => {
            let mut v = report::report_body(&r);
            v.as_object_mut().unwrap().insert("point".into(), point);
            v
        }
        Err(e) => json!({"point": point, "error": e.to_string()}),
    }
}

fn sweep(
    out: &mut dyn Write,
    n: RangeInclusive<i64>,
    d: RangeInclusive<i64>,
    a: RangeInclusive<i64>,
    path: &Path,
    jobs: Option<usize>,
    seed: u64,
) -> CmdResult {
    let pts = grid(n.clone(), d.clone(), a.clone());
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Failure::usage("--jobs must be positive"));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| Failure::usage(e.to_string()))?;
    // par_iter().collect() keeps input order
    let reports: Vec<Value> = pool.install(|| pts.par_iter().map(|&(n, d, a)| sweep_point(n, d, a, seed)).collect());
    let extremal = reports.iter().filter(|r| r["verdict"] == "extremal").count();
    let failed = reports.iter().filter(|r| r.get("error").is_some()).count();
    let violated = reports.iter().any(|r| r["violations"].as_array().is_some_and(|v| !v.is_empty()));
    let doc = json!({
        "schema": report::SCHEMA,
        "seed": seed,
        "grid": {
            "n": [n.start(), n.end()],
            "d": [d.start(), d.end()],
            "a": [a.start(), a.end()],
        },
        "reports": reports,
    });
    std::fs::write(path, report::to_json_string(&doc)).map_err(|e| io_failure(path, e))?;
    emit(out, &format!("{} points, {extremal} extremal, {failed} errors; wrote {}\n", pts.len(), path.display()))?;
    Ok(if violated {
        EXIT_INVARIANT
    } else if extremal == pts.len() {
        EXIT_EXTREMAL
    } else {
        EXIT_NOT_EXTREMAL
    })
}
