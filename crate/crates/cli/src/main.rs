//! `fsq`: runs the verification suites and writes kernel and F_n-integral
//! samples.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fsq_core::contour::{fsq_map, write_fsq_csv, DEFAULT_NODES};
use fsq_core::kernels::{kernel_rows, write_kernel_csv, KernelKind};
use fsq_core::sampling::grid_line;
use fsq_core::verify::{parse_selection, run_suites};
use fsq_core::{Contour, Form, ImaginaryUnit, KernelPoint, Paravector, Side, SliceStem, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "fsq", version, about = "Slice monogenic kernels, F_n-kernels and their numerical verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite and write its report.
    ///
    /// Suites: algebra, forms, dirac, laplacian, constants, symbols,
    /// plancherel, hankel, scalars, cauchy, fsq, or all.
    Verify(VerifyArgs),
    /// Write kernel values along a line of points x as CSV.
    Dump(DumpArgs),
    /// Evaluate the F_n integral of a built-in stem along a line, with Dirac residuals.
    FsqMap(FsqMapArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    L,
    R,
    Both,
}

impl SideArg {
    fn sides(self) -> Vec<Side> {
        match self {
            SideArg::L => vec![Side::Left],
            SideArg::R => vec![Side::Right],
            SideArg::Both => Side::BOTH.to_vec(),
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: String,
    /// Dimensions: `3`, `1,2,4` or `1..8` (inclusive). Default: per suite.
    #[arg(long = "n")]
    dims: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Replace every tolerance with this value.
    #[arg(long)]
    tol: Option<f64>,
    /// Multiply every tolerance by this factor.
    #[arg(long, default_value_t = 1.0)]
    tol_scale: f64,
    /// Sample points per dimension. Default: per suite.
    #[arg(long)]
    points: Option<usize>,
    /// Contour nodes. Default: 512 for cauchy, 256 for fsq.
    #[arg(long)]
    nodes: Option<usize>,
    /// Pairing grid points per axis. Default: 1024 for n=1, 96 for n=2.
    #[arg(long = "grid-N")]
    grid_points: Option<usize>,
    /// Pairing grid half width. Default: 20 for n=1, 16 for n=2.
    #[arg(long = "grid-L")]
    grid_half_width: Option<f64>,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Evaluate grid and contour nodes in parallel.
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KernelArg {
    #[value(name = "Sinv", alias = "sinv")]
    Sinv,
    #[value(name = "Fn", alias = "fn")]
    Fn,
    #[value(name = "klambda")]
    KLambda,
}

/// Points `x = base + t e_axis`, `t` evenly spaced over the range.
#[derive(Args, Debug)]
struct LineArgs {
    #[arg(long = "n", default_value_t = 3)]
    n: usize,
    /// Base point, n+1 comma-separated coordinates. Default: the origin.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Coordinate varied along the line: x0, x1, ...
    #[arg(long, default_value = "x0")]
    grid_line: String,
    /// `lo,hi` of the line parameter.
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    /// Number of points on the line.
    #[arg(long, default_value_t = 21)]
    points: usize,
    #[arg(long, value_enum, default_value_t = SideArg::L)]
    side: SideArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DumpArgs {
    #[arg(value_enum)]
    kind: KernelArg,
    #[command(flatten)]
    line: LineArgs,
    /// The point s, n+1 comma-separated coordinates. Default: 2,0,...,0.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Exponent of k_lambda.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    lambda: f64,
    /// Form of S^-1: I or II.
    #[arg(long, default_value = "II")]
    form: String,
}

#[derive(Args, Debug)]
struct FsqMapArgs {
    /// Built-in stem: z^m (e.g. z^2), exp, one, conj.
    stem: String,
    #[command(flatten)]
    line: LineArgs,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    center: f64,
    #[arg(long, default_value_t = 2.0)]
    radius: f64,
    /// Imaginary unit of the contour plane, n comma-separated components. Default: e1.
    #[arg(long, allow_hyphen_values = true)]
    unit: Option<String>,
    #[arg(long, default_value_t = DEFAULT_NODES)]
    nodes: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    parallel: bool,
}

/// Failure classes mapped onto exit codes.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Dump(args) => cmd_dump(args),
        Command::FsqMap(args) => cmd_fsq_map(args),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `3`, `1,2,4` or the inclusive range `1..8`.
fn parse_dims(text: &str) -> anyhow::Result<Vec<usize>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi): (usize, usize) = (lo.trim().parse()?, hi.trim().parse()?);
        if lo > hi {
            bail!("empty dimension range {text}");
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad dimension '{t}'")))
        .collect()
}

fn parse_floats(text: &str) -> anyhow::Result<Vec<f64>> {
    text.split(',')
        .map(|t| t.trim().parse::<f64>().with_context(|| format!("bad number '{t}'")))
        .collect()
}

fn parse_point(text: Option<&str>, n: usize, default: impl FnOnce() -> Vec<f64>) -> anyhow::Result<Paravector> {
    let coords = match text {
        Some(t) => parse_floats(t)?,
        None => default(),
    };
    if coords.len() != n + 1 {
        bail!("expected {} coordinates for n = {n}, got {}", n + 1, coords.len());
    }
    Ok(Paravector::from_coords(&coords)?)
}

fn parse_axis(text: &str) -> anyhow::Result<usize> {
    text.strip_prefix('x')
        .and_then(|k| k.parse().ok())
        .with_context(|| format!("grid line must look like x0, x1, ..., got '{text}'"))
}

fn open_output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot write {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<Outcome> {
    let suites = parse_selection(&args.suite)?;
    let cfg = VerifyConfig {
        dims: args.dims.as_deref().map(parse_dims).transpose()?,
        seed: args.seed,
        tol: args.tol,
        tol_scale: args.tol_scale,
        points: args.points,
        nodes: args.nodes,
        grid_points: args.grid_points,
        grid_half_width: args.grid_half_width,
        parallel: args.parallel,
    };
    cfg.validate()?;
    let report = run_suites(&args.suite, &suites, &cfg)?;
    let mut out = open_output(args.out.as_deref())?;
    match args.format {
        Format::Json => report.write_json(&mut out)?,
        Format::Csv => report.write_csv(&mut out)?,
    }
    out.flush()?;
    let failed = report.failures().count();
    eprintln!(
        "{}: {} cases, {failed} failed, worst residual/tol {:.3e}",
        report.suite,
        report.cases.len(),
        report.worst_ratio()
    );
    for case in report.failures() {
        eprintln!("  FAIL {} (n={}): residual {:?}, tol {:e}", case.name, case.n, case.residual, case.tol);
    }
    Ok(if report.pass { Outcome::Pass } else { Outcome::Fail })
}

fn line_points(line: &LineArgs, default_range: (f64, f64)) -> anyhow::Result<Vec<Paravector>> {
    let n = line.n;
    let base = parse_point(line.x.as_deref(), n, || vec![0.0; n + 1])?;
    let (lo, hi) = match line.range.as_deref() {
        Some(r) => match parse_floats(r)?.as_slice() {
            [lo, hi] => (*lo, *hi),
            _ => bail!("range must be lo,hi"),
        },
        None => default_range,
    };
    Ok(grid_line(&base, parse_axis(&line.grid_line)?, lo, hi, line.points)?)
}

fn cmd_dump(args: DumpArgs) -> anyhow::Result<Outcome> {
    let n = args.line.n;
    let s = parse_point(args.s.as_deref(), n, || {
        let mut c = vec![0.0; n + 1];
        c[0] = 2.0;
        c
    })?;
    let form = match args.form.as_str() {
        "I" => Form::I,
        "II" => Form::II,
        other => bail!("form must be I or II, got '{other}'"),
    };
    let kind = match args.kind {
        KernelArg::Sinv => KernelKind::Sinv(form),
        KernelArg::Fn => KernelKind::Fn,
        KernelArg::KLambda => KernelKind::KLambda(args.lambda),
    };
    let points = line_points(&args.line, (-1.0, 1.0))?
        .into_iter()
        .map(|x| KernelPoint::new(s.clone(), x))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for side in args.line.side.sides() {
        rows.extend(kernel_rows(kind, side, &points));
    }
    let mut out = open_output(args.line.out.as_deref())?;
    write_kernel_csv(&mut out, n, &rows)?;
    out.flush()?;
    Ok(Outcome::Pass)
}

fn cmd_fsq_map(args: FsqMapArgs) -> anyhow::Result<Outcome> {
    let n = args.line.n;
    let stem = SliceStem::builtin(&args.stem, n)?;
    let unit = match args.unit.as_deref() {
        Some(u) => ImaginaryUnit::new(parse_floats(u)?)?,
        None => ImaginaryUnit::axis(n, 1)?,
    };
    if unit.n() != n {
        bail!("unit needs {n} components, got {}", unit.n());
    }
    let ct = Contour::new(args.center, args.radius, unit, args.nodes)?;
    let points = line_points(&args.line, (-0.5, 0.5))?;
    let mut out = open_output(args.line.out.as_deref())?;
    let samples: Vec<_> = args
        .line
        .side
        .sides()
        .into_iter()
        .flat_map(|side| fsq_map(&stem, &points, &ct, side, args.parallel))
        .collect();
    match args.format {
        Format::Csv => write_fsq_csv(&mut out, &stem, &samples)?,
        Format::Json => {
            let doc = serde_json::json!({"stem": stem.name(), "n": n, "samples": samples});
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    let failed = samples.iter().filter(|s| s.value.is_err()).count();
    out.flush()?;
    if failed > 0 {
        eprintln!("{failed} point(s) could not be evaluated");
        return Ok(Outcome::Fail);
    }
    Ok(Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_lists() {
        assert_eq!(parse_dims("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_dims("1..=2").unwrap(), vec![1, 2]);
        assert_eq!(parse_dims("2,5").unwrap(), vec![2, 5]);
        assert!(parse_dims("4..1").is_err());
        assert!(parse_dims("a").is_err());
    }

    #[test]
    fn axes() {
        assert_eq!(parse_axis("x3").unwrap(), 3);
        assert!(parse_axis("y1").is_err());
    }
}
