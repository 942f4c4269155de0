//! `coulomb-kit` command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error, 4 verification
//! failure (`verify` only), 5 I/O error.

mod grid;
mod table;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::coulomb::{
    closed_amplitude, differential_cross_section, params_from_physical, rutherford_cross_section, s_matrix,
    PhysicalParams,
};
use crate::summation::{
    delta_kernel_demo, series_amplitude, series_amplitude_report, unregularized_partial_sums, Damping, SummationConfig,
};
use crate::Error;

pub use grid::{AngleGrid, Spacing};
pub use table::{emit_table, format_float, Cell, OutputFormat, Table};

/// Caps the number of worker threads used for grid sweeps.
pub const THREADS_ENV: &str = "COULOMB_KIT_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;
pub const EXIT_IO: i32 = 5;

const COLUMNS_HELP: &str = "\
CSV columns by command:
  amplitude      theta,re_f,im_f,abs_f_sq,method
  cross-section  theta,dsigma_domega,rutherford
  phase-shifts   l,delta,re_S,im_S
  partial-sum    n,re_f,im_f
  kernel-demo    x,kernel
  verify         theta,re_series,im_series,re_closed,im_closed,abs_error,rel_error

Angles are in radians unless --degrees is given.
Set COULOMB_KIT_THREADS to cap the worker count.";

#[derive(Debug, Parser)]
#[command(name = "coulomb-kit", version, about = "Coulomb scattering amplitude: partial-wave series and closed form", after_help = COLUMNS_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scattering amplitude on an angle grid.
    #[command(allow_negative_numbers = true)]
    Amplitude {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        summation: SummationArgs,
        /// Closed form or regularized partial-wave series.
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Unregularized partial sums of the amplitude series at one angle.
    #[command(allow_negative_numbers = true)]
    PartialSum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        degrees: bool,
        /// Highest partial wave.
        #[arg(long, default_value_t = 200)]
        lmax: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Phase shifts and S-matrix elements for l = 0..=lmax.
    #[command(allow_negative_numbers = true)]
    PhaseShifts {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 20)]
        lmax: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Differential cross section |f|^2 and the Rutherford formula.
    #[command(allow_negative_numbers = true)]
    CrossSection {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Damped completeness kernel sum_l (2l+1) e^{-eps l} P_l(x) on [-1, 1].
    #[command(allow_negative_numbers = true)]
    KernelDemo {
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 200)]
        lmax: usize,
        /// Number of equally spaced abscissae in [-1, 1].
        #[arg(long, default_value_t = 101)]
        count: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the regularized series with the closed form at one angle.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        degrees: bool,
        #[command(flatten)]
        summation: SummationArgs,
        /// Largest accepted relative error.
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Amplitude { .. } => "amplitude",
            Command::PartialSum { .. } => "partial-sum",
            Command::PhaseShifts { .. } => "phase-shifts",
            Command::CrossSection { .. } => "cross-section",
            Command::KernelDemo { .. } => "kernel-demo",
            Command::Verify { .. } => "verify",
        }
    }

    fn output(&self) -> &OutputArgs {
        match self {
            Command::Amplitude { output, .. }
            | Command::PartialSum { output, .. }
            | Command::PhaseShifts { output, .. }
            | Command::CrossSection { output, .. }
            | Command::KernelDemo { output, .. }
            | Command::Verify { output, .. } => output,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Series,
}

/// Either `--k/--beta` or `--mu/--kappa/--E/--hbar`.
#[derive(Debug, Args)]
struct ParamArgs {
    /// Wavenumber (defaults to 1 when only --beta is given).
    #[arg(long)]
    k: Option<f64>,
    /// Dimensionless Coulomb strength; positive is attractive.
    #[arg(long)]
    beta: Option<f64>,
    /// Reduced mass.
    #[arg(long)]
    mu: Option<f64>,
    /// Coupling of the potential -kappa/r.
    #[arg(long)]
    kappa: Option<f64>,
    /// Incident energy.
    #[arg(long = "E")]
    energy: Option<f64>,
    /// Reduced Planck constant (defaults to 1).
    #[arg(long)]
    hbar: Option<f64>,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long)]
    theta_min: Option<f64>,
    #[arg(long)]
    theta_max: Option<f64>,
    #[arg(long, default_value_t = 64)]
    count: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Linear)]
    spacing: Spacing,
    /// Single angle; replaces the grid flags.
    #[arg(long, conflicts_with_all = ["theta_min", "theta_max"])]
    theta: Option<f64>,
    /// Interpret angles as degrees.
    #[arg(long)]
    degrees: bool,
}

#[derive(Debug, Args)]
struct SummationArgs {
    /// Truncation order; defaults to the value that damps the smallest eps to 1e-8.
    #[arg(long)]
    lmax: Option<usize>,
    #[arg(long, default_value_t = 0.1)]
    eps_max: f64,
    #[arg(long, default_value_t = 0.5)]
    eps_ratio: f64,
    #[arg(long, default_value_t = 6)]
    eps_levels: usize,
    #[arg(long, default_value_t = 4)]
    extrap_order: usize,
    #[arg(long, value_enum, default_value_t = DampingArg::Exponential)]
    damping: DampingArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DampingArg {
    Exponential,
    HeatKernel,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Output file; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Io(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI; `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let echoed: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();

    let outcome = execute(&cli.command, &echoed).and_then(|(table, verdict)| {
        let output = cli.command.output();
        write_table(&table, output, out)?;
        Ok(verdict)
    });

    match outcome {
        Ok(None) => EXIT_OK,
        Ok(Some(verdict)) => {
            let _ = writeln!(err, "{}", verdict.summary());
            if verdict.passed {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
        Err(e) => {
            let _ = writeln!(err, "coulomb-kit: {}", e.message());
            e.exit_code()
        }
    }
}

struct Verdict {
    abs_error: f64,
    rel_error: f64,
    tol: f64,
    passed: bool,
}

impl Verdict {
    fn summary(&self) -> String {
        format!(
            "verify: abs_error = {} rel_error = {} tol = {} -> {}",
            format_float(self.abs_error),
            format_float(self.rel_error),
            format_float(self.tol),
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

fn write_table(table: &Table, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let io_err = |e: io::Error| CliError::Io(format!("write failed: {e}"));
    match &output.output {
        Some(path) => {
            let file =
                File::create(path).map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            emit_table(table, output.format, &mut w).map_err(io_err)
        }
        None => emit_table(table, output.format, stdout).map_err(io_err),
    }
}

fn execute(command: &Command, argv: &[String]) -> Result<(Table, Option<Verdict>), CliError> {
    let threads = thread_count()?;
    let mut meta = Map::new();
    meta.insert("command".into(), command.name().into());
    meta.insert("argv".into(), json!(argv));
    meta.insert("format".into(), command.output().format.as_str().into());

    let (mut table, verdict) = match command {
        Command::Amplitude {
            params,
            grid,
            summation,
            method,
            ..
        } => {
            let p = resolve_params(params, &mut meta)?;
            let angles = resolve_grid(grid, &mut meta)?;
            let cfg = resolve_summation(summation, &mut meta)?;
            meta.insert("method".into(), format!("{method:?}").to_lowercase().into());
            let results = par_map(threads, &angles, |&theta| match method {
                Method::Closed => closed_amplitude(theta, &p),
                Method::Series => series_amplitude(theta, &p, &cfg),
            })?;
            let mut t = Table::new(&["theta", "re_f", "im_f", "abs_f_sq", "method"]);
            for r in results {
                t.push(vec![
                    r.theta.into(),
                    r.f.re.into(),
                    r.f.im.into(),
                    r.f.norm_sqr().into(),
                    r.method.as_str().into(),
                ]);
            }
            (t, None)
        }
        Command::CrossSection { params, grid, .. } => {
            let p = resolve_params(params, &mut meta)?;
            let angles = resolve_grid(grid, &mut meta)?;
            let rows = par_map(threads, &angles, |&theta| {
                Ok((
                    theta,
                    differential_cross_section(theta, &p)?,
                    rutherford_cross_section(theta, &p)?,
                ))
            })?;
            let mut t = Table::new(&["theta", "dsigma_domega", "rutherford"]);
            for (theta, d, r) in rows {
                t.push(vec![theta.into(), d.into(), r.into()]);
            }
            (t, None)
        }
        Command::PhaseShifts { params, lmax, .. } => {
            let p = resolve_params(params, &mut meta)?;
            meta.insert("lmax".into(), (*lmax).into());
            let ls: Vec<usize> = (0..=*lmax).collect();
            let waves = par_map(threads, &ls, |&l| s_matrix(l, &p))?;
            let mut t = Table::new(&["l", "delta", "re_S", "im_S"]);
            for w in waves {
                t.push(vec![w.l.into(), w.delta.into(), w.s.re.into(), w.s.im.into()]);
            }
            (t, None)
        }
        Command::PartialSum {
            params,
            theta,
            degrees,
            lmax,
            ..
        } => {
            let p = resolve_params(params, &mut meta)?;
            let theta = to_radians(*theta, *degrees);
            meta.insert("theta".into(), theta.into());
            meta.insert("lmax".into(), (*lmax).into());
            let sums = unregularized_partial_sums(theta, &p, *lmax)?;
            let mut t = Table::new(&["n", "re_f", "im_f"]);
            for (n, s) in sums.iter().enumerate() {
                t.push(vec![n.into(), s.re.into(), s.im.into()]);
            }
            (t, None)
        }
        Command::KernelDemo { eps, lmax, count, .. } => {
            if *count < 2 {
                return Err(CliError::Usage("kernel-demo needs --count >= 2".into()));
            }
            meta.insert("eps".into(), (*eps).into());
            meta.insert("lmax".into(), (*lmax).into());
            meta.insert("count".into(), (*count).into());
            let xs: Vec<f64> = (0..*count)
                .map(|i| {
                    if i + 1 == *count {
                        1.0
                    } else {
                        -1.0 + 2.0 * i as f64 / (*count - 1) as f64
                    }
                })
                .collect();
            let values = delta_kernel_demo(&xs, *eps, *lmax)?;
            let mut t = Table::new(&["x", "kernel"]);
            for (x, v) in xs.iter().zip(values) {
                t.push(vec![(*x).into(), v.into()]);
            }
            (t, None)
        }
        Command::Verify {
            params,
            theta,
            degrees,
            summation,
            tol,
            ..
        } => {
            if !(tol.is_finite() && *tol >= 0.0) {
                return Err(CliError::Usage(format!("--tol {tol} must be finite and >= 0")));
            }
            let p = resolve_params(params, &mut meta)?;
            let theta = to_radians(*theta, *degrees);
            meta.insert("theta".into(), theta.into());
            meta.insert("tol".into(), (*tol).into());
            let cfg = resolve_summation(summation, &mut meta)?.with_comparison(true);
            let (series, report) = series_amplitude_report(theta, &p, &cfg)?;
            let closed = report.reference().unwrap_or(Complex64::new(0.0, 0.0));
            let abs_error = report.abs_error().unwrap_or(f64::NAN);
            let rel_error = if closed.norm() > 0.0 {
                abs_error / closed.norm()
            } else {
                abs_error
            };
            let mut t = Table::new(&[
                "theta",
                "re_series",
                "im_series",
                "re_closed",
                "im_closed",
                "abs_error",
                "rel_error",
            ]);
            t.push(vec![
                theta.into(),
                series.f.re.into(),
                series.f.im.into(),
                closed.re.into(),
                closed.im.into(),
                abs_error.into(),
                rel_error.into(),
            ]);
            let verdict = Verdict {
                abs_error,
                rel_error,
                tol: *tol,
                passed: rel_error <= *tol,
            };
            (t, Some(verdict))
        }
    };
    table.meta = meta;
    Ok((table, verdict))
}

fn resolve_params(args: &ParamArgs, meta: &mut Map<String, Value>) -> Result<PhysicalParams, CliError> {
    let direct = args.k.is_some() || args.beta.is_some();
    let physical = args.mu.is_some() || args.kappa.is_some() || args.energy.is_some() || args.hbar.is_some();
    let p = match (direct, physical) {
        (true, true) => {
            return Err(CliError::Usage(
                "give either --k/--beta or --mu/--kappa/--E/--hbar, not both".into(),
            ))
        }
        (false, false) => {
            return Err(CliError::Usage(
                "missing parameters: give --beta (and --k) or --mu/--kappa/--E".into(),
            ))
        }
        (true, false) => {
            let beta = args
                .beta
                .ok_or_else(|| CliError::Usage("--beta is required with --k".into()))?;
            PhysicalParams::new(args.k.unwrap_or(1.0), beta)?
        }
        (false, true) => {
            let (Some(mu), Some(kappa), Some(energy)) = (args.mu, args.kappa, args.energy) else {
                return Err(CliError::Usage("--mu, --kappa and --E are all required".into()));
            };
            params_from_physical(mu, kappa, energy, args.hbar.unwrap_or(1.0))?
        }
    };
    meta.insert("k".into(), p.k().into());
    meta.insert("beta".into(), p.beta().into());
    Ok(p)
}

fn to_radians(angle: f64, degrees: bool) -> f64 {
    if degrees {
        angle.to_radians()
    } else {
        angle
    }
}

fn resolve_grid(args: &GridArgs, meta: &mut Map<String, Value>) -> Result<Vec<f64>, CliError> {
    let conv = |v: f64| to_radians(v, args.degrees);
    let grid = match (args.theta, args.theta_min, args.theta_max) {
        (Some(theta), _, _) => AngleGrid::new(conv(theta), conv(theta), 1, Spacing::Linear)?,
        (None, Some(lo), Some(hi)) => AngleGrid::new(conv(lo), conv(hi), args.count, args.spacing)?,
        _ => {
            return Err(CliError::Usage(
                "give --theta or both --theta-min and --theta-max".into(),
            ))
        }
    };
    meta.insert(
        "grid".into(),
        json!({
            "theta_min": grid.theta_min(),
            "theta_max": grid.theta_max(),
            "count": grid.count(),
            "spacing": grid.spacing().as_str(),
        }),
    );
    Ok(grid.angles())
}

fn resolve_summation(args: &SummationArgs, meta: &mut Map<String, Value>) -> Result<SummationConfig, CliError> {
    let damping = match args.damping {
        DampingArg::Exponential => Damping::Exponential,
        DampingArg::HeatKernel => Damping::HeatKernel,
    };
    let mut cfg = SummationConfig::geometric(args.eps_max, args.eps_ratio, args.eps_levels, args.extrap_order)?
        .with_damping(damping);
    if let Some(l) = args.lmax {
        cfg = cfg.with_l_max(l)?;
    }
    meta.insert(
        "summation".into(),
        json!({
            "lmax": cfg.l_max(),
            "epsilons": cfg.epsilons(),
            "extrapolation_order": cfg.extrapolation_order(),
            "damping": cfg.damping().as_str(),
            "tail_bounded": cfg.is_tail_bounded(),
        }),
    );
    Ok(cfg)
}

fn thread_count() -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be an integer >= 1, got {v:?}"
            ))),
        },
    }
}

// Order of the output follows the input regardless of scheduling.
fn par_map<T, R, F>(threads: usize, items: &[T], f: F) -> Result<Vec<R>, CliError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> crate::Result<R> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Io(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| items.par_iter().map(&f).collect::<crate::Result<Vec<R>>>())?)
}
