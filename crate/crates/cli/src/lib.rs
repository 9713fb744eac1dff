//! Command-line front end for `strip-starlike`.
//!
//! Commands print JSON by default and CSV with `--format csv`. Exit codes:
//! 0 on success, 2 on invalid input, 3 when a computation fails (no sign
//! change, bound violated, branch hazard).

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use strip_starlike::factory::{extremal, from_schwarz, NormalizedFunction, SchwarzFunction};
use strip_starlike::kernel::{mapping_point, Alpha};
use strip_starlike::membership::{test_membership, DEFAULT_SAMPLES, MAX_RADIUS};
use strip_starlike::radius::{
    reference_problems, solve, RadiusProblem, RootOptions, TargetClass, REFERENCE_RADII,
};
use strip_starlike::Complex64;

pub mod format;
pub mod parse;

use format::{
    boundary_csv, table_csv, to_json, BoundaryPoint, BoundsDoc, CoefficientsDoc, MembershipDoc,
    RadiusDoc, SeriesDoc, TableRow,
};
use parse::{parse_alpha, parse_predicate, resolve_order, ORDER_ENV};

/// Agreement required between a computed radius and the published value.
pub const TABLE_TOLERANCE: f64 = 1e-4;

/// Rounding allowance when flagging `|a_n| <= 1`.
pub const COEFFICIENT_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn validation(message: String) -> Self {
        Self { code: 2, message }
    }

    pub fn numerical(message: String) -> Self {
        Self { code: 3, message }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<strip_starlike::Error> for CliError {
    fn from(e: strip_starlike::Error) -> Self {
        if e.is_numerical() {
            Self::numerical(e.to_string())
        } else {
            Self::validation(e.to_string())
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    /// strongly starlike of order gamma
    Ss,
    /// parabolic starlike
    Ps,
    /// lemniscate of Bernoulli
    Sl,
}

#[derive(Debug, Parser)]
#[command(
    name = "strip-starlike",
    version,
    about = "Radii, coefficients and membership tests for the strip class"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce the alpha = pi/2 inclusion radii.
    Table1 {
        #[command(flatten)]
        output: Output,
    },
    /// Solve one inclusion radius.
    Radius {
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Order of strong starlikeness, required for `ss`.
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, default_value_t = RootOptions::default().scan_step)]
        scan_step: f64,
        #[arg(long, default_value_t = RootOptions::default().tol)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Taylor coefficients of the extremal member or of the member built
    /// from a Schwarz polynomial.
    Coeffs {
        #[arg(long)]
        alpha: String,
        /// Defaults to $STRIP_STARLIKE_ORDER, then 64.
        #[arg(long)]
        order: Option<usize>,
        /// Series JSON file holding the Schwarz polynomial.
        #[arg(long)]
        schwarz: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Sample zf'/f of a normalized series against a region.
    Membership {
        /// Series JSON file with c0 = 0 and c1 = 1.
        #[arg(long)]
        input: PathBuf,
        /// strip:A, starlike:B, strongly-starlike:G, parabolic or lemniscate.
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Image of |z| = r under 1 + F, the extremal zf'/f, as a closed curve.
    Boundary {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Sharp bounds on zf'/f over |z| = r.
    Bounds {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        r: f64,
        #[command(flatten)]
        output: Output,
    },
}

/// Process-level inputs besides the arguments.
#[derive(Clone, Debug, Default)]
pub struct Environment {
    pub order: Option<String>,
}

impl Environment {
    pub fn from_process() -> Self {
        Self {
            order: std::env::var(ORDER_ENV).ok(),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Usage errors go to `err` with code 2.
pub fn run_with<I, T>(args: I, env: &Environment, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match run(&cli.command, env) {
        Ok(Emit { text, path }) => {
            let written = match path {
                Some(p) => std::fs::write(&p, text).map_err(|e| {
                    CliError::validation(format!("cannot write {}: {e}", p.display()))
                }),
                None => out
                    .write_all(text.as_bytes())
                    .map_err(|e| CliError::validation(e.to_string())),
            };
            match written {
                Ok(()) => 0,
                Err(e) => report(err, &e),
            }
        }
        Err(e) => report(err, &e),
    }
}

fn report(err: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(err, "error: {e}");
    e.code
}

/// Rendered output and where it goes.
#[derive(Clone, Debug, PartialEq)]
pub struct Emit {
    pub text: String,
    pub path: Option<PathBuf>,
}

fn emit(output: &Output, json: impl FnOnce() -> String, csv: impl FnOnce() -> String) -> Emit {
    let text = match output.format {
        OutputFormat::Json => json(),
        OutputFormat::Csv => csv(),
    };
    Emit {
        text,
        path: output.out.clone(),
    }
}

pub fn run(command: &Command, env: &Environment) -> Result<Emit, CliError> {
    match command {
        Command::Table1 { output } => {
            let rows = table1()?;
            Ok(emit(output, || to_json(&rows), || table_csv(&rows)))
        }
        Command::Radius {
            alpha,
            class,
            gamma,
            scan_step,
            tol,
            output,
        } => {
            let alpha = parse_alpha(alpha)?;
            let target = match (class, gamma) {
                (ClassArg::Ss, Some(g)) => TargetClass::strongly_starlike(*g)?,
                (ClassArg::Ss, None) => {
                    return Err(CliError::validation("--class ss needs --gamma".into()))
                }
                (_, Some(_)) => {
                    return Err(CliError::validation(
                        "--gamma applies only to --class ss".into(),
                    ))
                }
                (ClassArg::Ps, None) => TargetClass::Parabolic,
                (ClassArg::Sl, None) => TargetClass::Lemniscate,
            };
            let opts = RootOptions {
                scan_step: *scan_step,
                tol: *tol,
            };
            let doc = RadiusDoc::from(&solve(RadiusProblem::new(target, alpha), opts)?);
            Ok(emit(output, || to_json(&doc), || doc.csv()))
        }
        Command::Coeffs {
            alpha,
            order,
            schwarz,
            output,
        } => {
            let alpha = parse_alpha(alpha)?;
            let order = resolve_order(*order, env.order.as_deref())?;
            let f = match schwarz {
                None => extremal(alpha, order)?,
                Some(path) => {
                    let w = SchwarzFunction::new(read_series(path)?.to_series()?)?;
                    from_schwarz(alpha, &w, order)?
                }
            };
            let doc = CoefficientsDoc::new(&f, alpha, COEFFICIENT_SLACK);
            Ok(emit(output, || to_json(&doc), || doc.csv()))
        }
        Command::Membership {
            input,
            predicate,
            r,
            samples,
            output,
        } => {
            let predicate = parse_predicate(predicate)?;
            let f = NormalizedFunction::new(read_series(input)?.to_series()?)?;
            if !(*r > 0.0 && *r <= MAX_RADIUS) {
                return Err(CliError::validation(format!(
                    "--r must lie in (0, {MAX_RADIUS}], got {r}"
                )));
            }
            let doc = MembershipDoc::from(&test_membership(&f, predicate, *r, *samples)?);
            Ok(emit(output, || to_json(&doc), || doc.csv()))
        }
        Command::Boundary {
            alpha,
            r,
            samples,
            out,
            format,
        } => {
            let alpha = parse_alpha(alpha)?;
            check_radius(*r, false)?;
            if *samples == 0 {
                return Err(CliError::validation("--samples must be positive".into()));
            }
            let points = boundary_curve(alpha, *r, *samples)?;
            let output = Output {
                format: *format,
                out: Some(out.clone()),
            };
            Ok(emit(
                &output,
                || {
                    to_json(&serde_json::json!({
                        "alpha": format::sig12(alpha.value()),
                        "r": format::sig12(*r),
                        "samples": samples,
                        "points": points,
                    }))
                },
                || boundary_csv(&points),
            ))
        }
        Command::Bounds { alpha, r, output } => {
            let alpha = parse_alpha(alpha)?;
            check_radius(*r, true)?;
            let doc = BoundsDoc::new(alpha, *r);
            Ok(emit(output, || to_json(&doc), || doc.csv()))
        }
    }
}

fn check_radius(r: f64, allow_zero: bool) -> Result<(), CliError> {
    let ok = if allow_zero {
        (0.0..1.0).contains(&r)
    } else {
        r > 0.0 && r < 1.0
    };
    if ok {
        Ok(())
    } else {
        Err(CliError::validation(format!(
            "--r must lie in {}, 1), got {r}",
            if allow_zero { "[0" } else { "(0" }
        )))
    }
}

fn read_series(path: &Path) -> Result<SeriesDoc, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("cannot read {}: {e}", path.display())))?;
    SeriesDoc::parse(&text)
}

/// `K + 1` samples of `1 + F(r e^{i theta})`, `theta = 2 pi k / K`; the last
/// point repeats the first.
pub fn boundary_curve(
    alpha: Alpha,
    r: f64,
    samples: usize,
) -> Result<Vec<BoundaryPoint>, CliError> {
    (0..=samples)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / samples as f64;
            let q = 1.0 + mapping_point(alpha, Complex64::from_polar(r, theta))?;
            Ok(BoundaryPoint::new(theta, q))
        })
        .collect()
}

/// Solves the three reference problems concurrently; rows keep the
/// reference order.
pub fn table1() -> Result<Vec<TableRow>, CliError> {
    let problems = reference_problems();
    let solutions = std::thread::scope(|s| {
        let handles: Vec<_> = problems
            .iter()
            .map(|&p| s.spawn(move || solve(p, RootOptions::default())))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver thread panicked"))
            .collect::<Vec<_>>()
    });
    solutions
        .into_iter()
        .zip(REFERENCE_RADII)
        .map(|(sol, reference)| {
            let sol = sol?;
            Ok(TableRow {
                matches_paper: (sol.radius - reference).abs() < TABLE_TOLERANCE,
                solution: RadiusDoc::from(&sol),
                reference,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("strip-starlike").chain(args.iter().copied());
        let code = run_with(argv, &Environment::default(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn error_codes() {
        let numeric: CliError = strip_starlike::Error::NoSignChange.into();
        assert_eq!(numeric.code, 3);
        let invalid: CliError = strip_starlike::Error::NotNormalized.into();
        assert_eq!(invalid.code, 2);
    }

    #[test]
    fn table_rows_match() {
        let rows = table1().unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.matches_paper));
        assert_eq!(rows[0].solution.kind, "ss");
        assert_eq!(rows[2].solution.kind, "sl");
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, out, err) = exec(&["radius", "--alpha", "pi/2"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = exec(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("table1"));
    }

    #[test]
    fn gamma_rules() {
        assert_eq!(exec(&["radius", "--alpha", "pi/2", "--class", "ss"]).0, 2);
        assert_eq!(
            exec(&["radius", "--alpha", "pi/2", "--class", "ps", "--gamma", "0.5"]).0,
            2
        );
        assert_eq!(
            exec(&["radius", "--alpha", "pi/2", "--class", "ss", "--gamma", "1"]).0,
            2
        );
    }

    #[test]
    fn radius_range_checks() {
        assert_eq!(exec(&["bounds", "--alpha", "pi/2", "--r", "1"]).0, 2);
        assert_eq!(exec(&["bounds", "--alpha", "pi/2", "--r", "-0.1"]).0, 2);
        assert_eq!(exec(&["bounds", "--alpha", "pi/2", "--r", "0"]).0, 0);
    }

    #[test]
    fn boundary_closes() {
        let pts = boundary_curve(Alpha::right_angle(), 0.5, 16).unwrap();
        assert_eq!(pts.len(), 17);
        assert!((pts[0].re_q - pts[16].re_q).abs() < 1e-12);
        assert!((pts[0].im_q - pts[16].im_q).abs() < 1e-12);
    }
}
