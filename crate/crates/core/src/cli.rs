//! Command-line front end. `run_cli` does all the work and returns the exit
//! code with both output streams, so the binary stays a thin shim.
//!
//! Exit codes: 0 for answers (a `NoSolution` classification is an answer),
//! 2 for usage errors, 3 for numerical failures and failed checks.

use crate::catalog::{self, log_grid, Params, Tier, ZeroFreeReport};
use crate::error::Error;
use crate::quadrature::{ExtendedReal, DEFAULT_REL_TOL};
use crate::solver::{classify, Outcome, SolveOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Environment variable overriding the quadrature relative tolerance.
pub const TOL_ENV: &str = "STIELTJES_TOL";

#[derive(Parser, Debug)]
#[command(name = "stieltjes", about = "Classify and solve S[φ](z) - bz - c = 0 for catalog densities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog entries with tier and parameter domain.
    List {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classify and, when a root exists, solve for it.
    Solve(EquationArgs),
    /// Existence test only.
    Classify(EquationArgs),
    /// Closed form against quadrature on a log grid.
    Validate {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 20)]
        grid: usize,
        #[arg(long, default_value_t = 0.1)]
        lo: f64,
        #[arg(long, default_value_t = 10.0)]
        hi: f64,
        /// Largest acceptable relative gap.
        #[arg(long, default_value_t = 1e-7)]
        max_error: f64,
    },
    /// Scan the claimed zero-free sector on a polar grid.
    Zerofree {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 64)]
        angles: usize,
        #[arg(long, default_value_t = 20)]
        radii: usize,
        #[arg(long, default_value_t = 0.05)]
        r_min: f64,
        #[arg(long, default_value_t = 20.0)]
        r_max: f64,
        /// Cap on |arg z|/π, below the claimed half-angle.
        #[arg(long)]
        max_arg: Option<f64>,
    },
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long)]
    entry: String,
    /// Entry parameter as key=value; repeatable.
    #[arg(long = "param", value_parser = parse_param)]
    params: Vec<(String, f64)>,
    /// Fill parameters not given with the entry's defaults.
    #[arg(long)]
    defaults: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct EquationArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
    #[arg(long, allow_negative_numbers = true)]
    c: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn parse_param(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    let v: f64 = v.trim().parse().map_err(|e| format!("{k}: {e}"))?;
    Ok((k.trim().to_string(), v))
}

/// Report of `solve` and `classify`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquationReport {
    pub entry: String,
    pub params: Params,
    pub b: f64,
    pub c: f64,
    pub classification: Outcome,
    pub reason: Option<String>,
    pub root: Option<f64>,
    pub residual: Option<f64>,
    /// Upper end of the root bracket; `"inf"` when unbounded.
    pub bound: Option<ExtendedReal>,
    /// `∫ φ/ζ` for the entry; `"inf"` when divergent.
    pub critical_value: ExtendedReal,
    pub table_check: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub entry: String,
    pub params: Params,
    pub grid: Vec<f64>,
    pub max_rel_error: f64,
    pub max_error: f64,
    pub critical_formula: ExtendedReal,
    pub critical_quadrature: ExtendedReal,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ListRow {
    pub id: String,
    pub tier: u8,
    pub params: Vec<String>,
    pub domain: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        CliOutput { code, stdout, stderr }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParams(_)
        | Error::BadParameter(_)
        | Error::NotFound(_)
        | Error::TierMismatch(_)
        | Error::NoClaim(_)
        | Error::DomainError(_)
        | Error::RejectedDensity(_) => EXIT_USAGE,
        _ => EXIT_NUMERICAL,
    }
}

/// Errors go to stderr; in json mode stdout also carries `{"error", "exit_code"}`
/// so that every invocation yields a parseable document.
fn from_error(e: Error, format: Format) -> CliOutput {
    let code = exit_code(&e);
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(&ErrorReport { error: e.to_string(), exit_code: code }).expect("reports serialise") + "\n",
        Format::Text => String::new(),
    };
    CliOutput::fail(code, stdout, format!("error: {e}\n"))
}

fn rel_tol(env: Option<&str>) -> Result<f64, String> {
    match env {
        None => Ok(DEFAULT_REL_TOL),
        Some(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t < 1.0 => Ok(t),
            _ => Err(format!("{TOL_ENV} must be a number in (0, 1), got {s:?}")),
        },
    }
}

fn resolve_params(t: &Target) -> Result<Params, Error> {
    let e = catalog::entry(&t.entry)?;
    let mut p = if t.defaults { e.default_params() } else { Params::new() };
    for (k, v) in &t.params {
        p.insert(k.clone(), *v);
    }
    e.check_params(&p)?;
    Ok(p)
}

fn render<T: Serialize>(value: &T, format: Format, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialise") + "\n",
        Format::Text => text(value),
    }
}

fn fmt_ext(v: &ExtendedReal) -> String {
    match v.finite() {
        Some(x) => format!("{x}"),
        None => "inf".into(),
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or("-".into(), |x| format!("{x}"))
}

fn equation_text(r: &EquationReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!(
        "entry           {}\nparams          {}\nb, c            {}, {}\nclassification  {:?}{}\nroot            {}\nresidual        {}\nbound           {}\ncritical value  {}\ntable check     {}\n",
        r.entry,
        params.join(" "),
        r.b,
        r.c,
        r.classification,
        r.reason.as_ref().map_or(String::new(), |s| format!(" ({s})")),
        fmt_opt(r.root),
        fmt_opt(r.residual),
        r.bound.as_ref().map_or("-".into(), fmt_ext),
        fmt_ext(&r.critical_value),
        if r.table_check { "ok" } else { "MISMATCH" },
    )
}

fn check_coefficients(args: &EquationArgs) -> Result<(), Error> {
    if !(args.b >= 0.0) || !args.b.is_finite() || !args.c.is_finite() {
        return Err(Error::BadParameter(format!("need finite b >= 0 and finite c, got b={}, c={}", args.b, args.c)));
    }
    Ok(())
}

fn solve(args: &EquationArgs, tol: f64) -> Result<EquationReport, Error> {
    check_coefficients(args)?;
    let p = resolve_params(&args.target)?;
    let opts = SolveOptions { rel_tol: tol, ..SolveOptions::default() };
    let r = catalog::solve_entry_with(&args.target.entry, &p, args.b, args.c, &opts)?;
    let e = catalog::entry(&args.target.entry)?;
    let cls = r.report.classification;
    Ok(EquationReport {
        entry: r.entry,
        params: r.params,
        b: args.b,
        c: args.c,
        classification: cls.outcome,
        reason: cls.reason.map(|x| x.as_str().to_string()),
        root: r.report.root,
        residual: r.report.residual,
        bound: cls.is_unique_root().then(|| bound_of(cls.hi)),
        critical_value: e.critical_formula(&p)?,
        table_check: r.table_check,
    })
}

fn bound_of(hi: f64) -> ExtendedReal {
    if hi.is_finite() {
        ExtendedReal::exact(hi)
    } else {
        ExtendedReal::PosInfinity
    }
}

fn classify_only(args: &EquationArgs) -> Result<EquationReport, Error> {
    check_coefficients(args)?;
    let p = resolve_params(&args.target)?;
    let e = catalog::entry(&args.target.entry)?;
    let mz = e.critical_formula(&p)?;
    let cls = classify(mz, args.b, args.c)?;
    let expected = e.expected_outcome(&p, args.b, args.c)?;
    Ok(EquationReport {
        entry: e.id.into(),
        params: p,
        b: args.b,
        c: args.c,
        classification: cls.outcome,
        reason: cls.reason.map(|x| x.as_str().to_string()),
        root: None,
        residual: None,
        bound: cls.is_unique_root().then(|| bound_of(cls.hi)),
        critical_value: mz,
        table_check: cls.outcome == expected,
    })
}

fn validate(t: &Target, n: usize, lo: f64, hi: f64, max_error: f64, tol: f64) -> Result<ValidateReport, Error> {
    let p = resolve_params(t)?;
    if n == 0 || !(lo > 0.0) || !(hi >= lo) || !hi.is_finite() {
        return Err(Error::BadParameter(format!("grid needs n >= 1 and 0 < lo <= hi < inf, got n={n}, [{lo}, {hi}]")));
    }
    let grid = log_grid(lo, hi, n);
    let err = catalog::cross_validate_with(&t.entry, &p, &grid, tol)?;
    let (formula, quadrature) = catalog::critical_check(&t.entry, &p)?;
    let critical_ok = match (formula, quadrature) {
        (ExtendedReal::PosInfinity, ExtendedReal::PosInfinity) => true,
        (ExtendedReal::Finite { value: a, .. }, ExtendedReal::Finite { value: b, .. }) => {
            (a - b).abs() <= max_error * (1.0 + a.abs())
        }
        _ => false,
    };
    Ok(ValidateReport {
        entry: t.entry.clone(),
        params: p,
        grid,
        max_rel_error: err,
        max_error,
        critical_formula: formula,
        critical_quadrature: quadrature,
        passed: err <= max_error && critical_ok,
    })
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run_cli<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(TOL_ENV).ok();
    run_cli_with_tol(argv, env.as_deref())
}

/// As [`run_cli`], with the tolerance override passed explicitly instead
/// of read from the environment.
pub fn run_cli_with_tol<I, S>(argv: I, tol_override: Option<&str>) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let msg = e.render().to_string();
            return if code == EXIT_OK { CliOutput::ok(msg) } else { CliOutput::fail(code, String::new(), msg) };
        }
    };
    let tol = match rel_tol(tol_override) {
        Ok(t) => t,
        Err(msg) => return CliOutput::fail(EXIT_USAGE, String::new(), format!("error: {msg}\n")),
    };
    match cli.command {
        Command::List { format } => {
            let rows: Vec<ListRow> = catalog::all_entries()
                .iter()
                .map(|e| ListRow {
                    id: e.id.into(),
                    tier: e.tier.number(),
                    params: e.param_names.iter().map(|s| s.to_string()).collect(),
                    domain: e.domain_text.into(),
                })
                .collect();
            CliOutput::ok(render(&rows, format, |rows| {
                rows.iter()
                    .map(|r| format!("{:<12} tier {}  {}\n", r.id, r.tier, r.domain))
                    .collect()
            }))
        }
        Command::Solve(args) => match solve(&args, tol) {
            Ok(r) => CliOutput::ok(render(&r, args.target.format, equation_text)),
            Err(e) => from_error(e, args.target.format),
        },
        Command::Classify(args) => match classify_only(&args) {
            Ok(r) => CliOutput::ok(render(&r, args.target.format, equation_text)),
            Err(e) => from_error(e, args.target.format),
        },
        Command::Validate { target, grid, lo, hi, max_error } => {
            match catalog::entry(&target.entry) {
                Ok(e) if e.tier == Tier::QuadratureOnly => return from_error(Error::TierMismatch(e.id.into()), target.format),
                Err(e) => return from_error(e, target.format),
                _ => {}
            }
            match validate(&target, grid, lo, hi, max_error, tol) {
                Ok(r) => {
                    let out = render(&r, target.format, |r| {
                        format!(
                            "entry            {}\ngrid             {} points on [{}, {}]\nmax rel error    {:e}\ncritical value   {} (quadrature {})\nverdict          {}\n",
                            r.entry,
                            r.grid.len(),
                            lo,
                            hi,
                            r.max_rel_error,
                            fmt_ext(&r.critical_formula),
                            fmt_ext(&r.critical_quadrature),
                            if r.passed { "pass" } else { "FAIL" },
                        )
                    });
                    if r.passed {
                        CliOutput::ok(out)
                    } else {
                        CliOutput::fail(EXIT_NUMERICAL, out, "error: closed form and quadrature disagree\n".into())
                    }
                }
                Err(e) => from_error(e, target.format),
            }
        }
        Command::Zerofree { target, angles, radii, r_min, r_max, max_arg } => {
            let p = match resolve_params(&target) {
                Ok(p) => p,
                Err(e) => return from_error(e, target.format),
            };
            if radii == 0 || angles == 0 || !(r_min > 0.0) || !(r_max >= r_min) || !r_max.is_finite() {
                return from_error(
                    Error::BadParameter("scan needs radii, angles >= 1 and 0 < r-min <= r-max".into()),
                    target.format,
                );
            }
            match catalog::zero_free_scan(&target.entry, &p, &log_grid(r_min, r_max, radii), angles, max_arg) {
                Ok(r) => {
                    let out = render(&r, target.format, |r: &ZeroFreeReport| {
                        format!(
                            "entry     {}\nfunction  {}\nsector    |arg z| <= {}π\nmin |f|   {:e}\nverdict   {}\n",
                            r.entry, r.function, r.max_arg, r.min_abs, r.verdict
                        )
                    });
                    if r.passed() {
                        CliOutput::ok(out)
                    } else {
                        CliOutput::fail(EXIT_NUMERICAL, out, "error: zero-free claim violated on the grid\n".into())
                    }
                }
                Err(e) => from_error(e, target.format),
            }
        }
    }
}
