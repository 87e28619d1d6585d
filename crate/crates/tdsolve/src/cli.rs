//! The `tdsolve` command line: `classify` a parameter tuple, `trace`
//! expectation values and uncertainties to CSV, and `verify` the property
//! suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
//! flags. CSV output is byte-stable across runs (full double precision,
//! no timestamps); the JSON regime report carries `schema_version`.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::io::Write;

use crate::observables;
use crate::params::{Params, SqueezeState};
use crate::regime::{classify, tprime_domain, Picture, SystemKey, TimeDomain};
use crate::verify::{self, VerifyConfig};
use crate::{Error, Result};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "tdsolve",
    about = "Closed-form solutions and cross-checks for the time-dependent oscillator family H = (1/2)(t0/t)^a P^2 + (1/2) w^2 (t/t0)^b X^2",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a parameter tuple into its solution regime
    Classify(ClassifyArgs),
    /// Write <x>, <p>, dx, dp and the uncertainty product over a time grid as CSV
    Trace(TraceArgs),
    /// Run the verification suites (Wronskian, ODE oracle, composition, ...)
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ParamFlags {
    /// Picture: to, tm, or tq
    #[arg(long)]
    picture: String,
    /// Kinetic power a
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    /// Potential power b
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    /// Frequency w > 0
    #[arg(long, allow_hyphen_values = true)]
    omega: f64,
    /// Reference time t0 > 0
    #[arg(long, allow_hyphen_values = true)]
    t0: f64,
}

impl ParamFlags {
    fn parse(&self) -> Result<(Picture, Params)> {
        let picture: Picture = self.picture.parse()?;
        let params = Params::new(self.a, self.b, self.omega, self.t0)?;
        Ok((picture, params))
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    params: ParamFlags,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    params: ParamFlags,
    /// Initial position
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    x0: f64,
    /// Initial momentum
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    p0: f64,
    /// Squeeze magnitude r >= 0
    #[arg(long, default_value_t = 0.0)]
    r: f64,
    /// Squeeze phase theta (radians)
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    theta: f64,
    /// First grid time (TO: offset t'-t0'; TM/TQ: t)
    #[arg(long, allow_hyphen_values = true)]
    t_start: f64,
    /// Last grid time
    #[arg(long, allow_hyphen_values = true)]
    t_end: f64,
    /// Number of grid points
    #[arg(long, default_value_t = 1000)]
    points: usize,
    /// Output file (stdout when omitted)
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed of the deterministic sampler (SplitMix64)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random draws per regime in the sampled suites
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Run only the named suites (repeatable)
    #[arg(long)]
    suite: Vec<String>,
}

#[derive(Serialize)]
struct RegimeReport<'a> {
    schema_version: u32,
    picture: &'a str,
    params: &'a Params,
    key: String,
    report: String,
    system: &'a SystemKey,
    tprime_domain: DomainReport,
}

#[derive(Serialize)]
struct DomainReport {
    lower: f64,
    /// `None` encodes an unbounded interval.
    upper: Option<f64>,
    open_upper: bool,
}

impl From<TimeDomain> for DomainReport {
    fn from(d: TimeDomain) -> Self {
        Self {
            lower: d.lower,
            upper: if d.upper.is_finite() { Some(d.upper) } else { None },
            open_upper: d.open_upper,
        }
    }
}

/// Entry point for the `tdsolve` binary. Returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with exit 0; real parse
            // errors exit 2
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Classify(args) => cmd_classify(&args),
        Command::Trace(args) => cmd_trace(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn cmd_classify(args: &ClassifyArgs) -> Result<i32> {
    let (picture, params) = args.params.parse()?;
    let key = classify(&params, picture)?;
    let domain = tprime_domain(&params)?;
    println!("picture:  {}", picture.label());
    println!("key:      {}", key.key_string());
    println!("report:   {}", key.report_string(&params));
    match domain.upper.is_finite() {
        true => println!(
            "t'-t0':   [{}, {}{}",
            domain.lower,
            domain.upper,
            if domain.open_upper { ")" } else { "]" }
        ),
        false => println!("t'-t0':   [{}, inf)", domain.lower),
    }
    let report = RegimeReport {
        schema_version: SCHEMA_VERSION,
        picture: picture.label(),
        params: &params,
        key: key.key_string(),
        report: key.report_string(&params),
        system: &key,
        tprime_domain: domain.into(),
    };
    println!("{}", serde_json::to_string(&report).expect("serializable report"));
    Ok(0)
}

fn cmd_trace(args: &TraceArgs) -> Result<i32> {
    let (picture, params) = args.params.parse()?;
    classify(&params, picture)?;
    let state = SqueezeState::new(args.x0, args.p0, args.r, args.theta)?;
    if args.points < 1 {
        return Err(Error::InvalidParams("--points must be >= 1".into()));
    }
    if args.t_end < args.t_start || args.t_end.is_nan() || args.t_start.is_nan() {
        return Err(Error::InvalidParams("--t-end must be >= --t-start".into()));
    }
    let grid: Vec<f64> = if args.points == 1 {
        vec![args.t_start]
    } else {
        (0..args.points)
            .map(|i| {
                args.t_start
                    + (args.t_end - args.t_start) * i as f64 / (args.points - 1) as f64
            })
            .collect()
    };
    let rows = observables::trace(picture, &params, &state, &grid)?;
    let mut out: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(std::fs::File::create(path).map_err(|e| {
            Error::InvalidParams(format!("cannot create {}: {e}", path.display()))
        })?),
        None => Box::new(std::io::stdout().lock()),
    };
    write_csv(&mut out, &rows).map_err(|e| Error::InvalidParams(format!("write failed: {e}")))?;
    Ok(0)
}

fn write_csv(out: &mut dyn Write, rows: &[observables::TracePoint]) -> std::io::Result<()> {
    writeln!(out, "t,x_exp,p_exp,dx,dp,product")?;
    for r in rows {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            r.t, r.x, r.p, r.dx, r.dp, r.product
        )?;
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let tol_scale = match std::env::var("TDSOLVE_TOL") {
        Ok(s) => s.parse::<f64>().map_err(|_| {
            Error::InvalidParams(format!("TDSOLVE_TOL must be a number, got '{s}'"))
        })?,
        Err(_) => 1.0,
    };
    if !(tol_scale.is_finite() && tol_scale > 0.0) {
        return Err(Error::InvalidParams("TDSOLVE_TOL must be > 0".into()));
    }
    let cfg = VerifyConfig { seed: args.seed, samples: args.samples.max(1), tol_scale };
    let names: Vec<String> = if args.suite.is_empty() {
        verify::SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        args.suite.clone()
    };
    let mut all_passed = true;
    for name in &names {
        let report = verify::run_suite(name, &cfg)?;
        println!("{}", report.summary_line());
        for failure in report.failures() {
            println!(
                "    FAIL {}: residual {:.3e} > tol {:.1e}",
                failure.label, failure.residual, failure.tolerance
            );
        }
        all_passed &= report.passed();
    }
    Ok(if all_passed { 0 } else { 1 })
}
