use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use fracrheo::grid::{fmt_sig, Quantity};
use fracrheo::ic_estimator::{extrapolate, TwinHistory};
use fracrheo::mittag_leffler::ml_ab;
use fracrheo::models::{analytic_response, build_problem, initial_condition};
use fracrheo::solver::{convergence_study, max_relative_error, solve_gl};
use fracrheo::Error;

use crate::config::{self, base_dir, load_toml, ExperimentConfig, MatrixConfig};
use crate::verify::{self, Case};

/// Environment variable naming the default output directory.
pub const OUT_ENV: &str = "FRACRHEO_OUT";
pub const DEFAULT_OUT: &str = "fracrheo-out";

#[derive(Debug, Parser)]
#[command(
    name = "fracrheo",
    version,
    about = "Fractional viscoelastic responses and their initial conditions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one experiment and compare it with its closed form.
    Respond(RunArgs),
    /// Run the verification matrix.
    Verify(VerifyArgs),
    /// Evaluate the Mittag-Leffler function E_{alpha,beta}(z).
    #[command(allow_negative_numbers = true)]
    Ml { alpha: f64, beta: f64, z: f64 },
    /// Estimate an initial condition from a recorded history.
    Ic(IcArgs),
    /// Convergence study of the stepping solver against the Green's function solver.
    Converge(ConvergeArgs),
}

#[derive(Debug, Args)]
pub struct Overrides {
    /// Output directory [default: $FRACRHEO_OUT or ./fracrheo-out].
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[command(flatten)]
    pub overrides: Overrides,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Matrix file; the built-in matrix is used without one.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub overrides: Overrides,
}

#[derive(Debug, Args)]
pub struct IcArgs {
    /// `time,value` CSV of the recorded twin.
    pub history: PathBuf,
    /// Experiment file providing the model.
    #[arg(long)]
    pub config: PathBuf,
    /// Recorded quantity [default: the config's load quantity, else stress].
    #[arg(long)]
    pub quantity: Option<Quantity>,
    #[arg(long, default_value_t = verify::HALVINGS)]
    pub halvings: usize,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, default_value_t = 4)]
    pub levels: usize,
}

/// Successful runs either stay within tolerance or breach it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Breach,
}

impl Outcome {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Breach
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Respond(a) => respond(&a),
        Command::Verify(a) => verify(&a),
        Command::Ml { alpha, beta, z } => {
            println!("{}", ml_ab(alpha, beta, z)?);
            Ok(Outcome::Pass)
        }
        Command::Ic(a) => ic(&a),
        Command::Converge(a) => converge(&a),
    }
}

fn out_dir(flag: &Option<PathBuf>, configured: &Option<PathBuf>, base: &Path) -> PathBuf {
    flag.clone()
        .or_else(|| configured.as_ref().map(|d| base.join(d)))
        .or_else(|| std::env::var_os(OUT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT))
}

fn prepare(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)
        .with_context(|| format!("cannot create output directory {}", dir.display()))
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn experiment(args: &RunArgs) -> Result<(ExperimentConfig, PathBuf)> {
    let mut cfg: ExperimentConfig = load_toml(&args.config)?;
    cfg.grid = cfg.grid.with_overrides(args.overrides.dt, args.overrides.n);
    Ok((cfg, base_dir(&args.config)))
}

fn respond(args: &RunArgs) -> Result<Outcome> {
    let (cfg, base) = experiment(args)?;
    let grid = cfg.grid.build()?;
    let model = cfg.model.build()?;
    let load = cfg
        .load
        .as_ref()
        .context("load: missing section")?
        .build(&base, &grid)?;
    let problem = build_problem(&model, &load)?;
    let ic = initial_condition(&model, &load)?;
    let numeric = solve_gl(&problem, &grid)?;
    let analytic = match analytic_response(&model, &load, &grid) {
        Ok(a) => Some(a),
        Err(Error::NoClosedForm(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let dir = out_dir(&args.overrides.out, &cfg.output.dir, &base);
    prepare(&dir)?;

    let mut csv = String::new();
    match &analytic {
        Some(a) => {
            csv.push_str("time,numeric,analytic,abs_err\n");
            for (k, t) in (1..=grid.len()).zip(grid.times()) {
                let (x, y) = (numeric.value(k), a.value(k));
                let _ = writeln!(
                    csv,
                    "{},{},{},{}",
                    fmt_sig(t),
                    fmt_sig(x),
                    fmt_sig(y),
                    fmt_sig((x - y).abs())
                );
            }
        }
        None => {
            csv.push_str("time,numeric\n");
            for (k, t) in (1..=grid.len()).zip(grid.times()) {
                let _ = writeln!(csv, "{},{}", fmt_sig(t), fmt_sig(numeric.value(k)));
            }
        }
    }
    write(&dir, "response.csv", &csv)?;
    write(
        &dir,
        "ic.txt",
        &format!(
            "quantity = {}\norder = {}\nvalue = {}\n",
            ic.quantity,
            fmt_sig(ic.order),
            fmt_sig(ic.value)
        ),
    )?;

    let mut summary = format!(
        "{} under prescribed {} {}\nunknown: {}\ninitial condition: [D^{} {}] = {}\n",
        model.name(),
        load.applied,
        load.program.name(),
        problem.unknown,
        fmt_sig(ic.order),
        ic.quantity,
        fmt_sig(ic.value)
    );
    if numeric.impulse() != 0.0 {
        let _ = writeln!(
            summary,
            "dirac mass at t = 0: {}",
            fmt_sig(numeric.impulse())
        );
    }
    let outcome = match &analytic {
        Some(a) => {
            let err = max_relative_error(&numeric, a, &grid, 10.0 * grid.dt())?;
            let pass = err <= cfg.tolerances.catalog;
            let _ = writeln!(
                summary,
                "max relative error (t >= 10 dt): {err:.3e} (tolerance {:.1e}) {}",
                cfg.tolerances.catalog,
                if pass { "pass" } else { "FAIL" }
            );
            Outcome::from_pass(pass)
        }
        None => {
            summary.push_str("no closed form available; numerical response only\n");
            Outcome::Pass
        }
    };
    write(&dir, "summary.txt", &summary)?;
    print!("{summary}");
    Ok(outcome)
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let (mut cfg, base) = match &args.config {
        Some(path) => (load_toml::<MatrixConfig>(path)?, base_dir(path)),
        None => (MatrixConfig::default(), PathBuf::new()),
    };
    cfg.grid = cfg.grid.with_overrides(args.overrides.dt, args.overrides.n);
    let grid = cfg.grid.build()?;
    let cases = match &cfg.cases {
        None => verify::default_matrix(cfg.alpha, &grid)?,
        Some(specs) => specs
            .iter()
            .map(|s| Ok(Case::new(s.model.build()?, s.load.build(&base, &grid)?)))
            .collect::<Result<Vec<_>, config::ConfigError>>()?,
    };
    let reports = verify::run_matrix(&cases, &grid, &cfg.tolerances);
    let text = verify::render(&reports, &grid);
    if args.overrides.out.is_some() || cfg.output.dir.is_some() {
        let dir = out_dir(&args.overrides.out, &cfg.output.dir, &base);
        prepare(&dir)?;
        write(&dir, "verify.txt", &text)?;
    }
    print!("{text}");
    if reports.is_empty() {
        eprintln!("warning: empty matrix");
    }
    Ok(Outcome::from_pass(
        reports.iter().all(|r| r.failures() == 0),
    ))
}

fn ic(args: &IcArgs) -> Result<Outcome> {
    let cfg: ExperimentConfig = load_toml(&args.config)?;
    let model = cfg.model.build()?;
    let quantity = args
        .quantity
        .or(cfg.load.as_ref().map(|l| l.quantity))
        .unwrap_or(Quantity::Stress);
    let recorded = config::read_signal(&args.history, quantity)?;
    let history = TwinHistory::new(recorded, model)?;
    let x = extrapolate(&history, args.halvings)?;
    println!("a,estimate");
    for (a, e) in &x.samples {
        println!("{},{}", fmt_sig(*a), fmt_sig(*e));
    }
    println!("limit = {}", fmt_sig(x.limit));
    println!("initial condition = {}", fmt_sig(x.ic_value));
    println!("order = {}", fmt_sig(x.order));
    println!("error bar = {}", fmt_sig(x.error_bar));
    if x.converged {
        Ok(Outcome::Pass)
    } else {
        println!("warning: estimates do not contract as a -> 0");
        Ok(Outcome::Breach)
    }
}

fn converge(args: &ConvergeArgs) -> Result<Outcome> {
    if args.levels < 2 {
        bail!("--levels must be at least 2");
    }
    let (cfg, base) = experiment(&args.run)?;
    let grid = cfg.grid.build()?;
    let model = cfg.model.build()?;
    let load = cfg
        .load
        .as_ref()
        .context("load: missing section")?
        .build(&base, &grid)?;
    let rows = convergence_study(&build_problem(&model, &load)?, &grid, args.levels)?;
    let mut csv = String::from("dt,max_rel_err,order\n");
    for r in &rows {
        let order = r.order.map(fmt_sig).unwrap_or_default();
        let _ = writeln!(csv, "{},{},{order}", fmt_sig(r.dt), fmt_sig(r.max_rel_err));
    }
    let dir = out_dir(&args.run.overrides.out, &cfg.output.dir, &base);
    prepare(&dir)?;
    write(&dir, "convergence.csv", &csv)?;
    print!("{csv}");
    let pass = rows
        .iter()
        .filter_map(|r| r.order)
        .all(|o| o >= cfg.tolerances.min_order);
    Ok(Outcome::from_pass(pass))
}
