use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use cavity_coherence::model::DEFAULT_OMEGA0;
use cavity_coherence::nonmarkov::{candidate_pairs, GridChannel, NonMarkovResult, DEFAULT_SEED};
use cavity_coherence::{
    apply_weak_measurement, compare_closed_form, embed_atom_with_vacuum, prepare_initial, run_protocol,
    CoherenceSample, InitialPreparation, MeasurementStrengths, PhysicalParams, ProtocolConfig, StatePair,
    TimeGrid,
};
use cavity_cli::{figure_spec, parse_config, run_sweep, CliError, Result, SeriesTable};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

/// Closed-form and RK4 threshold used by `validate`.
const VALIDATE_TOL: f64 = 1e-6;

/// Parameter sets checked by `validate` when none is given: (Ω, λ) in λ0 units.
const VALIDATE_SETS: [(f64, f64); 4] = [(1.0, 5.0), (1.0, 3.0), (10.0, 3.0), (1.0, 0.1)];

#[derive(Parser)]
#[command(name = "cavcoh", version, about = "Coherence of an atom in a dissipative cavity under weak measurement")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single trajectory of the measure / evolve / reverse protocol.
    Simulate(SimulateArgs),
    /// Reproduce one of the seven figure sweeps.
    Figure {
        /// Figure number, 1..=7.
        #[arg(value_parser = clap::value_parser!(u8).range(1..=7))]
        number: u8,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Sweep described by a `key = value` configuration file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// BLP non-Markovianity for the canonical, equatorial and best sampled pair.
    Nonmarkov(NonmarkovArgs),
    /// Compare the closed-form propagator with RK4 integration.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Output CSV path (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    #[arg(long, default_value_t = 5.0)]
    lambda: f64,
    #[arg(long, default_value_t = FRAC_PI_2)]
    theta: f64,
    #[arg(long, default_value_t = 0.0)]
    p1: f64,
    #[arg(long, default_value_t = 0.0)]
    p2: f64,
    #[arg(long, default_value_t = 10.0)]
    t_max: f64,
    #[arg(long, default_value_t = 1000)]
    steps: usize,
    /// Divide the output state by its trace.
    #[arg(long)]
    normalize: bool,
    /// Atomic Bohr frequency; no reported quantity depends on it.
    #[arg(long, default_value_t = DEFAULT_OMEGA0)]
    omega0: f64,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct NonmarkovArgs {
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    #[arg(long, default_value_t = 0.1)]
    lambda: f64,
    /// Horizon of the time integral.
    #[arg(long, default_value_t = 50.0)]
    t_max: f64,
    #[arg(long, default_value_t = 50_000)]
    steps: usize,
    /// Random pure-state pairs sampled in addition to the two fixed pairs.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_OMEGA0)]
    omega0: f64,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct ValidateArgs {
    /// Ω for a single check; requires --lambda. Without both, the four
    /// standard parameter sets are checked.
    #[arg(long, requires = "lambda")]
    omega: Option<f64>,
    #[arg(long, requires = "omega")]
    lambda: Option<f64>,
    #[arg(long, default_value_t = FRAC_PI_2)]
    theta: f64,
    #[arg(long, default_value_t = 0.0)]
    p1: f64,
    #[arg(long, default_value_t = 10.0)]
    t_max: f64,
    #[arg(long, default_value_t = 100_000)]
    steps: usize,
    #[arg(long, default_value_t = DEFAULT_OMEGA0)]
    omega0: f64,
    #[command(flatten)]
    run: RunArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Simulate(args) => with_pool(args.run.jobs, || simulate(&args)),
        Command::Figure { number, run } => with_pool(run.jobs, || {
            let table = run_sweep(&figure_spec(number)?)?;
            if number == 7 {
                warn_horizon(&table);
            }
            emit(&table, run.out.as_ref())
        }),
        Command::Sweep { config, run } => with_pool(run.jobs, || {
            let table = run_sweep(&parse_config(&config)?)?;
            warn_horizon(&table);
            emit(&table, run.out.as_ref())
        }),
        Command::Nonmarkov(args) => with_pool(args.run.jobs, || nonmarkov(&args)),
        Command::Validate(args) => with_pool(args.run.jobs, || validate(&args)),
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    pool.install(f)
}

fn emit(table: &SeriesTable, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => table.write_csv(path),
        None => std::io::stdout()
            .write_all(table.to_csv().as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn warn_horizon(table: &SeriesTable) {
    if let Some(flags) = table.column("horizon_limited") {
        let limited = flags.iter().filter(|&&f| f != 0.0).count();
        if limited > 0 {
            eprintln!("note: {limited} row(s) are horizon-limited; N may grow with a longer horizon");
        }
    }
}

fn simulate(args: &SimulateArgs) -> Result<()> {
    let cfg = ProtocolConfig {
        params: PhysicalParams::new(1.0, args.lambda, args.omega, args.omega0)?,
        prep: InitialPreparation::new(args.theta)?,
        strengths: MeasurementStrengths::new(args.p1, args.p2)?,
        normalize: args.normalize,
    };
    let grid = TimeGrid::new(0.0, args.t_max, args.steps)?;
    let times: Vec<f64> = grid.times().collect();
    let rows = times
        .par_iter()
        .map(|&t| {
            let state = run_protocol(&cfg, t)?;
            let s = CoherenceSample::from_state(t, &state);
            Ok(vec![
                t,
                s.rho_ee,
                state.rho_gg(),
                state.rho_eg().re,
                state.rho_eg().im,
                s.c_l1,
                s.c_rel,
                s.trace,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let columns = ["t", "rho_ee", "rho_gg", "re_rho_eg", "im_rho_eg", "c_l1", "c_rel", "trace"];
    let mut table = SeriesTable::new(columns.iter().map(|c| c.to_string()).collect());
    rows.into_iter().for_each(|r| table.push(r));
    emit(&table, args.run.out.as_ref())
}

fn nonmarkov(args: &NonmarkovArgs) -> Result<()> {
    let params = PhysicalParams::new(1.0, args.lambda, args.omega, args.omega0)?;
    let grid = TimeGrid::new(0.0, args.t_max, args.steps)?;
    if args.samples == 0 {
        return Err(CliError::domain("samples", "need at least one random pair"));
    }
    let channel = GridChannel::new(&params, &grid)?;
    let canonical = channel.measure(&StatePair::canonical());
    let equatorial = channel.measure(&StatePair::equatorial());
    let best = channel
        .best_of(&candidate_pairs(args.samples, args.seed))
        .expect("candidates are never empty");

    println!("omega = {}", args.omega);
    println!("lambda = {}", args.lambda);
    println!("horizon = {}", args.t_max);
    println!("steps = {}", args.steps);
    println!("N_canonical = {:.9}", canonical.n_value);
    println!("N_equatorial = {:.9}", equatorial.n_value);
    println!("N_best = {:.9}", best.n_value);
    println!("best_pair = {}", describe_pair(&best));
    println!("best_is_canonical = {}", best.pair == StatePair::canonical());
    println!("horizon_limited = {}", canonical.horizon_limited);

    if let Some(path) = &args.run.out {
        let series = [&canonical, &equatorial, &best].map(|r| channel.distance_series(&r.pair));
        let mut table = SeriesTable::new(
            ["t", "d_canonical", "d_equatorial", "d_best"]
                .iter()
                .map(|c| c.to_string())
                .collect(),
        );
        for (i, t) in grid.times().enumerate() {
            table.push(vec![t, series[0].d[i], series[1].d[i], series[2].d[i]]);
        }
        table.write_csv(path)?;
    }
    Ok(())
}

/// Bloch vectors of both states of the pair.
fn describe_pair(r: &NonMarkovResult) -> String {
    let bloch = |a: &cavity_coherence::AtomState| {
        let eg = a.rho_eg();
        // Adding 0.0 folds -0.0 into 0.0 so the printout has no stray signs.
        (2.0 * eg.re + 0.0, -2.0 * eg.im + 0.0, a.rho_ee() - a.rho_gg() + 0.0)
    };
    let (x1, y1, z1) = bloch(&r.pair.first);
    let (x2, y2, z2) = bloch(&r.pair.second);
    format!("({x1:.6}, {y1:.6}, {z1:.6}) vs ({x2:.6}, {y2:.6}, {z2:.6})")
}

fn validate(args: &ValidateArgs) -> Result<()> {
    let sets: Vec<(f64, f64)> = match (args.omega, args.lambda) {
        (Some(o), Some(l)) => vec![(o, l)],
        _ => VALIDATE_SETS.to_vec(),
    };
    let grid = TimeGrid::new(0.0, args.t_max, args.steps)?;
    let initial = apply_weak_measurement(&prepare_initial(&InitialPreparation::new(args.theta)?), args.p1)?;
    let r0 = embed_atom_with_vacuum(&initial);
    let deviations = sets
        .par_iter()
        .map(|&(omega, lambda)| {
            let params = PhysicalParams::new(1.0, lambda, omega, args.omega0)?;
            Ok(compare_closed_form(&params, &r0, &grid)?)
        })
        .collect::<Result<Vec<f64>>>()?;

    let mut failed = 0;
    for (&(omega, lambda), dev) in sets.iter().zip(&deviations) {
        let ok = *dev <= VALIDATE_TOL;
        failed += usize::from(!ok);
        println!(
            "omega={omega} lambda={lambda} dt={:e} max_deviation={dev:.3e} {}",
            grid.dt(),
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if failed > 0 {
        return Err(CliError::Validation(format!(
            "{failed} parameter set(s) above tolerance {VALIDATE_TOL:e}"
        )));
    }
    Ok(())
}
