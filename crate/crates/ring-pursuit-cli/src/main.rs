//! `ring-pursuit`: capture solvers, trajectory simulation, parametric
//! sweeps, and escape-heading reachability for the ring-constrained pursuit
//! scenario.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ring_pursuit::{
    exc_start, plot, point_capture_start, reachability, simulate, solve_tgc, sweep, tac_start,
    text::sig12, worst_case_start, CaptureSolution, Direction, EvaderIntent, PursuerSpec,
    SweepAxis,
};
use ring_pursuit_cli::config::{
    parse_angle, parse_config, parse_direction, parse_pursuer, Overrides, RunConfig,
};
use ring_pursuit_cli::emit;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ring-pursuit",
    about = "Capture analysis for a ring-constrained pursuer against a straight-line evader",
    after_help = "Angles accept radians or a 'pi' multiplier suffix (e.g. 1.6pi). \
                  Scenario defaults: R=1, rho=0.5, gamma=0.5, r=0.4."
)]
struct Cli {
    /// TOML config file; flags override its values
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Containment disk radius R
    #[arg(long, global = true, value_name = "LEN")]
    disk_radius: Option<f64>,
    /// Capture radius rho
    #[arg(long, global = true, value_name = "LEN")]
    rho: Option<f64>,
    /// Speed ratio gamma = v_P / v_E (must be < 1)
    #[arg(long, global = true, value_name = "RATIO")]
    gamma: Option<f64>,
    /// Evader start offset r from the center
    #[arg(long, global = true, value_name = "LEN")]
    r: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one capture configuration for an evader heading
    Solve(SolveArgs),
    /// Simulate a trajectory and emit its samples as CSV
    Simulate(SimulateArgs),
    /// Worst-case parametric sweep over gamma, rho, or r
    Sweep(SweepArgs),
    /// Escape/capture heading partition for one or more pursuers
    Reach(ReachArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveKind {
    Point,
    Exc,
    Tac,
    Tgc,
    Worst,
}

#[derive(Args)]
struct SolveArgs {
    /// Capture kind to solve
    #[arg(long, value_enum)]
    kind: SolveKind,
    /// Evader heading (radians, 'pi' suffix allowed)
    #[arg(long, value_parser = parse_angle)]
    heading: Option<f64>,
    /// Pursuer orbit direction: cw or ccw
    #[arg(long, default_value = "cw", value_parser = parse_direction)]
    dir: Direction,
    /// Output file (default: stdout)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Evader heading (radians, 'pi' suffix allowed)
    #[arg(long, value_parser = parse_angle)]
    heading: Option<f64>,
    /// Pursuer placement THETA:DIR (dir: cw, ccw, or fav)
    #[arg(long, value_parser = parse_pursuer, value_name = "THETA:DIR")]
    pursuer: Option<PursuerSpec>,
    /// Simulation horizon (default: 1.1x the exit time)
    #[arg(long, value_name = "TIME")]
    horizon: Option<f64>,
    /// Output file for the trajectory CSV (default: stdout)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Swept parameter
    #[arg(long, value_enum)]
    vary: VaryArg,
    /// Comma-separated swept values (default: a bracket around the standard scenario)
    #[arg(long, value_delimiter = ',', value_name = "V1,V2,...")]
    values: Option<Vec<f64>>,
    /// Number of headings, uniform over [pi, 2pi]
    #[arg(long, default_value_t = 73, value_name = "N")]
    headings: usize,
    /// Pursuer orbit direction: cw or ccw
    #[arg(long, default_value = "cw", value_parser = parse_direction)]
    dir: Direction,
    /// Output file (default: stdout)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write a capture-location scatter figure
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VaryArg {
    Gamma,
    Rho,
    R,
}

#[derive(Args)]
struct ReachArgs {
    /// Pursuer placement THETA:DIR; repeat for multiple pursuers
    #[arg(long = "pursuer", value_parser = parse_pursuer, value_name = "THETA:DIR")]
    pursuers: Vec<PursuerSpec>,
    /// Output file for the interval set CSV (default: stdout)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write a polar reachability figure
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("ring-pursuit: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let overrides = Overrides {
        disk_radius: cli.disk_radius,
        rho: cli.rho,
        gamma: cli.gamma,
        r: cli.r,
    };
    let text = match &cli.config {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| anyhow!("cannot read config {}: {e}", path.display()))?,
        None => String::new(),
    };
    let run_config = parse_config(&text, &overrides)?;

    match cli.command {
        Command::Solve(args) => cmd_solve(&run_config, &args),
        Command::Simulate(args) => cmd_simulate(&run_config, &args),
        Command::Sweep(args) => cmd_sweep(&run_config, &args),
        Command::Reach(args) => cmd_reach(&run_config, &args),
    }
}

fn required_heading(config: &RunConfig, flag: Option<f64>) -> Result<f64> {
    flag.or(config.heading)
        .ok_or_else(|| anyhow!("missing evader heading (use --heading or [evader] in the config)"))
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_solve(config: &RunConfig, args: &SolveArgs) -> Result<()> {
    let heading = required_heading(config, args.heading)?;
    let p = &config.params;
    let sol: CaptureSolution = match args.kind {
        SolveKind::Point => point_capture_start(p, heading, args.dir),
        SolveKind::Exc => exc_start(p, heading, args.dir),
        SolveKind::Tac => tac_start(p, heading, args.dir)?,
        SolveKind::Tgc => solve_tgc(p, heading, args.dir)?,
        SolveKind::Worst => worst_case_start(p, heading, args.dir).solution,
    };
    write_out(&args.out, &emit::solve_record_csv(heading, &sol))
}

fn cmd_simulate(config: &RunConfig, args: &SimulateArgs) -> Result<()> {
    let heading = required_heading(config, args.heading)?;
    let pursuer = match (args.pursuer, config.pursuers.as_slice()) {
        (Some(p), _) => p,
        (None, [p]) => *p,
        (None, []) => bail!("missing pursuer (use --pursuer THETA:DIR)"),
        (None, _) => bail!("simulate takes exactly one pursuer"),
    };
    if pursuer.policy == ring_pursuit::DirectionPolicy::Favorable {
        bail!("simulate needs a fixed direction (cw or ccw), not fav");
    }
    let evader = EvaderIntent::new(heading);
    let horizon = args
        .horizon
        .unwrap_or_else(|| 1.1 * evader.exit(&config.params).distance);
    let traj = simulate(&config.params, &evader, &pursuer, horizon)?;
    let outcome = match traj.outcome {
        ring_pursuit::Outcome::CapturedAt(t) => format!("captured t={}", sig12(t)),
        ring_pursuit::Outcome::EscapedAt(t) => format!("escaped t={}", sig12(t)),
    };
    if args.out.is_some() {
        write_out(&args.out, &traj.to_csv())?;
        println!("{outcome}");
    } else {
        print!("{}", traj.to_csv());
        eprintln!("{outcome}");
    }
    Ok(())
}

fn cmd_sweep(config: &RunConfig, args: &SweepArgs) -> Result<()> {
    if args.headings < 2 {
        bail!("need at least 2 headings");
    }
    let axis = match args.vary {
        VaryArg::Gamma => SweepAxis::Gamma,
        VaryArg::Rho => SweepAxis::Rho,
        VaryArg::R => SweepAxis::StartOffset,
    };
    let values: Vec<f64> = match &args.values {
        Some(v) => v.clone(),
        None => match axis {
            SweepAxis::Gamma => sweep::DEFAULT_GAMMA_VALUES.to_vec(),
            SweepAxis::Rho => sweep::DEFAULT_RHO_VALUES.to_vec(),
            SweepAxis::StartOffset => sweep::DEFAULT_START_OFFSET_VALUES.to_vec(),
        },
    };
    let headings: Vec<f64> = (0..args.headings)
        .map(|k| std::f64::consts::PI * (1.0 + k as f64 / (args.headings - 1) as f64))
        .collect();
    let records = sweep::sweep(&config.params, axis, &values, &headings, args.dir);
    write_out(&args.out, &sweep::sweep_csv(&records))?;
    if let Some(path) = &args.svg {
        fs::write(path, plot::sweep_scatter_svg(&config.params, &records))
            .map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

fn cmd_reach(config: &RunConfig, args: &ReachArgs) -> Result<()> {
    let pursuers: Vec<PursuerSpec> = if args.pursuers.is_empty() {
        config.pursuers.clone()
    } else {
        args.pursuers.clone()
    };
    if pursuers.is_empty() {
        bail!("missing pursuers (use --pursuer THETA:DIR, repeatable)");
    }
    let set = reachability::escape_set(&config.params, &pursuers);
    write_out(&args.out, &set.to_csv())?;
    if let Some(path) = &args.svg {
        fs::write(path, plot::heading_set_svg(&config.params, &set, &pursuers))
            .map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}
