//! Command-line front end: simulate, analyze, classify, verify, sweep, and
//! replay the reference corpus.
//!
//! Exit codes: 0 on success, 2 on argument or validation errors (diagnostic
//! on stderr, nothing on stdout), 1 when the corpus replay finds a failure.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use contour_cli::{corpus, render_trajectory, replay_golden, to_json_line, OrbitDoc, SpectrumDoc, VerifyDoc};
use contour_sim::{
    analyze_orbit, classify_spectrum, emit_grid, is_acceptable, spectrum_with_audit, sweep_grid,
    trajectory, verify, GridFormat, SystemParams, SystemState,
};

#[derive(Parser)]
#[command(name = "contour-sim", version, about = "Exact simulator and verifier for a two-contour cluster system")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArgs {
    /// Cells per contour
    #[arg(long)]
    n: u32,
    /// Cluster 1 length
    #[arg(long)]
    l1: u32,
    /// Cluster 2 length
    #[arg(long)]
    l2: u32,
    /// Node offset
    #[arg(long)]
    d: u32,
}

impl SystemArgs {
    fn params(&self) -> Result<SystemParams, CliError> {
        SystemParams::new(self.n, self.l1, self.l2, self.d).map_err(|e| CliError::Validation(e.to_string()))
    }
}

fn parse_state(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected A,B got {s:?}"))?;
    let a = a.trim().parse().map_err(|e| format!("bad front {a:?}: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("bad front {b:?}: {e}"))?;
    Ok((a, b))
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a fixed-horizon trajectory
    Simulate {
        #[command(flatten)]
        system: SystemArgs,
        /// Initial state as A,B
        #[arg(long, value_parser = parse_state)]
        init: (u32, u32),
        /// Number of ticks
        #[arg(long)]
        steps: usize,
    },
    /// Detect the limit cycle from one initial state (JSON)
    Orbit {
        #[command(flatten)]
        system: SystemArgs,
        /// Initial state as A,B
        #[arg(long, value_parser = parse_state)]
        init: (u32, u32),
    },
    /// Velocity spectrum over all acceptable initial states (JSON)
    Spectrum {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Check every catalogued region result at one parameter point (JSON)
    Verify {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Scenario grid over the l1 <= l2 triangle at fixed n, d
    Sweep {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum)]
        format: OutputFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay the embedded reference trajectories
    ReplayExamples,
}

enum CliError {
    Validation(String),
    Io(String),
    ReplayFailed,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "error: {msg}"),
            CliError::Io(msg) => write!(f, "error: {msg}"),
            CliError::ReplayFailed => write!(f, "error: reference replay failed"),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Io(_) | CliError::ReplayFailed => 1,
        }
    }
}

fn checked_initial(params: SystemParams, init: (u32, u32)) -> Result<SystemState, CliError> {
    let state = SystemState::new(init.0, init.1);
    if !state.in_range(params) {
        return Err(CliError::Validation(format!(
            "initial state {state} out of range for n = {}",
            params.n()
        )));
    }
    if !is_acceptable(params, state) {
        return Err(CliError::Validation(format!(
            "UnacceptableState: both clusters occupy one node in {state}"
        )));
    }
    Ok(state)
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Simulate { system, init, steps } => {
            let params = system.params()?;
            let initial = checked_initial(params, init)?;
            let states = trajectory(params, initial, steps)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            print!("{}", render_trajectory(&states));
        }
        Command::Orbit { system, init } => {
            let params = system.params()?;
            let initial = checked_initial(params, init)?;
            let summary =
                analyze_orbit(params, initial).map_err(|e| CliError::Validation(e.to_string()))?;
            print!("{}", to_json_line(&OrbitDoc::new(params, &summary)));
        }
        Command::Spectrum { system } => {
            let params = system.params()?;
            let (spectrum, _) = spectrum_with_audit(params);
            let doc = SpectrumDoc::new(&spectrum, classify_spectrum(&spectrum));
            print!("{}", to_json_line(&doc));
        }
        Command::Verify { system } => {
            let params = system.params()?;
            let report = verify(params);
            print!("{}", to_json_line(&VerifyDoc::new(&report)));
        }
        Command::Sweep { n, d, format, out } => {
            let grid = sweep_grid(n, d).map_err(|e| CliError::Validation(e.to_string()))?;
            let format = match format {
                OutputFormat::Csv => GridFormat::Csv,
                OutputFormat::Json => GridFormat::Json,
            };
            let text = emit_grid(&grid, format);
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
        }
        Command::ReplayExamples => {
            let report = replay_golden(&corpus());
            println!(
                "replayed {} sequences: {} transitions checked, {} excluded",
                report.sequences, report.transitions_checked, report.transitions_excluded
            );
            for f in &report.failures {
                println!(
                    "FAIL {} transition {}: {} -> recorded {}, rules give {}",
                    f.source, f.transition_index, f.from, f.recorded, f.derived
                );
            }
            if !report.all_passed() {
                return Err(CliError::ReplayFailed);
            }
            println!("all sequences replay exactly");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code())
        }
    }
}
