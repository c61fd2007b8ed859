mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Format;

/// Proof checking, arithmetization and dovetailed proof search for
/// Peano Arithmetic with a bounded ω-rule.
#[derive(Debug, Parser)]
#[command(name = "pomega", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OmegaLimits {
    /// Instances 0..=k of every ω-step are checked.
    #[arg(long, env = "POMEGA_K", default_value_t = peano_omega::omega::DEFAULT_K)]
    k: u64,
    /// Metered operations allowed to a premise machine per instance.
    #[arg(long, env = "POMEGA_INSTANCE_BUDGET", default_value_t = peano_omega::omega::DEFAULT_INSTANCE_BUDGET)]
    instance_budget: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Pure,
    Witness,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a proof file (text or binary) against a target formula.
    Check {
        proof: PathBuf,
        /// Target formula in the text grammar, or `@FILE` to read it from a file.
        target: String,
        /// File with one premise formula per line.
        #[arg(long)]
        gamma: Option<PathBuf>,
        #[command(flatten)]
        limits: OmegaLimits,
    },
    /// Print the arithmetic sentence for a machine and input.
    Encode {
        /// Corpus machine name or machine file.
        machine: String,
        n: u64,
        /// q1, q2, q3, or haltedby (with T and OUTCOME).
        which: String,
        t: Option<u64>,
        outcome: Option<String>,
    },
    /// Run a machine on a unary input.
    Simulate {
        machine: String,
        n: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Search for a proof deciding whether the machine halts on n.
    Hsearch {
        machine: String,
        n: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Witness)]
        mode: ModeArg,
        /// Oracle steps allowed to each of the three threads.
        #[arg(long, env = "POMEGA_BUDGET_STEPS", default_value_t = 1_000_000)]
        budget_steps: u64,
        /// Candidates each thread may open.
        #[arg(long, env = "POMEGA_BUDGET_CANDIDATES", default_value_t = 100_000)]
        budget_candidates: u64,
        #[command(flatten)]
        limits: OmegaLimits,
        /// Where to write the winning proof.
        #[arg(long)]
        proof_out: Option<PathBuf>,
    },
    /// Check a loops certificate on a prefix of its instances.
    OmegaCheck {
        /// Certificate kind; only `loops-cert` exists.
        kind: String,
        machine: String,
        n: u64,
        #[arg(long, default_value_t = peano_omega::arithmetize::DEFAULT_HORIZON)]
        horizon: u64,
        #[command(flatten)]
        limits: OmegaLimits,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { commands::PARSE_ERROR } else { commands::OK });
        }
    };
    let result = match cli.command {
        Command::Check { proof, target, gamma, limits } => {
            commands::check(&proof, &target, gamma.as_deref(), limits.k, limits.instance_budget)
        }
        Command::Encode { machine, n, which, t, outcome } => {
            commands::encode(&machine, n, &which, t, outcome.as_deref())
        }
        Command::Simulate { machine, n, budget } => commands::simulate(&machine, n, budget),
        Command::Hsearch { machine, n, mode, budget_steps, budget_candidates, limits, proof_out } => {
            let mode = match mode {
                ModeArg::Pure => peano_omega::dovetail::Mode::Pure,
                ModeArg::Witness => peano_omega::dovetail::Mode::Witness,
            };
            let cfg = peano_omega::dovetail::HConfig {
                budget: peano_omega::dovetail::SearchBudget::new(budget_steps, budget_candidates),
                k: limits.k,
                instance_budget: limits.instance_budget,
                mode,
            };
            commands::hsearch(&machine, n, &cfg, proof_out.as_deref())
        }
        Command::OmegaCheck { kind, machine, n, horizon, limits } => {
            commands::omega_check(&kind, &machine, n, horizon, limits.k, limits.instance_budget)
        }
    };
    match result {
        Ok(report) => {
            let _ = std::io::stdout().write_all(report.render(cli.format).as_bytes());
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::error_code(&e))
        }
    }
}
