use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use toricode_cli::job::Job;
use toricode_cli::run::Outcome;
use toricode_cli::{
    execute, verify_dir, verify_jobs, CliError, Overrides, PathSpec, Task, BUNDLED,
};

/// Vanishing ideals and evaluation codes over toric quotients of finite fields.
#[derive(Parser)]
#[command(name = "toricode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cap on S-pairs processed by Buchberger's algorithm.
    #[arg(long, global = true)]
    budget_pairs: Option<u64>,

    /// Cap on points scanned during enumeration.
    #[arg(long, global = true)]
    budget_points: Option<u64>,

    /// Route for I(A^r_G(F_q)).
    #[arg(long, global = true, value_enum)]
    path: Option<PathSpec>,

    /// Seed for sampled soundness checks.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Include wall-clock time in the output.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a job file.
    Run { job: PathBuf },
    /// Run a job as an orbit enumeration.
    Orbits { job: PathBuf },
    /// Run a job as an evaluation code.
    Code { job: PathBuf },
    /// Run an ideal job.
    Ideal { job: PathBuf },
    /// Check golden jobs against their expectations.
    Verify {
        /// Directory of job files; the bundled goldens when omitted.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn overrides(cli: &Cli, task: Option<Task>) -> Overrides {
    Overrides {
        max_pairs: cli.budget_pairs,
        max_points: cli.budget_points,
        path: cli.path,
        seed: cli.seed,
        task,
        timing: cli.timing,
    }
}

fn load(path: &Path) -> Result<Job, CliError> {
    let src =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Job::from_json(&src)
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(cli: &Cli, outcome: Outcome) -> Result<(), CliError> {
    emit(cli, &outcome.render())?;
    if outcome.mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(outcome.mismatches.join("\n")))
    }
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Run { job } => finish(cli, execute(&load(job)?, &overrides(cli, None))?),
        Command::Orbits { job } => finish(
            cli,
            execute(&load(job)?, &overrides(cli, Some(Task::Orbits)))?,
        ),
        Command::Code { job } => finish(
            cli,
            execute(&load(job)?, &overrides(cli, Some(Task::Code)))?,
        ),
        Command::Ideal { job } => {
            let job = load(job)?;
            if !job.task.is_ideal() {
                return Err(CliError::Schema(format!(
                    "task: `{}` is not an ideal task",
                    job.task.name()
                )));
            }
            finish(cli, execute(&job, &overrides(cli, None))?)
        }
        Command::Verify { dir } => {
            let ov = overrides(cli, None);
            let report = match dir {
                Some(d) => verify_dir(d, &ov)?,
                None => verify_jobs(
                    BUNDLED.iter().map(|(n, s)| (n.to_string(), s.to_string())),
                    &ov,
                ),
            };
            let mut text = report.lines.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&report.summary());
            text.push('\n');
            emit(cli, &text)?;
            if report.failed > 0 {
                Err(CliError::Verification(report.summary()))
            } else {
                Ok(())
            }
        }
    }
}
