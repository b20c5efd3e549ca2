use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use reeslab::session::{parse_session, run_tasks, verify_paper_corpus, RunOptions};
use reeslab::Limits;

#[derive(Parser)]
#[command(name = "reeslab", version, about = "Reductions, Rees functions and multiplicities of ideal pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the tasks of a session file and emit a JSON report.
    Run {
        session: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Maximum Gröbner basis size.
        #[arg(long = "budget-gb-size")]
        budget_gb_size: Option<usize>,
        /// Default reduction search depth for tasks without nmax=.
        #[arg(long)]
        nmax: Option<u32>,
    },
    /// Check the bundled example sessions against their expected values.
    VerifyPaper {
        /// Only entries whose tag or group contains this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn install_limits(basis: Option<usize>) -> Result<(), String> {
    let mut limits = Limits::default();
    if let Some(b) = basis {
        limits.max_basis = b;
    }
    if let Ok(spec) = std::env::var("REESLAB_BUDGET") {
        limits = limits.with_overrides(&spec).map_err(|e| format!("REESLAB_BUDGET: {e}"))?;
    }
    limits.install();
    Ok(())
}

fn write_json(path: &Option<PathBuf>, value: &serde_json::Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    match path {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| format!("{}: {e}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(session: PathBuf, json: Option<PathBuf>, jobs: Option<usize>, basis: Option<usize>, nmax: Option<u32>) -> Result<bool, String> {
    install_limits(basis)?;
    let text = std::fs::read_to_string(&session).map_err(|e| format!("{}: {e}", session.display()))?;
    let parsed = parse_session(&text).map_err(|e| format!("{}: {e}", session.display()))?;
    let report = run_tasks(&parsed, &RunOptions { jobs, default_nmax: nmax }).map_err(|e| e.to_string())?;
    write_json(&json, &report.json)?;
    if json.is_some() {
        let s = &report.json["summary"];
        eprintln!("{} tasks, {} ok, {} errors", s["tasks"], s["ok"], s["errors"]);
    }
    Ok(report.exit_code() == 0)
}

fn verify(filter: Option<String>, json: Option<PathBuf>) -> Result<bool, String> {
    install_limits(None)?;
    let report = verify_paper_corpus(filter.as_deref()).map_err(|e| e.to_string())?;
    for o in &report.outcomes {
        println!("{o}");
    }
    if json.is_some() {
        write_json(&json, &report.to_json())?;
    }
    let fails = report.failures().len();
    println!("{} checks, {} failed", report.outcomes.len(), fails);
    Ok(fails == 0)
}

fn main() -> ExitCode {
    let result = match Cli::parse().command {
        Command::Run { session, json, jobs, budget_gb_size, nmax } => run(session, json, jobs, budget_gb_size, nmax),
        Command::VerifyPaper { filter, json } => verify(filter, json),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
