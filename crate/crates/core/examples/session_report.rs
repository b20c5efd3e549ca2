//! Parsing a session, running it and printing the JSON report.
//!
//! cargo run --example session_report

use reeslab::session::{parse_session, run_tasks, verify_paper_corpus, RunOptions};

const SESSION: &str = "
version 1
ring q[X,Y]
ideal I = X^4, X*Y^2, X^3*Y
ideal J = X*Y^2, X^4
task length I J
task rees I J nrange=1..8
task reduction I I
";

fn main() -> reeslab::Result<()> {
    let session = parse_session(SESSION)?;
    print!("canonical form:\n{}", session.to_canonical_string());
    let report = run_tasks(&session, &RunOptions { jobs: Some(2), default_nmax: None })?;
    println!("{}", serde_json::to_string_pretty(&report.json["tasks"][1]["result"]).unwrap());
    println!("exit code {}", report.exit_code());

    if let Err(e) = parse_session("ring q[x,y]\nideal A = x + \n") {
        println!("{e}");
    }

    let corpus = verify_paper_corpus(Some("filtration"))?;
    for o in &corpus.outcomes {
        println!("{o}");
    }
    Ok(())
}
