//! Runs the nine verification criteria with default settings and prints one
//! PASS/FAIL line per criterion.

use std::process::ExitCode;

use ev_cli::{run_criterion, Config, Tally, CRITERIA};

fn main() -> ExitCode {
    let cfg = Config::default();
    let tally = Tally::default();
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let c = run_criterion(id, &cfg, &tally);
        println!("criterion {id}: {}", c.line());
        if !c.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
