//! The acceptance criteria, run in order with the default seed. Each prints a
//! single PASS/FAIL line; the target fails if any criterion fails or exceeds
//! its time budget.

use std::process::ExitCode;

use fsheaf::acceptance::{run_criterion, CRITERIA};
use fsheaf::sample::DEFAULT_SEED;

fn main() -> ExitCode {
    let mut failures = Vec::new();
    for c in &CRITERIA {
        let r = run_criterion(c, DEFAULT_SEED);
        println!("{}", r.line());
        if !r.pass {
            failures.push(format!("criterion {} failed: {}", r.id, r.detail));
        } else if !r.within_budget() {
            failures.push(format!(
                "criterion {} took {:?}, budget {} ms",
                r.id, r.elapsed, r.budget_ms
            ));
        }
    }
    if failures.is_empty() {
        println!(
            "acceptance: {} of {} criteria pass",
            CRITERIA.len(),
            CRITERIA.len()
        );
        ExitCode::SUCCESS
    } else {
        for f in &failures {
            eprintln!("{f}");
        }
        ExitCode::FAILURE
    }
}
