//! Acceptance gate: every verification suite at its default bounds, with the
//! expected instance count, zero failures and a wall-clock budget.
//!
//! Runs without the libtest harness so the per-criterion lines always print.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hackenbush::verify::{run_suite, VerifyOptions, SUITES};

struct Criterion {
    suite: &'static str,
    instances: usize,
    budget: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 12] = [
    Criterion { suite: "nimsum-formulas", instances: 512, budget: secs(5) },
    Criterion { suite: "nimsum-laws", instances: 1064, budget: secs(30) },
    Criterion { suite: "shrub-colon", instances: 85, budget: secs(60) },
    Criterion { suite: "shrub-equivalence", instances: 200, budget: secs(300) },
    Criterion { suite: "bouton", instances: 140, budget: secs(60) },
    Criterion { suite: "redblue-values", instances: 729, budget: secs(60) },
    Criterion { suite: "sprigs-table", instances: 2250, budget: secs(600) },
    Criterion { suite: "flowerbed-n1", instances: 600, budget: secs(600) },
    Criterion { suite: "main-theorem", instances: 1200, budget: secs(900) },
    Criterion { suite: "star-cancel", instances: 700, budget: secs(300) },
    Criterion { suite: "flowerbed-general", instances: 226, budget: secs(1800) },
    Criterion { suite: "cli-roundtrip", instances: 2656, budget: secs(10) },
];

fn check(c: &Criterion) -> Result<String, String> {
    let start = Instant::now();
    let report = run_suite(c.suite, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let detail = format!(
        "{} checked, {} failed, {} ms (budget {} s)",
        report.total(),
        report.failures(),
        elapsed.as_millis(),
        c.budget.as_secs()
    );
    if report.total() != c.instances {
        return Err(format!("{detail}; expected {} instances", c.instances));
    }
    if report.failures() != 0 || elapsed >= c.budget {
        return Err(detail);
    }
    Ok(detail)
}

fn main() -> ExitCode {
    let mut failed = 0;
    assert_eq!(CRITERIA.map(|c| c.suite), SUITES, "criteria and suites out of step");
    for (i, c) in CRITERIA.iter().enumerate() {
        match check(c) {
            Ok(detail) => println!("[{:>2}] PASS {:<18} {detail}", i + 1, c.suite),
            Err(detail) => {
                failed += 1;
                println!("[{:>2}] FAIL {:<18} {detail}", i + 1, c.suite);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
