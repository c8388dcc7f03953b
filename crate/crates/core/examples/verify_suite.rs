//! Running verification suites from code, with a reduced bound.

use hackenbush::verify::{run_suite, VerifyOptions};

pub fn run_example() -> hackenbush::Result<()> {
    let small = VerifyOptions::default().with_bound("limit", "64");
    let report = run_suite("nimsum-formulas", &small)?;
    let s = report.summary();
    println!("{}: {} checked, {} failed", s.suite, s.total, s.failures);

    for suite in ["shrub-colon", "bouton", "flowerbed-n1"] {
        let s = run_suite(suite, &VerifyOptions::default())?.summary();
        println!("{suite}: {} checked, {} failed in {} ms", s.total, s.failures, s.elapsed_ms);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
