//! Every cargo example runs to completion.

#[path = "../examples/nim_sums.rs"]
mod nim_sums;
#[path = "../examples/outcomes.rs"]
mod outcomes;
#[path = "../examples/shrubs.rs"]
mod shrubs;
#[path = "../examples/redblue_values.rs"]
mod redblue_values;
#[path = "../examples/sprigs.rs"]
mod sprigs;
#[path = "../examples/flowerbeds.rs"]
mod flowerbeds;
#[path = "../examples/evil_twin.rs"]
mod evil_twin;
#[path = "../examples/star_based.rs"]
mod star_based;
#[path = "../examples/text_format.rs"]
mod text_format;
#[path = "../examples/verify_suite.rs"]
mod verify_suite;

#[test]
fn nim_sums_runs() {
    nim_sums::run_example().unwrap();
}

#[test]
fn outcomes_runs() {
    outcomes::run_example().unwrap();
}

#[test]
fn shrubs_runs() {
    shrubs::run_example().unwrap();
}

#[test]
fn redblue_values_runs() {
    redblue_values::run_example().unwrap();
}

#[test]
fn sprigs_runs() {
    sprigs::run_example().unwrap();
}

#[test]
fn flowerbeds_runs() {
    flowerbeds::run_example().unwrap();
}

#[test]
fn evil_twin_runs() {
    evil_twin::run_example().unwrap();
}

#[test]
fn star_based_runs() {
    star_based::run_example().unwrap();
}

#[test]
fn text_format_runs() {
    text_format::run_example().unwrap();
}

#[test]
fn verify_suite_runs() {
    verify_suite::run_example().unwrap();
}
