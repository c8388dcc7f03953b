//! Green trees collapse to stalks: the computed shrub value equals the
//! exhaustive normal-play Grundy value.

use hackenbush::generators::enum_shrubs;
use hackenbush::oracle::Solver;

pub fn run_example() -> hackenbush::Result<()> {
    let mut solver = Solver::new();
    for shrub in enum_shrubs(4) {
        let grundy = solver.grundy_normal(&shrub.to_position())?;
        println!("{:<16} value {}  grundy {grundy}", shrub.to_string(), shrub.value());
        assert_eq!(shrub.value(), grundy);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
