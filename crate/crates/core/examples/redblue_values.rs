//! Values of red-blue strings and how their sign decides the winner.

use hackenbush::model::{Color, Convention};
use hackenbush::oracle::Solver;
use hackenbush::position::{string, string_for_value, string_value};

pub fn run_example() -> hackenbush::Result<()> {
    use Color::{Blue as B, Red as R};
    let mut solver = Solver::new();
    for colors in [vec![B], vec![B, R], vec![B, R, R], vec![R, B, B], vec![B, B, R, B]] {
        let p = string(&colors);
        let value = solver.redblue_value(&p)?;
        let letters: String = colors.iter().map(|c| c.letter()).collect();
        println!(
            "{letters:<5} value {:<5} closed form {:<5} normal outcome {}",
            value.to_string(),
            string_value(&colors)?.to_string(),
            solver.outcome(&p, Convention::Normal)
        );
    }
    let x = "-5/4".parse()?;
    let colors = string_for_value(x);
    println!("a string worth {x}: {}", colors.iter().map(|c| c.letter()).collect::<String>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
