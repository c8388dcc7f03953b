//! Outcome classes of positions written in the text format, both conventions.

use hackenbush::dsl;
use hackenbush::model::Convention;
use hackenbush::oracle::Solver;

pub fn run_example() -> hackenbush::Result<()> {
    let mut solver = Solver::new();
    let positions = [
        "",
        "stalk(1)",
        "stalk(1)+stalk(1)",
        "string(BR)+string(RB)",
        "flower(2; 1 B)+flower(3; 1 R)",
        "graph{(g0 a G)(a b B)(b g0 R)(a a R)}",
    ];
    for text in positions {
        let p = dsl::parse(text)?.to_position()?;
        let normal = solver.outcome(&p, Convention::Normal);
        let misere = solver.outcome(&p, Convention::Misere);
        println!("{:<40} normal {normal}  misere {misere}", format!("`{text}`"));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
