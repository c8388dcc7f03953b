//! The evil twin turns a misère question into a normal-play one.

use hackenbush::classifiers::{classify_sum, evil_twin, BlossomStyle};
use hackenbush::dsl::{self, PositionDoc};
use hackenbush::model::Convention::{Misere, Normal};
use hackenbush::oracle::Solver;

pub fn run_example() -> hackenbush::Result<()> {
    let mut solver = Solver::new();
    let sums = [
        "stalk(1)+stalk(1)",
        "gflower(1; 1)+gflower(1; -1/2)",
        "graph{(g0 a G)(a b G)(a c G)}+gflower(2; -1)",
        "gflower(3; 3/2)+gflower(2; -1)+stalk(2)",
    ];
    for text in sums {
        let g = dsl::parse(text)?.to_sum_spec(&mut solver)?;
        let twin = evil_twin(&g);
        let p = g.realize(BlossomStyle::String)?;
        let q = twin.realize(BlossomStyle::String)?;
        println!("G  = {}", PositionDoc::from_sum_spec(&g));
        println!("G* = {}", PositionDoc::from_sum_spec(&twin));
        println!(
            "  normal(G) {}  misere(G*) {}  |  misere(G) {}  normal(G*) {}  classifier misere(G) {}",
            solver.outcome(&p, Normal),
            solver.outcome(&q, Misere),
            solver.outcome(&p, Misere),
            solver.outcome(&q, Normal),
            classify_sum(&g, Misere)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
