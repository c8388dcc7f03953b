//! Star-based positions: one green edge to the ground carrying a crown.
//! A mirrored pair of them disappears from any dicot sum under misère play.

use hackenbush::classifiers::star_based_outcomes;
use hackenbush::game::Context;
use hackenbush::generators::{sample_contexts, ContextFamily};
use hackenbush::model::{Color, Convention};
use hackenbush::oracle::Solver;
use hackenbush::position::{stalk, string, Position};

pub fn run_example() -> hackenbush::Result<()> {
    let mut solver = Solver::new();
    let crown = string(&[Color::Blue, Color::Red, Color::Red]);
    let star = stalk(1).graft(1, &crown)?;
    let (normal, misere) = star_based_outcomes(&star, &mut solver)?;
    println!("*:BRR normal {normal} misere {misere}");

    let pair = star.disjunctive_sum(&stalk(1).graft(1, &crown.mirror())?);
    let mut contexts = sample_contexts(&ContextFamily::DicotTrees { depth: 2 }, 5, 1);
    contexts.push(Context::empty());
    for ctx in contexts {
        let alone = solver.outcome(&ctx.attach(&Position::empty()), Convention::Misere);
        let with = solver.outcome(&ctx.attach(&pair), Convention::Misere);
        println!("context {:<32} misere alone {alone} with pair {with}", ctx.to_string());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
