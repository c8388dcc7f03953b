//! Flowerbeds: a single blue/red pair by closed form, larger beds by the
//! trimmed minimax classifier, both against the oracle.

use hackenbush::classifiers::{
    flowerbed1_outcome, flowerbed_outcome, trim, BlossomStyle, FlowerSpec, FlowerbedSpec,
};
use hackenbush::dyadic::Dyadic;
use hackenbush::model::Convention;
use hackenbush::oracle::Solver;

pub fn run_example() -> hackenbush::Result<()> {
    let one = Dyadic::integer(1);
    let two = Dyadic::integer(2);
    println!("one pair, stalk nim-sum a:");
    for (b, x, c, y, a) in [(2, one, 3, one, 0), (2, two, 2, one, 0), (4, one, 4, one, 3), (4, one, 4, one, 4)] {
        println!("  *{b}:({x}) vs *{c}:(-{y}), a = {a}: {}", flowerbed1_outcome(b, x, c, y, a)?);
    }

    let fl = |h, x: i64| FlowerSpec::new(h, Dyadic::integer(x));
    let bed = FlowerbedSpec::from_parts(&[fl(2, 1), fl(3, 2), fl(3, 1), fl(2, -1), fl(3, -1)], &[2])?;
    let (trimmed, pairs) = trim(&bed);
    println!("bed     {bed}");
    println!("trimmed {trimmed} ({} canceling pairs)", pairs.len());

    let mut solver = Solver::new();
    let p = bed.realize(BlossomStyle::Loops)?;
    for c in Convention::BOTH {
        println!("  {c:<6} classifier {} oracle {}", flowerbed_outcome(&bed, c)?, solver.outcome(&p, c));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
