//! Sprig games: flowers of height one, classified by advantage, edge and
//! stalk nim-sum, and checked against the oracle.

use hackenbush::classifiers::{sprigs_outcome, BlossomStyle, FlowerSpec, FlowerbedSpec};
use hackenbush::dyadic::Dyadic;
use hackenbush::model::Convention;
use hackenbush::oracle::Solver;

pub fn run_example() -> hackenbush::Result<()> {
    let sprig = |x: &str| -> hackenbush::Result<FlowerSpec> { Ok(FlowerSpec::new(1, x.parse::<Dyadic>()?)) };
    let games = [
        (vec![sprig("1")?, sprig("-1/2")?], vec![]),
        (vec![sprig("1")?, sprig("-3/2")?], vec![1]),
        (vec![sprig("2")?, sprig("-1")?], vec![]),
        (vec![sprig("1/2")?], vec![1, 1]),
        (vec![sprig("3/2")?, sprig("3/2")?, sprig("-2")?], vec![1]),
    ];
    let mut solver = Solver::new();
    for (flowers, stalks) in games {
        let bed = FlowerbedSpec::from_parts(&flowers, &stalks)?;
        let s = bed.summary();
        let p = bed.realize(BlossomStyle::String)?;
        for c in Convention::BOTH {
            let got = sprigs_outcome(&bed, c)?;
            println!(
                "{:<28} adv {:>2} edge {:>4} a {} {c:<6} -> {got} (oracle {})",
                bed.to_string(),
                s.advantage,
                s.edge.to_string(),
                s.stalk_nim_sum,
                solver.outcome(&p, c)
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
