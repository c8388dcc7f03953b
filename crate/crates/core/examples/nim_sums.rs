//! Nim-sum, upper and lower nim-sums, and chained evaluation.

use hackenbush::nim::{self, chain_eval, ChainStep};

pub fn run_example() -> hackenbush::Result<()> {
    println!("  m  n | xor upper lower");
    for (m, n) in [(5, 3), (6, 6), (4, 1), (12, 10), (0, 7)] {
        println!(
            "{m:>3} {n:>2} | {:>3} {:>5} {:>5}",
            nim::xor(m, n),
            nim::upper(m, n),
            nim::lower(m, n)
        );
    }
    // a stalk of height 9 raised by 2, then lowered by 3
    let steps = [ChainStep::upper(2), ChainStep::lower(3)];
    println!("chain from 9: {}", chain_eval(9, &steps));
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
