//! Nimbers, nim-sums and the upper/lower nim-sums.
//!
//! `upper(m, n)` is the largest and `lower(m, n)` the smallest value of
//! `m ^ n'` over `0 <= n' <= n`. Both have closed forms in terms of the
//! binary digits of `m` and `n`; the `*_slow` variants scan the definition
//! directly and serve as the reference for the fast path.

use std::fmt;
use std::ops::BitXor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Nimber(pub u64);

impl Nimber {
    pub const ZERO: Nimber = Nimber(0);

    pub fn value(self) -> u64 {
        self.0
    }
}

impl From<u64> for Nimber {
    fn from(v: u64) -> Self {
        Nimber(v)
    }
}

impl BitXor for Nimber {
    type Output = Nimber;

    fn bitxor(self, rhs: Nimber) -> Nimber {
        Nimber(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Nimber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn xor(m: u64, n: u64) -> u64 {
    m ^ n
}

/// Nim-sum of a collection of heaps.
pub fn xor_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(0, |acc, v| acc ^ v)
}

pub fn upper_slow(m: u64, n: u64) -> u64 {
    (0..=n).map(|k| m ^ k).max().unwrap()
}

pub fn lower_slow(m: u64, n: u64) -> u64 {
    (0..=n).map(|k| m ^ k).min().unwrap()
}

/// Highest bit position where the mask is set, or `None`.
fn top_bit(mask: u64) -> Option<u32> {
    (mask != 0).then(|| 63 - mask.leading_zeros())
}

/// Bits `0..=alpha` all set, where `alpha` is the highest position at which
/// both `m` and `n` have a one; `m ^ n` above it.
pub fn upper(m: u64, n: u64) -> u64 {
    match top_bit(m & n) {
        None => m ^ n,
        Some(alpha) => {
            let low = if alpha == 63 { u64::MAX } else { (1u64 << (alpha + 1)) - 1 };
            ((m ^ n) & !low) | low
        }
    }
}

/// Bits `0..=beta` cleared, where `beta` is the highest position at which
/// `m` has a zero and `n` a one; `m ^ n` above it.
pub fn lower(m: u64, n: u64) -> u64 {
    match top_bit(!m & n) {
        None => m ^ n,
        Some(beta) => {
            let low = if beta == 63 { u64::MAX } else { (1u64 << (beta + 1)) - 1 };
            (m ^ n) & !low
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainOp {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainStep {
    pub op: ChainOp,
    pub operand: u64,
}

impl ChainStep {
    pub fn upper(operand: u64) -> ChainStep {
        ChainStep {
            op: ChainOp::Upper,
            operand,
        }
    }

    pub fn lower(operand: u64) -> ChainStep {
        ChainStep {
            op: ChainOp::Lower,
            operand,
        }
    }

    pub fn apply(self, acc: u64) -> u64 {
        match self.op {
            ChainOp::Upper => upper(acc, self.operand),
            ChainOp::Lower => lower(acc, self.operand),
        }
    }
}

/// Evaluate `a op1 b1 op2 b2 ...` strictly left to right.
pub fn chain_eval(a: u64, steps: &[ChainStep]) -> u64 {
    steps.iter().fold(a, |acc, step| step.apply(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn xor_examples() {
        assert_eq!(xor(5, 3), 6);
        assert_eq!(xor(9, 0), 9);
        assert_eq!(xor(9, 9), 0);
        assert_eq!(Nimber(5) ^ Nimber(3), Nimber(6));
    }

    #[test]
    fn scan_examples() {
        // {5^0, 5^1, 5^2, 5^3} = {5, 4, 7, 6}
        assert_eq!(upper_slow(5, 3), 7);
        assert_eq!(lower_slow(5, 3), 4);
        assert_eq!(upper_slow(11, 0), 11);
        assert_eq!(lower_slow(11, 0), 11);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(upper(5, 3), 7);
        assert_eq!(lower(5, 3), 4);
        // {2, 3, 0}
        assert_eq!(upper(2, 2), 3);
        assert_eq!(lower(2, 2), 0);
    }

    #[test]
    fn closed_form_matches_scan_exhaustively() {
        for m in 0..128 {
            for n in 0..128 {
                assert_eq!(upper(m, n), upper_slow(m, n), "upper({m},{n})");
                assert_eq!(lower(m, n), lower_slow(m, n), "lower({m},{n})");
            }
        }
    }

    #[test]
    fn wide_values() {
        let big = 1u64 << 40;
        assert_eq!(upper(big, big), (1u64 << 41) - 1);
        assert_eq!(lower(big, big), 0);
        assert_eq!(upper(u64::MAX, u64::MAX), u64::MAX);
        assert_eq!(lower(0, u64::MAX), 0);
        assert_eq!(upper(1 << 33, 5), (1 << 33) ^ 5);
    }

    #[test]
    fn chain_examples() {
        assert_eq!(chain_eval(7, &[]), 7);
        // upper(0,1) = 1, lower(1,2) = min{1,0,3} = 0
        assert_eq!(
            chain_eval(0, &[ChainStep::upper(1), ChainStep::lower(2)]),
            0
        );
        assert_eq!(chain_eval(4, &[ChainStep::upper(1)]), 5);
    }

    proptest! {
        #[test]
        fn matches_scan(m in 0u64..4096, n in 0u64..600) {
            prop_assert_eq!(upper(m, n), upper_slow(m, n));
            prop_assert_eq!(lower(m, n), lower_slow(m, n));
        }

        #[test]
        fn upper_commutes(m in 0u64..1 << 20, n in 0u64..1 << 20) {
            prop_assert_eq!(upper(m, n), upper(n, m));
        }
    }
}
