//! Exact dyadic rationals `a / 2^b`, the values of Red-Blue Hackenbush positions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A dyadic rational `numerator / 2^exponent` kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: i64,
    exponent: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic {
        numerator: 0,
        exponent: 0,
    };
    pub const ONE: Dyadic = Dyadic {
        numerator: 1,
        exponent: 0,
    };

    pub fn new(numerator: i64, exponent: u32) -> Dyadic {
        let mut d = Dyadic {
            numerator,
            exponent,
        };
        d.normalize();
        d
    }

    pub fn integer(n: i64) -> Dyadic {
        Dyadic::new(n, 0)
    }

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_integer(self) -> bool {
        self.exponent == 0
    }

    pub fn signum(self) -> i64 {
        self.numerator.signum()
    }

    pub fn abs(self) -> Dyadic {
        Dyadic {
            numerator: self.numerator.abs(),
            exponent: self.exponent,
        }
    }

    /// Largest integer `<= self`.
    pub fn floor(self) -> i64 {
        self.numerator >> self.exponent
    }

    /// Smallest integer `>= self`.
    pub fn ceil(self) -> i64 {
        -((-self.numerator) >> self.exponent)
    }

    fn normalize(&mut self) {
        if self.numerator == 0 {
            self.exponent = 0;
            return;
        }
        let shift = self.numerator.trailing_zeros().min(self.exponent);
        self.numerator >>= shift;
        self.exponent -= shift;
    }

    /// Numerator scaled to a common exponent `e >= self.exponent`.
    fn scaled(self, e: u32) -> i128 {
        (self.numerator as i128) << (e - self.exponent)
    }

    /// The simplest number strictly between `lo` and `hi`; `None` stands for
    /// an absent bound (`-inf` below, `+inf` above).
    ///
    /// Returns `None` when the interval is empty.
    pub fn simplest_between(lo: Option<Dyadic>, hi: Option<Dyadic>) -> Option<Dyadic> {
        if let (Some(l), Some(h)) = (lo, hi) {
            if l >= h {
                return None;
            }
        }
        let above_lo = |x: Dyadic| lo.is_none_or(|l| x > l);
        let below_hi = |x: Dyadic| hi.is_none_or(|h| x < h);

        // Integers first, smallest magnitude wins.
        if above_lo(Dyadic::ZERO) && below_hi(Dyadic::ZERO) {
            return Some(Dyadic::ZERO);
        }
        let int_candidate = match (lo, hi) {
            (Some(l), _) if l >= Dyadic::ZERO => Dyadic::integer(l.floor() + 1),
            (_, Some(h)) => Dyadic::integer(h.ceil() - 1),
            _ => unreachable!("unbounded intervals contain zero"),
        };
        if above_lo(int_candidate) && below_hi(int_candidate) {
            return Some(int_candidate);
        }

        // Both bounds are present and lie within one unit interval.
        let (l, h) = (lo.unwrap(), hi.unwrap());
        let mut exponent = 1u32;
        loop {
            let e = exponent.max(l.exponent).max(h.exponent);
            let lo_scaled = l.scaled(e);
            // smallest multiple of 2^(e - exponent) strictly above lo
            let step = 1i128 << (e - exponent);
            let first = (lo_scaled.div_euclid(step) + 1) * step;
            if first < h.scaled(e) {
                return Some(Dyadic::new((first >> (e - exponent)) as i64, exponent));
            }
            exponent += 1;
        }
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::ZERO
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::integer(n)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        self.scaled(e).cmp(&other.scaled(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            numerator: -self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        let e = self.exponent.max(rhs.exponent);
        let sum = self.scaled(e) + rhs.scaled(e);
        Dyadic::new(
            i64::try_from(sum).expect("dyadic numerator overflow"),
            e,
        )
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `n`, `-n`, and `n/d` with `d` a power of two.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("`{s}` is not a dyadic rational"));
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(Dyadic::integer).map_err(|_| bad()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                let den: u64 = den.trim().parse().map_err(|_| bad())?;
                if den == 0 || !den.is_power_of_two() || den > (1 << 62) {
                    return Err(bad());
                }
                Ok(Dyadic::new(num, den.trailing_zeros()))
            }
        }
    }
}
