//! Closed-form and recursive outcome classifiers for the structured families:
//! nim heaps, shrubs, sprigs and generalized flowerbeds, sums of those, and
//! star-based positions.
//!
//! Every classifier here is checked against the exhaustive oracle; misère
//! answers go through the evil twin and normal play unless stated otherwise.

mod flowerbed;
mod shrub;
mod sprigs;
mod star;
mod sum;

use std::cmp::Ordering;
use std::fmt;

use crate::dyadic::Dyadic;
use crate::error::{invalid, Result};
use crate::model::{Color, Convention, Outcome};
use crate::nim::xor_all;
use crate::position::{self, Position};

pub use flowerbed::{flowerbed1_outcome, flowerbed_outcome};
pub use shrub::{shrub_value, Shrub};
pub use sprigs::{sprigs_outcome, trimmed_sprig_outcome};
pub use star::star_based_outcomes;
pub use sum::{classify_sum, evil_twin, Component, SumSpec};

/// Outcome of a nim position with the given heap sizes.
pub fn nim_outcome(heights: &[u64], convention: Convention) -> Outcome {
    let mut heaps = heights.to_vec();
    if convention == Convention::Misere && heaps.iter().all(|&h| h <= 1) {
        // the evil twin: one extra heap of size one
        heaps.push(1);
    }
    if xor_all(heaps) == 0 {
        Outcome::P
    } else {
        Outcome::N
    }
}

/// A generalized flower `*_h:(x)`: a green stem of `height` edges carrying a
/// red-blue blossom of value `blossom`. Positive blossoms are blue flowers,
/// negative ones red.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FlowerSpec {
    pub height: u32,
    pub blossom: Dyadic,
}

impl FlowerSpec {
    pub fn new(height: u32, blossom: Dyadic) -> FlowerSpec {
        FlowerSpec { height, blossom }
    }

    /// `None` for a zero blossom, which behaves as a plain stalk.
    pub fn color(&self) -> Option<Color> {
        match self.blossom.signum() {
            1 => Some(Color::Blue),
            -1 => Some(Color::Red),
            _ => None,
        }
    }

    pub fn mirror(&self) -> FlowerSpec {
        FlowerSpec::new(self.height, -self.blossom)
    }

    pub fn validate(&self) -> Result<()> {
        if self.height == 0 {
            return invalid("flower height must be at least 1");
        }
        if self.blossom == Dyadic::ZERO {
            return invalid("a zero blossom makes a stalk, not a flower");
        }
        Ok(())
    }

    /// Build the flower as a Hackenbush position.
    pub fn realize(&self, style: BlossomStyle) -> Result<Position> {
        if self.height == 0 {
            return invalid("flower height must be at least 1");
        }
        let h = self.height as usize;
        match style {
            BlossomStyle::String => {
                let blossom = position::string(&position::string_for_value(self.blossom));
                position::generalized_flower(h, &blossom)
            }
            BlossomStyle::Loops => {
                if !self.blossom.is_integer() {
                    return invalid(format!(
                        "a loop bouquet has an integer value, not {}",
                        self.blossom
                    ));
                }
                let n = self.blossom.numerator();
                if n == 0 {
                    return Ok(position::stalk(h));
                }
                let color = if n > 0 { Color::Blue } else { Color::Red };
                position::flower(h, n.unsigned_abs() as usize, color)
            }
        }
    }
}

impl fmt::Display for FlowerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*{}:({})", self.height, self.blossom)
    }
}

/// How a blossom value is turned into an actual red-blue graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BlossomStyle {
    /// The sign-expansion string of the value.
    #[default]
    String,
    /// A bouquet of self-loops; integer values only.
    Loops,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    Weaker,
    Stronger,
    EquallyWeak,
}

/// A taller stem is weaker; at equal height the smaller blossom magnitude is.
pub fn strength_compare(f1: &FlowerSpec, f2: &FlowerSpec) -> Strength {
    match weakness_order(f1, f2) {
        Ordering::Less => Strength::Weaker,
        Ordering::Greater => Strength::Stronger,
        Ordering::Equal => Strength::EquallyWeak,
    }
}

/// Total preorder with the weakest flower first.
fn weakness_order(f1: &FlowerSpec, f2: &FlowerSpec) -> Ordering {
    f2.height
        .cmp(&f1.height)
        .then_with(|| f1.blossom.abs().cmp(&f2.blossom.abs()))
}

/// A sum of blue flowers, red flowers and green stalks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FlowerbedSpec {
    blue: Vec<FlowerSpec>,
    red: Vec<FlowerSpec>,
    stalks: Vec<u32>,
}

impl FlowerbedSpec {
    /// Flowers are sorted weakest first (stably) and stalks ascending.
    pub fn new(
        mut blue: Vec<FlowerSpec>,
        mut red: Vec<FlowerSpec>,
        mut stalks: Vec<u32>,
    ) -> Result<FlowerbedSpec> {
        for f in blue.iter().chain(&red) {
            f.validate()?;
        }
        if blue.iter().any(|f| f.blossom < Dyadic::ZERO) {
            return invalid("blue flowers have positive blossoms");
        }
        if red.iter().any(|f| f.blossom > Dyadic::ZERO) {
            return invalid("red flowers have negative blossoms");
        }
        if stalks.contains(&0) {
            return invalid("stalk heights must be at least 1");
        }
        blue.sort_by(weakness_order);
        red.sort_by(weakness_order);
        stalks.sort_unstable();
        Ok(FlowerbedSpec { blue, red, stalks })
    }

    /// Sort flowers into colors by blossom sign; zero blossoms become stalks.
    pub fn from_parts(flowers: &[FlowerSpec], stalks: &[u32]) -> Result<FlowerbedSpec> {
        let mut blue = Vec::new();
        let mut red = Vec::new();
        let mut all_stalks = stalks.to_vec();
        for f in flowers {
            match f.color() {
                Some(Color::Blue) => blue.push(*f),
                Some(_) => red.push(*f),
                None => all_stalks.push(f.height),
            }
        }
        FlowerbedSpec::new(blue, red, all_stalks)
    }

    pub fn blue(&self) -> &[FlowerSpec] {
        &self.blue
    }

    pub fn red(&self) -> &[FlowerSpec] {
        &self.red
    }

    pub fn stalks(&self) -> &[u32] {
        &self.stalks
    }

    pub fn flower_count(&self) -> usize {
        self.blue.len() + self.red.len()
    }

    pub fn flowers(&self) -> impl Iterator<Item = &FlowerSpec> {
        self.blue.iter().chain(&self.red)
    }

    pub fn stalk_nim_sum(&self) -> u64 {
        xor_all(self.stalks.iter().map(|&h| h as u64))
    }

    /// Every flower and every stalk has height one (vacuously for the empty bed).
    pub fn all_height_one(&self) -> bool {
        self.flowers().all(|f| f.height == 1) && self.stalks.iter().all(|&h| h == 1)
    }

    pub fn summary(&self) -> SprigsSummary {
        let edge = match (self.blue.iter().map(|f| f.blossom).min(), self.red.iter().map(|f| f.blossom.abs()).min()) {
            (Some(x), Some(y)) => x - y,
            _ => Dyadic::ZERO,
        };
        SprigsSummary {
            advantage: self.blue.len() as i64 - self.red.len() as i64,
            edge,
            stalk_nim_sum: self.stalk_nim_sum(),
        }
    }

    pub fn mirror(&self) -> FlowerbedSpec {
        FlowerbedSpec {
            blue: self.red.iter().map(FlowerSpec::mirror).collect(),
            red: self.blue.iter().map(FlowerSpec::mirror).collect(),
            stalks: self.stalks.clone(),
        }
    }

    pub fn with_stalk(&self, height: u32) -> FlowerbedSpec {
        let mut out = self.clone();
        out.stalks.push(height);
        out.stalks.sort_unstable();
        out
    }

    /// Drop pairs of height-one stalks, which cancel in the misère dicot
    /// universe. Never valid inside normal-play reasoning about other stalks.
    pub fn cancel_star_pairs(&self) -> FlowerbedSpec {
        let ones = self.stalks.iter().filter(|&&h| h == 1).count();
        let mut stalks: Vec<u32> = self.stalks.iter().copied().filter(|&h| h != 1).collect();
        if ones % 2 == 1 {
            stalks.push(1);
        }
        stalks.sort_unstable();
        FlowerbedSpec {
            blue: self.blue.clone(),
            red: self.red.clone(),
            stalks,
        }
    }

    pub fn realize(&self, style: BlossomStyle) -> Result<Position> {
        let mut parts = Vec::new();
        for f in self.flowers() {
            parts.push(f.realize(style)?);
        }
        parts.extend(self.stalks.iter().map(|&h| position::stalk(h as usize)));
        Ok(Position::sum_all(&parts))
    }
}

impl fmt::Display for FlowerbedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.flowers().map(ToString::to_string).collect();
        parts.extend(self.stalks.iter().map(|h| format!("*{h}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Pairs removed by [`trim`], blue first.
pub type CancelingPair = (FlowerSpec, FlowerSpec);

/// Remove blue/red pairs of equally weak flowers: same height and same
/// blossom magnitude. Such a pair is `F + (-F)`.
pub fn trim(f: &FlowerbedSpec) -> (FlowerbedSpec, Vec<CancelingPair>) {
    let mut red: Vec<Option<FlowerSpec>> = f.red.iter().copied().map(Some).collect();
    let mut blue = Vec::new();
    let mut removed = Vec::new();
    for b in &f.blue {
        let partner = red
            .iter_mut()
            .find(|r| r.is_some_and(|r| strength_compare(b, &r) == Strength::EquallyWeak));
        match partner {
            Some(slot) => removed.push((*b, slot.take().unwrap())),
            None => blue.push(*b),
        }
    }
    let trimmed = FlowerbedSpec {
        blue,
        red: red.into_iter().flatten().collect(),
        stalks: f.stalks.clone(),
    };
    (trimmed, removed)
}

/// Advantage, edge and stalk nim-sum of a flowerbed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SprigsSummary {
    /// Blue flowers minus red flowers.
    pub advantage: i64,
    /// Smallest blue blossom minus smallest red magnitude; zero if a color is absent.
    pub edge: Dyadic,
    pub stalk_nim_sum: u64,
}
