use crate::dyadic::Dyadic;
use crate::error::{invalid, Result};
use crate::model::{Convention, Outcome};

use super::{trim, FlowerbedSpec, SprigsSummary};

/// Normal-play outcome of sprigs plus stalks from advantage, edge and stalk
/// nim-sum alone.
pub(crate) fn sprig_table(s: SprigsSummary) -> Outcome {
    let SprigsSummary {
        advantage,
        edge,
        stalk_nim_sum: a,
    } = s;
    match advantage {
        d if d >= 2 => Outcome::L,
        d if d <= -2 => Outcome::R,
        1 if edge <= Dyadic::ZERO && a == 0 => Outcome::N,
        1 => Outcome::L,
        -1 if edge >= Dyadic::ZERO && a == 0 => Outcome::N,
        -1 => Outcome::R,
        _ if a != 0 => Outcome::N,
        _ => match edge.signum() {
            1 => Outcome::L,
            -1 => Outcome::R,
            _ => Outcome::P,
        },
    }
}

/// Outcome of a sum of sprigs (height-one generalized flowers) and stalks.
///
/// The sprigs must not contain a canceling pair; run [`trim`] first.
pub fn sprigs_outcome(bed: &FlowerbedSpec, convention: Convention) -> Result<Outcome> {
    if bed.flowers().any(|f| f.height != 1) {
        return invalid("sprigs have height one");
    }
    if !trim(bed).1.is_empty() {
        return invalid("sprigs contain a canceling pair; trim them first");
    }
    let mut summary = bed.summary();
    if convention == Convention::Misere && bed.all_height_one() {
        summary.stalk_nim_sum ^= 1;
    }
    Ok(sprig_table(summary))
}

/// Misère outcome of a flowerbed whose trimmed form is made of sprigs, read
/// straight off the table with `a` taken as the parity of the height-one
/// stalks.
///
/// Requires height-one stalks, a balanced trimmed form of sprigs, and at
/// least one flower of height two or more (necessarily in a canceling pair).
/// Without a tall flower the position is a plain sprigs game, whose misère
/// outcome [`sprigs_outcome`] gives.
pub fn trimmed_sprig_outcome(bed: &FlowerbedSpec) -> Result<Outcome> {
    if bed.stalks().iter().any(|&h| h != 1) {
        return invalid("stalks must all have height one");
    }
    if bed.flowers().all(|f| f.height == 1) {
        return invalid("needs a canceling pair of flowers of height at least two");
    }
    let (trimmed, _) = trim(bed);
    if trimmed.flowers().any(|f| f.height != 1) {
        return invalid("the trimmed form must consist of sprigs");
    }
    if trimmed.blue().len() != trimmed.red().len() {
        return invalid("the trimmed form must have as many blue as red sprigs");
    }
    let mut summary = trimmed.summary();
    summary.stalk_nim_sum = (bed.stalks().len() % 2) as u64;
    Ok(sprig_table(summary))
}
