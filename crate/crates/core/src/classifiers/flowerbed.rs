use std::collections::HashMap;

use crate::dyadic::Dyadic;
use crate::error::{invalid, Result};
use crate::model::{Convention, Outcome, Player};
use crate::nim::{lower, upper};

use super::sprigs::sprig_table;
use super::{strength_compare, trim, FlowerSpec, FlowerbedSpec, Strength};

/// One blue flower `*_b1:(x1)` against one red flower `*_c1:(-y1)` plus
/// stalks of nim-sum `a`. Identical under both conventions.
///
/// `x1` and `y1` are blossom magnitudes and must be positive.
pub fn flowerbed1_outcome(
    b1: u32,
    x1: Dyadic,
    c1: u32,
    y1: Dyadic,
    a: u64,
) -> Result<Outcome> {
    if b1 == 0 || c1 == 0 {
        return invalid("flower height must be at least 1");
    }
    if x1 <= Dyadic::ZERO || y1 <= Dyadic::ZERO {
        return invalid("blossom magnitudes must be positive");
    }
    if b1 == 1 && c1 == 1 {
        return invalid("two height-one flowers form a sprigs game");
    }
    if b1 > c1 {
        return Ok(flowerbed1_outcome(c1, y1, b1, x1, a)?.mirror());
    }
    if b1 < c1 {
        return Ok(if upper(a, b1 as u64 - 1) >= c1 as u64 {
            Outcome::N
        } else {
            Outcome::L
        });
    }
    let two_alpha = 1u64 << b1.trailing_zeros();
    Ok(if a >= two_alpha {
        Outcome::N
    } else if x1 == y1 {
        if a == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    } else if x1 > y1 {
        Outcome::L
    } else {
        Outcome::R
    })
}

/// Outcome of a generalized flowerbed.
///
/// Misère play is answered as normal play of the evil twin, which adds a
/// height-one stalk exactly when every component has height one.
pub fn flowerbed_outcome(bed: &FlowerbedSpec, convention: Convention) -> Result<Outcome> {
    for f in bed.flowers() {
        f.validate()?;
    }
    if bed.stalks().contains(&0) {
        return invalid("stalk heights must be at least 1");
    }
    let bed = match convention {
        Convention::Misere if bed.all_height_one() => bed.with_stalk(1),
        _ => bed.clone(),
    };
    let mut search = Search::default();
    let state = State::new(&bed);
    let left = search.left_first_wins(state.clone());
    let right = search.left_first_wins(state.mirror());
    Ok(Outcome::from_first_player_wins(left, right))
}

/// Normal-play state: flowers weakest first and the stalk nim-sum. Stalks
/// only matter through their nim-sum in normal play.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct State {
    blue: Vec<FlowerSpec>,
    red: Vec<FlowerSpec>,
    a: u64,
}

impl State {
    fn new(bed: &FlowerbedSpec) -> State {
        State {
            blue: bed.blue().to_vec(),
            red: bed.red().to_vec(),
            a: bed.stalk_nim_sum(),
        }
    }

    fn mirror(&self) -> State {
        State {
            blue: self.red.iter().map(FlowerSpec::mirror).collect(),
            red: self.blue.iter().map(FlowerSpec::mirror).collect(),
            a: self.a,
        }
    }

    fn trimmed(self) -> State {
        let bed = FlowerbedSpec::new(self.blue, self.red, Vec::new())
            .expect("state flowers are valid");
        let (t, _) = trim(&bed);
        State {
            blue: t.blue().to_vec(),
            red: t.red().to_vec(),
            a: self.a,
        }
    }

    fn without_red(&self, i: usize, a: u64) -> State {
        let mut red = self.red.clone();
        red.remove(i);
        State {
            blue: self.blue.clone(),
            red,
            a,
        }
    }

    fn without_blue(&self, i: usize, a: u64) -> State {
        let mut blue = self.blue.clone();
        blue.remove(i);
        State {
            blue,
            red: self.red.clone(),
            a,
        }
    }

    fn flowers(&self) -> impl Iterator<Item = &FlowerSpec> {
        self.blue.iter().chain(&self.red)
    }
}

#[derive(Default)]
struct Search {
    memo: HashMap<State, bool>,
}

impl Search {
    fn right_first_wins(&mut self, s: State) -> bool {
        self.left_first_wins(s.mirror())
    }

    /// Does Left win moving first?
    fn left_first_wins(&mut self, s: State) -> bool {
        let s = s.trimmed();
        if let Some(&w) = self.memo.get(&s) {
            return w;
        }
        let delta = s.blue.len() as i64 - s.red.len() as i64;
        let wins = match delta {
            d if d >= 1 => true,
            d if d <= -2 => false,
            // Left must cut into the stem of some red flower, leaving any
            // shorter stalk behind.
            -1 => (0..s.red.len()).any(|i| {
                (0..s.red[i].height as u64)
                    .any(|h| !self.right_first_wins(s.without_red(i, s.a ^ h)))
            }),
            _ => self.balanced_left_first_wins(&s),
        };
        self.memo.insert(s, wins);
        wins
    }

    fn balanced_left_first_wins(&mut self, s: &State) -> bool {
        if s.blue.is_empty() {
            return s.a != 0;
        }
        if s.flowers().all(|f| f.height == 1) {
            let bed = FlowerbedSpec::new(s.blue.clone(), s.red.clone(), Vec::new())
                .expect("state flowers are valid");
            let mut summary = bed.summary();
            summary.stalk_nim_sum = s.a;
            return sprig_table(summary).first_player_wins(Player::Left);
        }
        // Trimmed, so the weakest flower overall has a unique color. Its
        // owner wins moving second; the first player wins holding it.
        if strength_compare(&s.red[0], &s.blue[0]) == Strength::Weaker {
            return true;
        }
        if s.blue.len() == 1 {
            let (b, r) = (s.blue[0], s.red[0]);
            return flowerbed1_outcome(b.height, b.blossom, r.height, r.blossom.abs(), s.a)
                .expect("trimmed single pair is a valid flowerbed")
                .first_player_wins(Player::Left);
        }
        // Left cuts a red stem maximizing the stalk nim-sum, Right answers in
        // a blue stem minimizing it.
        (0..s.red.len()).any(|i| {
            let a1 = upper(s.a, s.red[i].height as u64 - 1);
            let after_left = s.without_red(i, a1);
            (0..after_left.blue.len()).all(|j| {
                let a2 = lower(a1, after_left.blue[j].height as u64 - 1);
                self.left_first_wins(after_left.without_blue(j, a2))
            })
        })
    }
}
