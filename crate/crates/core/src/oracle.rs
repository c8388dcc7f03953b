//! Brute-force ground truth.
//!
//! Every question is answered by exhaustive search of the move graph with
//! memoization on exact keys. Sums are searched as a whole: the oracle never
//! decomposes a position into components, so it stays independent of the
//! closed-form classifiers it is used to check.

use std::collections::HashMap;

use crate::dyadic::Dyadic;
use crate::error::{invalid, Result};
use crate::game::{Context, Game};
use crate::model::{Convention, Outcome, Player};
use crate::position::Position;

#[derive(Debug, Clone, Copy, Default)]
struct FirstPlayerWins {
    left: Option<bool>,
    right: Option<bool>,
}

impl FirstPlayerWins {
    fn get(&self, p: Player) -> Option<bool> {
        match p {
            Player::Left => self.left,
            Player::Right => self.right,
        }
    }

    fn set(&mut self, p: Player, v: bool) {
        match p {
            Player::Left => self.left = Some(v),
            Player::Right => self.right = Some(v),
        }
    }
}

/// Result of a sampled equivalence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// Every sampled context gave equal outcomes.
    Agrees,
    /// The first context that separates the two games.
    Distinguished {
        context_index: usize,
        outcomes: (Outcome, Outcome),
    },
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        matches!(self, Equivalence::Agrees)
    }
}

/// A memoizing solver. Single owner; give each worker thread its own.
#[derive(Debug, Default)]
pub struct Solver {
    wins: HashMap<(Vec<u8>, Convention), FirstPlayerWins>,
    grundy: HashMap<(Vec<u8>, Convention), u64>,
    values: HashMap<Vec<u8>, Dyadic>,
    caching: bool,
}

impl Solver {
    pub fn new() -> Solver {
        Solver {
            caching: true,
            ..Default::default()
        }
    }

    /// A solver that never stores results. Only useful for checking that
    /// memoization is transparent.
    pub fn without_cache() -> Solver {
        Solver::default()
    }

    pub fn cached_entries(&self) -> usize {
        self.wins.len() + self.grundy.len() + self.values.len()
    }

    pub fn clear(&mut self) {
        self.wins.clear();
        self.grundy.clear();
        self.values.clear();
    }

    pub fn outcome<G: Game>(&mut self, game: &G, convention: Convention) -> Outcome {
        let key = game.key();
        let left = self.wins_moving_first(&key, game, Player::Left, convention);
        let right = self.wins_moving_first(&key, game, Player::Right, convention);
        Outcome::from_first_player_wins(left, right)
    }

    /// Does `mover`, moving first in `game`, win?
    pub fn first_player_wins<G: Game>(
        &mut self,
        game: &G,
        mover: Player,
        convention: Convention,
    ) -> bool {
        let key = game.key();
        self.wins_moving_first(&key, game, mover, convention)
    }

    fn wins_moving_first<G: Game>(
        &mut self,
        key: &[u8],
        game: &G,
        mover: Player,
        convention: Convention,
    ) -> bool {
        let cache_key = (key.to_vec(), convention);
        if let Some(hit) = self.wins.get(&cache_key).and_then(|e| e.get(mover)) {
            return hit;
        }
        let options = game.keyed_options(mover);
        let result = if options.is_empty() {
            convention == Convention::Misere
        } else {
            options.iter().any(|(k, o)| {
                !self.wins_moving_first(k, o, mover.opponent(), convention)
            })
        };
        if self.caching {
            self.wins.entry(cache_key).or_default().set(mover, result);
        }
        result
    }

    pub fn grundy_normal(&mut self, p: &Position) -> Result<u64> {
        self.grundy_value(p, Convention::Normal)
    }

    pub fn grundy_misere(&mut self, p: &Position) -> Result<u64> {
        self.grundy_value(p, Convention::Misere)
    }

    /// Nim-value by the mex rule; the empty game has value 0 under normal
    /// play and 1 under misère play.
    pub fn grundy_value(&mut self, p: &Position, convention: Convention) -> Result<u64> {
        if !p.is_green() {
            return invalid("nim-values are defined for all-green positions");
        }
        Ok(self.grundy_rec(p.encode(), p, convention))
    }

    fn grundy_rec(&mut self, key: Vec<u8>, p: &Position, convention: Convention) -> u64 {
        let cache_key = (key, convention);
        if let Some(&g) = self.grundy.get(&cache_key) {
            return g;
        }
        let options = p.keyed_options(Player::Left);
        let g = if options.is_empty() {
            match convention {
                Convention::Normal => 0,
                Convention::Misere => 1,
            }
        } else {
            let mut seen: Vec<u64> = options
                .into_iter()
                .map(|(k, o)| self.grundy_rec(k, &o, convention))
                .collect();
            seen.sort_unstable();
            seen.dedup();
            mex(&seen)
        };
        if self.caching {
            self.grundy.insert(cache_key, g);
        }
        g
    }

    /// Normal-play value of a red-blue position by the simplicity rule.
    pub fn redblue_value(&mut self, p: &Position) -> Result<Dyadic> {
        if !p.is_red_blue() {
            return invalid("red-blue values are defined for positions without green edges");
        }
        self.value_rec(p.encode(), p)
    }

    fn value_rec(&mut self, key: Vec<u8>, p: &Position) -> Result<Dyadic> {
        if let Some(&v) = self.values.get(&key) {
            return Ok(v);
        }
        let mut best_left: Option<Dyadic> = None;
        for (k, o) in p.keyed_options(Player::Left) {
            let v = self.value_rec(k, &o)?;
            best_left = Some(best_left.map_or(v, |b| b.max(v)));
        }
        let mut best_right: Option<Dyadic> = None;
        for (k, o) in p.keyed_options(Player::Right) {
            let v = self.value_rec(k, &o)?;
            best_right = Some(best_right.map_or(v, |b| b.min(v)));
        }
        let Some(v) = Dyadic::simplest_between(best_left, best_right) else {
            return invalid(format!(
                "options ({best_left:?}, {best_right:?}) do not bound a number"
            ));
        };
        if self.caching {
            self.values.insert(key, v);
        }
        Ok(v)
    }

    /// Compare `g + x` and `h + x` for every supplied context `x`.
    ///
    /// Agreement on a sample proves nothing in general; a disagreement
    /// refutes equivalence and is reported with the first separating context.
    pub fn equivalent_in_contexts(
        &mut self,
        g: &Position,
        h: &Position,
        convention: Convention,
        contexts: &[Context],
    ) -> Equivalence {
        for (i, x) in contexts.iter().enumerate() {
            let og = self.outcome(&x.attach(g), convention);
            let oh = self.outcome(&x.attach(h), convention);
            if og != oh {
                return Equivalence::Distinguished {
                    context_index: i,
                    outcomes: (og, oh),
                };
            }
        }
        Equivalence::Agrees
    }
}

/// Smallest non-negative integer missing from a sorted, deduplicated slice.
pub fn mex(sorted: &[u64]) -> u64 {
    let mut m = 0;
    for &v in sorted {
        if v == m {
            m += 1;
        } else if v > m {
            break;
        }
    }
    m
}

/// Convenience: outcome with a throwaway solver.
pub fn outcome<G: Game>(game: &G, convention: Convention) -> Outcome {
    Solver::new().outcome(game, convention)
}

/// Exhaustively checks that at every follower either both players can move
/// or neither can.
pub fn is_dicot(p: &Position) -> bool {
    fn rec(p: &Position, seen: &mut HashMap<Vec<u8>, bool>, key: Vec<u8>) -> bool {
        if let Some(&v) = seen.get(&key) {
            return v;
        }
        let left = p.keyed_options(Player::Left);
        let right = p.keyed_options(Player::Right);
        let mut ok = left.is_empty() == right.is_empty();
        if ok {
            for (k, o) in left.into_iter().chain(right) {
                if !rec(&o, seen, k) {
                    ok = false;
                    break;
                }
            }
        }
        seen.insert(key, ok);
        ok
    }
    rec(p, &mut HashMap::new(), p.encode())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::GameTree;
    use crate::model::Color::*;
    use crate::position::{self, stalk, string, Edge, RawGraph};

    #[test]
    fn empty_game_outcomes() {
        let mut s = Solver::new();
        assert_eq!(s.outcome(&Position::empty(), Convention::Normal), Outcome::P);
        assert_eq!(s.outcome(&Position::empty(), Convention::Misere), Outcome::N);
    }

    #[test]
    fn star_outcomes() {
        let mut s = Solver::new();
        assert_eq!(s.outcome(&stalk(1), Convention::Normal), Outcome::N);
        assert_eq!(s.outcome(&stalk(1), Convention::Misere), Outcome::P);
        let two = stalk(1).disjunctive_sum(&stalk(1));
        assert_eq!(s.outcome(&two, Convention::Normal), Outcome::P);
    }

    #[test]
    fn negative_sprig() {
        // one red sprig alone: advantage -1, edge 0, no stalks, so N
        let p = string(&[Green, Red]);
        let mut s = Solver::new();
        assert_eq!(s.outcome(&p, Convention::Normal), Outcome::N);
    }

    #[test]
    fn grundy_examples() {
        let mut s = Solver::new();
        assert_eq!(s.grundy_normal(&Position::empty()).unwrap(), 0);
        for n in 0..7 {
            assert_eq!(s.grundy_normal(&stalk(n)).unwrap(), n as u64);
        }
        let y = Position::prune(RawGraph {
            vertex_count: 4,
            ground: vec![0],
            edges: vec![
                Edge::new(0, 1, Green),
                Edge::new(1, 2, Green),
                Edge::new(1, 3, Green),
            ],
        })
        .unwrap();
        assert_eq!(s.grundy_normal(&y).unwrap(), 1);
        assert_eq!(s.grundy_misere(&Position::empty()).unwrap(), 1);
        assert_eq!(s.grundy_misere(&stalk(1)).unwrap(), 0);
        assert_eq!(s.grundy_misere(&stalk(2)).unwrap(), 2);
        assert!(s.grundy_normal(&string(&[Blue])).is_err());
    }

    #[test]
    fn redblue_examples() {
        let mut s = Solver::new();
        let d = |t: &str| t.parse::<Dyadic>().unwrap();
        assert_eq!(s.redblue_value(&string(&[Blue])).unwrap(), d("1"));
        let both = string(&[Blue]).disjunctive_sum(&string(&[Red]));
        assert_eq!(s.redblue_value(&both).unwrap(), d("0"));
        assert_eq!(s.redblue_value(&string(&[Blue, Red])).unwrap(), d("1/2"));
        assert!(s.redblue_value(&stalk(1)).is_err());
    }

    #[test]
    fn sign_expansion_strings_have_their_value() {
        let mut s = Solver::new();
        for num in -12..=12 {
            for exp in 0..3 {
                let x = Dyadic::new(num, exp);
                let p = string(&position::string_for_value(x));
                assert_eq!(s.redblue_value(&p).unwrap(), x);
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let mut s = Solver::new();
        let star_star = stalk(1).disjunctive_sum(&stalk(1));
        let blue = Context::Hackenbush(string(&[Blue]));
        assert!(s
            .equivalent_in_contexts(&star_star, &star_star, Convention::Misere, std::slice::from_ref(&blue))
            .holds());
        let verdict =
            s.equivalent_in_contexts(&star_star, &Position::empty(), Convention::Misere, &[blue]);
        assert!(!verdict.holds());

        let zero = GameTree::zero();
        let star = GameTree::new(vec![zero.clone()], vec![zero.clone()]);
        let dicots = vec![
            Context::empty(),
            Context::Tree(star.clone()),
            Context::Tree(GameTree::new(vec![star.clone()], vec![zero.clone()])),
            Context::Hackenbush(string(&[Green, Blue])),
        ];
        assert!(s
            .equivalent_in_contexts(&star_star, &Position::empty(), Convention::Misere, &dicots)
            .holds());
    }

    #[test]
    fn cache_is_transparent() {
        let p = position::flower(2, 1, Blue)
            .unwrap()
            .disjunctive_sum(&position::flower(3, 2, Red).unwrap())
            .disjunctive_sum(&stalk(2));
        for c in Convention::BOTH {
            assert_eq!(Solver::new().outcome(&p, c), Solver::without_cache().outcome(&p, c));
        }
    }

    #[test]
    fn dicot_check() {
        assert!(is_dicot(&stalk(3)));
        assert!(is_dicot(&string(&[Green, Blue, Red])));
        assert!(!is_dicot(&string(&[Blue])));
        assert!(!is_dicot(&string(&[Green]).disjunctive_sum(&string(&[Red]))));
    }

    #[test]
    fn mex_values() {
        assert_eq!(mex(&[]), 0);
        assert_eq!(mex(&[0, 1, 3]), 2);
        assert_eq!(mex(&[1, 2]), 0);
    }
}
