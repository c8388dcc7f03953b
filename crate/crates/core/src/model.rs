//! Players, edge colors, play conventions and outcome classes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
    Green,
}

impl Color {
    /// Swaps red and blue; green is fixed.
    pub fn mirror(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
            Color::Green => Color::Green,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
            Color::Green => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        match c {
            'R' => Some(Color::Red),
            'B' => Some(Color::Blue),
            'G' => Some(Color::Green),
            _ => None,
        }
    }

    pub(crate) fn tag(self) -> u8 {
        match self {
            Color::Red => 1,
            Color::Blue => 2,
            Color::Green => 3,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    /// Left cuts blue and green edges, Right cuts red and green edges.
    pub fn can_cut(self, color: Color) -> bool {
        matches!(
            (self, color),
            (_, Color::Green) | (Player::Left, Color::Blue) | (Player::Right, Color::Red)
        )
    }

    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// The last player to move wins.
    Normal,
    /// The last player to move loses.
    Misere,
}

impl Convention {
    pub const BOTH: [Convention; 2] = [Convention::Normal, Convention::Misere];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Normal => "normal",
            Convention::Misere => "misere",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normal" | "+" => Ok(Convention::Normal),
            "misere" | "misère" | "-" => Ok(Convention::Misere),
            other => Err(Error::Config(format!("unknown convention `{other}`"))),
        }
    }
}

/// Outcome class of a game.
///
/// Ordered from Left's point of view: `L` is best for Left, `R` worst, and
/// `P`, `N` sit in between and are incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// Next player wins.
    N,
    /// Previous player wins.
    P,
    /// Left wins whoever starts.
    L,
    /// Right wins whoever starts.
    R,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [Outcome::N, Outcome::P, Outcome::L, Outcome::R];

    /// Assemble an outcome from who wins when each player moves first.
    pub fn from_first_player_wins(left_first_wins: bool, right_first_wins: bool) -> Outcome {
        match (left_first_wins, right_first_wins) {
            (true, true) => Outcome::N,
            (false, false) => Outcome::P,
            (true, false) => Outcome::L,
            (false, true) => Outcome::R,
        }
    }

    /// Does `player` win when moving first?
    pub fn first_player_wins(self, player: Player) -> bool {
        match player {
            Player::Left => matches!(self, Outcome::N | Outcome::L),
            Player::Right => matches!(self, Outcome::N | Outcome::R),
        }
    }

    /// Outcome of the color-swapped game.
    pub fn mirror(self) -> Outcome {
        match self {
            Outcome::L => Outcome::R,
            Outcome::R => Outcome::L,
            o => o,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Outcome::N => 'N',
            Outcome::P => 'P',
            Outcome::L => 'L',
            Outcome::R => 'R',
        }
    }

    fn rank(self) -> u8 {
        match self {
            Outcome::R => 0,
            Outcome::N | Outcome::P => 1,
            Outcome::L => 2,
        }
    }
}

impl PartialOrd for Outcome {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        match self.rank().cmp(&other.rank()) {
            Ordering::Equal => None,
            ord => Some(ord),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_partial_order() {
        let mut strict = Vec::new();
        for a in Outcome::ALL {
            for b in Outcome::ALL {
                if a > b {
                    strict.push((a, b));
                }
            }
        }
        strict.sort_by_key(|(a, b)| (a.letter(), b.letter()));
        // four covering relations plus L > R by transitivity
        assert_eq!(
            strict,
            vec![
                (Outcome::L, Outcome::N),
                (Outcome::L, Outcome::P),
                (Outcome::L, Outcome::R),
                (Outcome::N, Outcome::R),
                (Outcome::P, Outcome::R),
            ]
        );
        assert_eq!(Outcome::P.partial_cmp(&Outcome::N), None);
        assert_eq!(Outcome::N.partial_cmp(&Outcome::P), None);
    }

    #[test]
    fn cut_permissions() {
        assert!(Player::Left.can_cut(Color::Blue));
        assert!(Player::Left.can_cut(Color::Green));
        assert!(!Player::Left.can_cut(Color::Red));
        assert!(Player::Right.can_cut(Color::Red));
        assert!(Player::Right.can_cut(Color::Green));
        assert!(!Player::Right.can_cut(Color::Blue));
    }

    #[test]
    fn outcome_assembly_round_trips() {
        for o in Outcome::ALL {
            let back = Outcome::from_first_player_wins(
                o.first_player_wins(Player::Left),
                o.first_player_wins(Player::Right),
            );
            assert_eq!(back, o);
            assert_eq!(o.mirror().mirror(), o);
        }
    }
}
