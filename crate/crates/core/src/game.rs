//! The `Game` abstraction the oracle searches over, plus explicit game trees
//! and disjunctive sums of heterogeneous games.

use std::fmt;

use crate::model::Player;
use crate::position::{push_varint, Position};

/// A short game: finitely many positions, each with left and right options.
pub trait Game: Clone {
    /// Memoization key. Equal keys must mean equal games; tags keep keys of
    /// different implementors apart.
    fn key(&self) -> Vec<u8>;

    /// Options for `player`, each paired with its key.
    fn keyed_options(&self, player: Player) -> Vec<(Vec<u8>, Self)>;
}

impl Game for Position {
    fn key(&self) -> Vec<u8> {
        self.encode()
    }

    fn keyed_options(&self, player: Player) -> Vec<(Vec<u8>, Self)> {
        Position::keyed_options(self, player)
    }
}

/// An explicit game `{ left options | right options }`.
///
/// Options are kept sorted and deduplicated, so structurally equal trees
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GameTree {
    left: Vec<GameTree>,
    right: Vec<GameTree>,
}

impl GameTree {
    pub fn zero() -> GameTree {
        GameTree::default()
    }

    pub fn new(mut left: Vec<GameTree>, mut right: Vec<GameTree>) -> GameTree {
        left.sort();
        left.dedup();
        right.sort();
        right.dedup();
        GameTree { left, right }
    }

    pub fn left(&self) -> &[GameTree] {
        &self.left
    }

    pub fn right(&self) -> &[GameTree] {
        &self.right
    }

    pub fn options(&self, player: Player) -> &[GameTree] {
        match player {
            Player::Left => &self.left,
            Player::Right => &self.right,
        }
    }

    pub fn depth(&self) -> usize {
        self.left
            .iter()
            .chain(&self.right)
            .map(|g| g.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    /// At every follower either both players can move or neither can.
    pub fn is_dicot(&self) -> bool {
        self.left.is_empty() == self.right.is_empty()
            && self.left.iter().chain(&self.right).all(GameTree::is_dicot)
    }

    pub fn negate(&self) -> GameTree {
        GameTree::new(
            self.right.iter().map(GameTree::negate).collect(),
            self.left.iter().map(GameTree::negate).collect(),
        )
    }

    fn write_key(&self, out: &mut Vec<u8>) {
        out.push(b'{');
        for g in &self.left {
            g.write_key(out);
        }
        out.push(b'|');
        for g in &self.right {
            g.write_key(out);
        }
        out.push(b'}');
    }
}

impl fmt::Display for GameTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.left.is_empty() && self.right.is_empty() {
            return f.write_str("0");
        }
        f.write_str("{")?;
        for (i, g) in self.left.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("|")?;
        for (i, g) in self.right.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

impl Game for GameTree {
    fn key(&self) -> Vec<u8> {
        let mut out = vec![b'T'];
        self.write_key(&mut out);
        out
    }

    fn keyed_options(&self, player: Player) -> Vec<(Vec<u8>, Self)> {
        self.options(player)
            .iter()
            .map(|g| (g.key(), g.clone()))
            .collect()
    }
}

/// A context game added to a position: either another Hackenbush position
/// or an explicit game tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Context {
    Hackenbush(Position),
    Tree(GameTree),
}

impl Context {
    pub fn empty() -> Context {
        Context::Hackenbush(Position::empty())
    }

    /// `p + self` as one game. Hackenbush contexts are flattened into a single
    /// graph; trees are combined with [`Sum`].
    pub fn attach(&self, p: &Position) -> SumGame {
        match self {
            Context::Hackenbush(q) => SumGame::Graph(p.disjunctive_sum(q)),
            Context::Tree(t) => SumGame::Mixed(Sum::new(p.clone(), t.clone())),
        }
    }

    pub fn is_dicot(&self) -> bool {
        match self {
            Context::Hackenbush(p) => crate::oracle::is_dicot(p),
            Context::Tree(t) => t.is_dicot(),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Hackenbush(p) => write!(f, "{}", crate::dsl::print_position(p)),
            Context::Tree(t) => write!(f, "tree{t}"),
        }
    }
}

/// Disjunctive sum of two games of possibly different kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sum<A, B> {
    pub first: A,
    pub second: B,
}

impl<A: Game, B: Game> Sum<A, B> {
    pub fn new(first: A, second: B) -> Self {
        Sum { first, second }
    }

    fn key_from(a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(a.len() + b.len() + 6);
        out.push(b'S');
        push_varint(&mut out, a.len() as u32);
        out.extend_from_slice(a);
        out.extend_from_slice(b);
        out
    }
}

impl<A: Game, B: Game> Game for Sum<A, B> {
    fn key(&self) -> Vec<u8> {
        Self::key_from(&self.first.key(), &self.second.key())
    }

    fn keyed_options(&self, player: Player) -> Vec<(Vec<u8>, Self)> {
        let first_key = self.first.key();
        let second_key = self.second.key();
        let mut out = Vec::new();
        for (k, a) in self.first.keyed_options(player) {
            out.push((
                Self::key_from(&k, &second_key),
                Sum::new(a, self.second.clone()),
            ));
        }
        for (k, b) in self.second.keyed_options(player) {
            out.push((
                Self::key_from(&first_key, &k),
                Sum::new(self.first.clone(), b),
            ));
        }
        out
    }
}

/// A position plus a context, in whichever representation `attach` chose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SumGame {
    Graph(Position),
    Mixed(Sum<Position, GameTree>),
}

impl Game for SumGame {
    fn key(&self) -> Vec<u8> {
        match self {
            SumGame::Graph(p) => p.key(),
            SumGame::Mixed(s) => s.key(),
        }
    }

    fn keyed_options(&self, player: Player) -> Vec<(Vec<u8>, Self)> {
        match self {
            SumGame::Graph(p) => Game::keyed_options(p, player)
                .into_iter()
                .map(|(k, o)| (k, SumGame::Graph(o)))
                .collect(),
            SumGame::Mixed(s) => s
                .keyed_options(player)
                .into_iter()
                .map(|(k, o)| (k, SumGame::Mixed(o)))
                .collect(),
        }
    }
}
