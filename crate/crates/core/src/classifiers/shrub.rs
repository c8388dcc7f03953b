use std::fmt;

use crate::error::{invalid, Result};
use crate::model::Color;
use crate::position::Position;
use crate::tree::RootedTree;

/// A green tree planted on the ground by a single edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shrub(RootedTree);

impl Shrub {
    pub fn new(tree: RootedTree) -> Result<Shrub> {
        if !tree.is_green() {
            return invalid("a shrub is all green");
        }
        if tree.children().len() != 1 {
            return invalid("a shrub's root has degree one");
        }
        Ok(Shrub(tree))
    }

    /// A shrub whose root edge carries `above`.
    pub fn planted(above: RootedTree) -> Result<Shrub> {
        Shrub::new(RootedTree::new(vec![(Color::Green, above)]))
    }

    pub fn from_position(p: &Position) -> Result<Shrub> {
        Shrub::new(RootedTree::from_position(p)?)
    }

    pub fn tree(&self) -> &RootedTree {
        &self.0
    }

    pub fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    /// Grundy value by the colon principle.
    pub fn value(&self) -> u64 {
        vertex_value(&self.0)
    }

    pub fn to_position(&self) -> Position {
        self.0.to_position()
    }
}

impl fmt::Display for Shrub {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write(t: &RootedTree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("(")?;
            for (_, child) in t.children() {
                write(child, f)?;
            }
            f.write_str(")")
        }
        write(&self.0, f)
    }
}

/// Nim-sum over child edges of one more than the child's value.
fn vertex_value(t: &RootedTree) -> u64 {
    t.children()
        .iter()
        .fold(0, |acc, (_, child)| acc ^ (1 + vertex_value(child)))
}

/// Normal-play Grundy value of a shrub, which is also the stalk it equals
/// in the whole misère universe.
pub fn shrub_value(p: &Position) -> Result<u64> {
    if !p.is_green() {
        return invalid("a shrub is all green");
    }
    Ok(Shrub::from_position(p)?.value())
}
