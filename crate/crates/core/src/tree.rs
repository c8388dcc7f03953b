//! Rooted trees with colored edges, kept in a canonical form.
//!
//! Children are sorted, so two trees compare equal exactly when they are
//! isomorphic as rooted colored trees. Shrubs and red-blue trees are both
//! built from this type.

use crate::error::{invalid, Result};
use crate::model::Color;
use crate::position::{Edge, Position, RawGraph};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootedTree {
    children: Vec<(Color, RootedTree)>,
}

impl RootedTree {
    pub fn leaf() -> RootedTree {
        RootedTree::default()
    }

    pub fn new(mut children: Vec<(Color, RootedTree)>) -> RootedTree {
        children.sort();
        RootedTree { children }
    }

    /// A single path of the given colors.
    pub fn path(colors: &[Color]) -> RootedTree {
        colors
            .iter()
            .rev()
            .fold(RootedTree::leaf(), |above, &c| RootedTree::new(vec![(c, above)]))
    }

    pub fn children(&self) -> &[(Color, RootedTree)] {
        &self.children
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|(_, t)| 1 + t.edge_count()).sum()
    }

    pub fn is_green(&self) -> bool {
        self.children
            .iter()
            .all(|(c, t)| *c == Color::Green && t.is_green())
    }

    pub fn mirror(&self) -> RootedTree {
        RootedTree::new(
            self.children
                .iter()
                .map(|(c, t)| (c.mirror(), t.mirror()))
                .collect(),
        )
    }

    /// The tree planted with its root on the ground.
    pub fn to_position(&self) -> Position {
        let mut edges = Vec::new();
        let mut next = 1u32;
        fn walk(t: &RootedTree, at: u32, next: &mut u32, edges: &mut Vec<Edge>) {
            for (c, child) in &t.children {
                let v = *next;
                *next += 1;
                edges.push(Edge::new(at, v, *c));
                walk(child, v, next, edges);
            }
        }
        walk(self, 0, &mut next, &mut edges);
        Position::prune(RawGraph {
            vertex_count: next,
            ground: vec![0],
            edges,
        })
        .expect("a planted tree is a valid position")
    }

    /// Read a position back as a tree rooted at its single ground vertex.
    pub fn from_position(p: &Position) -> Result<RootedTree> {
        if p.ground().len() != 1 {
            return invalid("a rooted tree has exactly one ground vertex");
        }
        let n = p.vertex_count() as usize;
        if p.edge_count() + 1 != n {
            return invalid("position is not a tree");
        }
        let mut adjacency: Vec<Vec<(u32, Color)>> = vec![Vec::new(); n];
        for e in p.edges() {
            if e.is_loop() {
                return invalid("position is not a tree");
            }
            adjacency[e.a as usize].push((e.b, e.color));
            adjacency[e.b as usize].push((e.a, e.color));
        }
        // connected (pruned) with |E| = |V| - 1, so acyclic
        fn build(v: u32, parent: Option<u32>, adj: &[Vec<(u32, Color)>]) -> RootedTree {
            RootedTree::new(
                adj[v as usize]
                    .iter()
                    .filter(|(w, _)| Some(*w) != parent)
                    .map(|&(w, c)| (c, build(w, Some(v), adj)))
                    .collect(),
            )
        }
        Ok(build(p.ground()[0], None, &adjacency))
    }
}
