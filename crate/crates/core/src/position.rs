//! Grounded, colored multigraphs and the Hackenbush move rule.
//!
//! A [`Position`] is always pruned: every vertex it stores is connected to a
//! ground vertex. Vertices are numbered `0..vertex_count` and pruning keeps
//! the relative order of surviving vertices and edges, so cutting the same
//! set of edges in any order produces an identical labeled graph.

use std::collections::VecDeque;

use crate::dyadic::Dyadic;
use crate::error::{invalid, Result};
use crate::model::{Color, Player};

pub type VertexId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
    pub color: Color,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId, color: Color) -> Edge {
        Edge { a, b, color }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    fn other(&self, v: VertexId) -> VertexId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// An unpruned graph, the input to [`Position::prune`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawGraph {
    pub vertex_count: u32,
    pub ground: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Position {
    vertex_count: u32,
    /// Sorted, non-empty.
    ground: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl Position {
    /// The empty game: a single ground vertex and no edges.
    pub fn empty() -> Position {
        Position {
            vertex_count: 1,
            ground: vec![0],
            edges: Vec::new(),
        }
    }

    /// Restrict a raw graph to what is connected to its ground.
    pub fn prune(raw: RawGraph) -> Result<Position> {
        if raw.ground.is_empty() {
            return invalid("a position needs at least one ground vertex");
        }
        for &g in &raw.ground {
            if g >= raw.vertex_count {
                return invalid(format!("ground vertex {g} out of range"));
            }
        }
        for e in &raw.edges {
            if e.a >= raw.vertex_count || e.b >= raw.vertex_count {
                return invalid(format!("edge ({}, {}) out of range", e.a, e.b));
            }
        }
        Ok(prune_parts(raw.vertex_count, &raw.ground, raw.edges))
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn ground(&self) -> &[VertexId] {
        &self.ground
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_ground(&self, v: VertexId) -> bool {
        self.ground.binary_search(&v).is_ok()
    }

    pub fn has_color(&self, color: Color) -> bool {
        self.edges.iter().any(|e| e.color == color)
    }

    pub fn is_green(&self) -> bool {
        self.edges.iter().all(|e| e.color == Color::Green)
    }

    pub fn is_red_blue(&self) -> bool {
        !self.has_color(Color::Green)
    }

    pub fn into_raw(self) -> RawGraph {
        RawGraph {
            vertex_count: self.vertex_count,
            ground: self.ground,
            edges: self.edges,
        }
    }

    /// The position after `player` cuts edge `index`, if that edge is theirs.
    pub fn cut(&self, index: usize, player: Player) -> Option<Position> {
        let edge = self.edges.get(index)?;
        if !player.can_cut(edge.color) {
            return None;
        }
        Some(self.remove_edge(index))
    }

    fn remove_edge(&self, index: usize) -> Position {
        let mut edges = self.edges.clone();
        edges.remove(index);
        prune_parts(self.vertex_count, &self.ground, edges)
    }

    /// Every position `player` can move to, deduplicated and sorted by key.
    pub fn options(&self, player: Player) -> Vec<Position> {
        self.keyed_options(player).into_iter().map(|(_, p)| p).collect()
    }

    /// Options paired with their [`encode`](Position::encode) keys.
    pub fn keyed_options(&self, player: Player) -> Vec<(Vec<u8>, Position)> {
        let mut out: Vec<(Vec<u8>, Position)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| player.can_cut(e.color))
            .map(|(i, _)| {
                let p = self.remove_edge(i);
                (p.encode(), p)
            })
            .collect();
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out.dedup_by(|x, y| x.0 == y.0);
        out
    }

    /// Disjoint union; vertex ids of `other` are shifted past ours.
    pub fn disjunctive_sum(&self, other: &Position) -> Position {
        let shift = self.vertex_count;
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().map(|g| g + shift));
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| Edge::new(e.a + shift, e.b + shift, e.color)),
        );
        Position {
            vertex_count: self.vertex_count + other.vertex_count,
            ground,
            edges,
        }
    }

    pub fn sum_all<'a>(parts: impl IntoIterator<Item = &'a Position>) -> Position {
        let mut parts = parts.into_iter();
        match parts.next() {
            None => Position::empty(),
            Some(first) => parts.fold(first.clone(), |acc, p| acc.disjunctive_sum(p)),
        }
    }

    /// Place `crown` on top of vertex `top`: the crown's single ground
    /// vertex is identified with `top`.
    pub fn graft(&self, top: VertexId, crown: &Position) -> Result<Position> {
        if top >= self.vertex_count {
            return invalid(format!("vertex {top} is not in the base position"));
        }
        if crown.ground.len() != 1 {
            return invalid("the crown of a graft must have exactly one ground vertex");
        }
        let root = crown.ground[0];
        let map = |v: VertexId| -> VertexId {
            match v.cmp(&root) {
                std::cmp::Ordering::Equal => top,
                std::cmp::Ordering::Less => self.vertex_count + v,
                std::cmp::Ordering::Greater => self.vertex_count + v - 1,
            }
        };
        let mut edges = self.edges.clone();
        edges.extend(
            crown
                .edges
                .iter()
                .map(|e| Edge::new(map(e.a), map(e.b), e.color)),
        );
        Ok(prune_parts(
            self.vertex_count + crown.vertex_count - 1,
            &self.ground,
            edges,
        ))
    }

    /// Swap red and blue on every edge.
    pub fn mirror(&self) -> Position {
        Position {
            vertex_count: self.vertex_count,
            ground: self.ground.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(e.a, e.b, e.color.mirror()))
                .collect(),
        }
    }

    /// Connected pieces, each with its own ground vertices. Used by
    /// structure recognizers, never by the oracle.
    pub fn components(&self) -> Vec<Position> {
        let n = self.vertex_count as usize;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (ra, rb) = (find(&mut parent, e.a as usize), find(&mut parent, e.b as usize));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        for e in &self.edges {
            let r = find(&mut parent, e.a as usize);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        roots
            .into_iter()
            .map(|r| {
                let ground: Vec<VertexId> = self
                    .ground
                    .iter()
                    .copied()
                    .filter(|&g| find(&mut parent, g as usize) == r)
                    .collect();
                let edges: Vec<Edge> = self
                    .edges
                    .iter()
                    .copied()
                    .filter(|e| find(&mut parent, e.a as usize) == r)
                    .collect();
                prune_parts(self.vertex_count, &ground, edges)
            })
            .collect()
    }

    /// Deterministic byte serialization used as a memoization key.
    ///
    /// Vertices are relabeled in breadth-first discovery order from the
    /// ground; ties go to the sorted multiset of incident edge colors and
    /// then to the stored vertex id. Equal labeled graphs always encode
    /// equally. This is not an isomorphism invariant.
    pub fn encode(&self) -> Vec<u8> {
        let n = self.vertex_count as usize;
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut signature: Vec<Vec<u8>> = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            incident[e.a as usize].push(i);
            signature[e.a as usize].push(e.color.tag());
            if !e.is_loop() {
                incident[e.b as usize].push(i);
                signature[e.b as usize].push(e.color.tag());
            }
        }
        for s in &mut signature {
            s.sort_unstable();
        }

        let mut label: Vec<u32> = vec![u32::MAX; n];
        let mut next = 0u32;
        let mut queue = VecDeque::new();
        let mut ground = self.ground.clone();
        ground.sort_by(|&x, &y| {
            signature[x as usize]
                .cmp(&signature[y as usize])
                .then(x.cmp(&y))
        });
        for g in ground {
            label[g as usize] = next;
            next += 1;
            queue.push_back(g);
        }
        while let Some(v) = queue.pop_front() {
            let mut nbrs: Vec<(u8, VertexId)> = incident[v as usize]
                .iter()
                .map(|&i| {
                    let e = &self.edges[i];
                    (e.color.tag(), e.other(v))
                })
                .filter(|&(_, w)| label[w as usize] == u32::MAX)
                .collect();
            nbrs.sort_by(|x, y| {
                x.0.cmp(&y.0)
                    .then_with(|| signature[x.1 as usize].cmp(&signature[y.1 as usize]))
                    .then(x.1.cmp(&y.1))
            });
            for (_, w) in nbrs {
                if label[w as usize] == u32::MAX {
                    label[w as usize] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }

        let mut edges: Vec<(u32, u32, u8)> = self
            .edges
            .iter()
            .map(|e| {
                let (x, y) = (label[e.a as usize], label[e.b as usize]);
                (x.min(y), x.max(y), e.color.tag())
            })
            .collect();
        edges.sort_unstable();

        let mut out = Vec::with_capacity(4 + edges.len() * 3);
        out.push(b'H');
        push_varint(&mut out, self.vertex_count);
        push_varint(&mut out, self.ground.len() as u32);
        for (x, y, c) in edges {
            push_varint(&mut out, x);
            push_varint(&mut out, y);
            out.push(c);
        }
        out
    }

    /// The top vertex of a single-ground path, used when stacking pieces.
    fn path_top(&self) -> VertexId {
        self.vertex_count - 1
    }
}

pub(crate) fn push_varint(out: &mut Vec<u8>, mut v: u32) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

fn prune_parts(vertex_count: u32, ground: &[VertexId], edges: Vec<Edge>) -> Position {
    let n = vertex_count as usize;
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for e in &edges {
        if !e.is_loop() {
            adjacency[e.a as usize].push(e.b);
            adjacency[e.b as usize].push(e.a);
        }
    }
    let mut reached = vec![false; n];
    let mut stack: Vec<VertexId> = Vec::new();
    for &g in ground {
        if !reached[g as usize] {
            reached[g as usize] = true;
            stack.push(g);
        }
    }
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v as usize] {
            if !reached[w as usize] {
                reached[w as usize] = true;
                stack.push(w);
            }
        }
    }
    let mut relabel = vec![u32::MAX; n];
    let mut count = 0u32;
    for v in 0..n {
        if reached[v] {
            relabel[v] = count;
            count += 1;
        }
    }
    let mut new_ground: Vec<VertexId> = ground.iter().map(|&g| relabel[g as usize]).collect();
    new_ground.sort_unstable();
    new_ground.dedup();
    let edges = edges
        .into_iter()
        .filter(|e| reached[e.a as usize])
        .map(|e| Edge::new(relabel[e.a as usize], relabel[e.b as usize], e.color))
        .collect();
    Position {
        vertex_count: count,
        ground: new_ground,
        edges,
    }
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// A path of the given colors rising from a single ground vertex.
pub fn string(colors: &[Color]) -> Position {
    let edges = colors
        .iter()
        .enumerate()
        .map(|(i, &c)| Edge::new(i as u32, i as u32 + 1, c))
        .collect();
    Position {
        vertex_count: colors.len() as u32 + 1,
        ground: vec![0],
        edges,
    }
}

/// Green string of height `n`; `stalk(0)` is the empty position.
pub fn stalk(n: usize) -> Position {
    string(&vec![Color::Green; n])
}

/// A stalk of height `h` topped by `loops` self-loops of one color.
pub fn flower(height: usize, loops: usize, color: Color) -> Result<Position> {
    if height == 0 {
        return invalid("flower height must be at least 1");
    }
    if color == Color::Green {
        return invalid("flower petals are all red or all blue");
    }
    let mut p = stalk(height);
    let top = p.path_top();
    p.edges.extend(std::iter::repeat_n(Edge::new(top, top, color), loops));
    Ok(p)
}

/// A green edge supporting a red-blue string.
pub fn sprig(colors: &[Color]) -> Result<Position> {
    if colors.is_empty() {
        return invalid("a sprig needs a non-empty red-blue string");
    }
    if colors.contains(&Color::Green) {
        return invalid("a sprig's string is red-blue");
    }
    let mut all = vec![Color::Green];
    all.extend_from_slice(colors);
    Ok(string(&all))
}

/// A green string of height `h` supporting a red-blue blossom.
pub fn generalized_flower(height: usize, blossom: &Position) -> Result<Position> {
    if height == 0 {
        return invalid("flower height must be at least 1");
    }
    if !blossom.is_red_blue() {
        return invalid("a blossom is a red-blue position");
    }
    let base = stalk(height);
    base.graft(base.path_top(), blossom)
}

/// Red-blue string whose normal-play value is `x`: its sign expansion,
/// blue for `+` and red for `-`.
pub fn string_for_value(x: Dyadic) -> Vec<Color> {
    let mut colors = Vec::new();
    if x == Dyadic::ZERO {
        return colors;
    }
    let (up, down) = if x > Dyadic::ZERO {
        (Color::Blue, Color::Red)
    } else {
        (Color::Red, Color::Blue)
    };
    let target = x.abs();
    let mut v = Dyadic::ZERO;
    while v < target {
        colors.push(up);
        v = v + Dyadic::ONE;
    }
    let mut step = Dyadic::new(1, 1);
    while v != target {
        if v > target {
            colors.push(down);
            v = v - step;
        } else {
            colors.push(up);
            v = v + step;
        }
        step = Dyadic::new(step.numerator(), step.exponent() + 1);
    }
    colors
}

/// Value of a red-blue string by the sign-expansion rule: the leading run
/// counts whole units, every edge after the first color change halves.
pub fn string_value(colors: &[Color]) -> Result<Dyadic> {
    if colors.contains(&Color::Green) {
        return invalid("string value is defined for red-blue strings");
    }
    let Some(&first) = colors.first() else {
        return Ok(Dyadic::ZERO);
    };
    let run = colors.iter().take_while(|&&c| c == first).count() as i64;
    let mut value = Dyadic::integer(if first == Color::Blue { run } else { -run });
    let mut step = Dyadic::ONE;
    for &c in &colors[run as usize..] {
        step = Dyadic::new(1, step.exponent() + 1);
        value = if c == Color::Blue { value + step } else { value - step };
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    #[test]
    fn options_of_single_green_edge() {
        for player in [Player::Left, Player::Right] {
            let opts = stalk(1).options(player);
            assert_eq!(opts.len(), 1);
            assert!(opts[0].is_empty());
        }
    }

    #[test]
    fn empty_position_has_no_options() {
        assert!(Position::empty().options(Player::Left).is_empty());
        assert!(Position::empty().options(Player::Right).is_empty());
    }

    #[test]
    fn right_cannot_cut_blue() {
        let p = string(&[Green, Blue]);
        let opts = p.options(Player::Right);
        assert_eq!(opts.len(), 1);
        assert!(opts[0].is_empty());
        let left = p.options(Player::Left);
        assert_eq!(left.len(), 2);
    }

    #[test]
    fn prune_discards_ungrounded_components() {
        // ground 0 - 1 - 2 with the grounded edge already gone
        let raw = RawGraph {
            vertex_count: 3,
            ground: vec![0],
            edges: vec![Edge::new(1, 2, Green)],
        };
        assert!(Position::prune(raw).unwrap().is_empty());

        // triangle hanging from one grounded edge stays intact
        let raw = RawGraph {
            vertex_count: 4,
            ground: vec![0],
            edges: vec![
                Edge::new(0, 1, Green),
                Edge::new(1, 2, Red),
                Edge::new(2, 3, Blue),
                Edge::new(3, 1, Green),
            ],
        };
        let p = Position::prune(raw.clone()).unwrap();
        assert_eq!(p.edges(), &raw.edges[..]);

        // two components, only one grounded
        let raw = RawGraph {
            vertex_count: 5,
            ground: vec![0],
            edges: vec![
                Edge::new(0, 1, Blue),
                Edge::new(2, 3, Red),
                Edge::new(3, 4, Red),
            ],
        };
        let p = Position::prune(raw).unwrap();
        assert_eq!(p.edge_count(), 1);
        assert_eq!(p.vertex_count(), 2);
    }

    #[test]
    fn prune_rejects_empty_ground() {
        let raw = RawGraph {
            vertex_count: 2,
            ground: vec![],
            edges: vec![Edge::new(0, 1, Green)],
        };
        assert!(Position::prune(raw).is_err());
    }

    #[test]
    fn prune_is_idempotent() {
        let raw = RawGraph {
            vertex_count: 6,
            ground: vec![0, 5],
            edges: vec![
                Edge::new(0, 1, Green),
                Edge::new(2, 3, Red),
                Edge::new(5, 4, Blue),
                Edge::new(4, 4, Red),
            ],
        };
        let once = Position::prune(raw).unwrap();
        let twice = Position::prune(once.clone().into_raw()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn graft_examples() {
        let star = stalk(1);
        assert_eq!(star.graft(1, &Position::empty()).unwrap(), star);

        let loop_crown = Position::prune(RawGraph {
            vertex_count: 1,
            ground: vec![0],
            edges: vec![Edge::new(0, 0, Green)],
        })
        .unwrap();
        let p = star.graft(1, &loop_crown).unwrap();
        assert_eq!(p.edges(), &[Edge::new(0, 1, Green), Edge::new(1, 1, Green)]);

        let f = flower(2, 3, Blue).unwrap();
        assert_eq!(f.edge_count(), 5);
        assert_eq!(f.edges().iter().filter(|e| e.is_loop() && e.color == Blue).count(), 3);
        assert_eq!(f.edges().iter().filter(|e| e.color == Green).count(), 2);

        let two_ground = stalk(1).disjunctive_sum(&stalk(1));
        assert!(star.graft(1, &two_ground).is_err());
        assert!(star.graft(7, &stalk(1)).is_err());
    }

    #[test]
    fn constructor_errors() {
        assert!(flower(2, 1, Green).is_err());
        assert!(flower(0, 1, Red).is_err());
        assert!(sprig(&[]).is_err());
        assert!(generalized_flower(1, &stalk(1)).is_err());
        assert!(stalk(0).is_empty());
    }

    #[test]
    fn sprig_unrolls() {
        let s = sprig(&[Blue, Red]).unwrap();
        assert_eq!(s, string(&[Green, Blue, Red]));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(stalk(2).encode(), stalk(2).encode());
        assert_ne!(stalk(1).encode(), stalk(2).encode());
        let a = stalk(1).disjunctive_sum(&string(&[Blue]));
        let b = string(&[Blue]).disjunctive_sum(&stalk(1));
        assert_eq!(a.encode(), b.encode());
    }

    #[test]
    fn options_shrink_and_deduplicate() {
        let p = flower(2, 3, Red).unwrap();
        let right = p.options(Player::Right);
        // two stem cuts and one (deduplicated) petal cut
        assert_eq!(right.len(), 3);
        for o in &right {
            assert!(o.edge_count() < p.edge_count());
        }
    }

    #[test]
    fn sign_expansion_round_trip() {
        for (s, v) in [("BR", "1/2"), ("B", "1"), ("BBR", "3/2"), ("BB", "2"), ("RB", "-1/2"), ("BRB", "3/4")] {
            let colors: Vec<Color> = s.chars().map(|c| Color::from_letter(c).unwrap()).collect();
            let v: Dyadic = v.parse().unwrap();
            assert_eq!(string_value(&colors).unwrap(), v);
            assert_eq!(string_for_value(v), colors);
        }
        assert!(string_for_value(Dyadic::ZERO).is_empty());
    }

    #[test]
    fn components_split_sums() {
        let p = stalk(2).disjunctive_sum(&flower(1, 2, Blue).unwrap());
        let parts = p.components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], stalk(2));
        assert_eq!(parts[1], flower(1, 2, Blue).unwrap());
    }
}
