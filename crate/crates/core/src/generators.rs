//! Exhaustive enumerations and seeded samplers for the position families the
//! verification suites run over.
//!
//! Enumerations are deterministic and duplicate-free up to canonical form.
//! Samplers take an explicit seed and reproduce the same sequence for it.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classifiers::{Component, FlowerSpec, FlowerbedSpec, Shrub, SumSpec};
use crate::dyadic::Dyadic;
use crate::error::{invalid, Result};
use crate::game::{Context, GameTree};
use crate::model::Color;
use crate::position::{self, Edge, Position, RawGraph};
use crate::tree::RootedTree;

/// Blossom magnitudes drawn by the random families.
pub const BLOSSOM_MENU: [(i64, u32); 4] = [(1, 1), (1, 0), (3, 1), (2, 0)];

/// `{1/2, 1, 3/2, 2}` as dyadics.
pub fn blossom_magnitudes() -> Vec<Dyadic> {
    BLOSSOM_MENU
        .iter()
        .map(|&(n, e)| Dyadic::new(n, e))
        .collect()
}

/// The magnitudes with both signs.
pub fn signed_blossoms() -> Vec<Dyadic> {
    blossom_magnitudes()
        .into_iter()
        .flat_map(|x| [x, -x])
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Rooted trees
// ---------------------------------------------------------------------------

/// All canonical rooted trees with exactly `edges` edges over `colors`.
pub fn enum_rooted_trees(edges: usize, colors: &[Color]) -> Vec<RootedTree> {
    TreeEnumerator::new(colors).trees(edges)
}

struct TreeEnumerator {
    colors: Vec<Color>,
    memo: HashMap<usize, Vec<RootedTree>>,
}

impl TreeEnumerator {
    fn new(colors: &[Color]) -> TreeEnumerator {
        let mut colors = colors.to_vec();
        colors.sort();
        colors.dedup();
        TreeEnumerator {
            colors,
            memo: HashMap::new(),
        }
    }

    fn trees(&mut self, edges: usize) -> Vec<RootedTree> {
        if let Some(t) = self.memo.get(&edges) {
            return t.clone();
        }
        // Branches at the root, listed by size then index; a tree is a
        // multiset of branches, generated as non-decreasing index sequences.
        let mut branches: Vec<(usize, (Color, RootedTree))> = Vec::new();
        for size in 1..=edges {
            for above in self.trees(size - 1) {
                for &c in &self.colors {
                    branches.push((size, (c, above.clone())));
                }
            }
        }
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        pick(&branches, 0, edges, &mut chosen, &mut out);
        self.memo.insert(edges, out.clone());
        out
    }
}

fn pick(
    branches: &[(usize, (Color, RootedTree))],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<(Color, RootedTree)>,
    out: &mut Vec<RootedTree>,
) {
    if remaining == 0 {
        out.push(RootedTree::new(chosen.clone()));
        return;
    }
    for i in from..branches.len() {
        let (size, branch) = &branches[i];
        if *size > remaining {
            continue;
        }
        chosen.push(branch.clone());
        pick(branches, i, remaining - size, chosen, out);
        chosen.pop();
    }
}

/// Shrubs with exactly `edges` edges, one per shape.
pub fn enum_shrubs_exact(edges: usize) -> Vec<Shrub> {
    if edges == 0 {
        return Vec::new();
    }
    enum_rooted_trees(edges - 1, &[Color::Green])
        .into_iter()
        .map(|t| Shrub::planted(t).expect("green planted tree is a shrub"))
        .collect()
}

/// Shrubs with between one and `max_edges` edges, smallest first.
pub fn enum_shrubs(max_edges: usize) -> Vec<Shrub> {
    (1..=max_edges).flat_map(enum_shrubs_exact).collect()
}

/// Red-blue trees planted on a single ground vertex with 1..=max_edges edges.
pub fn enum_redblue_trees(max_edges: usize) -> Vec<RootedTree> {
    let mut e = TreeEnumerator::new(&[Color::Blue, Color::Red]);
    (1..=max_edges).flat_map(|k| e.trees(k)).collect()
}

// ---------------------------------------------------------------------------
// Strings and flowerbeds
// ---------------------------------------------------------------------------

/// Every red-blue color sequence of length 1..=max_len, shortest first.
pub fn enum_redblue_colors(max_len: usize) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|s: Vec<Color>| {
                [Color::Blue, Color::Red].map(|c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn enum_redblue_strings(max_len: usize) -> Vec<Position> {
    enum_redblue_colors(max_len)
        .iter()
        .map(|c| position::string(c))
        .collect()
}

/// Bounds for exhaustive flowerbed enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowerbedBounds {
    /// Allowed numbers of blue flowers.
    pub blue_counts: Vec<usize>,
    /// Allowed numbers of red flowers.
    pub red_counts: Vec<usize>,
    pub max_height: u32,
    /// Positive blossom magnitudes; red flowers use their negatives.
    pub magnitudes: Vec<Dyadic>,
    pub stalk_sets: Vec<Vec<u32>>,
    pub include_canceling: bool,
}

impl FlowerbedBounds {
    /// `n` flowers of each color, integer blossoms `1..=max_loops`.
    pub fn balanced(n: usize, max_height: u32, max_loops: i64, stalk_sets: Vec<Vec<u32>>) -> Self {
        FlowerbedBounds {
            blue_counts: vec![n],
            red_counts: vec![n],
            max_height,
            magnitudes: (1..=max_loops).map(Dyadic::integer).collect(),
            stalk_sets,
            include_canceling: true,
        }
    }
}

/// Stalk multisets `{}, {1}, {2}, {1,1}, {1,2}`.
pub fn small_stalk_sets() -> Vec<Vec<u32>> {
    vec![vec![], vec![1], vec![2], vec![1, 1], vec![1, 2]]
}

/// Every flowerbed within the bounds, flowers as multisets.
pub fn enum_flowerbed_specs(bounds: &FlowerbedBounds) -> Vec<FlowerbedSpec> {
    let items: Vec<(u32, Dyadic)> = (1..=bounds.max_height)
        .flat_map(|h| bounds.magnitudes.iter().map(move |&x| (h, x)))
        .collect();
    let mut out = Vec::new();
    for &nb in &bounds.blue_counts {
        for blue in multisets(&items, nb) {
            for &nr in &bounds.red_counts {
                for red in multisets(&items, nr) {
                    for stalks in &bounds.stalk_sets {
                        let bed = FlowerbedSpec::new(
                            blue.iter().map(|&(h, x)| FlowerSpec::new(h, x)).collect(),
                            red.iter().map(|&(h, x)| FlowerSpec::new(h, -x)).collect(),
                            stalks.clone(),
                        )
                        .expect("enumerated flowers are valid");
                        if bounds.include_canceling || crate::classifiers::trim(&bed).1.is_empty() {
                            out.push(bed);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Sprig games: flowerbeds with every flower of height one.
pub fn enum_sprig_games(
    max_per_side: usize,
    magnitudes: &[Dyadic],
    stalk_sets: Vec<Vec<u32>>,
    include_canceling: bool,
) -> Vec<FlowerbedSpec> {
    enum_flowerbed_specs(&FlowerbedBounds {
        blue_counts: (0..=max_per_side).collect(),
        red_counts: (0..=max_per_side).collect(),
        max_height: 1,
        magnitudes: magnitudes.to_vec(),
        stalk_sets,
        include_canceling,
    })
}

/// Multisets of size `k` drawn from `items`, as non-decreasing index runs.
fn multisets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], from: usize, k: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            cur.push(items[i].clone());
            go(items, i, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Every multiset of at most `max_count` stalks with heights `1..=max_height`.
pub fn enum_stalk_multisets(max_count: usize, max_height: u32) -> Vec<Vec<u32>> {
    let heights: Vec<u32> = (1..=max_height).collect();
    (0..=max_count).flat_map(|k| multisets(&heights, k)).collect()
}

// ---------------------------------------------------------------------------
// Random families
// ---------------------------------------------------------------------------

/// A random grounded graph with at most `max_edges` edges; loops, parallel
/// edges and cycles all occur.
pub fn random_hackenbush<R: Rng>(rng: &mut R, max_edges: usize) -> Position {
    let edge_count = rng.gen_range(0..=max_edges);
    let vertex_count = rng.gen_range(1..=edge_count as u32 + 1);
    let colors = [Color::Red, Color::Blue, Color::Green];
    let edges = (0..edge_count)
        .map(|_| {
            let a = rng.gen_range(0..vertex_count);
            let b = rng.gen_range(0..vertex_count);
            Edge::new(a, b, *colors.choose(rng).unwrap())
        })
        .collect();
    Position::prune(RawGraph {
        vertex_count,
        ground: vec![0],
        edges,
    })
    .expect("vertex 0 is a valid ground")
}

/// A random dicot game tree of depth at most `depth`, built so that both
/// players have options at every non-terminal follower.
pub fn random_dicot_tree<R: Rng>(rng: &mut R, depth: usize) -> GameTree {
    if depth == 0 || rng.gen_bool(0.25) {
        return GameTree::zero();
    }
    let side = |rng: &mut R| -> Vec<GameTree> {
        let n = rng.gen_range(1..=2);
        (0..n).map(|_| random_dicot_tree(rng, depth - 1)).collect()
    };
    let left = side(rng);
    let right = side(rng);
    GameTree::new(left, right)
}

/// A random game tree of depth at most `depth`, dicot or not.
pub fn random_game_tree<R: Rng>(rng: &mut R, depth: usize) -> GameTree {
    if depth == 0 {
        return GameTree::zero();
    }
    let side = |rng: &mut R| -> Vec<GameTree> {
        let n = rng.gen_range(0..=2);
        (0..n).map(|_| random_game_tree(rng, depth - 1)).collect()
    };
    let left = side(rng);
    let right = side(rng);
    GameTree::new(left, right)
}

/// One green edge supporting a random position.
pub fn random_star_based<R: Rng>(rng: &mut R, max_crown_edges: usize) -> Position {
    let crown = random_hackenbush(rng, max_crown_edges);
    position::stalk(1)
        .graft(1, &crown)
        .expect("a pruned random graph has one ground vertex")
}

/// A red-blue string for a blossom of value `x`.
pub fn blossom_string(x: Dyadic) -> Position {
    position::string(&position::string_for_value(x))
}

/// A random sum of shrubs, generalized flowers and stalks.
pub fn random_sum_spec<R: Rng>(
    rng: &mut R,
    shrubs: &[Shrub],
    max_components: usize,
    max_flower_height: u32,
    max_stalk: u32,
) -> SumSpec {
    let blossoms = signed_blossoms();
    let n = rng.gen_range(1..=max_components);
    let components = (0..n)
        .map(|_| match rng.gen_range(0..3) {
            0 => Component::Shrub(shrubs.choose(rng).expect("shrub menu is non-empty").clone()),
            1 => Component::Flower(FlowerSpec::new(
                rng.gen_range(1..=max_flower_height),
                *blossoms.choose(rng).unwrap(),
            )),
            _ => Component::Stalk(rng.gen_range(1..=max_stalk)),
        })
        .collect();
    SumSpec::new(components)
}

/// Context families for equivalence testing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContextFamily {
    /// Random grounded graphs with at most this many edges.
    ArbitraryHackenbush { max_edges: usize },
    /// Abstract dicot game trees of at most this depth.
    DicotTrees { depth: usize },
    /// Abstract game trees of at most this depth, dicot or not.
    GameTrees { depth: usize },
    /// Sums of star-based positions.
    StarBasedSums { max_components: usize, max_crown_edges: usize },
    /// Every stalk multiset within the bounds, in a fixed order.
    Stalks { max_count: usize, max_height: u32 },
}

impl ContextFamily {
    pub fn is_dicot(&self) -> bool {
        matches!(
            self,
            ContextFamily::DicotTrees { .. }
                | ContextFamily::StarBasedSums { .. }
                | ContextFamily::Stalks { .. }
        )
    }

    pub fn from_name(name: &str, size: usize) -> Result<ContextFamily> {
        Ok(match name {
            "arbitrary" => ContextFamily::ArbitraryHackenbush { max_edges: size },
            "dicot" => ContextFamily::DicotTrees { depth: size },
            "trees" => ContextFamily::GameTrees { depth: size },
            "star" => ContextFamily::StarBasedSums {
                max_components: 2,
                max_crown_edges: size,
            },
            "stalks" => ContextFamily::Stalks {
                max_count: size,
                max_height: size as u32,
            },
            other => return invalid(format!("unknown context family `{other}`")),
        })
    }
}

/// `n` contexts from the family. The stalk family is exhaustive and returns
/// at most `n` of its members in order; the others are sampled from `seed`.
pub fn sample_contexts(family: &ContextFamily, n: usize, seed: u64) -> Vec<Context> {
    let mut rng = rng(seed);
    match *family {
        ContextFamily::Stalks {
            max_count,
            max_height,
        } => enum_stalk_multisets(max_count, max_height)
            .into_iter()
            .take(n)
            .map(|hs| {
                let parts: Vec<Position> = hs.iter().map(|&h| position::stalk(h as usize)).collect();
                Context::Hackenbush(Position::sum_all(&parts))
            })
            .collect(),
        ContextFamily::ArbitraryHackenbush { max_edges } => (0..n)
            .map(|_| Context::Hackenbush(random_hackenbush(&mut rng, max_edges)))
            .collect(),
        ContextFamily::DicotTrees { depth } => (0..n)
            .map(|_| {
                let t = random_dicot_tree(&mut rng, depth);
                debug_assert!(t.is_dicot());
                Context::Tree(t)
            })
            .collect(),
        ContextFamily::GameTrees { depth } => (0..n)
            .map(|_| Context::Tree(random_game_tree(&mut rng, depth)))
            .collect(),
        ContextFamily::StarBasedSums {
            max_components,
            max_crown_edges,
        } => (0..n)
            .map(|_| {
                let k = rng.gen_range(0..=max_components);
                let parts: Vec<Position> = (0..k)
                    .map(|_| random_star_based(&mut rng, max_crown_edges))
                    .collect();
                Context::Hackenbush(Position::sum_all(&parts))
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifiers::shrub_value;
    use crate::oracle::{is_dicot, Solver};

    #[test]
    fn shrub_counts() {
        let counts: Vec<usize> = (1..=7).map(|k| enum_shrubs_exact(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48]);
        assert_eq!(enum_shrubs(7).len(), 85);
        assert_eq!(enum_shrubs_exact(1)[0].to_position(), position::stalk(1));
        assert_eq!(enum_shrubs_exact(2)[0].to_position(), position::stalk(2));
        let three: Vec<u64> = enum_shrubs_exact(3).iter().map(Shrub::value).collect();
        assert_eq!(three.len(), 2);
        assert!(three.contains(&3) && three.contains(&1));
    }

    /// Independent count: rooted unlabeled trees by the Euler transform
    /// recurrence, one vertex more than the shrub has edges.
    #[test]
    fn shrub_counts_match_recurrence() {
        let n = 9;
        let mut a = vec![0u64; n + 1];
        a[1] = 1;
        for m in 1..n {
            let mut s = 0;
            for k in 1..=m {
                let d_sum: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * a[d]).sum();
                s += d_sum * a[m - k + 1];
            }
            a[m + 1] = s / m as u64;
        }
        for (edges, &want) in a.iter().enumerate().take(9).skip(1) {
            assert_eq!(enum_shrubs_exact(edges).len() as u64, want, "{edges} edges");
        }
    }

    #[test]
    fn shrubs_are_shrubs() {
        for s in enum_shrubs(6) {
            let p = s.to_position();
            assert!(p.is_green());
            assert_eq!(shrub_value(&p).unwrap(), s.value());
        }
    }

    #[test]
    fn redblue_tree_counts() {
        // planted trees with k edges and two colors: 2, 7, 26
        let mut e = TreeEnumerator::new(&[Color::Blue, Color::Red]);
        let counts: Vec<usize> = (1..=3).map(|k| e.trees(k).len()).collect();
        assert_eq!(counts, vec![2, 7, 26]);
        assert!(enum_redblue_trees(4).iter().all(|t| t.to_position().is_red_blue()));
    }

    #[test]
    fn string_enumeration() {
        let one = enum_redblue_colors(1);
        assert_eq!(one, vec![vec![Color::Blue], vec![Color::Red]]);
        assert_eq!(enum_redblue_colors(6).len(), 2 + 4 + 8 + 16 + 32 + 64);
    }

    #[test]
    fn flowerbed_counts() {
        let b = FlowerbedBounds::balanced(1, 3, 1, vec![vec![], vec![1], vec![2]]);
        assert_eq!(enum_flowerbed_specs(&b).len(), 27);
        let b = FlowerbedBounds::balanced(2, 3, 1, vec![vec![], vec![1], vec![2]]);
        assert_eq!(enum_flowerbed_specs(&b).len(), 108);
        let no_cancel = FlowerbedBounds {
            include_canceling: false,
            ..FlowerbedBounds::balanced(1, 3, 1, vec![vec![]])
        };
        assert_eq!(enum_flowerbed_specs(&no_cancel).len(), 6);
    }

    #[test]
    fn sprig_enumeration() {
        let one = [Dyadic::ONE];
        let with = enum_sprig_games(1, &one, vec![vec![]], true);
        let without = enum_sprig_games(1, &one, vec![vec![]], false);
        assert_eq!(with.len(), 4);
        assert_eq!(without.len(), 3);
        let full = enum_sprig_games(2, &blossom_magnitudes(), small_stalk_sets(), true);
        assert_eq!(full.len(), 15 * 15 * 5);
        assert!(full.iter().all(|b| b.flowers().all(|f| f.height == 1)));
    }

    #[test]
    fn stalk_family_is_exhaustive() {
        let ctx = sample_contexts(&ContextFamily::Stalks { max_count: 2, max_height: 3 }, usize::MAX, 0);
        // {} + 3 singletons + 6 pairs
        assert_eq!(ctx.len(), 10);
    }

    #[test]
    fn samplers_are_reproducible_and_sound() {
        let families = [
            ContextFamily::ArbitraryHackenbush { max_edges: 5 },
            ContextFamily::DicotTrees { depth: 3 },
            ContextFamily::GameTrees { depth: 2 },
            ContextFamily::StarBasedSums { max_components: 2, max_crown_edges: 3 },
        ];
        for f in &families {
            let a = sample_contexts(f, 40, 11);
            assert_eq!(a, sample_contexts(f, 40, 11));
            assert_ne!(a, sample_contexts(f, 40, 12));
            if f.is_dicot() {
                assert!(a.iter().all(Context::is_dicot), "{f:?}");
            }
        }
        let mut r = rng(3);
        for _ in 0..200 {
            let p = random_hackenbush(&mut r, 5);
            assert!(p.edge_count() <= 5);
            let s = random_star_based(&mut r, 3);
            assert!(is_dicot(&s));
        }
    }

    #[test]
    fn blossom_menu_values() {
        let mut solver = Solver::new();
        for x in signed_blossoms() {
            assert_eq!(solver.redblue_value(&blossom_string(x)).unwrap(), x);
        }
    }
}
