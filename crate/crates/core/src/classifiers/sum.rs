use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Color, Convention, Outcome};
use crate::oracle::Solver;
use crate::position::{self, Position, RawGraph};

use super::{flowerbed_outcome, BlossomStyle, FlowerSpec, FlowerbedSpec, Shrub};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Component {
    Shrub(Shrub),
    Flower(FlowerSpec),
    Stalk(u32),
}

impl Component {
    /// Height after replacing a shrub by its equivalent stalk.
    pub fn height(&self) -> u64 {
        match self {
            Component::Shrub(s) => s.value(),
            Component::Flower(f) => f.height as u64,
            Component::Stalk(h) => *h as u64,
        }
    }

    pub fn realize(&self, style: BlossomStyle) -> Result<Position> {
        match self {
            Component::Shrub(s) => Ok(s.to_position()),
            Component::Flower(f) => f.realize(style),
            Component::Stalk(h) => Ok(position::stalk(*h as usize)),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Shrub(s) => write!(f, "shrub{s}"),
            Component::Flower(fl) => write!(f, "{fl}"),
            Component::Stalk(h) => write!(f, "*{h}"),
        }
    }
}

/// A disjunctive sum of shrubs, generalized flowers and stalks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SumSpec {
    pub components: Vec<Component>,
}

impl SumSpec {
    pub fn new(components: Vec<Component>) -> SumSpec {
        SumSpec { components }
    }

    pub fn realize(&self, style: BlossomStyle) -> Result<Position> {
        let parts = self
            .components
            .iter()
            .map(|c| c.realize(style))
            .collect::<Result<Vec<_>>>()?;
        Ok(Position::sum_all(&parts))
    }

    /// Shrubs and zero-blossom flowers become stalks.
    pub fn to_flowerbed(&self) -> Result<FlowerbedSpec> {
        let mut flowers = Vec::new();
        let mut stalks = Vec::new();
        for c in &self.components {
            match c {
                Component::Shrub(s) => stalks.push(s.value() as u32),
                Component::Flower(f) => flowers.push(*f),
                Component::Stalk(h) => stalks.push(*h),
            }
        }
        FlowerbedSpec::from_parts(&flowers, &stalks)
    }

    /// Split a position into components and recognize each one. The solver
    /// supplies blossom values.
    pub fn from_position(p: &Position, solver: &mut Solver) -> Result<SumSpec> {
        let mut components = Vec::new();
        for part in p.components() {
            components.push(recognize(&part, solver)?);
        }
        Ok(SumSpec { components })
    }
}

impl fmt::Display for SumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A single connected component as a stalk, shrub or generalized flower.
fn recognize(p: &Position, solver: &mut Solver) -> Result<Component> {
    let unsupported = || {
        Error::Unsupported("component is not a shrub, stalk or generalized flower".into())
    };
    if p.is_green() {
        if let Ok(s) = Shrub::from_position(p) {
            let is_path = (0..p.vertex_count()).all(|v| degree(p, v) <= 2);
            return Ok(if is_path {
                Component::Stalk(p.edge_count() as u32)
            } else {
                Component::Shrub(s)
            });
        }
        return Err(unsupported());
    }
    let (stem, top) = green_stem(p).ok_or_else(unsupported)?;
    let raw = p.clone().into_raw();
    let crown_edges: Vec<_> = raw
        .edges
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !stem.contains(i))
        .map(|(_, e)| e)
        .collect();
    if crown_edges.iter().any(|e| e.color == Color::Green) {
        return Err(unsupported());
    }
    let crown = Position::prune(RawGraph {
        vertex_count: raw.vertex_count,
        ground: vec![top],
        edges: crown_edges,
    })?;
    let blossom = solver.redblue_value(&crown)?;
    Ok(Component::Flower(FlowerSpec::new(stem.len() as u32, blossom)))
}

fn degree(p: &Position, v: u32) -> usize {
    p.edges()
        .iter()
        .map(|e| (e.a == v) as usize + (e.b == v) as usize)
        .sum()
}

/// Edge indices of the green path rising from the ground through vertices
/// of degree two, and the vertex where it stops.
fn green_stem(p: &Position) -> Option<(Vec<usize>, u32)> {
    let touches = |i: usize, v: u32| p.edges()[i].a == v || p.edges()[i].b == v;
    let grounded: Vec<usize> = (0..p.edge_count())
        .filter(|&i| p.is_ground(p.edges()[i].a) || p.is_ground(p.edges()[i].b))
        .collect();
    let [first] = grounded[..] else {
        return None;
    };
    let e = p.edges()[first];
    if e.color != Color::Green || e.is_loop() {
        return None;
    }
    let mut stem = vec![first];
    let mut top = if p.is_ground(e.a) { e.b } else { e.a };
    while degree(p, top) == 2 {
        let next = (0..p.edge_count()).find(|&i| !stem.contains(&i) && touches(i, top))?;
        let e = p.edges()[next];
        if e.color != Color::Green || e.is_loop() {
            break;
        }
        stem.push(next);
        top = if e.a == top { e.b } else { e.a };
    }
    Some((stem, top))
}

/// Replace shrubs by their stalks and, when every component has height one
/// (including the empty sum), add one more height-one stalk.
pub fn evil_twin(s: &SumSpec) -> SumSpec {
    let mut components: Vec<Component> = s
        .components
        .iter()
        .map(|c| match c {
            Component::Shrub(shrub) => Component::Stalk(shrub.value() as u32),
            other => other.clone(),
        })
        .collect();
    if components.iter().all(|c| c.height() == 1) {
        components.push(Component::Stalk(1));
    }
    SumSpec { components }
}

/// Classifier outcome of a sum of shrubs, generalized flowers and stalks.
pub fn classify_sum(s: &SumSpec, convention: Convention) -> Result<Outcome> {
    flowerbed_outcome(&s.to_flowerbed()?, convention)
}
