//! A small text format for positions.
//!
//! ```text
//! position := term ("+" term)*          (empty text is the empty position)
//! term     := stalk(N) | flower(N; N C) | string(S) | gflower(N; blossom)
//!           | graph{ (id id S)* }
//! blossom  := dyadic | string(S) | graph{...}
//! ```
//!
//! `C` is `R` or `B`, `S` a run of `R`, `B`, `G`. In a graph, ids of the form
//! `g0`, `g1`, ... are ground vertices; any other identifier is an ordinary
//! vertex. Whitespace is ignored between tokens.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::classifiers::{Component, FlowerSpec, SumSpec};
use crate::dyadic::Dyadic;
use crate::error::{invalid, Error, Result};
use crate::model::Color;
use crate::oracle::Solver;
use crate::position::{self, Edge, Position, RawGraph};

/// A parsed position: a sum of terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PositionDoc {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Stalk(u32),
    Flower { height: u32, loops: u32, color: Color },
    String(Vec<Color>),
    GFlower { height: u32, blossom: Blossom },
    Graph(GraphTerm),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Blossom {
    Value(Dyadic),
    String(Vec<Color>),
    Graph(GraphTerm),
}

/// Edges between named vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphTerm {
    pub edges: Vec<(String, String, Color)>,
}

fn is_ground_id(id: &str) -> bool {
    id.len() > 1 && id.starts_with('g') && id[1..].bytes().all(|b| b.is_ascii_digit())
}

impl GraphTerm {
    fn to_position(&self) -> Result<Position> {
        let mut ids: HashMap<&str, u32> = HashMap::new();
        let mut ground = Vec::new();
        // vertex 0 always exists as a ground vertex, even with no edges
        let mut vertex_count = 1u32;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (a, b, c) in &self.edges {
            let mut ends = [0u32; 2];
            for (slot, name) in ends.iter_mut().zip([a.as_str(), b.as_str()]) {
                *slot = match ids.get(name) {
                    Some(&v) => v,
                    None => {
                        let v = if ground.is_empty() && is_ground_id(name) {
                            0
                        } else {
                            vertex_count += 1;
                            vertex_count - 1
                        };
                        if is_ground_id(name) {
                            ground.push(v);
                        }
                        ids.insert(name, v);
                        v
                    }
                };
            }
            edges.push(Edge::new(ends[0], ends[1], *c));
        }
        if ground.is_empty() {
            ground.push(0);
        }
        Position::prune(RawGraph {
            vertex_count,
            ground,
            edges,
        })
    }

    fn from_position(p: &Position) -> GraphTerm {
        let name = |v: u32| {
            if p.is_ground(v) {
                format!("g{v}")
            } else {
                format!("v{v}")
            }
        };
        GraphTerm {
            edges: p
                .edges()
                .iter()
                .map(|e| (name(e.a), name(e.b), e.color))
                .collect(),
        }
    }
}

impl Blossom {
    fn to_position(&self) -> Result<Position> {
        match self {
            Blossom::Value(x) => Ok(position::string(&position::string_for_value(*x))),
            Blossom::String(colors) => Ok(position::string(colors)),
            Blossom::Graph(g) => {
                let p = g.to_position()?;
                if p.ground().len() != 1 {
                    return invalid("a blossom graph has exactly one ground vertex");
                }
                Ok(p)
            }
        }
    }
}

impl Term {
    pub fn to_position(&self) -> Result<Position> {
        match self {
            Term::Stalk(h) => Ok(position::stalk(*h as usize)),
            Term::Flower {
                height,
                loops,
                color,
            } => position::flower(*height as usize, *loops as usize, *color),
            Term::String(colors) => Ok(position::string(colors)),
            Term::GFlower { height, blossom } => {
                position::generalized_flower(*height as usize, &blossom.to_position()?)
            }
            Term::Graph(g) => g.to_position(),
        }
    }

    /// The term as classifier components; the solver evaluates explicit
    /// blossoms.
    fn components(&self, solver: &mut Solver) -> Result<Vec<Component>> {
        let flower = |h: u32, x: Dyadic| {
            if x == Dyadic::ZERO {
                Component::Stalk(h)
            } else {
                Component::Flower(FlowerSpec::new(h, x))
            }
        };
        Ok(match self {
            Term::Stalk(h) => vec![Component::Stalk(*h)],
            Term::Flower {
                height,
                loops,
                color,
            } => {
                let n = *loops as i64;
                vec![flower(*height, Dyadic::integer(if *color == Color::Blue { n } else { -n }))]
            }
            Term::GFlower {
                height,
                blossom: Blossom::Value(x),
            } => vec![flower(*height, *x)],
            Term::GFlower { height, blossom } => {
                let x = solver.redblue_value(&blossom.to_position()?)?;
                vec![flower(*height, x)]
            }
            Term::String(_) | Term::Graph(_) => {
                SumSpec::from_position(&self.to_position()?, solver)?.components
            }
        })
    }
}

impl PositionDoc {
    pub fn to_position(&self) -> Result<Position> {
        let parts = self
            .terms
            .iter()
            .map(Term::to_position)
            .collect::<Result<Vec<_>>>()?;
        Ok(Position::sum_all(&parts))
    }

    /// Read the document as a sum of shrubs, generalized flowers and stalks.
    /// Anything else is [`Error::Unsupported`].
    pub fn to_sum_spec(&self, solver: &mut Solver) -> Result<SumSpec> {
        let mut components = Vec::new();
        for t in &self.terms {
            components.extend(t.components(solver)?);
        }
        Ok(SumSpec::new(components))
    }

    pub fn from_sum_spec(spec: &SumSpec) -> PositionDoc {
        let terms = spec
            .components
            .iter()
            .map(|c| match c {
                Component::Stalk(h) => Term::Stalk(*h),
                Component::Flower(f) => Term::GFlower {
                    height: f.height,
                    blossom: Blossom::Value(f.blossom),
                },
                Component::Shrub(s) => Term::Graph(GraphTerm::from_position(&s.to_position())),
            })
            .collect();
        PositionDoc { terms }
    }

    pub fn from_position(p: &Position) -> PositionDoc {
        if p.is_empty() {
            return PositionDoc::default();
        }
        PositionDoc {
            terms: vec![Term::Graph(GraphTerm::from_position(p))],
        }
    }
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

fn colors_text(colors: &[Color]) -> String {
    colors.iter().map(|c| c.letter()).collect()
}

impl fmt::Display for GraphTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("graph{")?;
        for (a, b, c) in &self.edges {
            write!(f, "({a} {b} {})", c.letter())?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Blossom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Blossom::Value(x) => write!(f, "{x}"),
            Blossom::String(colors) => write!(f, "string({})", colors_text(colors)),
            Blossom::Graph(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Stalk(h) => write!(f, "stalk({h})"),
            Term::Flower {
                height,
                loops,
                color,
            } => write!(f, "flower({height}; {loops} {})", color.letter()),
            Term::String(colors) => write!(f, "string({})", colors_text(colors)),
            Term::GFlower { height, blossom } => write!(f, "gflower({height}; {blossom})"),
            Term::Graph(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Display for PositionDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

pub fn print(doc: &PositionDoc) -> String {
    doc.to_string()
}

/// A position as a single graph term, or the empty string.
pub fn print_position(p: &Position) -> String {
    PositionDoc::from_position(p).to_string()
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

pub fn parse(text: &str) -> Result<PositionDoc> {
    Parser::new(text).document()
}

impl FromStr for PositionDoc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn location(&self, at: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..at.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error_at<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.location(at);
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.error(format!("expected `{c}`, found `{d}`")),
            None => self.error(format!("expected `{c}`, found end of input")),
        }
    }

    fn word(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.chars.get(self.pos) {
                Some(c) => self.error(format!("unexpected `{c}`")),
                None => self.error("unexpected end of input"),
            };
        }
        Ok((start, self.chars[start..self.pos].iter().collect()))
    }

    fn natural(&mut self, what: &str) -> Result<u32> {
        self.skip_ws();
        let at = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if at == self.pos {
            return self.error(format!("expected a {what}"));
        }
        let w: String = self.chars[at..self.pos].iter().collect();
        match w.parse::<u32>() {
            Ok(0) => self.error_at(at, format!("{what} must be at least 1")),
            Ok(n) => Ok(n),
            Err(_) => self.error_at(at, format!("expected a {what}, found `{w}`")),
        }
    }

    fn document(&mut self) -> Result<PositionDoc> {
        let mut terms = Vec::new();
        if self.peek().is_none() {
            return Ok(PositionDoc { terms });
        }
        terms.push(self.term()?);
        while let Some(c) = self.peek() {
            if c != '+' {
                return self.error(format!("expected `+` or end of input, found `{c}`"));
            }
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(PositionDoc { terms })
    }

    fn term(&mut self) -> Result<Term> {
        let (at, keyword) = self.word()?;
        match keyword.as_str() {
            "stalk" => {
                self.expect('(')?;
                let h = self.natural("height")?;
                self.expect(')')?;
                Ok(Term::Stalk(h))
            }
            "flower" => {
                self.expect('(')?;
                let height = self.natural("height")?;
                self.expect(';')?;
                let loops = self.natural("petal count")?;
                let color = self.petal_color()?;
                self.expect(')')?;
                Ok(Term::Flower {
                    height,
                    loops,
                    color,
                })
            }
            "string" => Ok(Term::String(self.string_body(true)?)),
            "gflower" => {
                self.expect('(')?;
                let height = self.natural("height")?;
                self.expect(';')?;
                let blossom = self.blossom()?;
                self.expect(')')?;
                Ok(Term::GFlower { height, blossom })
            }
            "graph" => Ok(Term::Graph(self.graph(false)?)),
            other => self.error_at(at, format!("unknown term `{other}`")),
        }
    }

    fn petal_color(&mut self) -> Result<Color> {
        let (at, w) = self.word()?;
        match w.as_str() {
            "R" => Ok(Color::Red),
            "B" => Ok(Color::Blue),
            "G" => self.error_at(at, "flower petals are red or blue, not green"),
            _ => self.error_at(at, format!("expected a petal color R or B, found `{w}`")),
        }
    }

    fn string_body(&mut self, allow_green: bool) -> Result<Vec<Color>> {
        self.expect('(')?;
        let (at, w) = self.word()?;
        let mut colors = Vec::new();
        for (i, ch) in w.chars().enumerate() {
            match Color::from_letter(ch) {
                Some(Color::Green) if !allow_green => {
                    return self.error_at(at + i, "green edge inside a blossom")
                }
                Some(c) => colors.push(c),
                None => return self.error_at(at + i, format!("`{ch}` is not a color")),
            }
        }
        self.expect(')')?;
        Ok(colors)
    }

    fn blossom(&mut self) -> Result<Blossom> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c == '-' || c.is_ascii_digit() => {
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| *c == '-' || *c == '/' || c.is_ascii_digit())
                {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                match text.parse::<Dyadic>() {
                    Ok(x) => Ok(Blossom::Value(x)),
                    Err(_) => self.error_at(start, format!("`{text}` is not a dyadic rational")),
                }
            }
            _ => {
                let (at, w) = self.word()?;
                match w.as_str() {
                    "string" => Ok(Blossom::String(self.string_body(false)?)),
                    "graph" => Ok(Blossom::Graph(self.graph(true)?)),
                    _ => self.error_at(at, "expected a value, string(...) or graph{...}"),
                }
            }
        }
    }

    fn graph(&mut self, blossom: bool) -> Result<GraphTerm> {
        self.expect('{')?;
        let mut edges = Vec::new();
        loop {
            match self.peek() {
                Some('}') => {
                    self.pos += 1;
                    return Ok(GraphTerm { edges });
                }
                Some('(') => {
                    self.pos += 1;
                    let (_, a) = self.word()?;
                    let (_, b) = self.word()?;
                    let (at, c) = self.word()?;
                    let color = match c.as_str() {
                        "R" => Color::Red,
                        "B" => Color::Blue,
                        "G" if !blossom => Color::Green,
                        "G" => return self.error_at(at, "green edge inside a blossom"),
                        _ => return self.error_at(at, format!("`{c}` is not a color")),
                    };
                    self.expect(')')?;
                    edges.push((a, b, color));
                }
                Some(c) => return self.error(format!("expected `(` or `}}`, found `{c}`")),
                None => return self.error("unterminated graph"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Convention;
    use crate::model::Outcome;

    fn pos(text: &str) -> Position {
        parse(text).unwrap().to_position().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(pos("stalk(1)"), position::stalk(1));
        assert_eq!(pos("flower(3; 4 R)"), position::flower(3, 4, Color::Red).unwrap());
        let g = pos("graph{(g0 v1 G)(v1 v1 B)}");
        assert_eq!(g, position::flower(1, 1, Color::Blue).unwrap());
        assert!(pos("").is_empty());
        assert!(pos("   ").is_empty());
        assert_eq!(pos("flower(2;1B)"), pos(" flower ( 2 ; 1 B ) "));
    }

    #[test]
    fn sums_and_blossoms() {
        let p = pos("stalk(1) + string(GBR) + gflower(2; 3/4)");
        assert_eq!(p.edge_count(), 1 + 3 + 2 + 3);
        let a = pos("gflower(1; string(BR))");
        let b = pos("gflower(1; 1/2)");
        assert_eq!(a, b);
        let c = pos("gflower(2; graph{(g0 x B)(x x R)(g0 g0 B)})");
        assert_eq!(c.edge_count(), 5);
    }

    #[test]
    fn errors_carry_locations() {
        match parse("stalk(1) +\n  flower(2; 1 G)") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 15)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("stalk(0)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("gflower(1; string(BG))"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("gflower(1; graph{(g0 a G)})"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("stalk(1) stalk(2)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("bush(2)"), Err(Error::Syntax { line: 1, column: 1, .. })));
        assert!(matches!(parse("graph{(g0 v1 G)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("gflower(1; 1/3)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn print_round_trips() {
        for text in [
            "",
            "stalk(3)",
            "flower(2; 1 B)+string(GGR)",
            "gflower(1; -3/2)+gflower(4; string(RRB))",
            "graph{(g0 v1 G)(v1 v2 R)(v2 v1 B)}+gflower(2; graph{(g0 a B)})",
        ] {
            let doc = parse(text).unwrap();
            assert_eq!(print(&doc), text);
            assert_eq!(parse(&print(&doc)).unwrap(), doc);
        }
    }

    #[test]
    fn position_printing_round_trips() {
        for text in ["stalk(2)+flower(1; 2 R)", "string(GBR)+graph{(g0 g1 G)}", ""] {
            let p = pos(text);
            let back = pos(&print_position(&p));
            let mut s = Solver::new();
            assert_eq!(back.edge_count(), p.edge_count());
            for c in Convention::BOTH {
                assert_eq!(s.outcome(&back, c), s.outcome(&p, c));
            }
        }
    }

    #[test]
    fn spec_recognition() {
        let mut s = Solver::new();
        let doc = parse("flower(2; 1 B) + string(GGBR) + stalk(3) + gflower(1; 0)").unwrap();
        let spec = doc.to_sum_spec(&mut s).unwrap();
        assert_eq!(
            spec.components,
            vec![
                Component::Flower(FlowerSpec::new(2, Dyadic::ONE)),
                Component::Flower(FlowerSpec::new(2, Dyadic::new(1, 1))),
                Component::Stalk(3),
                Component::Stalk(1),
            ]
        );
        assert!(matches!(
            parse("string(BR)").unwrap().to_sum_spec(&mut s),
            Err(Error::Unsupported(_))
        ));
        let twin = crate::classifiers::evil_twin(&parse("stalk(1)").unwrap().to_sum_spec(&mut s).unwrap());
        assert_eq!(print(&PositionDoc::from_sum_spec(&twin)), "stalk(1)+stalk(1)");
        let p = parse("flower(2; 1 B) + flower(3; 1 R)").unwrap().to_position().unwrap();
        assert_eq!(s.outcome(&p, Convention::Misere), Outcome::L);
    }
}
