//! Named verification suites that pit the classifiers and formulas against
//! the oracle and against definitional scans.
//!
//! Each suite produces one [`Record`] per checked instance. Work is spread
//! over rayon workers, each with its own [`Solver`]; records come back sorted
//! by instance id so reports are reproducible.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classifiers::{
    classify_sum, evil_twin, flowerbed1_outcome, flowerbed_outcome, nim_outcome, shrub_value,
    sprigs_outcome, trim, trimmed_sprig_outcome, BlossomStyle, FlowerbedSpec, SumSpec,
};
use crate::dsl::{self, Blossom, GraphTerm, PositionDoc, Term};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::game::Context;
use crate::generators::{self, ContextFamily, FlowerbedBounds};
use crate::model::{Color, Convention, Outcome};
use crate::nim::{chain_eval, lower, lower_slow, upper, upper_slow, ChainStep};
use crate::oracle::Solver;
use crate::position::{self, Position};

pub const SUITES: [&str; 12] = [
    "nimsum-formulas",
    "nimsum-laws",
    "shrub-colon",
    "shrub-equivalence",
    "bouton",
    "redblue-values",
    "sprigs-table",
    "flowerbed-n1",
    "main-theorem",
    "star-cancel",
    "flowerbed-general",
    "cli-roundtrip",
];

pub const DEFAULT_SEED: u64 = 7;

/// Solver caches are dropped once they pass this many entries.
const CACHE_LIMIT: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Record {
    pub instance_id: u64,
    pub family: String,
    pub instance: String,
    pub conventions: Vec<Convention>,
    pub classifier_outcome: String,
    pub oracle_outcome: String,
    pub agree: bool,
}

impl Record {
    fn new(
        family: &str,
        instance: impl Into<String>,
        conventions: &[Convention],
        classifier: impl ToString,
        oracle: impl ToString,
    ) -> Record {
        let classifier_outcome = classifier.to_string();
        let oracle_outcome = oracle.to_string();
        Record {
            instance_id: 0,
            family: family.to_string(),
            instance: instance.into(),
            conventions: conventions.to_vec(),
            agree: classifier_outcome == oracle_outcome,
            classifier_outcome,
            oracle_outcome,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub suite: String,
    pub total: usize,
    pub failures: usize,
    pub elapsed_ms: u128,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub bounds: BTreeMap<String, String>,
    pub records: Vec<Record>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn total(&self) -> usize {
        self.records.len()
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.agree).count()
    }

    pub fn summary(&self) -> Summary {
        Summary {
            suite: self.suite.clone(),
            total: self.total(),
            failures: self.failures(),
            elapsed_ms: self.elapsed_ms,
            seed: self.seed,
        }
    }

    /// Header line, one line per record, then the summary line.
    pub fn write_jsonl(&self, out: &mut dyn Write) -> Result<()> {
        #[derive(Serialize)]
        struct Header<'a> {
            suite: &'a str,
            seed: u64,
            bounds: &'a BTreeMap<String, String>,
        }
        let header = Header {
            suite: &self.suite,
            seed: self.seed,
            bounds: &self.bounds,
        };
        writeln!(out, "{}", to_json(&header)?)?;
        for r in &self.records {
            writeln!(out, "{}", to_json(r)?)?;
        }
        writeln!(out, "{}", to_json(&self.summary())?)?;
        Ok(())
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string(v).map_err(|e| Error::Io(e.into()))
}

/// Seed and `KEY=VAL` overrides for a suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub bounds: BTreeMap<String, String>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            bounds: BTreeMap::new(),
        }
    }
}

impl VerifyOptions {
    pub fn with_bound(mut self, key: &str, value: &str) -> Self {
        self.bounds.insert(key.to_string(), value.to_string());
        self
    }
}

/// Parse `KEY=VAL`.
pub fn parse_bound(text: &str) -> Result<(String, String)> {
    match text.split_once('=') {
        Some((k, v)) if !k.is_empty() && !v.is_empty() => Ok((k.to_string(), v.to_string())),
        _ => Err(Error::Config(format!("bound `{text}` is not KEY=VAL"))),
    }
}

struct Bounds<'a> {
    map: &'a BTreeMap<String, String>,
}

impl Bounds<'_> {
    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.map.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::Config(format!(
                "unknown bound `{k}`; this suite accepts: {}",
                if allowed.is_empty() { "none".to_string() } else { allowed.join(", ") }
            ))),
            None => Ok(()),
        }
    }

    fn num(&self, key: &str, default: usize) -> Result<usize> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Error::Config(format!("bound `{key}` needs a number, got `{v}`"))),
        }
    }

    fn text<'b>(&'b self, key: &str, default: &'b str, choices: &[&str]) -> Result<&'b str> {
        let v = self.map.get(key).map(String::as_str).unwrap_or(default);
        if choices.contains(&v) {
            Ok(v)
        } else {
            Err(Error::Config(format!(
                "bound `{key}` must be one of {}, got `{v}`",
                choices.join(", ")
            )))
        }
    }
}

pub fn run_suite(name: &str, options: &VerifyOptions) -> Result<VerifyReport> {
    let start = Instant::now();
    let b = Bounds {
        map: &options.bounds,
    };
    let seed = options.seed;
    let mut records = match name {
        "nimsum-formulas" => {
            b.check_keys(&["limit"])?;
            nimsum_formulas(b.num("limit", 512)? as u64)
        }
        "nimsum-laws" => {
            b.check_keys(&["limit", "tuples"])?;
            nimsum_laws(b.num("limit", 64)? as u64, b.num("tuples", 1000)?, seed)
        }
        "shrub-colon" => {
            b.check_keys(&["edges"])?;
            shrub_colon(b.num("edges", 7)?)
        }
        "shrub-equivalence" => {
            b.check_keys(&["count", "shrub_edges", "context_edges", "tree_depth"])?;
            shrub_equivalence(
                b.num("count", 200)?,
                b.num("shrub_edges", 6)?,
                b.num("context_edges", 5)?,
                b.num("tree_depth", 3)?,
                seed,
            )
        }
        "bouton" => {
            b.check_keys(&["heaps", "height"])?;
            bouton(b.num("heaps", 4)?, b.num("height", 4)? as u32)
        }
        "redblue-values" => {
            b.check_keys(&["string_len", "tree_edges"])?;
            redblue_values(b.num("string_len", 6)?, b.num("tree_edges", 5)?)
        }
        "sprigs-table" => {
            b.check_keys(&["per_side"])?;
            sprigs_table(b.num("per_side", 2)?)
        }
        "flowerbed-n1" => {
            b.check_keys(&["height", "loops"])?;
            flowerbed_n1(b.num("height", 4)? as u32, b.num("loops", 2)? as i64)
        }
        "main-theorem" => {
            b.check_keys(&["count", "twin"])?;
            let identity = b.text("twin", "standard", &["standard", "identity"])? == "identity";
            twin_sums(b.num("count", 300)?, identity, seed)
        }
        "star-cancel" => {
            b.check_keys(&["string_len", "contexts"])?;
            star_cancel(b.num("string_len", 3)?, b.num("contexts", 50)?, seed)
        }
        "flowerbed-general" => {
            b.check_keys(&["per_side", "height", "petals"])?;
            flowerbed_general(
                b.num("per_side", 2)?,
                b.num("height", 3)? as u32,
                b.num("petals", 1)? as i64,
            )
        }
        "cli-roundtrip" => {
            b.check_keys(&[])?;
            cli_roundtrip()
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    for (i, r) in records.iter_mut().enumerate() {
        r.instance_id = i as u64;
    }
    Ok(VerifyReport {
        suite: name.to_string(),
        seed,
        bounds: options.bounds.clone(),
        records,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Map every item to records in parallel, one solver per worker, keeping
/// the input order.
fn par_records<T, F>(items: &[T], f: F) -> Vec<Record>
where
    T: Sync,
    F: Fn(&mut Solver, &T) -> Vec<Record> + Sync,
{
    let chunks: Vec<Vec<Record>> = items
        .par_iter()
        .map_init(Solver::new, |solver, item| {
            if solver.cached_entries() > CACHE_LIMIT {
                solver.clear();
            }
            f(solver, item)
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

// ---------------------------------------------------------------------------
// Nim-sum suites
// ---------------------------------------------------------------------------

fn nimsum_formulas(limit: u64) -> Vec<Record> {
    let rows: Vec<u64> = (0..limit).collect();
    par_records(&rows, |_, &m| {
        let mismatch = (0..limit).find(|&n| upper(m, n) != upper_slow(m, n) || lower(m, n) != lower_slow(m, n));
        let (fast, slow) = match mismatch {
            Some(n) => (
                format!("n={n} upper={} lower={}", upper(m, n), lower(m, n)),
                format!("n={n} upper={} lower={}", upper_slow(m, n), lower_slow(m, n)),
            ),
            None => ("all rows match".to_string(), "all rows match".to_string()),
        };
        vec![Record::new("upper-lower-row", format!("m={m}, n<{limit}"), &[], fast, slow)]
    })
}

fn nimsum_laws(limit: u64, tuples: usize, seed: u64) -> Vec<Record> {
    let rows: Vec<u64> = (0..limit).collect();
    let mut records = par_records(&rows, |_, &a| {
        let mut first_break: Option<String> = None;
        let mut note = |law: &str, b: u64, c: u64| {
            first_break.get_or_insert_with(|| format!("{law} fails at a={a} b={b} c={c}"));
        };
        for b in 0..limit {
            if upper(a, b) != upper(b, a) {
                note("upper commutes", b, 0);
            }
            if b + 1 < limit {
                if upper(a, b) > upper(a, b + 1) || upper(b, a) > upper(b + 1, a) {
                    note("upper increasing", b, 0);
                }
                if lower(a, b) < lower(a, b + 1) {
                    note("lower decreasing in n", b, 0);
                }
                if lower(b, a) > lower(b + 1, a) {
                    note("lower increasing in m", b, 0);
                }
            }
            for c in 0..limit {
                if lower(upper(a, b), c) > upper(lower(a, c), b) {
                    note("mixed up-down inequality", b, c);
                }
            }
        }
        let verdict = first_break.unwrap_or_else(|| "holds".to_string());
        vec![Record::new("laws-row", format!("a={a}"), &[], verdict, "holds")]
    });

    let mut rng = generators::rng(seed);
    let samples: Vec<(u64, Vec<u64>)> = (0..tuples)
        .map(|_| {
            let k = rng.gen_range(1..=4);
            (rng.gen_range(0..32), (0..k).map(|_| rng.gen_range(0..16)).collect())
        })
        .collect();
    records.extend(par_records(&samples, |_, (a, bs)| {
        let signs: Vec<bool> = permutations(bs)
            .iter()
            .map(|p| {
                let steps: Vec<ChainStep> = p.iter().map(|&b| ChainStep::lower(b)).collect();
                chain_eval(*a, &steps) > 0
            })
            .collect();
        let uniform = signs.iter().all(|&s| s == signs[0]);
        vec![Record::new(
            "down-chain-permutations",
            format!("a={a} b={bs:?}"),
            &[],
            if uniform { "order-independent" } else { "order-dependent" },
            "order-independent",
        )]
    }));
    records
}

fn permutations(items: &[u64]) -> Vec<Vec<u64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Green suites
// ---------------------------------------------------------------------------

fn shrub_colon(max_edges: usize) -> Vec<Record> {
    let shrubs = generators::enum_shrubs(max_edges);
    par_records(&shrubs, |solver, s| {
        let p = s.to_position();
        let classifier = shrub_value(&p).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
        let oracle = solver
            .grundy_value(&p, Convention::Normal)
            .map(|v| v.to_string())
            .unwrap_or_else(|e| e.to_string());
        vec![Record::new("shrub", s.to_string(), &[Convention::Normal], classifier, oracle)]
    })
}

fn shrub_equivalence(
    count: usize,
    shrub_edges: usize,
    context_edges: usize,
    tree_depth: usize,
    seed: u64,
) -> Vec<Record> {
    let shrubs = generators::enum_shrubs(shrub_edges);
    let mut rng = generators::rng(seed);
    let arbitrary = ContextFamily::ArbitraryHackenbush {
        max_edges: context_edges,
    };
    let trees = ContextFamily::DicotTrees { depth: tree_depth };
    let pairs: Vec<_> = (0..count)
        .map(|i| {
            let shrub = shrubs.choose(&mut rng).expect("at least one shrub").clone();
            let family = if i % 2 == 0 { &arbitrary } else { &trees };
            let context = generators::sample_contexts(family, 1, rng.gen())
                .pop()
                .expect("one context");
            (shrub, context)
        })
        .collect();
    par_records(&pairs, |solver, (shrub, context)| {
        let s = shrub.to_position();
        let stalk = position::stalk(shrub.value() as usize);
        let with_shrub = solver.outcome(&context.attach(&s), Convention::Misere);
        let with_stalk = solver.outcome(&context.attach(&stalk), Convention::Misere);
        vec![Record::new(
            "shrub-vs-stalk",
            format!("{shrub} + {context}"),
            &[Convention::Misere],
            with_stalk,
            with_shrub,
        )]
    })
}

fn bouton(max_heaps: usize, max_height: u32) -> Vec<Record> {
    let sets = generators::enum_stalk_multisets(max_heaps, max_height);
    par_records(&sets, |solver, heaps| {
        let parts: Vec<Position> = heaps.iter().map(|&h| position::stalk(h as usize)).collect();
        let p = Position::sum_all(&parts);
        let heights: Vec<u64> = heaps.iter().map(|&h| h as u64).collect();
        Convention::BOTH
            .iter()
            .map(|&c| {
                Record::new("nim", format!("{heaps:?}"), &[c], nim_outcome(&heights, c), solver.outcome(&p, c))
            })
            .collect()
    })
}

// ---------------------------------------------------------------------------
// Red-blue values
// ---------------------------------------------------------------------------

fn sign_outcome(x: Dyadic) -> Outcome {
    match x.signum() {
        1 => Outcome::L,
        -1 => Outcome::R,
        _ => Outcome::P,
    }
}

fn redblue_values(string_len: usize, tree_edges: usize) -> Vec<Record> {
    let mut items: Vec<(String, Position)> = generators::enum_redblue_colors(string_len)
        .into_iter()
        .map(|c| (format!("string({})", c.iter().map(|c| c.letter()).collect::<String>()), position::string(&c)))
        .collect();
    items.extend(
        generators::enum_redblue_trees(tree_edges)
            .into_iter()
            .map(|t| {
                let p = t.to_position();
                (dsl::print_position(&p), p)
            }),
    );
    let mut records = par_records(&items, |solver, (name, p)| {
        let (value, normal) = match solver.redblue_value(p) {
            Ok(v) => (v, solver.outcome(p, Convention::Normal)),
            Err(e) => return vec![Record::new("sign-law", name.clone(), &[], e, "a value")],
        };
        vec![Record::new(
            "sign-law",
            format!("{name} = {value}"),
            &[Convention::Normal],
            sign_outcome(value),
            normal,
        )]
    });
    let mut solver = Solver::new();
    let spots = [
        ("one blue edge", position::string(&[Color::Blue]), "1"),
        (
            "blue edge plus red edge",
            position::string(&[Color::Blue]).disjunctive_sum(&position::string(&[Color::Red])),
            "0",
        ),
        ("blue edge under red edge", position::string(&[Color::Blue, Color::Red]), "1/2"),
    ];
    for (name, p, want) in spots {
        let got = solver.redblue_value(&p).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
        records.push(Record::new("spot-value", name, &[Convention::Normal], got, want));
    }
    records
}

// ---------------------------------------------------------------------------
// Flowerbed suites
// ---------------------------------------------------------------------------

fn bed_records(
    solver: &mut Solver,
    family: &str,
    bed: &FlowerbedSpec,
    style: BlossomStyle,
    classify: impl Fn(Convention) -> Result<Outcome>,
) -> Vec<Record> {
    let p = match bed.realize(style) {
        Ok(p) => p,
        Err(e) => return vec![Record::new(family, bed.to_string(), &[], e, "a realizable bed")],
    };
    Convention::BOTH
        .iter()
        .map(|&c| {
            let got = classify(c).map(|o| o.to_string()).unwrap_or_else(|e| e.to_string());
            Record::new(family, bed.to_string(), &[c], got, solver.outcome(&p, c))
        })
        .collect()
}

fn sprigs_table(per_side: usize) -> Vec<Record> {
    let beds = generators::enum_sprig_games(
        per_side,
        &generators::blossom_magnitudes(),
        generators::small_stalk_sets(),
        true,
    );
    par_records(&beds, |solver, bed| {
        let trimmed = trim(bed).0;
        bed_records(solver, "sprigs", bed, BlossomStyle::String, |c| sprigs_outcome(&trimmed, c))
    })
}

fn flowerbed_n1(max_height: u32, max_loops: i64) -> Vec<Record> {
    let beds: Vec<FlowerbedSpec> = generators::enum_flowerbed_specs(&FlowerbedBounds::balanced(
        1,
        max_height,
        max_loops,
        generators::small_stalk_sets(),
    ))
    .into_iter()
    .filter(|b| !(b.blue()[0].height == 1 && b.red()[0].height == 1))
    .collect();
    par_records(&beds, |solver, bed| {
        let (b, r) = (bed.blue()[0], bed.red()[0]);
        let a = bed.stalk_nim_sum();
        bed_records(solver, "one-pair", bed, BlossomStyle::Loops, |_| {
            flowerbed1_outcome(b.height, b.blossom, r.height, r.blossom.abs(), a)
        })
    })
}

fn flowerbed_general(per_side: usize, max_height: u32, petals: i64) -> Vec<Record> {
    let beds = generators::enum_flowerbed_specs(&FlowerbedBounds::balanced(
        per_side,
        max_height,
        petals,
        vec![vec![], vec![1], vec![2]],
    ));
    par_records(&beds, |solver, bed| {
        let mut records =
            bed_records(solver, "flowerbed", bed, BlossomStyle::Loops, |c| flowerbed_outcome(bed, c));
        // direct misère table wherever its hypotheses hold
        if let Ok(direct) = trimmed_sprig_outcome(bed) {
            let p = bed.realize(BlossomStyle::Loops).expect("realized above");
            records.push(Record::new(
                "trimmed-sprigs",
                bed.to_string(),
                &[Convention::Misere],
                direct,
                solver.outcome(&p, Convention::Misere),
            ));
        }
        records
    })
}

// ---------------------------------------------------------------------------
// Evil twins and star-based cancellation
// ---------------------------------------------------------------------------

fn twin_sums(count: usize, identity_twin: bool, seed: u64) -> Vec<Record> {
    let shrubs = generators::enum_shrubs(4);
    let mut rng = generators::rng(seed);
    let sums: Vec<SumSpec> = (0..count)
        .map(|_| generators::random_sum_spec(&mut rng, &shrubs, 4, 3, 3))
        .collect();
    par_records(&sums, |solver, g| {
        let twin = if identity_twin { g.clone() } else { evil_twin(g) };
        let (p, q) = match (g.realize(BlossomStyle::String), twin.realize(BlossomStyle::String)) {
            (Ok(p), Ok(q)) => (p, q),
            (Err(e), _) | (_, Err(e)) => {
                return vec![Record::new("twin", g.to_string(), &[], e, "a realizable sum")]
            }
        };
        let (g_normal, g_misere) = (solver.outcome(&p, Convention::Normal), solver.outcome(&p, Convention::Misere));
        let (t_normal, t_misere) = (solver.outcome(&q, Convention::Normal), solver.outcome(&q, Convention::Misere));
        let name = format!("{g} | twin {twin}");
        let mut records = vec![
            Record::new("twin-normal-vs-misere", name.clone(), &Convention::BOTH, t_misere, g_normal),
            Record::new("twin-misere-vs-normal", name.clone(), &Convention::BOTH, t_normal, g_misere),
        ];
        for (c, o) in [(Convention::Normal, g_normal), (Convention::Misere, g_misere)] {
            let got = classify_sum(g, c).map(|o| o.to_string()).unwrap_or_else(|e| e.to_string());
            records.push(Record::new("sum-classifier", g.to_string(), &[c], got, o));
        }
        records
    })
}

fn star_cancel(string_len: usize, context_count: usize, seed: u64) -> Vec<Record> {
    let strings = generators::enum_redblue_colors(string_len);
    let half = context_count / 2;
    let mut contexts = generators::sample_contexts(&ContextFamily::DicotTrees { depth: 3 }, half, seed);
    contexts.extend(generators::sample_contexts(
        &ContextFamily::StarBasedSums {
            max_components: 2,
            max_crown_edges: 3,
        },
        context_count - half,
        seed ^ 0x5eed,
    ));
    let items: Vec<(Vec<Color>, Context)> = strings
        .iter()
        .flat_map(|s| contexts.iter().map(move |d| (s.clone(), d.clone())))
        .collect();
    par_records(&items, |solver, (colors, d)| {
        let mirrored: Vec<Color> = colors.iter().map(|c| c.mirror()).collect();
        let pair = position::sprig(colors)
            .and_then(|x| Ok(x.disjunctive_sum(&position::sprig(&mirrored)?)));
        let pair = match pair {
            Ok(p) => p,
            Err(e) => return vec![Record::new("star-pair", format!("{colors:?}"), &[], e, "a pair")],
        };
        let with_pair = solver.outcome(&d.attach(&pair), Convention::Misere);
        let alone = solver.outcome(&d.attach(&Position::empty()), Convention::Misere);
        let name: String = colors.iter().map(|c| c.letter()).collect();
        vec![Record::new(
            "star-pair",
            format!("*:{name} + *:-{name} + {d}"),
            &[Convention::Misere],
            with_pair,
            alone,
        )]
    })
}

// ---------------------------------------------------------------------------
// Text format and command line
// ---------------------------------------------------------------------------

/// Every document built from a small vocabulary of terms: each term alone
/// and every ordered pair, covering all nesting levels.
pub fn grammar_documents() -> Vec<PositionDoc> {
    use Color::*;
    let mut terms = Vec::new();
    terms.extend((1..=3).map(Term::Stalk));
    for height in [1, 2] {
        for loops in [1, 3] {
            for color in [Red, Blue] {
                terms.push(Term::Flower { height, loops, color });
            }
        }
    }
    let seqs = |alphabet: &[Color]| -> Vec<Vec<Color>> {
        let mut out: Vec<Vec<Color>> = alphabet.iter().map(|&c| vec![c]).collect();
        for &a in alphabet {
            for &b in alphabet {
                out.push(vec![a, b]);
            }
        }
        out
    };
    terms.extend(seqs(&[Red, Blue, Green]).into_iter().map(Term::String));
    let edge = |a: &str, b: &str, c: Color| (a.to_string(), b.to_string(), c);
    let blossom_graphs = [
        GraphTerm { edges: vec![edge("g0", "a", Blue)] },
        GraphTerm { edges: vec![edge("g0", "a", Red), edge("a", "a", Blue)] },
    ];
    let mut blossoms: Vec<Blossom> = ["-3/2", "0", "1/2", "2"]
        .iter()
        .map(|x| Blossom::Value(x.parse().expect("literal dyadic")))
        .collect();
    blossoms.extend(seqs(&[Red, Blue]).into_iter().map(Blossom::String));
    blossoms.extend(blossom_graphs.iter().cloned().map(Blossom::Graph));
    for height in [1, 2] {
        for blossom in &blossoms {
            terms.push(Term::GFlower {
                height,
                blossom: blossom.clone(),
            });
        }
    }
    terms.extend(
        [
            vec![],
            vec![edge("g0", "v1", Green)],
            vec![edge("g0", "v1", Green), edge("v1", "v1", Blue)],
            vec![edge("g0", "g1", Red), edge("g1", "v2", Blue), edge("v2", "v2", Green)],
        ]
        .into_iter()
        .map(|edges| Term::Graph(GraphTerm { edges })),
    );
    let mut docs = vec![PositionDoc::default()];
    docs.extend(terms.iter().map(|t| PositionDoc { terms: vec![t.clone()] }));
    for a in &terms {
        for b in &terms {
            docs.push(PositionDoc {
                terms: vec![a.clone(), b.clone()],
            });
        }
    }
    docs
}

fn cli_roundtrip() -> Vec<Record> {
    let docs = grammar_documents();
    let mut records = par_records(&docs, |_, doc| {
        let text = dsl::print(doc);
        let verdict = match dsl::parse(&text) {
            Ok(back) if back == *doc && dsl::print(&back) == text => match back.to_position() {
                Ok(_) => "round-trips".to_string(),
                Err(e) => format!("does not build: {e}"),
            },
            Ok(back) => format!("reparsed as {back}"),
            Err(e) => e.to_string(),
        };
        vec![Record::new("dsl-roundtrip", text, &[], verdict, "round-trips")]
    });
    let canned: [(&[&str], i32); 3] = [
        (&["outcome", "stalk(1)+stalk(1)"], 0),
        (&["verify", "main-theorem", "--bound", "twin=identity", "--bound", "count=20"], 1),
        (&["verify", "no-such-suite"], 2),
    ];
    for (args, want) in canned {
        let argv = std::iter::once("hackenbush").chain(args.iter().copied());
        let code = crate::cli::run(argv, &mut std::io::sink(), &mut std::io::sink());
        records.push(Record::new("exit-code", args.join(" "), &[], code, want));
    }
    records
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_and_bounds() {
        assert!(matches!(
            run_suite("no-such-suite", &VerifyOptions::default()),
            Err(Error::UnknownSuite(_))
        ));
        let opts = VerifyOptions::default().with_bound("bogus", "1");
        assert!(matches!(run_suite("bouton", &opts), Err(Error::Config(_))));
        let opts = VerifyOptions::default().with_bound("limit", "many");
        assert!(matches!(run_suite("nimsum-formulas", &opts), Err(Error::Config(_))));
        assert!(parse_bound("count=3").is_ok());
        assert!(parse_bound("count").is_err());
    }

    #[test]
    fn small_runs_pass() {
        let opts = VerifyOptions::default().with_bound("limit", "40");
        let r = run_suite("nimsum-formulas", &opts).unwrap();
        assert_eq!((r.total(), r.failures()), (40, 0));
        let opts = VerifyOptions::default().with_bound("heaps", "2").with_bound("height", "3");
        let r = run_suite("bouton", &opts).unwrap();
        assert_eq!(r.failures(), 0);
        assert_eq!(r.total(), 2 * 10);
    }

    #[test]
    fn report_lines() {
        let opts = VerifyOptions::default().with_bound("limit", "3");
        let r = run_suite("nimsum-formulas", &opts).unwrap();
        let mut buf = Vec::new();
        r.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 1 + 3 + 1);
        let first: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(first["instanceId"], 0);
        assert_eq!(first["agree"], true);
        let last: serde_json::Value = serde_json::from_str(lines[4]).unwrap();
        assert_eq!(last["suite"], "nimsum-formulas");
        assert_eq!(last["failures"], 0);
        assert_eq!(last["seed"], DEFAULT_SEED);
        assert!(last.get("elapsedMs").is_some());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(&[1, 2, 3, 4]).len(), 24);
        assert_eq!(permutations(&[]).len(), 1);
    }

    #[test]
    fn grammar_vocabulary_size() {
        let docs = grammar_documents();
        let singles = docs.iter().filter(|d| d.terms.len() == 1).count();
        assert_eq!(docs.len(), 1 + singles + singles * singles);
    }
}
