//! Property tests for the position text format.

use hackenbush::dsl::{self, Blossom, GraphTerm, PositionDoc, Term};
use hackenbush::dyadic::Dyadic;
use hackenbush::generators::{random_hackenbush, rng};
use hackenbush::model::{Color, Convention};
use hackenbush::oracle::Solver;
use hackenbush::position::Position;
use proptest::prelude::*;

fn color(green: bool) -> BoxedStrategy<Color> {
    if green {
        prop_oneof![Just(Color::Blue), Just(Color::Red), Just(Color::Green)].boxed()
    } else {
        prop_oneof![Just(Color::Blue), Just(Color::Red)].boxed()
    }
}

fn graph(green: bool) -> impl Strategy<Value = GraphTerm> {
    let id = prop_oneof![Just("g0"), Just("g1"), Just("v1"), Just("top"), Just("x7")];
    prop::collection::vec((id.clone(), id, color(green)), 0..5).prop_map(|edges| GraphTerm {
        edges: edges.into_iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c)).collect(),
    })
}

fn blossom() -> impl Strategy<Value = Blossom> {
    prop_oneof![
        (-40i64..40, 0u32..4).prop_map(|(n, e)| Blossom::Value(Dyadic::new(n, e))),
        prop::collection::vec(color(false), 1..5).prop_map(Blossom::String),
        graph(false).prop_map(Blossom::Graph),
    ]
}

fn term() -> impl Strategy<Value = Term> {
    prop_oneof![
        (1u32..6).prop_map(Term::Stalk),
        (1u32..6, 1u32..4, color(false))
            .prop_map(|(height, loops, color)| Term::Flower { height, loops, color }),
        prop::collection::vec(color(true), 1..6).prop_map(Term::String),
        (1u32..4, blossom()).prop_map(|(height, blossom)| Term::GFlower { height, blossom }),
        graph(true).prop_map(Term::Graph),
    ]
}

proptest! {
    #[test]
    fn printed_documents_parse_back(terms in prop::collection::vec(term(), 0..4)) {
        let doc = PositionDoc { terms };
        let text = dsl::print(&doc);
        prop_assert_eq!(dsl::parse(&text).unwrap(), doc);
    }

    #[test]
    fn whitespace_is_insignificant(terms in prop::collection::vec(term(), 1..4)) {
        let doc = PositionDoc { terms };
        let spaced = dsl::print(&doc).replace('+', " +\n ").replace(';', " ; ");
        prop_assert_eq!(dsl::parse(&spaced).unwrap(), doc);
    }

    /// Vertex ids are renumbered on the way back, so compare what labels
    /// cannot change and check that a second trip is a fixed point.
    #[test]
    fn printed_positions_rebuild_an_equivalent_graph(seed in any::<u64>(), edges in 0usize..9) {
        let p = random_hackenbush(&mut rng(seed), edges);
        let text = dsl::print_position(&p);
        let back = dsl::parse(&text).unwrap().to_position().unwrap();
        let colors = |q: &Position| {
            let mut c: Vec<_> = q.edges().iter().map(|e| (e.color.letter(), e.is_loop())).collect();
            c.sort();
            c
        };
        prop_assert_eq!(colors(&back), colors(&p));
        prop_assert_eq!(back.ground().len(), p.ground().len());
        let mut solver = Solver::new();
        for c in Convention::BOTH {
            prop_assert_eq!(solver.outcome(&back, c), solver.outcome(&p, c));
        }
        let again = dsl::parse(&dsl::print_position(&back)).unwrap().to_position().unwrap();
        prop_assert_eq!(again, back);
    }

    #[test]
    fn parser_never_panics(text in "[a-z(){};+ 0-9/RGB-]{0,30}") {
        let _ = dsl::parse(&text);
    }
}
