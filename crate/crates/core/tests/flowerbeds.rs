//! Flowerbed classifiers against the exhaustive oracle on seeded random beds
//! and on structural properties.

use hackenbush::classifiers::{
    flowerbed_outcome, trim, BlossomStyle, FlowerSpec, FlowerbedSpec,
};
use hackenbush::dyadic::Dyadic;
use hackenbush::generators::{enum_flowerbed_specs, rng, FlowerbedBounds};
use hackenbush::model::Convention;
use hackenbush::oracle::Solver;
use rand::Rng;

fn d(s: &str) -> Dyadic {
    s.parse().unwrap()
}

/// Up to three flowers per side, string blossoms including a quarter.
fn random_bed(r: &mut impl Rng) -> FlowerbedSpec {
    let mags = ["1/2", "1", "3/2", "2", "3/4"];
    let mut flowers = Vec::new();
    for sign in [1, -1] {
        for _ in 0..r.gen_range(0..=3) {
            let m = d(mags[r.gen_range(0..mags.len())]);
            let x = if sign > 0 { m } else { -m };
            flowers.push(FlowerSpec::new(r.gen_range(1..=3), x));
        }
    }
    let stalks: Vec<u32> = (0..r.gen_range(0..=2)).map(|_| r.gen_range(1..=3)).collect();
    FlowerbedSpec::from_parts(&flowers, &stalks).unwrap()
}

#[test]
fn random_beds_match_oracle() {
    let mut r = rng(2024);
    let mut solver = Solver::new();
    let mut checked = 0;
    while checked < 600 {
        let bed = random_bed(&mut r);
        let p = bed.realize(BlossomStyle::String).unwrap();
        if p.edge_count() > 18 {
            continue;
        }
        for c in Convention::BOTH {
            let want = solver.outcome(&p, c);
            assert_eq!(flowerbed_outcome(&bed, c).unwrap(), want, "{bed} {c}");
            checked += 1;
        }
    }
}

#[test]
fn unbalanced_loop_beds_match_oracle() {
    let bounds = FlowerbedBounds {
        blue_counts: vec![0, 1, 2],
        red_counts: vec![1, 2],
        max_height: 3,
        magnitudes: vec![Dyadic::integer(1), Dyadic::integer(2)],
        stalk_sets: vec![vec![], vec![1], vec![3]],
        include_canceling: true,
    };
    let mut solver = Solver::new();
    for bed in enum_flowerbed_specs(&bounds) {
        let p = bed.realize(BlossomStyle::Loops).unwrap();
        for c in Convention::BOTH {
            assert_eq!(flowerbed_outcome(&bed, c).unwrap(), solver.outcome(&p, c), "{bed} {c}");
        }
    }
}

#[test]
fn mirror_swaps_left_and_right() {
    let mut r = rng(11);
    for _ in 0..2000 {
        let bed = random_bed(&mut r);
        for c in Convention::BOTH {
            let o = flowerbed_outcome(&bed, c).unwrap();
            assert_eq!(flowerbed_outcome(&bed.mirror(), c).unwrap(), o.mirror(), "{bed} {c}");
        }
    }
}

#[test]
fn zero_blossom_flower_is_a_stalk() {
    let flowers = [FlowerSpec::new(3, Dyadic::ZERO), FlowerSpec::new(2, d("1/2"))];
    let bed = FlowerbedSpec::from_parts(&flowers, &[]).unwrap();
    assert_eq!(bed.stalks(), &[3]);
    assert_eq!(bed.flower_count(), 1);
    let plain = FlowerbedSpec::from_parts(&flowers[1..], &[3]).unwrap();
    assert_eq!(bed, plain);
}

#[test]
fn no_canceling_pair_and_a_tall_flower_gives_equal_outcomes() {
    let mut solver = Solver::new();
    let mut checked = 0;
    for n in 1..=2 {
        let mut bounds = FlowerbedBounds::balanced(n, 3, 2, vec![vec![], vec![1], vec![2]]);
        bounds.include_canceling = false;
        for bed in enum_flowerbed_specs(&bounds) {
            if bed.all_height_one() {
                continue;
            }
            assert!(trim(&bed).1.is_empty());
            let p = bed.realize(BlossomStyle::Loops).unwrap();
            let normal = solver.outcome(&p, Convention::Normal);
            assert_eq!(solver.outcome(&p, Convention::Misere), normal, "{bed}");
            assert_eq!(flowerbed_outcome(&bed, Convention::Misere).unwrap(), normal, "{bed}");
            checked += 1;
        }
    }
    assert!(checked > 100, "{checked}");
}
