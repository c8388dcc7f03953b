use crate::error::{invalid, Result};
use crate::model::{Color, Convention, Outcome};
use crate::oracle::Solver;
use crate::position::{Position, RawGraph};

/// Normal and misère outcomes of a star-based position: a single green edge
/// on the ground supporting an arbitrary position `G'`.
///
/// Normal play is always `N` (cut the root edge). The misère outcome is the
/// normal-play outcome of `G'`, which the oracle supplies.
pub fn star_based_outcomes(p: &Position, solver: &mut Solver) -> Result<(Outcome, Outcome)> {
    let top = star_top(p)?;
    let raw = p.clone().into_raw();
    let edges = raw
        .edges
        .into_iter()
        .filter(|e| !(raw.ground.contains(&e.a) || raw.ground.contains(&e.b)))
        .collect();
    let crown = Position::prune(RawGraph {
        vertex_count: raw.vertex_count,
        ground: vec![top],
        edges,
    })?;
    Ok((Outcome::N, solver.outcome(&crown, Convention::Normal)))
}

/// The upper end of the unique grounded edge.
fn star_top(p: &Position) -> Result<u32> {
    let grounded: Vec<_> = p
        .edges()
        .iter()
        .filter(|e| p.is_ground(e.a) || p.is_ground(e.b))
        .collect();
    match grounded.as_slice() {
        [e] if e.color == Color::Green && !(p.is_ground(e.a) && p.is_ground(e.b)) => {
            Ok(if p.is_ground(e.a) { e.b } else { e.a })
        }
        _ => invalid("not star-based: need exactly one grounded edge, green and not a loop"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Color::*;
    use crate::position::{sprig, stalk, string};

    #[test]
    fn examples() {
        let mut s = Solver::new();
        assert_eq!(star_based_outcomes(&stalk(1), &mut s).unwrap(), (Outcome::N, Outcome::P));
        assert_eq!(star_based_outcomes(&stalk(2), &mut s).unwrap(), (Outcome::N, Outcome::N));
        assert_eq!(
            star_based_outcomes(&sprig(&[Blue]).unwrap(), &mut s).unwrap(),
            (Outcome::N, Outcome::L)
        );
    }

    #[test]
    fn agrees_with_oracle() {
        let mut s = Solver::new();
        let cases = [
            string(&[Green, Red, Blue]),
            string(&[Green, Green, Red]),
            sprig(&[Red, Red]).unwrap(),
            stalk(1).graft(1, &stalk(2)).unwrap().graft(1, &string(&[Blue])).unwrap(),
        ];
        for p in cases {
            let (normal, misere) = star_based_outcomes(&p, &mut s).unwrap();
            assert_eq!(normal, s.outcome(&p, Convention::Normal));
            assert_eq!(misere, s.outcome(&p, Convention::Misere));
        }
    }

    #[test]
    fn rejects_other_shapes() {
        let mut s = Solver::new();
        assert!(star_based_outcomes(&Position::empty(), &mut s).is_err());
        assert!(star_based_outcomes(&string(&[Blue, Green]), &mut s).is_err());
        assert!(star_based_outcomes(&stalk(1).disjunctive_sum(&stalk(1)), &mut s).is_err());
    }
}
