//! Cross-module consistency: the fast paths against the brute-force
//! oracle, and the three independent routes to "which (x, y) represent d"
//! (membership solver, lattice geometry, inductive chain) against each
//! other.

use proptest::prelude::*;
use twocoin::arith;
use twocoin::diophantine::{self, CoinPair};
use twocoin::frobenius;
use twocoin::geometry::{self, LatticeLine};
use twocoin::inductive;
use twocoin::oracle;

fn pair(a: i64, b: i64) -> CoinPair {
    CoinPair::new(a, b).unwrap()
}

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=30, 2i64..=30).prop_filter("coprime", |&(a, b)| arith::gcd(a, b) == 1)
}

#[test]
fn gap_lists_match_the_oracle_exactly() {
    for a in 2..=12i64 {
        for b in a + 1..=12i64 {
            if arith::gcd(a, b) != 1 {
                continue;
            }
            let p = pair(a, b);
            let f = frobenius::frobenius_number(p).unwrap().unwrap();
            assert_eq!(frobenius::gaps(p).unwrap(), oracle::oracle_gaps(p, f));
            assert_eq!(Some(f), oracle::oracle_frobenius(p));
        }
    }
}

proptest! {
    #[test]
    fn membership_matches_the_oracle((a, b) in coprime_pair(), d in 0i64..950) {
        let p = pair(a, b);
        let verdict = frobenius::is_representable(p, d).unwrap();
        prop_assert_eq!(verdict.is_representable(), oracle::oracle_representable(p, d));
        prop_assert_eq!(frobenius::count_representations(p, d).unwrap(), oracle::oracle_count(p, d));
    }

    #[test]
    fn chain_steps_are_known_solutions((a, b) in coprime_pair()) {
        let p = pair(a, b);
        let steps = inductive::inductive_chain(p, a * b + 100).unwrap();
        for step in steps {
            let solutions = diophantine::nonneg_solutions(p, step.d).unwrap();
            prop_assert!(
                solutions.iter().any(|r| r.xy() == (step.x, step.y)),
                "chain rep ({}, {}) for d={} not among the solver's solutions",
                step.x, step.y, step.d
            );
        }
    }

    #[test]
    fn geometry_solver_and_count_agree((a, b) in coprime_pair(), d in 0i64..950) {
        let p = pair(a, b);
        let points = geometry::lattice_points_first_quadrant(&LatticeLine::new(p, d).unwrap()).unwrap();
        let solutions: Vec<_> = diophantine::nonneg_solutions(p, d)
            .unwrap()
            .iter()
            .map(|r| r.xy())
            .collect();
        prop_assert_eq!(&points, &solutions);
        prop_assert_eq!(points.len() as u64, frobenius::count_representations(p, d).unwrap());
    }

    #[test]
    fn bijection_points_are_the_unique_solutions((a, b) in coprime_pair()) {
        let p = pair(a, b);
        let map = geometry::interior_line_bijection(p).unwrap();
        for (&d, &(x, y)) in &map {
            prop_assert_eq!(frobenius::count_representations(p, d).unwrap(), 1);
            let only = diophantine::nonneg_solutions(p, d).unwrap();
            prop_assert_eq!(only.len(), 1);
            prop_assert_eq!(only[0].xy(), (x, y));
        }
    }
}
