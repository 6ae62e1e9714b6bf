//! Brute-force reference implementations used to cross-validate the fast
//! paths: direct-scan membership, enumeration counting, a reachability
//! sieve for gap sets, and a sieve-based Frobenius search.
//!
//! Nothing here calls into the solver modules — the point is independence.
//! Costs are linear in `d` or in the sieve bound, which is fine for the
//! desk-scale inputs these checks run on.

use crate::diophantine::CoinPair;

/// Whether `d` has a non-negative representation, by scanning every
/// candidate `x` in `[0, d/a]`. Negative `d` is never representable.
pub fn oracle_representable(pair: CoinPair, d: i64) -> bool {
    let (a, b) = (pair.a(), pair.b());
    if d < 0 {
        return false;
    }
    (0..=d / a).any(|x| (d - a * x) % b == 0)
}

/// The exact number of non-negative representations of `d`, by full scan.
pub fn oracle_count(pair: CoinPair, d: i64) -> u64 {
    let (a, b) = (pair.a(), pair.b());
    if d < 0 {
        return 0;
    }
    (0..=d / a).filter(|&x| (d - a * x) % b == 0).count() as u64
}

/// Reachability sieve: `reach[s]` is true iff `s` is a sum of the two coin
/// values, for `0 <= s <= bound`.
fn reachable_up_to(pair: CoinPair, bound: i64) -> Vec<bool> {
    let (a, b) = (pair.a(), pair.b());
    let n = usize::try_from(bound).expect("sieve bound must be non-negative and fit in memory");
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for s in 0..=n {
        if reach[s] {
            if s + (a as usize) <= n {
                reach[s + a as usize] = true;
            }
            if s + (b as usize) <= n {
                reach[s + b as usize] = true;
            }
        }
    }
    reach
}

/// All gaps in `[1, bound]`, ascending, via the reachability sieve. A
/// non-positive bound yields the empty list.
pub fn oracle_gaps(pair: CoinPair, bound: i64) -> Vec<i64> {
    if bound < 1 {
        return Vec::new();
    }
    let reach = reachable_up_to(pair, bound);
    (1..=bound).filter(|&d| !reach[d as usize]).collect()
}

/// The largest gap, found by sieving up to `a·b` (beyond which every amount
/// is representable), or `None` when there is no gap at all.
pub fn oracle_frobenius(pair: CoinPair) -> Option<i64> {
    let (a, b) = (pair.a(), pair.b());
    let bound = a.checked_mul(b).expect("sieve bound a*b must fit in i64");
    let reach = reachable_up_to(pair, bound);
    (1..=bound).rev().find(|&d| !reach[d as usize])
}
