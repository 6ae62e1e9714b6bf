//! Constructive machinery behind the membership results: the two minimal
//! unit expressions of `a·x + b·y = 1`, the certified largest gap, and an
//! explicit chain of representations for every amount past that gap, built
//! by repeatedly adding one of the unit expressions.

use std::fmt;

use crate::arith::{self, checked_mul};
use crate::diophantine::{self, CoinPair};
use crate::error::{Error, Result};

/// The two integer solutions of `a·x + b·y = 1` adjacent to zero in the
/// solution family: `first` with positive `x`, `second` with positive `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalUnitPair {
    first: (i64, i64),
    second: (i64, i64),
}

impl MinimalUnitPair {
    /// `(x1, y1)` with `0 < x1 < b` and `y1 < 0`.
    pub fn first(&self) -> (i64, i64) {
        self.first
    }

    /// `(x2, y2) = (x1 - b, y1 + a)` with `x2 < 0` and `y2 > 0`.
    pub fn second(&self) -> (i64, i64) {
        self.second
    }
}

/// Which minimal unit expression a chain step added.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitExpression {
    First,
    Second,
}

impl fmt::Display for UnitExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitExpression::First => write!(f, "first"),
            UnitExpression::Second => write!(f, "second"),
        }
    }
}

/// One step of the chain: a non-negative representation of `d` and the unit
/// expression that produced it from the previous step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainStep {
    pub d: i64,
    pub x: i64,
    pub y: i64,
    pub added: UnitExpression,
}

/// Computes the minimal unit expressions for a pair with `a, b >= 2`.
///
/// `x1` is the inverse of `a` modulo `b` (so `0 < x1 < b`), `y1` the
/// matching negative coefficient; the second expression is the adjacent
/// family member `(x1 - b, y1 + a)`.
pub fn minimal_unit_expressions(pair: CoinPair) -> Result<MinimalUnitPair> {
    pair.require_min_two()?;
    let (a, b) = (pair.a(), pair.b());
    let x1 = arith::mod_inverse(a, b)?;
    // |y1| < a and |x1 - b| < b, so only the product a·x1 needs widening.
    let y1 = i64::try_from((1 - a as i128 * x1 as i128) / b as i128).map_err(|_| Error::Overflow)?;
    let first = (x1, y1);
    let second = (x1 - b, y1 + a);
    debug_assert!(first.0 > 0 && first.1 < 0);
    debug_assert!(second.0 < 0 && second.1 > 0);
    Ok(MinimalUnitPair { first, second })
}

/// Confirms that `ab - a - b` is a gap by checking that its canonical
/// solution is exactly `(b-1, -1)`, the non-representability certificate
/// with the largest possible `x`.
pub fn verify_base_gap(pair: CoinPair) -> Result<bool> {
    pair.require_min_two()?;
    let (a, b) = (pair.a(), pair.b());
    let f = checked_mul(a, b)? - a - b;
    let (x, y) = diophantine::canonical_solution(pair, f)?;
    Ok(x == b - 1 && y == -1)
}

/// Builds the representation chain for every `d` from `ab - a - b + 1` up
/// to `d_max`: the base step applies the second unit expression to the
/// certificate `(b-1, -1)` of the largest gap, and each later step adds
/// whichever unit expression keeps both coordinates non-negative,
/// preferring the first when both would.
///
/// `d_max` must lie in `[ab - a - b + 1, ab + 10^6]`; the upper guard keeps
/// the materialized chain desk-scale. A step where neither expression stays
/// non-negative would contradict the membership theory and is reported as
/// [`Error::ChainBroken`].
pub fn inductive_chain(pair: CoinPair, d_max: i64) -> Result<Vec<ChainStep>> {
    let units = minimal_unit_expressions(pair)?;
    let (a, b) = (pair.a(), pair.b());
    let ab = checked_mul(a, b)?;
    let base_d = ab - a - b + 1;
    let max_allowed = ab.saturating_add(1_000_000);
    if d_max < base_d || d_max > max_allowed {
        return Err(Error::ChainBoundOutOfRange { d_max, min: base_d, max: max_allowed });
    }

    let (fx, fy) = units.first();
    let (sx, sy) = units.second();
    // Base: (b-1, -1) + second. The first expression is never an option
    // here since y1 <= -1 would drive y to -2 or lower.
    let mut x = b - 1 + sx;
    let mut y = -1 + sy;
    debug_assert!(x >= 0 && y >= 0);

    let mut steps = Vec::with_capacity(usize::try_from(d_max - base_d + 1).unwrap_or(0));
    steps.push(ChainStep { d: base_d, x, y, added: UnitExpression::Second });
    for d in base_d + 1..=d_max {
        // x stays <= d/a and |fx|, |sx| < b <= ab/2 <= d_max, so these sums
        // cannot overflow once ab fits in i64.
        let added = if x + fx >= 0 && y + fy >= 0 {
            x += fx;
            y += fy;
            UnitExpression::First
        } else if x + sx >= 0 && y + sy >= 0 {
            x += sx;
            y += sy;
            UnitExpression::Second
        } else {
            return Err(Error::ChainBroken { d });
        };
        steps.push(ChainStep { d, x, y, added });
    }
    Ok(steps)
}
