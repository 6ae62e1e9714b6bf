//! Coin-problem answers: membership verdicts, the Frobenius number,
//! gap-set enumeration, and representation counting.

use crate::arith;
use crate::diophantine::{self, CoinPair, Representation};
use crate::error::Result;

/// Decision for a single amount `d`, carrying its proof object: a witness
/// when `d` is payable, otherwise the canonical solution `(x, y)` with
/// `0 <= x < b` and `y < 0`, which certifies that no non-negative solution
/// exists (`x` is already the smallest admissible non-negative value).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipVerdict {
    Representable { d: i64, witness: Representation },
    NotRepresentable { d: i64, certificate: (i64, i64) },
}

impl MembershipVerdict {
    pub fn d(&self) -> i64 {
        match self {
            MembershipVerdict::Representable { d, .. } => *d,
            MembershipVerdict::NotRepresentable { d, .. } => *d,
        }
    }

    pub fn is_representable(&self) -> bool {
        matches!(self, MembershipVerdict::Representable { .. })
    }

    pub fn witness(&self) -> Option<Representation> {
        match self {
            MembershipVerdict::Representable { witness, .. } => Some(*witness),
            MembershipVerdict::NotRepresentable { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<(i64, i64)> {
        match self {
            MembershipVerdict::Representable { .. } => None,
            MembershipVerdict::NotRepresentable { certificate, .. } => Some(*certificate),
        }
    }
}

/// Decides whether `d` is payable with coins `a` and `b`.
///
/// Computes the canonical solution and reads the sign of `y`. Amounts
/// `d >= a·b` are always payable and short-circuit the sign check, though
/// the witness is still materialized.
pub fn is_representable(pair: CoinPair, d: i64) -> Result<MembershipVerdict> {
    let (x, y) = diophantine::canonical_solution(pair, d)?;
    let ab = pair.a() as i128 * pair.b() as i128;
    if d as i128 >= ab {
        debug_assert!(y >= 0);
        let witness = Representation::new(x, y)?;
        return Ok(MembershipVerdict::Representable { d, witness });
    }
    if y >= 0 {
        Ok(MembershipVerdict::Representable { d, witness: Representation::new(x, y)? })
    } else {
        Ok(MembershipVerdict::NotRepresentable { d, certificate: (x, y) })
    }
}

/// The largest amount that cannot be paid: `a·b - a - b`.
///
/// With a unit coin every amount is payable, so `min(a, b) = 1` yields
/// `None` rather than a negative number.
pub fn frobenius_number(pair: CoinPair) -> Result<Option<i64>> {
    if pair.a() == 1 || pair.b() == 1 {
        return Ok(None);
    }
    let ab = arith::checked_mul(pair.a(), pair.b())?;
    let f = arith::checked_sub(ab, arith::checked_add(pair.a(), pair.b())?)?;
    Ok(Some(f))
}

/// All positive amounts with no non-negative representation, ascending.
///
/// Enumerated by running the membership decision over `1..=ab-a-b`; the
/// independent sieve lives in [`crate::oracle`].
pub fn gaps(pair: CoinPair) -> Result<Vec<i64>> {
    let Some(f) = frobenius_number(pair)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for d in 1..=f {
        if !is_representable(pair, d)?.is_representable() {
            out.push(d);
        }
    }
    Ok(out)
}

/// The number of distinct non-negative solutions of `a·x + b·y = d`:
/// `floor(y/a) + 1` from the canonical solution, or 0 when `y < 0`.
pub fn count_representations(pair: CoinPair, d: i64) -> Result<u64> {
    let (_, y) = diophantine::canonical_solution(pair, d)?;
    if y < 0 {
        Ok(0)
    } else {
        Ok((y / pair.a()) as u64 + 1)
    }
}
