//! Solution theory of `a·x + b·y = d` for a coprime pair: the anchor solution
//! from the Bézout certificate, the full `k`-parameterized integer family,
//! the canonical minimal-`x` solution, and all non-negative solutions.

use crate::arith::{self, BezoutCertificate};
use crate::error::{Error, Result};

/// A validated pair of coprime positive coin denominations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoinPair {
    a: i64,
    b: i64,
}

impl CoinPair {
    /// Requires `a >= 1`, `b >= 1`, `gcd(a, b) = 1`.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::NonPositiveDenominator(a));
        }
        if b < 1 {
            return Err(Error::NonPositiveDenominator(b));
        }
        let g = arith::gcd(a, b);
        if g != 1 {
            return Err(Error::NotCoprime { a, b, gcd: g });
        }
        Ok(CoinPair { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// Canonical Bézout certificate for `(a, b)`; its gcd is always 1.
    pub fn bezout(&self) -> BezoutCertificate {
        arith::extended_gcd(self.a, self.b).expect("denominations are nonzero")
    }

    /// Several operations are only meaningful when both denominations are
    /// at least 2 (with a unit coin every amount is payable).
    pub(crate) fn require_min_two(&self) -> Result<()> {
        if self.a < 2 || self.b < 2 {
            Err(Error::DegenerateInput { a: self.a, b: self.b })
        } else {
            Ok(())
        }
    }
}

/// One anchor solution of `a·x + b·y = d` plus the infinite integer family
/// `{(x0 - k·b, y0 + k·a) : k ∈ ℤ}` it generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionFamily {
    pair: CoinPair,
    d: i64,
    x0: i64,
    y0: i64,
}

impl SolutionFamily {
    pub fn pair(&self) -> CoinPair {
        self.pair
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The anchor `(x0, y0)`.
    pub fn anchor(&self) -> (i64, i64) {
        (self.x0, self.y0)
    }

    /// The family member `(x0 - k·b, y0 + k·a)`; `k = 0` is the anchor.
    pub fn member(&self, k: i64) -> Result<(i64, i64)> {
        let x = arith::checked_sub(self.x0, arith::checked_mul(k, self.pair.b)?)?;
        let y = arith::checked_add(self.y0, arith::checked_mul(k, self.pair.a)?)?;
        Ok((x, y))
    }
}

/// A non-negative solution `(x, y)` of `a·x + b·y = d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation {
    x: i64,
    y: i64,
}

impl Representation {
    pub fn new(x: i64, y: i64) -> Result<Self> {
        if x < 0 {
            return Err(Error::NegativeAmount(x));
        }
        if y < 0 {
            return Err(Error::NegativeAmount(y));
        }
        Ok(Representation { x, y })
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn xy(&self) -> (i64, i64) {
        (self.x, self.y)
    }
}

/// Some integer solution of `a·x + b·y = d`: the Bézout anchor scaled by `d`.
///
/// The anchor is `(d·x', d·y')`, which can overflow for large `d`; overflow
/// is reported, not wrapped.
pub fn solve_any(pair: CoinPair, d: i64) -> Result<SolutionFamily> {
    if d < 0 {
        return Err(Error::NegativeAmount(d));
    }
    let cert = pair.bezout();
    let x0 = arith::checked_mul(d, cert.x_prime)?;
    let y0 = arith::checked_mul(d, cert.y_prime)?;
    Ok(SolutionFamily { pair, d, x0, y0 })
}

/// The unique solution with `0 <= x < b`: `x ≡ d·a⁻¹ (mod b)` and
/// `y = (d - a·x)/b`, which may be negative.
///
/// The sign of `y` decides representability: `y >= 0` exactly when `d` is
/// payable. The result is independent of any anchor choice.
pub fn canonical_solution(pair: CoinPair, d: i64) -> Result<(i64, i64)> {
    if d < 0 {
        return Err(Error::NegativeAmount(d));
    }
    let (a, b) = (pair.a, pair.b);
    let inv = arith::mod_inverse(a, b).expect("a is invertible modulo b for a coprime pair");
    // (d mod b) · inv stays below b², well inside i128.
    let x = ((d % b) as i128 * inv as i128).rem_euclid(b as i128);
    let y = (d as i128 - a as i128 * x) / b as i128;
    // x < b and |y| <= max(d/b, a·(b-1)/b) < 2^63, so both conversions fit.
    let x = i64::try_from(x).map_err(|_| Error::Overflow)?;
    let y = i64::try_from(y).map_err(|_| Error::Overflow)?;
    Ok((x, y))
}

/// All solutions with `x >= 0` and `y >= 0`, ascending in `x`; empty when
/// `d` is not representable.
pub fn nonneg_solutions(pair: CoinPair, d: i64) -> Result<Vec<Representation>> {
    let (x, y) = canonical_solution(pair, d)?;
    if y < 0 {
        return Ok(Vec::new());
    }
    let t_max = y / pair.a;
    let mut out = Vec::with_capacity(usize::try_from(t_max + 1).unwrap_or(0));
    for t in 0..=t_max {
        // a·(x + t·b) <= a·x + b·y = d, so coordinates stay in range.
        out.push(Representation { x: x + t * pair.b, y: y - t * pair.a });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(a: i64, b: i64) -> CoinPair {
        CoinPair::new(a, b).unwrap()
    }

    #[test]
    fn coin_pair_validation() {
        assert!(CoinPair::new(3, 7).is_ok());
        assert!(CoinPair::new(1, 1).is_ok());
        assert_eq!(CoinPair::new(0, 7), Err(Error::NonPositiveDenominator(0)));
        assert_eq!(CoinPair::new(3, -7), Err(Error::NonPositiveDenominator(-7)));
        assert_eq!(CoinPair::new(6, 9), Err(Error::NotCoprime { a: 6, b: 9, gcd: 3 }));
    }

    #[test]
    fn solve_any_anchors() {
        let f = solve_any(pair(3, 7), 1).unwrap();
        assert_eq!(f.anchor(), (-2, 1));
        let f = solve_any(pair(5, 8), 0).unwrap();
        assert_eq!(f.anchor(), (0, 0));
        let f = solve_any(pair(5, 8), 2).unwrap();
        assert_eq!(f.anchor(), (-6, 4));
        assert_eq!(5 * -6 + 8 * 4, 2);
    }

    #[test]
    fn solve_any_rejects_negative() {
        assert_eq!(solve_any(pair(3, 7), -1), Err(Error::NegativeAmount(-1)));
    }

    #[test]
    fn family_members() {
        let f = solve_any(pair(3, 7), 1).unwrap();
        assert_eq!(f.member(-1).unwrap(), (5, -2));
        assert_eq!(f.member(0).unwrap(), f.anchor());
        let f = solve_any(pair(5, 8), 2).unwrap();
        // the k = -1 member is (2, -1), and indeed 5·2 + 8·(-1) = 2
        assert_eq!(f.member(-1).unwrap(), (2, -1));
    }

    #[test]
    fn family_member_overflow_is_reported() {
        let f = solve_any(pair(3, 7), 0).unwrap();
        assert_eq!(f.member(i64::MAX), Err(Error::Overflow));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_solution(pair(5, 8), 27).unwrap(), (7, -1));
        assert_eq!(canonical_solution(pair(3, 7), 10).unwrap(), (1, 1));
        assert_eq!(canonical_solution(pair(3, 7), 0).unwrap(), (0, 0));
        assert_eq!(canonical_solution(pair(5, 8), 0).unwrap(), (0, 0));
    }

    #[test]
    fn canonical_degenerate_b_one() {
        assert_eq!(canonical_solution(pair(4, 1), 9).unwrap(), (0, 9));
        assert_eq!(canonical_solution(pair(1, 1), 5).unwrap(), (0, 5));
    }

    #[test]
    fn nonneg_examples() {
        let reps: Vec<_> = nonneg_solutions(pair(3, 7), 21)
            .unwrap()
            .iter()
            .map(Representation::xy)
            .collect();
        assert_eq!(reps, vec![(0, 3), (7, 0)]);
        assert!(nonneg_solutions(pair(5, 8), 27).unwrap().is_empty());
        let reps: Vec<_> = nonneg_solutions(pair(5, 8), 40)
            .unwrap()
            .iter()
            .map(Representation::xy)
            .collect();
        assert_eq!(reps, vec![(0, 5), (8, 0)]);
    }

    /// Brute-force reference used only inside this test module.
    fn brute_nonneg(a: i64, b: i64, d: i64) -> Vec<(i64, i64)> {
        (0..=d / a)
            .filter(|x| (d - a * x) % b == 0 && (d - a * x) / b >= 0)
            .map(|x| (x, (d - a * x) / b))
            .collect()
    }

    fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
        (1i64..=30, 1i64..=30).prop_filter("coprime", |&(a, b)| arith::gcd(a, b) == 1)
    }

    proptest! {
        #[test]
        fn family_covers_every_solution((a, b) in coprime_pair(), d in 0i64..500) {
            let pair = pair(a, b);
            let family = solve_any(pair, d).unwrap();
            let (x0, _) = family.anchor();
            for (x, y) in brute_nonneg(a, b, d) {
                // the family step in x is b, so k is forced
                let k = (x0 - x) / b;
                prop_assert_eq!(family.member(k).unwrap(), (x, y));
            }
        }

        #[test]
        fn family_members_satisfy_equation((a, b) in coprime_pair(), d in 0i64..500, k in -50i64..50) {
            let pair = pair(a, b);
            let (x, y) = solve_any(pair, d).unwrap().member(k).unwrap();
            prop_assert_eq!(a * x + b * y, d);
        }

        #[test]
        fn canonical_is_reduced_anchor((a, b) in coprime_pair(), d in 0i64..500) {
            let pair = pair(a, b);
            let (x, y) = canonical_solution(pair, d).unwrap();
            prop_assert!((0..b).contains(&x));
            prop_assert_eq!(a * x + b * y, d);
            // reducing the scaled Bézout anchor must land on the same member
            let family = solve_any(pair, d).unwrap();
            let (x0, _) = family.anchor();
            let k = arith::div_floor(x0 - x, b);
            prop_assert_eq!(family.member(k).unwrap(), (x, y));
        }

        #[test]
        fn nonneg_matches_brute_force((a, b) in coprime_pair(), d in 0i64..500) {
            let pair = pair(a, b);
            let fast: Vec<_> = nonneg_solutions(pair, d).unwrap().iter().map(Representation::xy).collect();
            prop_assert_eq!(fast, brute_nonneg(a, b, d));
        }
    }
}
