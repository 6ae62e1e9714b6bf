//! Exact solver for the two-denominator coin problem.
//!
//! Given coprime denominations `a` and `b`, this crate decides which amounts
//! `d` can be paid as `a·x + b·y` with non-negative integers `x, y`, and
//! answers the questions around that decision:
//!
//! - membership verdicts with a witness or a non-representability certificate
//!   ([`frobenius::is_representable`]),
//! - the largest non-payable amount `ab - a - b` ([`frobenius::frobenius_number`]),
//! - the full gap set and the number of distinct representations of an amount
//!   ([`frobenius::gaps`], [`frobenius::count_representations`]),
//! - the solution theory of `a·x + b·y = d` over all integers
//!   ([`diophantine`]),
//! - the lattice-geometry view: lines `a·x + b·y = d`, their first-quadrant
//!   lattice points, and an exact Pick's-theorem auditor ([`geometry`]),
//! - an explicit inductive construction that reaches every amount above the
//!   largest gap by repeatedly adding a unit expression ([`inductive`]).
//!
//! Everything is exact integer arithmetic; overflow is reported, never
//! wrapped. The [`oracle`] module carries independent brute-force
//! implementations used by the test suite to cross-check the fast paths.
//!
//! ```
//! use twocoin::{CoinPair, frobenius};
//!
//! let pair = CoinPair::new(3, 7)?;
//! assert_eq!(frobenius::frobenius_number(pair)?, Some(11));
//!
//! let verdict = frobenius::is_representable(pair, 11)?;
//! assert!(!verdict.is_representable());
//!
//! let verdict = frobenius::is_representable(pair, 17)?;
//! assert_eq!(verdict.witness().map(|w| w.xy()), Some((1, 2)));
//! # Ok::<(), twocoin::Error>(())
//! ```

pub mod arith;
pub mod diophantine;
mod error;
pub mod frobenius;
pub mod geometry;
pub mod inductive;
pub mod oracle;

pub use diophantine::{CoinPair, Representation, SolutionFamily};
pub use error::{Error, Result};
pub use frobenius::MembershipVerdict;
