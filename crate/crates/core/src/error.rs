use std::fmt;

/// Error type shared by every operation in this crate.
///
/// All arithmetic is overflow-checked: a computation that would leave the
/// `i64` range reports [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// `extended_gcd(0, 0)` has no Bézout certificate.
    BothZero,
    /// A modulus that is required to be positive was not.
    NonPositiveModulus(i64),
    /// No inverse exists because the value and the modulus share a factor.
    NotInvertible { value: i64, modulus: i64 },
    /// An intermediate or final value left the `i64` range.
    Overflow,
    /// Coin denominations must be at least 1.
    NonPositiveDenominator(i64),
    /// Coin denominations must be coprime.
    NotCoprime { a: i64, b: i64, gcd: i64 },
    /// Amounts are non-negative.
    NegativeAmount(i64),
    /// The operation needs both denominations to be at least 2.
    DegenerateInput { a: i64, b: i64 },
    /// Fewer than 3 vertices, a repeated consecutive vertex, or zero area.
    DegeneratePolygon(&'static str),
    /// Two polygon edges cross.
    SelfIntersecting,
    /// A line in the uniqueness band held zero or several interior points.
    /// This cannot happen for a valid coprime pair; it is surfaced loudly
    /// rather than silently repaired.
    BijectionViolation { d: i64, count: usize },
    /// Neither unit expression kept the representation non-negative.
    /// Like `BijectionViolation`, this indicates a broken invariant.
    ChainBroken { d: i64 },
    /// `d_max` for a chain must lie within the documented range.
    ChainBoundOutOfRange { d_max: i64, min: i64, max: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BothZero => write!(f, "extended gcd of (0, 0) is undefined"),
            Error::NonPositiveModulus(m) => write!(f, "modulus must be positive, got {m}"),
            Error::NotInvertible { value, modulus } => {
                write!(f, "{value} has no inverse modulo {modulus}")
            }
            Error::Overflow => write!(f, "arithmetic overflow: value exceeds the i64 range"),
            Error::NonPositiveDenominator(v) => {
                write!(f, "denominations must be positive, got {v}")
            }
            Error::NotCoprime { a, b, gcd } => {
                write!(f, "denominations {a} and {b} are not coprime (gcd {gcd})")
            }
            Error::NegativeAmount(d) => write!(f, "amount must be non-negative, got {d}"),
            Error::DegenerateInput { a, b } => {
                write!(f, "operation requires both denominations >= 2, got ({a}, {b})")
            }
            Error::DegeneratePolygon(reason) => write!(f, "degenerate polygon: {reason}"),
            Error::SelfIntersecting => write!(f, "polygon edges intersect"),
            Error::BijectionViolation { d, count } => write!(
                f,
                "invariant violation: line at d={d} holds {count} interior points, expected 1"
            ),
            Error::ChainBroken { d } => write!(
                f,
                "invariant violation: no unit expression keeps the step at d={d} non-negative"
            ),
            Error::ChainBoundOutOfRange { d_max, min, max } => {
                write!(f, "chain bound {d_max} outside supported range [{min}, {max}]")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
