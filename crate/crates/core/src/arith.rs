//! Exact integer primitives: gcd, extended Euclid with a canonical Bézout
//! certificate, modular inverse, and overflow-checked helpers.

use crate::error::{Error, Result};

/// Outcome of the extended Euclidean algorithm for a pair `(a, b)`:
/// `a·x_prime + b·y_prime = g` with `g = gcd(a, b) > 0`.
///
/// Bézout coefficients are not unique; the whole family is
/// `x_prime + k·(b/g)`. This certificate is pinned to the canonical member:
/// `x_prime` has minimal absolute value, with a tie broken toward the
/// non-negative representative. That makes certificates byte-reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutCertificate {
    /// First input.
    pub a: i64,
    /// Second input.
    pub b: i64,
    /// `gcd(a, b)`, always positive.
    pub g: i64,
    /// Canonical coefficient of `a`.
    pub x_prime: i64,
    /// Matching coefficient of `b`.
    pub y_prime: i64,
}

impl BezoutCertificate {
    /// Checks `a·x_prime + b·y_prime = g` exactly.
    pub fn holds(&self) -> bool {
        let lhs = self.a as i128 * self.x_prime as i128 + self.b as i128 * self.y_prime as i128;
        lhs == self.g as i128 && self.g > 0
    }
}

/// Non-negative greatest common divisor. `gcd(0, 0)` is 0 by convention.
pub fn gcd(u: i64, v: i64) -> i64 {
    let mut a = u.unsigned_abs();
    let mut b = v.unsigned_abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    i64::try_from(a).expect("gcd magnitude exceeds i64::MAX")
}

/// Extended Euclidean algorithm with the canonical certificate described on
/// [`BezoutCertificate`].
///
/// Fails with [`Error::BothZero`] for `(0, 0)`; every other input pair has a
/// certificate, and all intermediates fit comfortably in 128 bits.
pub fn extended_gcd(a: i64, b: i64) -> Result<BezoutCertificate> {
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1_i128, 0_i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    let (mut g, mut x) = (old_r, old_s);
    if g < 0 {
        g = -g;
        x = -x;
    }
    if b != 0 {
        // Reduce x into the canonical residue: minimal |x| within the family
        // x + k·(b/g), ties toward the non-negative member.
        let step = (b as i128 / g).abs();
        let x0 = x.rem_euclid(step);
        x = if 2 * x0 <= step { x0 } else { x0 - step };
    }
    let y = if b == 0 { 0 } else { (g - a as i128 * x) / b as i128 };
    let cert = BezoutCertificate {
        a,
        b,
        g: i64::try_from(g).map_err(|_| Error::Overflow)?,
        x_prime: i64::try_from(x).map_err(|_| Error::Overflow)?,
        y_prime: i64::try_from(y).map_err(|_| Error::Overflow)?,
    };
    debug_assert!(cert.holds());
    Ok(cert)
}

/// The unique `t` in `[0, m)` with `a·t ≡ 1 (mod m)`. Returns 0 for `m = 1`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::NonPositiveModulus(m));
    }
    if m == 1 {
        return Ok(0);
    }
    let cert = extended_gcd(a, m)?;
    if cert.g != 1 {
        return Err(Error::NotInvertible { value: a, modulus: m });
    }
    Ok((cert.x_prime as i128).rem_euclid(m as i128) as i64)
}

/// `a + b`, reporting overflow instead of wrapping.
pub fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// `a - b`, reporting overflow instead of wrapping.
pub fn checked_sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// `a * b`, reporting overflow instead of wrapping.
pub fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Quotient rounded toward negative infinity.
pub fn div_floor(a: i64, b: i64) -> i64 {
    debug_assert!(b != 0);
    let (q, r) = (a / b, a % b);
    if r != 0 && (r < 0) != (b < 0) {
        q - 1
    } else {
        q
    }
}

/// Quotient rounded toward positive infinity.
pub fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b != 0);
    let (q, r) = (a / b, a % b);
    if r != 0 && (r < 0) == (b < 0) {
        q + 1
    } else {
        q
    }
}
