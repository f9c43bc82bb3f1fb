//! Exact rational scalars.
//!
//! Every coefficient in the kernel is an arbitrary-precision rational; nothing
//! is ever rounded. `Scalar` is kept behind helpers so the rest of the crate
//! never touches the underlying representation directly.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

/// The integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `p/q` as a scalar. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "ratio: zero denominator");
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient with the extended convention used throughout the
/// kernel: `binom(-1, -1) = 1`, `binom(i, j) = 0` when `j < 0` or `i < j`,
/// and the ordinary value for `0 <= j <= i`. Arguments below `i = -1` are
/// outside every formula in the crate and indicate a bug, so they panic.
pub fn binom(i: i64, j: i64) -> Scalar {
    assert!(i >= -1, "binom: first argument must be >= -1, got {i}");
    if i == -1 {
        return if j == -1 { Scalar::one() } else { Scalar::zero() };
    }
    if j < 0 || j > i {
        return Scalar::zero();
    }
    let j = j.min(i - j);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j {
        num *= i - t;
        den *= t + 1;
    }
    Scalar::new(num, den)
}

/// `2^k` for any integer `k`, including negative exponents.
pub fn pow2(k: i64) -> Scalar {
    let mag = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        Scalar::from_integer(mag)
    } else {
        Scalar::new(BigInt::one(), mag)
    }
}

/// Render a scalar as `p` (integer) or `p/q` (lowest terms, `q > 1`).
pub fn render(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty scalar literal")]
    Empty,
    #[error("invalid scalar literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parse `p` or `p/q` with optional leading sign on `p`.
pub fn parse(text: &str) -> Result<Scalar, ScalarParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| ScalarParseError::Invalid(text.to_string()))?;
    let denom: BigInt = match den_text {
        Some(d) => d
            .parse()
            .map_err(|_| ScalarParseError::Invalid(text.to_string()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(numer, denom))
}

/// True if the scalar is a (possibly negative) integer.
pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

/// Absolute value.
pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}
