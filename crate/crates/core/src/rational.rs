//! Exact rational coefficients.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. Its `Display` already renders
//! `p/q` (and `p` when the denominator is one), which is the canonical text
//! form used throughout the crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational as Rational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn factorial_q(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: u64) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Integer power with negative exponents allowed. Panics on `0^(-k)`.
pub fn powi(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Parses `p`, `-p`, `p/q` (optionally with a leading `+`).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let text = text.strip_prefix('+').unwrap_or(text);
    if text.is_empty() {
        return None;
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub(crate) fn is_one(q: &Rational) -> bool {
    q.is_one()
}
