//! Truncated Laurent series in one variable `z`.
//!
//! A series is known modulo `z^precision`. Coefficients are stored densely
//! from `start` (the valuation, once leading zeros are stripped); any
//! coefficient past the stored range but below the precision is zero.
//! Negative valuations are allowed so `x = z^-n` is an ordinary value.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;
use crate::rational::{int, is_one, Rational};

/// Precision of a series that is known exactly (a Laurent polynomial).
pub const EXACT: i64 = i64::MAX / 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    start: i64,
    coeffs: Vec<Rational>,
    precision: i64,
}

fn sat_add(a: i64, b: i64) -> i64 {
    if a >= EXACT || b >= EXACT {
        EXACT
    } else {
        a.saturating_add(b).min(EXACT)
    }
}

impl TruncatedSeries {
    pub fn zero(precision: i64) -> Self {
        TruncatedSeries {
            start: precision,
            coeffs: Vec::new(),
            precision,
        }
    }

    pub fn one(precision: i64) -> Self {
        Self::monomial(Rational::one(), 0, precision)
    }

    /// `c·z^e + O(z^precision)`.
    pub fn monomial(c: Rational, e: i64, precision: i64) -> Self {
        Self::from_coeffs(e, vec![c], precision)
    }

    /// Exactly `c·z^e`.
    pub fn exact_monomial(c: Rational, e: i64) -> Self {
        Self::monomial(c, e, EXACT)
    }

    /// Series whose coefficient of `z^(start+i)` is `coeffs[i]`; entries at
    /// or past the precision are discarded.
    pub fn from_coeffs(start: i64, coeffs: Vec<Rational>, precision: i64) -> Self {
        let mut s = TruncatedSeries {
            start,
            coeffs,
            precision,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let keep = (self.precision - self.start).clamp(0, self.coeffs.len() as i64) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.start = self.precision;
        } else {
            self.coeffs.drain(..lead);
            self.start += lead as i64;
        }
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision >= EXACT
    }

    /// Exponent of the first nonzero coefficient; `None` if the series is
    /// zero to its precision.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.start)
        }
    }

    /// Valuation, or the precision when the series is zero so far.
    fn order(&self) -> i64 {
        self.valuation().unwrap_or(self.precision)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Coefficient of `z^e`; `None` if `e` is at or past the precision.
    pub fn coeff(&self, e: i64) -> Option<Rational> {
        if e >= self.precision {
            return None;
        }
        let i = e - self.start;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[i as usize].clone())
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.start + i as i64, c))
    }

    /// Forgets everything at or past `z^precision` (never raises precision).
    pub fn truncate(&self, precision: i64) -> Self {
        Self::from_coeffs(self.start, self.coeffs.clone(), precision.min(self.precision))
    }

    /// The stored coefficients reinterpreted at another precision. Raising
    /// the precision asserts that the missing coefficients are zero.
    pub fn with_precision(&self, precision: i64) -> Self {
        Self::from_coeffs(self.start, self.coeffs.clone(), precision)
    }

    /// Multiplies by the exact monomial `z^e`.
    pub fn shift(&self, e: i64) -> Self {
        TruncatedSeries {
            start: self.start + e,
            coeffs: self.coeffs.clone(),
            precision: sat_add(self.precision, e),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(
            self.start,
            self.coeffs.iter().map(|a| a * c).collect(),
            self.precision,
        )
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let precision = self.precision.min(other.precision);
        if self.is_zero() && other.is_zero() {
            return Self::zero(precision);
        }
        let lo = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!(),
        };
        let hi = (self.start + self.coeffs.len() as i64)
            .max(other.start + other.coeffs.len() as i64)
            .min(precision);
        let len = (hi - lo).max(0) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (e, c) in self.nonzero_terms() {
            if e < hi {
                coeffs[(e - lo) as usize] += c;
            }
        }
        for (e, c) in other.nonzero_terms() {
            if e < hi {
                if negate {
                    coeffs[(e - lo) as usize] -= c;
                } else {
                    coeffs[(e - lo) as usize] += c;
                }
            }
        }
        Self::from_coeffs(lo, coeffs, precision)
    }

    fn product(&self, other: &Self) -> Self {
        let precision = sat_add(self.order(), other.precision).min(sat_add(other.order(), self.precision));
        if self.is_zero() || other.is_zero() {
            return Self::zero(precision);
        }
        let start = self.start + other.start;
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = (precision - start).clamp(0, full as i64) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(start, coeffs, precision)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::exact_monomial(Rational::one(), 0);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Multiplicative inverse. The result is known to the same relative
    /// precision as the input.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::ZeroLeading)?;
        if self.is_exact() {
            if self.coeffs.len() == 1 {
                return Ok(Self::exact_monomial(self.coeffs[0].recip(), -v));
            }
            return Err(SeriesError::UnboundedPrecision);
        }
        let rel = (self.precision - v) as usize;
        let inv0 = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(rel);
        out.push(inv0.clone());
        for n in 1..rel {
            let mut acc = Rational::zero();
            for i in 1..=n.min(self.coeffs.len() - 1) {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[n - i];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self::from_coeffs(-v, out, -v + rel as i64))
    }

    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Series operation selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    /// Inverts the first operand; the second is ignored.
    Invert,
}

pub fn series_arith(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    op: SeriesOp,
) -> Result<TruncatedSeries, SeriesError> {
    match op {
        SeriesOp::Add => Ok(a + b),
        SeriesOp::Mul => Ok(a * b),
        SeriesOp::Invert => a.invert(),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.combine(rhs, false)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.combine(rhs, true)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.product(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&int(-1))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.nonzero_terms() {
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let mag = c.abs();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !is_one(&mag) {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{e}")?;
                    }
                }
            }
        }
        if !self.is_exact() {
            if !first {
                f.write_str(" + ")?;
            }
            if self.precision == 1 {
                f.write_str("O(z)")?;
            } else {
                write!(f, "O(z^{})", self.precision)?;
            }
        } else if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use alloc::string::ToString;

    fn poly(coeffs: &[i64], precision: i64) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(0, coeffs.iter().map(|&c| int(c)).collect(), precision)
    }

    #[test]
    fn difference_of_squares_keeps_precision() {
        let a = poly(&[1, 1], 8);
        let b = poly(&[1, -1], 8);
        let p = &a * &b;
        assert_eq!(p, poly(&[1, 0, -1], 8));
        assert_eq!(p.precision(), 8);
    }

    #[test]
    fn invert_matches_geometric_series() {
        let inv = poly(&[1, 1], 10).invert().unwrap();
        let expected: Vec<i64> = (0..10).map(|n| if n % 2 == 0 { 1 } else { -1 }).collect();
        assert_eq!(inv, poly(&expected, 10));
    }

    #[test]
    fn laurent_cancellation() {
        let a = TruncatedSeries::exact_monomial(int(1), -3);
        let b = TruncatedSeries::exact_monomial(int(1), 3);
        let p = &a * &b;
        assert_eq!(p, TruncatedSeries::exact_monomial(int(1), 0));
        assert!(p.is_exact());
    }

    #[test]
    fn inversion_errors() {
        assert_eq!(TruncatedSeries::zero(5).invert(), Err(SeriesError::ZeroLeading));
        let exact = TruncatedSeries::from_coeffs(0, alloc::vec![int(1), int(1)], EXACT);
        assert_eq!(exact.invert(), Err(SeriesError::UnboundedPrecision));
    }

    #[test]
    fn precision_of_products_and_sums() {
        // z^-2 (1 + O(z^3)) has absolute precision 1
        let a = TruncatedSeries::from_coeffs(-2, alloc::vec![int(1)], 1);
        let b = TruncatedSeries::from_coeffs(0, alloc::vec![int(2), int(1)], 4);
        assert_eq!((&a * &b).precision(), 1);
        assert_eq!((&a + &b).precision(), 1);
        let x = TruncatedSeries::exact_monomial(int(1), -2);
        assert_eq!((&x * &b).precision(), 2);
    }

    #[test]
    fn rendering() {
        let s = TruncatedSeries::from_coeffs(
            -3,
            alloc::vec![int(1), int(0), int(0), int(0), frac(1, 2)],
            5,
        );
        assert_eq!(s.to_string(), "z^-3 + 1/2*z + O(z^5)");
        assert_eq!(TruncatedSeries::zero(4).to_string(), "O(z^4)");
        assert_eq!(poly(&[0, -2], EXACT).to_string(), "-2*z");
    }
}
