//! Sparse multivariate polynomials over `Rational`.
//!
//! Variables come in two families: the time variables `t1, t2, ...` that
//! Schur functions are written in, and the point variables `x1, x2, ...`
//! produced by the `[x]` substitution.
//!
//! Monomials are ordered graded-lexicographically: total degree first, then
//! exponents compared from the most significant variable down, where larger
//! indices are more significant and the `x` family outranks the `t` family.
//! The term map is kept in that order, so the leading term is the last entry
//! and printing walks the map in reverse.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::error::PolyError;
use crate::rational::{int, is_one, Rational};

/// A polynomial variable. Indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T(u32),
    X(u32),
}

impl Var {
    pub fn index(self) -> u32 {
        match self {
            Var::T(i) | Var::X(i) => i,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T(i) => write!(f, "t{i}"),
            Var::X(i) => write!(f, "x{i}"),
        }
    }
}

/// Power product. Stored as `(var, exponent)` pairs sorted by variable with
/// no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged
    /// and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// `Σ i·α_i` over the `t` variables. Fails on any `x` variable.
    pub fn weighted_degree(&self) -> Result<u32, PolyError> {
        let mut w = 0;
        for &(v, e) in &self.0 {
            match v {
                Var::T(i) => w += i * e,
                Var::X(_) => return Err(PolyError::NotTimeVariable(v)),
            }
        }
        Ok(w)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Drops `v` from the monomial, returning its former exponent.
    fn split_off(&self, v: Var) -> (u32, Monomial) {
        let mut rest = self.0.clone();
        match rest.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => {
                let e = rest.remove(i).1;
                (e, Monomial(rest))
            }
            Err(_) => (0, Monomial(rest)),
        }
    }

    fn with_exponent(&self, v: Var, e: u32) -> Monomial {
        let mut out = self.0.clone();
        match out.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) if e == 0 => {
                out.remove(i);
            }
            Ok(i) => out[i].1 = e,
            Err(_) if e == 0 => {}
            Err(i) => out.insert(i, (v, e)),
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.0.iter().rev();
        let mut b = other.0.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        return va.cmp(&vb);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, &(v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial: nonzero coefficients keyed by monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v))
    }

    pub fn t(i: u32) -> Self {
        Polynomial::var(Var::T(i))
    }

    pub fn x(i: u32) -> Self {
        Polynomial::var(Var::X(i))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Largest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Terms of total degree at most `d`.
    pub fn truncate_degree(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, v: Var, e: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (k, rest) = m.split_off(v);
            if k == e {
                out.terms.insert(rest, c.clone());
            }
        }
        out
    }

    /// Every monomial uses only `t` variables and has weighted degree `w`.
    pub fn is_weight_homogeneous(&self, w: u32) -> bool {
        self.terms
            .keys()
            .all(|m| matches!(m.weighted_degree(), Ok(d) if d == w))
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Partial derivative in `v`.
    pub fn derivative(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                out.add_term(m.with_exponent(v, e - 1), c * int(i64::from(e)));
            }
        }
        out
    }

    /// Substitutes the polynomials in `map` for their variables; variables
    /// not in the map are kept. Evaluates by nested Horner schemes in the
    /// substituted variables, highest variable outermost.
    pub fn substitute(&self, map: &BTreeMap<Var, Polynomial>) -> Polynomial {
        let terms: Vec<(Monomial, Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        horner(terms, map)
    }

    /// Division with remainder by a single divisor under the monomial order.
    /// Returns `(quotient, remainder)` with `self = q·d + r` and no term of
    /// `r` divisible by the leading monomial of `d`.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let (lm, lc) = match d.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let mut p = self.clone();
        let mut q = Polynomial::zero();
        let mut r = Polynomial::zero();
        while let Some((m, c)) = p.terms.pop_last() {
            match m.div(&lm) {
                Some(qm) => {
                    let qc = &c / &lc;
                    // p -= qc*qm*d, skipping the leading term that just cancelled
                    for (dm, dc) in d.terms.iter().rev().skip(1) {
                        p.add_term(dm.mul(&qm), -(&qc * dc));
                    }
                    q.add_term(qm, qc);
                }
                None => {
                    r.terms.insert(m, c);
                }
            }
        }
        Ok((q, r))
    }

    /// Exact quotient; errors when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::InexactDivision)
        }
    }

    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

fn horner(terms: Vec<(Monomial, Rational)>, map: &BTreeMap<Var, Polynomial>) -> Polynomial {
    let outer = terms
        .iter()
        .flat_map(|(m, _)| m.0.iter().map(|&(v, _)| v))
        .filter(|v| map.contains_key(v))
        .max();
    let Some(v) = outer else {
        return Polynomial::from_terms(terms);
    };
    let mut groups: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in terms {
        let (e, rest) = m.split_off(v);
        groups.entry(e).or_default().push((rest, c));
    }
    let value = &map[&v];
    let top = *groups.keys().next_back().unwrap_or(&0);
    let mut acc = Polynomial::zero();
    for e in (0..=top).rev() {
        if !acc.is_zero() {
            acc = &acc * value;
        }
        if let Some(group) = groups.remove(&e) {
            acc += &horner(group, map);
        }
    }
    acc
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if n == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if is_one(&mag) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.is_empty() {
            return Polynomial::zero();
        }
        if small.len() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return large.mul_monomial(m, c);
        }
        let mut out = Polynomial::zero();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Exact ring operation selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
}

/// Convenience dispatcher over the ring operations.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: PolyOp) -> Polynomial {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Mul => a * b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use alloc::string::ToString;

    fn t(i: u32) -> Polynomial {
        Polynomial::t(i)
    }

    #[test]
    fn additive_cancellation() {
        let p = &(&t(1) + &t(2)) + &(-t(2));
        assert_eq!(p, t(1));
    }

    #[test]
    fn square_and_absorbing_zero() {
        assert_eq!(&t(1) * &t(1), Polynomial::term(int(1), Monomial::from_pairs([(Var::T(1), 2)])));
        let p = &t(1) + &t(3).scale(&frac(2, 3));
        assert!((&Polynomial::zero() * &p).is_zero());
        assert!(poly_arith(&Polynomial::zero(), &p, PolyOp::Mul).is_zero());
        assert_eq!(poly_arith(&p, &Polynomial::zero(), PolyOp::Add), p);
    }

    #[test]
    fn weighted_degree_examples() {
        let m = Monomial::from_pairs([(Var::T(1), 3)]);
        assert_eq!(m.weighted_degree(), Ok(3));
        let m = Monomial::from_pairs([(Var::T(1), 1), (Var::T(2), 1), (Var::T(3), 1)]);
        assert_eq!(m.weighted_degree(), Ok(6));
        assert_eq!(Monomial::one().weighted_degree(), Ok(0));
        let m = Monomial::from_pairs([(Var::T(1), 1), (Var::X(1), 1)]);
        assert_eq!(m.weighted_degree(), Err(PolyError::NotTimeVariable(Var::X(1))));
    }

    #[test]
    fn rendering_order() {
        let p = &t(1).pow(3).scale(&frac(1, 3)) - &t(3);
        assert_eq!(p.to_string(), "1/3*t1^3 - t3");
        let x1 = Polynomial::x(1);
        let x2 = Polynomial::x(2);
        let q = &(&x1 * &x2.pow(2)) - &(&x1.pow(2) * &x2);
        assert_eq!(q.to_string(), "x1*x2^2 - x1^2*x2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!((&Polynomial::constant(frac(-5, 2)) + &x1).to_string(), "x1 - 5/2");
    }

    #[test]
    fn exact_division() {
        let x1 = Polynomial::x(1);
        let x2 = Polynomial::x(2);
        let a = &(&x1 - &x2) * &(&(&x1 * &x1) + &x2.scale(&int(3)));
        assert_eq!(a.div_exact(&(&x1 - &x2)).unwrap(), &(&x1 * &x1) + &x2.scale(&int(3)));
        assert_eq!(
            (&x1 + &Polynomial::one()).div_exact(&x2),
            Err(PolyError::InexactDivision)
        );
        assert_eq!(x1.div_rem(&Polynomial::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn horner_substitution() {
        // t1^2 + t1*t2 at t1 = x1 + 1, t2 = 2
        let p = &t(1).pow(2) + &(&t(1) * &t(2));
        let mut map = BTreeMap::new();
        map.insert(Var::T(1), &Polynomial::x(1) + &Polynomial::one());
        map.insert(Var::T(2), Polynomial::constant(int(2)));
        let got = p.substitute(&map);
        let x = &Polynomial::x(1) + &Polynomial::one();
        assert_eq!(got, &x.pow(2) + &x.scale(&int(2)));
    }

    #[test]
    fn derivative_and_coefficients() {
        let p = &t(1).pow(3).scale(&frac(1, 3)) - &t(3);
        assert_eq!(p.derivative(Var::T(1)), t(1).pow(2));
        assert_eq!(p.derivative(Var::T(3)), Polynomial::constant(int(-1)));
        assert!(p.derivative(Var::T(2)).is_zero());
        assert_eq!(p.coefficient_in(Var::T(1), 3), Polynomial::constant(frac(1, 3)));
        assert!(p.is_weight_homogeneous(3));
    }
}
