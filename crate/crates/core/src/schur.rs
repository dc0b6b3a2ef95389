//! Schur functions in the time variables, brackets, derivatives and the
//! `[x]` specialization.
//!
//! There are two routes from `∂^α s_λ` to a polynomial in the points:
//!
//! * the direct one: build `s_λ(t)`, differentiate with [`derive`], then
//!   substitute with [`abel_subs`];
//! * the bracket calculus: write `∂^α s_λ` as a combination of Schur
//!   functions ([`SchurSum`]) using `∂_i p_n = p_{n-i}` row by row, then
//!   evaluate each Schur function on the points as a Jacobi–Trudi
//!   determinant of specialized `p_n` ([`Specialization`]).
//!
//! The second is much cheaper and is what the verification suites use; the
//! first is kept as an oracle and the two are compared in tests.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::det::determinant;
use crate::error::SchurError;
use crate::partition::Partition;
use crate::poly::{Monomial, Polynomial, Var};
use crate::rational::{int, parse_rational, Rational};

/// `p_0, ..., p_n` from `m·p_m = Σ_{i=1}^m i·t_i·p_{m-i}`.
pub fn p_list(n: usize) -> Vec<Polynomial> {
    let mut p = Vec::with_capacity(n + 1);
    p.push(Polynomial::one());
    for m in 1..=n {
        let mut acc = Polynomial::zero();
        for i in 1..=m {
            let ti = Polynomial::term(int(i as i64), Monomial::var(Var::T(i as u32)));
            acc += &(&ti * &p[m - i]);
        }
        p.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
    }
    p
}

fn p_at(p: &[Polynomial], n: i64) -> Polynomial {
    if n < 0 {
        Polynomial::zero()
    } else {
        p[n as usize].clone()
    }
}

/// The bracket `[i_1, ..., i_l]`: the determinant whose `j`-th row is
/// `(p_{i_j-l+1}, ..., p_{i_j})`.
pub fn bracket(indices: &[i64]) -> Polynomial {
    if indices.iter().any(|&i| i < 0) {
        return Polynomial::zero();
    }
    let l = indices.len() as i64;
    let top = indices.iter().copied().max().unwrap_or(0) as usize;
    let p = p_list(top);
    let rows: Vec<Vec<Polynomial>> = indices
        .iter()
        .map(|&i| (1..=l).map(|m| p_at(&p, i - l + m)).collect())
        .collect();
    determinant(&rows)
}

/// `s_λ(t) = det(p_{λ_i - i + j})`.
pub fn schur_t(lambda: &Partition) -> Polynomial {
    let l = lambda.len();
    let p = p_list(lambda.weight() as usize);
    let rows: Vec<Vec<Polynomial>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| p_at(&p, i64::from(lambda.part(i)) - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&rows)
}

/// The bialternant `det(x_j^{λ_i + k - i}) / ∏_{i<j} (x_i - x_j)` in
/// `x_1, ..., x_k`.
pub fn schur_x(lambda: &Partition, k: usize) -> Result<Polynomial, SchurError> {
    if k < lambda.len() {
        return Err(SchurError::TooFewVariables {
            vars: k,
            parts: lambda.len(),
        });
    }
    let w = lambda.w_sequence(k)?;
    let xs: Vec<Polynomial> = (1..=k as u32).map(Polynomial::x).collect();
    let rows: Vec<Vec<Polynomial>> = w
        .iter()
        .map(|&e| xs.iter().map(|x| x.pow(e)).collect())
        .collect();
    let alternant = determinant(&rows);
    let mut vandermonde = Polynomial::one();
    for i in 0..k {
        for j in i + 1..k {
            vandermonde = &vandermonde * &(&xs[i] - &xs[j]);
        }
    }
    alternant
        .div_exact(&vandermonde)
        .map_err(|_| SchurError::InexactVandermonde)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointValue {
    /// The variable `x_i`.
    Symbol(u32),
    Number(Rational),
}

/// One summand `±[v]` of a specialization point `Σ ±[v_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPoint {
    pub sign: Sign,
    pub value: PointValue,
}

impl SignedPoint {
    pub fn plus(i: u32) -> Self {
        SignedPoint {
            sign: Sign::Plus,
            value: PointValue::Symbol(i),
        }
    }

    pub fn minus(i: u32) -> Self {
        SignedPoint {
            sign: Sign::Minus,
            value: PointValue::Symbol(i),
        }
    }

    pub fn number(sign: Sign, q: Rational) -> Self {
        SignedPoint {
            sign,
            value: PointValue::Number(q),
        }
    }

    fn base(&self) -> Polynomial {
        match &self.value {
            PointValue::Symbol(i) => Polynomial::x(*i),
            PointValue::Number(q) => Polynomial::constant(q.clone()),
        }
    }

    fn signed(&self, p: Polynomial) -> Polynomial {
        match self.sign {
            Sign::Plus => p,
            Sign::Minus => -p,
        }
    }
}

impl fmt::Display for SignedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.sign {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })?;
        match &self.value {
            PointValue::Symbol(i) => write!(f, "x{i}"),
            PointValue::Number(q) => write!(f, "{q}"),
        }
    }
}

/// `[x_1] + ... + [x_k]`.
pub fn positive_points(k: usize) -> Vec<SignedPoint> {
    (1..=k as u32).map(SignedPoint::plus).collect()
}

/// `[x_1] - [x_2]`.
pub fn difference_points() -> Vec<SignedPoint> {
    alloc::vec![SignedPoint::plus(1), SignedPoint::minus(2)]
}

/// Parses a comma-separated list such as `+x1,-x2,1/2`. A missing sign means
/// `+`; an empty string is the empty list.
pub fn parse_points(text: &str) -> Result<Vec<SignedPoint>, SchurError> {
    let mut out = Vec::new();
    if text.trim().is_empty() {
        return Ok(out);
    }
    let mut offset = 0;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let item = piece.trim();
        let err = |message: String| SchurError::Parse {
            position: offset + lead,
            message,
        };
        let (sign, body) = match item.as_bytes().first() {
            Some(b'-') => (Sign::Minus, &item[1..]),
            Some(b'+') => (Sign::Plus, &item[1..]),
            _ => (Sign::Plus, item),
        };
        let value = if let Some(idx) = body.strip_prefix('x') {
            match idx.parse::<u32>() {
                Ok(i) if i >= 1 => PointValue::Symbol(i),
                _ => return Err(err(alloc::format!("bad variable index in {item:?}"))),
            }
        } else {
            match parse_rational(body) {
                Some(q) => PointValue::Number(q),
                None => return Err(err(alloc::format!("expected xN or a rational, found {item:?}"))),
            }
        };
        out.push(SignedPoint { sign, value });
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// `Σ_i ε_i v_i^j`.
fn power_sum(points: &[SignedPoint], j: u32) -> Polynomial {
    let mut acc = Polynomial::zero();
    for pt in points {
        acc += &pt.signed(pt.base().pow(j));
    }
    acc
}

/// Substitutes `t_j = Σ_i ε_i v_i^j / j` for every time variable.
pub fn abel_subs(p: &Polynomial, points: &[SignedPoint]) -> Polynomial {
    let mut map = BTreeMap::new();
    for v in p.variables() {
        if let Var::T(j) = v {
            let tj = power_sum(points, j).scale(&Rational::new(1.into(), i64::from(j).into()));
            map.insert(v, tj);
        }
    }
    p.substitute(&map)
}

/// A derivation `∂^α = ∂_1^{α_1} ∂_2^{α_2} ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivationIndex {
    alpha: BTreeMap<u32, u32>,
}

impl DerivationIndex {
    pub fn none() -> Self {
        DerivationIndex::default()
    }

    /// `∂_i^e`.
    pub fn power(i: u32, e: u32) -> Self {
        let mut d = DerivationIndex::none();
        d.push(i, e);
        d
    }

    /// One `∂_i` for every listed index, with repetition.
    pub fn from_indices(indices: &[u32]) -> Self {
        let mut d = DerivationIndex::none();
        for &i in indices {
            d.push(i, 1);
        }
        d
    }

    /// The monomial derivation `∂_1^{m_1} ∂_2^{m_2} ...` where `m_i` counts
    /// the parts of `alpha` equal to `i`.
    pub fn from_partition(alpha: &Partition) -> Self {
        DerivationIndex::from_indices(alpha.parts())
    }

    fn push(&mut self, i: u32, e: u32) {
        if e > 0 && i > 0 {
            *self.alpha.entry(i).or_insert(0) += e;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// `wt α = Σ i·α_i`.
    pub fn weight(&self) -> u32 {
        self.alpha.iter().map(|(i, e)| i * e).sum()
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.alpha.iter().map(|(&i, &e)| (i, e))
    }

    /// Indices with repetition, increasing.
    pub fn indices(&self) -> Vec<u32> {
        self.alpha
            .iter()
            .flat_map(|(&i, &e)| core::iter::repeat(i).take(e as usize))
            .collect()
    }
}

impl fmt::Display for DerivationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alpha.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, e)) in self.alpha.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            if *e == 1 {
                write!(f, "{i}")?;
            } else {
                write!(f, "{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for DerivationIndex {
    type Err = SchurError;

    /// Accepts `0` (no derivative) or a list such as `1^3,2`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut d = DerivationIndex::none();
        if text.trim().is_empty() || text.trim() == "0" {
            return Ok(d);
        }
        let mut offset = 0;
        for piece in text.split(',') {
            let item = piece.trim();
            let (i, e) = match item.split_once('^') {
                Some((i, e)) => (i.trim().parse::<u32>(), e.trim().parse::<u32>()),
                None => (item.parse::<u32>(), Ok(1)),
            };
            match (i, e) {
                (Ok(i), Ok(e)) if i >= 1 => d.push(i, e),
                _ => {
                    return Err(SchurError::Parse {
                        position: offset,
                        message: alloc::format!("expected i or i^e with i >= 1, found {item:?}"),
                    })
                }
            }
            offset += piece.len() + 1;
        }
        Ok(d)
    }
}

/// Iterated partial derivative of a polynomial in the time variables.
pub fn derive(p: &Polynomial, alpha: &DerivationIndex) -> Polynomial {
    let mut out = p.clone();
    for (i, e) in alpha.multiplicities() {
        for _ in 0..e {
            out = out.derivative(Var::T(i));
        }
    }
    out
}

/// Rewrites `[i_1, ..., i_l]` as `±s_ν`, or `None` when it vanishes.
/// Sorting the indices decreasingly costs the sign of the permutation; the
/// sorted list is the w-sequence of `ν` with trailing zeros dropped.
pub fn bracket_to_schur(indices: &[i64]) -> Option<(Sign, Partition)> {
    if indices.iter().any(|&i| i < 0) {
        return None;
    }
    let mut sorted = indices.to_vec();
    let mut odd = false;
    // insertion sort, counting swaps
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] < sorted[j] {
            sorted.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let w: Vec<u32> = sorted.iter().map(|&i| i as u32).collect();
    let nu = Partition::from_w_sequence(&w)?;
    Some((if odd { Sign::Minus } else { Sign::Plus }, nu))
}

/// A finite rational combination `Σ c_ν s_ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurSum {
    terms: BTreeMap<Partition, Rational>,
}

impl SchurSum {
    pub fn zero() -> Self {
        SchurSum::default()
    }

    pub fn single(lambda: &Partition) -> Self {
        let mut s = SchurSum::zero();
        s.add(lambda.clone(), Rational::one());
        s
    }

    pub fn add(&mut self, nu: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(nu.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&nu);
        }
    }

    pub fn add_scaled(&mut self, other: &SchurSum, c: &Rational) {
        for (nu, d) in &other.terms {
            self.add(nu.clone(), d * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `∂_i` applied through `∂_i [w̄] = Σ_j [w̄_1, ..., w̄_j - i, ..., w̄_l]`.
    pub fn derive_once(&self, i: u32) -> SchurSum {
        let mut out = SchurSum::zero();
        for (nu, c) in &self.terms {
            let w: Vec<i64> = nu
                .w_sequence(nu.len())
                .expect("own length")
                .into_iter()
                .map(i64::from)
                .collect();
            for j in 0..w.len() {
                let mut shifted = w.clone();
                shifted[j] -= i64::from(i);
                if let Some((sign, mu)) = bracket_to_schur(&shifted) {
                    out.add(mu, if sign == Sign::Plus { c.clone() } else { -c.clone() });
                }
            }
        }
        out
    }

    pub fn derive(&self, alpha: &DerivationIndex) -> SchurSum {
        let mut out = self.clone();
        for i in alpha.indices() {
            if out.is_zero() {
                break;
            }
            out = out.derive_once(i);
        }
        out
    }

    /// Expands into the time variables.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (nu, c) in &self.terms {
            acc += &schur_t(nu).scale(c);
        }
        acc
    }
}

/// Evaluator for Schur functions at a fixed point `Σ ε_i [v_i]`, caching the
/// specialized `p_n` and every Schur value computed.
#[derive(Clone, Debug)]
pub struct Specialization {
    points: Vec<SignedPoint>,
    power_sums: Vec<Polynomial>,
    p: Vec<Polynomial>,
    cache: BTreeMap<Partition, Polynomial>,
    vanish_above: Option<usize>,
}

impl Specialization {
    /// When every point enters with a plus sign, `s_ν` of length greater
    /// than the number of points is zero without computing it.
    pub fn new(points: &[SignedPoint]) -> Self {
        let all_plus = points.iter().all(|p| p.sign == Sign::Plus);
        let mut s = Specialization::exhaustive(points);
        s.vanish_above = all_plus.then_some(points.len());
        s
    }

    /// Always computes the determinant.
    pub fn exhaustive(points: &[SignedPoint]) -> Self {
        Specialization {
            points: points.to_vec(),
            power_sums: alloc::vec![Polynomial::zero()],
            p: alloc::vec![Polynomial::one()],
            cache: BTreeMap::new(),
            vanish_above: None,
        }
    }

    pub fn points(&self) -> &[SignedPoint] {
        &self.points
    }

    /// `p_n` at the point, from `n·p_n = Σ_{i=1}^n P_i p_{n-i}` with the
    /// signed power sums `P_i`.
    pub fn p(&mut self, n: i64) -> Polynomial {
        if n < 0 {
            return Polynomial::zero();
        }
        let n = n as usize;
        while self.p.len() <= n {
            let m = self.p.len();
            while self.power_sums.len() <= m {
                let j = self.power_sums.len() as u32;
                self.power_sums.push(power_sum(&self.points, j));
            }
            let mut acc = Polynomial::zero();
            for i in 1..=m {
                acc += &(&self.power_sums[i] * &self.p[m - i]);
            }
            self.p.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
        }
        self.p[n].clone()
    }

    pub fn schur(&mut self, nu: &Partition) -> Polynomial {
        if let Some(k) = self.vanish_above {
            if nu.len() > k {
                return Polynomial::zero();
            }
        }
        if let Some(v) = self.cache.get(nu) {
            return v.clone();
        }
        let l = nu.len();
        let rows: Vec<Vec<Polynomial>> = (1..=l)
            .map(|i| {
                (1..=l)
                    .map(|j| self.p(i64::from(nu.part(i)) - i as i64 + j as i64))
                    .collect()
            })
            .collect();
        let v = determinant(&rows);
        self.cache.insert(nu.clone(), v.clone());
        v
    }

    pub fn bracket(&mut self, indices: &[i64]) -> Polynomial {
        match bracket_to_schur(indices) {
            None => Polynomial::zero(),
            Some((Sign::Plus, nu)) => self.schur(&nu),
            Some((Sign::Minus, nu)) => -self.schur(&nu),
        }
    }

    pub fn eval(&mut self, sum: &SchurSum) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (nu, c) in sum.terms() {
            let v = self.schur(nu);
            if !v.is_zero() {
                acc += &v.scale(c);
            }
        }
        acc
    }
}

/// `∂^α s_λ` at the point, through the bracket calculus.
pub fn derive_at(lambda: &Partition, alpha: &DerivationIndex, points: &[SignedPoint]) -> Polynomial {
    Specialization::new(points).eval(&SchurSum::single(lambda).derive(alpha))
}

/// `∂^α s_λ` at the point, through the time-variable polynomial.
pub fn derive_at_direct(
    lambda: &Partition,
    alpha: &DerivationIndex,
    points: &[SignedPoint],
) -> Polynomial {
    abel_subs(&derive(&schur_t(lambda), alpha), points)
}

/// Renders a list of points as `+x1,-x2`.
pub fn render_points(points: &[SignedPoint]) -> String {
    if points.is_empty() {
        return "0".to_string();
    }
    points
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use crate::rational::frac;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn t(i: u32) -> Polynomial {
        Polynomial::t(i)
    }

    fn x(i: u32) -> Polynomial {
        Polynomial::x(i)
    }

    fn q(n: i64, d: i64) -> Polynomial {
        Polynomial::constant(frac(n, d))
    }

    #[test]
    fn first_p_polynomials() {
        let ps = p_list(3);
        assert_eq!(ps[0], Polynomial::one());
        assert_eq!(ps[1], t(1));
        assert_eq!(ps[2], &(&q(1, 2) * &t(1).pow(2)) + &t(2));
        let p3 = &(&(&q(1, 6) * &t(1).pow(3)) + &(&t(1) * &t(2))) + &t(3);
        assert_eq!(ps[3], p3);
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(&[1, 0]), Polynomial::one());
        assert_eq!(bracket(&[0, 1]), -Polynomial::one());
        assert_eq!(bracket(&[2, 0]), t(1));
        assert_eq!(bracket(&[2, 2]), Polynomial::zero());
        assert_eq!(bracket(&[3, -1]), Polynomial::zero());
    }

    #[test]
    fn schur_in_t() {
        assert_eq!(schur_t(&Partition::empty()), Polynomial::one());
        assert_eq!(schur_t(&p(&[1])), t(1));
        assert_eq!(schur_t(&p(&[2, 1])).to_string(), "1/3*t1^3 - t3");
    }

    #[test]
    fn schur_in_x() {
        assert_eq!(schur_x(&p(&[1]), 2).unwrap(), &x(1) + &x(2));
        let expected = &(&x(1).pow(2) * &x(2)) + &(&x(1) * &x(2).pow(2));
        assert_eq!(schur_x(&p(&[2, 1]), 2).unwrap(), expected);
        assert_eq!(schur_x(&Partition::empty(), 3).unwrap(), Polynomial::one());
        assert_eq!(
            schur_x(&p(&[2, 1]), 1),
            Err(SchurError::TooFewVariables { vars: 1, parts: 2 })
        );
    }

    #[test]
    fn abel_substitution() {
        let s21 = schur_t(&p(&[2, 1]));
        assert_eq!(abel_subs(&s21, &positive_points(2)), schur_x(&p(&[2, 1]), 2).unwrap());
        assert!(abel_subs(&s21, &positive_points(1)).is_zero());
        let diff = abel_subs(&s21, &difference_points());
        assert_eq!(diff, -(&(&x(1) * &x(2)) * &(&x(1) - &x(2))));
        assert_eq!(diff.to_string(), "x1*x2^2 - x1^2*x2");
    }

    #[test]
    fn derivatives() {
        let d = derive(&schur_t(&p(&[2, 2, 1])), &DerivationIndex::power(1, 1));
        assert_eq!(d, &schur_t(&p(&[2, 1, 1])) + &schur_t(&p(&[2, 2])));
        let s21 = schur_t(&p(&[2, 1]));
        assert_eq!(derive(&s21, &DerivationIndex::power(3, 1)), -Polynomial::one());
        assert!(derive(&s21, &DerivationIndex::power(2, 1)).is_zero());
        let sum = SchurSum::single(&p(&[2, 2, 1])).derive(&DerivationIndex::power(1, 1));
        let mut expected = SchurSum::single(&p(&[2, 1, 1]));
        expected.add(p(&[2, 2]), Rational::one());
        assert_eq!(sum, expected);
    }

    #[test]
    fn derivation_text() {
        let d: DerivationIndex = "1^3,2".parse().unwrap();
        assert_eq!(d.weight(), 5);
        assert_eq!(d.to_string(), "1^3,2");
        assert_eq!(d.indices(), [1, 1, 1, 2]);
        assert!("0".parse::<DerivationIndex>().unwrap().is_empty());
        assert!(matches!("1,x".parse::<DerivationIndex>(), Err(SchurError::Parse { position: 2, .. })));
    }

    #[test]
    fn point_text() {
        let pts = parse_points("+x1, -x2,1/2").unwrap();
        assert_eq!(pts[0], SignedPoint::plus(1));
        assert_eq!(pts[1], SignedPoint::minus(2));
        assert_eq!(pts[2], SignedPoint::number(Sign::Plus, frac(1, 2)));
        assert_eq!(render_points(&pts), "+x1,-x2,+1/2");
        assert!(matches!(parse_points("x1,y"), Err(SchurError::Parse { position: 3, .. })));
        assert!(parse_points("").unwrap().is_empty());
    }

    #[test]
    fn numeric_points() {
        // s_(1)([2] - [1/2]) = 3/2
        let pts = parse_points("2,-1/2").unwrap();
        assert_eq!(abel_subs(&schur_t(&p(&[1])), &pts), q(3, 2));
        assert_eq!(derive_at(&p(&[1]), &DerivationIndex::none(), &pts), q(3, 2));
    }

    #[test]
    fn routes_agree() {
        let alphas = ["0", "1", "2", "1^2", "3", "1,2"];
        let point_sets = [positive_points(1), positive_points(2), difference_points()];
        for lambda in partitions_up_to(5) {
            for a in alphas {
                let alpha: DerivationIndex = a.parse().unwrap();
                for pts in &point_sets {
                    let direct = derive_at_direct(&lambda, &alpha, pts);
                    assert_eq!(derive_at(&lambda, &alpha, pts), direct, "{lambda} {alpha}");
                    let exhaustive = Specialization::exhaustive(pts)
                        .eval(&SchurSum::single(&lambda).derive(&alpha));
                    assert_eq!(exhaustive, direct);
                }
            }
        }
    }

    #[test]
    fn bracket_normal_form() {
        assert_eq!(bracket_to_schur(&[0, 1]), Some((Sign::Minus, Partition::empty())));
        assert_eq!(bracket_to_schur(&[1, 3]), Some((Sign::Minus, p(&[2, 1]))));
        assert_eq!(bracket_to_schur(&[3, 3]), None);
        for idx in [[4i64, 0, 2], [1, 5, 3], [0, 2, 4]] {
            let (sign, nu) = bracket_to_schur(&idx).unwrap();
            let value = if sign == Sign::Plus { schur_t(&nu) } else { -schur_t(&nu) };
            assert_eq!(bracket(&idx), value);
        }
    }
}
