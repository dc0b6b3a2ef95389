//! Plane curves `y^n = x^s + Σ λ_{ij} x^i y^j` with `ni + sj < ns`, their
//! expansion at the point at infinity, and the holomorphic differentials.
//!
//! The local coordinate is fixed by `x = z^{-n}`. Writing `y = z^{-s} w`
//! turns the curve equation into
//!
//! `w^n - 1 - Σ λ_{ij} z^{ns - ni - sj} w^j = 0`,
//!
//! which has a unique root with `w(0) = 1`, found by Newton iteration.
//! Nonsingularity of the affine curve is not checked; the expansion at
//! infinity does not need it.
//!
//! Only the valuations and leading coefficients of the expansions are
//! independent of higher-order changes of `z`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CurveError, GapError};
use crate::rational::{int, Rational};
use crate::semigroup::GapSequence;
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveModel {
    n: u32,
    s: u32,
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl CurveModel {
    /// The curve `y^n = x^s`.
    pub fn new(n: u32, s: u32) -> Result<Self, CurveError> {
        if n < 2 || s < 2 || n.gcd(&s) != 1 {
            return Err(GapError::InvalidType { n, s }.into());
        }
        if n >= s {
            return Err(CurveError::NotOrdered { n, s });
        }
        Ok(CurveModel {
            n,
            s,
            coeffs: BTreeMap::new(),
        })
    }

    /// Every admissible coefficient set to a random nonzero `a/b` with
    /// `0 < |a| ≤ 5`, `1 ≤ b ≤ 4`, drawn in increasing `(i, j)` order.
    pub fn random(n: u32, s: u32, seed: u64) -> Result<Self, CurveError> {
        let mut c = CurveModel::new(n, s)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (i, j) in c.admissible() {
            let mut a: i64 = rng.gen_range(1..=5);
            if rng.gen_bool(0.5) {
                a = -a;
            }
            let b: i64 = rng.gen_range(1..=4);
            c.coeffs.insert((i, j), Rational::new(a.into(), b.into()));
        }
        Ok(c)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Index pairs `(i, j)` with `j < n` and `ni + sj < ns`, increasing.
    pub fn admissible(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 0..self.s {
            for j in 0..self.n {
                if self.n * i + self.s * j < self.n * self.s {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn set(&mut self, i: u32, j: u32, value: Rational) -> Result<(), CurveError> {
        if j >= self.n || self.n * i + self.s * j >= self.n * self.s {
            return Err(CurveError::IndexOutOfRange { i, j });
        }
        if value.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), value);
        }
        Ok(())
    }

    /// `λ_{ij}`, zero when unset.
    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients in increasing `(i, j)` order.
    pub fn coeffs(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    /// Pole order `ni + sj` of `x^i y^j`.
    pub fn ord_monomial(&self, i: u32, j: u32) -> Result<u32, CurveError> {
        if j >= self.n {
            return Err(CurveError::IndexOutOfRange { i, j });
        }
        Ok(self.n * i + self.s * j)
    }

    /// The first `count` monomials `x^i y^j` (`j < n`) by increasing pole
    /// order. Orders are distinct because `gcd(n, s) = 1`.
    pub fn phi_basis(&self, count: usize) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(count);
        let mut v = 0u32;
        while out.len() < count {
            if let Some(j) = (0..self.n).find(|&j| self.s * j <= v && (v - self.s * j) % self.n == 0) {
                out.push(((v - self.s * j) / self.n, j));
            }
            v += 1;
        }
        out
    }

    pub fn genus(&self) -> usize {
        ((self.n - 1) * (self.s - 1) / 2) as usize
    }

    /// The integers that are not pole orders of any `φ_i`.
    pub fn gap_sequence(&self) -> GapSequence {
        let conductor = (self.n - 1) * (self.s - 1);
        let orders: Vec<u32> = self
            .phi_basis(conductor as usize + 1)
            .into_iter()
            .map(|(i, j)| self.n * i + self.s * j)
            .collect();
        let gaps: Vec<u32> = (1..conductor).filter(|v| !orders.contains(v)).collect();
        GapSequence::from_gaps(&gaps).expect("pole orders form a semigroup")
    }

    /// Terms `(j, ns - ni - sj, λ_{ij})` of the normalized equation.
    fn shifted_terms(&self) -> Vec<(u32, i64, Rational)> {
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| (j, i64::from(self.n * self.s - self.n * i - self.s * j), c.clone()))
            .collect()
    }

    /// `F(w) = w^n - 1 - Σ λ z^e w^j` and `F'(w)`.
    fn normalized(&self, w: &TruncatedSeries) -> (TruncatedSeries, TruncatedSeries) {
        let n = self.n;
        let mut f = &w.pow(n) - &TruncatedSeries::exact_monomial(int(1), 0);
        let mut df = w.pow(n - 1).scale(&int(i64::from(n)));
        for (j, e, c) in self.shifted_terms() {
            let z_e = TruncatedSeries::exact_monomial(c.clone(), e);
            f = &f - &(&z_e * &w.pow(j));
            if j > 0 {
                df = &df - &(&z_e * &w.pow(j - 1)).scale(&int(i64::from(j)));
            }
        }
        (f, df)
    }

    /// `w = z^s y` modulo `z^precision`, by Newton iteration with doubling
    /// precision from `w = 1`.
    pub fn normalized_root(&self, precision: i64) -> TruncatedSeries {
        let mut w = TruncatedSeries::one(precision.clamp(0, 1));
        let mut known = 1;
        while known < precision {
            known = (2 * known).min(precision);
            let guess = w.with_precision(known);
            let (f, df) = self.normalized(&guess);
            let inv = df.invert().expect("F'(1) = n at z = 0");
            w = &guess - &(&f * &inv);
        }
        w
    }

    /// The expansion `x = z^{-n}`, `y = z^{-s}(1 + O(z))` with `w = z^s y`
    /// known modulo `z^precision`.
    pub fn expand_y(&self, precision: i64) -> PuiseuxData {
        let w = self.normalized_root(precision);
        PuiseuxData {
            x: TruncatedSeries::exact_monomial(int(1), -i64::from(self.n)),
            y: w.shift(-i64::from(self.s)),
            w,
            precision,
        }
    }

    /// `z^{ns} f(x(z), y(z))` computed by substituting the Laurent series into
    /// `f` directly. It should vanish to its own precision, which is the
    /// precision of `w`.
    pub fn residual(&self, data: &PuiseuxData) -> TruncatedSeries {
        let mut f = &data.y.pow(self.n) - &data.x.pow(self.s);
        for (&(i, j), c) in &self.coeffs {
            f = &f - &(&data.x.pow(i) * &data.y.pow(j)).scale(c);
        }
        f.shift(i64::from(self.n * self.s))
    }

    /// `f_y = n y^{n-1} - Σ j λ_{ij} x^i y^{j-1}`.
    fn f_y(&self, data: &PuiseuxData) -> TruncatedSeries {
        let mut fy = data.y.pow(self.n - 1).scale(&int(i64::from(self.n)));
        for (&(i, j), c) in &self.coeffs {
            if j > 0 {
                let term = &data.x.pow(i) * &data.y.pow(j - 1);
                fy = &fy - &term.scale(&(c * int(i64::from(j))));
            }
        }
        fy
    }

    /// `du_{w_i}/dz = -φ_{g+1-i} (dx/dz) / f_y` for `i = 1..g`, with
    /// `dx/dz = -n z^{-n-1}`. Each is `z^{w_i - 1}(1 + O(z))`.
    pub fn differentials(&self, precision: i64) -> Result<Vec<Differential>, CurveError> {
        let gaps = self.gap_sequence();
        let g = gaps.genus();
        let needed = i64::from(*gaps.gaps().last().expect("genus >= 1")) + 2;
        if precision < needed {
            return Err(CurveError::InsufficientPrecision {
                needed,
                got: precision,
            });
        }
        let data = self.expand_y(precision);
        let inv_fy = self.f_y(&data).invert()?;
        let dx = TruncatedSeries::exact_monomial(int(-i64::from(self.n)), -i64::from(self.n) - 1);
        let common = &(&dx * &inv_fy) * &TruncatedSeries::exact_monomial(int(-1), 0);
        let phis = self.phi_basis(g);
        Ok((1..=g)
            .map(|i| {
                let (a, b) = phis[g - i];
                let phi = &data.x.pow(a) * &data.y.pow(b);
                Differential {
                    gap: gaps.gap(i),
                    series: &phi * &common,
                }
            })
            .collect())
    }
}

/// The formal solution at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxData {
    /// Exactly `z^{-n}`.
    pub x: TruncatedSeries,
    pub y: TruncatedSeries,
    /// `z^s y`, known modulo `z^precision`.
    pub w: TruncatedSeries,
    pub precision: i64,
}

/// `du_{w}/dz` for one gap `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    pub gap: u32,
    pub series: TruncatedSeries,
}

impl Differential {
    pub fn valuation(&self) -> Option<i64> {
        self.series.valuation()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.series.leading_coefficient()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn construction() {
        assert!(CurveModel::new(3, 4).is_ok());
        assert_eq!(CurveModel::new(4, 3), Err(CurveError::NotOrdered { n: 4, s: 3 }));
        assert!(matches!(CurveModel::new(2, 4), Err(CurveError::Type(_))));
        let mut c = CurveModel::new(2, 5).unwrap();
        assert!(c.set(0, 1, int(1)).is_ok());
        assert_eq!(c.set(0, 2, int(1)), Err(CurveError::IndexOutOfRange { i: 0, j: 2 }));
        assert_eq!(c.set(5, 0, int(1)), Err(CurveError::IndexOutOfRange { i: 5, j: 0 }));
    }

    #[test]
    fn orders_and_basis() {
        let c34 = CurveModel::new(3, 4).unwrap();
        assert_eq!(c34.ord_monomial(2, 1), Ok(10));
        assert_eq!(c34.ord_monomial(0, 0), Ok(0));
        assert!(c34.ord_monomial(0, 3).is_err());
        assert_eq!(c34.phi_basis(6), [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
        let c25 = CurveModel::new(2, 5).unwrap();
        assert_eq!(c25.ord_monomial(0, 1), Ok(5));
        assert_eq!(c25.phi_basis(4), [(0, 0), (1, 0), (2, 0), (0, 1)]);
    }

    #[test]
    fn gap_sequences() {
        for (n, s) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)] {
            let c = CurveModel::new(n, s).unwrap();
            assert_eq!(c.gap_sequence(), GapSequence::from_ns(n, s).unwrap());
            assert_eq!(c.genus(), c.gap_sequence().genus());
        }
        assert_eq!(CurveModel::new(2, 3).unwrap().gap_sequence().gaps(), [1]);
    }

    #[test]
    fn pure_curve() {
        let c = CurveModel::new(3, 5).unwrap();
        let data = c.expand_y(10);
        assert_eq!(data.y, TruncatedSeries::exact_monomial(int(1), -5).with_precision(5));
        assert!(c.residual(&data).is_zero());
    }

    #[test]
    fn binomial_oracle() {
        let (a, b) = (frac(3, 2), frac(-2, 5));
        let mut c = CurveModel::new(2, 3).unwrap();
        c.set(1, 0, a.clone()).unwrap();
        c.set(0, 0, b.clone()).unwrap();
        let w = c.expand_y(8).w;
        let expected = TruncatedSeries::from_coeffs(
            0,
            alloc::vec![
                int(1),
                int(0),
                int(0),
                int(0),
                a / int(2),
                int(0),
                b / int(2),
                int(0),
            ],
            8,
        );
        assert_eq!(w, expected);
    }

    #[test]
    fn residual_vanishes() {
        for (n, s) in [(2, 5), (3, 4)] {
            let c = CurveModel::random(n, s, 11).unwrap();
            let data = c.expand_y(12);
            let r = c.residual(&data);
            assert!(r.is_zero());
            assert_eq!(r.precision(), 12);
        }
    }

    #[test]
    fn doubling_is_consistent() {
        let c = CurveModel::random(3, 5, 2).unwrap();
        assert_eq!(c.expand_y(20).w.truncate(9), c.expand_y(9).w);
    }

    #[test]
    fn differential_leading_terms() {
        let du = CurveModel::new(2, 3).unwrap().differentials(3).unwrap();
        assert_eq!(du.len(), 1);
        assert_eq!(du[0].valuation(), Some(0));
        assert_eq!(du[0].leading(), Some(&int(1)));
        let du = CurveModel::random(2, 5, 4).unwrap().differentials(8).unwrap();
        let vals: Vec<_> = du.iter().map(|d| d.valuation()).collect();
        assert_eq!(vals, [Some(0), Some(2)]);
        assert!(du.iter().all(|d| d.leading() == Some(&int(1))));
        assert_eq!(
            CurveModel::new(2, 5).unwrap().differentials(3),
            Err(CurveError::InsufficientPrecision { needed: 5, got: 3 })
        );
    }
}
