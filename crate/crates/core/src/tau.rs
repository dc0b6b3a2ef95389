//! Truncated tau series `τ = s_λ + Σ_{λ<μ} ξ_μ s_μ` and the companion series
//! `τ^(k)` and `τ_2`.
//!
//! A series is only known up to a weight cutoff `W`. Every derived series
//! and every evaluation carries the weight (or total degree) up to which it
//! is exact, and comparisons are made only inside that range.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::TauError;
use crate::partition::{enumerate_above, Partition};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::schur::{DerivationIndex, SchurSum, SignedPoint, Specialization};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSeries {
    base: Partition,
    cutoff: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl TauSeries {
    /// `s_λ` alone, known up to weight `cutoff`.
    pub fn pure(base: Partition, cutoff: u32) -> Result<Self, TauError> {
        if cutoff < base.weight() {
            return Err(TauError::CutoffBelowBase {
                cutoff,
                weight: base.weight(),
            });
        }
        Ok(TauSeries {
            base,
            cutoff,
            terms: BTreeMap::new(),
        })
    }

    /// Builds a series from explicit coefficients; zero coefficients are
    /// dropped.
    pub fn from_terms<I>(base: Partition, cutoff: u32, terms: I) -> Result<Self, TauError>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut tau = TauSeries::pure(base, cutoff)?;
        for (mu, xi) in terms {
            tau.set(mu, xi)?;
        }
        Ok(tau)
    }

    /// Sets `ξ_μ`; `μ` must strictly contain the base and fit the cutoff.
    pub fn set(&mut self, mu: Partition, xi: Rational) -> Result<(), TauError> {
        if mu == self.base || !self.base.contained_in(&mu) || mu.weight() > self.cutoff {
            return Err(TauError::InvalidTerm(mu.to_string()));
        }
        if xi.is_zero() {
            self.terms.remove(&mu);
        } else {
            self.terms.insert(mu, xi);
        }
        Ok(())
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// `(μ, ξ_μ)` in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn xi(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    /// The same series with every `ξ_μ` set to zero.
    pub fn degenerate(&self) -> TauSeries {
        TauSeries {
            base: self.base.clone(),
            cutoff: self.cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn as_series(&self) -> SchurSeries {
        let mut sum = SchurSum::single(&self.base);
        for (mu, xi) in &self.terms {
            sum.add(mu.clone(), xi.clone());
        }
        SchurSeries {
            sum,
            valid_weight: i64::from(self.cutoff),
        }
    }

    fn check_k(&self, k: usize) -> Result<(), TauError> {
        if k > self.base.len() {
            Err(TauError::KOutOfRange {
                k,
                len: self.base.len(),
            })
        } else {
            Ok(())
        }
    }

    /// `τ^(k) = s_{(λ_1..λ_k)} + Σ ξ_μ s_{(μ_1..μ_k)}` over `μ` of length `l`
    /// agreeing with `λ` after position `k`; `τ^(0) = 1`. Exact up to weight
    /// `W - N_{λ,k}`.
    pub fn tau_k(&self, k: usize) -> Result<SchurSeries, TauError> {
        self.check_k(k)?;
        let valid_weight = i64::from(self.cutoff) - i64::from(self.base.n_tail(k));
        if k == 0 {
            return Ok(SchurSeries {
                sum: SchurSum::single(&Partition::empty()),
                valid_weight,
            });
        }
        let l = self.base.len();
        let mut sum = SchurSum::single(&self.base.head(k));
        for (mu, xi) in &self.terms {
            if mu.len() == l && (k + 1..=l).all(|i| mu.part(i) == self.base.part(i)) {
                sum.add(mu.head(k), xi.clone());
            }
        }
        Ok(SchurSeries { sum, valid_weight })
    }

    /// `τ_2 = s_{(λ_1,1^{l-1})} + Σ ξ_μ s_{(μ_1,1^{l'-1})}` over
    /// `μ = (μ_1, λ_2, ..., λ_l, 1^{l'-l})`. Exact up to weight `W - N'_{λ,1}`.
    pub fn tau_2(&self) -> Result<SchurSeries, TauError> {
        let l = self.base.len();
        let n_prime = self.base.n_prime().map_err(|_| TauError::EmptyBase)?;
        let mut sum = SchurSum::single(&Partition::hook(self.base.part(1), l));
        for (mu, xi) in &self.terms {
            let qualifies = mu.len() >= l
                && (2..=l).all(|i| mu.part(i) == self.base.part(i))
                && (l + 1..=mu.len()).all(|i| mu.part(i) == 1);
            if qualifies {
                sum.add(Partition::hook(mu.part(1), mu.len()), xi.clone());
            }
        }
        Ok(SchurSeries {
            sum,
            valid_weight: i64::from(self.cutoff) - i64::from(n_prime),
        })
    }
}

/// Reproducible random coefficients: every `μ` above `λ` up to weight `W`
/// gets a nonzero `ξ_μ = a/b` with `0 < |a| ≤ 5`, `1 ≤ b ≤ 4`, drawn in the
/// canonical order of `μ` from ChaCha8 seeded with `seed`.
pub fn random_tau(base: &Partition, cutoff: u32, seed: u64) -> Result<TauSeries, TauError> {
    let mut tau = TauSeries::pure(base.clone(), cutoff)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for mu in enumerate_above(base, cutoff) {
        let mut a: i64 = rng.gen_range(1..=5);
        if rng.gen_bool(0.5) {
            a = -a;
        }
        let b: i64 = rng.gen_range(1..=4);
        tau.terms.insert(mu, Rational::new(a.into(), b.into()));
    }
    Ok(tau)
}

/// A finite combination of Schur functions that agrees with the series it
/// models in every weight up to `valid_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurSeries {
    pub sum: SchurSum,
    pub valid_weight: i64,
}

/// A polynomial in the point variables, exact in total degree up to
/// `valid_degree`; nothing is known above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Polynomial,
    pub valid_degree: i64,
}

impl Evaluation {
    /// The part of the value that is certified.
    pub fn certified(&self) -> Polynomial {
        if self.valid_degree < 0 {
            Polynomial::zero()
        } else {
            self.value.truncate_degree(self.valid_degree as u32)
        }
    }
}

/// `∂^α` of the series, evaluated at the point. Each `∂^α s_μ` at the point
/// is homogeneous of degree `|μ| - wt α`, so the result is exact up to total
/// degree `valid_weight - wt α`.
pub fn tau_eval(series: &SchurSeries, alpha: &DerivationIndex, points: &[SignedPoint]) -> Evaluation {
    let valid_degree = series.valid_weight - i64::from(alpha.weight());
    let derived = series.sum.derive(alpha);
    let value = Specialization::new(points).eval(&derived);
    Evaluation {
        value,
        valid_degree,
    }
}

/// Convenience for `∂^α τ` on the full series.
pub fn tau_eval_full(tau: &TauSeries, alpha: &DerivationIndex, points: &[SignedPoint]) -> Evaluation {
    tau_eval(&tau.as_series(), alpha, points)
}

impl SchurSeries {
    pub fn one() -> Self {
        SchurSeries {
            sum: SchurSum::single(&Partition::empty()),
            valid_weight: i64::MAX / 4,
        }
    }

    pub fn is_constant_one(&self) -> bool {
        let mut it = self.sum.terms();
        matches!((it.next(), it.next()), (Some((p, c)), None) if p.is_empty() && c.is_one())
    }

    /// Terms as `(partition, coefficient)` pairs.
    pub fn term_list(&self) -> Vec<(Partition, Rational)> {
        self.sum
            .terms()
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect()
    }
}
