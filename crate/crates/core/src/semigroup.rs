//! Gap sequences, their derivative index sequences and the closed-form
//! constants attached to them.
//!
//! A gap sequence of genus `g` is a set `G = {w_1 < ... < w_g}` of positive
//! integers whose complement in `Z_{>=0}` is an additive semigroup. The
//! complement is enumerated as `0 = w*_1 < w*_2 < ...`.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::One;

use crate::error::GapError;
use crate::partition::Partition;
use crate::rational::{factorial_q, int, powi, sign_pow, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GapSequence {
    gaps: Vec<u32>,
}

impl GapSequence {
    /// Validates a sorted list of gaps.
    ///
    /// Only sums up to the largest gap need checking: any larger integer is a
    /// nongap already.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self, GapError> {
        if gaps.is_empty() {
            return Err(GapError::Empty);
        }
        if gaps[0] == 0 || gaps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GapError::Malformed);
        }
        let top = *gaps.last().unwrap();
        let is_gap = |v: u32| gaps.binary_search(&v).is_ok();
        for a in 1..=top / 2 {
            if is_gap(a) {
                continue;
            }
            for b in a..=top - a {
                if !is_gap(b) && is_gap(a + b) {
                    return Err(GapError::NotSemigroup { a, b, sum: a + b });
                }
            }
        }
        Ok(GapSequence {
            gaps: gaps.to_vec(),
        })
    }

    /// Gap sequence of type `(n, s)`: the complement of the semigroup
    /// generated by `n` and `s`.
    pub fn from_ns(n: u32, s: u32) -> Result<Self, GapError> {
        if n < 2 || s < 2 || n.gcd(&s) != 1 {
            return Err(GapError::InvalidType { n, s });
        }
        let frobenius = n * s - n - s;
        let mut reachable = alloc::vec![false; (frobenius + 1) as usize];
        for v in 0..=frobenius {
            reachable[v as usize] = v == 0
                || (v >= n && reachable[(v - n) as usize])
                || (v >= s && reachable[(v - s) as usize]);
        }
        let gaps: Vec<u32> = (1..=frobenius).filter(|&v| !reachable[v as usize]).collect();
        Ok(GapSequence { gaps })
    }

    /// Every gap sequence of the given genus, in lexicographic order of the
    /// sorted gap lists.
    pub fn all_of_genus(genus: usize) -> Vec<GapSequence> {
        // gaps never exceed 2g - 1
        let bound = (2 * genus).saturating_sub(1) as u32;
        let mut out = Vec::new();
        let mut cur = alloc::vec![1u32];
        fn rec(cur: &mut Vec<u32>, next: u32, bound: u32, genus: usize, out: &mut Vec<GapSequence>) {
            if cur.len() == genus {
                if let Ok(g) = GapSequence::from_gaps(cur) {
                    out.push(g);
                }
                return;
            }
            for v in next..=bound {
                cur.push(v);
                rec(cur, v + 1, bound, genus, out);
                cur.pop();
            }
        }
        if genus > 0 {
            rec(&mut cur, 2, bound, genus, &mut out);
        }
        out
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// `w_i` with 1-based `i`.
    pub fn gap(&self, i: usize) -> u32 {
        self.gaps[i - 1]
    }

    pub fn is_gap(&self, v: u32) -> bool {
        self.gaps.binary_search(&v).is_ok()
    }

    /// The `i`-th smallest nongap `w*_i` (1-based, so `nongap(1) = 0`).
    pub fn nongap(&self, i: usize) -> u32 {
        (0..).filter(|&v| !self.is_gap(v)).nth(i - 1).unwrap()
    }

    /// Nongaps strictly below `bound`, increasing.
    pub fn nongaps_below(&self, bound: u32) -> Vec<u32> {
        (0..bound).filter(|&v| !self.is_gap(v)).collect()
    }

    /// `λ = (w_g, ..., w_1) - (g-1, ..., 1, 0)`.
    pub fn partition(&self) -> Partition {
        let g = self.genus();
        Partition::from_vec(
            (0..g)
                .map(|i| self.gaps[g - 1 - i] - (g - 1 - i) as u32)
                .collect(),
        )
    }

    /// The gap sequence whose partition is `λ`, if there is one.
    pub fn from_partition(lambda: &Partition) -> Result<Self, GapError> {
        let g = lambda.len();
        let gaps: Vec<u32> = (1..=g).map(|j| lambda.part(g + 1 - j) + j as u32 - 1).collect();
        GapSequence::from_gaps(&gaps)
    }

    fn check_k(&self, k: usize) -> Result<(), GapError> {
        if k > self.genus() {
            Err(GapError::KOutOfRange {
                k,
                genus: self.genus(),
            })
        } else {
            Ok(())
        }
    }

    /// `a^(k)`: `(w_{g-k}, ..., w_{g-k-m_k+1}) - (w*_1, ..., w*_{m_k})` with
    /// `m_k = #{i | w*_i < g - k}`; empty for `k = g`.
    pub fn a_sequence(&self, k: usize) -> Result<ASequence, GapError> {
        self.check_k(k)?;
        let g = self.genus();
        if k == g {
            return Ok(ASequence {
                k,
                entries: Vec::new(),
            });
        }
        let stars = self.nongaps_below((g - k) as u32);
        let entries = stars
            .iter()
            .enumerate()
            .map(|(j, &star)| self.gap(g - k - j) - star)
            .collect();
        Ok(ASequence { k, entries })
    }

    /// The sign `c_k`: parity of rearranging
    /// `(w*_1, ..., w*_{m_k}, w_{g-k-m_k}, ..., w_1)` into `(g-k-1, ..., 1, 0)`.
    pub fn c_k_sign(&self, k: usize) -> Result<i8, GapError> {
        self.check_k(k)?;
        let g = self.genus();
        if k == g {
            return Ok(1);
        }
        let mut seq = self.nongaps_below((g - k) as u32);
        let m = seq.len();
        seq.extend((1..=g - k - m).rev().map(|i| self.gap(i)));
        // every pair out of decreasing order is one transposition
        let mut inversions = 0usize;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if seq[i] < seq[j] {
                    inversions += 1;
                }
            }
        }
        Ok(if inversions % 2 == 0 { 1 } else { -1 })
    }

    /// The full table of constants for `k = 0..=g`.
    pub fn constants(&self) -> ConstantsTable {
        let lambda = self.partition();
        let g = self.genus();
        let rows = (0..=g)
            .map(|k| ConstantRow {
                k,
                a: self.a_sequence(k).expect("k in range"),
                c_sign: self.c_k_sign(k).expect("k in range"),
                c_prime: c_prime(&lambda, k).expect("k in range"),
            })
            .collect();
        let b = (1..=g)
            .map(|n| BRow {
                n,
                b: b_coeff(self, n, false).expect("n in range"),
                b_prime: if n < g {
                    Some(b_coeff(self, n, true).expect("n in range"))
                } else {
                    None
                },
            })
            .collect();
        ConstantsTable {
            gaps: self.gaps.clone(),
            genus: g,
            c_lambda: c_lambda(&lambda).expect("genus is positive"),
            n_prime: lambda.n_prime().expect("genus is positive"),
            partition: lambda,
            rows,
            b,
        }
    }
}

impl fmt::Display for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.gaps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// The derivative multi-index `a^(k)`, strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASequence {
    pub k: usize,
    pub entries: Vec<u32>,
}

impl ASequence {
    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn sum(&self) -> u32 {
        self.entries.iter().sum()
    }
}

/// Increasing w-sequence `w_1 < ... < w_l` of a partition of length `l`.
fn increasing_w(lambda: &Partition) -> Vec<u32> {
    let mut w = lambda.w_sequence(lambda.len()).expect("own length");
    w.reverse();
    w
}

fn vandermonde(w: &[u32]) -> Rational {
    let mut acc = Rational::one();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            acc *= int(i64::from(w[j]) - i64::from(w[i]));
        }
    }
    acc
}

/// `c'_{λ,k} = N_{λ,k}! ∏_{i<j≤l-k} (w_j - w_i) / ∏_{i≤l-k} w_i!`.
pub fn c_prime(lambda: &Partition, k: usize) -> Result<Rational, GapError> {
    let l = lambda.len();
    if k > l {
        return Err(GapError::KOutOfRange { k, genus: l });
    }
    let w = increasing_w(lambda);
    let w = &w[..l - k];
    let mut value = factorial_q(u64::from(lambda.n_tail(k))) * vandermonde(w);
    for &wi in w {
        value /= factorial_q(u64::from(wi));
    }
    Ok(value)
}

/// `c_λ = N'_{λ,1}! ∏_{i<j≤l-1} (w_j - w_i) / ∏_{i≤l-1} (w_i - 1)!`.
pub fn c_lambda(lambda: &Partition) -> Result<Rational, GapError> {
    let n_prime = lambda.n_prime().map_err(|_| GapError::EmptyPartition)?;
    let w = increasing_w(lambda);
    let w = &w[..lambda.len() - 1];
    let mut value = factorial_q(u64::from(n_prime)) * vandermonde(w);
    for &wi in w {
        value /= factorial_q(u64::from(wi - 1));
    }
    Ok(value)
}

/// The addition-formula constants `b_{λ,n}` and (with `primed`) `b'_{λ,n}`
/// for the partition of `gaps`.
pub fn b_coeff(gaps: &GapSequence, n: usize, primed: bool) -> Result<Rational, GapError> {
    let g = gaps.genus();
    if n == 0 || (primed && n >= g) {
        return Err(GapError::NOutOfRange { n, genus: g });
    }
    let lambda = gaps.partition();
    let pairs = (n * (n - 1) / 2) as i64;
    let mut value = sign_pow((g as u64) * pairs as u64)
        * powi(&c_lambda(&lambda)?, pairs)
        * powi(&c_prime(&lambda, 1)?, -((n * n) as i64));
    if primed {
        value *= int(i64::from(gaps.c_k_sign(n)?));
    } else if n < g {
        value *= c_prime(&lambda, n)?;
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantRow {
    pub k: usize,
    pub a: ASequence,
    pub c_sign: i8,
    pub c_prime: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BRow {
    pub n: usize,
    pub b: Rational,
    pub b_prime: Option<Rational>,
}

/// Every constant attached to one gap sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantsTable {
    pub gaps: Vec<u32>,
    pub genus: usize,
    pub partition: Partition,
    pub n_prime: u32,
    pub c_lambda: Rational,
    pub rows: Vec<ConstantRow>,
    pub b: Vec<BRow>,
}
