//! Integer partitions and the indices derived from them.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::PartitionError;

/// Weakly decreasing sequence of positive parts. Trailing zeros are never
/// stored, so `(2,1,0)` and `(2,1)` are the same value.
///
/// The total order (`Ord`) sorts by weight, then lexicographically by parts
/// in *decreasing* order, so `(2)` comes before `(1,1)`. This is the
/// canonical enumeration order; containment is the separate partial order
/// [`contains`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Accepts a weakly decreasing sequence, possibly padded with zeros.
    pub fn new(parts: &[u32]) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing);
        }
        let len = parts.iter().take_while(|&&p| p > 0).count();
        Ok(Partition {
            parts: parts[..len].to_vec(),
        })
    }

    /// Unchecked constructor for sequences already known to be valid.
    pub(crate) fn from_vec(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The hook `(arm, 1^(legs))`.
    pub fn hook(first: u32, length: usize) -> Self {
        if first == 0 || length == 0 {
            return Partition::empty();
        }
        let mut parts = vec![1; length];
        parts[0] = first;
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The first `k` parts.
    pub fn head(&self, k: usize) -> Partition {
        Partition {
            parts: self.parts[..k.min(self.parts.len())].to_vec(),
        }
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=first)
                .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        }
    }

    /// The conjugate with one removed from every part.
    pub fn tilde_conjugate(&self) -> Partition {
        Partition::from_vec(self.conjugate().parts.iter().map(|p| p - 1).collect())
    }

    /// `(λ_1 + l-1, λ_2 + l-2, ..., λ_l)` for the zero-padded partition.
    pub fn w_sequence(&self, l: usize) -> Result<Vec<u32>, PartitionError> {
        if l < self.len() {
            return Err(PartitionError::LengthTooSmall {
                len: l,
                parts: self.len(),
            });
        }
        Ok((1..=l).map(|i| self.part(i) + (l - i) as u32).collect())
    }

    /// Inverse of [`Partition::w_sequence`]: subtracts `(l-1, ..., 0)` from a
    /// strictly decreasing nonnegative sequence.
    pub fn from_w_sequence(w: &[u32]) -> Option<Partition> {
        let l = w.len();
        if w.windows(2).any(|p| p[0] <= p[1]) {
            return None;
        }
        let mut parts = Vec::with_capacity(l);
        for (i, &wi) in w.iter().enumerate() {
            parts.push(wi.checked_sub((l - 1 - i) as u32)?);
        }
        Some(Partition::from_vec(parts))
    }

    /// `N_{λ,k} = λ_{k+1} + ... + λ_l`.
    pub fn n_tail(&self, k: usize) -> u32 {
        self.parts.iter().skip(k).sum()
    }

    /// `N'_{λ,1} = N_{λ,1} - l + 1`.
    pub fn n_prime(&self) -> Result<u32, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::Empty);
        }
        Ok(self.n_tail(1) + 1 - self.len() as u32)
    }

    /// `self ≤ other` in the containment order.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// `λ ≤ μ` in the containment order.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contained_in(mu)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        let mut offset = 0;
        for piece in s.split(',') {
            let trimmed = piece.trim();
            let value: u32 = trimmed.parse().map_err(|_| PartitionError::Parse {
                position: offset,
                message: alloc::format!("expected a nonnegative integer, found {trimmed:?}"),
            })?;
            parts.push(value);
            offset += piece.len() + 1;
        }
        Partition::new(&parts)
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `n`, in canonical order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Every `μ` with `λ ≤ μ`, `μ ≠ λ` and `|μ| ≤ max_weight`, ordered by
/// weight and then decreasing lexicographic order.
pub fn enumerate_above(lambda: &Partition, max_weight: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in lambda.weight() + 1..=max_weight {
        for mu in partitions_of(n) {
            if lambda.contained_in(&mu) {
                out.push(mu);
            }
        }
    }
    out
}
