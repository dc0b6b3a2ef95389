//! Identities for Schur functions at `Σ [x_i]` and at `[x_1] - [x_2]`.
//!
//! Unless a check says otherwise, point values are computed by the bracket
//! calculus with [`Specialization::exhaustive`], so no vanishing is assumed
//! that a check is meant to establish.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;


use super::{gap_sequences, Case, Outcome, Suite};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::poly::{Polynomial, Var};
use crate::rational::{int, sign_pow, Rational};
use crate::schur::{
    abel_subs, derive, derive_at_direct, difference_points, positive_points,
    schur_t, schur_x, DerivationIndex, SchurSum, Sign, SignedPoint, Specialization,
};
use crate::semigroup::{c_lambda, c_prime, GapSequence};

/// Every `(n, s)` type the suites cover explicitly.
pub const NS_TYPES: [(u32, u32); 7] = [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5), (4, 5)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurBounds {
    /// Largest `|λ|` for checks over all partitions.
    pub max_weight: u32,
    /// Gap sequences of every genus up to this are included.
    pub max_genus: usize,
    /// Extra `(n, s)` types, included whatever their genus.
    pub ns_types: Vec<(u32, u32)>,
    /// Largest number of points `k` in the point-evaluation checks.
    pub max_points: usize,
    /// Largest number of points in the Jacobi–Trudi versus bialternant check.
    pub oracle_points: usize,
    /// How far extended partitions `μ` go beyond `|λ|`.
    pub extra_weight: u32,
    /// Largest `|λ|` for comparing the two evaluation routes.
    pub route_weight: u32,
}

impl Default for SchurBounds {
    fn default() -> Self {
        SchurBounds {
            max_weight: 8,
            max_genus: 6,
            ns_types: NS_TYPES.to_vec(),
            max_points: 3,
            oracle_points: 4,
            extra_weight: 3,
            route_weight: 6,
        }
    }
}

fn at(lambda: &Partition, alpha: &DerivationIndex, points: &[SignedPoint]) -> Polynomial {
    Specialization::exhaustive(points).eval(&SchurSum::single(lambda).derive(alpha))
}

fn schur_at(lambda: &Partition, points: &[SignedPoint]) -> Polynomial {
    Specialization::exhaustive(points).schur(lambda)
}

fn nonempty_up_to(max_weight: u32) -> Vec<Partition> {
    partitions_up_to(max_weight)
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect()
}

/// Terms whose exponent of `v` is below `e`.
pub(crate) fn below_order(p: &Polynomial, v: Var, e: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for j in 0..e {
        let c = p.coefficient_in(v, j);
        out += &(&c * &Polynomial::var(v).pow(j));
    }
    out
}

/// All derivations `∂^α` of weight exactly `w`, one per partition of `w`.
pub(crate) fn derivations_of_weight(w: u32) -> Vec<DerivationIndex> {
    partitions_of(w).iter().map(DerivationIndex::from_partition).collect()
}

pub fn cases(bounds: &SchurBounds) -> Vec<Case> {
    let mut out = Vec::new();
    let gaps = gap_sequences(bounds.max_genus, &bounds.ns_types);
    out.extend(jacobi_trudi_bialternant(bounds));
    out.extend(route_agreement(bounds));
    out.extend(homogeneity(bounds));
    out.extend(bracket_reduction());
    out.extend(length_leading_term(bounds));
    out.extend(length_vanishing(bounds));
    out.extend(weight_vanishing(bounds));
    out.extend(row_reduction(bounds));
    out.extend(a_sequences(&gaps));
    out.extend(hyperelliptic_a_sequences(bounds));
    out.extend(ns_self_conjugate(bounds));
    out.extend(gap_independence(&gaps));
    out.extend(gap_derivative(&gaps, bounds));
    out.extend(gap_derivative_extended(&gaps, bounds));
    out.extend(t1_derivative(&gaps, bounds));
    out.extend(dual_difference(bounds));
    out.extend(hook_criterion(bounds));
    out.extend(difference_vanishing(&gaps, bounds));
    out.extend(difference_derivative(&gaps, bounds));
    out.extend(difference_derivative_extended(bounds));
    out.extend(hook_closed_form(bounds));
    out
}

/// `s_λ(t)` at `Σ_{i≤k} [x_i]` equals the bialternant in `k` variables.
fn jacobi_trudi_bialternant(bounds: &SchurBounds) -> Vec<Case> {
    let mut out = Vec::new();
    for lambda in partitions_up_to(bounds.max_weight) {
        for k in lambda.len().max(1)..=bounds.oracle_points {
            let lambda = lambda.clone();
            out.push(Case::new(
                Suite::Schur,
                "jacobi-trudi-bialternant",
                format!("lambda={lambda} k={k}"),
                move || {
                    let lhs = abel_subs(&schur_t(&lambda), &positive_points(k));
                    let rhs = schur_x(&lambda, k).expect("k >= l(λ)");
                    Outcome::identical(&lhs, &rhs)
                        .input("lambda", &lambda)
                        .input("k", k)
                },
            ));
        }
    }
    out
}

/// The bracket calculus agrees with differentiating `s_λ(t)` and substituting.
fn route_agreement(bounds: &SchurBounds) -> Vec<Case> {
    let point_sets: Vec<Vec<SignedPoint>> = vec![
        positive_points(1),
        positive_points(2),
        difference_points(),
        vec![
            SignedPoint::plus(1),
            SignedPoint::number(Sign::Plus, Rational::new(1.into(), 2.into())),
            SignedPoint::minus(2),
        ],
    ];
    let alphas: Vec<DerivationIndex> = (0..=2).flat_map(derivations_of_weight).collect();
    let mut out = Vec::new();
    for lambda in partitions_up_to(bounds.route_weight) {
        let point_sets = point_sets.clone();
        let alphas = alphas.clone();
        out.push(Case::new(
            Suite::Schur,
            "route-agreement",
            format!("lambda={lambda}"),
            move || {
                for pts in &point_sets {
                    for alpha in &alphas {
                        let direct = derive_at_direct(&lambda, alpha, pts);
                        let brackets = at(&lambda, alpha, pts);
                        if direct != brackets {
                            return Outcome::identical(&direct, &brackets)
                                .input("lambda", &lambda)
                                .input("alpha", alpha)
                                .input("points", crate::schur::render_points(pts));
                        }
                    }
                }
                Outcome::holds(true).input("lambda", &lambda)
            },
        ));
    }
    out
}

/// `s_λ(t)` has weight `|λ|` and `∂^α` lowers it by exactly `wt α`.
fn homogeneity(bounds: &SchurBounds) -> Vec<Case> {
    let alphas: Vec<DerivationIndex> = (1..=3).flat_map(derivations_of_weight).collect();
    partitions_up_to(bounds.max_weight)
        .into_iter()
        .map(|lambda| {
            let alphas = alphas.clone();
            Case::new(Suite::Schur, "homogeneity", format!("lambda={lambda}"), move || {
                let s = schur_t(&lambda);
                let w = lambda.weight();
                if s.is_zero() || !s.is_weight_homogeneous(w) {
                    return Outcome::holds(false)
                        .input("lambda", &lambda)
                        .witness(&s)
                        .note("not weight-homogeneous of weight |λ|");
                }
                for alpha in &alphas {
                    let d = derive(&s, alpha);
                    let ok = d.is_zero() || (alpha.weight() <= w && d.is_weight_homogeneous(w - alpha.weight()));
                    if !ok {
                        return Outcome::holds(false)
                            .input("lambda", &lambda)
                            .input("alpha", alpha)
                            .witness(&d);
                    }
                }
                Outcome::holds(true).input("lambda", &lambda)
            })
        })
        .collect()
}

/// `[i_1, ..., i_k, m-1, ..., 1, 0] = [i_1 - m, ..., i_k - m]` in the time
/// variables, over all `i_j ∈ [-1, 5]`, `k ≤ 2`, `m ≤ 3`.
fn bracket_reduction() -> Vec<Case> {
    let mut out = Vec::new();
    for k in 1..=2usize {
        for m in 1..=3i64 {
            out.push(Case::new(
                Suite::Schur,
                "bracket-reduction",
                format!("k={k} m={m}"),
                move || {
                    let range: Vec<i64> = (-1..=5).collect();
                    let lists: Vec<Vec<i64>> = if k == 1 {
                        range.iter().map(|&a| vec![a]).collect()
                    } else {
                        range
                            .iter()
                            .flat_map(|&a| range.iter().map(move |&b| vec![a, b]))
                            .collect()
                    };
                    for idx in lists {
                        let mut long = idx.clone();
                        long.extend((0..m).rev());
                        let short: Vec<i64> = idx.iter().map(|i| i - m).collect();
                        let lhs = crate::schur::bracket(&long);
                        let rhs = crate::schur::bracket(&short);
                        if lhs != rhs {
                            return Outcome::identical(&lhs, &rhs)
                                .input("indices", format!("{idx:?}"))
                                .input("m", m);
                        }
                    }
                    Outcome::holds(true).input("k", k).input("m", m)
                },
            ));
        }
    }
    out
}

/// `s_λ(Σ_{i≤l} [x_i]) = s_{(λ_1..λ_{l-1})}(Σ_{i<l} [x_i]) x_l^{λ_l} + O(x_l^{λ_l+1})`.
fn length_leading_term(bounds: &SchurBounds) -> Vec<Case> {
    nonempty_up_to(bounds.max_weight)
        .into_iter()
        .filter(|l| l.len() <= bounds.oracle_points)
        .map(|lambda| {
            Case::new(Suite::Schur, "length-leading-term", format!("lambda={lambda}"), move || {
                let l = lambda.len();
                let xl = Var::X(l as u32);
                let full = schur_at(&lambda, &positive_points(l));
                let low = below_order(&full, xl, lambda.part(l));
                if !low.is_zero() {
                    return Outcome::vanishes(&low)
                        .input("lambda", &lambda)
                        .note("terms below the leading power of x_l");
                }
                let lead = full.coefficient_in(xl, lambda.part(l));
                let rhs = schur_at(&lambda.head(l - 1), &positive_points(l - 1));
                Outcome::identical(&lead, &rhs).input("lambda", &lambda)
            })
        })
        .collect()
}

/// `s_λ(Σ_{i≤k} [x_i]) = 0` for `k < l`, by direct substitution.
fn length_vanishing(bounds: &SchurBounds) -> Vec<Case> {
    let mut out = Vec::new();
    for lambda in nonempty_up_to(bounds.max_weight) {
        for k in 0..lambda.len().min(bounds.max_points + 1) {
            let lambda = lambda.clone();
            out.push(Case::new(
                Suite::Schur,
                "length-vanishing",
                format!("lambda={lambda} k={k}"),
                move || {
                    let v = abel_subs(&schur_t(&lambda), &positive_points(k));
                    Outcome::vanishes(&v).input("lambda", &lambda).input("k", k)
                },
            ));
        }
    }
    out
}

/// `∂^α s_λ(Σ_{i≤k} [x_i]) = 0` whenever `wt α < N_{λ,k}`, `k ≤ l - 1`.
fn weight_vanishing(bounds: &SchurBounds) -> Vec<Case> {
    let mut out = Vec::new();
    for lambda in nonempty_up_to(bounds.max_weight) {
        for k in 0..lambda.len().min(bounds.max_points + 1) {
            let lambda = lambda.clone();
            out.push(Case::new(
                Suite::Schur,
                "weight-vanishing",
                format!("lambda={lambda} k={k}"),
                move || {
                    let n = lambda.n_tail(k);
                    let pts = positive_points(k);
                    let mut spec = Specialization::exhaustive(&pts);
                    let mut count = 0;
                    for w in 0..n {
                        for alpha in derivations_of_weight(w) {
                            let v = spec.eval(&SchurSum::single(&lambda).derive(&alpha));
                            count += 1;
                            if !v.is_zero() {
                                return Outcome::vanishes(&v)
                                    .input("lambda", &lambda)
                                    .input("k", k)
                                    .input("alpha", &alpha);
                            }
                        }
                    }
                    Outcome::holds(true)
                        .input("lambda", &lambda)
                        .input("k", k)
                        .note(format!("{count} derivations of weight < {n}"))
                },
            ));
        }
    }
    out
}

/// Compositions of `total` into `parts` nonnegative summands.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(left - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Shifts `r` with `Σ r_i = N_{λ,k}` that leave `[w̄ - r]` nonzero at
/// `Σ_{i≤k} [x_i]` fix the first `k` rows, permute the rest onto
/// `(l-k-1, ..., 0)`, and give `±s_{(λ_1..λ_k)}`.
fn row_reduction(bounds: &SchurBounds) -> Vec<Case> {
    let mut out = Vec::new();
    for lambda in nonempty_up_to(bounds.max_weight) {
        for k in 0..lambda.len().min(bounds.max_points + 1) {
            let lambda = lambda.clone();
            out.push(Case::new(
                Suite::Schur,
                "row-reduction",
                format!("lambda={lambda} k={k}"),
                move || {
                    let l = lambda.len();
                    let w: Vec<i64> = lambda
                        .w_sequence(l)
                        .expect("own length")
                        .into_iter()
                        .map(i64::from)
                        .collect();
                    let pts = positive_points(k);
                    let mut spec = Specialization::exhaustive(&pts);
                    let head = spec.schur(&lambda.head(k));
                    let mut target: Vec<i64> = (0..(l - k) as i64).collect();
                    target.sort_unstable();
                    let mut nonzero = 0;
                    for r in compositions(lambda.n_tail(k), l) {
                        let shifted: Vec<i64> = w.iter().zip(&r).map(|(a, b)| a - i64::from(*b)).collect();
                        let value = spec.bracket(&shifted);
                        if value.is_zero() {
                            continue;
                        }
                        nonzero += 1;
                        let fixed = r[..k].iter().all(|&x| x == 0);
                        let mut tail = shifted[k..].to_vec();
                        tail.sort_unstable();
                        let proportional = value == head || value == -head.clone();
                        if !(fixed && tail == target && proportional) {
                            return Outcome::holds(false)
                                .input("lambda", &lambda)
                                .input("k", k)
                                .input("r", format!("{r:?}"))
                                .witness(&value);
                        }
                    }
                    Outcome::holds(true)
                        .input("lambda", &lambda)
                        .input("k", k)
                        .note(format!("{nonzero} nonvanishing shifts"))
                },
            ));
        }
    }
    out
}

/// `a^(k)` is strictly decreasing, made of gaps, and sums to `N_{λ,k}`.
fn a_sequences(gaps: &[GapSequence]) -> Vec<Case> {
    gaps.iter()
        .cloned()
        .map(|g| {
            Case::new(Suite::Schur, "a-sequence", format!("gaps={g}"), move || {
                let lambda = g.partition();
                for k in 0..=g.genus() {
                    let a = g.a_sequence(k).expect("k in range");
                    let decreasing = a.entries.windows(2).all(|p| p[0] > p[1]);
                    let positive = a.entries.iter().all(|&e| e >= 1);
                    let in_gaps = a.entries.iter().all(|&e| g.is_gap(e));
                    let sum = a.sum() == lambda.n_tail(k);
                    if !(decreasing && positive && in_gaps && sum) {
                        return Outcome::holds(false)
                            .input("gaps", &g)
                            .input("k", k)
                            .witness(format!("{:?}", a.entries));
                    }
                }
                Outcome::holds(true).input("gaps", &g)
            })
        })
        .collect()
}

/// For type `(2, 2g+1)`: `m_k = ⌊(g-k+1)/2⌋` and `a^(k) = (2g-2k-1, 2g-2k-5, ...)`.
fn hyperelliptic_a_sequences(bounds: &SchurBounds) -> Vec<Case> {
    (1..=bounds.max_genus as u32)
        .map(|g| {
            Case::new(
                Suite::Schur,
                "hyperelliptic-a-sequence",
                format!("genus={g}"),
                move || {
                    let gs = GapSequence::from_ns(2, 2 * g + 1).expect("coprime");
                    for k in 0..=g {
                        let a = gs.a_sequence(k as usize).expect("k in range");
                        let m = (g - k + 1) / 2;
                        let expected: Vec<u32> = (0..m).map(|j| 2 * g - 2 * k - 1 - 4 * j).collect();
                        if a.entries != expected {
                            return Outcome::holds(false)
                                .input("genus", g)
                                .input("k", k)
                                .witness(format!("{:?} != {:?}", a.entries, expected));
                        }
                    }
                    Outcome::holds(true).input("genus", g)
                },
            )
        })
        .collect()
}

/// Partitions of `(n, s)` gap sequences are self-conjugate.
fn ns_self_conjugate(bounds: &SchurBounds) -> Vec<Case> {
    bounds
        .ns_types
        .iter()
        .map(|&(n, s)| {
            Case::new(
                Suite::Schur,
                "ns-self-conjugate",
                format!("n={n} s={s}"),
                move || {
                    let g = GapSequence::from_ns(n, s).expect("coprime");
                    let lambda = g.partition();
                    let genus_ok = g.genus() as u32 == (n - 1) * (s - 1) / 2;
                    Outcome::holds(genus_ok && lambda.conjugate() == lambda)
                        .input("n", n)
                        .input("s", s)
                        .input("lambda", &lambda)
                },
            )
        })
        .collect()
}

/// `s_λ(t)` for a gap-sequence partition has no `t_j` with `j` a nongap.
fn gap_independence(gaps: &[GapSequence]) -> Vec<Case> {
    gaps.iter()
        .cloned()
        .map(|g| {
            Case::new(Suite::Schur, "gap-independence", format!("gaps={g}"), move || {
                let lambda = g.partition();
                let s = schur_t(&lambda);
                for j in 1..=lambda.weight() {
                    if g.is_gap(j) {
                        continue;
                    }
                    let d = s.derivative(Var::T(j));
                    if !d.is_zero() {
                        return Outcome::vanishes(&d)
                            .input("gaps", &g)
                            .input("nongap", j);
                    }
                }
                Outcome::holds(true).input("gaps", &g).input("lambda", &lambda)
            })
        })
        .collect()
}

fn gap_k_range(g: &GapSequence, bounds: &SchurBounds) -> core::ops::RangeInclusive<usize> {
    0..=g.genus().min(bounds.max_points)
}

/// `∂_{a^(k)} s_λ(Σ_{i≤k} [x_i]) = c_k s_{(λ_1..λ_k)}(Σ_{i≤k} [x_i])`, with
/// the sign `c_k` given by the permutation formula.
fn gap_derivative(gaps: &[GapSequence], bounds: &SchurBounds) -> Vec<Case> {
    let mut out = Vec::new();
    for g in gaps {
        for k in gap_k_range(g, bounds) {
            let g = g.clone();
            out.push(Case::new(
                Suite::Schur,
                "gap-derivative",
                format!("gaps={g} k={k}"),
                move || {
                    let lambda = g.partition();
                    let a = g.a_sequence(k).expect("k in range");
                    let alpha = DerivationIndex::from_indices(&a.entries);
                    let pts = positive_points(k);
                    let lhs = at(&lambda, &alpha, &pts);
                    let rhs = schur_at(&lambda.head(k), &pts);
                    let ck = int(i64::from(g.c_k_sign(k).expect("k in range")));
                    Outcome::proportional(&lhs, &rhs, &ck)
                        .input("gaps", &g)
                        .input("k", k)
                        .input("alpha", &alpha)
                },
            ));
        }
    }
    out
}

/// `μ` agreeing with `λ` after position `k`, `μ ≠ λ`, `|μ| ≤ |λ| + extra`.
fn extensions_after(lambda: &Partition, k: usize, extra: u32) -> Vec<Partition> {
    let head = lambda.head(k);
    let mut out = Vec::new();
    for e in 1..=extra {
        for nu in partitions_of(head.weight() + e) {
            let fits = nu.len() == k
                && (1..=k).all(|i| nu.part(i) >= lambda.part(i))
                && nu.part(k) >= lambda.part(k + 1);
            if fits {
                let mut parts = nu.parts().to_vec();
                parts.extend_from_slice(&lambda.parts()[k..]);
                out.push(Partition::new(&parts).expect("still decreasing"));
            }
        }
    }
    out
}

/// The same derivative kills the extra rows of any `μ` that agrees with `λ`
/// after position `k`, with the same sign `c_k`.
fn gap_derivative_extended(gaps: &[GapSequence], bounds: &SchurBounds) -> Vec<Case> {
    let mut out = Vec::new();
    for g in gaps {
        for k in gap_k_range(g, bounds).filter(|&k| k >= 1) {
            let g = g.clone();
            let extra = bounds.extra_weight;
            out.push(Case::new(
                Suite::Schur,
                "gap-derivative-extended",
                format!("gaps={g} k={k}"),
                move || {
                    let lambda = g.partition();
                    let a = g.a_sequence(k).expect("k in range");
                    let alpha = DerivationIndex::from_indices(&a.entries);
                    let pts = positive_points(k);
                    let ck = int(i64::from(g.c_k_sign(k).expect("k in range")));
                    let mus = extensions_after(&lambda, k, extra);
                    for mu in &mus {
                        let lhs = at(mu, &alpha, &pts);
                        let rhs = schur_at(&mu.head(k), &pts);
                        let o = Outcome::proportional(&lhs, &rhs, &ck);
                        if !o.equal {
                            return o.input("gaps", &g).input("k", k).input("mu", mu);
                        }
                    }
                    Outcome {
                        expected_constant: Some(ck),
                        ..Outcome::holds(true)
                    }
                    .input("gaps", &g)
                    .input("k", k)
                    .note(format!("{} partitions mu", mus.len()))
                },
            ));
        }
    }
    out
}

/// `∂_1^{N_{λ,k}} s_λ(Σ_{i≤k} [x_i]) = c'_{λ,k} s_{(λ_1..λ_k)}(Σ_{i≤k} [x_i])`.
fn t1_derivative(gaps: &[GapSequence], bounds: &SchurBounds) -> Vec<Case> {
    let mut lambdas = nonempty_up_to(bounds.max_weight);
    for g in gaps {
        let p = g.partition();
        if !lambdas.contains(&p) {
            lambdas.push(p);
        }
    }
    let mut out = Vec::new();
    for lambda in lambdas {
        for k in 0..=lambda.len().min(bounds.max_points) {
            let lambda = lambda.clone();
            out.push(Case::new(
                Suite::Schur,
                "t1-derivative",
                format!("lambda={lambda} k={k}"),
                move || {
                    let alpha = DerivationIndex::power(1, lambda.n_tail(k));
                    let pts = positive_points(k);
                    let lhs = at(&lambda, &alpha, &pts);
                    let rhs = schur_at(&lambda.head(k), &pts);
                    let c = c_prime(&lambda, k).expect("k in range");
                    Outcome::proportional(&lhs, &rhs, &c)
                        .input("lambda", &lambda)
                        .input("k", k)
                })
            );
        }
    }
    out
}

/// `s_λ([x] - Σ_{i≤l'} [x_i]) = (-1)^{N_{λ,1}} s_{λ̃'}(Σ [x_i]) ∏ (x - x_j)`
/// with `l' = λ_1` and `x = x_{l'+1}`.
fn dual_difference(bounds: &SchurBounds) -> Vec<Case> {
    nonempty_up_to(bounds.max_weight)
        .into_iter()
        .map(|lambda| {
            Case::new(Suite::Schur, "dual-difference", format!("lambda={lambda}"), move || {
                let lp = lambda.part(1);
                let x = Polynomial::x(lp + 1);
                let mut pts: Vec<SignedPoint> = vec![SignedPoint::plus(lp + 1)];
                pts.extend((1..=lp).map(SignedPoint::minus));
                let lhs = schur_at(&lambda, &pts);
                let mut rhs = schur_at(&lambda.tilde_conjugate(), &positive_points(lp as usize));
                for j in 1..=lp {
                    rhs = &rhs * &(&x - &Polynomial::x(j));
                }
                let sign = sign_pow(u64::from(lambda.n_tail(1)));
                Outcome::proportional(&lhs, &rhs, &sign).input("lambda", &lambda)
            })
        })
        .collect()
}

/// `s_λ([x_1] - [x_2]) ≠ 0` exactly when `λ` is a hook.
fn hook_criterion(bounds: &SchurBounds) -> Vec<Case> {
    partitions_up_to(bounds.max_weight)
        .into_iter()
        .map(|lambda| {
            Case::new(Suite::Schur, "hook-criterion", format!("lambda={lambda}"), move || {
                let v = schur_at(&lambda, &difference_points());
                let nonzero = !v.is_zero();
                let ok = nonzero == lambda.is_hook();
                let out = Outcome::holds(ok)
                    .input("lambda", &lambda)
                    .input("hook", lambda.is_hook())
                    .input("nonzero", nonzero);
                if ok {
                    out
                } else {
                    out.witness(&v)
                }
            })
        })
        .collect()
}

fn with_gap_partitions(gaps: &[GapSequence], max_weight: u32) -> Vec<Partition> {
    let mut lambdas = nonempty_up_to(max_weight);
    for g in gaps {
        let p = g.partition();
        if !lambdas.contains(&p) {
            lambdas.push(p);
        }
    }
    lambdas
}

/// `∂_1^n s_λ([x_1] - [x_2]) = 0` for `n < N'_{λ,1}`.
fn difference_vanishing(gaps: &[GapSequence], bounds: &SchurBounds) -> Vec<Case> {
    with_gap_partitions(gaps, bounds.max_weight)
        .into_iter()
        .map(|lambda| {
            Case::new(Suite::Schur, "difference-vanishing", format!("lambda={lambda}"), move || {
                let np = lambda.n_prime().expect("nonempty");
                let mut spec = Specialization::exhaustive(&difference_points());
                let mut sum = SchurSum::single(&lambda);
                for n in 0..np {
                    let v = spec.eval(&sum);
                    if !v.is_zero() {
                        return Outcome::vanishes(&v).input("lambda", &lambda).input("n", n);
                    }
                    sum = sum.derive_once(1);
                }
                Outcome::holds(true).input("lambda", &lambda).input("n_prime", np)
            })
        })
        .collect()
}

/// `∂_1^{N'_{λ,1}} s_λ([x_1] - [x_2]) = c_λ s_{(λ_1,1^{l-1})}([x_1] - [x_2])`.
fn difference_derivative(gaps: &[GapSequence], bounds: &SchurBounds) -> Vec<Case> {
    with_gap_partitions(gaps, bounds.max_weight)
        .into_iter()
        .map(|lambda| {
            Case::new(Suite::Schur, "difference-derivative", format!("lambda={lambda}"), move || {
                let np = lambda.n_prime().expect("nonempty");
                let pts = difference_points();
                let lhs = at(&lambda, &DerivationIndex::power(1, np), &pts);
                let rhs = schur_at(&Partition::hook(lambda.part(1), lambda.len()), &pts);
                let c = c_lambda(&lambda).expect("nonempty");
                Outcome::proportional(&lhs, &rhs, &c).input("lambda", &lambda)
            })
        })
        .collect()
}

/// The same identity for `μ = (μ_1, λ_2, ..., λ_l, 1^{l'-l})`, with the
/// constant of `λ`.
fn difference_derivative_extended(bounds: &SchurBounds) -> Vec<Case> {
    let extra = bounds.extra_weight;
    nonempty_up_to(bounds.max_weight)
        .into_iter()
        .map(|lambda| {
            Case::new(
                Suite::Schur,
                "difference-derivative-extended",
                format!("lambda={lambda}"),
                move || {
                    let np = lambda.n_prime().expect("nonempty");
                    let c = c_lambda(&lambda).expect("nonempty");
                    let pts = difference_points();
                    let alpha = DerivationIndex::power(1, np);
                    let l = lambda.len();
                    let mut count = 0;
                    for grow in 0..=extra {
                        for longer in 0..=extra - grow {
                            if grow == 0 && longer == 0 {
                                continue;
                            }
                            let mut parts = lambda.parts().to_vec();
                            parts[0] += grow;
                            parts.extend(core::iter::repeat(1).take(longer as usize));
                            let mu = Partition::new(&parts).expect("decreasing");
                            let lhs = at(&mu, &alpha, &pts);
                            let rhs = schur_at(&Partition::hook(mu.part(1), l + longer as usize), &pts);
                            let o = Outcome::proportional(&lhs, &rhs, &c);
                            count += 1;
                            if !o.equal {
                                return o.input("lambda", &lambda).input("mu", &mu);
                            }
                        }
                    }
                    Outcome {
                        expected_constant: Some(c),
                        ..Outcome::holds(true)
                    }
                    .input("lambda", &lambda)
                    .note(format!("{count} partitions mu"))
                },
            )
        })
        .collect()
}

/// `s_{(m,1^{n-1})}([x_1] - [x_2]) = (-1)^{n-1} x_1^{m-1} x_2^{n-1} (x_1 - x_2)`,
/// by direct substitution.
fn hook_closed_form(bounds: &SchurBounds) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 1..=bounds.max_weight {
        for n in 1..=bounds.max_weight + 1 - m {
            out.push(Case::new(
                Suite::Schur,
                "hook-closed-form",
                format!("m={m} n={n}"),
                move || {
                    let hook = Partition::hook(m, n as usize);
                    let lhs = abel_subs(&schur_t(&hook), &difference_points());
                    let x1 = Polynomial::x(1);
                    let x2 = Polynomial::x(2);
                    let rhs = (&(&x1.pow(m - 1) * &x2.pow(n - 1)) * &(&x1 - &x2))
                        .scale(&sign_pow(u64::from(n - 1)));
                    Outcome::identical(&lhs, &rhs).input("m", m).input("n", n)
                },
            ));
        }
    }
    out
}
