//! Expansions at infinity of `(n, s)` curves with random coefficients.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::schur_suite::NS_TYPES;
use super::{Case, Outcome, Suite};
use crate::curve::CurveModel;
use crate::seed::case_seed;
use crate::semigroup::GapSequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveBounds {
    pub ns_types: Vec<(u32, u32)>,
    /// Random coefficient sets per type.
    pub coefficient_sets: u32,
    /// Expansions are computed modulo `z^precision`.
    pub precision: i64,
    pub top_seed: u64,
}

impl Default for CurveBounds {
    fn default() -> Self {
        CurveBounds {
            ns_types: NS_TYPES.to_vec(),
            coefficient_sets: 3,
            precision: 16,
            top_seed: 0,
        }
    }
}

pub fn curve_seed(top: u64, n: u32, s: u32, index: u32) -> u64 {
    case_seed(top, &format!("curve/n={n},s={s},set={index}"))
}

pub fn cases(bounds: &CurveBounds) -> Vec<Case> {
    let mut out = Vec::new();
    for &(n, s) in &bounds.ns_types {
        out.push(gap_sequence_case(n, s));
    }
    for &(n, s) in &bounds.ns_types {
        for index in 0..bounds.coefficient_sets {
            let seed = curve_seed(bounds.top_seed, n, s, index);
            let Ok(model) = CurveModel::random(n, s, seed) else {
                continue;
            };
            let label = format!("n={n} s={s} set={index}");
            out.extend(model_cases(&label, &model, bounds.precision, Some(seed)));
        }
    }
    out
}

/// The pole orders of `φ_i` are the nongaps of type `(n, s)` in order, and
/// the remaining orders are its gaps.
fn gap_sequence_case(n: u32, s: u32) -> Case {
    Case::new(Suite::Curve, "curve-gap-sequence", format!("n={n} s={s}"), move || {
        let model = CurveModel::new(n, s).expect("valid type");
        let expected = GapSequence::from_ns(n, s).expect("valid type");
        let found = model.gap_sequence();
        let count = expected.gaps().last().map_or(1, |&m| m as usize + 2);
        let orders: Vec<u32> = model
            .phi_basis(count)
            .into_iter()
            .map(|(i, j)| n * i + s * j)
            .collect();
        let nongaps: Vec<u32> = (1..=count).map(|i| expected.nongap(i)).collect();
        let ok = found == expected && orders == nongaps;
        let o = Outcome::holds(ok)
            .input("n", n)
            .input("s", s)
            .input("gaps", &found);
        if ok {
            o
        } else {
            o.witness(format!("orders {orders:?}, nongaps {nongaps:?}"))
        }
    })
}

/// Residual, differential and precision checks for one curve.
pub fn model_cases(label: &str, model: &CurveModel, precision: i64, seed: Option<u64>) -> Vec<Case> {
    let tag = move |o: Outcome, m: &CurveModel| {
        let o = o
            .input("n", m.n())
            .input("s", m.s())
            .input("precision", precision)
            .input("coefficients", render_coeffs(m));
        match seed {
            Some(s) => o.input("seed", s),
            None => o,
        }
    };
    let mut out = Vec::new();

    let m = model.clone();
    out.push(Case::new(Suite::Curve, "curve-residual", String::from(label), move || {
        let data = m.expand_y(precision);
        let r = m.residual(&data);
        let ok = r.is_zero() && r.precision() >= precision;
        let o = Outcome::holds(ok).note(format!("zero modulo z^{}", r.precision()));
        tag(if ok { o } else { o.witness(&r) }, &m)
    }));

    let m = model.clone();
    out.push(Case::new(Suite::Curve, "curve-differentials", String::from(label), move || {
        let gaps = m.gap_sequence();
        let diffs = match m.differentials(precision) {
            Ok(d) => d,
            Err(e) => return tag(Outcome::holds(false).note(e), &m),
        };
        for d in &diffs {
            let want = i64::from(d.gap) - 1;
            let lead_one = d.leading().is_some_and(|c| *c == crate::rational::int(1));
            if d.valuation() != Some(want) || !lead_one {
                return tag(
                    Outcome::holds(false)
                        .input("gap", d.gap)
                        .witness(&d.series),
                    &m,
                );
            }
        }
        let o = Outcome::holds(diffs.len() == gaps.genus())
            .note(format!("{} differentials z^(w_i-1)(1+O(z))", diffs.len()));
        tag(o, &m)
    }));

    let m = model.clone();
    out.push(Case::new(
        Suite::Curve,
        "curve-precision-consistency",
        String::from(label),
        move || {
            let low = m.normalized_root(precision);
            let high = m.normalized_root(2 * precision).truncate(precision);
            let ok = low == high;
            let o = Outcome::holds(ok);
            tag(if ok { o } else { o.witness(&(&low - &high)) }, &m)
        },
    ));
    out
}

fn render_coeffs(m: &CurveModel) -> String {
    let parts: Vec<String> = m.coeffs().map(|((i, j), c)| format!("{i},{j}:{c}")).collect();
    parts.join(" ")
}
