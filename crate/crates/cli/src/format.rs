//! JSON forms of reports, constants tables, tau series and curves.
//!
//! Rationals are strings `"p/q"` (or `"p"` for integers) so that no value
//! goes through a float.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use schurtau_core::check::{Report, Tally};
use schurtau_core::rational::parse_rational;
use schurtau_core::semigroup::ConstantsTable;
use schurtau_core::{CurveModel, Partition, Rational, TauSeries, TruncatedSeries};

pub fn rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_q(text: &str) -> Result<Rational> {
    parse_rational(text).ok_or_else(|| anyhow!("not a rational number: {text:?}"))
}

fn opt_q(q: &Option<Rational>) -> Value {
    q.as_ref().map_or(Value::Null, |q| Value::String(rational(q)))
}

/// One report as a JSON object with a fixed key order.
pub fn report(r: &Report, elapsed_ms: Option<f64>) -> Value {
    let mut inputs = Map::new();
    for (k, v) in &r.inputs {
        inputs.insert(k.clone(), Value::String(v.clone()));
    }
    let mut obj = Map::new();
    obj.insert("suite".into(), r.suite.name().into());
    obj.insert("check".into(), r.check.into());
    obj.insert("case".into(), r.case.clone().into());
    obj.insert("status".into(), r.status.name().into());
    obj.insert("equal".into(), r.equal.into());
    obj.insert("inputs".into(), Value::Object(inputs));
    obj.insert("expected_constant".into(), opt_q(&r.expected_constant));
    obj.insert("constant_found".into(), opt_q(&r.constant_found));
    obj.insert("witness".into(), r.witness.clone().map_or(Value::Null, Value::String));
    obj.insert("note".into(), r.note.clone().map_or(Value::Null, Value::String));
    if let Some(ms) = elapsed_ms {
        obj.insert("elapsed_ms".into(), json!(ms));
    }
    Value::Object(obj)
}

pub fn summary(t: &Tally, config: Value) -> Value {
    json!({
        "summary": {
            "total": t.total,
            "passed": t.passed,
            "failed": t.failed,
            "flagged": t.flagged,
            "config": config,
        }
    })
}

pub fn constants(t: &ConstantsTable) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "k": r.k,
                "a": r.a.entries,
                "m": r.a.m(),
                "c": r.c_sign,
                "c_prime": rational(&r.c_prime),
            })
        })
        .collect();
    let b: Vec<Value> = t
        .b
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "b": rational(&r.b),
                "b_prime": r.b_prime.as_ref().map(rational),
            })
        })
        .collect();
    json!({
        "gaps": t.gaps,
        "genus": t.genus,
        "partition": t.partition.parts(),
        "n_prime": t.n_prime,
        "c_lambda": rational(&t.c_lambda),
        "rows": rows,
        "b": b,
    })
}

pub fn constants_text(t: &ConstantsTable) -> String {
    let mut out = String::new();
    let gaps: Vec<String> = t.gaps.iter().map(u32::to_string).collect();
    out.push_str(&format!("gaps      {}\n", gaps.join(",")));
    out.push_str(&format!("genus     {}\n", t.genus));
    out.push_str(&format!("partition {}\n", t.partition.render()));
    out.push_str(&format!("N'        {}\n", t.n_prime));
    out.push_str(&format!("c_lambda  {}\n", t.c_lambda));
    out.push_str("k  a^(k)            c_k  c'_k\n");
    for r in &t.rows {
        let a: Vec<String> = r.a.entries.iter().map(u32::to_string).collect();
        out.push_str(&format!(
            "{:<2} {:<16} {:>3}  {}\n",
            r.k,
            format!("({})", a.join(",")),
            r.c_sign,
            r.c_prime
        ));
    }
    out.push_str("n  b_n        b'_n\n");
    for r in &t.b {
        let bp = r.b_prime.as_ref().map_or("-".to_string(), rational);
        out.push_str(&format!("{:<2} {:<10} {}\n", r.n, r.b.to_string(), bp));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauTerm {
    pub partition: Vec<u32>,
    pub xi: String,
}

/// `{base, cutoff, terms: [{partition, xi}]}`, terms in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauFile {
    pub base: Vec<u32>,
    pub cutoff: u32,
    pub terms: Vec<TauTerm>,
}

impl TauFile {
    pub fn from_series(tau: &TauSeries) -> Self {
        TauFile {
            base: tau.base().parts().to_vec(),
            cutoff: tau.cutoff(),
            terms: tau
                .terms()
                .map(|(mu, xi)| TauTerm {
                    partition: mu.parts().to_vec(),
                    xi: rational(xi),
                })
                .collect(),
        }
    }

    pub fn to_series(&self) -> Result<TauSeries> {
        let base = Partition::new(&self.base).context("base")?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mu = Partition::new(&t.partition).context("term partition")?;
            terms.push((mu, parse_q(&t.xi)?));
        }
        Ok(TauSeries::from_terms(base, self.cutoff, terms)?)
    }
}

/// `{n, s, coeffs: {"i,j": "p/q"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    pub n: u32,
    pub s: u32,
    #[serde(default)]
    pub coeffs: BTreeMap<String, String>,
}

impl CurveFile {
    pub fn from_model(m: &CurveModel) -> Self {
        CurveFile {
            n: m.n(),
            s: m.s(),
            coeffs: m
                .coeffs()
                .map(|((i, j), c)| (format!("{i},{j}"), rational(c)))
                .collect(),
        }
    }

    pub fn to_model(&self) -> Result<CurveModel> {
        let mut m = CurveModel::new(self.n, self.s)?;
        for (key, value) in &self.coeffs {
            let Some((i, j)) = key.split_once(',') else {
                bail!("coefficient key {key:?} is not \"i,j\"");
            };
            let i: u32 = i.trim().parse().with_context(|| format!("key {key:?}"))?;
            let j: u32 = j.trim().parse().with_context(|| format!("key {key:?}"))?;
            m.set(i, j, parse_q(value)?)?;
        }
        Ok(m)
    }
}

pub fn series(s: &TruncatedSeries) -> Value {
    let terms: Vec<Value> = s
        .nonzero_terms()
        .map(|(e, c)| json!([e, rational(c)]))
        .collect();
    json!({
        "text": s.render(),
        "valuation": s.valuation(),
        "precision": series_precision(s),
        "terms": terms,
    })
}

fn series_precision(s: &TruncatedSeries) -> Value {
    if s.is_exact() {
        Value::Null
    } else {
        json!(s.precision())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use schurtau_core::rational::frac;
    use schurtau_core::tau::random_tau;

    #[test]
    fn tau_round_trip() {
        let base = Partition::new(&[2, 1]).unwrap();
        let tau = random_tau(&base, 5, 4).unwrap();
        let file = TauFile::from_series(&tau);
        let text = serde_json::to_string(&file).unwrap();
        let back: TauFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_series().unwrap(), tau);
    }

    #[test]
    fn curve_round_trip() {
        let mut m = CurveModel::new(3, 4).unwrap();
        m.set(1, 1, frac(-2, 3)).unwrap();
        let file = CurveFile::from_model(&m);
        assert_eq!(file.coeffs["1,1"], "-2/3");
        assert_eq!(file.to_model().unwrap(), m);
        let bad = CurveFile {
            coeffs: [("3,3".to_string(), "1".to_string())].into(),
            ..file
        };
        assert!(bad.to_model().is_err());
    }

    #[test]
    fn rationals_as_strings() {
        assert_eq!(rational(&frac(6, -4)), "-3/2");
        assert_eq!(parse_q(" 4/2 ").unwrap(), frac(2, 1));
        assert!(parse_q("1/0").is_err());
    }
}
