//! Verification suites: every identity is turned into a list of independent
//! [`Case`]s, each of which computes both sides exactly and returns a
//! [`Report`].
//!
//! Cases are enumerated in a fixed order and carry no shared state, so they
//! may be run in any order or in parallel; merging the reports in case order
//! gives the same output every time.

pub mod curve_suite;
pub mod schur_suite;
pub mod tau_suite;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::semigroup::GapSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Schur,
    Tau,
    Curve,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Schur => "schur",
            Suite::Tau => "tau",
            Suite::Curve => "curve",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// The identity as literally stated does not hold, but a documented
    /// corrected form does. Counted separately; not a failure.
    Flagged,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        }
    }
}

/// Result of one case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub check: &'static str,
    pub case: String,
    pub inputs: Vec<(String, String)>,
    pub expected_constant: Option<Rational>,
    pub constant_found: Option<Rational>,
    pub equal: bool,
    pub status: Status,
    /// Rendering of `lhs - expected·rhs` (or another residue) on failure.
    pub witness: Option<String>,
    pub note: Option<String>,
}

/// What a case computes; the case adds its identity to make a [`Report`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub inputs: Vec<(String, String)>,
    pub expected_constant: Option<Rational>,
    pub constant_found: Option<Rational>,
    pub equal: bool,
    pub flagged: bool,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn holds(equal: bool) -> Self {
        Outcome {
            equal,
            ..Outcome::default()
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn note(mut self, note: impl ToString) -> Self {
        self.note = Some(note.to_string());
        self
    }

    pub fn witness(mut self, w: impl ToString) -> Self {
        self.witness = Some(truncate_witness(w.to_string()));
        self
    }

    /// `lhs = expected·rhs`, recording the constant actually relating the two
    /// sides when they are proportional.
    pub fn proportional(lhs: &Polynomial, rhs: &Polynomial, expected: &Rational) -> Self {
        let found = ratio(lhs, rhs);
        let target = rhs.scale(expected);
        let equal = *lhs == target;
        let mut out = Outcome {
            expected_constant: Some(expected.clone()),
            constant_found: found,
            equal,
            ..Outcome::default()
        };
        if !equal {
            out = out.witness(lhs - &target);
        }
        out
    }

    /// `lhs = rhs` exactly.
    pub fn identical(lhs: &Polynomial, rhs: &Polynomial) -> Self {
        let equal = lhs == rhs;
        let out = Outcome::holds(equal);
        if equal {
            out
        } else {
            out.witness(lhs - rhs)
        }
    }

    /// `value = 0`.
    pub fn vanishes(value: &Polynomial) -> Self {
        Outcome::identical(value, &Polynomial::zero())
    }
}

fn truncate_witness(mut s: String) -> String {
    const LIMIT: usize = 1000;
    if s.len() > LIMIT {
        let mut cut = LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str(" ...");
    }
    s
}

/// `c` with `lhs = c·rhs`, if any. Undefined when `rhs` is zero.
pub fn ratio(lhs: &Polynomial, rhs: &Polynomial) -> Option<Rational> {
    let (m, c) = rhs.leading()?;
    let r = lhs.coefficient(m) / c;
    if rhs.scale(&r) == *lhs {
        Some(r)
    } else {
        None
    }
}

type Job = Box<dyn Fn() -> Outcome + Send + Sync>;

/// One independent unit of verification work.
pub struct Case {
    pub suite: Suite,
    pub check: &'static str,
    pub label: String,
    job: Job,
}

impl Case {
    pub fn new<F>(suite: Suite, check: &'static str, label: String, job: F) -> Self
    where
        F: Fn() -> Outcome + Send + Sync + 'static,
    {
        Case {
            suite,
            check,
            label,
            job: Box::new(job),
        }
    }

    pub fn run(&self) -> Report {
        let out = (self.job)();
        let status = if out.flagged {
            Status::Flagged
        } else if out.equal {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            suite: self.suite,
            check: self.check,
            case: self.label.clone(),
            inputs: out.inputs,
            expected_constant: out.expected_constant,
            constant_found: out.constant_found,
            equal: out.equal,
            status,
            witness: out.witness,
            note: out.note,
        }
    }
}

impl fmt::Debug for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Case")
            .field("suite", &self.suite)
            .field("check", &self.check)
            .field("label", &self.label)
            .finish()
    }
}

/// The gap sequences a suite runs over: all of genus `1..=max_genus`, then
/// any listed `(n, s)` types of larger genus, without repetition.
pub fn gap_sequences(max_genus: usize, ns_types: &[(u32, u32)]) -> Vec<GapSequence> {
    let mut out: Vec<GapSequence> = (1..=max_genus).flat_map(GapSequence::all_of_genus).collect();
    for &(n, s) in ns_types {
        if let Ok(g) = GapSequence::from_ns(n, s) {
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// Summary counts over a list of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub flagged: usize,
}

impl Tally {
    pub fn of(reports: &[Report]) -> Tally {
        let mut t = Tally::default();
        for r in reports {
            t.total += 1;
            match r.status {
                Status::Pass => t.passed += 1,
                Status::Fail => t.failed += 1,
                Status::Flagged => t.flagged += 1,
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn ratios() {
        let a = Polynomial::t(1);
        assert_eq!(ratio(&a.scale(&int(3)), &a), Some(int(3)));
        assert_eq!(ratio(&Polynomial::t(2), &a), None);
        assert_eq!(ratio(&a, &Polynomial::zero()), None);
        assert_eq!(ratio(&Polynomial::zero(), &a), Some(int(0)));
    }

    #[test]
    fn outcomes() {
        let a = Polynomial::t(1);
        let o = Outcome::proportional(&a.scale(&int(2)), &a, &int(2));
        assert!(o.equal);
        assert_eq!(o.constant_found, Some(int(2)));
        let o = Outcome::proportional(&a, &a, &int(2));
        assert!(!o.equal);
        assert_eq!(o.witness.as_deref(), Some("-t1"));
    }

    #[test]
    fn suite_gap_sequences() {
        let gs = gap_sequences(2, &[(2, 5), (3, 4)]);
        let listed: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
        assert_eq!(listed, ["1", "1,2", "1,3", "1,2,5"]);
    }
}
