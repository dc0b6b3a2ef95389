//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! The oracles here (exponential generating function, tableau sums, direct
//! substitution) are written independently of the library routes they check.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};

use serde_json::Value;

use schurtau::commands::{verify, SuiteArg, VerifyArgs};
use schurtau_core::check::ratio;
use schurtau_core::partition::partitions_up_to;
use schurtau_core::poly::{Monomial, Var};
use schurtau_core::rational::{factorial_q, int};
use schurtau_core::schur::{abel_subs, derive, difference_points, p_list, positive_points, schur_t, schur_x};
use schurtau_core::semigroup::{c_lambda, c_prime};
use schurtau_core::{DerivationIndex, Partition, Polynomial};

struct Run {
    bytes: Vec<u8>,
    code: i32,
    reports: Vec<Value>,
    summary: Value,
}

fn run_verify(args: &VerifyArgs) -> Run {
    let mut bytes = Vec::new();
    let code = verify(args, &mut bytes).expect("verify runs");
    let text = std::str::from_utf8(&bytes).expect("utf-8");
    let mut reports: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).expect("json line")).collect();
    let summary = reports.pop().expect("summary line");
    Run {
        bytes,
        code,
        reports,
        summary,
    }
}

fn all_args(jobs: usize) -> VerifyArgs {
    VerifyArgs {
        jobs: Some(jobs),
        ..VerifyArgs::new(SuiteArg::All)
    }
}

fn of_suite<'a>(run: &'a Run, suite: &str) -> Vec<&'a Value> {
    run.reports.iter().filter(|r| r["suite"] == suite).collect()
}

fn status(r: &Value) -> &str {
    r["status"].as_str().unwrap_or("")
}

fn first_bad<'a>(rs: &[&'a Value], ok: impl Fn(&Value) -> bool) -> Option<&'a Value> {
    rs.iter().copied().find(|r| !ok(r))
}

fn describe(r: &Value) -> String {
    format!("{} {} ({})", r["check"], r["case"], r["witness"])
}

fn part(text: &str) -> Partition {
    text.parse().expect("partition")
}

fn criterion_schur(run: &Run) -> Result<String, String> {
    let rs = of_suite(run, "schur");
    if let Some(r) = first_bad(&rs, |r| status(r) == "pass") {
        return Err(describe(r));
    }
    let checks: BTreeSet<&str> = rs.iter().filter_map(|r| r["check"].as_str()).collect();
    let required = [
        "gap-derivative",
        "gap-derivative-extended",
        "t1-derivative",
        "dual-difference",
        "hook-criterion",
        "difference-vanishing",
        "difference-derivative",
        "difference-derivative-extended",
        "hook-closed-form",
        "length-leading-term",
        "length-vanishing",
        "gap-independence",
        "weight-vanishing",
        "row-reduction",
        "a-sequence",
        "bracket-reduction",
    ];
    if let Some(c) = required.iter().find(|c| !checks.contains(*c)) {
        return Err(format!("check {c} missing"));
    }
    let gap_cases: BTreeSet<String> = rs
        .iter()
        .filter(|r| r["check"] == "gap-derivative")
        .filter_map(|r| r["inputs"]["gaps"].as_str().map(String::from))
        .collect();
    for want in ["1,2,3,7", "1", "1,3", "1,2,5", "1,3,5,7,9,11", "1,2,3,6,7,11"] {
        if !gap_cases.contains(want) {
            return Err(format!("gap sequence {want} not covered"));
        }
    }
    let genus6 = gap_cases.iter().filter(|g| g.split(',').count() == 6).count();
    let weights: BTreeSet<u32> = rs
        .iter()
        .filter(|r| r["check"] == "t1-derivative")
        .filter_map(|r| r["inputs"]["lambda"].as_str().map(|l| part(l).weight()))
        .collect();
    if !(1..=8).all(|w| weights.contains(&w)) {
        return Err("t1-derivative does not reach |λ| = 8".into());
    }
    if let Some(r) = rs.iter().find(|r| {
        r["check"] == "gap-derivative" && r["inputs"]["k"].as_str().map_or(false, |k| k.parse::<u32>().unwrap() > 3)
    }) {
        return Err(format!("k above 3 in {}", r["case"]));
    }
    Ok(format!("{} cases, {} gap sequences ({} of genus 6)", rs.len(), gap_cases.len(), genus6))
}

fn criterion_constants(run: &Run) -> Result<String, String> {
    let rs: Vec<&Value> = of_suite(run, "schur")
        .into_iter()
        .filter(|r| {
            ["gap-derivative", "t1-derivative", "difference-derivative", "dual-difference"]
                .iter()
                .any(|c| r["check"] == *c)
        })
        .collect();
    if let Some(r) = first_bad(&rs, |r| {
        !r["expected_constant"].is_null() && r["expected_constant"] == r["constant_found"]
    }) {
        return Err(format!(
            "{}: expected {} found {}",
            describe(r),
            r["expected_constant"],
            r["constant_found"]
        ));
    }
    // ∂_1^3 s_{(2,1)} at t = 0
    let l21 = part("2,1");
    let d = derive(&schur_t(&l21), &DerivationIndex::power(1, 3));
    let found = ratio(&abel_subs(&d, &[]), &Polynomial::one());
    if found != Some(int(2)) || c_prime(&l21, 0) != Ok(int(2)) {
        return Err(format!("c'_(2,1),0: extracted {found:?}"));
    }
    // ∂_1^{N'} s_{(3,3,2)} at [x_1] - [x_2] against s_{(3,1,1)} there
    let l332 = part("3,3,2");
    let np = l332.n_prime().unwrap();
    let lhs = abel_subs(&derive(&schur_t(&l332), &DerivationIndex::power(1, np)), &difference_points());
    let rhs = abel_subs(&schur_t(&Partition::hook(3, 3)), &difference_points());
    let found = ratio(&lhs, &rhs);
    if found != Some(int(2)) || c_lambda(&l332) != Ok(int(2)) {
        return Err(format!("c_(3,3,2): extracted {found:?}"));
    }
    Ok(format!("{} constants matched, c'_(2,1),0 = 2, c_(3,3,2) = 2", rs.len()))
}

fn criterion_tau(run: &Run) -> Result<String, String> {
    let rs = of_suite(run, "tau");
    let bad = first_bad(&rs, |r| {
        status(r) == "pass" || (status(r) == "flagged" && r["check"] == "tau-hook-leading-sign")
    });
    if let Some(r) = bad {
        return Err(describe(r));
    }
    let checks: BTreeSet<&str> = rs.iter().filter_map(|r| r["check"].as_str()).collect();
    for want in [
        "tau-weight-vanishing",
        "tau-gap-derivative",
        "tau-truncation-leading",
        "tau-gap-recursion",
        "tau-t1-derivative",
        "tau-t1-recursion",
        "tau-difference-vanishing",
        "tau-difference-derivative",
        "tau-hook-expansion",
        "tau-degeneration",
    ] {
        if !checks.contains(want) {
            return Err(format!("check {want} missing"));
        }
    }
    let seeds: BTreeSet<&str> = rs
        .iter()
        .filter(|r| r["check"] == "tau-gap-derivative" && r["inputs"]["gaps"] == "1,2,3,7")
        .filter_map(|r| r["inputs"]["seed"].as_str())
        .collect();
    if seeds.len() < 3 {
        return Err(format!("only {} seeds for gaps 1,2,3,7", seeds.len()));
    }
    let cutoff_ok = rs.iter().filter(|r| r["check"] == "tau-gap-derivative").all(|r| {
        let l = part(r["inputs"]["lambda"].as_str().unwrap());
        r["inputs"]["cutoff"].as_str() == Some(&(l.weight() + 6).to_string())
    });
    if !cutoff_ok {
        return Err("cutoff is not |λ| + 6".into());
    }
    let degenerate = rs.iter().filter(|r| r["check"] == "tau-degeneration").count();
    Ok(format!("{} cases, {degenerate} degenerate series identical to the Schur values", rs.len()))
}

fn criterion_flag(run: &Run) -> Result<String, String> {
    let rs: Vec<&Value> = of_suite(run, "tau")
        .into_iter()
        .filter(|r| r["check"] == "tau-hook-leading-sign")
        .collect();
    let mut flagged = 0;
    for r in &rs {
        let l = part(r["inputs"]["lambda"].as_str().unwrap());
        let differ = (l.part(1) + l.len() as u32) % 2 == 1;
        let want = if differ { "flagged" } else { "pass" };
        if status(r) != want {
            return Err(format!("{} is {} for λ = {l}", r["case"], status(r)));
        }
        flagged += usize::from(differ);
    }
    if flagged == 0 {
        return Err("no case exercises the sign discrepancy".into());
    }
    Ok(format!("{flagged} of {} cases flagged, exactly those with λ_1 - l odd", rs.len()))
}

fn criterion_curve(run: &Run) -> Result<String, String> {
    let rs = of_suite(run, "curve");
    if let Some(r) = first_bad(&rs, |r| status(r) == "pass") {
        return Err(describe(r));
    }
    let types: BTreeSet<(String, String)> = rs
        .iter()
        .filter(|r| r["check"] == "curve-differentials")
        .map(|r| (r["inputs"]["n"].to_string(), r["inputs"]["s"].to_string()))
        .collect();
    let residuals = rs.iter().filter(|r| r["check"] == "curve-residual").count();
    let prec_ok = rs
        .iter()
        .filter(|r| r["check"] == "curve-residual")
        .all(|r| r["inputs"]["precision"] == "16");
    if types.len() != 7 || residuals != 21 || !prec_ok {
        return Err(format!("{} types, {residuals} residual cases", types.len()));
    }
    Ok(format!("{} cases over 7 types at P = 16", rs.len()))
}

/// Coefficients of `exp(Σ_{i≤n} t_i z^i)` up to `z^n`, by summing powers.
fn exponential_oracle(n: usize) -> Vec<Polynomial> {
    let mut s = vec![Polynomial::zero(); n + 1];
    for (i, c) in s.iter_mut().enumerate().skip(1) {
        *c = Polynomial::t(i as u32);
    }
    let mut out = vec![Polynomial::zero(); n + 1];
    let mut power = vec![Polynomial::zero(); n + 1];
    power[0] = Polynomial::one();
    for m in 0..=n {
        let inv = factorial_q(m as u64).recip();
        for e in 0..=n {
            out[e] += &power[e].scale(&inv);
        }
        let mut next = vec![Polynomial::zero(); n + 1];
        for a in 0..=n {
            for b in 1..=n - a {
                if !power[a].is_zero() {
                    next[a + b] += &(&power[a] * &s[b]);
                }
            }
        }
        power = next;
    }
    out
}

/// `Σ_T x^T` over semistandard tableaux of shape `λ` with entries `1..=k`.
fn tableau_oracle(lambda: &Partition, k: u32) -> Polynomial {
    fn fill(shape: &[u32], k: u32, cell: usize, rows: &mut Vec<Vec<u32>>, acc: &mut Polynomial) {
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        if cell == cells.len() {
            let mut m = Monomial::one();
            for row in rows.iter() {
                for &v in row {
                    m = m.mul(&Monomial::var(Var::X(v)));
                }
            }
            acc.add_term(m, int(1));
            return;
        }
        let (r, c) = cells[cell];
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=k {
            rows[r].push(v);
            fill(shape, k, cell + 1, rows, acc);
            rows[r].pop();
        }
    }
    let mut acc = Polynomial::zero();
    let mut rows = vec![Vec::new(); lambda.len()];
    fill(lambda.parts(), k, 0, &mut rows, &mut acc);
    acc
}

fn criterion_oracles() -> Result<String, String> {
    let n = 12;
    let lib = p_list(n);
    let oracle = exponential_oracle(n);
    if let Some(i) = (0..=n).find(|&i| lib[i] != oracle[i]) {
        return Err(format!("p_{i} differs from the exponential expansion"));
    }
    let mut compared = 0;
    for lambda in partitions_up_to(8) {
        for k in 0..=4usize {
            let via_t = abel_subs(&schur_t(&lambda), &positive_points(k));
            let tableaux = tableau_oracle(&lambda, k as u32);
            if via_t != tableaux {
                return Err(format!("λ = {lambda}, k = {k}: substitution differs from tableaux"));
            }
            if lambda.len() <= k {
                let bialternant = schur_x(&lambda, k).map_err(|e| e.to_string())?;
                if via_t != bialternant {
                    return Err(format!("λ = {lambda}, k = {k}: Jacobi–Trudi differs from bialternant"));
                }
            }
            compared += 1;
        }
    }
    Ok(format!("p_0..p_{n} match; {compared} (λ, k) pairs match tableaux and bialternants"))
}

fn criterion_determinism(base: &Run) -> Result<String, String> {
    let serial = run_verify(&all_args(1));
    if serial.bytes != base.bytes {
        return Err("verify all differs between --jobs 1 and --jobs 4".into());
    }
    let exe = env!("CARGO_BIN_EXE_schurtau");
    let cli = |jobs: &str| {
        Command::new(exe)
            .args(["verify", "curve", "--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = cli("1")?;
    let b = cli("3")?;
    let lib = run_verify(&VerifyArgs {
        jobs: Some(2),
        ..VerifyArgs::new(SuiteArg::Curve)
    });
    if a.stdout != b.stdout || a.stdout != lib.bytes || !a.status.success() {
        return Err("binary output differs across --jobs or from the library".into());
    }
    Ok(format!("{} bytes identical at --jobs 1 and 4; binary identical at --jobs 1 and 3", base.bytes.len()))
}

fn main() -> ExitCode {
    let base = run_verify(&all_args(4));
    let mut failed = 0;
    let mut report = |n: u32, name: &str, result: Result<String, String>| {
        match result {
            Ok(detail) => println!("PASS criterion {n} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n} {name}: {why}");
            }
        }
    };
    report(1, "schur suite", criterion_schur(&base));
    report(2, "constant cross-validation", criterion_constants(&base));
    report(3, "tau suite", criterion_tau(&base));
    report(4, "hook leading sign flagged", criterion_flag(&base));
    report(5, "curve suite", criterion_curve(&base));
    report(6, "oracle equivalence", criterion_oracles());
    report(7, "determinism", criterion_determinism(&base));
    let exit_ok = base.code == 0 && base.summary["summary"]["failed"] == 0;
    println!(
        "verify all: {} cases, {} failed, {} flagged, exit {}",
        base.summary["summary"]["total"], base.summary["summary"]["failed"], base.summary["summary"]["flagged"], base.code
    );
    if failed == 0 && exit_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
