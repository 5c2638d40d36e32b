//! Identity sweeps that back the `verify` command. Each check records how
//! many cases it ran and the first counterexample, if any.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::det::{delta_det_closed, det_bareiss, theta_det_closed};
use crate::error::{Error, Result};
use crate::fibonacci::{fibonacci_identity, FibSequence};
use crate::matrix::{
    build_c_matrix, build_delta_matrix, build_min_matrix, build_theta_matrix, Increments,
};
use crate::symfun::{
    binomial, binomial_identity_check, charpoly, shifted_min_matrix, symfun_closed, SymMethod,
    SymTable, DEFAULT_MINOR_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Dets,
    Symfun,
    Binomial,
    Fibonacci,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Dets, Suite::Symfun, Suite::Binomial, Suite::Fibonacci];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Dets => "dets",
            Suite::Symfun => "symfun",
            Suite::Binomial => "binomial",
            Suite::Fibonacci => "fibonacci",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub seed: u64,
    pub minor_cap: usize,
    /// Random increment lists per determinant family.
    pub random_cases: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 12,
            seed: 0,
            minor_cap: DEFAULT_MINOR_CAP,
            random_cases: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs a named check over `cases`, stopping at the first failure.
struct Check {
    suite: Suite,
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
    note: Option<String>,
}

impl Check {
    fn new(suite: Suite, name: &'static str) -> Self {
        Check {
            suite,
            name,
            cases: 0,
            counterexample: None,
            note: None,
        }
    }

    /// Records one case; returns false once a counterexample is held.
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        if self.counterexample.is_some() {
            return false;
        }
        self.cases += 1;
        if !ok {
            self.counterexample = Some(describe());
        }
        ok
    }

    fn fail(&mut self, msg: String) {
        if self.counterexample.is_none() {
            self.counterexample = Some(msg);
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            suite: self.suite,
            name: self.name.to_string(),
            cases: self.cases,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
            note: self.note,
        }
    }
}

pub fn run(suites: &[Suite], opts: &VerifyOptions) -> Report {
    let mut report = Report::default();
    for suite in suites {
        report.checks.extend(match suite {
            Suite::Dets => dets(opts),
            Suite::Symfun => symfun(opts),
            Suite::Binomial => binomials(opts),
            Suite::Fibonacci => fibonacci(opts),
        });
    }
    report
}

fn random_increments(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Increments {
    let values: Vec<i64> = (0..len).map(|_| rng.random_range(lo..=hi)).collect();
    Increments::from_i64s(&values).expect("len >= 1")
}

fn fmt_inc(inc: &Increments) -> String {
    let parts: Vec<String> = inc.values().iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

fn dets(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let n_max = opts.n_max;
    let mut out = Vec::new();

    let mut c = Check::new(Suite::Dets, "det_min_matrix_is_one");
    for n in 1..=n_max {
        let d = det_bareiss(&build_min_matrix(n).expect("n >= 1"));
        if !c.case(d.is_one(), || format!("n={n}: det={d}")) {
            break;
        }
    }
    out.push(c.finish());

    let mut c = Check::new(Suite::Dets, "det_c_matrix_is_k");
    'outer: for n in 3..=n_max {
        for k in 2..n {
            let d = det_bareiss(&build_c_matrix(n, k).expect("1 < k < n"));
            if !c.case(d == BigInt::from(k), || format!("n={n} k={k}: det={d}")) {
                break 'outer;
            }
        }
    }
    if n_max < 3 {
        c = c.note("vacuous: C_{n,k} needs n >= 3");
    }
    out.push(c.finish());

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let ranges = [(1i64, 9i64), (-4, 4)];

    let mut c = Check::new(Suite::Dets, "delta_closed_equals_bareiss");
    if n_max >= 1 {
        for case in 0..opts.random_cases {
            let (lo, hi) = ranges[case % 2];
            let len = rng.random_range(1..=n_max);
            let inc = random_increments(&mut rng, len, lo, hi);
            let closed = delta_det_closed(&inc);
            let oracle = det_bareiss(&build_delta_matrix(&inc).expect("nonempty"));
            if !c.case(closed == oracle, || {
                format!("{}: closed={closed} bareiss={oracle}", fmt_inc(&inc))
            }) {
                break;
            }
        }
    } else {
        c = c.note("vacuous: n-max is 0");
    }
    out.push(c.finish());

    let mut c = Check::new(Suite::Dets, "theta_closed_equals_bareiss");
    if n_max >= 2 {
        for case in 0..opts.random_cases {
            let (lo, hi) = ranges[case % 2];
            let n = rng.random_range(2..=n_max);
            let inc = random_increments(&mut rng, n + 1, lo, hi);
            let closed = theta_det_closed(&inc).expect("len >= 3");
            let oracle = det_bareiss(&build_theta_matrix(&inc).expect("len >= 3"));
            if !c.case(closed == oracle, || {
                format!("{}: closed={closed} bareiss={oracle}", fmt_inc(&inc))
            }) {
                break;
            }
        }
    } else {
        c = c.note("vacuous: Θ_n needs n >= 2");
    }
    out.push(c.finish());

    out
}

fn build_tables(
    c: &mut Check,
    n_max: usize,
    methods: &[SymMethod],
    cap: usize,
) -> Option<Vec<SymTable>> {
    let mut tables = Vec::with_capacity(methods.len());
    for &m in methods {
        match SymTable::build_with_cap(n_max, m, cap) {
            Ok(t) => tables.push(t),
            Err(e) => {
                c.fail(format!("{m} table to n={n_max}: {e}"));
                return None;
            }
        }
    }
    Some(tables)
}

/// Compares every table against the closed form for `n` in `range`.
fn agreement(c: &mut Check, tables: &[SymTable], range: std::ops::RangeInclusive<usize>) {
    for n in range {
        for k in 1..=n {
            let expected = binomial((n + k) as u64, (n - k) as i64);
            for t in tables {
                let got = t.get(n, k).cloned().unwrap_or_default();
                if !c.case(got == expected, || {
                    format!("n={n} k={k}: {}={got}, expected {expected}", t.method())
                }) {
                    return;
                }
            }
        }
    }
}

fn symfun(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let n_max = opts.n_max;
    let brute_max = n_max.min(opts.minor_cap);
    let mut out = Vec::new();

    let mut c = Check::new(Suite::Symfun, "six_way_agreement");
    if let Some(tables) = build_tables(&mut c, brute_max, &SymMethod::ALL, opts.minor_cap) {
        agreement(&mut c, &tables, 1..=brute_max);
    }
    if n_max == 0 {
        c = c.note("vacuous: n-max is 0");
    }
    out.push(c.finish());

    let mut c = Check::new(Suite::Symfun, "five_way_agreement_beyond_minor_cap");
    if n_max > brute_max {
        if let Some(tables) = build_tables(&mut c, n_max, &SymMethod::POLYNOMIAL, opts.minor_cap)
        {
            agreement(&mut c, &tables, brute_max + 1..=n_max);
        }
    } else {
        c = c.note(format!(
            "vacuous: n-max {n_max} is within the minor cap {}",
            opts.minor_cap
        ));
    }
    out.push(c.finish());

    let mut c = Check::new(Suite::Symfun, "trace_and_top_identities");
    if let Some(tables) = build_tables(&mut c, n_max, &SymMethod::POLYNOMIAL, opts.minor_cap) {
        'outer: for n in 1..=n_max {
            let trace = BigUint::from(n * (n + 1) / 2);
            for t in &tables {
                let s1 = t.get(n, 1).cloned().unwrap_or_default();
                let sn = t.get(n, n).cloned().unwrap_or_default();
                if !c.case(s1 == trace && sn.is_one(), || {
                    format!("n={n} {}: S_1={s1} (expected {trace}), S_n={sn}", t.method())
                }) {
                    break 'outer;
                }
            }
        }
    }
    out.push(c.finish());

    let mut c = Check::new(Suite::Symfun, "ratio_divisions_exact");
    match SymTable::build(n_max, SymMethod::Ratio) {
        Ok(_) => {
            c.cases = (1..=n_max).map(|n| n.saturating_sub(1)).sum();
        }
        Err(e) => c.fail(e.to_string()),
    }
    out.push(c.finish());

    let mut c = Check::new(Suite::Symfun, "charpoly_vieta_vs_bareiss");
    'outer: for n in 1..=n_max {
        let p = charpoly(n).expect("n >= 1");
        for lambda in -2i64..=2 {
            let x = BigInt::from(lambda);
            let value = p.eval(&x);
            let oracle = det_bareiss(&shifted_min_matrix(n, &x).expect("n >= 1"));
            if !c.case(value == oracle, || {
                format!("n={n} λ={lambda}: p(λ)={value} det={oracle}")
            }) {
                break 'outer;
            }
        }
    }
    out.push(c.finish());

    out
}

fn binomials(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let mut c = Check::new(Suite::Binomial, "eq8_binomial_recurrence");
    'outer: for n in 0..=opts.n_max {
        for k in 0..=n {
            if !c.case(binomial_identity_check(n, k), || format!("n={n} k={k}")) {
                break 'outer;
            }
        }
    }
    out.push(c.finish());

    let mut c = Check::new(Suite::Binomial, "reflection_2k");
    'outer: for n in 0..=opts.n_max {
        for k in 0..=n {
            let a = symfun_closed(n, k).expect("k <= n");
            let b = binomial((n + k) as u64, (2 * k) as i64);
            if !c.case(a == b, || format!("n={n} k={k}: {a} vs {b}")) {
                break 'outer;
            }
        }
    }
    out.push(c.finish());
    out
}

fn fibonacci(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let mut c = Check::new(Suite::Fibonacci, "sum_equals_f_2n_plus_1");
    for n in 0..=opts.n_max {
        if !c.case(fibonacci_identity(n), || format!("n={n}")) {
            break;
        }
    }
    out.push(c.finish());

    let mut c = Check::new(Suite::Fibonacci, "cassini");
    let seq = FibSequence::up_to(2 * opts.n_max + 2);
    for i in 2..seq.len() {
        let f = |j: usize| BigInt::from(seq.get(j).expect("in range").clone());
        let lhs = f(i - 1) * f(i + 1) - f(i) * f(i);
        let expected = BigInt::from(if i % 2 == 0 { 1 } else { -1 });
        if !c.case(lhs == expected, || format!("i={i}: {lhs}")) {
            break;
        }
    }
    out.push(c.finish());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(n_max: usize) -> VerifyOptions {
        VerifyOptions {
            n_max,
            random_cases: 40,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn all_suites_pass_at_twelve() {
        let report = run(&Suite::ALL, &opts(12));
        for c in &report.checks {
            assert!(c.passed, "{c:?}");
        }
        assert!(report.passed());
    }

    #[test]
    fn dets_at_one_is_vacuous_but_passes() {
        let report = run(&[Suite::Dets], &opts(1));
        assert!(report.passed());
        let theta = report
            .checks
            .iter()
            .find(|c| c.name == "theta_closed_equals_bareiss")
            .unwrap();
        assert_eq!(theta.cases, 0);
        assert!(theta.note.as_deref().unwrap().contains("vacuous"));
    }

    #[test]
    fn beyond_cap_runs_five_way() {
        let report = run(
            &[Suite::Symfun],
            &VerifyOptions {
                n_max: 9,
                minor_cap: 6,
                ..opts(9)
            },
        );
        assert!(report.passed());
        let five = report
            .checks
            .iter()
            .find(|c| c.name == "five_way_agreement_beyond_minor_cap")
            .unwrap();
        assert!(five.cases > 0);
    }

    #[test]
    fn failures_carry_counterexample() {
        let mut c = Check::new(Suite::Dets, "demo");
        assert!(c.case(true, || unreachable!()));
        assert!(!c.case(false, || "boom".to_string()));
        assert!(!c.case(true, || unreachable!()));
        let out = c.finish();
        assert!(!out.passed);
        assert_eq!(out.cases, 2);
        assert_eq!(out.counterexample.as_deref(), Some("boom"));
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("fibonacci".parse::<Suite>().unwrap(), Suite::Fibonacci);
        assert!("all".parse::<Suite>().is_err());
    }
}
