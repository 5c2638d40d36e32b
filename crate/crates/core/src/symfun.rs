//! Elementary symmetric functions `S_k^n` of the eigenvalues of `A_n`.
//!
//! The eigenvalues themselves are never computed. `S_k^n` is obtained six
//! ways:
//!
//! - `Closed`: `C(n+k, n-k)`.
//! - `Minors`: sum of all `k x k` principal minors of `A_n` (exponential).
//! - `Nested`: the nested sum over compositions `(i_1, ..., i_k)` with
//!   `i_1 + ... + i_k <= n` of `i_1 i_2 ... i_k`.
//! - `Rec6`: `S_k^n = sum_{i=1}^{n-k+1} i S_{k-1}^{n-i}`.
//! - `Rec7`: `S_k^n = S_k^{n-1} + sum_{i=1}^{n-k+1} S_{k-1}^{n-i}`.
//! - `Ratio`: `S_k^n = (n+k)/(n-k) S_k^{n-1}`, started from `S_k^k = 1`.
//!
//! `S_0^n = 1` for every method.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::det::det_bareiss;
use crate::error::{usage, Error, Result};
use crate::matrix::{build_min_matrix, ExactMatrix};

/// Largest `n` for which principal-minor enumeration runs by default.
pub const DEFAULT_MINOR_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymMethod {
    Closed,
    Minors,
    Nested,
    Rec6,
    Rec7,
    Ratio,
}

impl SymMethod {
    pub const ALL: [SymMethod; 6] = [
        SymMethod::Closed,
        SymMethod::Minors,
        SymMethod::Nested,
        SymMethod::Rec6,
        SymMethod::Rec7,
        SymMethod::Ratio,
    ];

    /// Every method except exponential minor enumeration.
    pub const POLYNOMIAL: [SymMethod; 5] = [
        SymMethod::Closed,
        SymMethod::Nested,
        SymMethod::Rec6,
        SymMethod::Rec7,
        SymMethod::Ratio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SymMethod::Closed => "closed",
            SymMethod::Minors => "minors",
            SymMethod::Nested => "nested",
            SymMethod::Rec6 => "rec6",
            SymMethod::Rec7 => "rec7",
            SymMethod::Ratio => "ratio",
        }
    }

    /// Single `S_k^n` by this method. Minors use [`DEFAULT_MINOR_CAP`].
    pub fn eval(self, n: usize, k: usize) -> Result<BigUint> {
        match self {
            SymMethod::Closed => symfun_closed(n, k),
            SymMethod::Minors => symfun_minor_sum(n, k),
            SymMethod::Nested => symfun_nested(n, k),
            SymMethod::Rec6 => symfun_rec6(n, k),
            SymMethod::Rec7 => symfun_rec7(n, k),
            SymMethod::Ratio => symfun_ratio(n, k),
        }
    }
}

impl fmt::Display for SymMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SymMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown method {s:?}")))
    }
}

/// Immutable table of `S_k^n` for `0 <= k <= n <= n_max`, filled bottom-up
/// by a single method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTable {
    n_max: usize,
    method: SymMethod,
    rows: Vec<Vec<BigUint>>,
}

impl SymTable {
    pub fn build(n_max: usize, method: SymMethod) -> Result<Self> {
        Self::build_with_cap(n_max, method, DEFAULT_MINOR_CAP)
    }

    pub fn build_with_cap(n_max: usize, method: SymMethod, minor_cap: usize) -> Result<Self> {
        let rows = match method {
            SymMethod::Closed => closed_rows(n_max),
            SymMethod::Minors => minor_rows(n_max, minor_cap)?,
            SymMethod::Nested => nested_rows(n_max),
            SymMethod::Rec6 => rec6_rows(n_max),
            SymMethod::Rec7 => rec7_rows(n_max),
            SymMethod::Ratio => ratio_rows(n_max)?,
        };
        Ok(SymTable {
            n_max,
            method,
            rows,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn method(&self) -> SymMethod {
        self.method
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigUint> {
        self.rows.get(n)?.get(k)
    }

    /// `S_0^n, ..., S_n^n`.
    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        self.rows.get(n).map(|r| r.as_slice())
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k > n {
        return usage(format!("S_k^n needs 0 <= k <= n, got n={n}, k={k}"));
    }
    Ok(())
}

/// `C(a, b)` for `a >= 0`; zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Falling-factorial binomial `a (a-1) ... (a-b+1) / b!` for any integer
/// `a`, and zero for `b < 0`. Agrees with [`binomial`] whenever `a >= 0`.
pub fn binomial_signed(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 {
        return BigInt::from_biguint(Sign::Plus, binomial(a as u64, b));
    }
    // C(a, b) = (-1)^b C(b - a - 1, b) for negative a.
    let magnitude = BigInt::from_biguint(Sign::Plus, binomial((b - a - 1) as u64, b));
    if b % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// `S_k^n = C(n+k, n-k)`.
pub fn symfun_closed(n: usize, k: usize) -> Result<BigUint> {
    check_nk(n, k)?;
    Ok(binomial((n + k) as u64, (n - k) as i64))
}

fn closed_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    (0..=n_max)
        .map(|n| {
            (0..=n)
                .map(|k| binomial((n + k) as u64, (n - k) as i64))
                .collect()
        })
        .collect()
}

/// Sum of the determinants of all `k x k` principal submatrices.
pub(crate) fn principal_minor_sum(m: &ExactMatrix, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    (1..=m.dim())
        .combinations(k)
        .map(|idx| {
            let sub = m
                .principal_submatrix(&idx)
                .expect("combination indices are in range");
            det_bareiss(&sub)
        })
        .sum()
}

fn minor_sum_nonneg(m: &ExactMatrix, k: usize) -> Result<BigUint> {
    principal_minor_sum(m, k)
        .to_biguint()
        .ok_or_else(|| Error::Invariant(format!("negative principal minor sum at k={k}")))
}

/// `S_k^n` as the sum of all `k x k` principal minors of `A_n`, with the
/// default brute-force cap.
pub fn symfun_minor_sum(n: usize, k: usize) -> Result<BigUint> {
    symfun_minor_sum_with_cap(n, k, DEFAULT_MINOR_CAP)
}

pub fn symfun_minor_sum_with_cap(n: usize, k: usize, cap: usize) -> Result<BigUint> {
    check_nk(n, k)?;
    if n > cap {
        return Err(Error::Resource(format!(
            "principal-minor enumeration is capped at n={cap}, got n={n}"
        )));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    minor_sum_nonneg(&build_min_matrix(n)?, k)
}

fn minor_rows(n_max: usize, cap: usize) -> Result<Vec<Vec<BigUint>>> {
    if n_max > cap {
        return Err(Error::Resource(format!(
            "principal-minor enumeration is capped at n={cap}, got n={n_max}"
        )));
    }
    let mut rows = vec![vec![BigUint::one()]];
    for n in 1..=n_max {
        let a = build_min_matrix(n)?;
        let row = (0..=n)
            .map(|k| minor_sum_nonneg(&a, k))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// `S_k^n` from the nested sum over compositions of total at most `n`.
pub fn symfun_nested(n: usize, k: usize) -> Result<BigUint> {
    check_nk(n, k)?;
    Ok(nested_rows_upto(n, k).swap_remove(n))
}

fn nested_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    let per_k: Vec<Vec<BigUint>> = (0..=n_max).map(|k| nested_rows_upto(n_max, k)).collect();
    (0..=n_max)
        .map(|n| (0..=n).map(|k| per_k[k][n].clone()).collect())
        .collect()
}

/// Returns `v` with `v[n] = S_k^n` for `n` in `0..=n_max` (zero for `n < k`).
///
/// The nested sums are evaluated from the outermost index inward: after
/// fixing `j` parts, `weight[s]` is the sum of `i_1 ... i_j` over every
/// choice of the first `j` indices with `i_1 + ... + i_j = s`. The innermost
/// upper limit `n - i_1 - ... - i_{k-1}` makes the total at most `n`, so the
/// answer is a prefix sum of the final weights.
fn nested_rows_upto(n_max: usize, k: usize) -> Vec<BigUint> {
    let mut weight = vec![BigUint::zero(); n_max + 1];
    weight[0] = BigUint::one();
    for j in 1..=k {
        let mut next = vec![BigUint::zero(); n_max + 1];
        // each of the j parts is at least 1
        for s in (j - 1)..n_max {
            if weight[s].is_zero() {
                continue;
            }
            for part in 1..=(n_max - s) {
                next[s + part] += &weight[s] * part;
            }
        }
        weight = next;
    }
    let mut running = BigUint::zero();
    weight
        .into_iter()
        .map(|w| {
            running += w;
            running.clone()
        })
        .collect()
}

/// `S_k^n` through the weighted recurrence over `S_{k-1}`.
pub fn symfun_rec6(n: usize, k: usize) -> Result<BigUint> {
    check_nk(n, k)?;
    Ok(rec6_rows(n)[n][k].clone())
}

fn rec6_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigUint::one()];
        for k in 1..=n {
            let s = (1..=n - k + 1)
                .map(|i| &rows[n - i][k - 1] * i)
                .sum::<BigUint>();
            row.push(s);
        }
        rows.push(row);
    }
    rows
}

/// `S_k^n` through the recurrence in `n`. For `k = n` the term `S_n^{n-1}`
/// is undefined and the value is `|A_n| = 1`.
pub fn symfun_rec7(n: usize, k: usize) -> Result<BigUint> {
    check_nk(n, k)?;
    Ok(rec7_rows(n)[n][k].clone())
}

fn rec7_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigUint::one()];
        for k in 1..=n {
            if k == n {
                row.push(BigUint::one());
                continue;
            }
            let tail = (1..=n - k + 1)
                .map(|i| &rows[n - i][k - 1])
                .sum::<BigUint>();
            row.push(&rows[n - 1][k] + tail);
        }
        rows.push(row);
    }
    rows
}

/// `S_k^n` by the ratio recurrence from `S_k^k = 1`. Each step divides
/// exactly; a remainder is reported as [`Error::Invariant`].
pub fn symfun_ratio(n: usize, k: usize) -> Result<BigUint> {
    check_nk(n, k)?;
    ratio_column(n, k).map(|mut c| c.swap_remove(n - k))
}

/// `[S_k^k, S_k^{k+1}, ..., S_k^{n_max}]`.
fn ratio_column(n_max: usize, k: usize) -> Result<Vec<BigUint>> {
    let mut col = Vec::with_capacity(n_max + 1 - k);
    let mut s = BigUint::one();
    col.push(s.clone());
    if k == 0 {
        // S_0^m = 1; the ratio (m+0)/(m-0) is 1 as well.
        col.resize(n_max + 1, s);
        return Ok(col);
    }
    for m in k + 1..=n_max {
        let num = s * (m + k);
        let (q, r) = num.div_rem(&BigUint::from(m - k));
        if !r.is_zero() {
            return Err(Error::Invariant(format!(
                "inexact ratio step at n={m}, k={k}: remainder {r}"
            )));
        }
        s = q;
        col.push(s.clone());
    }
    Ok(col)
}

fn ratio_rows(n_max: usize) -> Result<Vec<Vec<BigUint>>> {
    let cols = (0..=n_max)
        .map(|k| ratio_column(n_max, k))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..=n_max)
        .map(|n| (0..=n).map(|k| cols[k][n - k].clone()).collect())
        .collect())
}

/// Checks `C(n+k, n-k) = C(n+k-1, n-k-1) + sum_{i=1}^{n-k+1} C(n+k-1-i, n-k+1-i)`.
pub fn binomial_identity_check(n: usize, k: usize) -> bool {
    if k > n {
        return false;
    }
    let (n, k) = (n as i64, k as i64);
    let lhs = binomial_signed(n + k, n - k);
    let rhs = binomial_signed(n + k - 1, n - k - 1)
        + (1..=n - k + 1)
            .map(|i| binomial_signed(n + k - 1 - i, n - k + 1 - i))
            .sum::<BigInt>();
    lhs == rhs
}

/// Characteristic polynomial `det(λI - A_n) = sum_k coeffs[k] λ^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub n: usize,
    /// `c_0, ..., c_n`, with `c_n = 1` and `c_{n-k} = (-1)^k S_k^n`.
    pub coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Assembles the polynomial from `S_0^n, ..., S_n^n` by Vieta's formulas.
    pub fn from_symmetric_functions(sym: &[BigUint]) -> Result<Self> {
        if sym.len() < 2 {
            return usage("characteristic polynomial needs n >= 1");
        }
        let n = sym.len() - 1;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (k, s) in sym.iter().enumerate() {
            let v = BigInt::from_biguint(Sign::Plus, s.clone());
            coeffs[n - k] = if k % 2 == 0 { v } else { -v };
        }
        Ok(CharPoly { n, coeffs })
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (pow, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == Sign::Minus;
            let mag = c.magnitude();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = pow == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match pow {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{pow}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial of `A_n` from the closed-form `S_k^n`.
pub fn charpoly(n: usize) -> Result<CharPoly> {
    if n == 0 {
        return usage("characteristic polynomial needs n >= 1");
    }
    let sym: Vec<BigUint> = (0..=n)
        .map(|k| symfun_closed(n, k))
        .collect::<Result<_>>()?;
    CharPoly::from_symmetric_functions(&sym)
}

/// `λI - A_n`, the matrix whose determinant the characteristic polynomial
/// evaluates.
pub fn shifted_min_matrix(n: usize, lambda: &BigInt) -> Result<ExactMatrix> {
    let a = build_min_matrix(n)?;
    ExactMatrix::from_fn(n, |r, c| {
        let diag = if r == c { lambda.clone() } else { BigInt::zero() };
        diag - a.entry(r, c)
    })
}
