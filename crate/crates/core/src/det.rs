//! Determinants of the Δ/Θ families: closed forms and a fraction-free
//! elimination oracle.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{usage, Result};
use crate::matrix::{build_c_matrix, build_min_matrix, ExactMatrix, Increments};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DetMethod {
    ClosedForm,
    Bareiss,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetResult {
    pub value: BigInt,
    pub method: DetMethod,
}

impl DetResult {
    pub fn closed(value: BigInt) -> Self {
        DetResult {
            value,
            method: DetMethod::ClosedForm,
        }
    }

    pub fn bareiss(m: &ExactMatrix) -> Self {
        DetResult {
            value: det_bareiss(m),
            method: DetMethod::Bareiss,
        }
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every division in the elimination is exact. A zero pivot is replaced by
/// swapping in a lower row (flipping the sign); if the whole column below is
/// zero the determinant is 0. Matrices whose entries fit in `i128` are first
/// eliminated in checked machine arithmetic, restarting in big integers on
/// the first overflow.
pub fn det_bareiss(m: &ExactMatrix) -> BigInt {
    let small: Option<Vec<i128>> = m.rows().flatten().map(|e| e.to_i128()).collect();
    if let Some(mut work) = small {
        if let Some(d) = bareiss_i128(&mut work, m.dim()) {
            return BigInt::from(d);
        }
    }
    let mut work: Vec<BigInt> = m.rows().flatten().cloned().collect();
    bareiss_big(&mut work, m.dim())
}

fn bareiss_i128(a: &mut [i128], n: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k * n + k] == 0 {
            let swap = (k + 1..n).find(|&i| a[i * n + k] != 0);
            match swap {
                Some(i) => {
                    for c in 0..n {
                        a.swap(k * n + c, i * n + c);
                    }
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let lead = a[i * n + k];
            for j in k + 1..n {
                let num = pivot
                    .checked_mul(a[i * n + j])?
                    .checked_sub(lead.checked_mul(a[k * n + j])?)?;
                debug_assert_eq!(num % prev, 0, "inexact Bareiss division");
                a[i * n + j] = num / prev;
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    a[(n - 1) * n + (n - 1)].checked_mul(sign)
}

fn bareiss_big(a: &mut [BigInt], n: usize) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k * n + k].is_zero() {
            let swap = (k + 1..n).find(|&i| !a[i * n + k].is_zero());
            match swap {
                Some(i) => {
                    for c in 0..n {
                        a.swap(k * n + c, i * n + c);
                    }
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            if lead.is_zero() {
                // Row already reduced in this column: the update is a plain
                // rescale by pivot / prev.
                for j in k + 1..n {
                    let v = &pivot * &a[i * n + j];
                    a[i * n + j] = v / &prev;
                }
                continue;
            }
            for j in k + 1..n {
                let num = &pivot * &a[i * n + j] - &lead * &a[k * n + j];
                debug_assert!((&num % &prev).is_zero(), "inexact Bareiss division");
                a[i * n + j] = num / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = a[(n - 1) * n + (n - 1)].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `Δ_n(i_1, ..., i_n) = i_1 i_2 ... i_n`.
pub fn delta_det_closed(inc: &Increments) -> BigInt {
    inc.values().iter().product()
}

/// `Θ_n(i_1, ..., i_{n+1}) = i_1 * i_3 * ... * i_{n+1}`; `i_2` does not appear.
pub fn theta_det_closed(inc: &Increments) -> Result<BigInt> {
    if inc.len() < 3 {
        return usage(format!(
            "Θ needs at least 3 increments, got {}",
            inc.len()
        ));
    }
    let v = inc.values();
    Ok(&v[0] * v[2..].iter().product::<BigInt>())
}

/// `|A_n| = 1`.
pub fn det_min_matrix(n: usize) -> Result<BigInt> {
    if n == 0 {
        return usage("A_n needs n >= 1");
    }
    Ok(BigInt::one())
}

/// `|C_{n,k}| = k`.
pub fn det_c_matrix(n: usize, k: usize) -> Result<BigInt> {
    if k <= 1 || k >= n {
        return usage(format!("C_{{n,k}} needs 1 < k < n, got n={n}, k={k}"));
    }
    Ok(BigInt::from(k))
}

/// Bareiss determinant of `A_n`, validating `n` like the constructor.
pub fn det_min_matrix_bareiss(n: usize) -> Result<BigInt> {
    Ok(det_bareiss(&build_min_matrix(n)?))
}

pub fn det_c_matrix_bareiss(n: usize, k: usize) -> Result<BigInt> {
    Ok(det_bareiss(&build_c_matrix(n, k)?))
}
