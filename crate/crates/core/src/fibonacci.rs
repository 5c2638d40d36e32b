//! Fibonacci numbers (`F_1 = F_2 = 1`) and the identity
//! `sum_{k=0}^n C(n+k, n-k) = F_{2n+1}`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{usage, Result};
use crate::symfun::symfun_closed;

/// `F_1, ..., F_len`, stored 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibSequence {
    values: Vec<BigUint>,
}

impl FibSequence {
    pub fn up_to(len: usize) -> Self {
        let mut values = Vec::with_capacity(len);
        let (mut a, mut b) = (BigUint::one(), BigUint::one());
        for _ in 0..len {
            values.push(a.clone());
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        FibSequence { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `F_i`, 1-based.
    pub fn get(&self, i: usize) -> Option<&BigUint> {
        i.checked_sub(1).and_then(|j| self.values.get(j))
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

pub fn fib(i: usize) -> Result<BigUint> {
    if i == 0 {
        return usage("Fibonacci index starts at 1");
    }
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 1..i {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// Checks `sum_{k=0}^n S_k^n = F_{2n+1}`, and its restatement
/// `sum_{k=1}^n S_k^n + 1 = F_{2n+1}`.
pub fn fibonacci_identity(n: usize) -> bool {
    let terms: Vec<BigUint> = match (0..=n).map(|k| symfun_closed(n, k)).collect() {
        Ok(t) => t,
        Err(_) => return false,
    };
    let Ok(target) = fib(2 * n + 1) else {
        return false;
    };
    let full: BigUint = terms.iter().sum();
    let without_s0: BigUint = terms[1..].iter().fold(BigUint::zero(), |acc, t| acc + t);
    full == target && without_s0 + 1u32 == target
}
