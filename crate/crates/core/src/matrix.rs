//! Construction of `A_n`, `C_{n,k}` and the prefix-sum matrices behind
//! `Δ_n` and `Θ_n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{usage, Error, Result};

/// Ordered increments `(i_1, ..., i_n)`. Any integers are allowed; the
/// positive case is the one where the Δ matrices are positive definite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Increments(Vec<BigInt>);

impl Increments {
    pub fn new(values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return usage("increments must be nonempty");
        }
        Ok(Increments(values))
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// `n` unit increments; `build_delta_matrix(&ones(n)) == A_n`.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![BigInt::one(); n])
    }

    /// `(k, 1, ..., 1)` of length `len`; its Δ matrix is `C_{len+k-1,k}`.
    pub fn shifted(k: i64, len: usize) -> Result<Self> {
        if len == 0 {
            return usage("increments must be nonempty");
        }
        let mut values = vec![BigInt::one(); len];
        values[0] = BigInt::from(k);
        Self::new(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }

    /// True when every increment is at least 1.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|v| v.is_positive())
    }
}

impl std::str::FromStr for Increments {
    type Err = Error;

    /// Parses a comma-separated list such as `2,3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| Error::Usage(format!("invalid increment {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

/// Dense square matrix of big integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    /// Builds a `dim x dim` matrix from `f(r, c)` with 1-based `r`, `c`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Result<Self> {
        if dim == 0 {
            return usage("matrix dimension must be at least 1");
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 1..=dim {
            for c in 1..=dim {
                entries.push(f(r, c));
            }
        }
        Ok(ExactMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return usage("matrix dimension must be at least 1");
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return usage(format!(
                "matrix is not square: row {} has {} entries, expected {dim}",
                bad + 1,
                rows[bad].len()
            ));
        }
        Ok(ExactMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 1-based `(r, c)`, or `None` out of bounds.
    pub fn get(&self, r: usize, c: usize) -> Option<&BigInt> {
        if r == 0 || c == 0 || r > self.dim || c > self.dim {
            return None;
        }
        Some(&self.entries[(r - 1) * self.dim + (c - 1)])
    }

    /// Entry at 1-based `(r, c)`.
    ///
    /// Panics when `(r, c)` is out of bounds.
    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        self.get(r, c).unwrap_or_else(|| {
            panic!("entry ({r}, {c}) out of bounds for dimension {}", self.dim)
        })
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.dim).all(|r| (r + 1..=self.dim).all(|c| self.entry(r, c) == self.entry(c, r)))
    }

    /// Principal submatrix keeping the given 1-based indices, in order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > self.dim) {
            return usage(format!("index {bad} out of range 1..={}", self.dim));
        }
        Self::from_fn(indices.len(), |r, c| {
            self.entry(indices[r - 1], indices[c - 1]).clone()
        })
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        for row in cells.chunks(self.dim) {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Partial sums `P[t] = i_1 + ... + i_t`.
pub fn prefix_sums(inc: &Increments) -> Vec<BigInt> {
    inc.values()
        .iter()
        .scan(BigInt::from(0), |acc, v| {
            *acc += v;
            Some(acc.clone())
        })
        .collect()
}

/// `A_n` with `a_ij = min(i, j)`.
pub fn build_min_matrix(n: usize) -> Result<ExactMatrix> {
    if n == 0 {
        return usage("A_n needs n >= 1");
    }
    ExactMatrix::from_fn(n, |r, c| BigInt::from(r.min(c)))
}

/// `C_{n,k}`, the `(n-k+1)`-square matrix with entries `k - 1 + min(r, c)`,
/// defined for `1 < k < n`.
pub fn build_c_matrix(n: usize, k: usize) -> Result<ExactMatrix> {
    if k <= 1 || k >= n {
        return usage(format!("C_{{n,k}} needs 1 < k < n, got n={n}, k={k}"));
    }
    ExactMatrix::from_fn(n - k + 1, |r, c| BigInt::from(k - 1 + r.min(c)))
}

/// The Δ matrix: entry `(r, c)` is `P[min(r, c)]`.
pub fn build_delta_matrix(inc: &Increments) -> Result<ExactMatrix> {
    let p = prefix_sums(inc);
    ExactMatrix::from_fn(inc.len(), |r, c| p[r.min(c) - 1].clone())
}

/// The Θ matrix built from `n + 1` increments. The first column is the
/// constant `P[1]`; elsewhere entry `(r, c)` is `P[min(r, c) + 1]`.
pub fn build_theta_matrix(inc: &Increments) -> Result<ExactMatrix> {
    if inc.len() < 3 {
        return usage(format!(
            "Θ needs at least 3 increments, got {}",
            inc.len()
        ));
    }
    let p = prefix_sums(inc);
    ExactMatrix::from_fn(inc.len() - 1, |r, c| {
        if c == 1 {
            p[0].clone()
        } else {
            p[r.min(c)].clone()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows).unwrap()
    }

    fn inc(v: &[i64]) -> Increments {
        Increments::from_i64s(v).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn prefix_sum_examples() {
        assert_eq!(prefix_sums(&inc(&[1, 1, 1])), big(&[1, 2, 3]));
        assert_eq!(prefix_sums(&inc(&[2, 3, 4])), big(&[2, 5, 9]));
        assert_eq!(prefix_sums(&inc(&[5])), big(&[5]));
        assert!(matches!(Increments::new(vec![]), Err(Error::Usage(_))));
    }

    #[test]
    fn min_matrix_examples() {
        assert_eq!(build_min_matrix(1).unwrap(), m(&[&[1]]));
        assert_eq!(
            build_min_matrix(3).unwrap(),
            m(&[&[1, 1, 1], &[1, 2, 2], &[1, 2, 3]])
        );
        assert_eq!(*build_min_matrix(5).unwrap().entry(2, 4), BigInt::from(2));
        assert!(matches!(build_min_matrix(0), Err(Error::Usage(_))));
    }

    #[test]
    fn c_matrix_examples() {
        assert_eq!(
            build_c_matrix(4, 2).unwrap(),
            m(&[&[2, 2, 2], &[2, 3, 3], &[2, 3, 4]])
        );
        assert_eq!(build_c_matrix(3, 2).unwrap(), m(&[&[2, 2], &[2, 3]]));
        assert!(build_c_matrix(4, 4).is_err());
        assert!(build_c_matrix(4, 1).is_err());
        assert!(build_c_matrix(4, 0).is_err());
    }

    #[test]
    fn c_matrix_last_entry_is_n() {
        let c = build_c_matrix(9, 4).unwrap();
        assert_eq!(*c.entry(c.dim(), c.dim()), BigInt::from(9));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            build_delta_matrix(&inc(&[2, 3, 4])).unwrap(),
            m(&[&[2, 2, 2], &[2, 5, 5], &[2, 5, 9]])
        );
        for n in 1..=30 {
            assert_eq!(
                build_delta_matrix(&Increments::ones(n).unwrap()).unwrap(),
                build_min_matrix(n).unwrap()
            );
        }
        for n in 3..=10 {
            for k in 2..n {
                let shifted = Increments::shifted(k as i64, n - k + 1).unwrap();
                assert_eq!(
                    build_delta_matrix(&shifted).unwrap(),
                    build_c_matrix(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            build_theta_matrix(&inc(&[2, 3, 5])).unwrap(),
            m(&[&[2, 5], &[2, 10]])
        );
        assert_eq!(
            build_theta_matrix(&inc(&[1, 1, 1])).unwrap(),
            m(&[&[1, 2], &[1, 3]])
        );
        assert_eq!(
            build_theta_matrix(&inc(&[1, 1, 1, 1])).unwrap(),
            m(&[&[1, 2, 2], &[1, 3, 3], &[1, 3, 4]])
        );
        assert!(build_theta_matrix(&inc(&[1, 2])).is_err());
    }

    #[test]
    fn min_matrix_monotone() {
        let a = build_min_matrix(12).unwrap();
        for r in 1..=12 {
            for c in 1..12 {
                assert!(a.entry(r, c) <= a.entry(r, c + 1));
                assert!(a.entry(c, r) <= a.entry(c + 1, r));
            }
        }
    }

    #[test]
    fn entry_bounds() {
        let a = build_min_matrix(3).unwrap();
        assert!(a.get(0, 1).is_none());
        assert!(a.get(4, 1).is_none());
        assert!(a.get(3, 3).is_some());
    }

    #[test]
    fn parse_increments() {
        let parsed: Increments = "2, 3,-4".parse().unwrap();
        assert_eq!(parsed, inc(&[2, 3, -4]));
        assert!("".parse::<Increments>().is_err());
        assert!("1,x".parse::<Increments>().is_err());
        assert!(inc(&[1, 2]).is_positive());
        assert!(!inc(&[1, 0]).is_positive());
    }

    #[test]
    fn non_square_rejected() {
        assert!(ExactMatrix::from_i64_rows(&[&[1, 2], &[3]]).is_err());
    }

    #[test]
    fn principal_submatrix_of_min_matrix() {
        let a = build_min_matrix(5).unwrap();
        assert_eq!(
            a.principal_submatrix(&[2, 4, 5]).unwrap(),
            m(&[&[2, 2, 2], &[2, 4, 4], &[2, 4, 5]])
        );
        assert!(a.principal_submatrix(&[0]).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn delta_is_symmetric(values in prop::collection::vec(-50i64..50, 1..15)) {
                let d = build_delta_matrix(&Increments::from_i64s(&values).unwrap()).unwrap();
                prop_assert!(d.is_symmetric());
            }
        }
    }
}
