//! Exact arithmetic around the min-matrix `A_n`, whose entries are
//! `a_ij = min(i, j)`.
//!
//! The crate builds `A_n`, its shifted relative `C_{n,k}` and the
//! prefix-sum matrices `Δ_n` / `Θ_n`. It evaluates their determinants in
//! closed form and by fraction-free elimination. It computes the elementary
//! symmetric functions `S_k^n` of the eigenvalues of `A_n` by six
//! independent routes, assembles the characteristic polynomial, and checks
//! the Fibonacci and binomial identities that tie them together. A small
//! Monte-Carlo module shows `A_n` as the covariance of a random walk.
//!
//! Every public index is 1-based.

pub mod det;
pub mod error;
pub mod fibonacci;
pub mod matrix;
pub mod stochastic;
pub mod symfun;
pub mod verify;

pub use det::{
    det_bareiss, det_c_matrix, det_min_matrix, delta_det_closed, theta_det_closed, DetMethod,
    DetResult,
};
pub use error::{Error, Result};
pub use fibonacci::{fib, fibonacci_identity, FibSequence};
pub use matrix::{
    build_c_matrix, build_delta_matrix, build_min_matrix, build_theta_matrix, prefix_sums,
    ExactMatrix, Increments,
};
pub use stochastic::{covariance_deviation, simulate_covariance, CovEstimate, Dist, SimConfig};
pub use symfun::{
    binomial, binomial_identity_check, binomial_signed, charpoly, symfun_closed, symfun_minor_sum,
    symfun_minor_sum_with_cap, symfun_nested, symfun_ratio, symfun_rec6, symfun_rec7, CharPoly,
    shifted_min_matrix, SymMethod, SymTable, DEFAULT_MINOR_CAP,
};
