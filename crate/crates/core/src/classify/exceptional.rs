//! The family with weights `r_i = d^{i−1} + … + d^{n−1}` and `λ = d^n`,
//! present for every `n` and `d`.

use crate::error::{Error, Result};
use crate::w0space::weighted_monomials;

/// `r_1 > … > r_n` with `r_i = Σ_{j=i−1}^{n−1} d^j`.
pub fn exceptional_weights(n: usize, d: i64) -> Result<(Vec<i64>, i64)> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let pows: Vec<i64> = (0..=n as u32).map(|j| d.pow(j)).collect();
    let w = (1..=n).map(|i| pows[i - 1..n].iter().sum()).collect();
    Ok((w, pows[n]))
}

/// Expected component dimension for the exceptional family.
pub fn exceptional_dimension(n: usize, d: i64) -> i64 {
    let n = n as i64;
    if d == 1 {
        n * n + 2 * n - 2
    } else {
        n * n + 2 * n - 1
    }
}

/// Exponent vectors `b ≥ 0` with `Σ b_j r_j = r_k + λ` and `Σ b_j ≤ d`.
pub fn claim46_solutions(n: usize, d: i64, k: usize) -> Result<Vec<Vec<u32>>> {
    let (r, lambda) = exceptional_weights(n, d)?;
    if k < 1 || k > n {
        return Err(Error::ConditionOutOfRange { n, i: k, j: k });
    }
    Ok(weighted_monomials(&r, r[k - 1] + lambda, d as u32))
}
