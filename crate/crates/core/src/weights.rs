//! Classification parameters: the weight vector of the diagonal field `S`,
//! the derived quantities (chart weights `λ_i`, traces `τ_i`, the dual
//! weights `p̄`), the arithmetic conditions `c_ij` and the Milnor-number
//! product formula.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strictly decreasing, coprime, positive integer weights `p_1 > … > p_n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    /// Wraps an already-normalized vector, rejecting anything that is not
    /// strictly decreasing, positive and coprime.
    pub fn new(p: Vec<i64>) -> Result<Self> {
        if p.len() < 3 {
            return Err(Error::TooFewWeights(p.len()));
        }
        if let Some(&w) = p.iter().find(|&&w| w < 1) {
            return Err(Error::NonPositiveWeight(w));
        }
        for pair in p.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateWeights(pair[0]));
            }
            if pair[0] < pair[1] {
                return Err(Error::NotNormalized(p.clone()));
            }
        }
        if gcd_all(&p) != 1 {
            return Err(Error::NotNormalized(p));
        }
        Ok(WeightVector(p))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// `p_k` with 1-based indexing and the convention `p_{n+1} = 0`.
    pub fn p(&self, k: usize) -> i64 {
        assert!(k >= 1 && k <= self.0.len() + 1, "weight index {k} out of range");
        if k == self.0.len() + 1 {
            0
        } else {
            self.0[k - 1]
        }
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<i64>> for WeightVector {
    type Error = Error;

    fn try_from(p: Vec<i64>) -> Result<Self> {
        WeightVector::new(p)
    }
}

impl From<WeightVector> for Vec<i64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |g, &v| g.gcd(&v))
}

/// Sorts raw weights into strictly decreasing order and divides by their gcd.
pub fn normalize_weights(raw: &[i64]) -> Result<WeightVector> {
    if raw.len() < 3 {
        return Err(Error::TooFewWeights(raw.len()));
    }
    if let Some(&w) = raw.iter().find(|&&w| w < 1) {
        return Err(Error::NonPositiveWeight(w));
    }
    let mut p = raw.to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(pair) = p.windows(2).find(|pair| pair[0] == pair[1]) {
        return Err(Error::DuplicateWeights(pair[0]));
    }
    let g = gcd_all(&p);
    p.iter_mut().for_each(|w| *w /= g);
    WeightVector::new(p)
}

/// The weights together with every quantity derived from `(p, λ, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamSet {
    pub weights: WeightVector,
    pub lambda: i64,
    pub d: i64,
    pub tau: i64,
    /// `λ_1, …, λ_n`
    pub lambda_i: Vec<i64>,
    /// `τ_1, …, τ_n`
    pub tau_i: Vec<i64>,
    /// `p̄_1, …, p̄_n`
    pub p_bar: Vec<i64>,
}

pub fn derive_params(weights: &WeightVector, lambda: i64, d: i64) -> Result<ParamSet> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let n = weights.n();
    let nd = n as i64 + d;
    let tau = lambda + weights.sum();
    let mut lambda_i = Vec::with_capacity(n);
    let mut tau_i = Vec::with_capacity(n);
    for i in 1..=n {
        let p = weights.p(i);
        if i == 1 {
            lambda_i.push(p * (d - 1) - lambda);
            tau_i.push(p * nd - tau);
        } else {
            lambda_i.push(lambda - p * (d - 1));
            tau_i.push(tau - p * nd);
        }
    }
    let p1 = weights.p(1);
    let p_bar = (1..=n).map(|j| p1 - weights.p(n - j + 2)).collect();
    Ok(ParamSet {
        weights: weights.clone(),
        lambda,
        d,
        tau,
        lambda_i,
        tau_i,
        p_bar,
    })
}

impl ParamSet {
    pub fn n(&self) -> usize {
        self.weights.n()
    }

    /// `p_k`, 1-based, with `p_{n+1} = 0`.
    pub fn p(&self, k: usize) -> i64 {
        self.weights.p(k)
    }

    /// `λ_i` for `i ≥ 1`; index 0 is `λ` itself.
    pub fn chart_lambda(&self, i: usize) -> i64 {
        if i == 0 {
            self.lambda
        } else {
            self.lambda_i[i - 1]
        }
    }

    /// `τ_i` for `i ≥ 1`; index 0 is `τ`.
    pub fn chart_tau(&self, i: usize) -> i64 {
        if i == 0 {
            self.tau
        } else {
            self.tau_i[i - 1]
        }
    }

    /// Diagonal entries of the field `S_i` in the chart `E_i`.
    pub fn chart_weights(&self, i: usize) -> Vec<i64> {
        let n = self.n();
        match i {
            0 => self.weights.as_slice().to_vec(),
            1 => self.p_bar.clone(),
            _ => {
                let pi = self.p(i);
                (1..=n)
                    .map(|j| if j < i { self.p(j) - pi } else { self.p(j + 1) - pi })
                    .collect()
            }
        }
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; λ={}, d={}", self.weights, self.lambda, self.d)
    }
}

/// The condition `c_ij` with `1 ≤ i ≤ n-1`, `1 ≤ j ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConditionId {
    pub i: usize,
    pub j: usize,
}

impl ConditionId {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= n || j == 0 || j > n {
            return Err(Error::ConditionOutOfRange { n, i, j });
        }
        Ok(ConditionId { i, j })
    }

    /// The index `k` of the weight appearing on the left of `p_k + λ = p_{i+1}·d`.
    pub fn lhs_index(&self) -> usize {
        if self.j <= self.i {
            self.j
        } else {
            self.j + 1
        }
    }

    /// The dual condition `c̄_{n-i, n-j+1}`.
    pub fn dual(&self, n: usize) -> ConditionId {
        ConditionId {
            i: n - self.i,
            j: n - self.j + 1,
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{},{}", self.i, self.j)
    }
}

pub fn check_condition(ps: &ParamSet, c: ConditionId) -> bool {
    debug_assert!(c.i >= 1 && c.i < ps.n() && c.j >= 1 && c.j <= ps.n());
    ps.p(c.lhs_index()) + ps.lambda == ps.p(c.i + 1) * ps.d
}

/// `(p, λ, d) ↦ (p̄, λ_1, d)`.
pub fn bar_involution(ps: &ParamSet) -> ParamSet {
    let bar = WeightVector::new(ps.p_bar.clone())
        .expect("dual weights of a normalized vector are normalized");
    derive_params(&bar, ps.lambda_i[0], ps.d).expect("degree already validated")
}

/// `Π(p_j + λ) / Π p_j` as an exact rational.
pub fn milnor_number(p: &[i64], lambda: i64) -> BigRational {
    let num = p
        .iter()
        .fold(BigInt::one(), |acc, &w| acc * BigInt::from(w + lambda));
    let den = p.iter().fold(BigInt::one(), |acc, &w| acc * BigInt::from(w));
    BigRational::new(num, den)
}

/// True when the Milnor product formula yields an integer; a non-integer
/// value rules out an isolated singularity at the origin.
pub fn m1_integral(p: &[i64], lambda: i64) -> bool {
    milnor_number(p, lambda).is_integer()
}
