//! Polynomial vector fields `Σ X_j ∂/∂x_j`.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{rat, Monomial, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    comps: Vec<Poly>,
}

impl VectorField {
    pub fn new(comps: Vec<Poly>) -> Result<Self> {
        let n = comps.len();
        for c in &comps {
            if c.nvars() != n {
                return Err(Error::DimensionMismatch(n, c.nvars()));
            }
        }
        Ok(VectorField { comps })
    }

    pub fn zero(n: usize) -> Self {
        VectorField {
            comps: vec![Poly::zero(n); n],
        }
    }

    /// `Σ w_k x_k ∂/∂x_k`
    pub fn diagonal(weights: &[i64]) -> Self {
        let n = weights.len();
        VectorField {
            comps: weights
                .iter()
                .enumerate()
                .map(|(k, &w)| Poly::var(n, k).scale(&rat(w)))
                .collect(),
        }
    }

    /// The radial field `R_n`.
    pub fn radial(n: usize) -> Self {
        VectorField::diagonal(&vec![1; n])
    }

    /// `∂/∂x_{k+1}`
    pub fn partial(n: usize, k: usize) -> Self {
        VectorField::single(n, k, Poly::one(n))
    }

    /// `f ∂/∂x_{k+1}`
    pub fn single(n: usize, k: usize, f: Poly) -> Self {
        let mut comps = vec![Poly::zero(n); n];
        comps[k] = f;
        VectorField { comps }
    }

    pub fn n(&self) -> usize {
        self.comps.len()
    }

    pub fn component(&self, j: usize) -> &Poly {
        &self.comps[j]
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Poly> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Poly::total_degree).max()
    }

    pub fn homogeneous_part(&self, deg: u32) -> VectorField {
        VectorField {
            comps: self.comps.iter().map(|c| c.homogeneous_part(deg)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> VectorField {
        VectorField {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Poly) -> VectorField {
        VectorField {
            comps: self.comps.iter().map(|p| p * f).collect(),
        }
    }

    /// The derivation `f ↦ Σ X_k ∂f/∂x_k`.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(self.n());
        for (k, xk) in self.comps.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            let df = f.derivative(k);
            if !df.is_zero() {
                out += &(xk * &df);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Vec<BigRational> {
        self.comps.iter().map(|c| c.eval(point)).collect()
    }

    pub fn value_at_zero(&self) -> Vec<BigRational> {
        self.comps.iter().map(Poly::constant_term).collect()
    }

    /// `DX(0)`: entry `(j, k)` is the coefficient of `x_k` in `X_j`.
    pub fn jacobian_at_zero(&self) -> Vec<Vec<BigRational>> {
        let n = self.n();
        self.comps
            .iter()
            .map(|c| (0..n).map(|k| c.coeff(&Monomial::var(n, k))).collect())
            .collect()
    }

    /// Diagonal weights if this field is `Σ w_k x_k ∂/∂x_k` with integer `w_k`.
    pub fn diagonal_weights(&self) -> Option<Vec<i64>> {
        let n = self.n();
        let mut w = Vec::with_capacity(n);
        for (k, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                w.push(0);
                continue;
            }
            if c.len() != 1 {
                return None;
            }
            let (m, a) = c.leading()?;
            if *m != Monomial::var(n, k) || !a.is_integer() {
                return None;
            }
            w.push(i64::try_from(a.to_integer()).ok()?);
        }
        Some(w)
    }
}

impl Add<&VectorField> for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        assert_eq!(self.n(), rhs.n());
        VectorField {
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&VectorField> for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        assert_eq!(self.n(), rhs.n());
        VectorField {
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField {
            comps: self.comps.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&VectorField> for &BigRational {
    type Output = VectorField;
    fn mul(self, rhs: &VectorField) -> VectorField {
        rhs.scale(self)
    }
}

/// `[A, B]_j = A(B_j) − B(A_j)`.
pub fn lie_bracket(a: &VectorField, b: &VectorField) -> Result<VectorField> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    let comps = (0..a.n())
        .map(|j| &a.apply(b.component(j)) - &b.apply(a.component(j)))
        .collect();
    Ok(VectorField { comps })
}

pub fn divergence(x: &VectorField) -> Poly {
    let mut out = Poly::zero(x.n());
    for (k, c) in x.components().iter().enumerate() {
        out += &c.derivative(k);
    }
    out
}

/// The weight `λ` with `[S, X] = λX`, read off monomial by monomial from
/// `Σ p_k σ_k = p_j + λ`; `None` if the monomials disagree.
pub fn quasi_weight(s: &VectorField, x: &VectorField) -> Result<Option<i64>> {
    if s.n() != x.n() {
        return Err(Error::DimensionMismatch(s.n(), x.n()));
    }
    let weights = s.diagonal_weights().ok_or(Error::NotDiagonal)?;
    if x.is_zero() {
        return Err(Error::ZeroField);
    }
    let mut lambda = None;
    for (j, c) in x.components().iter().enumerate() {
        for (m, _) in c.terms() {
            let l = m.weighted_degree(&weights) - weights[j];
            match lambda {
                None => lambda = Some(l),
                Some(l0) if l0 != l => return Ok(None),
                _ => {}
            }
        }
    }
    Ok(lambda)
}

/// Exact determinant by Gaussian elimination over `Q`.
pub fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// `M^n = 0`.
pub fn is_nilpotent(m: &[Vec<BigRational>]) -> bool {
    let n = m.len();
    let mut p: Vec<Vec<BigRational>> = m.to_vec();
    for _ in 1..n {
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if p[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !m[k][j].is_zero() {
                        next[i][j] += &p[i][k] * &m[k][j];
                    }
                }
            }
        }
        p = next;
    }
    p.iter().all(|row| row.iter().all(Zero::is_zero))
}
