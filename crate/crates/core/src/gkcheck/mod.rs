//! Certification that a family contains a generalized Kupka foliation:
//! an isolated zero of `Y` at the origin, Kupka points at the chart origins
//! `q_2, …, q_n` (one invertible exception allowed), and no divisorial
//! singular set.

pub mod certificate;
pub mod gcd;
pub mod groebner;
pub mod witnesses;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polyvec::field::{determinant, is_nilpotent};
use crate::polyvec::{chart_transform, homogenize, omega_of, VectorField};
use crate::weights::ParamSet;

pub use certificate::{certify_gk, replay, CertifyConfig, GkCertificate, NoCertificate};
pub use crate::weights::m1_integral;
pub use groebner::{leading_monomials, GbOutcome, Staircase};

/// Default cap on Gröbner reduction steps.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Isolation {
    /// Zero-dimensional component ideal; the staircase is the evidence.
    Isolated(Staircase),
    NotIsolated(String),
    /// The step budget ran out before a verdict.
    Unknown,
}

impl Isolation {
    pub fn is_isolated(&self) -> bool {
        matches!(self, Isolation::Isolated(_))
    }
}

/// Decides whether the components of `y` generate a zero-dimensional ideal
/// vanishing at the origin. For quasi-homogeneous `y` with positive weights
/// the zero set is a union of weighted orbits through the origin, so a
/// finite zero set is exactly `{0}`.
pub fn is_isolated_at_origin(y: &VectorField, ps: &ParamSet, budget: u64) -> Isolation {
    if y.value_at_zero().iter().any(|c| !c.is_zero()) {
        return Isolation::NotIsolated("Y(0) ≠ 0".into());
    }
    isolation_with_grading(y, ps.weights.as_slice(), budget)
}

fn isolation_with_grading(y: &VectorField, grading: &[i64], budget: u64) -> Isolation {
    match leading_monomials(y.components(), grading, budget) {
        GbOutcome::BudgetExceeded => Isolation::Unknown,
        GbOutcome::Done(lms) => {
            if lms.is_empty() {
                return Isolation::NotIsolated("zero field".into());
            }
            let st = Staircase::new(lms);
            if st.is_zero_dimensional() {
                Isolation::Isolated(st)
            } else {
                let missing: Vec<String> = st
                    .pure_powers
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.is_none())
                    .map(|(k, _)| format!("x{}", k + 1))
                    .collect();
                Isolation::NotIsolated(format!(
                    "positive-dimensional zero set (no pure power of {})",
                    missing.join(", ")
                ))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KupkaClass {
    Kupka,
    IsolatedInvertible,
    IsolatedNilpotentJacobian,
    NonIsolatedOrUnknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KupkaStatus {
    pub chart: usize,
    #[serde(with = "crate::serde_util::rat_vec")]
    pub value_at_origin: Vec<BigRational>,
    #[serde(with = "crate::serde_util::rat_mat")]
    pub jacobian: Vec<Vec<BigRational>>,
    pub classification: KupkaClass,
}

pub fn classify_point(y_i: &VectorField, budget: u64) -> KupkaClass {
    if y_i.value_at_zero().iter().any(|c| !c.is_zero()) {
        return KupkaClass::Kupka;
    }
    let j = y_i.jacobian_at_zero();
    if !determinant(&j).is_zero() {
        return KupkaClass::IsolatedInvertible;
    }
    if is_nilpotent(&j) && !y_i.is_zero() {
        let ones = vec![1; y_i.n()];
        if isolation_with_grading(y_i, &ones, budget).is_isolated() {
            return KupkaClass::IsolatedNilpotentJacobian;
        }
    }
    KupkaClass::NonIsolatedOrUnknown
}

/// Transforms `y` to the chart `E_chart` and classifies its origin.
pub fn kupka_data(ps: &ParamSet, y: &VectorField, chart: usize, budget: u64) -> Result<KupkaStatus> {
    let cd = chart_transform(ps, y, chart)?;
    Ok(KupkaStatus {
        chart,
        value_at_origin: cd.y_i.value_at_zero(),
        jacobian: cd.y_i.jacobian_at_zero(),
        classification: classify_point(&cd.y_i, budget),
    })
}

/// True when `ω_Y` has no divisorial singular component: its homogenization
/// is polynomial of coefficient degree exactly `d + 2` (not divisible by the
/// coordinate at infinity) and the affine coefficients have constant gcd.
pub fn gamma_check(ps: &ParamSet, y: &VectorField) -> bool {
    if y.is_zero() {
        return false;
    }
    let Ok(omega) = omega_of(ps, y) else {
        return false;
    };
    if omega.is_zero() {
        return false;
    }
    let Ok(big) = homogenize(&omega, ps.d) else {
        return false;
    };
    let n = ps.n();
    let reaches_infinity = big
        .coefficients()
        .any(|c| c.terms().any(|(m, _)| m.0[n] == 0));
    if !reaches_infinity {
        return false;
    }
    let coeffs: Vec<_> = omega.coefficients().cloned().collect();
    gcd::is_constant_gcd(&coeffs)
}

/// The chart `i ≥ 2` with `λ = p_i(d − 1)`, where the origin may be a
/// non-Kupka isolated singularity instead.
pub fn exceptional_chart(ps: &ParamSet) -> Option<usize> {
    (2..=ps.n()).find(|&i| ps.chart_lambda(i) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyvec::parse_field;
    use crate::w0space::{random_element, w0_basis};
    use crate::weights::{derive_params, WeightVector};

    fn ps(w: &[i64], l: i64, d: i64) -> ParamSet {
        derive_params(&WeightVector::new(w.to_vec()).unwrap(), l, d).unwrap()
    }

    fn exceptional_764() -> VectorField {
        parse_field(
            "-10*x1*x3^2 d/dx1 - 5*x2*x3^2 d/dx2 + x1^2 d/dx2 + 5*x3^3 d/dx3 + x2^2 d/dx3",
            3,
        )
        .unwrap()
    }

    #[test]
    fn isolation_examples() {
        let p = ps(&[7, 6, 4], 8, 2);
        match is_isolated_at_origin(&exceptional_764(), &p, DEFAULT_BUDGET) {
            Isolation::Isolated(st) => assert_eq!(st.quotient_dim(), Some(15)),
            other => panic!("{other:?}"),
        }
        let x = parse_field("x1 d/dx1", 3).unwrap();
        assert!(!is_isolated_at_origin(&x, &ps(&[3, 2, 1], 0, 1), DEFAULT_BUDGET).is_isolated());
        let q = ps(&[4, 2, 1], 3, 2);
        let y = random_element(&w0_basis(&q), 5, 7).unwrap();
        assert!(matches!(
            is_isolated_at_origin(&y, &q, DEFAULT_BUDGET),
            Isolation::NotIsolated(_)
        ));
    }

    #[test]
    fn kupka_examples() {
        let p = ps(&[7, 6, 4], 8, 2);
        let y = exceptional_764();
        for chart in 2..=3 {
            let st = kupka_data(&p, &y, chart, DEFAULT_BUDGET).unwrap();
            assert_eq!(st.classification, KupkaClass::Kupka, "chart {chart}");
        }
        // Dropping the slot x2^2 d/dx3 kills the entry that makes q_2 Kupka.
        let y0 = parse_field(
            "-10*x1*x3^2 d/dx1 - 5*x2*x3^2 d/dx2 + x1^2 d/dx2 + 5*x3^3 d/dx3",
            3,
        )
        .unwrap();
        let st = kupka_data(&p, &y0, 2, DEFAULT_BUDGET).unwrap();
        assert_ne!(st.classification, KupkaClass::Kupka);
        let st = kupka_data(&p, &y0, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(st.classification, KupkaClass::Kupka);
        let s = VectorField::diagonal(&[3, 2, 1]);
        let st = kupka_data(&ps(&[3, 2, 1], 0, 1), &s, 2, DEFAULT_BUDGET).unwrap();
        assert!(st.value_at_origin.iter().all(Zero::is_zero));
        assert_eq!(st.classification, KupkaClass::NonIsolatedOrUnknown);
    }

    #[test]
    fn gamma_examples() {
        let p = ps(&[7, 6, 4], 8, 2);
        assert!(gamma_check(&p, &exceptional_764()));
        let planted = exceptional_764().mul_poly(&crate::polyvec::Poly::var(3, 0));
        assert!(!gamma_check(&p, &planted));
        let q = ps(&[6, 5, 2], 4, 2);
        let y = random_element(&w0_basis(&q), 5, 3).unwrap();
        assert!(gamma_check(&q, &y));
    }

    #[test]
    fn gamma_lemma_field() {
        // Y = rot ω̄ with X̄ = x_n^d R_n + x_{n-1}^d ∂/∂x_n for (6,5,2; 4, d=2).
        let p = ps(&[6, 5, 2], 4, 2);
        let xbar = parse_field(
            "x1*x3^2 d/dx1 + x2*x3^2 d/dx2 + x3^3 d/dx3 + x2^2 d/dx3",
            3,
        )
        .unwrap();
        let s = VectorField::diagonal(&[6, 5, 2]);
        let w = crate::polyvec::contract(&s, &xbar).unwrap();
        let y = crate::polyvec::rot(&w).unwrap();
        assert!(gamma_check(&p, &y));
    }

    #[test]
    fn exceptional_chart_detection() {
        assert_eq!(exceptional_chart(&ps(&[4, 2, 1], 2, 2)), Some(2));
        assert_eq!(exceptional_chart(&ps(&[7, 6, 4], 8, 2)), None);
    }
}
