//! Affine charts of projective space and the homogenization map.
//!
//! Every coordinate change used here is a Laurent monomial map
//! `x_k = u^{e_k}`, so pulling back `dx_I` only needs minors of the
//! exponent matrix: `φ*(dx_I) = u^{Σ_{k∈I} e_k} Σ_J det(E_{I,J}) u^{−1_J} du_J`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::field::{determinant, quasi_weight, VectorField};
use super::form::{contract, rot, AltForm};
use super::poly::{rat, LaurentPoly};
use crate::error::{Error, Result};
use crate::weights::ParamSet;

/// Exponent images `x_k ↦ u^{e_k}` for chart `E_i`, `i ∈ [1, n]`.
pub fn chart_images(n: usize, chart: usize) -> Result<Vec<Vec<i64>>> {
    if chart == 0 || chart > n {
        return Err(Error::ChartOutOfRange { chart, n });
    }
    let unit = |k: usize| {
        let mut e = vec![0i64; n];
        e[k] = 1;
        e
    };
    let mut images = Vec::with_capacity(n);
    if chart == 1 {
        // x_1 = 1/u_1, x_k = u_{n+2−k}/u_1
        for k in 0..n {
            let mut e = if k == 0 { vec![0; n] } else { unit(n - k) };
            e[0] -= 1;
            images.push(e);
        }
    } else {
        // x_k = y_k/y_n (k < i), x_i = 1/y_n, x_k = y_{k−1}/y_n (k > i)
        let ii = chart - 1;
        for k in 0..n {
            let mut e = match k.cmp(&ii) {
                std::cmp::Ordering::Less => unit(k),
                std::cmp::Ordering::Equal => vec![0; n],
                std::cmp::Ordering::Greater => unit(k - 1),
            };
            e[n - 1] -= 1;
            images.push(e);
        }
    }
    Ok(images)
}

/// The variable that vanishes on the hyperplane at infinity of `E_i`.
fn clearing_variable(n: usize, chart: usize) -> usize {
    if chart == 1 {
        0
    } else {
        n - 1
    }
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Pulls `ω` back along `x_k = u^{images[k]}` (`m` target variables) and
/// multiplies by `u^{shift}`; fails if a pole survives.
pub fn pullback_monomial_map(
    omega: &AltForm,
    images: &[Vec<i64>],
    m: usize,
    shift: &[i64],
) -> Result<AltForm> {
    let k = omega.grade();
    let js = subsets(m, k);
    let mut acc: BTreeMap<Vec<usize>, LaurentPoly> = BTreeMap::new();
    for (idx, f) in omega.terms() {
        let fp = LaurentPoly::substitute(f, images);
        let mut base = shift.to_vec();
        for &i in idx {
            for (b, e) in base.iter_mut().zip(&images[i]) {
                *b += e;
            }
        }
        for j in &js {
            let minor: Vec<Vec<BigRational>> = idx
                .iter()
                .map(|&i| j.iter().map(|&c| rat(images[i][c])).collect())
                .collect();
            let det = determinant(&minor);
            if det.is_zero() {
                continue;
            }
            let mut e = base.clone();
            for &c in j {
                e[c] -= 1;
            }
            let mono = LaurentPoly::monomial(e, det);
            acc.entry(j.clone())
                .or_insert_with(|| LaurentPoly::zero(m))
                .add_assign(&fp.mul(&mono));
        }
    }
    let mut out = AltForm::zero(m, k);
    for (j, c) in acc {
        if c.is_zero() {
            continue;
        }
        let p = c.to_poly().ok_or(Error::UnclearedPole)?;
        out.add_term(&j, p);
    }
    Ok(out)
}

/// `u^{d+n} φ_i* ω` for the chart `E_i`.
pub fn chart_pullback(omega: &AltForm, chart: usize, d: i64) -> Result<AltForm> {
    let n = omega.n();
    let images = chart_images(n, chart)?;
    let mut shift = vec![0i64; n];
    shift[clearing_variable(n, chart)] = d + n as i64;
    pullback_monomial_map(omega, &images, n, &shift)
}

/// The homogeneous form `Z_n^{d+n} π*ω` on `C^{n+1}`, with `x_k = Z_{k−1}/Z_n`
/// (variables `Z_0..Z_{n−1}` first, `Z_n` last).
pub fn homogenize(omega: &AltForm, d: i64) -> Result<AltForm> {
    let n = omega.n();
    let images: Vec<Vec<i64>> = (0..n)
        .map(|k| {
            let mut e = vec![0i64; n + 1];
            e[k] = 1;
            e[n] = -1;
            e
        })
        .collect();
    let mut shift = vec![0i64; n + 1];
    shift[n] = d + n as i64;
    pullback_monomial_map(omega, &images, n + 1, &shift)
}

/// `ω_Y`: `(1/τ) i_S i_Y ν`, or `i_S i_Y ν` when `τ = 0`.
pub fn omega_of(ps: &ParamSet, y: &VectorField) -> Result<AltForm> {
    let s = VectorField::diagonal(ps.weights.as_slice());
    let w = contract(&s, y)?;
    if ps.tau == 0 {
        Ok(w)
    } else {
        Ok(w.scale(&(rat(1) / rat(ps.tau))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartData {
    pub chart: usize,
    pub s_i: VectorField,
    pub lambda_i: i64,
    pub omega_i: AltForm,
    pub y_i: VectorField,
}

pub fn chart_transform(ps: &ParamSet, y: &VectorField, chart: usize) -> Result<ChartData> {
    let n = ps.n();
    if chart == 0 || chart > n {
        return Err(Error::ChartOutOfRange { chart, n });
    }
    let s = VectorField::diagonal(ps.weights.as_slice());
    match quasi_weight(&s, y)? {
        Some(l) if l == ps.lambda => {}
        _ => return Err(Error::NonQuasiHomogeneousInput(ps.lambda)),
    }
    let omega = omega_of(ps, y)?;
    let omega_i = chart_pullback(&omega, chart, ps.d)?;
    let y_i = rot(&omega_i)?;
    Ok(ChartData {
        chart,
        s_i: VectorField::diagonal(&ps.chart_weights(chart)),
        lambda_i: ps.chart_lambda(chart),
        omega_i,
        y_i,
    })
}
