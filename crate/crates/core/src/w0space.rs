//! The space `W_0` of admissible rotational fields for a parameter set.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel, solve_combination};
use crate::polyvec::{rat, Monomial, Poly, VectorField};
use crate::weights::{ParamSet, WeightVector};

/// All `σ ≥ 0` with `Σ w_k σ_k = target` and `|σ| ≤ cap`, in ascending
/// graded-lex order.
pub fn weighted_monomials(w: &[i64], target: i64, cap: u32) -> Vec<Vec<u32>> {
    fn go(w: &[i64], k: usize, rest: i64, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == w.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0u32;
        loop {
            let used = w[k] * e as i64;
            if used > rest || e > budget {
                break;
            }
            cur.push(e);
            go(w, k + 1, rest - used, budget - e, cur, out);
            cur.pop();
            e += 1;
        }
    }
    if target < 0 || w.iter().any(|&x| x <= 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(w, 0, target, cap, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| Monomial(a.clone()).cmp(&Monomial(b.clone())));
    out
}

/// A coefficient slot `x^σ ∂/∂x_{component+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialSlot {
    pub component: usize,
    pub exps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct W0Basis {
    pub ps: ParamSet,
    pub slots: Vec<MonomialSlot>,
    pub basis: Vec<Vec<BigRational>>,
}

impl W0Basis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn field_from_slots(&self, coords: &[BigRational]) -> VectorField {
        let n = self.ps.n();
        let mut comps = vec![Poly::zero(n); n];
        for (slot, c) in self.slots.iter().zip(coords) {
            comps[slot.component].add_term(Monomial(slot.exps.clone()), c.clone());
        }
        VectorField::new(comps).expect("slots share n")
    }

    /// `Σ a_k · basis_k` as a field.
    pub fn combine(&self, coeffs: &[BigRational]) -> VectorField {
        let mut v = vec![BigRational::zero(); self.slots.len()];
        for (b, a) in self.basis.iter().zip(coeffs) {
            if a.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x += a * y;
            }
        }
        self.field_from_slots(&v)
    }

    pub fn element(&self, k: usize) -> VectorField {
        self.field_from_slots(&self.basis[k])
    }

    /// Slot coefficients of `y`, or `None` if `y` uses a monomial outside the slots.
    pub fn slot_vector(&self, y: &VectorField) -> Option<Vec<BigRational>> {
        let index: BTreeMap<(usize, &[u32]), usize> = self
            .slots
            .iter()
            .enumerate()
            .map(|(i, s)| ((s.component, s.exps.as_slice()), i))
            .collect();
        let mut v = vec![BigRational::zero(); self.slots.len()];
        for (j, c) in y.components().iter().enumerate() {
            for (m, a) in c.terms() {
                let i = *index.get(&(j, m.0.as_slice()))?;
                v[i] = a.clone();
            }
        }
        Some(v)
    }

    /// Coordinates of `y` in the basis, or `None` if `y ∉ W_0`.
    pub fn coordinates(&self, y: &VectorField) -> Option<Vec<BigRational>> {
        let v = self.slot_vector(y)?;
        solve_combination(&self.basis, &v)
    }
}

/// Row coefficients keyed by monomial: each map entry is one linear equation.
type Rows = BTreeMap<(usize, Vec<u32>), BTreeMap<usize, BigRational>>;

fn push(rows: &mut Rows, key: (usize, Vec<u32>), slot: usize, c: BigRational) {
    if c.is_zero() {
        return;
    }
    *rows.entry(key).or_default().entry(slot).or_insert_with(BigRational::zero) += c;
}

pub fn w0_basis(ps: &ParamSet) -> W0Basis {
    let n = ps.n();
    let p = ps.weights.as_slice();
    let cap = (ps.d + 1) as u32;
    let mut slots = Vec::new();
    if ps.lambda >= -ps.p(1) {
        for j in 0..n {
            for exps in weighted_monomials(p, p[j] + ps.lambda, cap) {
                slots.push(MonomialSlot { component: j, exps });
            }
        }
    }
    let mut rows: Rows = BTreeMap::new();
    for (i, s) in slots.iter().enumerate() {
        let e = s.exps[s.component];
        if e > 0 {
            let mut m = s.exps.clone();
            m[s.component] -= 1;
            push(&mut rows, (0, m), i, rat(e as i64));
        }
    }
    // 3×3 minors of [R; S; Ŷ_{d+1}] for columns a < b < c; the minor is
    // Y_a x_b x_c (p_c − p_b) − Y_b x_a x_c (p_c − p_a) + Y_c x_a x_b (p_b − p_a).
    let mut triple = 0usize;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triple += 1;
                for (i, s) in slots.iter().enumerate() {
                    if s.exps.iter().sum::<u32>() != cap {
                        continue;
                    }
                    let (others, coef) = if s.component == a {
                        ((b, c), p[c] - p[b])
                    } else if s.component == b {
                        ((a, c), -(p[c] - p[a]))
                    } else if s.component == c {
                        ((a, b), p[b] - p[a])
                    } else {
                        continue;
                    };
                    let mut m = s.exps.clone();
                    m[others.0] += 1;
                    m[others.1] += 1;
                    push(&mut rows, (triple, m), i, rat(coef));
                }
            }
        }
    }
    let dense: Vec<Vec<BigRational>> = rows
        .into_values()
        .map(|r| {
            let mut v = vec![BigRational::zero(); slots.len()];
            for (k, c) in r {
                v[k] = c;
            }
            v
        })
        .collect();
    let basis = if slots.is_empty() {
        Vec::new()
    } else {
        kernel(&dense, slots.len())
    };
    W0Basis {
        ps: ps.clone(),
        slots,
        basis,
    }
}

/// Dimension of the family's closure in the space of foliations.
pub fn dim_component(ps: &ParamSet) -> Result<i64> {
    let dim_w0 = w0_basis(ps).dim() as i64;
    if dim_w0 == 0 {
        return Err(Error::EmptyFamily);
    }
    Ok(dim_from_w0(ps, dim_w0))
}

pub(crate) fn dim_from_w0(ps: &ParamSet, dim_w0: i64) -> i64 {
    let n = ps.n() as i64;
    let v0 = dim_w0 - 1;
    match (ps.d, ps.lambda) {
        (1, 0) => n * n + 2 * n - 2,
        (1, _) => v0 + n * n + n - 1,
        _ => v0 + n * n + n,
    }
}

/// Integer coefficients in `[−bound, bound]`, not all zero, from `seed`.
pub fn random_coefficients(len: usize, bound: i64, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let v: Vec<i64> = (0..len).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().any(|&a| a != 0) {
            return v;
        }
    }
}

pub fn random_element(b: &W0Basis, bound: i64, seed: u64) -> Result<VectorField> {
    if b.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let coeffs: Vec<BigRational> = random_coefficients(b.dim(), bound.max(1), seed)
        .into_iter()
        .map(rat)
        .collect();
    Ok(b.combine(&coeffs))
}

/// Convenience: the basis for raw weights.
pub fn w0_basis_for(weights: &[i64], lambda: i64, d: i64) -> Result<W0Basis> {
    let w = WeightVector::new(weights.to_vec())?;
    Ok(w0_basis(&crate::weights::derive_params(&w, lambda, d)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::polyvec::{divergence, lie_bracket, parse_field, quasi_weight};
    use crate::weights::derive_params;

    fn ps(w: &[i64], l: i64, d: i64) -> ParamSet {
        derive_params(&WeightVector::new(w.to_vec()).unwrap(), l, d).unwrap()
    }

    fn naive(w: &[i64], target: i64, cap: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let n = w.len();
        let mut e = vec![0u32; n];
        loop {
            let s: i64 = e.iter().zip(w).map(|(&a, &b)| a as i64 * b).sum();
            if s == target && e.iter().sum::<u32>() <= cap {
                out.push(e.clone());
            }
            let mut k = 0;
            loop {
                if k == n {
                    out.sort_by(|a, b| Monomial(a.clone()).cmp(&Monomial(b.clone())));
                    return out;
                }
                e[k] += 1;
                if e[k] <= cap {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn weighted_monomial_examples() {
        assert_eq!(weighted_monomials(&[4, 2, 1], 7, 3), vec![vec![1, 1, 1]]);
        let mut got = weighted_monomials(&[4, 2, 1], 5, 3);
        got.sort();
        assert_eq!(got, vec![vec![0, 2, 1], vec![1, 0, 1]]);
        assert!(weighted_monomials(&[5, 3, 1], -1, 5).is_empty());
        for (w, t, c) in [([7, 6, 4], 14, 3), ([3, 2, 1], 6, 4), ([5, 4, 1], 12, 5)] {
            assert_eq!(weighted_monomials(&w, t, c), naive(&w, t, c));
        }
    }

    #[test]
    fn example_212_space() {
        let b = w0_basis(&ps(&[4, 2, 1], 3, 2));
        assert_eq!(b.dim(), 4);
        let paper = [
            "-2*x1*x2*x3 d/dx1 + x2*x3^2 d/dx3",
            "x1*x3 d/dx2",
            "x1 d/dx3",
            "x2^2 d/dx3",
        ];
        let fields: Vec<_> = paper.iter().map(|s| parse_field(s, 3).unwrap()).collect();
        for f in &fields {
            assert!(b.coordinates(f).is_some(), "{f:?}");
        }
        let vecs: Vec<_> = fields.iter().map(|f| b.slot_vector(f).unwrap()).collect();
        assert_eq!(rank(&vecs, b.slots.len()), 4);
        for k in 0..b.dim() {
            let y = b.element(k);
            assert!(divergence(&y).is_zero());
        }
        assert_eq!(dim_component(&ps(&[4, 2, 1], 3, 2)), Ok(15));
    }

    #[test]
    fn exceptional_spaces() {
        let p = ps(&[7, 6, 4], 8, 2);
        let b = w0_basis(&p);
        assert_eq!(b.dim(), 3);
        assert_eq!(dim_component(&p), Ok(14));
        assert_eq!(w0_basis(&ps(&[15, 14, 12, 8], 16, 2)).dim(), 4);
        assert_eq!(dim_component(&ps(&[3, 2, 1], 1, 1)), Ok(13));
    }

    #[test]
    fn basis_elements_satisfy_constraints() {
        for (w, l, d) in [(vec![7, 6, 4], 8, 2), (vec![6, 5, 2], 4, 2), (vec![13, 12, 9], 27, 3)] {
            let p = ps(&w, l, d);
            let s = VectorField::diagonal(&w);
            let b = w0_basis(&p);
            assert!(!b.is_empty());
            for k in 0..b.dim() {
                let y = b.element(k);
                assert_eq!(quasi_weight(&s, &y).unwrap(), Some(l));
                assert!(divergence(&y).is_zero());
                assert!(y.degree().unwrap() <= (d + 1) as u32);
                assert_eq!(lie_bracket(&s, &y).unwrap(), y.scale(&rat(l)));
            }
        }
    }

    #[test]
    fn negative_lambda_below_bound_is_empty() {
        let b = w0_basis(&ps(&[4, 2, 1], -5, 2));
        assert!(b.is_empty());
        assert_eq!(dim_component(&ps(&[4, 2, 1], -5, 2)), Err(Error::EmptyFamily));
        assert_eq!(random_element(&b, 3, 1), Err(Error::EmptyBasis));
    }

    #[test]
    fn random_element_is_reproducible() {
        let b = w0_basis(&ps(&[6, 5, 2], 4, 2));
        let y1 = random_element(&b, 5, 42).unwrap();
        assert_eq!(y1, random_element(&b, 5, 42).unwrap());
        assert!(b.coordinates(&y1).is_some());
        for c in random_coefficients(50, 3, 9) {
            assert!((-3..=3).contains(&c));
        }
    }
}
