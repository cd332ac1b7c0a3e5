//! Explicit witness fields tried before random elements of `W_0`.

use crate::polyvec::{rat, Monomial, Poly, VectorField};
use crate::w0space::W0Basis;
use crate::weights::ParamSet;

#[derive(Clone, Debug)]
pub struct Candidate {
    pub source: String,
    pub field: VectorField,
}

/// Adds `c · x^e ∂/∂x_{j+1}` if the monomial has the right weight.
fn add_if_weighted(comps: &mut [Poly], ps: &ParamSet, j: usize, e: Vec<u32>, c: i64) -> bool {
    let w = ps.weights.as_slice();
    let m = Monomial(e);
    if m.weighted_degree(w) != w[j] + ps.lambda {
        return false;
    }
    comps[j].add_term(m, rat(c));
    true
}

fn pow(n: usize, k: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[k] = e;
    v
}

fn mono(n: usize, pairs: &[(usize, u32)]) -> Vec<u32> {
    let mut v = vec![0u32; n];
    for &(k, e) in pairs {
        v[k] += e;
    }
    v
}

/// `−τ_1 x_1 x_n^d ∂_1 + Σ_{k≥2} (τ_k x_k x_n^d + x_{k−1}^d) ∂_k`, the
/// field whose top part is `x_n^d (τ R_n − (n + d) S)`.
pub fn exceptional_template(ps: &ParamSet) -> Option<VectorField> {
    let n = ps.n();
    let d = ps.d as u32;
    let mut comps = vec![Poly::zero(n); n];
    for k in 0..n {
        let t = if k == 0 { -ps.tau_i[0] } else { ps.tau_i[k] };
        if t != 0 && !add_if_weighted(&mut comps, ps, k, mono(n, &[(k, 1), (n - 1, d)]), t) {
            return None;
        }
        if k > 0 {
            add_if_weighted(&mut comps, ps, k, pow(n, k - 1, d), 1);
        }
    }
    VectorField::new(comps).ok()
}

/// n = 4, chain `c11, c23, c34`:
/// `(−τ_1 x w^d + y^d)∂x + (τ_2 y w^d + x^a z^b)∂y + τ_3 z w^d ∂z + (τ_4 w^{d+1} + x^l + z^d)∂w`.
pub fn b1_template(ps: &ParamSet) -> Vec<VectorField> {
    let n = ps.n();
    if n != 4 {
        return Vec::new();
    }
    let d = ps.d as u32;
    let (p, q, r) = (ps.p(1), ps.p(2), ps.p(3));
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            if a as i64 * p + b as i64 * r != q + ps.lambda {
                continue;
            }
            let mut comps = vec![Poly::zero(n); n];
            let taus = [-ps.tau_i[0], ps.tau_i[1], ps.tau_i[2], ps.tau_i[3]];
            for (k, &t) in taus.iter().enumerate() {
                add_if_weighted(&mut comps, ps, k, mono(n, &[(k, 1), (3, d)]), t);
            }
            add_if_weighted(&mut comps, ps, 0, pow(n, 1, d), 1);
            add_if_weighted(&mut comps, ps, 1, mono(n, &[(0, a), (2, b)]), 1);
            add_if_weighted(&mut comps, ps, 3, pow(n, 2, d), 1);
            for l in 1..=d + 1 {
                add_if_weighted(&mut comps, ps, 3, pow(n, 0, l), 1);
            }
            if let Ok(f) = VectorField::new(comps) {
                out.push(f);
            }
        }
    }
    out
}

/// Coefficient choices `(a, a_1, b, b_1, c, c_1)` for the b.2 template.
const B2_CHOICES: [[i64; 6]; 6] = [
    [1, 2, 3, 1, -2, 5],
    [2, -1, 1, 3, 4, -3],
    [1, 1, -1, 2, 3, 1],
    [3, 1, 2, -1, 1, 2],
    [-2, 3, 1, 1, 2, -1],
    [1, -3, 2, 2, -1, 4],
];

/// n = 4, `λ = q(d − 1)`, `l = (p + λ)/p`:
/// `x(−τ_1 w^d + a x^{l−1} + a_1 y^{d−1})∂x + y(τ_2 w^d + b x^{l−1} + b_1 y^{d−1})∂y
///  + z(τ_3 w^d + c x^{l−1} + c_1 y^{d−1})∂z + (w(τ_4 w^d + e x^{l−1} + e_1 y^{d−1}) + z^d)∂w`
/// with `e = −(l a + b + c)`, `e_1 = −(a_1 + d b_1 + c_1)`.
pub fn b2_templates(ps: &ParamSet) -> Vec<VectorField> {
    let n = ps.n();
    if n != 4 || (ps.p(1) + ps.lambda) % ps.p(1) != 0 {
        return Vec::new();
    }
    let d = ps.d as u32;
    let l = ((ps.p(1) + ps.lambda) / ps.p(1)) as u32;
    if l < 1 {
        return Vec::new();
    }
    let taus = [-ps.tau_i[0], ps.tau_i[1], ps.tau_i[2], ps.tau_i[3]];
    let mut out = Vec::new();
    for ch in B2_CHOICES {
        let [a, a1, b, b1, c, c1] = ch;
        let e = -(l as i64 * a + b + c);
        let e1 = -(a1 + ps.d * b1 + c1);
        let rows = [(a, a1), (b, b1), (c, c1), (e, e1)];
        let mut comps = vec![Poly::zero(n); n];
        let mut ok = true;
        for k in 0..4 {
            let (u, v) = rows[k];
            ok &= add_if_weighted(&mut comps, ps, k, mono(n, &[(k, 1), (3, d)]), taus[k]);
            if u != 0 {
                ok &= add_if_weighted(&mut comps, ps, k, mono(n, &[(k, 1), (0, l - 1)]), u);
            }
            if v != 0 {
                ok &= add_if_weighted(&mut comps, ps, k, mono(n, &[(k, 1), (1, d - 1)]), v);
            }
        }
        ok &= add_if_weighted(&mut comps, ps, 3, pow(n, 2, d), 1);
        if ok {
            if let Ok(f) = VectorField::new(comps) {
                out.push(f);
            }
        }
    }
    out
}

/// Explicit fields that lie in `W_0`, in trial order.
pub fn template_candidates(ps: &ParamSet, basis: &W0Basis) -> Vec<Candidate> {
    let mut raw: Vec<(String, VectorField)> = Vec::new();
    if let Some(f) = exceptional_template(ps) {
        raw.push(("template:exceptional".into(), f));
    }
    for (i, f) in b1_template(ps).into_iter().enumerate() {
        raw.push((format!("template:b1-{i}"), f));
    }
    for (i, f) in b2_templates(ps).into_iter().enumerate() {
        raw.push((format!("template:b2-{i}"), f));
    }
    raw.into_iter()
        .filter(|(_, f)| !f.is_zero() && basis.coordinates(f).is_some())
        .map(|(source, field)| Candidate { source, field })
        .collect()
}
