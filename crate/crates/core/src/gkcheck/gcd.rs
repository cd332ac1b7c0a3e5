//! Multivariate gcd over `Q` by recursive primitive remainder sequences.

use crate::polyvec::{Monomial, Poly};

/// Coefficients of `p` viewed as a polynomial in `x_v`.
fn as_univariate(p: &Poly, v: usize) -> Vec<Poly> {
    let n = p.nvars();
    let mut out = vec![Poly::zero(n); p.max_degree_in(v) as usize + 1];
    for (m, c) in p.terms() {
        let mut e = m.0.clone();
        let k = e[v] as usize;
        e[v] = 0;
        out[k].add_term(Monomial(e), c.clone());
    }
    out
}


/// `a / b` when `b` divides `a` exactly.
pub fn div_exact(a: &Poly, b: &Poly) -> Option<Poly> {
    let (bm, bc) = b.leading()?;
    let mut r = a.clone();
    let mut q = Poly::zero(a.nvars());
    while let Some((m, c)) = r.leading() {
        if !bm.divides(m) {
            return None;
        }
        let shift = Monomial(m.0.iter().zip(&bm.0).map(|(x, y)| x - y).collect());
        let f = c / bc;
        q.add_term(shift.clone(), f.clone());
        r -= &b.mul_monomial(&shift, &f);
    }
    Some(q)
}

fn is_constant(p: &Poly) -> bool {
    p.total_degree() == Some(0)
}

fn min_exponents(p: &Poly) -> Vec<u32> {
    let mut it = p.terms().map(|(m, _)| m.0.clone());
    let first = it.next().unwrap_or_else(|| vec![0; p.nvars()]);
    it.fold(first, |acc, e| acc.iter().zip(&e).map(|(a, b)| *a.min(b)).collect())
}

fn content(p: &Poly, v: usize) -> Poly {
    gcd_many(&as_univariate(p, v))
}

fn primitive_part(p: &Poly, v: usize) -> Poly {
    let c = content(p, v);
    div_exact(p, &c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` in `x_v`.
fn prem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let bc = as_univariate(b, v);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    let mut r = a.clone();
    loop {
        let rc = as_univariate(&r, v);
        let dr = rc.len() - 1;
        if r.is_zero() || dr < db {
            return r;
        }
        let lr = rc[dr].clone();
        let mut e = vec![0u32; a.nvars()];
        e[v] = (dr - db) as u32;
        let shift = Poly::monomial(&e, 1);
        r = &(&r * &lb) - &(&(&lr * &shift) * b);
    }
}

/// A gcd of `a` and `b`, normalized to a primitive integer polynomial with
/// positive leading coefficient (zero only if both are zero).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let n = a.nvars();
    if a.is_zero() {
        return b.primitive_integer_form();
    }
    if b.is_zero() {
        return a.primitive_integer_form();
    }
    if is_constant(a) || is_constant(b) {
        return Poly::one(n);
    }
    if a.len() == 1 || b.len() == 1 {
        let (ea, eb) = (min_exponents(a), min_exponents(b));
        let e: Vec<u32> = ea.iter().zip(&eb).map(|(x, y)| *x.min(y)).collect();
        return Poly::monomial(&e, 1);
    }
    let v = (0..n)
        .rev()
        .find(|&k| a.max_degree_in(k) > 0 || b.max_degree_in(k) > 0)
        .expect("nonconstant");
    let (da, db) = (a.max_degree_in(v), b.max_degree_in(v));
    if da == 0 {
        return gcd(a, &content(b, v));
    }
    if db == 0 {
        return gcd(&content(a, v), b);
    }
    let c = gcd(&content(a, v), &content(b, v));
    let (mut f, mut g) = (primitive_part(a, v), primitive_part(b, v));
    if da < db {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = prem(&f, &g, v);
        f = g;
        g = if r.is_zero() { r } else { primitive_part(&r, v) };
    }
    let pp = if f.max_degree_in(v) == 0 {
        Poly::one(n)
    } else {
        primitive_part(&f, v)
    };
    (&c * &pp).primitive_integer_form()
}

/// gcd of a list, stopping as soon as it becomes constant.
pub fn gcd_many(ps: &[Poly]) -> Poly {
    let mut sorted: Vec<&Poly> = ps.iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = sorted.first() else {
        return ps.first().map_or_else(|| Poly::zero(0), |p| Poly::zero(p.nvars()));
    };
    let n = first.nvars();
    if sorted.iter().any(|p| is_constant(p)) {
        return Poly::one(n);
    }
    sorted.sort_by_key(|p| (p.total_degree(), p.len()));
    let mut g = sorted[0].primitive_integer_form();
    for p in &sorted[1..] {
        if is_constant(&g) {
            break;
        }
        g = gcd(&g, p);
    }
    if g.is_zero() {
        return g;
    }
    if is_constant(&g) {
        Poly::one(n)
    } else {
        g
    }
}

pub fn is_constant_gcd(ps: &[Poly]) -> bool {
    let g = gcd_many(ps);
    !g.is_zero() && is_constant(&g)
}
