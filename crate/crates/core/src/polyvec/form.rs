//! Alternating forms with polynomial coefficients.
//!
//! `ν = dx_1 ∧ … ∧ dx_n`, and `i_V` inserts `V` into the first slot, so
//! `i_V(f dx_I) = Σ_s (−1)^s V_{I_s} f dx_{I∖I_s}`.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_rational::BigRational;

use super::field::VectorField;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltForm {
    n: usize,
    grade: usize,
    coeffs: BTreeMap<Vec<usize>, Poly>,
}

fn sign(parity: usize) -> BigRational {
    if parity % 2 == 0 {
        super::poly::rat(1)
    } else {
        super::poly::rat(-1)
    }
}

impl AltForm {
    pub fn zero(n: usize, grade: usize) -> Self {
        AltForm {
            n,
            grade,
            coeffs: BTreeMap::new(),
        }
    }

    /// The volume form `ν_n`.
    pub fn volume(n: usize) -> Self {
        let mut f = AltForm::zero(n, n);
        f.coeffs.insert((0..n).collect(), Poly::one(n));
        f
    }

    /// `f dx_I`; `idx` need not be sorted, repeated indices give zero.
    pub fn term(n: usize, idx: &[usize], f: Poly) -> Self {
        let mut out = AltForm::zero(n, idx.len());
        out.add_term(idx, f);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> Poly {
        self.coeffs
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.n))
    }

    /// Adds `f dx_{idx}` after sorting `idx` with the permutation sign.
    pub fn add_term(&mut self, idx: &[usize], f: Poly) {
        assert_eq!(idx.len(), self.grade);
        if f.is_zero() {
            return;
        }
        let mut v = idx.to_vec();
        let mut swaps = 0;
        for a in 0..v.len() {
            for b in 0..v.len() - 1 - a {
                if v[b] > v[b + 1] {
                    v.swap(b, b + 1);
                    swaps += 1;
                } else if v[b] == v[b + 1] {
                    return;
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return;
        }
        let f = f.scale(&sign(swaps));
        match self.coeffs.get_mut(&v) {
            Some(c) => {
                *c += &f;
                if c.is_zero() {
                    self.coeffs.remove(&v);
                }
            }
            None => {
                self.coeffs.insert(v, f);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> AltForm {
        let mut out = AltForm::zero(self.n, self.grade);
        for (k, f) in &self.coeffs {
            out.add_term(k, f.scale(c));
        }
        out
    }

    pub fn mul_poly(&self, g: &Poly) -> AltForm {
        let mut out = AltForm::zero(self.n, self.grade);
        for (k, f) in &self.coeffs {
            out.add_term(k, f * g);
        }
        out
    }

    /// `i_V` of this form.
    pub fn interior(&self, v: &VectorField) -> Result<AltForm> {
        if v.n() != self.n {
            return Err(Error::DimensionMismatch(self.n, v.n()));
        }
        if self.grade == 0 {
            return Ok(AltForm::zero(self.n, 0));
        }
        let mut out = AltForm::zero(self.n, self.grade - 1);
        for (idx, f) in &self.coeffs {
            for s in 0..idx.len() {
                let vi = v.component(idx[s]);
                if vi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(s);
                out.add_term(&rest, (vi * f).scale(&sign(s)));
            }
        }
        Ok(out)
    }

    /// Largest total degree among the coefficients.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.values().filter_map(Poly::total_degree).max()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &Poly> {
        self.coeffs.values()
    }
}

impl Add<&AltForm> for &AltForm {
    type Output = AltForm;
    fn add(self, rhs: &AltForm) -> AltForm {
        assert_eq!((self.n, self.grade), (rhs.n, rhs.grade));
        let mut out = self.clone();
        for (k, f) in &rhs.coeffs {
            out.add_term(k, f.clone());
        }
        out
    }
}

impl Sub<&AltForm> for &AltForm {
    type Output = AltForm;
    fn sub(self, rhs: &AltForm) -> AltForm {
        assert_eq!((self.n, self.grade), (rhs.n, rhs.grade));
        let mut out = self.clone();
        for (k, f) in &rhs.coeffs {
            out.add_term(k, -f);
        }
        out
    }
}

/// `ω = i_S i_X ν_n`: `X` goes in first, then `S`.
pub fn contract(s: &VectorField, x: &VectorField) -> Result<AltForm> {
    if s.n() != x.n() {
        return Err(Error::DimensionMismatch(s.n(), x.n()));
    }
    AltForm::volume(x.n()).interior(x)?.interior(s)
}

pub fn exterior_derivative(f: &AltForm) -> Result<AltForm> {
    if f.grade >= f.n {
        return Err(Error::GradeOverflow(f.grade));
    }
    let mut out = AltForm::zero(f.n, f.grade + 1);
    for (idx, c) in &f.coeffs {
        for k in 0..f.n {
            if idx.contains(&k) {
                continue;
            }
            let dk = c.derivative(k);
            if dk.is_zero() {
                continue;
            }
            let pos = idx.iter().filter(|&&i| i < k).count();
            let mut merged = idx.clone();
            merged.insert(pos, k);
            out.add_term(&merged, dk.scale(&sign(pos)));
        }
    }
    Ok(out)
}

/// The field `Y` with `dω = i_Y ν_n`.
pub fn rot(omega: &AltForm) -> Result<VectorField> {
    let n = omega.n;
    if omega.grade + 2 != n {
        return Err(Error::GradeMismatch {
            expected: n.saturating_sub(2),
            got: omega.grade,
        });
    }
    let dw = exterior_derivative(omega)?;
    let comps = (0..n)
        .map(|k| {
            let rest: Vec<usize> = (0..n).filter(|&i| i != k).collect();
            dw.coeff(&rest).scale(&sign(k))
        })
        .collect();
    VectorField::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyvec::field::{divergence, lie_bracket};
    use crate::polyvec::poly::rat;

    fn x(n: usize, k: usize) -> Poly {
        Poly::var(n, k)
    }

    #[test]
    fn contract_constant_fields_gives_minors() {
        let a = [2, -1, 3];
        let b = [5, 4, -7];
        let s = VectorField::new(a.iter().map(|&c| Poly::constant(3, rat(c))).collect()).unwrap();
        let t = VectorField::new(b.iter().map(|&c| Poly::constant(3, rat(c))).collect()).unwrap();
        let w = contract(&s, &t).unwrap();
        assert_eq!(w.grade(), 1);
        // Brute force: ω(v) = ν(t, s, v) = det[t; s; v].
        for k in 0..3 {
            let mut e = [0i64; 3];
            e[k] = 1;
            let rows = [b, a, e];
            let det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
                - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
                + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
            assert_eq!(w.coeff(&[k]), Poly::constant(3, rat(det)));
        }
        assert!(contract(&s, &s).unwrap().is_zero());
        assert_eq!(contract(&t, &s).unwrap(), contract(&s, &t).unwrap().scale(&rat(-1)));
    }

    #[test]
    fn rot_of_known_field() {
        let s = VectorField::diagonal(&[4, 2, 1]);
        let f = VectorField::single(3, 1, &x(3, 0) * &x(3, 2));
        let w = contract(&s, &f).unwrap();
        assert_eq!(rot(&w).unwrap(), f.scale(&rat(10)));
        assert!(rot(&exterior_derivative(&AltForm::term(3, &[], x(3, 0))).unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn d_of_interior_volume_is_divergence() {
        let y = VectorField::new(vec![
            &x(4, 0) * &x(4, 3),
            &x(4, 1) * &x(4, 1),
            x(4, 2).pow(3),
            &x(4, 0) * &x(4, 2),
        ])
        .unwrap();
        let iy = AltForm::volume(4).interior(&y).unwrap();
        let lhs = exterior_derivative(&iy).unwrap();
        assert_eq!(lhs, AltForm::volume(4).mul_poly(&divergence(&y)));
        assert!(exterior_derivative(&AltForm::volume(4)).is_err());
    }

    #[test]
    fn rot_identity_on_example() {
        let s = VectorField::diagonal(&[7, 6, 4]);
        let xs = [x(3, 0), x(3, 1), x(3, 2)];
        let z2 = &xs[2] * &xs[2];
        let y = VectorField::new(vec![
            (&xs[0] * &z2).scale(&rat(-10)),
            &(&xs[1] * &z2).scale(&rat(-5)) + &(&xs[0] * &xs[0]),
            &(&xs[2] * &z2).scale(&rat(5)) + &(&xs[1] * &xs[1]),
        ])
        .unwrap();
        assert_eq!(lie_bracket(&s, &y).unwrap(), y.scale(&rat(8)));
        let w = contract(&s, &y).unwrap();
        let want = &y.scale(&rat(25)) - &s.mul_poly(&divergence(&y));
        assert_eq!(rot(&w).unwrap(), want);
    }
}
