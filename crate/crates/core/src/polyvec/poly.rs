//! Sparse multivariate polynomials over `Q`, plus Laurent polynomials used
//! by the chart changes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, k: usize) -> Self {
        let mut e = vec![0; n];
        e[k] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial in `n` variables `x_1..x_n` (stored 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        Poly::term(n, Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, BigRational::one())
    }

    /// The coordinate function `x_{k+1}`.
    pub fn var(n: usize, k: usize) -> Self {
        Poly::term(n, Monomial::var(n, k), BigRational::one())
    }

    pub fn term(n: usize, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.0.len(), n, "monomial arity");
        let mut p = Poly::zero(n);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(exps: &[u32], c: i64) -> Self {
        Poly::term(exps.len(), Monomial(exps.to_vec()), rat(c))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(n: usize, it: I) -> Self {
        let mut p = Poly::zero(n);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.0.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, deg: u32) -> Poly {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::one(self.n))
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// `∂/∂x_{k+1}`
    pub fn derivative(&self, k: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[k] -= 1;
            out.add_term(m2, c * rat(e as i64));
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.n);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The weighted degrees `Σ p_k σ_k` occurring in this polynomial.
    pub fn weighted_degrees(&self, weights: &[i64]) -> Vec<i64> {
        let mut w: Vec<i64> = self
            .terms
            .keys()
            .map(|m| m.weighted_degree(weights))
            .collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// Divides out the gcd of the numerators and the lcm of the
    /// denominators, and makes the leading coefficient positive.
    pub fn primitive_integer_form(&self) -> Poly {
        use num_integer::Integer;
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            return self.clone();
        }
        let mut factor = BigRational::new(l, g);
        if let Some((_, c)) = self.leading() {
            if c.is_negative() {
                factor = -factor;
            }
        }
        self.scale(&factor)
    }

    pub fn max_degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// A polynomial whose exponents may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<i64>, c: BigRational) -> Self {
        let mut p = LaurentPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn mul(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.n);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Substitutes `x_k ↦ images[k]` (Laurent monomials in `m` variables).
    pub fn substitute(p: &Poly, images: &[Vec<i64>]) -> LaurentPoly {
        assert_eq!(images.len(), p.nvars());
        let m = images.first().map_or(0, Vec::len);
        let mut out = LaurentPoly::zero(m);
        for (mono, c) in p.terms() {
            let mut e = vec![0i64; m];
            for (k, &s) in mono.0.iter().enumerate() {
                for (slot, img) in e.iter_mut().zip(&images[k]) {
                    *slot += s as i64 * img;
                }
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Componentwise minimum exponent over all terms (`None` if zero).
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect()
        }))
    }

    pub fn shift(&self, by: &[i64]) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Converts to an ordinary polynomial if every exponent is non-negative.
    pub fn to_poly(&self) -> Option<Poly> {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            if e.iter().any(|&x| x < 0) {
                return None;
            }
            out.add_term(Monomial(e.iter().map(|&x| x as u32).collect()), c.clone());
        }
        Some(out)
    }

    /// `∂/∂y_{k+1}`
    pub fn derivative(&self, k: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k] -= 1;
            out.add_term(e2, c * rat(e[k]));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: usize) -> Poly {
        Poly::var(3, k)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial(vec![1, 0, 1]);
        let b = Monomial(vec![0, 2, 1]);
        let c = Monomial(vec![2, 0, 0]);
        assert!(a < b);
        assert!(c < b);
        assert!(Monomial(vec![0, 2, 0]) < c);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        let q = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
        assert_eq!(p.total_degree(), Some(2));
        assert!(p.is_homogeneous());
    }

    #[test]
    fn derivative_and_eval() {
        let p = Poly::monomial(&[2, 1, 0], 3);
        assert_eq!(p.derivative(0), Poly::monomial(&[1, 1, 0], 6));
        assert!(p.derivative(2).is_zero());
        let v = p.eval(&[rat(2), rat(-1), rat(5)]);
        assert_eq!(v, rat(-12));
    }

    #[test]
    fn laurent_substitution_and_clearing() {
        // x1 ↦ 1/u1, x2 ↦ u3/u1, x3 ↦ u2/u1
        let images = vec![vec![-1, 0, 0], vec![-1, 0, 1], vec![-1, 1, 0]];
        let p = &Poly::monomial(&[1, 1, 0], 1) + &Poly::monomial(&[0, 0, 1], 2);
        let l = LaurentPoly::substitute(&p, &images);
        let min = l.min_exponents().unwrap();
        assert_eq!(min, vec![-2, 0, 0]);
        let cleared = l.shift(&[2, 0, 0]).to_poly().unwrap();
        assert_eq!(
            cleared,
            &Poly::monomial(&[0, 0, 1], 1) + &Poly::monomial(&[1, 1, 0], 2)
        );
    }
}
