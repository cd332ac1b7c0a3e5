//! Exact linear algebra over `Q` via fraction-free integer row reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter()
        .map(|q| q.numer() * (&l / q.denom()))
        .collect()
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    if g.is_zero() || g.is_one() {
        return;
    }
    for a in row.iter_mut() {
        *a /= &g;
    }
}

/// Reduced row echelon form with integer rows: each pivot column is zero
/// outside its pivot row. Pivots are chosen as the first nonzero row in
/// column order, so the result is deterministic.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

pub fn echelon(rows: &[Vec<BigRational>], ncols: usize) -> Echelon {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols);
            let mut v = integer_row(r);
            primitive(&mut v);
            v
        })
        .filter(|r| r.iter().any(|a| !a.is_zero()))
        .collect();
    m.sort();
    m.dedup();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(piv) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, piv);
        if m[top][col].is_negative() {
            for a in m[top].iter_mut() {
                *a = -&*a;
            }
        }
        let pivot_row = m[top].clone();
        let p = pivot_row[col].clone();
        for r in 0..m.len() {
            if r == top || m[r][col].is_zero() {
                continue;
            }
            let a = m[r][col].clone();
            let g = p.gcd(&a);
            let (fp, fa) = (&p / &g, &a / &g);
            for c in 0..ncols {
                if pivot_row[c].is_zero() && m[r][c].is_zero() {
                    continue;
                }
                m[r][c] = &fp * &m[r][c] - &fa * &pivot_row[c];
            }
            primitive(&mut m[r]);
        }
        pivots.push(col);
        top += 1;
        if top == m.len() {
            break;
        }
    }
    m.truncate(top);
    Echelon {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    echelon(rows, ncols).pivots.len()
}

/// A basis of `{v : rows · v = 0}`, each vector scaled so its first nonzero
/// entry is 1.
pub fn kernel(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let e = echelon(rows, ncols);
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in e.pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut out = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (r, &c) in e.pivots.iter().enumerate() {
            let a = &e.rows[r][free];
            if !a.is_zero() {
                v[c] = -BigRational::new(a.clone(), e.rows[r][c].clone());
            }
        }
        normalize_leading(&mut v);
        out.push(v);
    }
    out
}

pub fn normalize_leading(v: &mut [BigRational]) {
    if let Some(lead) = v.iter().find(|a| !a.is_zero()).cloned() {
        for a in v.iter_mut() {
            *a /= &lead;
        }
    }
}

/// Some `x` with `Σ_k x_k cols[k] = target`, or `None`.
pub fn solve_combination(cols: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = cols.len();
    let rows: Vec<Vec<BigRational>> = (0..target.len())
        .map(|i| {
            let mut r: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let e = echelon(&rows, k + 1);
    if e.pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &c) in e.pivots.iter().enumerate() {
        x[c] = BigRational::new(e.rows[r][k].clone(), e.rows[r][c].clone());
    }
    Some(x)
}
