#![allow(dead_code)]

use kupka::polyvec::{rat, Monomial, Poly, VectorField};
use kupka::w0space::{random_coefficients, weighted_monomials};

/// Quasi-homogeneous field of weight `lambda` for `S = diag(w)`: every
/// monomial slot of total degree ≤ `cap`, coefficients taken from `coeffs`
/// cyclically.
pub fn qh_field(w: &[i64], lambda: i64, cap: u32, coeffs: &[i64]) -> VectorField {
    let n = w.len();
    let mut k = 0;
    let comps = (0..n)
        .map(|j| {
            let mut p = Poly::zero(n);
            for e in weighted_monomials(w, w[j] + lambda, cap) {
                p.add_term(Monomial(e), rat(coeffs[k % coeffs.len()]));
                k += 1;
            }
            p
        })
        .collect();
    VectorField::new(comps).unwrap()
}

pub fn seeded_qh_field(w: &[i64], lambda: i64, cap: u32, seed: u64) -> VectorField {
    qh_field(w, lambda, cap, &random_coefficients(64, 6, seed))
}

/// Every `e ∈ N^n` with `Σ e_k ≤ cap` (naive nested enumeration).
pub fn all_exponents(n: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            let used: u32 = v.iter().sum();
            for e in 0..=cap - used {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Brute-force solutions of `Σ e_k w_k = target`, `Σ e_k ≤ cap`, sorted.
pub fn knapsack_oracle(w: &[i64], target: i64, cap: u32) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = all_exponents(w.len(), cap)
        .into_iter()
        .filter(|e| e.iter().zip(w).map(|(&a, &b)| a as i64 * b).sum::<i64>() == target)
        .collect();
    v.sort();
    v
}

/// Coprime strictly decreasing triples with `p_1 ≤ max`.
pub fn triples(max: i64) -> Vec<[i64; 3]> {
    let g = |a: i64, b: i64| num_integer::gcd(a, b);
    let mut v = Vec::new();
    for p in 3..=max {
        for q in 2..p {
            for r in 1..q {
                if g(g(p, q), r) == 1 {
                    v.push([p, q, r]);
                }
            }
        }
    }
    v
}
