//! Experimental chain search for any `n`: each chain determines
//! `p_2, …, p_n` from `(p_1, λ)`, so a sweep over `p_1` is finite.

use crate::gkcheck::CertifyConfig;
use crate::weights::{derive_params, m1_integral, WeightVector};

use super::chains::condition_chains;
use super::{describe, CaseTag, ComponentDescriptor};

/// Arithmetic survivors `(weights, λ)` of every chain with `p_1 ≤ p1_max`,
/// before certification. `λ` ranges over `1..p_1·d` since `p_n = λ/d < p_1`.
pub fn chain_candidates(n: usize, d: i64, p1_max: i64) -> Vec<(WeightVector, i64)> {
    let mut out = Vec::new();
    for chain in condition_chains(n) {
        for p1 in 2..=p1_max {
            for lambda in 1..p1 * d {
                let Some(p) = chain.solve(p1, lambda, d) else { continue };
                let Ok(w) = WeightVector::new(p) else { continue };
                let ps = derive_params(&w, lambda, d).expect("d ≥ 1");
                if !chain.is_satisfied(&ps) {
                    continue;
                }
                let divides = (1..=n).any(|k| (ps.p(k) + lambda) % p1 == 0);
                if divides && m1_integral(w.as_slice(), lambda) {
                    out.push((w, lambda));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Certified chain-search components, canonicalized and sorted.
pub fn search_general_n(
    n: usize,
    d: i64,
    p1_max: i64,
    cfg: &CertifyConfig,
) -> Vec<ComponentDescriptor> {
    use rayon::prelude::*;
    let cands = chain_candidates(n, d, p1_max);
    let mut out: Vec<ComponentDescriptor> = cands
        .par_iter()
        .filter_map(|(w, lambda)| {
            let ps = derive_params(w, *lambda, d).ok()?;
            let desc = describe(&ps, CaseTag::ChainSearch, Default::default(), Some(cfg)).ok()?;
            desc.is_certified().then_some(desc)
        })
        .collect();
    out.sort_by_key(|a| a.key());
    out.dedup_by(|a, b| a.key() == b.key());
    out
}
