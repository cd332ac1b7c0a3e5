//! Closed-form case lists for three and four weights. Each case yields the
//! finitely many parameter choices `(m, k, p)` compatible with `p > q`.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    B1a,
    B1b,
    B1c,
    B1d,
    B2a,
    B2b,
    B2c,
    B2d,
    Exceptional,
    ChainSearch,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A tuple produced by a case formula, before normalization checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseInstance {
    pub tag: CaseTag,
    pub params: BTreeMap<String, i64>,
    pub weights: Vec<i64>,
    pub lambda: i64,
}

fn inst(tag: CaseTag, params: &[(&str, i64)], weights: Vec<i64>, lambda: i64) -> CaseInstance {
    CaseInstance {
        tag,
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        weights,
        lambda,
    }
}

fn divisors(n: i64) -> Vec<i64> {
    if n <= 0 {
        return Vec::new();
    }
    (1..=n).filter(|k| n % k == 0).collect()
}

/// Sorted, deduplicated divisors of any of `ns`.
fn divisors_of_any(ns: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = ns.iter().flat_map(|&n| divisors(n)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Strictly decreasing and coprime.
fn admissible(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] > p[1])
        && w.last().is_some_and(|&x| x >= 1)
        && w.iter().fold(0, |g, &x| g.gcd(&x)) == 1
}

/// `p > q(m)` with `p` a divisor of one of `targets`, `gcd(p, m) = 1`.
fn divisor_case(
    tag: CaseTag,
    targets: &[i64],
    shape: impl Fn(i64, i64) -> (Vec<i64>, i64),
    out: &mut Vec<CaseInstance>,
) {
    for p in divisors_of_any(targets) {
        for m in 1.. {
            let (w, lambda) = shape(p, m);
            if w[1] >= p {
                break;
            }
            if p.gcd(&m) == 1 && admissible(&w) {
                out.push(inst(tag, &[("m", m), ("p", p)], w, lambda));
            }
        }
    }
}

pub fn three_weight_cases(d: i64) -> Vec<CaseInstance> {
    let mut out = Vec::new();
    let d2 = d * d;
    divisor_case(
        CaseTag::B1a,
        &[d2, d2 + d + 1],
        |p, m| (vec![p, m * (d + 1), m * d], m * d2),
        &mut out,
    );
    // p = d > q = r + 1 > r.
    for r in 1..d - 1 {
        let w = vec![d, r + 1, r];
        if admissible(&w) {
            out.push(inst(CaseTag::B1b, &[("r", r)], w, d * r));
        }
    }
    for k in divisors(d + 1) {
        for m in 1.. {
            let w = vec![k * d, m * d + k, m * d];
            if w[1] >= w[0] {
                break;
            }
            if k.gcd(&m) == 1 && admissible(&w) {
                out.push(inst(CaseTag::B1c, &[("k", k), ("m", m)], w, m * d2));
            }
        }
    }
    divisor_case(
        CaseTag::B1d,
        &[d2 - d, d2, d2 - 1],
        |p, m| (vec![p, m * d, m * (d - 1)], m * (d2 - d)),
        &mut out,
    );
    out
}

/// The four alternatives allowed for `k` in case B2b.
fn b2b_subcase(k: i64, m: i64, d: i64) -> Option<&'static str> {
    let d2 = d * d;
    if d % k == 0 {
        return Some("k|d");
    }
    // kd | m(d²+d) + k forces k = jd with j | d + 1; the divisibility
    // itself is still checked.
    if k % d == 0 && (d + 1) % (k / d) == 0 && (m * (d2 + d) + k) % (k * d) == 0 {
        return Some("kd|m(d^2+d)+k");
    }
    if m % d == 0 && (d2 + d + 1) % k == 0 {
        return Some("d|m,k|d^2+d+1");
    }
    if (d + 1) % k == 0 && (m * (d + 1) / k).gcd(&d) == 1 {
        return Some("k|d+1");
    }
    None
}

pub fn four_weight_cases(d: i64) -> Vec<CaseInstance> {
    let mut out = Vec::new();
    let (d2, d3) = (d * d, d * d * d);
    divisor_case(
        CaseTag::B2a,
        &[d3, d3 + d2 + d + 1],
        |p, m| (vec![p, m * (d2 + d + 1), m * (d2 + d), m * d2], m * d3),
        &mut out,
    );
    // p = kd > q = md + k forces m < k; k ≤ max(d(d+1), d²+d+1).
    for k in 1..=d2 + d + 1 {
        for m in 1..k {
            let w = vec![k * d, m * d + k, m * (d + 1), m * d];
            if k.gcd(&m) != 1 || !admissible(&w) {
                continue;
            }
            if b2b_subcase(k, m, d).is_some() {
                out.push(inst(CaseTag::B2b, &[("k", k), ("m", m)], w, m * d2));
            }
        }
    }
    divisor_case(
        CaseTag::B2c,
        &[d3 - d2, d3, d3 - 1],
        |p, m| (vec![p, m * d2, m * (d2 - 1), m * (d2 - d)], m * (d3 - d2)),
        &mut out,
    );
    for k in 1..=d2 {
        if !((d - 1) % k == 0 || d % k == 0 || (d2 - 1) % k == 0) {
            continue;
        }
        for m in 1..k {
            let ok = (d - 1) % k == 0 || d % k == 0 || (m % d == 0 && (d2 - 1) % k == 0);
            let w = vec![k * d, m * (d - 1) + k, m * d, m * (d - 1)];
            if ok && k.gcd(&m) == 1 && admissible(&w) {
                out.push(inst(CaseTag::B2d, &[("k", k), ("m", m)], w, m * (d2 - d)));
            }
        }
    }
    out
}
