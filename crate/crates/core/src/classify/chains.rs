//! The two chain shapes of conditions `c_ij` that characterize GK families.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::weights::{check_condition, ConditionId, ParamSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChainKind {
    B1,
    B2,
}

/// `b1`: `c_11, …, c_ii, c_{i+1,i+2}, …, c_{n−1,n}`;
/// `b2`: `c_11, …, c_{i−2,i−2}, λ = p_i(d − 1), c_{i,i+1}, …, c_{n−1,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConditionChain {
    pub n: usize,
    pub kind: ChainKind,
    pub i: usize,
    pub conditions: Vec<ConditionId>,
    /// For `b2`, the index `i` of the equality `λ = p_i(d − 1)`.
    pub equality: Option<usize>,
    /// Indices `j` whose `τ_j` must be nonzero.
    pub nonzero_taus: Vec<usize>,
}

impl ConditionChain {
    fn build(n: usize, kind: ChainKind, i: usize) -> Self {
        let c = |a: usize, b: usize| ConditionId::new(n, a, b).expect("chain index in range");
        let (head, tail_from, equality) = match kind {
            ChainKind::B1 => (i, i + 1, None),
            ChainKind::B2 => (i - 2, i, Some(i)),
        };
        let mut conditions: Vec<_> = (1..=head).map(|k| c(k, k)).collect();
        conditions.extend((tail_from..n).map(|k| c(k, k + 1)));
        let nonzero_taus = (2..=n).filter(|&j| Some(j) != equality).collect();
        ConditionChain {
            n,
            kind,
            i,
            conditions,
            equality,
            nonzero_taus,
        }
    }

    /// The `c_ij` conditions and, for `b2`, the equality; τ's are separate.
    pub fn conditions_hold(&self, ps: &ParamSet) -> bool {
        if ps.n() != self.n {
            return false;
        }
        if let Some(i) = self.equality {
            if ps.lambda != ps.p(i) * (ps.d - 1) {
                return false;
            }
        }
        self.conditions.iter().all(|&c| check_condition(ps, c))
    }

    pub fn taus_nonzero(&self, ps: &ParamSet) -> bool {
        self.nonzero_taus.iter().all(|&j| ps.chart_tau(j) != 0)
    }

    pub fn is_satisfied(&self, ps: &ParamSet) -> bool {
        ps.lambda > 0 && self.conditions_hold(ps) && self.taus_nonzero(ps)
    }

    /// Solves the chain for `p_2, …, p_n` given `p_1` and `λ`. Every chain
    /// fixes each of them: forward from `p_1` along `c_kk`, backward from
    /// `p_{n+1} = 0` along `c_{k,k+1}`, and `p_i = λ/(d − 1)` for `b2`.
    pub fn solve(&self, p1: i64, lambda: i64, d: i64) -> Option<Vec<i64>> {
        let n = self.n;
        let mut p = vec![0i64; n + 2];
        p[1] = p1;
        let head = match self.kind {
            ChainKind::B1 => self.i,
            ChainKind::B2 => self.i - 2,
        };
        for k in 1..=head {
            p[k + 1] = exact_div(p[k] + lambda, d)?;
        }
        let stop = match self.kind {
            ChainKind::B1 => head + 2,
            ChainKind::B2 => {
                if d == 1 {
                    return None;
                }
                p[self.i] = exact_div(lambda, d - 1)?;
                self.i + 1
            }
        };
        for k in (stop..=n).rev() {
            p[k] = exact_div(p[k + 1] + lambda, d)?;
        }
        Some(p[1..=n].to_vec())
    }
}

fn exact_div(a: i64, b: i64) -> Option<i64> {
    (b != 0 && a % b == 0).then(|| a / b)
}

impl fmt::Display for ConditionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ChainKind::B1 => "b1",
            ChainKind::B2 => "b2",
        };
        let mut parts: Vec<String> = Vec::new();
        let head = match self.kind {
            ChainKind::B1 => self.i,
            ChainKind::B2 => self.i - 2,
        };
        parts.extend(self.conditions[..head].iter().map(|c| c.to_string()));
        if let Some(i) = self.equality {
            parts.push(format!("λ=p{i}(d-1)"));
        }
        parts.extend(self.conditions[head..].iter().map(|c| c.to_string()));
        let taus: Vec<String> = self.nonzero_taus.iter().map(|j| j.to_string()).collect();
        write!(
            f,
            "{kind} i={}: {} ; τ_j≠0 for j∈{{{}}}",
            self.i,
            parts.join(", "),
            taus.join(",")
        )
    }
}

/// All `b1` chains for `0 ≤ i ≤ ⌊(n−1)/2⌋`, then all `b2` chains for
/// `2 ≤ i ≤ ⌊(n+2)/2⌋`.
pub fn condition_chains(n: usize) -> Vec<ConditionChain> {
    if n < 3 {
        return Vec::new();
    }
    let b1 = (0..=(n - 1) / 2).map(|i| ConditionChain::build(n, ChainKind::B1, i));
    let b2 = (2..=(n + 2) / 2).map(|i| ConditionChain::build(n, ChainKind::B2, i));
    b1.chain(b2).collect()
}

/// Chains satisfied by `ps` itself (not its bar).
pub fn satisfied_chains(ps: &ParamSet) -> Vec<ConditionChain> {
    condition_chains(ps.n())
        .into_iter()
        .filter(|c| c.is_satisfied(ps))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{derive_params, WeightVector};

    fn ps(w: &[i64], l: i64, d: i64) -> ParamSet {
        derive_params(&WeightVector::new(w.to_vec()).unwrap(), l, d).unwrap()
    }

    #[test]
    fn chain_counts() {
        assert_eq!(condition_chains(3).len(), 3);
        assert_eq!(condition_chains(4).len(), 4);
        let five = condition_chains(5);
        assert_eq!(five.len(), 5);
        let kinds: Vec<_> = five.iter().map(|c| (c.kind, c.i)).collect();
        assert_eq!(
            kinds,
            vec![
                (ChainKind::B1, 0),
                (ChainKind::B1, 1),
                (ChainKind::B1, 2),
                (ChainKind::B2, 2),
                (ChainKind::B2, 3)
            ]
        );
        for c in &five {
            assert_eq!(c.conditions.len() + c.equality.iter().count(), 4);
        }
    }

    #[test]
    fn chain_shapes() {
        let c = &condition_chains(4)[1];
        let ids: Vec<String> = c.conditions.iter().map(|c| c.to_string()).collect();
        assert_eq!(ids, ["c1,1", "c2,3", "c3,4"]);
        let b2 = &condition_chains(4)[3];
        assert_eq!(b2.equality, Some(3));
        let ids: Vec<String> = b2.conditions.iter().map(|c| c.to_string()).collect();
        assert_eq!(ids, ["c1,1", "c3,4"]);
        assert_eq!(b2.nonzero_taus, vec![2, 4]);
    }

    #[test]
    fn known_rows_satisfy_expected_chains() {
        let k = |p: &ParamSet| -> Vec<(ChainKind, usize)> {
            satisfied_chains(p).iter().map(|c| (c.kind, c.i)).collect()
        };
        assert_eq!(k(&ps(&[7, 6, 4], 8, 2)), vec![(ChainKind::B1, 0)]);
        assert_eq!(k(&ps(&[7, 3, 2], 4, 2)), vec![(ChainKind::B1, 0)]);
        assert_eq!(k(&ps(&[4, 2, 1], 2, 2)), vec![(ChainKind::B2, 2)]);
        assert!(k(&ps(&[8, 7, 3], 1, 2)).is_empty());
    }

    #[test]
    fn solve_inverts_conditions() {
        for c in condition_chains(4) {
            for p1 in 2..40 {
                for lambda in 1..80 {
                    let Some(p) = c.solve(p1, lambda, 2) else { continue };
                    let Ok(w) = WeightVector::new(p) else { continue };
                    let q = derive_params(&w, lambda, 2).unwrap();
                    assert!(c.conditions_hold(&q), "{c} {q}");
                }
            }
        }
    }
}
