//! One representative per component under `(p, λ) ↔ (p̄, λ_1)`.

use crate::weights::{bar_involution, ParamSet};

/// The representative with `λ > 0`; if both qualify, the smaller weight
/// vector (then the smaller `λ`); if neither does, the smaller pair.
pub fn canonical_params(ps: &ParamSet) -> ParamSet {
    let bar = bar_involution(ps);
    if bar.weights == ps.weights && bar.lambda == ps.lambda {
        return ps.clone();
    }
    let key = |q: &ParamSet| (q.weights.clone(), q.lambda);
    let pick_bar = match (ps.lambda > 0, bar.lambda > 0) {
        (true, false) => false,
        (false, true) => true,
        _ => key(&bar) < key(ps),
    };
    if pick_bar {
        bar
    } else {
        ps.clone()
    }
}

pub fn is_canonical(ps: &ParamSet) -> bool {
    canonical_params(ps) == *ps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{derive_params, WeightVector};

    fn ps(w: &[i64], l: i64, d: i64) -> ParamSet {
        derive_params(&WeightVector::new(w.to_vec()).unwrap(), l, d).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(canonical_params(&ps(&[7, 3, 1], -1, 2)), ps(&[7, 6, 4], 8, 2));
        assert_eq!(canonical_params(&ps(&[7, 6, 4], 8, 2)), ps(&[7, 6, 4], 8, 2));
        assert_eq!(canonical_params(&ps(&[3, 2, 1], 0, 1)), ps(&[3, 2, 1], 0, 1));
        // Both λ positive: (6,5,2;4) and (6,4,1;2).
        assert_eq!(canonical_params(&ps(&[6, 5, 2], 4, 2)), ps(&[6, 4, 1], 2, 2));
    }
}
