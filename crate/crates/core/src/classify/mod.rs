//! Enumeration and certification of GK components: the chain conditions,
//! the closed-form cases for three and four weights, the exceptional family,
//! canonical representatives and comparison with reference tables.

pub mod canonical;
pub mod cases;
pub mod chains;
pub mod exceptional;
pub mod search;
pub mod tables;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gkcheck::{certify_gk, replay, CertifyConfig, GkCertificate};
use crate::w0space::dim_component;
use crate::weights::{bar_involution, derive_params, ParamSet, WeightVector};

pub use canonical::{canonical_params, is_canonical};
pub use cases::{CaseInstance, CaseTag};
pub use chains::{condition_chains, satisfied_chains, ChainKind, ConditionChain};
pub use exceptional::{claim46_solutions, exceptional_dimension, exceptional_weights};
pub use search::{chain_candidates, search_general_n};
pub use tables::{verify_table, TableId, TableReport};

/// Splitting type of the tangent sheaf; recorded, not computed.
pub const TANGENT_SHEAF: &str = "O ⊕ O(1−d)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certification {
    NotRequested,
    Certified { certificate: Box<GkCertificate> },
    /// The witness search gave up; the component is still listed.
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDescriptor {
    pub n: usize,
    pub d: i64,
    /// Canonical representative.
    pub weights: WeightVector,
    pub lambda: i64,
    pub case_tag: CaseTag,
    pub case_params: BTreeMap<String, i64>,
    pub dimension: i64,
    /// The certificate is for the descriptor's pair or for its bar,
    /// whichever carries the GK point at the origin.
    pub certification: Certification,
    pub metadata: String,
}

impl ComponentDescriptor {
    pub fn key(&self) -> (WeightVector, i64) {
        (self.weights.clone(), self.lambda)
    }

    pub fn params(&self) -> ParamSet {
        derive_params(&self.weights, self.lambda, self.d).expect("validated on construction")
    }

    pub fn is_certified(&self) -> bool {
        matches!(self.certification, Certification::Certified { .. })
    }

    pub fn certificate(&self) -> Option<&GkCertificate> {
        match &self.certification {
            Certification::Certified { certificate } => Some(certificate),
            _ => None,
        }
    }

    /// Replays the stored certificate after checking that it belongs to
    /// this component.
    pub fn replay(&self, budget: u64) -> Result<()> {
        let cert = self
            .certificate()
            .ok_or_else(|| Error::InvalidCertificate("no certificate".into()))?;
        let ps = self.params();
        let bar = bar_involution(&ps);
        let matches = |q: &ParamSet| q.weights == cert.weights && q.lambda == cert.lambda;
        if cert.d != self.d || !(matches(&ps) || matches(&bar)) {
            return Err(Error::InvalidCertificate(
                "certificate is for a different family".into(),
            ));
        }
        replay(cert, budget)
    }

    /// `p q r [s] λ`, the reference-table line format.
    pub fn table_line(&self) -> String {
        let mut parts: Vec<String> = self.weights.as_slice().iter().map(|w| w.to_string()).collect();
        parts.push(self.lambda.to_string());
        parts.join(" ")
    }
}

/// Builds the descriptor for `ps`, canonicalizing and optionally certifying.
/// Certification tries `ps` first, then its bar.
pub fn describe(
    ps: &ParamSet,
    tag: CaseTag,
    case_params: BTreeMap<String, i64>,
    certify: Option<&CertifyConfig>,
) -> Result<ComponentDescriptor> {
    let canon = canonical_params(ps);
    let dimension = dim_component(&canon)?;
    let certification = match certify {
        None => Certification::NotRequested,
        Some(cfg) => {
            let bar = bar_involution(ps);
            match certify_gk(ps, cfg) {
                Ok(c) => Certification::Certified { certificate: Box::new(c) },
                Err(first) => match certify_gk(&bar, cfg) {
                    Ok(c) => Certification::Certified { certificate: Box::new(c) },
                    Err(_) => Certification::Inconclusive { reason: first.reason },
                },
            }
        }
    };
    Ok(ComponentDescriptor {
        n: ps.n(),
        d: ps.d,
        weights: canon.weights,
        lambda: canon.lambda,
        case_tag: tag,
        case_params,
        dimension,
        certification,
        metadata: TANGENT_SHEAF.to_string(),
    })
}

/// Raw case instances for `n ∈ {3, 4}` and `d ≥ 2`.
pub fn case_instances(n: usize, d: i64) -> Result<Vec<CaseInstance>> {
    if d < 2 {
        return Err(Error::InvalidDegree(d));
    }
    match n {
        3 => Ok(cases::three_weight_cases(d)),
        4 => Ok(cases::four_weight_cases(d)),
        _ => Err(Error::UnsupportedN(n)),
    }
}

/// Every GK component for three or four weights, one per canonical form,
/// sorted by weights then `λ`. With `certify`, components whose witness
/// search fails are kept and marked inconclusive.
pub fn enumerate_components(
    n: usize,
    d: i64,
    certify: Option<&CertifyConfig>,
) -> Result<Vec<ComponentDescriptor>> {
    let mut seen = BTreeSet::new();
    let mut unique = Vec::new();
    for c in case_instances(n, d)? {
        let w = WeightVector::new(c.weights.clone())?;
        let ps = derive_params(&w, c.lambda, d)?;
        let canon = canonical_params(&ps);
        if seen.insert((canon.weights, canon.lambda)) {
            unique.push((ps, c));
        }
    }
    let mut out = unique
        .par_iter()
        .map(|(ps, c)| describe(ps, c.tag, c.params.clone(), certify))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|a| a.key());
    Ok(out)
}

/// The exceptional family with the explicit witness tried first.
pub fn exceptional_family(
    n: usize,
    d: i64,
    certify: Option<&CertifyConfig>,
) -> Result<ComponentDescriptor> {
    let (w, lambda) = exceptional_weights(n, d)?;
    let ps = derive_params(&WeightVector::new(w)?, lambda, d)?;
    describe(&ps, CaseTag::Exceptional, BTreeMap::new(), certify)
}
