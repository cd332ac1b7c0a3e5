//! Witness search and replayable certificates.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::witnesses::{template_candidates, Candidate};
use super::{
    exceptional_chart, gamma_check, is_isolated_at_origin, kupka_data, Isolation, KupkaClass,
    KupkaStatus, Staircase, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::polyvec::VectorField;
use crate::w0space::{random_element, w0_basis, W0Basis};
use crate::weights::{derive_params, milnor_number, ParamSet, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub attempts: u32,
    pub bound: i64,
    pub seed: u64,
    pub budget: u64,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            attempts: 16,
            bound: 5,
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// A witness field together with the verdicts that make it a proof that
/// the family contains a GK foliation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkCertificate {
    pub weights: WeightVector,
    pub lambda: i64,
    pub d: i64,
    #[serde(with = "crate::serde_util::field")]
    pub witness: VectorField,
    /// Coordinates of the witness over the computed `W_0` basis.
    #[serde(with = "crate::serde_util::rat_vec")]
    pub coordinates: Vec<BigRational>,
    pub source: String,
    pub origin_evidence: Staircase,
    /// Number of standard monomials; equals the Milnor number at the origin.
    pub quotient_dim: u64,
    pub chart_status: Vec<KupkaStatus>,
    pub gamma_ok: bool,
    pub exceptional_chart: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoCertificate {
    pub reason: String,
}

impl NoCertificate {
    fn new(reason: impl Into<String>) -> Self {
        NoCertificate {
            reason: reason.into(),
        }
    }
}

impl std::fmt::Display for NoCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.reason)
    }
}

/// Arithmetic obstructions that rule out a certificate before any search.
pub fn precheck(ps: &ParamSet) -> std::result::Result<Option<usize>, NoCertificate> {
    if ps.lambda <= 0 {
        return Err(NoCertificate::new(format!(
            "λ = {} is not positive; certify the representative with λ > 0",
            ps.lambda
        )));
    }
    let m1 = milnor_number(ps.weights.as_slice(), ps.lambda);
    if !m1.is_integer() {
        return Err(NoCertificate::new(format!("non-integer Milnor bound m_1 = {m1}")));
    }
    let exc = super::exceptional_chart(ps);
    for j in 2..=ps.n() {
        if Some(j) != exc && ps.chart_tau(j) == 0 {
            return Err(NoCertificate::new(format!("τ_{j} = 0")));
        }
    }
    Ok(exc)
}

/// Runs every check on one field; `Err` carries the first failing check.
pub fn check_witness(
    ps: &ParamSet,
    basis: &W0Basis,
    cand: &Candidate,
    budget: u64,
) -> std::result::Result<GkCertificate, String> {
    let y = &cand.field;
    let coordinates = basis.coordinates(y).ok_or("witness is not in W_0")?;
    let exc = exceptional_chart(ps);
    let mut chart_status = Vec::new();
    for chart in 2..=ps.n() {
        let st = kupka_data(ps, y, chart, budget).map_err(|e| e.to_string())?;
        let want = if Some(chart) == exc {
            KupkaClass::IsolatedInvertible
        } else {
            KupkaClass::Kupka
        };
        if st.classification != want {
            return Err(format!(
                "chart {chart}: expected {want:?}, got {:?}",
                st.classification
            ));
        }
        chart_status.push(st);
    }
    if !gamma_check(ps, y) {
        return Err("ω_Y has a divisorial singular component".into());
    }
    let st = match is_isolated_at_origin(y, ps, budget) {
        Isolation::Isolated(st) => st,
        Isolation::NotIsolated(why) => return Err(format!("origin: {why}")),
        Isolation::Unknown => return Err("origin: step budget exceeded".into()),
    };
    let quotient_dim = st.quotient_dim().expect("zero-dimensional");
    Ok(GkCertificate {
        weights: ps.weights.clone(),
        lambda: ps.lambda,
        d: ps.d,
        witness: y.clone(),
        coordinates,
        source: cand.source.clone(),
        origin_evidence: st,
        quotient_dim,
        chart_status,
        gamma_ok: true,
        exceptional_chart: exc,
    })
}

fn attempt_seed(seed: u64, attempt: u32) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(attempt as u64)
}

/// Template witnesses first, then `attempts` seeded random elements with a
/// coefficient bound that doubles every four attempts.
pub fn certify_gk(
    ps: &ParamSet,
    cfg: &CertifyConfig,
) -> std::result::Result<GkCertificate, NoCertificate> {
    precheck(ps)?;
    let basis = w0_basis(ps);
    if basis.is_empty() {
        return Err(NoCertificate::new("W_0 is empty"));
    }
    let mut first_failure = None;
    let mut tried = 0;
    let templates = template_candidates(ps, &basis);
    let randoms = (0..cfg.attempts).map(|a| {
        let bound = cfg.bound.max(1).saturating_mul(1 << (a / 4).min(20));
        let seed = attempt_seed(cfg.seed, a);
        Candidate {
            source: format!("random:seed={seed},bound={bound}"),
            field: random_element(&basis, bound, seed).expect("nonempty basis"),
        }
    });
    for cand in templates.into_iter().chain(randoms) {
        tried += 1;
        match check_witness(ps, &basis, &cand, cfg.budget) {
            Ok(cert) => return Ok(cert),
            Err(e) => {
                first_failure.get_or_insert(format!("{}: {e}", cand.source));
            }
        }
    }
    Err(NoCertificate::new(format!(
        "no witness among {tried} candidates (first failure: {})",
        first_failure.unwrap_or_default()
    )))
}

/// Recomputes every verdict stored in `cert`.
pub fn replay(cert: &GkCertificate, budget: u64) -> Result<()> {
    let bad = |s: String| Err(Error::InvalidCertificate(s));
    let ps = derive_params(&cert.weights, cert.lambda, cert.d)?;
    if let Err(e) = precheck(&ps) {
        return bad(e.reason);
    }
    if cert.exceptional_chart != exceptional_chart(&ps) {
        return bad("exceptional chart does not match λ = p_i(d − 1)".into());
    }
    let basis = w0_basis(&ps);
    match basis.coordinates(&cert.witness) {
        Some(c) if c == cert.coordinates => {}
        Some(_) => return bad("stored coordinates do not match the witness".into()),
        None => return bad("witness is not in W_0".into()),
    }
    let cand = Candidate {
        source: cert.source.clone(),
        field: cert.witness.clone(),
    };
    let fresh = match check_witness(&ps, &basis, &cand, budget) {
        Ok(f) => f,
        Err(e) => return bad(e),
    };
    if fresh.origin_evidence != cert.origin_evidence || fresh.quotient_dim != cert.quotient_dim {
        return bad("staircase differs from the recomputed one".into());
    }
    if fresh.chart_status != cert.chart_status {
        return bad("chart verdicts differ from the recomputed ones".into());
    }
    if !cert.gamma_ok {
        return bad("gamma check recorded as failed".into());
    }
    Ok(())
}
