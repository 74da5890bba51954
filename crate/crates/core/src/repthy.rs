//! Dimension identities for decompositions of representations: claimed
//! splittings are checked against the Weyl dimension formula, against an
//! independent hook-content count, and spectrally against the Casimir.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::build_algebra;
use crate::error::{Error, Result};
use crate::exterior::{binomial, gamma_multiplicity, Exterior};
use crate::linalg::{format_rational, rat, Rational};
use crate::roots::{build_root_datum, casimir_eigenvalue, weyl_dim, DominantWeight, RootDatum, TypeLabel};

pub const CLAIMS_JSON: &str = include_str!("../data/claims.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ambient {
    /// an exterior power of the adjoint representation
    Exterior { degree: usize },
    /// the Schur module of a partition for `GL(n)`
    GlSchur { partition: Vec<usize>, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub weight: Vec<u32>,
    pub mult: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionClaim {
    pub name: String,
    #[serde(rename = "type")]
    pub type_label: String,
    pub space: String,
    pub anchor: String,
    pub ambient: Ambient,
    pub summands: Vec<Summand>,
}

pub fn load_claims(json: &str) -> Result<Vec<DecompositionClaim>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}

pub fn shipped_claims() -> Vec<DecompositionClaim> {
    load_claims(CLAIMS_JSON).expect("shipped claims corpus parses")
}

/// Dimension of the irreducible `GL(n)` module of a partition by the
/// hook-content formula `prod (n + content) / prod hook`.
pub fn hook_content_dim(partition: &[usize], n: usize) -> u128 {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (i, &row) in partition.iter().enumerate() {
        for j in 0..row {
            let content = j as i64 - i as i64;
            num *= n as i64 + content;
            let arm = row - j - 1;
            let leg = partition[i + 1..].iter().filter(|&&r| r > j).count();
            den *= (arm + leg + 1) as i64;
        }
    }
    if num <= BigInt::zero() {
        return 0;
    }
    assert!((&num % &den).is_zero(), "hook-content quotient is integral");
    (num / den).to_u128().expect("dimension fits in u128")
}

#[derive(Debug, Clone, Serialize)]
pub struct SummandReport {
    pub weight: Vec<u32>,
    pub mult: u32,
    pub dim: u128,
    pub casimir: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralGroup {
    pub casimir: String,
    pub claimed: usize,
    pub eigenspace: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub name: String,
    pub anchor: String,
    pub ambient_dim: u128,
    pub summands: Vec<SummandReport>,
    pub total: u128,
    /// Casimir eigenspace dimensions, present when the ambient space is an
    /// exterior power small enough to diagonalize
    pub spectral: Option<Vec<SpectralGroup>>,
    pub ok: bool,
}

fn ambient_dim(rd: &RootDatum, a: &Ambient) -> u128 {
    match a {
        Ambient::Exterior { degree } => binomial(rd.dim(), *degree) as u128,
        Ambient::GlSchur { partition, n } => hook_content_dim(partition, *n),
    }
}

/// Checks `sum mult * dim = ambient dimension`; when `spectral_cap` admits
/// the algebra and the ambient space is an exterior power, also checks that
/// each Casimir eigenvalue occurs with the claimed total dimension.
pub fn verify_dimension_claim(claim: &DecompositionClaim, spectral_cap: Option<usize>) -> Result<ClaimReport> {
    let label: TypeLabel = claim.type_label.parse()?;
    let rd = build_root_datum(label);
    let mut summands = Vec::new();
    let mut total = 0u128;
    let mut groups: BTreeMap<Rational, usize> = BTreeMap::new();
    for s in &claim.summands {
        if s.weight.len() != rd.rank() {
            return Err(Error::Dimension(format!("weight {:?} in claim {}", s.weight, claim.name)));
        }
        let w = DominantWeight(s.weight.clone());
        let dim = weyl_dim(&rd, &w);
        let c = casimir_eigenvalue(&rd, &w);
        total += dim * s.mult as u128;
        *groups.entry(c.clone()).or_default() += dim as usize * s.mult as usize;
        summands.push(SummandReport {
            weight: s.weight.clone(),
            mult: s.mult,
            dim,
            casimir: format_rational(&c),
        });
    }
    let amb = ambient_dim(&rd, &claim.ambient);
    let spectral = match (&claim.ambient, spectral_cap) {
        (Ambient::Exterior { degree }, Some(cap)) if rd.dim() <= cap => {
            let alg = build_algebra(label);
            let ext = Exterior::new(&alg);
            Some(
                groups
                    .iter()
                    .map(|(c, claimed)| SpectralGroup {
                        casimir: format_rational(c),
                        claimed: *claimed,
                        eigenspace: ext.casimir_eigenspace_dim(*degree, c),
                    })
                    .collect::<Vec<_>>(),
            )
        }
        _ => None,
    };
    let spectral_ok = spectral
        .as_ref()
        .is_none_or(|g| g.iter().all(|x| x.claimed == x.eigenspace));
    Ok(ClaimReport {
        name: claim.name.clone(),
        anchor: claim.anchor.clone(),
        ambient_dim: amb,
        summands,
        total,
        ok: total == amb && spectral_ok,
        spectral,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowRecord {
    pub k: usize,
    pub eigenspace: usize,
    pub expected: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowReport {
    pub records: Vec<WindowRecord>,
    pub symmetric: bool,
    pub ok: bool,
}

/// The `c_{2 rho}`-eigenspace of the Casimir on each degree has dimension
/// `C(l, k - (g - d)) dim Gamma_{2 rho}`.
pub fn verify_gamma_window(ext: &Exterior) -> WindowReport {
    let alg = ext.algebra();
    let c = ext.c_two_rho();
    let g = alg.dim();
    let records: Vec<WindowRecord> = (0..=g)
        .map(|k| {
            let eigenspace = ext.casimir_eigenspace_dim(k, &c);
            let expected = gamma_multiplicity(alg, k);
            WindowRecord {
                k,
                eigenspace,
                expected,
                ok: eigenspace == expected,
            }
        })
        .collect();
    let symmetric = (0..=g).all(|k| records[k].eigenspace == records[g - k].eigenspace);
    let ok = symmetric && records.iter().all(|r| r.ok);
    WindowReport { records, symmetric, ok }
}

/// The second exterior power of a classical algebra as predicted by the
/// splitting of the adjoint square: returns the claimed summands.
pub fn wedge2_prediction(label: TypeLabel) -> Option<Vec<Summand>> {
    use crate::roots::RootType;
    let rd = build_root_datum(label);
    let l = rd.rank();
    let one = |w: Vec<u32>| Summand { weight: w, mult: 1 };
    let adjoint = rd.adjoint_weight().0;
    match label.kind {
        RootType::A if l == 2 => Some(vec![one(adjoint), one(vec![3, 0]), one(vec![0, 3])]),
        RootType::A if l >= 3 => {
            let mut w1 = vec![0; l];
            w1[0] = 2;
            w1[l - 2] = 1;
            let mut w2 = vec![0; l];
            w2[1] = 1;
            w2[l - 1] = 2;
            Some(vec![one(adjoint), one(w1), one(w2)])
        }
        RootType::C => {
            let mut w = vec![0; l];
            w[0] = 2;
            w[1] = 1;
            Some(vec![one(adjoint), one(w)])
        }
        RootType::B | RootType::D => {
            let n = if label.kind == RootType::B { 2 * l + 1 } else { 2 * l };
            if n < 6 {
                return None;
            }
            // partition (2,1,1) read in orthonormal coordinates
            let mut v = vec![rat(0); l];
            v[0] = rat(2);
            v[1] = rat(1);
            v[2] = rat(1);
            let w = rd.weight_from_ambient(&v)?;
            if n == 6 {
                // so(6): the module splits into the two weights 2e1+e2+-e3
                v[2] = rat(-1);
                let w2 = rd.weight_from_ambient(&v)?;
                return Some(vec![one(adjoint), one(w.0), one(w2.0)]);
            }
            Some(vec![one(adjoint), one(w.0)])
        }
        _ => None,
    }
}
