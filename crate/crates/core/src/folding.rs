//! Dynkin diagram foldings and the virtualization map.
//!
//! A folding is given by a surjection `phi` from the target nodes onto the
//! source nodes and a positive scaling factor `gamma_a` per source node. It is
//! accepted when `Psi(Lambda_a) = gamma_a sum_{b in phi^-1(a)} Lambda_b`
//! sends every simple root `alpha_a` to `gamma_a sum_{b in phi^-1(a)} alpha_b`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::{CartanDatum, CartanError, CartanSpec};
use crate::rigged::{RiggedConfiguration, RiggedPartition, Row};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoldingError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("phi is not defined on target node {0}")]
    PhiMissing(usize),
    #[error("phi sends target node {target} to {node}, which is not a source node")]
    PhiOutOfRange { target: usize, node: usize },
    #[error("phi maps target node `{0}`, which does not exist")]
    BadTargetKey(String),
    #[error("phi misses source node {0}")]
    NotSurjective(usize),
    #[error("gamma has {found} entries, expected {expected}")]
    GammaLength { expected: usize, found: usize },
    #[error("gamma_{0} is not positive")]
    GammaNotPositive(usize),
    #[error("alpha_{node}: Psi(alpha_{node}) = {psi:?} but the folded roots give {folded:?}")]
    RootMismatch {
        node: usize,
        psi: Vec<i64>,
        folded: Vec<i64>,
    },
    #[error("configuration is over {found}, folding source is {expected}")]
    DatumMismatch { expected: String, found: String },
    #[error("invalid folding file: {0}")]
    Json(String),
}

/// The serialized form of a folding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoldingSpec {
    #[serde(default)]
    pub name: String,
    pub source: CartanSpec,
    pub target: CartanSpec,
    /// Keys are target nodes.
    pub phi: BTreeMap<String, usize>,
    pub gamma: Vec<i64>,
}

impl FoldingSpec {
    pub fn from_json(text: &str) -> Result<Self, FoldingError> {
        serde_json::from_str(text).map_err(|e| FoldingError::Json(e.to_string()))
    }
}

/// A folding that passed [`validate_folding`].
#[derive(Debug, Clone)]
pub struct Folding {
    name: String,
    source: Arc<CartanDatum>,
    target: Arc<CartanDatum>,
    /// `phi[b-1]` for each target node `b`.
    phi: Vec<usize>,
    gamma: Vec<i64>,
}

impl Folding {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<CartanDatum> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CartanDatum> {
        &self.target
    }

    pub fn phi(&self, b: usize) -> usize {
        self.phi[b - 1]
    }

    pub fn gamma(&self, a: usize) -> i64 {
        self.gamma[a - 1]
    }

    /// `phi^-1(a)` in increasing order.
    pub fn fiber(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.target.nodes().filter(move |&b| self.phi(b) == a)
    }
}

pub fn validate_folding(spec: &FoldingSpec) -> Result<Folding, FoldingError> {
    let source = Arc::new(CartanDatum::from_spec(&spec.source)?);
    let target = Arc::new(CartanDatum::from_spec(&spec.target)?);
    let mut phi = vec![0; target.rank()];
    for (key, &a) in &spec.phi {
        let b = key
            .parse::<usize>()
            .ok()
            .filter(|b| target.index(*b).is_ok())
            .ok_or_else(|| FoldingError::BadTargetKey(key.clone()))?;
        if source.index(a).is_err() {
            return Err(FoldingError::PhiOutOfRange { target: b, node: a });
        }
        phi[b - 1] = a;
    }
    if let Some(b) = phi.iter().position(|&a| a == 0) {
        return Err(FoldingError::PhiMissing(b + 1));
    }
    if let Some(a) = source.nodes().find(|a| !phi.contains(a)) {
        return Err(FoldingError::NotSurjective(a));
    }
    if spec.gamma.len() != source.rank() {
        return Err(FoldingError::GammaLength {
            expected: source.rank(),
            found: spec.gamma.len(),
        });
    }
    if let Some(a) = spec.gamma.iter().position(|&g| g <= 0) {
        return Err(FoldingError::GammaNotPositive(a + 1));
    }
    let folding = Folding {
        name: spec.name.clone(),
        source,
        target,
        phi,
        gamma: spec.gamma.clone(),
    };
    for a in folding.source.nodes() {
        let (psi, folded) = root_images(&folding, a);
        if psi != folded {
            return Err(FoldingError::RootMismatch { node: a, psi, folded });
        }
    }
    Ok(folding)
}

/// Both sides of the root condition for `alpha_a`, in target
/// fundamental-weight coordinates.
fn root_images(folding: &Folding, a: usize) -> (Vec<i64>, Vec<i64>) {
    let src = &folding.source;
    let tgt = &folding.target;
    // alpha_a = sum_c A_ca Lambda_c, so Psi(alpha_a) has coefficient
    // A_{phi(c'), a} gamma_{phi(c')} at Lambda_{c'}
    let psi = tgt
        .nodes()
        .map(|c| {
            let fc = folding.phi(c);
            src.entry(fc, a) * folding.gamma(fc)
        })
        .collect();
    let folded = tgt
        .nodes()
        .map(|c| folding.gamma(a) * folding.fiber(a).map(|b| tgt.entry(c, b)).sum::<i64>())
        .collect();
    (psi, folded)
}

/// Row `(i, x)` of part `a` becomes `(gamma_a i, gamma_a x)` in every part of
/// `phi^-1(a)`.
pub fn virtualize(rc: &RiggedConfiguration, folding: &Folding) -> Result<RiggedConfiguration, FoldingError> {
    if rc.datum().gcm() != folding.source.gcm() {
        return Err(FoldingError::DatumMismatch {
            expected: folding.source.to_string(),
            found: rc.datum().to_string(),
        });
    }
    let parts = folding
        .target
        .nodes()
        .map(|b| {
            let a = folding.phi(b);
            let g = folding.gamma(a);
            let rows = rc
                .part(a)
                .rows()
                .iter()
                .map(|r| Row::new(r.len * g as usize, r.rigging * g))
                .collect();
            RiggedPartition::from_rows_unchecked(rows)
        })
        .collect();
    Ok(RiggedConfiguration::from_parts_unchecked(folding.target.clone(), parts))
}

/// A row length at which the image's vacancy number is not `gamma_a` times
/// the source's.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalingFailure {
    pub node: usize,
    pub target_node: usize,
    pub len: usize,
    pub expected: i64,
    pub found: i64,
}

/// Checks `p^(b)_{gamma_a i}(virtualize) = gamma_a p^(a)_i` for every occupied
/// length `i` of every part `a` and every `b` over `a`.
pub fn vacancy_scaling_failure(
    rc: &RiggedConfiguration,
    folding: &Folding,
) -> Result<Option<ScalingFailure>, FoldingError> {
    let image = virtualize(rc, folding)?;
    for a in rc.datum().nodes() {
        let g = folding.gamma(a);
        for row in rc.part(a).rows() {
            let expected = g * rc.vacancy(a, row.len);
            for b in folding.fiber(a) {
                let found = image.vacancy(b, row.len * g as usize);
                if found != expected {
                    return Ok(Some(ScalingFailure {
                        node: a,
                        target_node: b,
                        len: row.len,
                        expected,
                        found,
                    }));
                }
            }
        }
    }
    Ok(None)
}

const CATALOG: [&str; 5] = [
    include_str!("../data/foldings/b2_a3.json"),
    include_str!("../data/foldings/b3_a5.json"),
    include_str!("../data/foldings/c3_d4.json"),
    include_str!("../data/foldings/f4_e6.json"),
    include_str!("../data/foldings/g2_d4.json"),
];

/// The shipped foldings, each validated as it is loaded.
pub fn builtin_foldings() -> Result<Vec<Folding>, FoldingError> {
    CATALOG
        .iter()
        .map(|text| validate_folding(&FoldingSpec::from_json(text)?))
        .collect()
}

/// Looks up a shipped folding by name, ignoring case and spaces.
pub fn builtin_folding(name: &str) -> Result<Option<Folding>, FoldingError> {
    let key = |s: &str| s.to_ascii_lowercase().replace(' ', "");
    Ok(builtin_foldings()?.into_iter().find(|f| key(f.name()) == key(name)))
}
