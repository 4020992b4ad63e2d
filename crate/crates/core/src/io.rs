//! JSON documents for rigged configurations.
//!
//! ```json
//! {"cartan": {"family": "D", "rank": 4},
//!  "nu": {"1": [[2,0]], "2": [[3,-2],[1,-1]], "3": [[2,0]], "4": [[1,0]]}}
//! ```
//!
//! Rows are `[length, rigging]` and node keys are strings. Missing nodes are
//! empty partitions. Instead of `nu`, a document may give `partitions` and
//! `riggings` as parallel lists per node.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::cartan::{CartanDatum, CartanError, CartanSpec, Weight};
use crate::rigged::{RcError, RiggedConfiguration};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Rc(#[from] RcError),
    #[error("node key `{0}` is not in the index set")]
    BadNodeKey(String),
    #[error("node {node}: {partitions} parts but {riggings} riggings")]
    RiggingCount {
        node: String,
        partitions: usize,
        riggings: usize,
    },
    #[error("document must contain either `nu` or both `partitions` and `riggings`")]
    MissingRows,
    #[error("expected a cartan datum {expected}, document has {found}")]
    DatumMismatch { expected: String, found: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RcDocument {
    cartan: CartanSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nu: Option<BTreeMap<String, Vec<(usize, i64)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    partitions: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    riggings: Option<BTreeMap<String, Vec<i64>>>,
}

pub fn to_value(rc: &RiggedConfiguration) -> Value {
    serde_json::to_value(RcDocument {
        cartan: rc.datum().spec().clone(),
        nu: Some(nu_map(rc)),
        partitions: None,
        riggings: None,
    })
    .expect("document serializes")
}

pub fn to_json(rc: &RiggedConfiguration) -> String {
    serde_json::to_string(&to_value(rc)).expect("document serializes")
}

/// `{"1": [[len, rigging], ...], ...}` for every node.
pub(crate) fn nu_map(rc: &RiggedConfiguration) -> BTreeMap<String, Vec<(usize, i64)>> {
    rc.datum()
        .nodes()
        .map(|a| {
            let rows = rc.part(a).rows().iter().map(|r| (r.len, r.rigging)).collect();
            (a.to_string(), rows)
        })
        .collect()
}

pub(crate) fn rows_from_nu(
    datum: &CartanDatum,
    nu: &BTreeMap<String, Vec<(usize, i64)>>,
) -> Result<Vec<Vec<(usize, i64)>>, JsonError> {
    let mut rows = vec![Vec::new(); datum.rank()];
    for (key, list) in nu {
        let idx = node_key(datum, key)?;
        rows[idx] = list.clone();
    }
    Ok(rows)
}

fn node_key(datum: &CartanDatum, key: &str) -> Result<usize, JsonError> {
    key.parse::<usize>()
        .ok()
        .and_then(|a| datum.index(a).ok())
        .ok_or_else(|| JsonError::BadNodeKey(key.to_string()))
}

/// Parses a document, building its Cartan datum.
pub fn from_json(text: &str) -> Result<RiggedConfiguration, JsonError> {
    from_value(serde_json::from_str(text)?)
}

pub fn from_value(value: Value) -> Result<RiggedConfiguration, JsonError> {
    let doc: RcDocument = serde_json::from_value(value)?;
    let datum = Arc::new(CartanDatum::from_spec(&doc.cartan)?);
    from_document(doc, datum)
}

/// Parses a document whose datum must agree with `datum` (sharing the `Arc`).
pub fn from_json_with(text: &str, datum: Arc<CartanDatum>) -> Result<RiggedConfiguration, JsonError> {
    let doc: RcDocument = serde_json::from_str(text)?;
    let own = CartanDatum::from_spec(&doc.cartan)?;
    if own.gcm() != datum.gcm() {
        return Err(JsonError::DatumMismatch {
            expected: datum.to_string(),
            found: own.to_string(),
        });
    }
    from_document(doc, datum)
}

fn from_document(doc: RcDocument, datum: Arc<CartanDatum>) -> Result<RiggedConfiguration, JsonError> {
    let rows = match (doc.nu, doc.partitions, doc.riggings) {
        (Some(nu), None, None) => rows_from_nu(&datum, &nu)?,
        (None, Some(parts), Some(rigs)) => {
            let mut rows = vec![Vec::new(); datum.rank()];
            for key in parts.keys().chain(rigs.keys()) {
                node_key(&datum, key)?;
            }
            for (key, lens) in &parts {
                let empty = Vec::new();
                let rs = rigs.get(key).unwrap_or(&empty);
                if rs.len() != lens.len() {
                    return Err(JsonError::RiggingCount {
                        node: key.clone(),
                        partitions: lens.len(),
                        riggings: rs.len(),
                    });
                }
                rows[node_key(&datum, key)?] = lens.iter().copied().zip(rs.iter().copied()).collect();
            }
            for (key, rs) in &rigs {
                if !parts.contains_key(key) && !rs.is_empty() {
                    return Err(JsonError::RiggingCount {
                        node: key.clone(),
                        partitions: 0,
                        riggings: rs.len(),
                    });
                }
            }
            rows
        }
        _ => return Err(JsonError::MissingRows),
    };
    Ok(RiggedConfiguration::from_rows(datum, rows)?)
}

/// Parses `{"lambda":[...],"root":[...]}` or a bare list of fundamental-weight
/// coefficients.
pub fn weight_from_json(text: &str) -> Result<Weight, JsonError> {
    let value: Value = serde_json::from_str(text)?;
    if value.is_array() {
        return Ok(Weight::from_lambda(serde_json::from_value(value)?));
    }
    Ok(serde_json::from_value(value)?)
}
