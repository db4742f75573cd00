//! JSON exchange formats.
//!
//! Integers that can outgrow a machine word (discriminants, invariant
//! factors) are written as decimal strings. Gram entries and contents are
//! written as numbers when they fit an `i64`. Readers accept either form.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::exactalg::IntMatrix;
use crate::lattice::{GramLattice, LatticeError};
use crate::roots::Classification;
use crate::theorems::{ClassificationRecord, FieldKind};

pub fn big_as_string<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn opt_big_as_string<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Number when it fits an `i64`, decimal string otherwise.
pub fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

/// Integer read from a JSON number or a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        int_value(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::Number(n) => {
                if let Some(v) = n.as_i64() {
                    Ok(JsonInt(BigInt::from(v)))
                } else if let Some(v) = n.as_u64() {
                    Ok(JsonInt(BigInt::from(v)))
                } else {
                    Err(de::Error::custom(format!("{n} is not an integer")))
                }
            }
            Value::String(s) => s
                .trim()
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(|_| de::Error::custom(format!("{s:?} is not a decimal integer"))),
            other => Err(de::Error::custom(format!("expected integer, got {other}"))),
        }
    }
}

/// `{"rank": r, "gram": [[...]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramJson {
    pub rank: usize,
    pub gram: Vec<Vec<JsonInt>>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("declared rank {declared} but the Gram matrix has {rows} rows")]
    RankMismatch { declared: usize, rows: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl GramJson {
    pub fn from_lattice(l: &GramLattice) -> Self {
        let gram = l.gram().to_rows().into_iter().map(|r| r.into_iter().map(JsonInt).collect()).collect();
        GramJson { rank: l.rank(), gram }
    }

    pub fn to_lattice(&self) -> Result<GramLattice, ReportError> {
        if self.gram.len() != self.rank {
            return Err(ReportError::RankMismatch { declared: self.rank, rows: self.gram.len() });
        }
        let rows: Vec<Vec<BigInt>> = self.gram.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
        Ok(GramLattice::new(IntMatrix::from_rows(&rows).map_err(LatticeError::from)?)?)
    }
}

pub fn parse_gram(text: &str) -> Result<GramLattice, ReportError> {
    serde_json::from_str::<GramJson>(text)?.to_lattice()
}

/// `[{"type": "A", "rank": 2}, …]` or `"not_root"`.
pub fn decomposition_value(c: &Classification) -> Value {
    match c.decomposition() {
        Some(d) => Value::Array(
            d.components
                .iter()
                .map(|comp| json!({"type": comp.root_type.family(), "rank": comp.root_type.rank()}))
                .collect(),
        ),
        None => Value::String("not_root".into()),
    }
}

fn strings(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Output of the `classify` command.
pub fn classify_value(l: &GramLattice, own: &Classification, similar: &Classification) -> Value {
    json!({
        "content": int_value(&l.content()),
        "disc": l.discriminant().to_string(),
        "invariant_factors": strings(l.disc_group().invariant_factors()),
        "even": l.is_even(),
        "positive_definite": l.is_positive_definite(),
        "decomposition": decomposition_value(own),
        "similar_to": decomposition_value(similar),
    })
}

pub fn record_value(r: &ClassificationRecord) -> Value {
    let (family, param) = match r.spec.kind() {
        FieldKind::Cyclotomic(m) => ("cyclotomic", json!({"m": m})),
        FieldKind::Quadratic(c) => ("quadratic", json!({"c": c})),
    };
    let mut field = param;
    field["family"] = Value::from(family);
    json!({
        "field": field,
        "theta": r.spec.theta().tag(),
        "n": r.n,
        "content": int_value(&r.content),
        "disc": r.disc.to_string(),
        "invariant_factors": strings(&r.invariant_factors),
        "even": r.even,
        "positive_definite": r.positive_definite,
        "unscaled": decomposition_value(&r.unscaled),
        "similar_to": decomposition_value(&r.similar),
        "similar_summary": r.similar.summary(),
        "prediction": r.prediction,
        "agreement": r.agreement,
        "agrees": r.agrees(),
        "scope": "family-verified",
    })
}
