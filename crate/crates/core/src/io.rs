//! JSON readers and writers for tables, complexes, ideal specs and
//! component descriptors.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::ideals::{IdealError, IdealName, IdealSpec, RingContext, RingKind};
use crate::poly::Polynomial;
use crate::rational::{format_q, parse_q, Q};
use crate::table::{FaceSet, Shape, Table, TableError};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad entry: {0}")]
    Entry(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Integers that fit in `i64` become JSON numbers, the rest strings.
pub fn q_to_json(q: &Q) -> Value {
    match q.is_integer().then(|| q.numer().to_i64()).flatten() {
        Some(n) => Value::from(n),
        None => Value::from(format_q(q)),
    }
}

pub fn q_from_json(v: &Value) -> Result<Q, IoError> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(Q::from_integer(n.as_i64().unwrap_or_default().into())),
        Value::Number(n) if n.is_u64() => Ok(Q::from_integer(n.as_u64().unwrap_or_default().into())),
        Value::String(s) => parse_q(s).map_err(|e| IoError::Entry(e.to_string())),
        other => Err(IoError::Entry(format!("expected an integer or \"p/q\" string, got {other}"))),
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    shape: Vec<usize>,
    entries: Vec<Value>,
}

pub fn table_to_json(t: &Table) -> Value {
    serde_json::to_value(TableJson {
        shape: t.shape().dims().to_vec(),
        entries: t.entries().iter().map(q_to_json).collect(),
    })
    .expect("table serializes")
}

pub fn table_from_json(v: &Value) -> Result<Table, IoError> {
    let raw: TableJson = serde_json::from_value(v.clone())?;
    let shape = if raw.shape.is_empty() { Shape::scalar() } else { Shape::new(raw.shape)? };
    let entries = raw.entries.iter().map(q_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(Table::new(shape, entries)?)
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
}

pub fn complex_to_json(c: &SimplicialComplex) -> Value {
    serde_json::to_value(ComplexJson {
        n: c.n(),
        facets: c.facets().iter().map(|f| f.members().to_vec()).collect(),
    })
    .expect("complex serializes")
}

pub fn complex_from_json(v: &Value) -> Result<SimplicialComplex, IoError> {
    let raw: ComplexJson = serde_json::from_value(v.clone())?;
    Ok(SimplicialComplex::new(raw.n, raw.facets.into_iter().map(FaceSet::new).collect())?)
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    ring: String,
    shape: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    complex: Option<Value>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    facets_only: bool,
    name: String,
    generators: Vec<String>,
}

pub fn ideal_to_json(spec: &IdealSpec) -> Value {
    serde_json::to_value(IdealJson {
        ring: spec.ring.kind().as_str().to_string(),
        shape: spec.ring.shape().dims().to_vec(),
        complex: spec.ring.complex().map(complex_to_json),
        facets_only: spec.ring.facets_only(),
        name: spec.name.to_string(),
        generators: spec.generators.iter().map(|g| g.to_string()).collect(),
    })
    .expect("ideal serializes")
}

pub fn ideal_from_json(v: &Value) -> Result<IdealSpec, IoError> {
    let raw: IdealJson = serde_json::from_value(v.clone())?;
    let kind = RingKind::parse(&raw.ring).ok_or_else(|| IoError::Entry(format!("unknown ring `{}`", raw.ring)))?;
    let name = IdealName::parse(&raw.name).ok_or_else(|| IoError::Entry(format!("unknown ideal name `{}`", raw.name)))?;
    let shape = Shape::new(raw.shape)?;
    let complex = raw.complex.as_ref().map(complex_from_json).transpose()?;
    let ring = RingContext::from_parts(kind, &shape, complex.as_ref(), raw.facets_only)?;
    let generators = raw
        .generators
        .iter()
        .map(|g| Polynomial::parse(ring.ring(), g).map_err(|e| IoError::Entry(format!("`{g}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IdealSpec::new(name, ring, generators))
}

/// Parses `"1,2;1,3;2,3"` into facet lists.
pub fn parse_facets(s: &str) -> Result<Vec<FaceSet>, IoError> {
    s.split(';')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(parse_face)
        .collect()
}

/// Parses `"1,2"` (or the empty string) into a face.
pub fn parse_face(s: &str) -> Result<FaceSet, IoError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| IoError::Entry(format!("bad vertex `{t}`"))))
        .collect::<Result<Vec<_>, _>>()
        .map(FaceSet::new)
}

/// Parses `"2,2,3"` into a shape.
pub fn parse_shape(s: &str) -> Result<Shape, IoError> {
    let dims = s
        .split(',')
        .map(str::trim)
        .map(|t| t.parse::<usize>().map_err(|_| IoError::Entry(format!("bad dimension `{t}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Shape::new(dims)?)
}
