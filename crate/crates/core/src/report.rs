//! JSON encodings of matrices, witnesses and reports.
//!
//! Residues mod `n` are emitted as JSON integers; every other element is a
//! string (`"3"`, `"-1/2"`) so rationals survive without loss.

use serde_json::{json, Map, Value};

use crate::additive::AdditiveOutcome;
use crate::error::{Error, Result};
use crate::hirano::{AxiomReport, Case, Classification, HiranoOutcome, HiranoWitness};
use crate::matrices::SquareMatrix;
use crate::rings::{RingDescriptor, RingElement};

pub const SCHEMA_VERSION: u32 = 1;

pub fn element_json(ring: RingDescriptor, x: &RingElement) -> Value {
    match (ring, x.to_i64()) {
        (RingDescriptor::IntegersMod(_), Some(v)) => json!(v),
        _ => Value::String(x.value().to_string()),
    }
}

pub fn matrix_json(m: &SquareMatrix) -> Value {
    let r = m.ring();
    Value::Array(m.rows().map(|row| Value::Array(row.iter().map(|x| element_json(r, x)).collect())).collect())
}

fn element_from_json(ring: RingDescriptor, v: &Value) -> Result<RingElement> {
    match v {
        Value::Number(n) => ring.parse(&n.to_string()),
        Value::String(s) => ring.parse(s),
        other => Err(Error::InvalidElement(format!("expected a number or string, got {other}"))),
    }
}

/// Parses `[[..], ..]`; entries may be integers or strings like `"1/3"`.
pub fn matrix_from_json(ring: RingDescriptor, v: &Value) -> Result<SquareMatrix> {
    let rows = v.as_array().ok_or_else(|| Error::InvalidElement("matrix must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::InvalidElement("matrix row must be an array".into()))?
                .iter()
                .map(|x| element_from_json(ring, x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_rows(ring, rows)
}

fn bools<'a>(entries: impl IntoIterator<Item = (&'a str, bool)>) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), Value::Bool(v))).collect())
}

pub fn axioms_json(r: &AxiomReport) -> Value {
    bools(r.entries())
}

pub fn witness_fields(w: &HiranoWitness) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("h".into(), matrix_json(&w.h));
    m.insert("p".into(), matrix_json(&w.p));
    m.insert("qnil_part".into(), matrix_json(&w.qnil_part));
    m.insert("pi".into(), matrix_json(&w.pi));
    m.insert("checks".into(), bools(w.checks()));
    m
}

pub fn classification_json(c: &Classification) -> Value {
    let ch = &c.checks;
    let mut m = Map::new();
    m.insert("case".into(), json!(c.case.name()));
    m.insert("failed".into(), json!(c.case.failed()));
    m.insert("det".into(), json!(ch.det.value().to_string()));
    m.insert("trace_sq".into(), json!(ch.trace_sq.value().to_string()));
    m.insert("det_sq".into(), json!(ch.det_sq.value().to_string()));
    m.insert("det_in_J".into(), json!(ch.det_in_j));
    m.insert("trace_sq_in_J".into(), json!(ch.trace_sq_in_j));
    m.insert("trace_sq_in_1+J".into(), json!(ch.trace_sq_in_1_plus_j));
    m.insert("det_sq_in_1+J".into(), json!(ch.det_sq_in_1_plus_j));
    m.insert("trace_sq_in_2+J".into(), json!(ch.trace_sq_in_2_plus_j));
    m.insert("quadratic_solvable".into(), json!(ch.quadratic_solvable));
    if let Case::Mixed { x1, x2, transform, discriminant_sqrt } = &c.case {
        m.insert("x1".into(), json!(x1.value().to_string()));
        m.insert("x2".into(), json!(x2.value().to_string()));
        m.insert("discriminant_sqrt".into(), json!(discriminant_sqrt.value().to_string()));
        m.insert("transform".into(), matrix_json(transform));
    }
    Value::Object(m)
}

fn header(command: &str, ring: RingDescriptor) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("ring".into(), serde_json::to_value(ring).expect("descriptor serializes"));
    m
}

/// Report for `hirano` and `classify`.
pub fn outcome_report(command: &str, a: &SquareMatrix, out: &HiranoOutcome) -> Value {
    let mut m = header(command, a.ring());
    m.insert("exists".into(), json!(out.exists()));
    m.insert("strategy".into(), json!(out.strategy));
    m.insert("case".into(), json!(out.case));
    m.insert("failed".into(), json!(out.failed));
    if let Some(c) = &out.classification {
        m.insert("classification".into(), classification_json(c));
    }
    if let Some(w) = &out.witness {
        m.extend(witness_fields(w));
    }
    Value::Object(m)
}

/// Report for commands that return an optional witness.
pub fn witness_report(command: &str, ring: RingDescriptor, w: Option<&HiranoWitness>) -> Value {
    let mut m = header(command, ring);
    m.insert("exists".into(), json!(w.is_some()));
    if let Some(w) = w {
        m.extend(witness_fields(w));
    }
    Value::Object(m)
}

pub fn verify_report(a: &SquareMatrix, r: &AxiomReport) -> Value {
    let mut m = header("verify", a.ring());
    m.insert("is_hirano".into(), json!(r.is_hirano()));
    m.insert("is_drazin".into(), json!(r.is_drazin()));
    m.insert("checks".into(), axioms_json(r));
    Value::Object(m)
}

pub fn additive_report(ring: RingDescriptor, out: &AdditiveOutcome) -> Value {
    let mut m = header("sum", ring);
    m.insert("mode".into(), json!(out.rule));
    m.insert("exists".into(), json!(out.witness.is_some()));
    if let Some(h) = &out.hypotheses {
        m.insert("hypotheses".into(), serde_json::to_value(h).expect("serializes"));
    }
    if let Some(h) = &out.absorbing {
        m.insert("hypotheses".into(), serde_json::to_value(h).expect("serializes"));
    }
    if let Some(s) = &out.series {
        m.insert("series".into(), serde_json::to_value(s).expect("serializes"));
    }
    if let Some(w) = &out.witness {
        m.extend(witness_fields(w));
    }
    Value::Object(m)
}

pub fn tripotent_report(a: &SquareMatrix, split: Option<&(SquareMatrix, SquareMatrix)>) -> Value {
    let mut m = header("tripotent", a.ring());
    m.insert("exists".into(), json!(split.is_some()));
    if let Some((e, n)) = split {
        m.insert("tripotent".into(), matrix_json(e));
        m.insert("nilpotent".into(), matrix_json(n));
    }
    Value::Object(m)
}

pub fn error_json(e: &Error) -> Value {
    json!({ "schema_version": SCHEMA_VERSION, "error": e.code(), "message": e.to_string() })
}
