//! JSON renderings of elements and matrices.
//!
//! Elements are coefficient arrays; elements of single-generator rings
//! (such as `Z_n`) are flattened to plain integers. Matrices are arrays of
//! rows.

use ringsum_core::closed_form::{ClosedFormResult, Value as FormValue};
use ringsum_core::oracle::IntMatrix;
use ringsum_core::ring::{Matrix, RingElement};
use serde_json::{json, Value};

pub fn element(e: &RingElement) -> Value {
    match e.coeffs() {
        [c] => json!(c),
        cs => json!(cs),
    }
}

pub fn matrix(m: &Matrix) -> Value {
    let d = m.dim();
    Value::Array(
        (0..d)
            .map(|i| Value::Array((0..d).map(|j| element(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn int_matrix(m: &IntMatrix) -> Value {
    Value::Array(m.entries.chunks(m.d).map(|row| json!(row)).collect())
}

pub fn form_value(v: &FormValue) -> Value {
    match v {
        FormValue::Element(e) => element(e),
        FormValue::Matrix(m) => matrix(m),
    }
}

pub fn closed_form(r: &ClosedFormResult) -> Value {
    json!({
        "ring": r.ring.name(),
        "value": form_value(&r.value),
        "branch": r.branch.as_str(),
        "conjecture_dependent": r.conjecture_dependent,
        "primes": r.primes,
    })
}
