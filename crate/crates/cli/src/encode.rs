//! JSON encodings of the core types.

use serde_json::{json, Value};
use unidenom::{Poly, RatFunc, Rational, SolutionSet};

pub fn rational(c: &Rational) -> Value {
    Value::String(format!("{}/{}", c.numer(), c.denom()))
}

/// `{"pretty": "...", "coeffs": ["c0/1", ...]}`, coefficients in ascending degree.
pub fn poly(p: &Poly) -> Value {
    json!({
        "pretty": p.to_string(),
        "coeffs": p.coeffs().iter().map(rational).collect::<Vec<_>>(),
    })
}

pub fn polys<'a>(ps: impl IntoIterator<Item = &'a Poly>) -> Value {
    Value::Array(ps.into_iter().map(poly).collect())
}

pub fn ratfunc(r: &RatFunc) -> Value {
    json!({
        "pretty": r.to_string(),
        "num": poly(r.num()),
        "den": poly(r.den()),
    })
}

pub fn solution_set(s: &SolutionSet) -> Value {
    json!({
        "pretty": s.to_string(),
        "particular": s.particular().map_or(Value::Null, poly),
        "basis": polys(s.basis()),
        "degree_bound": s.degree_bound(),
    })
}
