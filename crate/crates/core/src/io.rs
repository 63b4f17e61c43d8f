//! JSON document schemas: matrices as 2x2 arrays with rational entries as
//! "p/q" strings and float entries as numbers; representation documents
//! tagged with their scalar mode; census and witness reports.

use crate::atlas::Witness;
use crate::components::ComponentIndex;
use crate::cover::{classify_lifted, LiftedElement};
use crate::error::{Error, Result};
use crate::mobius::{Mat2, Psl2};
use crate::scalar::{Rat, Scalar};
use crate::surface::{Representation, SurfaceSig};
use serde_json::{json, Map, Value};

fn scalar_to_json<S: Scalar>(x: &S) -> Value {
    if S::EXACT {
        Value::String(x.to_string())
    } else {
        json!(x.to_f64())
    }
}

fn scalar_from_json<S: Scalar>(v: &Value) -> Result<S> {
    match v {
        Value::Number(n) => {
            if S::EXACT {
                if let Some(i) = n.as_i64() {
                    Ok(S::from_int(i))
                } else {
                    Err(Error::Parse(format!(
                        "rational documents require integer or \"p/q\" entries, got {n}"
                    )))
                }
            } else {
                n.as_f64()
                    .map(S::from_f64)
                    .ok_or_else(|| Error::Parse(format!("bad numeric entry {n}")))
            }
        }
        Value::String(s) => {
            let r = Rat::parse(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}")))?;
            Ok(S::from_rat(&r))
        }
        other => Err(Error::Parse(format!("matrix entry must be number or string, got {other}"))),
    }
}

pub fn mat_to_json<S: Scalar>(m: &Mat2<S>) -> Value {
    json!([
        [scalar_to_json(&m.a), scalar_to_json(&m.b)],
        [scalar_to_json(&m.c), scalar_to_json(&m.d)]
    ])
}

pub fn mat_from_json<S: Scalar>(v: &Value) -> Result<Mat2<S>> {
    let rows = v
        .as_array()
        .filter(|r| r.len() == 2)
        .ok_or_else(|| Error::Parse("matrix must be a 2x2 array".into()))?;
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let cols = row
            .as_array()
            .filter(|c| c.len() == 2)
            .ok_or_else(|| Error::Parse("matrix must be a 2x2 array".into()))?;
        for e in cols {
            entries.push(scalar_from_json::<S>(e)?);
        }
    }
    let mut it = entries.into_iter();
    Ok(Mat2::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ))
}

pub fn psl2_to_json<S: Scalar>(g: &Psl2<S>) -> Value {
    mat_to_json(g.mat())
}

pub fn psl2_from_json<S: Scalar>(v: &Value) -> Result<Psl2<S>> {
    Psl2::new(mat_from_json(v)?)
}

/// Serialized lifted element: matrix of the base plus theta0.
pub fn lifted_to_json(l: &LiftedElement<f64>) -> Value {
    json!({
        "matrix": psl2_to_json(l.base()),
        "theta0": l.theta0(),
    })
}

/// Serialized classification: { "kind": ..., "level": int }.
pub fn lifted_class_to_json(l: &LiftedElement<f64>) -> Result<Value> {
    let class = classify_lifted(l)?;
    Ok(json!({ "kind": class.kind_name(), "level": class.level() }))
}

pub fn rep_to_json<S: Scalar>(rep: &Representation<S>) -> Value {
    json!({
        "genus": rep.sig.genus,
        "punctures": rep.sig.punctures,
        "a": rep.a.iter().map(psl2_to_json).collect::<Vec<_>>(),
        "b": rep.b.iter().map(psl2_to_json).collect::<Vec<_>>(),
        "c": rep.c.iter().map(psl2_to_json).collect::<Vec<_>>(),
        "scalar": if S::EXACT { "rational" } else { "float" },
    })
}

/// A parsed representation document in either scalar mode.
pub enum AnyRepresentation {
    Float(Representation<f64>),
    Rational(Representation<Rat>),
}

impl AnyRepresentation {
    pub fn scalar_mode(&self) -> &'static str {
        match self {
            AnyRepresentation::Float(_) => "float",
            AnyRepresentation::Rational(_) => "rational",
        }
    }

    pub fn as_float(&self) -> Representation<f64> {
        match self {
            AnyRepresentation::Float(r) => r.clone(),
            AnyRepresentation::Rational(r) => r.to_f64(),
        }
    }
}

fn parse_rep_generic<S: Scalar>(v: &Value) -> Result<Representation<S>> {
    let genus = v["genus"]
        .as_u64()
        .ok_or_else(|| Error::Parse("missing genus".into()))? as usize;
    let punctures = v["punctures"]
        .as_u64()
        .ok_or_else(|| Error::Parse("missing punctures".into()))? as usize;
    let sig = SurfaceSig::new(genus, punctures)?;
    let list = |key: &str| -> Result<Vec<Psl2<S>>> {
        match &v[key] {
            Value::Null => Ok(Vec::new()),
            Value::Array(items) => items.iter().map(psl2_from_json).collect(),
            other => Err(Error::Parse(format!("{key} must be an array, got {other}"))),
        }
    };
    Representation::new(sig, list("a")?, list("b")?, list("c")?)
}

pub fn rep_from_json(v: &Value) -> Result<AnyRepresentation> {
    match v["scalar"].as_str() {
        Some("rational") => Ok(AnyRepresentation::Rational(parse_rep_generic(v)?)),
        Some("float") | None => Ok(AnyRepresentation::Float(parse_rep_generic(v)?)),
        Some(other) => Err(Error::Parse(format!(
            "scalar mode must be \"rational\" or \"float\", got {other:?}"
        ))),
    }
}

pub fn component_to_json(ci: &ComponentIndex) -> Value {
    json!({
        "n": ci.n,
        "s": ci.s.0.iter().map(|&x| x as i64).collect::<Vec<_>>(),
        "sign_string": ci.s.to_string_compact(),
        "boundary": ci.boundary.name(),
    })
}

/// Witness document: the representation plus a provenance block.
pub fn witness_to_json(w: &Witness, ci: &ComponentIndex) -> Value {
    let mut doc = rep_to_json(&w.rep);
    let provenance = json!({
        "component": component_to_json(ci),
        "allocation": w.allocation.as_ref().map(|a| json!({
            "pants": a.pants,
            "tori": a.tori,
        })).unwrap_or(Value::Null),
        "construction": w.construction.name(),
    });
    doc.as_object_mut()
        .unwrap()
        .insert("provenance".into(), provenance);
    doc
}

/// Census document for one signature.
pub fn census_to_json(
    sig: SurfaceSig,
    per_n: &[(i64, u64)],
    total: u64,
    indices: Option<&[ComponentIndex]>,
) -> Value {
    let per_n_json: Vec<Value> = per_n
        .iter()
        .map(|(n, count)| {
            let mut entry = Map::new();
            entry.insert("n".into(), json!(n));
            entry.insert("count".into(), json!(count));
            if let Some(all) = indices {
                let matching: Vec<Value> = all
                    .iter()
                    .filter(|ci| ci.n == *n)
                    .map(component_to_json)
                    .collect();
                entry.insert("indices".into(), Value::Array(matching));
            }
            Value::Object(entry)
        })
        .collect();
    json!({
        "sig": { "genus": sig.genus, "punctures": sig.punctures, "chi": sig.chi() },
        "per_n": per_n_json,
        "total": total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{relation_residual, relative_euler_class};

    #[test]
    fn representation_round_trip_float() {
        let sig = SurfaceSig::new(0, 4).unwrap();
        let rep: Representation<f64> = crate::atlas::tnh_exceptional(sig, 1).unwrap();
        let doc = rep_to_json(&rep);
        let back = rep_from_json(&doc).unwrap();
        assert_eq!(back.scalar_mode(), "float");
        let AnyRepresentation::Float(back) = back else {
            panic!()
        };
        assert!(relation_residual(&back) < 1e-12);
        assert_eq!(
            relative_euler_class(&back).unwrap(),
            relative_euler_class(&rep).unwrap()
        );
    }

    #[test]
    fn representation_round_trip_rational() {
        let sig = SurfaceSig::new(0, 5).unwrap();
        let rep: Representation<Rat> = crate::atlas::tnh_exceptional(sig, 1).unwrap();
        let doc = rep_to_json(&rep);
        assert_eq!(doc["scalar"], "rational");
        // entries include the exact fraction 4/(2-p) = -4/3
        let text = doc.to_string();
        assert!(text.contains("-4/3"));
        let back = rep_from_json(&doc).unwrap();
        let AnyRepresentation::Rational(back) = back else {
            panic!()
        };
        assert_eq!(relation_residual(&back), 0.0);
        assert_eq!(relative_euler_class(&back).unwrap(), 1);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(rep_from_json(&json!({ "genus": 0 })).is_err());
        assert!(rep_from_json(&json!({
            "genus": 0, "punctures": 3, "a": [], "b": [],
            "c": [[[1, 0], [0, 1]], [[1, 1], [0, 1]], [[2, 0], [0, 1]]],
            "scalar": "float"
        }))
        .is_err());
        let bad_scalar = json!({
            "genus": 0, "punctures": 3, "a": [], "b": [], "c": [], "scalar": "decimal"
        });
        assert!(rep_from_json(&bad_scalar).is_err());
    }
}
