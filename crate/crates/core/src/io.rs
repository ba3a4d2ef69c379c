//! JSON encodings shared by the command-line front end and the suites.
//!
//! Rationals are "p/q" strings, group elements their integer labels,
//! groups `{name, params}` records (a bare name string is accepted on input).

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::algebra::{CentralElement, GroupAlgebraElement, GroupAlgebraMatrix};
use crate::arith::{CycloNum, Rational};
use crate::error::{Error, Result};
use crate::fitting::CentralLattice;
use crate::groups::{group_from_json, Group};

pub const SCHEMA_VERSION: u32 = 1;

fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

pub fn to_value<T: Serialize + ?Sized>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn group_json(g: &Group) -> Value {
    to_value(&**g)
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) if n.is_i64() => Ok(Rational::from(n.as_i64().unwrap())),
        _ => parse_err(format!("expected a rational \"p/q\", got {v}")),
    }
}

/// `{label: "p/q"}` over the support.
pub fn element_json(x: &GroupAlgebraElement<Rational>) -> Value {
    let mut m = Map::new();
    for (g, c) in x.coeffs().iter().enumerate() {
        if !c.is_zero() {
            m.insert(g.to_string(), Value::String(c.to_string()));
        }
    }
    Value::Object(m)
}

/// Accepts the sparse `{label: "p/q"}` form or a dense coefficient array.
pub fn element_from_json(g: &Group, v: &Value) -> Result<GroupAlgebraElement<Rational>> {
    let mut coeffs = vec![Rational::zero(); g.order()];
    match v {
        Value::Object(m) => {
            for (k, c) in m {
                let label: usize = k.parse().map_err(|_| Error::Parse(format!("bad element label {k:?}")))?;
                if label >= g.order() {
                    return parse_err(format!("label {label} out of range for {}", g.name()));
                }
                coeffs[label] = rational_from_json(c)?;
            }
        }
        Value::Array(a) => {
            if a.len() != g.order() {
                return parse_err(format!("{} coefficients for a group of order {}", a.len(), g.order()));
            }
            for (slot, c) in coeffs.iter_mut().zip(a) {
                *slot = rational_from_json(c)?;
            }
        }
        _ => return parse_err(format!("expected a group-ring element, got {v}")),
    }
    GroupAlgebraElement::new(g, coeffs)
}

pub fn matrix_json(m: &GroupAlgebraMatrix<Rational>) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(element_json).collect()))
        .collect();
    json!({"group": group_json(m.group()), "rows": m.rows(), "cols": m.cols(), "entries": entries})
}

/// Parse a matrix record. The group comes from the record's `group` field
/// or, failing that, from `default`.
pub fn matrix_from_json(v: &Value, default: Option<&Group>) -> Result<GroupAlgebraMatrix<Rational>> {
    let g = match (v.get("group"), default) {
        (Some(gv), _) => group_from_json(gv)?,
        (None, Some(g)) => g.clone(),
        (None, None) => return parse_err("matrix record without a group"),
    };
    let rows = match v.get("entries").or(Some(v)).and_then(Value::as_array) {
        Some(r) => r,
        None => return parse_err("matrix entries must be an array of rows"),
    };
    let parsed = rows
        .iter()
        .map(|r| match r.as_array() {
            Some(r) => r.iter().map(|e| element_from_json(&g, e)).collect::<Result<Vec<_>>>(),
            None => parse_err("matrix row must be an array"),
        })
        .collect::<Result<Vec<_>>>()?;
    let m = GroupAlgebraMatrix::from_rows(&g, parsed)?;
    for (key, want) in [("rows", m.rows()), ("cols", m.cols())] {
        if let Some(x) = v.get(key).and_then(Value::as_u64) {
            if x as usize != want {
                return parse_err(format!("declared {key} = {x} but found {want}"));
            }
        }
    }
    Ok(m)
}

/// A list of vectors in A^k, each a list of elements.
pub fn vectors_from_json(g: &Group, v: &Value) -> Result<Vec<Vec<GroupAlgebraElement<Rational>>>> {
    let Some(list) = v.as_array() else {
        return parse_err("expected an array of vectors");
    };
    list.iter()
        .map(|row| match row.as_array() {
            Some(r) => r.iter().map(|e| element_from_json(g, e)).collect(),
            None => parse_err("vector must be an array of elements"),
        })
        .collect()
}

pub fn central_json(c: &CentralElement) -> Value {
    json!({"group": group_json(c.group()), "values": to_value(c.values())})
}

/// Either `{values: [cyclo, ...]}` per χ or a central group-ring element.
pub fn central_from_json(g: &Group, v: &Value) -> Result<CentralElement> {
    if let Some(vals) = v.get("values") {
        let values: Vec<CycloNum> =
            serde_json::from_value(vals.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        return CentralElement::from_values(g, values);
    }
    let x = element_from_json(g, v)?;
    if !x.is_central() {
        return parse_err("element is not central");
    }
    CentralElement::from_group_algebra(&x)
}

pub fn lattice_json(l: &CentralLattice) -> Value {
    let hnf: Vec<Vec<String>> = l
        .hnf()
        .basis()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    json!({
        "group": group_json(l.group()),
        "denominator": l.denominator().to_string(),
        "hnf": hnf,
        "legend": l.legend(),
        "rank": l.rank(),
        "stable": l.is_stable(),
        "exact": l.is_exact(),
        "provenance": l.provenance(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group;

    #[test]
    fn matrix_round_trip() {
        let s3 = group("S3").unwrap();
        let m = GroupAlgebraMatrix::from_i64(&s3, 1, 2, &[vec![1, 0, 2, 0, 0, 0], vec![0, 0, 0, 0, 0, -3]]).unwrap();
        let v = matrix_json(&m);
        assert_eq!(v["entries"][0][0], json!({"0": "1/1", "2": "2/1"}));
        assert_eq!(matrix_from_json(&v, None).unwrap(), m);
        let dense = json!({"group": "S3", "entries": [[[1, 0, 2, 0, 0, 0], {"5": "-3"}]]});
        assert_eq!(matrix_from_json(&dense, None).unwrap(), m);
        assert!(matrix_from_json(&json!({"group": "S3", "entries": [[{"6": "1"}]]}), None).is_err());
    }

    #[test]
    fn central_round_trip() {
        let s3 = group("S3").unwrap();
        let c = CentralElement::constant(&s3, &Rational::new(1, 2));
        let v = central_json(&c);
        assert_eq!(central_from_json(&s3, &v).unwrap(), c);
        assert_eq!(central_from_json(&s3, &json!({"0": "1/2"})).unwrap(), c);
        assert!(central_from_json(&s3, &json!({"1": "1"})).is_err());
    }
}
