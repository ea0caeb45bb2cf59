//! QSym JSON: `{"n": 4, "terms": [{"sigma": "+-+", "coeff": {"0": 1, "2": 3}}]}`,
//! where `coeff` maps a q-exponent to an integer.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::tableaux::Signature;

use super::qpoly::{Coeff, QPoly};
use super::qsym::{QSymExpansion, SchurExpansion};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn poly_to_json<C: Coeff>(p: &QPoly<C>) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        // beyond 64 bits the integer is written as a decimal string
        let v = match c.to_i64() {
            Some(x) => Value::from(x),
            None => Value::String(c.to_string()),
        };
        m.insert(e.to_string(), v);
    }
    Value::Object(m)
}

fn poly_from_json<C: Coeff>(v: &Value) -> Result<QPoly<C>> {
    let obj = v.as_object().ok_or_else(|| bad("coeff must be an object"))?;
    let mut p = QPoly::zero();
    for (e, c) in obj {
        let e: u32 = e.parse().map_err(|_| bad(format!("bad q-exponent {e:?}")))?;
        let text = match c {
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            Value::String(s) => s.clone(),
            _ => return Err(bad(format!("coefficient {c} is not an integer"))),
        };
        let c = C::from_str_radix(&text, 10).map_err(|_| bad(format!("coefficient {text:?} is not an integer")))?;
        p.add_term(e, c);
    }
    Ok(p)
}

pub fn qsym_to_json<C: Coeff>(f: &QSymExpansion<C>) -> String {
    let terms: Vec<Value> =
        f.terms().map(|(s, c)| json!({"sigma": s.to_string(), "coeff": poly_to_json(c)})).collect();
    json!({"n": f.degree(), "terms": terms}).to_string()
}

pub fn qsym_from_json<C: Coeff>(text: &str) -> Result<QSymExpansion<C>> {
    let root: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let n = root.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing integer \"n\""))? as usize;
    let terms = root.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing \"terms\" array"))?;
    let mut f = QSymExpansion::zero(n);
    for t in terms {
        let s: Signature =
            t.get("sigma").and_then(Value::as_str).ok_or_else(|| bad("term without \"sigma\""))?.parse()?;
        if s.len() != n.saturating_sub(1) {
            return Err(bad(format!("signature {s} does not have length n-1 = {}", n.saturating_sub(1))));
        }
        let c = poly_from_json(t.get("coeff").ok_or_else(|| bad("term without \"coeff\""))?)?;
        f.add_term(s, &c);
    }
    Ok(f)
}

/// `{"n": .., "terms": [{"lambda": "3,1", "coeff": {...}}], "residual": <qsym>}`.
pub fn schur_to_json<C: Coeff>(e: &SchurExpansion<C>) -> String {
    let terms: Vec<Value> =
        e.terms().map(|(p, c)| json!({"lambda": p.to_string(), "coeff": poly_to_json(c)})).collect();
    let residual: Value = serde_json::from_str(&qsym_to_json(e.residual())).expect("valid json");
    json!({"n": e.degree(), "terms": terms, "residual": residual}).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::schur_in_q;
    use num_bigint::BigInt;

    #[test]
    fn round_trip() {
        let mut f = schur_in_q::<BigInt>(&"3,1".parse().unwrap());
        f.add_monomial("+-+".parse().unwrap(), 2, BigInt::from(3));
        let text = qsym_to_json(&f);
        assert_eq!(qsym_from_json::<BigInt>(&text).unwrap(), f);
    }

    #[test]
    fn literal_format() {
        let f = qsym_from_json::<i64>(r#"{"n": 4, "terms": [{"sigma": "+-+", "coeff": {"0": 1, "2": 3}}]}"#).unwrap();
        assert_eq!(f.coeff(&"+-+".parse().unwrap()).to_string(), "3*q^2+1");
        assert!(qsym_from_json::<i64>(r#"{"n": 4, "terms": [{"sigma": "+-", "coeff": {}}]}"#).is_err());
        assert!(qsym_from_json::<i64>(r#"{"n": 3, "terms": [{"sigma": "+-", "coeff": {"0": 1.5}}]}"#).is_err());
    }

    #[test]
    fn big_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let mut f = QSymExpansion::zero(2);
        f.add_monomial("-".parse().unwrap(), 0, big.clone());
        assert_eq!(qsym_from_json::<BigInt>(&qsym_to_json(&f)).unwrap(), f);
    }
}
