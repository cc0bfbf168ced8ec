//! The JSON interchange format for polynomials:
//!
//! ```json
//! {"nvars": n, "field": "Q"|"Fp", "p": 31, "terms": [[num, den, [e0, ..., er]], ...]}
//! ```
//!
//! `p` is present only over a prime field. Terms are emitted in descending
//! canonical order with arbitrary-precision integer numerators and
//! denominators, so output is deterministic and round-trips bit-exactly.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Q};
use crate::monomial::Monomial;
use crate::poly::MultiPoly;

fn bigint_number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integer string is a valid JSON number")
}

pub fn poly_to_json<F: Field>(f: &MultiPoly<F>) -> Value {
    let terms: Vec<Value> = f
        .terms_desc()
        .map(|(m, c)| {
            let (num, den) = f.field().to_num_den(c);
            let exps: Vec<Value> = m.exps().iter().map(|&e| json!(e)).collect();
            Value::Array(vec![
                Value::Number(bigint_number(&num)),
                Value::Number(bigint_number(&den)),
                Value::Array(exps),
            ])
        })
        .collect();
    match f.field().characteristic() {
        None => json!({
            "nvars": f.nvars(),
            "field": f.field().name(),
            "terms": terms,
        }),
        Some(p) => json!({
            "nvars": f.nvars(),
            "field": f.field().name(),
            "p": p,
            "terms": terms,
        }),
    }
}

pub fn poly_to_json_string<F: Field>(f: &MultiPoly<F>) -> String {
    serde_json::to_string(&poly_to_json(f)).expect("serialization cannot fail")
}

/// A polynomial read back from JSON, over whichever field it declared.
#[derive(Clone, Debug)]
pub enum ParsedPoly {
    Rational(MultiPoly<Q>),
    Prime(MultiPoly<PrimeField>),
}

pub fn poly_from_json(v: &Value) -> Result<ParsedPoly> {
    let bad = |msg: &str| Error::InvalidInput(format!("polynomial JSON: {msg}"));
    let obj = v.as_object().ok_or_else(|| bad("expected object"))?;
    let nvars = obj
        .get("nvars")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing nvars"))? as usize;
    if nvars == 0 {
        return Err(bad("nvars must be positive"));
    }
    let field_tag = obj
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing field tag"))?;
    let terms_json = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing terms"))?;

    let mut terms: Vec<(Monomial, BigInt, BigInt)> = Vec::with_capacity(terms_json.len());
    for t in terms_json {
        let arr = t.as_array().ok_or_else(|| bad("term must be an array"))?;
        if arr.len() != 3 {
            return Err(bad("term must be [num, den, exps]"));
        }
        let num = value_to_bigint(&arr[0]).ok_or_else(|| bad("bad numerator"))?;
        let den = value_to_bigint(&arr[1]).ok_or_else(|| bad("bad denominator"))?;
        let exps_json = arr[2].as_array().ok_or_else(|| bad("bad exponents"))?;
        if exps_json.len() != nvars {
            return Err(bad("exponent vector length must equal nvars"));
        }
        let mut exps = Vec::with_capacity(nvars);
        for e in exps_json {
            let e = e.as_u64().ok_or_else(|| bad("exponent must be a non-negative integer"))?;
            exps.push(u16::try_from(e).map_err(|_| bad("exponent too large"))?);
        }
        terms.push((Monomial::new(exps), num, den));
    }

    match field_tag {
        "Q" => {
            let mut f = MultiPoly::zero(Q, nvars);
            for (m, num, den) in terms {
                let c = Q.from_num_den(&num, &den)?;
                f = f.add(&MultiPoly::monomial_term(Q, nvars, m, c))?;
            }
            Ok(ParsedPoly::Rational(f))
        }
        "Fp" => {
            let p = obj
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("missing p for Fp"))?;
            let fp = PrimeField::new(p)?;
            let mut f = MultiPoly::zero(fp, nvars);
            for (m, num, den) in terms {
                let c = fp.from_num_den(&num, &den)?;
                f = f.add(&MultiPoly::monomial_term(fp, nvars, m, c))?;
            }
            Ok(ParsedPoly::Prime(f))
        }
        other => Err(bad(&format!("unknown field {other:?}"))),
    }
}

fn value_to_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::parse::parse_poly;

    #[test]
    fn json_round_trip_rational() {
        let f = parse_poly("1/2*x0^2 - 7*x1^3", 2).unwrap();
        let s = poly_to_json_string(&f);
        let v: Value = serde_json::from_str(&s).unwrap();
        match poly_from_json(&v).unwrap() {
            ParsedPoly::Rational(g) => assert_eq!(g, f),
            _ => panic!("wrong field"),
        }
    }

    #[test]
    fn json_emits_canonical_descending_order() {
        let f = parse_poly("x1^2 + x0^2", 2).unwrap();
        let s = poly_to_json_string(&f);
        assert_eq!(s, r#"{"field":"Q","nvars":2,"terms":[[1,1,[2,0]],[1,1,[0,2]]]}"#);
    }

    #[test]
    fn json_handles_huge_coefficients_exactly() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let f = MultiPoly::constant(Q, 1, crate::field::Rat::new(big.clone(), BigInt::from(7)));
        let s = poly_to_json_string(&f);
        let v: Value = serde_json::from_str(&s).unwrap();
        match poly_from_json(&v).unwrap() {
            ParsedPoly::Rational(g) => assert_eq!(g, f),
            _ => panic!("wrong field"),
        }
    }

    #[test]
    fn json_prime_field() {
        let fp = PrimeField::new(31).unwrap();
        let f = crate::poly::reduce_mod_p(&parse_poly("30*x0^2 + 3*x1^2", 2).unwrap(), fp).unwrap();
        let s = poly_to_json_string(&f);
        assert!(s.contains(r#""p":31"#));
        match poly_from_json(&serde_json::from_str(&s).unwrap()).unwrap() {
            ParsedPoly::Prime(g) => assert_eq!(g, f),
            _ => panic!("wrong field"),
        }
    }

    #[test]
    fn json_rejects_malformed_input() {
        for bad in [
            r#"{"nvars":0,"field":"Q","terms":[]}"#,
            r#"{"nvars":2,"field":"R","terms":[]}"#,
            r#"{"nvars":2,"field":"Q","terms":[[1,1,[2]]]}"#,
            r#"{"nvars":2,"field":"Fp","terms":[]}"#,
            r#"{"nvars":2,"field":"Q","terms":[[1,0,[1,0]]]}"#,
        ] {
            let v: Value = serde_json::from_str(bad).unwrap();
            assert!(poly_from_json(&v).is_err(), "should reject {bad}");
        }
    }

    #[test]
    fn rational_literal_survives(){
        let f = MultiPoly::constant(Q, 2, rat(-3, 4));
        let s = poly_to_json_string(&f);
        assert_eq!(s, r#"{"field":"Q","nvars":2,"terms":[[-3,4,[0,0]]]}"#);
    }
}
