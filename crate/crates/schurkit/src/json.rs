//! JSON encodings of the core value types.
//!
//! Integers that may exceed machine range travel as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use schurkit_core::semisimple::SemisimplicityReport;
use schurkit_core::{
    Alphabet, FactoredRational, Field, LinearForm, Multipartition, Node, Partition, SparsePoly,
    Variable,
};

#[derive(Debug, thiserror::Error)]
pub enum DecodeError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("expected {0}")]
    Shape(&'static str),
    #[error("invalid integer string {0:?}")]
    Integer(String),
    #[error("unknown variable {0:?}")]
    Variable(String),
    #[error(transparent)]
    Core(#[from] schurkit_core::Error),
}

pub fn variable_to_json(v: Variable) -> Value {
    Value::String(v.to_string())
}

/// Parses `"q3"`, `"x"` or `null`.
pub fn variable_from_json(value: &Value) -> Result<Option<Variable>, DecodeError> {
    match value {
        Value::Null => Ok(None),
        Value::String(s) => parse_variable(s).map(Some),
        _ => Err(DecodeError::Shape("a variable name or null")),
    }
}

pub fn parse_variable(s: &str) -> Result<Variable, DecodeError> {
    if s == "x" {
        return Ok(Variable::X);
    }
    s.strip_prefix('q')
        .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&s| s >= 1)
        .map(Variable::Param)
        .ok_or_else(|| DecodeError::Variable(s.to_string()))
}

pub fn linear_form_to_json(form: &LinearForm) -> Value {
    json!({
        "c": form.constant(),
        "pos": variable_to_json(form.pos()),
        "neg": form.neg().map_or(Value::Null, variable_to_json),
    })
}

/// The raw `(c, pos, neg)` of an encoded form, which need not be canonical.
pub fn linear_form_from_json(
    value: &Value,
) -> Result<(i64, Option<Variable>, Option<Variable>), DecodeError> {
    let obj = value
        .as_object()
        .ok_or(DecodeError::Shape("a linear form object"))?;
    let c = obj
        .get("c")
        .and_then(Value::as_i64)
        .ok_or(DecodeError::Shape("an integer \"c\""))?;
    let pos = variable_from_json(obj.get("pos").unwrap_or(&Value::Null))?;
    let neg = variable_from_json(obj.get("neg").unwrap_or(&Value::Null))?;
    Ok((c, pos, neg))
}

pub fn factored_to_json(value: &FactoredRational) -> Value {
    let factors: Vec<Value> = value
        .factors()
        .map(|(form, e)| json!([linear_form_to_json(form), e]))
        .collect();
    json!({
        "num": value.constant().numer().to_string(),
        "den": value.constant().denom().to_string(),
        "factors": factors,
    })
}

fn parse_bigint(value: Option<&Value>) -> Result<BigInt, DecodeError> {
    let s = value
        .and_then(Value::as_str)
        .ok_or(DecodeError::Shape("a decimal integer string"))?;
    s.parse().map_err(|_| DecodeError::Integer(s.to_string()))
}

/// Decodes a factored rational function, normalizing any non-canonical
/// factors on the way in.
pub fn factored_from_json(value: &Value) -> Result<FactoredRational, DecodeError> {
    let obj = value
        .as_object()
        .ok_or(DecodeError::Shape("a factored rational object"))?;
    let num = parse_bigint(obj.get("num"))?;
    let den = parse_bigint(obj.get("den"))?;
    if den.is_zero() {
        return Err(DecodeError::Shape("a nonzero denominator"));
    }
    let mut acc = FactoredRational::from_rational(BigRational::new(num, den));
    let factors = obj
        .get("factors")
        .and_then(Value::as_array)
        .ok_or(DecodeError::Shape("a \"factors\" array"))?;
    for entry in factors {
        let pair = entry
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or(DecodeError::Shape("a [form, exponent] pair"))?;
        let (c, pos, neg) = linear_form_from_json(&pair[0])?;
        let exp = pair[1]
            .as_i64()
            .ok_or(DecodeError::Shape("an integer exponent"))?;
        acc.mul_linear(c, pos, neg, exp)?;
    }
    Ok(acc)
}

pub fn poly_to_json(poly: &SparsePoly) -> Value {
    Value::Array(
        poly.terms()
            .map(|(exps, c)| json!([exps, c.to_string()]))
            .collect(),
    )
}

/// Decodes a polynomial whose exponent vectors are indexed by `alphabet`.
pub fn poly_from_json(value: &Value, alphabet: Alphabet) -> Result<SparsePoly, DecodeError> {
    let terms = value
        .as_array()
        .ok_or(DecodeError::Shape("an array of terms"))?
        .iter()
        .map(|term| {
            let pair = term
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or(DecodeError::Shape("an [exponents, coefficient] pair"))?;
            let exps = pair[0]
                .as_array()
                .ok_or(DecodeError::Shape("an exponent vector"))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|e| u32::try_from(e).ok())
                        .ok_or(DecodeError::Shape("a non-negative exponent"))
                })
                .collect::<Result<Vec<u32>, _>>()?;
            Ok((exps, parse_bigint(Some(&pair[1]))?))
        })
        .collect::<Result<Vec<_>, DecodeError>>()?;
    Ok(SparsePoly::from_terms(alphabet, terms)?)
}

pub fn partition_to_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn partition_from_json(value: &Value) -> Result<Partition, DecodeError> {
    let parts = value
        .as_array()
        .ok_or(DecodeError::Shape("a partition array"))?
        .iter()
        .map(|v| {
            v.as_u64()
                .and_then(|v| usize::try_from(v).ok())
                .ok_or(DecodeError::Shape("a non-negative part"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

pub fn multipartition_to_json(lam: &Multipartition) -> Value {
    Value::Array(lam.components().iter().map(partition_to_json).collect())
}

pub fn multipartition_from_json(value: &Value) -> Result<Multipartition, DecodeError> {
    let components = value
        .as_array()
        .ok_or(DecodeError::Shape("a multipartition array"))?
        .iter()
        .map(partition_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Multipartition::new(components)?)
}

/// `[i, j, s]`, or `[i, j]` for a node of a single partition.
pub fn node_to_json(node: &Node) -> Value {
    match node.component {
        Some(s) => json!([node.row, node.col, s]),
        None => json!([node.row, node.col]),
    }
}

pub fn field_name(field: Field) -> String {
    field.to_string()
}

pub fn report_to_json(report: &SemisimplicityReport) -> Value {
    let mut obj = Map::new();
    obj.insert("p_value".into(), Value::String(report.p_value.to_string()));
    obj.insert("semisimple".into(), Value::Bool(report.semisimple));
    obj.insert(
        "vanishing".into(),
        report.vanishing.as_ref().map_or(Value::Null, |v| {
            Value::Array(v.iter().map(multipartition_to_json).collect())
        }),
    );
    obj.insert("agreement".into(), Value::Bool(report.agreement));
    obj.insert("field".into(), Value::String(field_name(report.field)));
    Value::Object(obj)
}
