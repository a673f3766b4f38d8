//! Parameter specializations from command-line assignments or a seeded RNG.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::Rng;

use schurkit_core::{Field, Specialization};

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("--set {0:?}: expected qS=VALUE with VALUE an integer or a/b")]
    Syntax(String),
    #[error("--set q{0} given more than once")]
    Duplicate(usize),
    #[error("--set q{s}: the level is {m}, so only q1..q{m} exist")]
    OutOfRange { s: usize, m: usize },
    #[error("missing --set q{0}")]
    Missing(usize),
    #[error("--mod {0}: not a prime")]
    NotPrime(u64),
    #[error("--set q{s}: {value} has a denominator divisible by {p}")]
    Denominator { s: usize, value: String, p: u64 },
}

/// Parses one `qS=VALUE` assignment, with `VALUE` an integer or `a/b`.
pub fn parse_assignment(text: &str) -> Result<(usize, BigRational), ThetaError> {
    let err = || ThetaError::Syntax(text.to_string());
    let (name, value) = text.split_once('=').ok_or_else(err)?;
    let s = name
        .trim()
        .strip_prefix('q')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&s| s >= 1)
        .ok_or_else(err)?;
    let value: BigRational = value.trim().parse().map_err(|_| err())?;
    Ok((s, value))
}

/// Builds the specialization of level `m` from assignments covering
/// exactly `q1..qm`, over `Q` or over `F_p` when a modulus is given.
pub fn build_specialization(
    m: usize,
    assignments: &[(usize, BigRational)],
    modulus: Option<u64>,
) -> Result<Specialization, ThetaError> {
    let field = match modulus {
        None => Field::Rationals,
        Some(p) => Field::prime(p).map_err(|_| ThetaError::NotPrime(p))?,
    };
    let mut values = BTreeMap::new();
    for (s, v) in assignments {
        if *s > m {
            return Err(ThetaError::OutOfRange { s: *s, m });
        }
        if values.insert(*s, v).is_some() {
            return Err(ThetaError::Duplicate(*s));
        }
    }
    let params = (1..=m)
        .map(|s| {
            let v = values.get(&s).ok_or(ThetaError::Missing(s))?;
            field.from_rational(v).map_err(|_| ThetaError::Denominator {
                s,
                value: v.to_string(),
                p: field.characteristic(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Specialization::new(field, params).expect("all values lie in one field"))
}

/// Integer parameter values drawn uniformly from `[−n, n]`, mapped into
/// `field`.
pub fn random_specialization(
    rng: &mut impl Rng,
    m: usize,
    n: usize,
    field: Field,
) -> Specialization {
    let bound = n as i64;
    let values: Vec<i64> = (0..m).map(|_| rng.gen_range(-bound..=bound)).collect();
    Specialization::from_integers(field, &values)
}
