use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Variable;
use crate::Error;

/// The target field of a specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// `F_p`; rejects composite moduli.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime { p })
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match *self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => FieldElement::Modular {
                p,
                value: (v as i128).rem_euclid(p as i128) as u64,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match *self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                FieldElement::Modular {
                    p,
                    value: r.to_u64().expect("residue fits in u64"),
                }
            }
        }
    }

    /// Maps a rational into the field; fails when the denominator vanishes.
    pub fn from_rational(&self, v: &BigRational) -> Result<FieldElement, Error> {
        match *self {
            Field::Rationals => Ok(FieldElement::Rational(v.clone())),
            Field::Prime(p) => {
                let den = self.from_bigint(v.denom());
                if den.is_zero() {
                    return Err(Error::ConstantDenominatorVanishes { p });
                }
                self.from_bigint(v.numer()).div(&den)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `Q` or of `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Modular { p: u64, value: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Modular { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(a + b))
            }
            (FieldElement::Modular { p, value: a }, FieldElement::Modular { p: q, value: b })
                if p == q =>
            {
                Ok(FieldElement::Modular {
                    p: *p,
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Modular { p, value } => FieldElement::Modular {
                p: *p,
                value: (*p - *value) % *p,
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(a * b))
            }
            (FieldElement::Modular { p, value: a }, FieldElement::Modular { p: q, value: b })
                if p == q =>
            {
                Ok(FieldElement::Modular {
                    p: *p,
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldElement::Rational(a) => Ok(FieldElement::Rational(a.recip())),
            FieldElement::Modular { p, value } => Ok(FieldElement::Modular {
                p: *p,
                value: pow_mod(*value, *p - 2, *p),
            }),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        self.mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self, Error> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut result = self.field().one();
        for _ in 0..exp.unsigned_abs() {
            result = result.mul(&base)?;
        }
        Ok(result)
    }
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = p as u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            FieldElement::Rational(r) => {
                let sign = if r.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", r.numer().abs(), r.denom())
            }
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

/// An assignment `q_s ↦ θ(q_s)` for every parameter of the level, and
/// optionally `x ↦ θ(x)`, all in one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    field: Field,
    params: Vec<FieldElement>,
    x: Option<FieldElement>,
}

impl Specialization {
    pub fn new(field: Field, params: Vec<FieldElement>) -> Result<Self, Error> {
        if params.iter().any(|v| v.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Specialization {
            field,
            params,
            x: None,
        })
    }

    /// Integer parameter values mapped into `field`.
    pub fn from_integers(field: Field, values: &[i64]) -> Self {
        Specialization {
            field,
            params: values.iter().map(|&v| field.from_i64(v)).collect(),
            x: None,
        }
    }

    pub fn with_x(mut self, value: FieldElement) -> Result<Self, Error> {
        if value.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        self.x = Some(value);
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of assigned parameters.
    pub fn level(&self) -> usize {
        self.params.len()
    }

    pub fn params(&self) -> &[FieldElement] {
        &self.params
    }

    pub fn value(&self, v: Variable) -> Result<&FieldElement, Error> {
        match v {
            Variable::Param(s) if s >= 1 => self.params.get(s - 1),
            Variable::Param(_) => None,
            Variable::X => self.x.as_ref(),
        }
        .ok_or(Error::Unassigned(v))
    }
}
