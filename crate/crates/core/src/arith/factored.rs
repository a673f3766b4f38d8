use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{
    Alphabet, FieldElement, Linear, LinearForm, Permutation, SparsePoly, Specialization, Variable,
};
use crate::Error;

/// A rational constant times a product of canonical linear forms raised to
/// nonzero integer powers.
///
/// Distinct canonical forms are pairwise non-associate irreducibles, so this
/// representation is unique: two values are equal exactly when their
/// constants and factor maps are equal. Zero is the zero constant with no
/// factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredRational {
    constant: BigRational,
    factors: BTreeMap<LinearForm, i64>,
}

impl Default for FactoredRational {
    fn default() -> Self {
        Self::one()
    }
}

impl FactoredRational {
    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        Self::from_rational(BigRational::from_integer(c.into()))
    }

    pub fn from_rational(constant: BigRational) -> Self {
        FactoredRational {
            constant,
            factors: BTreeMap::new(),
        }
    }

    /// Builds from a constant and `(form, exponent)` pairs, merging repeats.
    pub fn from_parts(
        constant: BigRational,
        factors: impl IntoIterator<Item = (LinearForm, i64)>,
    ) -> Self {
        let mut out = Self::from_rational(constant);
        for (form, e) in factors {
            out.mul_form(form, e);
        }
        out
    }

    /// `(c + pos − neg)^exp`, normalized.
    pub fn linear(
        c: i64,
        pos: Option<Variable>,
        neg: Option<Variable>,
        exp: i64,
    ) -> Result<Self, Error> {
        let mut out = Self::one();
        out.mul_linear(c, pos, neg, exp)?;
        Ok(out)
    }

    /// The power `v^exp` of a single variable.
    pub fn variable(v: Variable, exp: i64) -> Self {
        Self::linear(0, Some(v), None, exp).expect("a variable is never zero")
    }

    pub fn constant(&self) -> &BigRational {
        &self.constant
    }

    /// Factors in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (&LinearForm, i64)> {
        self.factors.iter().map(|(f, &e)| (f, e))
    }

    pub fn exponent(&self, form: &LinearForm) -> i64 {
        self.factors.get(form).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty() && self.constant.is_one()
    }

    /// True when no factor has a negative exponent and the constant is an
    /// integer.
    pub fn is_polynomial(&self) -> bool {
        self.constant.is_integer() && self.factors.values().all(|&e| e > 0)
    }

    /// Numerator degree minus denominator degree.
    pub fn degree(&self) -> i64 {
        self.factors.values().sum()
    }

    /// Smallest alphabet containing every variable that occurs.
    pub fn alphabet(&self) -> Alphabet {
        let mut alphabet = Alphabet::params(0);
        for form in self.factors.keys() {
            for v in [Some(form.pos()), form.neg()].into_iter().flatten() {
                match v {
                    Variable::Param(s) => alphabet.params = alphabet.params.max(s),
                    Variable::X => alphabet.indeterminate = true,
                }
            }
        }
        alphabet
    }

    /// Multiplies in place by a canonical form to the power `exp`.
    pub fn mul_form(&mut self, form: LinearForm, exp: i64) {
        if exp == 0 || self.is_zero() {
            return;
        }
        let e = self.factors.entry(form).or_insert(0);
        *e += exp;
        if *e == 0 {
            self.factors.remove(&form);
        }
    }

    /// Multiplies in place by `(c + pos − neg)^exp`, folding constants and
    /// orientation signs into the constant.
    pub fn mul_linear(
        &mut self,
        c: i64,
        pos: Option<Variable>,
        neg: Option<Variable>,
        exp: i64,
    ) -> Result<(), Error> {
        self.mul_normalized(LinearForm::normalize(c, pos, neg), exp)
    }

    pub(crate) fn mul_normalized(&mut self, lin: Linear, exp: i64) -> Result<(), Error> {
        match lin {
            Linear::Constant(k) => self.mul_constant_pow(&BigRational::from_integer(k.into()), exp),
            Linear::Form { negated, form } => {
                if negated && exp % 2 != 0 {
                    self.constant = -core::mem::take(&mut self.constant);
                }
                self.mul_form(form, exp);
                Ok(())
            }
        }
    }

    fn mul_constant_pow(&mut self, k: &BigRational, exp: i64) -> Result<(), Error> {
        if exp < 0 && k.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let base = if exp < 0 { k.recip() } else { k.clone() };
        for _ in 0..exp.unsigned_abs() {
            self.constant *= &base;
        }
        if self.constant.is_zero() {
            self.factors.clear();
        }
        Ok(())
    }

    /// Multiplies in place by a rational constant.
    pub fn scale(&mut self, k: &BigRational) {
        self.mul_constant_pow(k, 1).expect("positive exponent");
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FactoredRational {
            constant: self.constant.recip(),
            factors: self.factors.iter().map(|(f, &e)| (*f, -e)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, Error> {
        if exp < 0 {
            return self.inverse()?.pow(-exp);
        }
        if exp == 0 {
            return Ok(Self::one());
        }
        let mut out = FactoredRational {
            constant: BigRational::one(),
            factors: self.factors.iter().map(|(f, &e)| (*f, e * exp)).collect(),
        };
        out.mul_constant_pow(&self.constant, exp)?;
        Ok(out)
    }

    /// Expands into an integer polynomial over `alphabet`.
    pub fn expand_in(&self, alphabet: Alphabet) -> Result<SparsePoly, Error> {
        if self.factors.values().any(|&e| e < 0) {
            return Err(Error::NotAPolynomial);
        }
        if !self.constant.is_integer() {
            return Err(Error::NonIntegerConstant);
        }
        let mut out = SparsePoly::constant(alphabet, self.constant.to_integer());
        for (form, &e) in &self.factors {
            let lin = SparsePoly::linear(alphabet, form)?;
            for _ in 0..e {
                out = out.mul(&lin);
            }
        }
        Ok(out)
    }

    /// Expands over the smallest alphabet containing the occurring variables.
    pub fn expand(&self) -> Result<SparsePoly, Error> {
        self.expand_in(self.alphabet())
    }

    pub fn eval(&self, theta: &Specialization) -> Result<FieldElement, Error> {
        let field = theta.field();
        let mut values = alloc::vec::Vec::with_capacity(self.factors.len());
        for (form, &e) in &self.factors {
            let mut v = field.from_i64(form.constant());
            for (var, k) in form.terms() {
                let t = theta.value(var)?;
                v = if k > 0 { v.add(t)? } else { v.sub(t)? };
            }
            if e < 0 && v.is_zero() {
                return Err(Error::Pole);
            }
            values.push((v, e));
        }
        let mut acc = field.from_rational(&self.constant)?;
        for (v, e) in values {
            acc = acc.mul(&v.pow(e)?)?;
        }
        Ok(acc)
    }

    /// Replaces each `q_s` by `q_{σ(s)}`.
    pub fn permute(&self, sigma: &Permutation) -> Self {
        let mut out = Self::from_rational(self.constant.clone());
        for (form, &e) in &self.factors {
            out.mul_normalized(form.permute(sigma), e)
                .expect("permuting a form never gives a constant");
        }
        out
    }

    /// Replaces `x` by `q_s − q_t`.
    pub fn substitute_x(&self, s: usize, t: usize) -> Result<Self, Error> {
        if s == t {
            return Err(Error::Precondition("substitution needs s != t"));
        }
        let mut out = Self::from_rational(self.constant.clone());
        for (form, &e) in &self.factors {
            let lin = if form.contains(Variable::X) {
                form.substitute_x(s, t)?
            } else {
                Linear::Form {
                    negated: false,
                    form: *form,
                }
            };
            out.mul_normalized(lin, e)?;
        }
        Ok(out)
    }

    /// Replaces `x` by `−x`.
    pub fn negate_x(&self) -> Result<Self, Error> {
        let mut out = Self::from_rational(self.constant.clone());
        for (form, &e) in &self.factors {
            out.mul_normalized(form.negate_x()?, e)?;
        }
        Ok(out)
    }

    /// Writes the value with a custom variable renderer and exponent syntax.
    pub fn render(
        &self,
        var: impl Fn(Variable) -> String,
        constant: impl Fn(&BigRational) -> String,
        exponent: impl Fn(i64) -> String,
    ) -> String {
        use core::fmt::Write;
        struct Form<'a, F: Fn(Variable) -> String>(&'a LinearForm, &'a F);
        impl<F: Fn(Variable) -> String> fmt::Display for Form<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write_with(f, self.1)
            }
        }

        let mut out = String::new();
        if self.factors.is_empty() || self.is_zero() {
            return constant(&self.constant);
        }
        if self.constant == -BigRational::one() {
            out.push('-');
        } else if !self.constant.is_one() {
            out.push_str(&constant(&self.constant));
        }
        for (form, &e) in &self.factors {
            let _ = write!(out, "({})", Form(form, &var));
            if e != 1 {
                out.push_str(&exponent(e));
            }
        }
        out
    }
}

impl Mul for &FactoredRational {
    type Output = FactoredRational;

    fn mul(self, rhs: &FactoredRational) -> FactoredRational {
        if self.is_zero() || rhs.is_zero() {
            return FactoredRational::zero();
        }
        let mut out = self.clone();
        out.constant *= &rhs.constant;
        for (form, &e) in &rhs.factors {
            out.mul_form(*form, e);
        }
        out
    }
}

impl Mul for FactoredRational {
    type Output = FactoredRational;

    fn mul(self, rhs: FactoredRational) -> FactoredRational {
        &self * &rhs
    }
}

impl fmt::Display for FactoredRational {
    /// ASCII form, e.g. `2(-1+q1-q2)(q1-q2)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            |v| alloc::format!("{v}"),
            |c| {
                if c.is_integer() {
                    alloc::format!("{}", c.numer())
                } else {
                    let sign = if c.is_negative() { "-" } else { "" };
                    alloc::format!("{sign}{}/{}", c.numer().abs(), c.denom())
                }
            },
            |e| alloc::format!("^{e}"),
        );
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use alloc::string::ToString;

    const Q1: Option<Variable> = Some(Variable::Param(1));
    const Q2: Option<Variable> = Some(Variable::Param(2));
    const X: Option<Variable> = Some(Variable::X);

    fn lin(c: i64, pos: Option<Variable>, neg: Option<Variable>, e: i64) -> FactoredRational {
        FactoredRational::linear(c, pos, neg, e).unwrap()
    }

    fn int(k: i64) -> FactoredRational {
        FactoredRational::from_integer(k)
    }

    #[test]
    fn multiplication_examples() {
        assert!((lin(0, Q1, Q2, 1) * lin(0, Q1, Q2, -1)).is_one());
        let a = int(2) * lin(1, Q1, Q2, 1);
        let b = int(3) * lin(1, Q1, Q2, 1);
        assert_eq!(a * b, int(6) * lin(1, Q1, Q2, 2));
        let y = lin(0, X, None, 1) * lin(1, X, None, 1) * lin(1, X, None, -1);
        assert_eq!(y, lin(0, X, None, 1));
    }

    #[test]
    fn zero_absorbs() {
        let z = int(0) * lin(1, Q1, Q2, 3);
        assert!(z.is_zero());
        assert_eq!(z, FactoredRational::zero());
        assert_eq!(z.inverse(), Err(Error::DivisionByZero));
        assert_eq!(
            FactoredRational::linear(0, None, None, -1),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn expansion_examples() {
        let p = lin(0, Q1, Q2, 1).expand().unwrap();
        assert_eq!(p.to_string(), "q1-q2");
        let p = (lin(1, Q1, Q2, 1) * lin(1, Q2, Q1, 1)).expand().unwrap();
        assert_eq!(p.to_string(), "-q1^2+2*q1*q2-q2^2+1");
        let r = lin(0, X, None, 1) * lin(1, X, None, -1);
        assert_eq!(r.expand(), Err(Error::NotAPolynomial));
        let half = FactoredRational::from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(
            (half * lin(0, Q1, Q2, 1)).expand(),
            Err(Error::NonIntegerConstant)
        );
    }

    #[test]
    fn evaluation_examples() {
        let a = lin(1, Q1, Q2, 1) * lin(1, Q2, Q1, 1);
        let theta = Specialization::from_integers(Field::Rationals, &[2, 0]);
        assert_eq!(a.eval(&theta).unwrap(), Field::Rationals.from_i64(-3));
        let theta = Specialization::from_integers(Field::Rationals, &[0, 0]);
        assert_eq!(lin(0, Q1, Q2, -1).eval(&theta), Err(Error::Pole));
        let f7 = Field::prime(7).unwrap();
        let theta = Specialization::from_integers(f7, &[5, 3]);
        assert_eq!(lin(0, Q1, Q2, 1).eval(&theta).unwrap(), f7.from_i64(2));
        let third = FactoredRational::from_rational(BigRational::new(1.into(), 7.into()));
        assert_eq!(
            third.eval(&theta),
            Err(Error::ConstantDenominatorVanishes { p: 7 })
        );
    }

    #[test]
    fn permutation_examples() {
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let a = lin(0, Q1, Q2, 1);
        let b = a.permute(&swap);
        assert_eq!(b, int(-1) * lin(0, Q1, Q2, 1));
        assert_eq!(b.permute(&swap), a);
        assert_eq!(a.permute(&Permutation::identity(2)), a);
    }

    #[test]
    fn equality_examples() {
        let x = lin(0, X, None, 1);
        assert_eq!(x, x.clone() * lin(1, X, None, 1) * lin(1, X, None, -1));
        assert_ne!(lin(0, Q1, Q2, 1), lin(0, Q2, Q1, 1));
    }

    #[test]
    fn substitution_examples() {
        let x = lin(0, X, None, 1);
        assert_eq!(x.substitute_x(1, 2).unwrap(), lin(0, Q1, Q2, 1));
        assert_eq!(
            lin(4, X, None, 1).substitute_x(1, 2).unwrap(),
            lin(4, Q1, Q2, 1)
        );
        // c − x ↦ c + q2 − q1
        assert_eq!(
            lin(3, None, X, 1).substitute_x(1, 2).unwrap(),
            lin(3, Q2, Q1, 1)
        );
        assert!(x.substitute_x(1, 1).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(lin(0, Q1, Q2, 1).to_string(), "(q1-q2)");
        assert_eq!(int(6).to_string(), "6");
        let p = int(2) * lin(-1, Q1, Q2, 1) * lin(0, Q1, Q2, 1) * lin(1, Q1, Q2, 1);
        assert_eq!(p.to_string(), "2(-1+q1-q2)(q1-q2)(1+q1-q2)");
        assert_eq!((int(-1) * lin(2, X, None, -2)).to_string(), "-(2+x)^-2");
    }
}
