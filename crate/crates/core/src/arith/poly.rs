use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{FieldElement, LinearForm, Permutation, Specialization, Variable};
use crate::Error;

/// The variables a polynomial is written in: `q_1..q_params`, then `x` when
/// `indeterminate` is set. Exponent vectors follow this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    pub params: usize,
    pub indeterminate: bool,
}

impl Alphabet {
    /// `q_1..q_m`.
    pub fn params(m: usize) -> Self {
        Alphabet {
            params: m,
            indeterminate: false,
        }
    }

    /// The single variable `x`.
    pub fn indeterminate() -> Self {
        Alphabet {
            params: 0,
            indeterminate: true,
        }
    }

    pub fn len(&self) -> usize {
        self.params + usize::from(self.indeterminate)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet {
            params: self.params.max(other.params),
            indeterminate: self.indeterminate || other.indeterminate,
        }
    }

    pub fn position(&self, v: Variable) -> Option<usize> {
        match v {
            Variable::Param(s) if s >= 1 && s <= self.params => Some(s - 1),
            Variable::X if self.indeterminate => Some(self.params),
            _ => None,
        }
    }

    pub fn variable(&self, position: usize) -> Variable {
        if position < self.params {
            Variable::Param(position + 1)
        } else {
            Variable::X
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        (0..self.len()).map(|k| self.variable(k))
    }
}

/// An exponent vector, ordered by total degree and then reverse
/// lexicographically, so `q1^2 < q1q2 < q2^2` within a degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An expanded polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        SparsePoly {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: Alphabet, c: BigInt) -> Self {
        let mut p = SparsePoly::zero(alphabet);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; alphabet.len()]), c);
        }
        p
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::constant(alphabet, BigInt::one())
    }

    /// Builds from `(exponent vector, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        alphabet: Alphabet,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Result<Self, Error> {
        let mut p = SparsePoly::zero(alphabet);
        for (exps, c) in terms {
            if exps.len() != alphabet.len() {
                return Err(Error::Precondition(
                    "exponent vector length differs from alphabet",
                ));
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    /// The expansion of a single linear form.
    pub fn linear(alphabet: Alphabet, form: &LinearForm) -> Result<Self, Error> {
        let mut terms = vec![(vec![0; alphabet.len()], BigInt::from(form.constant()))];
        for (v, k) in form.terms() {
            let pos = alphabet.position(v).ok_or(Error::Unassigned(v))?;
            let mut exps = vec![0; alphabet.len()];
            exps[pos] = 1;
            terms.push((exps, BigInt::from(k)));
        }
        SparsePoly::from_terms(alphabet, terms)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Re-embeds into a larger alphabet.
    pub fn embed(&self, alphabet: Alphabet) -> Result<Self, Error> {
        if alphabet.params < self.alphabet.params
            || (self.alphabet.indeterminate && !alphabet.indeterminate)
        {
            return Err(Error::Precondition("target alphabet is smaller"));
        }
        if alphabet == self.alphabet {
            return Ok(self.clone());
        }
        let mut out = SparsePoly::zero(alphabet);
        for (m, c) in &self.terms {
            let mut exps = vec![0; alphabet.len()];
            for (k, &e) in m.0.iter().enumerate() {
                let v = self.alphabet.variable(k);
                exps[alphabet.position(v).expect("embedded variable")] = e;
            }
            out.terms.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let alphabet = self.alphabet.union(&other.alphabet);
        (
            self.embed(alphabet).expect("union contains both"),
            other.embed(alphabet).expect("union contains both"),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return SparsePoly::zero(self.alphabet);
        }
        SparsePoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut out = SparsePoly::zero(a.alphabet);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let exps = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = SparsePoly::one(self.alphabet);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, theta: &Specialization) -> Result<FieldElement, Error> {
        let field = theta.field();
        let values = self
            .alphabet
            .variables()
            .map(|v| theta.value(v).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut term = field.from_bigint(c);
            for (v, &e) in values.iter().zip(&m.0) {
                if e > 0 {
                    term = term.mul(&v.pow(e as i64)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Replaces each `q_s` by `q_{σ(s)}`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self, Error> {
        if sigma.degree() > self.alphabet.params {
            return Err(Error::InvalidPermutation);
        }
        let mut out = SparsePoly::zero(self.alphabet);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            for s in 1..=sigma.degree() {
                exps[sigma.image(s) - 1] = m.0[s - 1];
            }
            out.terms.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for SparsePoly {
    /// Highest-degree terms first, e.g. `-q1^2+2*q1*q2-q2^2+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| core::cmp::Reverse(m.degree()));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let is_const = m.degree() == 0;
            if c.is_negative() {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            let mut first = true;
            if is_const || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (pos, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "{}", self.alphabet.variable(pos))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use alloc::string::ToString;

    fn q(s: usize) -> Variable {
        Variable::Param(s)
    }

    fn lin(c: i64, a: Variable, b: Variable) -> SparsePoly {
        match LinearForm::normalize(c, Some(a), Some(b)) {
            crate::arith::Linear::Form { negated, form } => {
                let p = SparsePoly::linear(Alphabet::params(2), &form).unwrap();
                if negated {
                    p.neg()
                } else {
                    p
                }
            }
            crate::arith::Linear::Constant(_) => unreachable!(),
        }
    }

    #[test]
    fn ordering_and_display() {
        let p = lin(1, q(1), q(2)).mul(&lin(1, q(2), q(1)));
        assert_eq!(p.to_string(), "-q1^2+2*q1*q2-q2^2+1");
        let exps: Vec<Vec<u32>> = p.terms().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(exps, vec![vec![0, 0], vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn evaluation() {
        let p = lin(1, q(1), q(2)).mul(&lin(1, q(2), q(1)));
        let theta = Specialization::from_integers(Field::Rationals, &[2, 0]);
        assert_eq!(p.eval(&theta).unwrap(), Field::Rationals.from_i64(-3));
        let theta = Specialization::from_integers(Field::Rationals, &[2]);
        assert_eq!(p.eval(&theta), Err(Error::Unassigned(q(2))));
    }

    #[test]
    fn permutation_swaps_exponents() {
        let p = lin(3, q(1), q(2)).mul(&lin(0, q(1), q(2)));
        let sigma = Permutation::transposition(2, 1, 2).unwrap();
        let swapped = p.permute(&sigma).unwrap();
        assert_eq!(swapped, lin(3, q(2), q(1)).mul(&lin(0, q(2), q(1))));
        assert_eq!(swapped.permute(&sigma).unwrap(), p);
    }

    #[test]
    fn embedding_pads_exponents() {
        let p = SparsePoly::linear(
            Alphabet::indeterminate(),
            &match LinearForm::normalize(1, Some(Variable::X), None) {
                crate::arith::Linear::Form { form, .. } => form,
                _ => unreachable!(),
            },
        )
        .unwrap();
        let wide = p
            .embed(Alphabet {
                params: 2,
                indeterminate: true,
            })
            .unwrap();
        assert_eq!(wide.to_string(), "x+1");
        assert_eq!(wide.add(&p.neg()), SparsePoly::zero(wide.alphabet()));
    }
}
