//! Checkers for the identities behind the Schur element formulas.
//!
//! Each checker returns `Ok(false)` on a counterexample instead of
//! panicking, so callers can report it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{Alphabet, FactoredRational, LinearForm, SparsePoly, Variable};
use crate::beta::BetaSet;
use crate::kernel::x_kernel;
use crate::partition::{factorial, multipartitions, Partition};
use crate::schur::{schur_element, SchurFormula};
use crate::Error;

const Y: Option<Variable> = Some(Variable::X);

fn y_form(acc: &mut FactoredRational, c: i64, exp: i64) {
    acc.mul_linear(c, Y, None, exp)
        .expect("a form in y is never zero");
}

/// Both sides of the identity, for `1 ≤ ℓ ≤ μ_1`, in the indeterminate `y`
/// (represented by [`Variable::X`]):
///
/// ```text
/// 1/(μ_1+y) Π_{i=1}^{μ̄_ℓ} (μ_i−i+1+y)/(μ_i−i+y)
///   = 1/(ℓ−μ̄_ℓ−1+y) Π_{j=ℓ}^{μ_1} (j−μ̄_j−1+y)/(j−μ̄_j+y)
/// ```
pub fn mu_identity_sides(
    mu: &Partition,
    ell: usize,
) -> Result<(FactoredRational, FactoredRational), Error> {
    if mu.is_empty() {
        return Err(Error::Precondition("μ must be non-empty"));
    }
    if ell == 0 || ell > mu.first() {
        return Err(Error::Precondition("need 1 ≤ ℓ ≤ μ_1"));
    }
    let mut lhs = FactoredRational::one();
    y_form(&mut lhs, mu.first() as i64, -1);
    for i in 1..=mu.column_len(ell) {
        let base = mu.part(i) as i64 - i as i64;
        y_form(&mut lhs, base + 1, 1);
        y_form(&mut lhs, base, -1);
    }
    let mut rhs = FactoredRational::one();
    y_form(&mut rhs, ell as i64 - mu.column_len(ell) as i64 - 1, -1);
    for j in ell..=mu.first() {
        let base = j as i64 - mu.column_len(j) as i64;
        y_form(&mut rhs, base - 1, 1);
        y_form(&mut rhs, base, -1);
    }
    Ok((lhs, rhs))
}

pub fn verify_mu_identity(mu: &Partition, ell: usize) -> Result<bool, Error> {
    let (lhs, rhs) = mu_identity_sides(mu, ell)?;
    Ok(lhs == rhs)
}

/// `Π h_{i,j} · Π_{i<j} (β_i − β_j) = Π β_i!` for the beta set at `L`.
pub fn verify_hook_beta_identity(lambda: &Partition, length: usize) -> Result<bool, Error> {
    let beta = BetaSet::new(lambda, length)?;
    let b = beta.entries();
    let mut lhs = lambda.hook_product();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            lhs *= BigUint::from(b[i] - b[j]);
        }
    }
    let rhs: BigUint = b.iter().map(|&x| factorial(x)).product();
    Ok(lhs == rhs)
}

/// `X_{λμ}(x) = X_{μλ}(−x)`.
pub fn verify_x_symmetry(lambda: &Partition, mu: &Partition) -> Result<bool, Error> {
    Ok(x_kernel(lambda, mu) == x_kernel(mu, lambda).negate_x()?)
}

/// A sum of factored rational functions written as `numerator / denominator`
/// with the denominator a product of forms to positive powers times a
/// positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonDenominatorSum {
    pub numerator: SparsePoly,
    pub denominator: FactoredRational,
}

impl CommonDenominatorSum {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// True when the sum is the constant `k`.
    pub fn equals_constant(&self, k: &BigInt) -> Result<bool, Error> {
        let alphabet = self.numerator.alphabet();
        let target = self.denominator.expand_in(alphabet)?.scale(k);
        Ok(target == self.numerator)
    }
}

/// Adds factored terms over their least common denominator.
pub fn sum_over_common_denominator(
    terms: &[FactoredRational],
    alphabet: Alphabet,
) -> Result<CommonDenominatorSum, Error> {
    let mut den_forms: BTreeMap<LinearForm, i64> = BTreeMap::new();
    let mut den_const = BigInt::one();
    for term in terms {
        for (form, e) in term.factors() {
            if e < 0 {
                let slot = den_forms.entry(*form).or_insert(0);
                *slot = (*slot).max(-e);
            }
        }
        den_const = den_const.lcm(term.constant().denom());
    }
    let denominator = FactoredRational::from_parts(
        BigRational::from_integer(den_const.clone()),
        den_forms.iter().map(|(f, &e)| (*f, e)),
    );
    let mut numerator = SparsePoly::zero(alphabet);
    for term in terms.iter().filter(|t| !t.is_zero()) {
        let scaled = term * &denominator;
        numerator = numerator.add(&scaled.expand_in(alphabet)?);
    }
    Ok(CommonDenominatorSum {
        numerator,
        denominator,
    })
}

/// `Σ_Λ f^Λ / s_Λ(Q)` over all `m`-multipartitions of `n`.
pub fn trace_sum(m: usize, n: usize) -> Result<CommonDenominatorSum, Error> {
    let terms = multipartitions(m, n)
        .map(|lam| {
            let s = schur_element(&lam, SchurFormula::CancellationFree)?;
            let dim = FactoredRational::from_integer(BigInt::from(lam.num_standard_tableaux()));
            dim.div(&s)
        })
        .collect::<Result<Vec<_>, _>>()?;
    sum_over_common_denominator(&terms, Alphabet::params(m))
}

/// The trace at the identity is 1 for `m = 1` and 0 for `m ≥ 2`.
pub fn verify_trace_identity(m: usize, n: usize) -> Result<bool, Error> {
    let sum = trace_sum(m, n)?;
    if m == 1 {
        sum.equals_constant(&BigInt::one())
    } else {
        Ok(sum.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn mu_identity_examples() {
        let (lhs, rhs) = mu_identity_sides(&p(&[1]), 1).unwrap();
        let inv_y = FactoredRational::variable(Variable::X, -1);
        assert_eq!(lhs, inv_y);
        assert_eq!(rhs, inv_y);
        assert_eq!(verify_mu_identity(&p(&[2, 1]), 1), Ok(true));
        assert_eq!(verify_mu_identity(&p(&[3, 3, 1]), 2), Ok(true));
        assert!(verify_mu_identity(&Partition::empty(), 1).is_err());
        assert!(verify_mu_identity(&p(&[2]), 3).is_err());
        assert!(verify_mu_identity(&p(&[2]), 0).is_err());
    }

    #[test]
    fn mu_identity_small_sweep() {
        for n in 1..=6 {
            for mu in partitions(n) {
                for ell in 1..=mu.first() {
                    assert_eq!(verify_mu_identity(&mu, ell), Ok(true), "{mu} ℓ={ell}");
                }
            }
        }
    }

    #[test]
    fn hook_beta_examples() {
        assert_eq!(verify_hook_beta_identity(&p(&[2, 1]), 2), Ok(true));
        assert_eq!(verify_hook_beta_identity(&Partition::empty(), 2), Ok(true));
        assert_eq!(verify_hook_beta_identity(&p(&[4]), 1), Ok(true));
        assert!(verify_hook_beta_identity(&p(&[1, 1]), 1).is_err());
    }

    #[test]
    fn x_symmetry_examples() {
        assert_eq!(verify_x_symmetry(&p(&[1]), &Partition::empty()), Ok(true));
        assert_eq!(verify_x_symmetry(&p(&[2, 1]), &p(&[2, 1])), Ok(true));
        assert_eq!(verify_x_symmetry(&p(&[2, 1]), &p(&[1, 1])), Ok(true));
    }

    #[test]
    fn common_denominator_sum() {
        // 1/x + 1/(1+x) = (1+2x)/(x(1+x))
        let a = FactoredRational::variable(Variable::X, -1);
        let b = FactoredRational::linear(1, Y, None, -1).unwrap();
        let sum = sum_over_common_denominator(&[a, b], Alphabet::indeterminate()).unwrap();
        assert_eq!(alloc::format!("{}", sum.numerator), "2*x+1");
        assert_eq!(alloc::format!("{}", sum.denominator), "(x)(1+x)");
        // 1/2 + 1/2 = 1
        let half = FactoredRational::from_rational(BigRational::new(1.into(), 2.into()));
        let sum = sum_over_common_denominator(&[half.clone(), half], Alphabet::params(0)).unwrap();
        assert_eq!(sum.equals_constant(&BigInt::one()), Ok(true));
    }

    #[test]
    fn trace_identity_small() {
        assert_eq!(verify_trace_identity(1, 3), Ok(true));
        assert_eq!(verify_trace_identity(2, 1), Ok(true));
        assert_eq!(verify_trace_identity(2, 2), Ok(true));
        assert_eq!(verify_trace_identity(3, 1), Ok(true));
    }
}
