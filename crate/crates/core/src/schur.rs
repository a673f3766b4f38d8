//! Schur elements `s_Λ(Q)` by three independent routes, and `P_H(Q)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{FactoredRational, Variable};
use crate::beta::LSymbol;
use crate::kernel::{binomial2, x_kernel};
use crate::partition::{factorial, Multipartition};
use crate::Error;

/// Which formula computes a Schur element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchurFormula {
    /// Hook lengths times the node-wise kernels `X^Λ_{st}`.
    Product,
    /// The L-symbol formula at the given `L ≥ ℓ(Λ)`.
    Symbol(usize),
    /// The product of generalized hooks `h^{λ^s,λ^t}_{i,j} + q_s − q_t`.
    CancellationFree,
}

fn q(s: usize) -> Option<Variable> {
    Some(Variable::Param(s))
}

/// The Schur element of `Λ` as a function of `q_1..q_m`.
pub fn schur_element(
    multipartition: &Multipartition,
    formula: SchurFormula,
) -> Result<FactoredRational, Error> {
    match formula {
        SchurFormula::Product => Ok(by_product(multipartition)),
        SchurFormula::Symbol(length) => by_symbol(multipartition, length),
        SchurFormula::CancellationFree => Ok(cancellation_free(multipartition)),
    }
}

fn by_product(lam: &Multipartition) -> FactoredRational {
    let hooks: BigInt = lam
        .components()
        .iter()
        .map(|p| BigInt::from(p.hook_product()))
        .product();
    let mut acc = FactoredRational::from_integer(hooks);
    let m = lam.level();
    for s in 1..=m {
        for t in s + 1..=m {
            let kernel = x_kernel(lam.component(s), lam.component(t));
            let term = kernel.substitute_x(s, t).expect("kernel factors are c ± x");
            acc = acc * term;
        }
    }
    acc
}

fn by_symbol(lam: &Multipartition, length: usize) -> Result<FactoredRational, Error> {
    let symbol = LSymbol::new(lam, length)?;
    let m = lam.level();
    let len = length as i64;
    let mut acc = FactoredRational::one();
    if (binomial2(m) * binomial2(length)) % 2 == 1 {
        acc.scale(&-BigRational::one());
    }
    for s in 1..=m {
        for t in s + 1..=m {
            acc.mul_linear(0, q(s), q(t), len)?;
        }
    }
    // numerator double product; the s = t slice is Π α! as constants
    for s in 1..=m {
        for &alpha in symbol.row(s).entries() {
            for t in 1..=m {
                for k in 1..=alpha {
                    acc.mul_linear(k as i64, q(s), q(t), 1)?;
                }
            }
        }
    }
    for s in 1..=m {
        for t in s + 1..=m {
            for &a in symbol.row(s).entries() {
                for &b in symbol.row(t).entries() {
                    acc.mul_linear(a as i64 - b as i64, q(s), q(t), -1)?;
                }
            }
        }
    }
    for s in 1..=m {
        let beta = symbol.row(s).entries();
        for i in 0..beta.len() {
            for j in i + 1..beta.len() {
                acc.mul_linear((beta[i] - beta[j]) as i64, None, None, -1)?;
            }
        }
    }
    Ok(acc)
}

fn cancellation_free(lam: &Multipartition) -> FactoredRational {
    let mut acc = FactoredRational::one();
    let m = lam.level();
    for s in 1..=m {
        let own = lam.component(s);
        for (i, j) in own.nodes() {
            for t in 1..=m {
                let h = own
                    .generalized_hook_length(lam.component(t), i, j)
                    .expect("node of λ^s");
                acc.mul_linear(h, q(s), q(t), 1)
                    .expect("hook lengths are positive");
            }
        }
    }
    acc
}

/// `P_H(Q) = n! · Π_{1≤i<j≤m} Π_{|d|<n} (d + q_i − q_j)`.
pub fn p_invariant(m: usize, n: usize) -> FactoredRational {
    let mut acc = FactoredRational::from_integer(BigInt::from(factorial(n)));
    let n = n as i64;
    for i in 1..=m {
        for j in i + 1..=m {
            for d in (1 - n)..n {
                acc.mul_linear(d, q(i), q(j), 1)
                    .expect("forms in two parameters are nonzero");
            }
        }
    }
    acc
}
