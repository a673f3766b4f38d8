//! The pairwise kernels `X_{λμ}(x)`, `Y^L_{λμ}(x)` and `Z_{λμ}(x)`.
//!
//! All three are rational functions of the indeterminate `x` built from
//! factors `c ± x`, and all three are the same function. Each Schur element
//! is a product of hook lengths and one kernel per pair of components, with
//! `x ↦ q_s − q_t`.

use num_rational::BigRational;
use num_traits::One;

use crate::arith::{FactoredRational, Variable};
use crate::beta::BetaSet;
use crate::partition::Partition;
use crate::Error;

const X: Option<Variable> = Some(Variable::X);

/// `c + x`, or `c − x` when `minus` is set, to the power `exp`.
fn mul_x(acc: &mut FactoredRational, c: i64, minus: bool, exp: i64) {
    let (pos, neg) = if minus { (None, X) } else { (X, None) };
    acc.mul_linear(c, pos, neg, exp)
        .expect("a form in x is never zero");
}

/// `X_{λμ}(x)`: the node-by-node product
///
/// ```text
/// Π_{(i,j)∈[μ]} (j−i−x) · Π_{(i,j)∈[λ]} (j−i−μ_1+x) Π_{k=1}^{μ_1} (j−i+μ̄_k−k+1+x)/(j−i+μ̄_k−k+x)
/// ```
pub fn x_kernel(lambda: &Partition, mu: &Partition) -> FactoredRational {
    let mut acc = FactoredRational::one();
    for (i, j) in mu.nodes() {
        mul_x(&mut acc, j as i64 - i as i64, true, 1);
    }
    let mu1 = mu.first() as i64;
    for (i, j) in lambda.nodes() {
        let content = j as i64 - i as i64;
        mul_x(&mut acc, content - mu1, false, 1);
        for k in 1..=mu.first() {
            let shift = content + mu.column_len(k) as i64 - k as i64;
            mul_x(&mut acc, shift + 1, false, 1);
            mul_x(&mut acc, shift, false, -1);
        }
    }
    acc
}

/// `Y^L_{λμ}(x)`, the beta-number form:
///
/// ```text
/// (−1)^{C(L,2)} x^L Π_{a∈B^λ} Π_{i=1}^{a} (i+x) Π_{b∈B^μ} Π_{j=1}^{b} (j−x) / Π_{(a,b)} (a−b+x)
/// ```
pub fn y_kernel(
    lambda: &Partition,
    mu: &Partition,
    length: usize,
) -> Result<FactoredRational, Error> {
    let b_lambda = BetaSet::new(lambda, length)?;
    let b_mu = BetaSet::new(mu, length)?;
    let mut acc = FactoredRational::one();
    if binomial2(length) % 2 == 1 {
        acc.scale(&-BigRational::one());
    }
    mul_x(&mut acc, 0, false, length as i64);
    for &a in b_lambda.entries() {
        for i in 1..=a {
            mul_x(&mut acc, i as i64, false, 1);
        }
    }
    for &b in b_mu.entries() {
        for j in 1..=b {
            mul_x(&mut acc, j as i64, true, 1);
        }
    }
    for &a in b_lambda.entries() {
        for &b in b_mu.entries() {
            mul_x(&mut acc, a as i64 - b as i64, false, -1);
        }
    }
    Ok(acc)
}

/// `Z_{λμ}(x) = Π_{[λ]} (h^{λ,μ}_{i,j} + x) · Π_{[μ]} (h^{μ,λ}_{i,j} − x)`.
/// Every exponent is positive.
pub fn z_kernel(lambda: &Partition, mu: &Partition) -> FactoredRational {
    let mut acc = FactoredRational::one();
    for (i, j) in lambda.nodes() {
        let h = lambda.generalized_hook_length(mu, i, j).expect("node of λ");
        mul_x(&mut acc, h, false, 1);
    }
    for (i, j) in mu.nodes() {
        let h = mu.generalized_hook_length(lambda, i, j).expect("node of μ");
        mul_x(&mut acc, h, true, 1);
    }
    acc
}

pub(crate) fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
