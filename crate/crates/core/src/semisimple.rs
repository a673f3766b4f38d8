//! Semisimplicity of specialized algebras.
//!
//! A specialization `θ` gives a semisimple algebra iff `θ(P_H(Q)) ≠ 0`, and
//! also iff no Schur element vanishes under `θ`. [`cross_check_criterion`]
//! evaluates both sides independently.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, FieldElement, Specialization, Variable};
use crate::partition::{multipartitions, Multipartition, Partition};
use crate::schur::{p_invariant, schur_element, SchurFormula};
use crate::Error;

/// Why `θ(P_H(Q))` vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cause {
    /// `θ(n!) = 0`: the characteristic is at most `n`.
    FactorialVanishes,
    /// `θ(k + q_s − q_t) = 0` with `s < t` and `|k| < n`.
    Collision { s: usize, t: usize, k: i64 },
}

impl Cause {
    /// The multipartition whose Schur element is forced to vanish: `(n)` in
    /// the first component for the factorial case, `(n)` in component `s`
    /// for `k ≥ 0` and in component `t` for `k < 0`.
    pub fn witness(&self, m: usize, n: usize) -> Multipartition {
        let mut components = vec![Partition::empty(); m];
        let slot = match *self {
            Cause::FactorialVanishes => 1,
            Cause::Collision { s, k, .. } if k >= 0 => s,
            Cause::Collision { t, .. } => t,
        };
        components[slot - 1] = Partition::row(n);
        Multipartition::new(components).expect("m ≥ 1")
    }
}

/// Outcome of checking the criterion against the exhaustive scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplicityReport {
    pub field: Field,
    /// `θ(P_H(Q))`.
    pub p_value: FieldElement,
    pub semisimple: bool,
    /// Multipartitions with `θ(s_Λ) = 0`, when scanned.
    pub vanishing: Option<Vec<Multipartition>>,
    /// `semisimple ⟺ vanishing is empty`; always true unless something is
    /// broken.
    pub agreement: bool,
    /// The first vanishing factor of `P_H(Q)`, if any.
    pub cause: Option<Cause>,
}

fn check_level(m: usize, theta: &Specialization) -> Result<(), Error> {
    if theta.level() < m {
        return Err(Error::Unassigned(Variable::Param(theta.level() + 1)));
    }
    Ok(())
}

/// True iff `θ(P_H(Q)) ≠ 0`.
pub fn is_semisimple(m: usize, n: usize, theta: &Specialization) -> Result<bool, Error> {
    check_level(m, theta)?;
    Ok(!p_invariant(m, n).eval(theta)?.is_zero())
}

/// Multipartitions of `n` whose cancellation-free Schur element vanishes
/// under `θ`, in enumeration order.
pub fn vanishing_schur_elements(
    m: usize,
    n: usize,
    theta: &Specialization,
) -> Result<Vec<Multipartition>, Error> {
    check_level(m, theta)?;
    let mut out = Vec::new();
    for lam in multipartitions(m, n) {
        let s = schur_element(&lam, SchurFormula::CancellationFree)?;
        if s.eval(theta)?.is_zero() {
            out.push(lam);
        }
    }
    Ok(out)
}

/// The vanishing factors of `P_H(Q)` under `θ`, in the order: factorial,
/// then pairs `s < t`, then `k` from `−(n−1)` to `n−1`.
pub fn causes(m: usize, n: usize, theta: &Specialization) -> Result<Vec<Cause>, Error> {
    check_level(m, theta)?;
    let field = theta.field();
    let mut out = Vec::new();
    if let Field::Prime(p) = field {
        if p as usize <= n {
            out.push(Cause::FactorialVanishes);
        }
    }
    let n = n as i64;
    for s in 1..=m {
        for t in s + 1..=m {
            let diff = theta.params()[s - 1].sub(&theta.params()[t - 1])?;
            for k in (1 - n)..n {
                if field.from_i64(k).add(&diff)?.is_zero() {
                    out.push(Cause::Collision { s, t, k });
                }
            }
        }
    }
    Ok(out)
}

/// Evaluates `θ(P_H(Q))` and scans every Schur element, and reports
/// whether the two verdicts agree.
pub fn cross_check_criterion(
    m: usize,
    n: usize,
    theta: &Specialization,
) -> Result<SemisimplicityReport, Error> {
    let p_value = p_invariant(m, n).eval(theta)?;
    let semisimple = !p_value.is_zero();
    let vanishing = vanishing_schur_elements(m, n, theta)?;
    let cause = causes(m, n, theta)?.first().copied();
    Ok(SemisimplicityReport {
        field: theta.field(),
        p_value,
        semisimple,
        agreement: semisimple == vanishing.is_empty(),
        vanishing: Some(vanishing),
        cause,
    })
}
