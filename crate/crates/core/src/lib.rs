//! Exact computation of Schur elements for degenerate cyclotomic Hecke
//! algebras `H_{m,n}(Q)`.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`partition`] and [`beta`]: partitions, multipartitions, hooks,
//!   generalized hooks, beta sets and L-symbols.
//! - [`arith`]: products of integer linear forms with rational constants,
//!   expanded sparse polynomials and evaluation at specializations.
//! - [`kernel`] and [`schur`]: the X, Y and Z kernels on pairs of
//!   partitions and the three routes to a Schur element.
//! - [`identity`]: checkers for the combinatorial identities the formulas
//!   rest on, plus the trace identity.
//! - [`semisimple`]: the semisimplicity criterion for specialized algebras.
#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod arith;
pub mod beta;
mod error;
pub mod identity;
pub mod kernel;
pub mod partition;
pub mod schur;
pub mod semisimple;

pub use arith::{
    Alphabet, FactoredRational, Field, FieldElement, LinearForm, Permutation, SparsePoly,
    Specialization, Variable,
};
pub use beta::{BetaSet, LSymbol};
pub use error::Error;
pub use partition::{Multipartition, Multipartitions, Node, Partition};
pub use schur::{p_invariant, schur_element, SchurFormula};
pub use semisimple::{Cause, SemisimplicityReport};
