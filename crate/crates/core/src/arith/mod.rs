//! Exact arithmetic: linear forms, factored rational functions, sparse
//! integer polynomials and evaluation at specializations.

mod factored;
mod field;
mod linear;
mod perm;
mod poly;

pub use factored::FactoredRational;
pub use field::{Field, FieldElement, Specialization};
pub use linear::{Linear, LinearForm, Variable};
pub use perm::Permutation;
pub use poly::{Alphabet, Monomial, SparsePoly};
