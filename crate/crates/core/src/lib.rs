//! Exact computation and factorization of semigroup determinants.
//!
//! The semigroup determinant of a finite semigroup `S` is the determinant of
//! the `S × S` matrix whose `(s, t)` entry is the variable `x_{st}`. This
//! crate computes it symbolically, decides when it vanishes, and factors it
//! into explicit linear (or representation-supplied) factors for
//! semilattices, groups, inverse semigroups, nilpotent semigroups with an
//! adjoined identity, and arbitrary commutative semigroups.

pub mod algebra;
pub mod commutative;
pub mod corpus;
pub mod determinant;
pub mod error;
pub mod inverse;
pub mod nilpotent;
pub mod order;
pub mod rings;
pub mod semigroup;

pub use error::{Error, Result};
