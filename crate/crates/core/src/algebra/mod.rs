//! Exact arithmetic: rationals, cyclotomic numbers, sparse polynomials,
//! determinants and abelian characters.

pub mod characters;
pub mod cyclotomic;
pub mod det;
pub mod identity;
pub mod linalg;
pub mod poly;

pub use characters::{character_group, character_group_of, Character};
pub use cyclotomic::{cyclotomic_polynomial, CycNum};
pub use det::det_poly_matrix;
pub use identity::{poly_identity_test, IdentityMode, IdentityVerdict};
pub use linalg::unitriangular_inverse;
pub use poly::{LinForm, Monomial, Poly, Var};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;
