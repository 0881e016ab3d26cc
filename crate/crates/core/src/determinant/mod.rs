//! Paratrophic matrices, their determinants, and factorization plumbing.

pub mod factorization;
pub mod frobenius;
pub mod group;
pub mod paratrophic;
pub mod transport;

pub use factorization::{settle, verify_factorization, Factor, Factorization, Reference, Status, Verification, VerifyConfig};
pub use frobenius::{frobenius_test, FrobeniusVerdict, Stage};
pub use group::{factor_group_determinant, GroupReps, RepMatrix};
pub use paratrophic::{backnforth_check, cayley_matrix, paratrophic_determinant, BasedAlgebra, Mode, ParatrophicMatrix};
pub use transport::transport_basis;
