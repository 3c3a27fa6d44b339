//! Square-free symmetric Boolean polynomials over F2 and their
//! applications.
//!
//! The crate constructs the polynomials `phi_t` (vanishing exactly on
//! vectors of Hamming weight below `t`) and `rho_t` (indicator of the
//! weight-`t` shell) in the basis of elementary symmetric functions,
//! provides the binary Moebius transform between truth tables and
//! algebraic normal forms, and uses the composition identity
//! `phi_t ∘ F = phi_1` to certify minimum-distance ranges of binary
//! linear codes.

pub mod anf;
pub mod error;
pub mod mindist;
pub mod sphere;
pub mod symfunc;

pub use error::{Error, Result};
pub use symfunc::SymmetricPoly;
