//! Exact q-rook numbers, rectangular q-hit numbers and chromatic
//! quasisymmetric polynomials of abelian Dyck paths, with exhaustive
//! identity verifiers.

pub mod chromatic;
pub mod error;
pub mod harness;
pub mod hits;
pub mod qarith;
pub mod report;
pub mod rooks;
pub mod shapes;

pub use error::{Error, Result};
