//! Exact linear algebra over Z, Q and Q(i).

mod hermitian;
mod matq;
mod matz;

pub use hermitian::{GaussRat, HermMat};
pub use matq::MatQ;
pub use matz::MatZ;
