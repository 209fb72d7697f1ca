//! Exact-arithmetic knot concordance invariants from integer Seifert
//! matrices: Alexander polynomials, signature functions, Witt-group
//! obstructions, branched-cover homology, norm polynomials and a quartic
//! Galois obstruction, combined into concordance-genus bounds.

pub mod arith;
pub mod covers;
pub mod engine;
pub mod error;
pub mod isometric;
pub mod linalg;
pub mod poly;
pub mod seifert;
pub mod witt;

pub use error::{CkError, Result};
