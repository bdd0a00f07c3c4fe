//! Exact evaluation of the Lawrence-Krammer extension `rho` to the group of
//! conjugating automorphisms `C_n`, with relation checking, a free-group
//! nontriviality oracle, closed-form claim checks and kernel search for `n = 3`.

pub mod claims;
pub mod free_group;
pub mod matrix;
pub mod rep;
pub mod scalar;
pub mod words;

pub use matrix::{AnyMatrix, CharPoly, Matrix, MatrixError};
pub use rep::{RepContext, RepError};
pub use scalar::{ComplexValue, ExactRational, LaurentPoly, ScalarError, ScalarMode};
pub use words::{Gen, Word, WordError};
