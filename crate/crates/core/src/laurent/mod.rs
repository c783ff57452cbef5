//! Exact Laurent polynomial arithmetic over a field, with half-integer
//! exponents, substitution, exact division and determinants.

mod json;
mod matrix;
mod poly;

pub use json::{PolyJson, TermJson};
pub use matrix::{PolyMatrix, DEFAULT_MAX_DET_SIZE};
pub use poly::{alternating_t_sum, one_plus_t_pow, var_names, ExponentVec, LaurentPoly};
