//! Polynomial scalar, vector and matrix fields on R³ with exact
//! differentiation, plus the Nye-formula checks built on top of them.

mod field;
mod nye;
mod random;

pub use field::{
    matrix_curl, matrix_div, vector_curl, vector_div, vector_grad, Monomial, PolyMatrixField, PolyScalarField,
    PolySkewField, PolyVectorField, MAX_DEGREE,
};
pub use nye::{nye_forward, nye_inverse, verify_nye, verify_nye_matrix, NyeReport};
pub use random::{random_matrix_field, random_scalar_field, random_skew_field, random_vector_field, unit_cube_points};
