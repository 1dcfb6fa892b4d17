use rand::Rng;

use super::field::{PolyMatrixField, PolyScalarField, PolySkewField, PolyVectorField, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::tensor::Vector3;

/// Every monomial of total degree ≤ `degree`, coefficients uniform in [−1, 1].
pub fn random_scalar_field<R: Rng + ?Sized>(rng: &mut R, degree: u32) -> Result<PolyScalarField<f64>> {
    if degree > MAX_DEGREE {
        return Err(Error::InvalidInput(format!("degree {degree} exceeds max degree {MAX_DEGREE}")));
    }
    let d = degree as u8;
    let mut terms = Vec::new();
    for i in 0..=d {
        for j in 0..=(d - i) {
            for k in 0..=(d - i - j) {
                terms.push(([i, j, k], rng.gen_range(-1.0..=1.0)));
            }
        }
    }
    PolyScalarField::from_terms(terms)
}

pub fn random_vector_field<R: Rng + ?Sized>(rng: &mut R, degree: u32) -> Result<PolyVectorField<f64>> {
    Ok(PolyVectorField([
        random_scalar_field(rng, degree)?,
        random_scalar_field(rng, degree)?,
        random_scalar_field(rng, degree)?,
    ]))
}

pub fn random_skew_field<R: Rng + ?Sized>(rng: &mut R, degree: u32) -> Result<PolySkewField<f64>> {
    Ok(PolySkewField::from_axial(random_vector_field(rng, degree)?))
}

pub fn random_matrix_field<R: Rng + ?Sized>(rng: &mut R, degree: u32) -> Result<PolyMatrixField<f64>> {
    Ok(PolyMatrixField::from_rows([
        random_vector_field(rng, degree)?,
        random_vector_field(rng, degree)?,
        random_vector_field(rng, degree)?,
    ]))
}

/// `n` points uniform in the unit cube [0, 1]³.
pub fn unit_cube_points<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Vector3<f64>> {
    (0..n).map(|_| Vector3(std::array::from_fn(|_| rng.gen::<f64>()))).collect()
}
