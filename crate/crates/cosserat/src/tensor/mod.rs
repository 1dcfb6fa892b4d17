//! 3×3 tensor algebra: matrices, skew matrices, axial vectors and the
//! orthogonal Cartan decomposition `X = dev sym X + skew X + (tr X / 3) Id`.

mod eigen;
mod matrix;
mod vector;

pub use eigen::{gen_eigen_diag, gen_eigen_pairs, jacobi_eigen, sym_eigen, GenEigenPairs, SymEigen};
pub use matrix::Matrix3;
pub use vector::Vector3;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Skew-symmetric 3×3 tensor stored by its axial vector.
///
/// `anti(v)` materialises as `[[0, -v3, v2], [v3, 0, -v1], [-v2, v1, 0]]`,
/// so that `anti(v) w = v × w`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SkewMatrix3<T> {
    pub axial: Vector3<T>,
}

impl<T: Scalar> SkewMatrix3<T> {
    pub fn zero() -> Self {
        Self { axial: Vector3::zero() }
    }

    pub fn from_axial(axial: Vector3<T>) -> Self {
        Self { axial }
    }

    pub fn to_matrix(&self) -> Matrix3<T> {
        let [a1, a2, a3] = self.axial.0;
        let z = T::zero();
        Matrix3([[z, -a3, a2], [a3, z, -a1], [-a2, a1, z]])
    }

    /// `A w = axl(A) × w`.
    pub fn apply(&self, w: &Vector3<T>) -> Vector3<T> {
        self.axial.cross(w)
    }

    /// Reads a skew matrix back; rejects inputs whose symmetric part exceeds
    /// the structural tolerance relative to `‖X‖`.
    pub fn from_matrix(x: &Matrix3<T>) -> Result<Self> {
        x.check_finite()?;
        let sym = x.sym().norm_sq();
        let tol = T::structural_tolerance();
        if sym > tol * tol * x.norm_sq() {
            return Err(Error::InvalidInput(format!(
                "matrix is not skew-symmetric (|sym X|^2 = {sym:?})"
            )));
        }
        Ok(Self { axial: axl_of_skew_part(x) })
    }

    pub fn norm_sq(&self) -> T {
        self.to_matrix().norm_sq()
    }
}

/// `anti : R³ → so(3)`.
pub fn anti<T: Scalar>(v: &Vector3<T>) -> SkewMatrix3<T> {
    SkewMatrix3::from_axial(*v)
}

/// `axl : so(3) → R³`, `(axl A)_k = -½ ε_ijk A_ij`.
pub fn axl<T: Scalar>(a: &SkewMatrix3<T>) -> Vector3<T> {
    a.axial
}

/// Axial vector of `skew X` for an arbitrary matrix, `-½ ε_ijk X_ij`.
pub fn axl_of_skew_part<T: Scalar>(x: &Matrix3<T>) -> Vector3<T> {
    let h = T::frac(1, 2);
    let m = &x.0;
    Vector3([
        h * (m[2][1] - m[1][2]),
        h * (m[0][2] - m[2][0]),
        h * (m[1][0] - m[0][1]),
    ])
}

/// Orthogonal pieces of a 3×3 tensor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartanParts<T> {
    pub dev_sym: Matrix3<T>,
    pub skew: SkewMatrix3<T>,
    pub spherical_trace: T,
}

impl<T: Scalar> CartanParts<T> {
    pub fn recompose(&self) -> Matrix3<T> {
        self.dev_sym + self.skew.to_matrix() + Matrix3::identity().scale(self.spherical_trace / T::int(3))
    }
}

pub fn decompose<T: Scalar>(x: &Matrix3<T>) -> Result<CartanParts<T>> {
    x.check_finite()?;
    Ok(CartanParts {
        dev_sym: x.dev_sym(),
        skew: SkewMatrix3::from_axial(axl_of_skew_part(x)),
        spherical_trace: x.trace(),
    })
}
