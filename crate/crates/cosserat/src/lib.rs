//! Linear isotropic micropolar (Cosserat) elasticity.
//!
//! * [`tensor`]: 3×3 tensor algebra, Cartan decomposition, Jacobi eigensolvers.
//! * [`poly`]: exact calculus on polynomial fields and Nye's formula.
//! * [`params`]: parameter records for every notation and the conversions between them.
//! * [`constitutive`]: energies, stresses, constitutive conditions, acoustic tensor, balance residuals.
//! * [`waves`]: plane-wave dispersion.
//! * [`tables`]: the built-in experimental dataset and its reproduction.

pub mod constitutive;
pub mod error;
pub mod params;
pub mod poly;
pub mod scalar;
pub mod tables;
pub mod tensor;
pub mod waves;

pub use error::{Error, Result};
pub use scalar::{Real, Scalar};

pub type Rational = num_rational::Ratio<i64>;

pub type Vec3 = tensor::Vector3<f64>;
pub type Mat3 = tensor::Matrix3<f64>;
pub type Skew3 = tensor::SkewMatrix3<f64>;
pub type RatVector3 = tensor::Vector3<Rational>;
pub type RatMatrix3 = tensor::Matrix3<Rational>;

pub type ScalarField = poly::PolyScalarField<f64>;
pub type VectorField = poly::PolyVectorField<f64>;
pub type MatrixField = poly::PolyMatrixField<f64>;
pub type SkewField = poly::PolySkewField<f64>;
pub type RatScalarField = poly::PolyScalarField<Rational>;
pub type RatVectorField = poly::PolyVectorField<Rational>;
pub type RatSkewField = poly::PolySkewField<Rational>;
