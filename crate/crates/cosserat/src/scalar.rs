//! Scalar abstraction shared by the tensor, field and energy code.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, NumAssignOps};

/// Ring-like scalar: everything the polynomial algebra needs.
///
/// Implemented for `f32`, `f64` and the exact rationals `Ratio<i64>`, `Ratio<i128>`.
pub trait Scalar:
    Num + NumAssignOps + Copy + Debug + PartialOrd + FromPrimitive + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    /// Relative tolerance used for structural checks (skew-ness, symmetry).
    /// Zero for exact scalars.
    fn structural_tolerance() -> Self;

    fn is_finite_value(self) -> bool;

    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer is representable")
    }

    fn frac(n: i64, d: i64) -> Self {
        Self::int(n) / Self::int(d)
    }

    fn magnitude(self) -> Self {
        if self < Self::zero() {
            -self
        } else {
            self
        }
    }
}

/// Floating point scalar: f32 or f64.
pub trait Real: Scalar + Float {
    /// Convergence threshold for the Jacobi sweeps.
    fn jacobi_tolerance() -> Self;
}

impl Scalar for f64 {
    fn structural_tolerance() -> Self {
        1e-12
    }
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}

impl Scalar for f32 {
    fn structural_tolerance() -> Self {
        1e-5
    }
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}

impl Real for f64 {
    fn jacobi_tolerance() -> Self {
        1e-14
    }
}

impl Real for f32 {
    fn jacobi_tolerance() -> Self {
        4.0 * f32::EPSILON
    }
}

macro_rules! impl_ratio {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn structural_tolerance() -> Self {
                Ratio::from_integer(0)
            }
            fn is_finite_value(self) -> bool {
                true
            }
        }
    )*};
}
impl_ratio!(i64, i128);
