use super::field::{matrix_curl, vector_grad, PolyMatrixField, PolySkewField};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::tensor::{Matrix3, Vector3};

/// Dislocation density from the micro-curvature: `𝛂 = 𝕶ᵀ − tr(𝕶) Id`.
pub fn nye_forward<T: Scalar>(k: &Matrix3<T>) -> Matrix3<T> {
    k.transpose() - Matrix3::identity().scale(k.trace())
}

/// Inverse map: `𝕶 = 𝛂ᵀ − ½ tr(𝛂) Id`.
pub fn nye_inverse<T: Scalar>(alpha: &Matrix3<T>) -> Matrix3<T> {
    alpha.transpose() - Matrix3::identity().scale(alpha.trace() * T::frac(1, 2))
}

/// Largest entrywise discrepancies found by [`verify_nye`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NyeReport<T> {
    /// `D axl A = −(Curl A)ᵀ + ½ tr(Curl A) Id` and `−Curl A = (D axl A)ᵀ − tr(D axl A) Id`.
    pub formula: T,
    /// `dev sym 𝛂 = dev sym 𝕶`.
    pub dev_sym: T,
    /// `skew 𝛂 = −skew 𝕶`.
    pub skew: T,
    /// `sym 𝛂 = sym 𝕶 − tr(𝕶) Id`.
    pub sym: T,
    /// `tr 𝛂 = −2 tr 𝕶`.
    pub trace: T,
    pub points: usize,
}

impl<T: Scalar> NyeReport<T> {
    pub fn max_discrepancy(&self) -> T {
        [self.formula, self.dev_sym, self.skew, self.sym, self.trace]
            .into_iter()
            .fold(T::zero(), |m, x| if x > m { x } else { m })
    }
}

/// Evaluates both sides of Nye's formula, and its four consequences, at each
/// sample point. Both sides come from exact field calculus on `A`.
pub fn verify_nye<T: Scalar>(a: &PolySkewField<T>, points: &[Vector3<T>]) -> NyeReport<T> {
    let curl_a = matrix_curl(&a.materialize());
    let k_field = vector_grad(&a.axial);
    let mut r = NyeReport {
        formula: T::zero(),
        dev_sym: T::zero(),
        skew: T::zero(),
        sym: T::zero(),
        trace: T::zero(),
        points: points.len(),
    };
    let id = Matrix3::<T>::identity();
    let bump = |slot: &mut T, m: Matrix3<T>| {
        let v = m.max_abs();
        if v > *slot {
            *slot = v;
        }
    };
    for p in points {
        let curl = curl_a.eval(p);
        let k = k_field.eval(p);
        let alpha = -curl;

        let rhs_k = -curl.transpose() + id.scale(curl.trace() * T::frac(1, 2));
        bump(&mut r.formula, k - rhs_k);
        let rhs_alpha = k.transpose() - id.scale(k.trace());
        bump(&mut r.formula, alpha - rhs_alpha);

        bump(&mut r.dev_sym, alpha.dev_sym() - k.dev_sym());
        bump(&mut r.skew, alpha.skew() + k.skew());
        bump(&mut r.sym, alpha.sym() - (k.sym() - id.scale(k.trace())));
        let t = (alpha.trace() + T::int(2) * k.trace()).magnitude();
        if t > r.trace {
            r.trace = t;
        }
    }
    r
}

/// As [`verify_nye`] for a general matrix field; rejects non-skew input.
pub fn verify_nye_matrix<T: Scalar>(a: &PolyMatrixField<T>, points: &[Vector3<T>]) -> Result<NyeReport<T>> {
    let skew = PolySkewField::from_matrix_field(a)?;
    Ok(verify_nye(&skew, points))
}
