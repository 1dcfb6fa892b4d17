use crate::error::{Error, Result};
use crate::params::{CosseratModuli, EringenParams, Params, TaggedParams};
use crate::scalar::Scalar;
use crate::tensor::Matrix3;

/// `σ = 2μe sym e + 2μc skew e + λe tr(e) Id`.
pub fn stress_dislocation<T: Scalar>(e: &Matrix3<T>, m: &CosseratModuli<T>) -> Matrix3<T> {
    let two = T::int(2);
    e.sym().scale(two * m.mu_e) + e.skew().scale(two * m.mu_c) + Matrix3::identity().scale(m.lambda_e * e.trace())
}

/// Couple stress conjugate to `𝕶`: `(μeLc²/2)[2α₁ sym 𝕶 + 2α₂ skew 𝕶 + α₃ tr(𝕶) Id]`.
pub fn couple_stress_dislocation<T: Scalar>(k: &Matrix3<T>, m: &CosseratModuli<T>) -> Matrix3<T> {
    let two = T::int(2);
    let [a1, a2, a3] = m.alpha;
    (k.sym().scale(two * a1) + k.skew().scale(two * a2) + Matrix3::identity().scale(a3 * k.trace()))
        .scale(m.curvature_modulus() / two)
}

/// Couple stress conjugate to `𝛂`: `μeLc²[a₁ dev sym 𝛂 + a₂ skew 𝛂 + (a₃/3) tr(𝛂) Id]`.
pub fn dislocation_couple_stress<T: Scalar>(alpha: &Matrix3<T>, m: &CosseratModuli<T>) -> Matrix3<T> {
    let [a1, a2, a3] = m.a_weights();
    (alpha.dev_sym().scale(a1) + alpha.skew().scale(a2) + Matrix3::identity().scale(a3 / T::int(3) * alpha.trace()))
        .scale(m.curvature_modulus())
}

/// `σ* = (μ*+ϰ) e* + μ* e*ᵀ + λ tr(e*) Id`.
pub fn stress_eringen<T: Scalar>(e_star: &Matrix3<T>, er: &EringenParams<T>) -> Matrix3<T> {
    e_star.scale(er.mu_star + er.varkappa)
        + e_star.transpose().scale(er.mu_star)
        + Matrix3::identity().scale(er.lambda * e_star.trace())
}

/// `m* = γ𝕶 + β𝕶ᵀ + α tr(𝕶) Id`.
pub fn couple_stress_eringen<T: Scalar>(k: &Matrix3<T>, er: &EringenParams<T>) -> Matrix3<T> {
    k.scale(er.gamma) + k.transpose().scale(er.beta) + Matrix3::identity().scale(er.alpha * k.trace())
}

/// Force stress in the record's own convention: `e` for the dislocation
/// format, `e*` for Eringen's.
pub fn stress(e: &Matrix3<f64>, p: &TaggedParams) -> Result<Matrix3<f64>> {
    match &p.params {
        Params::Dislocation(d) => Ok(stress_dislocation(e, &d.moduli()?)),
        Params::Eringen(er) => Ok(stress_eringen(e, er)),
        _ => Err(Error::UnsupportedNotation(format!("stress laws need dislocation or eringen, got {}", p.notation()))),
    }
}

/// Couple stress conjugate to `𝕶`.
pub fn couple_stress(k: &Matrix3<f64>, p: &TaggedParams) -> Result<Matrix3<f64>> {
    match &p.params {
        Params::Dislocation(d) => Ok(couple_stress_dislocation(k, &d.moduli()?)),
        Params::Eringen(er) => Ok(couple_stress_eringen(k, er)),
        _ => Err(Error::UnsupportedNotation(format!(
            "couple stress laws need dislocation or eringen, got {}",
            p.notation()
        ))),
    }
}
