use crate::error::{Error, Result};
use crate::params::{CosseratModuli, Params, TaggedParams};
use crate::poly::{matrix_curl, matrix_div, vector_grad, PolyMatrixField, PolySkewField, PolyVectorField};
use crate::scalar::Scalar;

/// Static balance residuals of one displacement/microrotation pair in both
/// formulations.
#[derive(Debug, Clone, PartialEq)]
pub struct BalanceResiduals<T> {
    /// `Div σ*ᵀ` with Eringen's force stress.
    pub force_vec: PolyVectorField<T>,
    /// `Div σ` with the dislocation-format force stress.
    pub force_dislo: PolyVectorField<T>,
    /// `Div m* − 2 axl(skew σ*)`.
    pub couple_vec: PolyVectorField<T>,
    /// `skew σ − skew Curl m`, with `m` conjugate to `Curl A`.
    pub couple_skew: PolyMatrixField<T>,
}

fn spherical<T: Scalar>(p: &PolyMatrixField<T>, c: T) -> PolyMatrixField<T> {
    PolyMatrixField::spherical(&p.trace().scale(c))
}

pub fn balance_residuals_with<T: Scalar>(
    u: &PolyVectorField<T>,
    a: &PolySkewField<T>,
    m: &CosseratModuli<T>,
) -> BalanceResiduals<T> {
    let two = T::int(2);
    let a_mat = a.materialize();
    let e = &vector_grad(u) - &a_mat;

    let sigma = &(&e.sym().scale(two * m.mu_e) + &e.skew().scale(two * m.mu_c)) + &spherical(&e, m.lambda_e);

    let er = m.to_eringen();
    let e_star = e.transpose();
    let sigma_star = &(&e_star.scale(er.mu_star + er.varkappa) + &e_star.transpose().scale(er.mu_star))
        + &spherical(&e_star, er.lambda);
    let k = vector_grad(&a.axial);
    let m_star = &(&k.scale(er.gamma) + &k.transpose().scale(er.beta)) + &spherical(&k, er.alpha);

    let curl_a = matrix_curl(&a_mat);
    let [a1, a2, a3] = m.a_weights();
    let couple = (&(&curl_a.dev().sym().scale(a1) + &curl_a.skew().scale(a2)) + &spherical(&curl_a, a3 / T::int(3)))
        .scale(m.curvature_modulus());

    BalanceResiduals {
        force_vec: matrix_div(&sigma_star.transpose()),
        force_dislo: matrix_div(&sigma),
        couple_vec: &matrix_div(&m_star) - &sigma_star.axl_skew().scale(two),
        couple_skew: &sigma.skew() - &matrix_curl(&couple).skew(),
    }
}

/// Residuals for a dislocation or Eringen record (Eringen records are
/// identified with gauge `Lc = 1`; the residuals do not depend on it).
pub fn balance_residuals(
    u: &PolyVectorField<f64>,
    a: &PolySkewField<f64>,
    p: &TaggedParams,
) -> Result<BalanceResiduals<f64>> {
    let m = match &p.params {
        Params::Dislocation(d) => d.moduli()?,
        Params::Eringen(er) => er.to_cosserat(1.0)?,
        _ => {
            return Err(Error::UnsupportedNotation(format!(
                "balance residuals need dislocation or eringen, got {}",
                p.notation()
            )))
        }
    };
    Ok(balance_residuals_with(u, a, &m))
}
