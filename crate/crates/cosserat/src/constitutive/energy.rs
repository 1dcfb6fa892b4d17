use super::mindlin::Mindlin3Tensor;
use crate::params::{CosseratModuli, EringenParams, MindlinMicropolarParams, RelaxedMicromorphicParams};
use crate::poly::nye_forward;
use crate::scalar::Scalar;
use crate::tensor::{axl_of_skew_part, Matrix3, SkewMatrix3, Vector3};

/// Pointwise strain and curvature measures of one deformation state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrainState<T> {
    /// `e = Du − A`.
    pub e: Matrix3<T>,
    /// `e* = eᵀ`.
    pub e_star: Matrix3<T>,
    /// `𝕶 = D axl A`.
    pub k: Matrix3<T>,
    /// `𝛂 = −Curl A = 𝕶ᵀ − tr(𝕶) Id`.
    pub alpha: Matrix3<T>,
}

impl<T: Scalar> StrainState<T> {
    pub fn new(e: Matrix3<T>, k: Matrix3<T>) -> Self {
        Self { e, e_star: e.transpose(), k, alpha: nye_forward(&k) }
    }
}

fn half<T: Scalar>() -> T {
    T::frac(1, 2)
}

/// `(s/2)[a₁‖dev sym X‖² + a₂‖skew X‖² + (a₃/3) tr(X)²]`.
fn curvature_energy<T: Scalar>(x: &Matrix3<T>, s: T, a: [T; 3]) -> T {
    let tr = x.trace();
    half::<T>() * s * (a[0] * x.dev_sym().norm_sq() + a[1] * x.skew().norm_sq() + a[2] / T::int(3) * tr * tr)
}

/// `μe‖sym e‖² + μc‖skew e‖² + (λe/2) tr(e)²`.
fn elastic_energy<T: Scalar>(e: &Matrix3<T>, lambda_e: T, mu_e: T, mu_c: T) -> T {
    let tr = e.trace();
    mu_e * e.sym().norm_sq() + mu_c * e.skew().norm_sq() + half::<T>() * lambda_e * tr * tr
}

/// Dislocation-format energy in `e = Du − A` and `𝛂 = −Curl A`.
pub fn energy_dislocation<T: Scalar>(e: &Matrix3<T>, alpha: &Matrix3<T>, m: &CosseratModuli<T>) -> T {
    elastic_energy(e, m.lambda_e, m.mu_e, m.mu_c) + curvature_energy(alpha, m.curvature_modulus(), m.a_weights())
}

/// Eringen's energy in `e* = eᵀ` and `𝕶`.
pub fn energy_eringen<T: Scalar>(e_star: &Matrix3<T>, k: &Matrix3<T>, er: &EringenParams<T>) -> T {
    let tr_e = e_star.trace();
    let tr_k = k.trace();
    half::<T>()
        * ((er.mu_star + er.varkappa) * e_star.norm_sq()
            + er.mu_star * e_star.inner(&e_star.transpose())
            + er.lambda * tr_e * tr_e
            + er.gamma * k.norm_sq()
            + er.beta * k.inner(&k.transpose())
            + er.alpha * tr_k * tr_k)
}

/// Eringen's energy written in displacement and microrotation fields:
/// `(μ*+ϰ/2)‖sym Du‖² + (ϰ/4)‖curl u − 2ϑ‖² + (λ/2)(div u)²
///  + ((γ+β)/2)‖sym Dϑ‖² + ((γ−β)/4)‖curl ϑ‖² + (α/2)(div ϑ)²`.
pub fn energy_eringen_fields<T: Scalar>(
    du: &Matrix3<T>,
    theta: &Vector3<T>,
    dtheta: &Matrix3<T>,
    er: &EringenParams<T>,
) -> T {
    let two = T::int(2);
    let four = T::int(4);
    let curl_u = axl_of_skew_part(du).scale(two);
    let curl_theta = axl_of_skew_part(dtheta).scale(two);
    let div_u = du.trace();
    let div_theta = dtheta.trace();
    (er.mu_star + er.varkappa / two) * du.sym().norm_sq()
        + er.varkappa / four * (curl_u - theta.scale(two)).norm_sq()
        + er.lambda / two * div_u * div_u
        + (er.gamma + er.beta) / two * dtheta.sym().norm_sq()
        + (er.gamma - er.beta) / four * curl_theta.norm_sq()
        + er.alpha / two * div_theta * div_theta
}

/// `(W₁(e), W₂(𝕶))` of the split energy.
pub fn energy_split_parts<T: Scalar>(e: &Matrix3<T>, k: &Matrix3<T>, m: &CosseratModuli<T>) -> (T, T) {
    let tr_e = e.trace();
    let w1 = m.mu_e * e.dev_sym().norm_sq()
        + m.mu_c * e.skew().norm_sq()
        + (T::int(2) * m.mu_e + T::int(3) * m.lambda_e) / T::int(6) * tr_e * tr_e;
    let [a1, a2, a3] = m.alpha;
    let tr_k = k.trace();
    let w2 = half::<T>()
        * m.curvature_modulus()
        * (a1 * k.dev_sym().norm_sq()
            + a2 * k.skew().norm_sq()
            + (T::int(2) * a1 + T::int(3) * a3) / T::int(6) * tr_k * tr_k);
    (w1, w2)
}

/// `W₁(e) + W₂(𝕶)`.
pub fn energy_split<T: Scalar>(e: &Matrix3<T>, k: &Matrix3<T>, m: &CosseratModuli<T>) -> T {
    let (w1, w2) = energy_split_parts(e, k, m);
    w1 + w2
}

/// Mindlin's form with `ε = sym e`, `γ = skew e` and third-order curvature `κ`.
pub fn energy_mindlin<T: Scalar>(
    eps: &Matrix3<T>,
    gamma: &SkewMatrix3<T>,
    kappa: &Mindlin3Tensor<T>,
    mp: &MindlinMicropolarParams<T>,
) -> T {
    let tr = eps.trace();
    mp.mu_m * eps.norm_sq()
        + half::<T>() * mp.lambda_m * tr * tr
        + mp.mu_c_m * gamma.norm_sq()
        + mp.beta1_m * kappa.trace_contraction()
        + mp.beta2_m * kappa.full_contraction()
        + mp.beta3_m * kappa.cross_contraction()
}

/// Relaxed micromorphic energy; `curl_p` is `Curl P` at the same point.
pub fn energy_relaxed<T: Scalar>(
    du: &Matrix3<T>,
    p: &Matrix3<T>,
    curl_p: &Matrix3<T>,
    rm: &RelaxedMicromorphicParams<T>,
) -> T {
    let tr_p = p.trace();
    let micro = rm.mu_micro * p.sym().norm_sq() + half::<T>() * rm.lambda_micro * tr_p * tr_p;
    elastic_energy(&(*du - *p), rm.lambda_e, rm.mu_e, rm.mu_c) + micro
        + curvature_energy(curl_p, rm.mu * rm.l_c * rm.l_c, [rm.a1, rm.a2, rm.a3])
}
