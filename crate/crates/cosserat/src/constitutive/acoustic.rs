use crate::error::{Error, Result};
use crate::params::DislocationParams;
use crate::scalar::Scalar;
use crate::tensor::{Matrix3, Vector3};

const UNIT_TOLERANCE: f64 = 1e-12;

fn check_unit(v: &Vector3<f64>, name: &str) -> Result<()> {
    let n = v.norm();
    if v.is_finite() && (n - 1.0).abs() <= UNIT_TOLERANCE {
        Ok(())
    } else {
        Err(Error::InvalidDirection(format!("{name} has norm {n}, expected 1")))
    }
}

/// Acoustic-tensor blocks for propagation direction `ξ` (displacement) and `ζ` (microrotation):
///
/// `Q̂₁(ξ) = ½[(μe+μc) Id + (μe−μc+λe) ξ⊗ξ]`, `Q̂₂(ζ) = ½[(α₁+α₂) Id + (α₁−α₂+α₃) ζ⊗ζ]`.
///
/// Along `ξ` the first block has eigenvalue `½(2μe+λe)`, across it `½(μe+μc)`;
/// likewise `½(2α₁+α₃)` and `½(α₁+α₂)` for the second.
pub fn acoustic_blocks(
    d: &DislocationParams,
    xi: &Vector3<f64>,
    zeta: &Vector3<f64>,
) -> Result<(Matrix3<f64>, Matrix3<f64>)> {
    check_unit(xi, "xi")?;
    check_unit(zeta, "zeta")?;
    let m = d.moduli()?;
    let [a1, a2, a3] = m.alpha;
    let q1 = (Matrix3::identity().scale(m.mu_e + m.mu_c) + Matrix3::outer(xi, xi).scale(m.mu_e - m.mu_c + m.lambda_e))
        .scale(0.5);
    let q2 = (Matrix3::identity().scale(a1 + a2) + Matrix3::outer(zeta, zeta).scale(a1 - a2 + a3)).scale(0.5);
    Ok((q1, q2))
}

/// The quadratic form `W̃(H) = b₁‖sym H‖² + b₂‖skew H‖² + b₃ tr(H)²` on a rank-one `H = ξ⊗η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankOneForm<T> {
    /// `W̃(ξ⊗η)` evaluated directly.
    pub direct: T,
    /// `((b₁+b₂)/2)|ξ|²|η|² sin²θ + (b₁+b₃)|ξ|²|η|² cos²θ`.
    pub closed_form: T,
}

impl<T: Scalar> RankOneForm<T> {
    /// The second derivative of `W̃` itself, `D²W̃.(H, H) = 2 W̃(H)`.
    pub fn second_derivative(&self) -> T {
        T::int(2) * self.direct
    }
}

pub fn rank_one_second_derivative<T: Scalar>(b: [T; 3], xi: &Vector3<T>, eta: &Vector3<T>) -> RankOneForm<T> {
    let h = Matrix3::outer(xi, eta);
    let tr = h.trace();
    let direct = b[0] * h.sym().norm_sq() + b[1] * h.skew().norm_sq() + b[2] * tr * tr;
    // |ξ|²|η|² sin²θ = |ξ × η|², |ξ|²|η|² cos²θ = (ξ·η)².
    let sin2 = xi.cross(eta).norm_sq();
    let c = xi.dot(eta);
    let closed_form = (b[0] + b[1]) / T::int(2) * sin2 + (b[0] + b[2]) * c * c;
    RankOneForm { direct, closed_form }
}
