use serde::Serialize;

use crate::constitutive::acoustic_blocks;
use crate::error::{Error, Result};
use crate::params::{serde_signed_f64, to_dislocation, CosseratModuli, DislocationParams, Params, TaggedParams, UnitSystem};
use crate::tensor::{anti, gen_eigen_pairs, Matrix3, Vector3};

/// A micropolar medium with dynamic data, in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveMedium {
    d: DislocationParams,
    moduli: CosseratModuli<f64>,
    rho: f64,
    rot_inertia: f64,
}

impl WaveMedium {
    /// `d` must be in SI units and carry ρ and ι.
    pub fn new(d: DislocationParams) -> Result<Self> {
        let (Some(rho), Some(rot_inertia)) = (d.rho, d.rot_inertia) else {
            return Err(Error::InvalidInput("dynamic data required: rho and rot_inertia".into()));
        };
        for (name, v) in [("rho", rho), ("rot_inertia", rot_inertia)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidMass(format!("{name} = {v} must be finite and positive")));
            }
        }
        let moduli = d.moduli()?;
        Ok(Self { d, moduli, rho, rot_inertia })
    }

    /// Converts any micropolar record (gauge `l_c` in the record's units) to SI.
    pub fn from_tagged(p: &TaggedParams, l_c: f64) -> Result<Self> {
        let si = p.to_units(UnitSystem::Si);
        let l_si = match p.units {
            UnitSystem::MpaMm => l_c * 1e-3,
            UnitSystem::Si => l_c,
        };
        let mut d = to_dislocation(&si.params, l_si)?;
        if let Params::Eringen(e) = &si.params {
            // Eringen's rotational inertia is ρ·j.
            if let (None, Some(rho), Some(j)) = (d.rot_inertia, e.rho, e.j) {
                d.rot_inertia = Some(rho * j);
            }
        }
        Self::new(d)
    }

    pub fn params(&self) -> &DislocationParams {
        &self.d
    }

    pub fn moduli(&self) -> &CosseratModuli<f64> {
        &self.moduli
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn rot_inertia(&self) -> f64 {
        self.rot_inertia
    }

    /// `μeLc²(α₁+α₂)` and `μeLc²(2α₁+α₃)`.
    pub(crate) fn curvature_moduli(&self) -> (f64, f64) {
        let s = self.moduli.curvature_modulus();
        let [a1, a2, a3] = self.moduli.alpha;
        (s * (a1 + a2), s * (2.0 * a1 + a3))
    }
}

/// `Q₁` acts on `(u₁, u₂, ϑ₃)` with mass `M̂ = diag(ρ, ρ, ι)`;
/// `Q₂` acts on `(u₃, ϑ₁, ϑ₂)` with mass `M̃ = diag(ρ, ι, ι)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationMatrices {
    pub q1: Matrix3<f64>,
    pub m1: [f64; 3],
    pub q2: Matrix3<f64>,
    pub m2: [f64; 3],
}

impl PropagationMatrices {
    pub fn mass1(&self) -> Matrix3<f64> {
        Matrix3::diag(self.m1[0], self.m1[1], self.m1[2])
    }

    pub fn mass2(&self) -> Matrix3<f64> {
        Matrix3::diag(self.m2[0], self.m2[1], self.m2[2])
    }
}

pub fn propagation_matrices(w: &WaveMedium, k: f64) -> Result<PropagationMatrices> {
    if !(k >= 0.0 && k.is_finite()) {
        return Err(Error::InvalidInput(format!("wavenumber k = {k} must be finite and non-negative")));
    }
    let m = &w.moduli;
    let (c_ms, c_mp) = w.curvature_moduli();
    let k2 = k * k;
    let mu_c4 = 4.0 * m.mu_c;
    let q1 = Matrix3([
        [k2 * (2.0 * m.mu_e + m.lambda_e), 0.0, 0.0],
        [0.0, k2 * (m.mu_e + m.mu_c), -2.0 * k * m.mu_c],
        [0.0, -2.0 * k * m.mu_c, k2 * c_ms + mu_c4],
    ]);
    let q2 = Matrix3([
        [k2 * (m.mu_e + m.mu_c), 0.0, 2.0 * k * m.mu_c],
        [0.0, k2 * c_mp + mu_c4, 0.0],
        [2.0 * k * m.mu_c, 0.0, k2 * c_ms + mu_c4],
    ]);
    Ok(PropagationMatrices {
        q1,
        m1: [w.rho, w.rho, w.rot_inertia],
        q2,
        m2: [w.rho, w.rot_inertia, w.rot_inertia],
    })
}

/// `d/dk` of both propagation matrices.
pub(crate) fn propagation_derivatives(w: &WaveMedium, k: f64) -> (Matrix3<f64>, Matrix3<f64>) {
    let m = &w.moduli;
    let (c_ms, c_mp) = w.curvature_moduli();
    let k2 = 2.0 * k;
    let dq1 = Matrix3([
        [k2 * (2.0 * m.mu_e + m.lambda_e), 0.0, 0.0],
        [0.0, k2 * (m.mu_e + m.mu_c), -2.0 * m.mu_c],
        [0.0, -2.0 * m.mu_c, k2 * c_ms],
    ]);
    let dq2 = Matrix3([
        [k2 * (m.mu_e + m.mu_c), 0.0, 2.0 * m.mu_c],
        [0.0, k2 * c_mp, 0.0],
        [2.0 * m.mu_c, 0.0, k2 * c_ms],
    ]);
    (dq1, dq2)
}

/// Large-k phase velocities and the optical cut-off frequency.
/// Entries are NaN where the radicand is negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticVelocities {
    #[serde(with = "serde_signed_f64")]
    pub c_p: f64,
    #[serde(with = "serde_signed_f64")]
    pub c_t: f64,
    #[serde(with = "serde_signed_f64")]
    pub c_s: f64,
    #[serde(with = "serde_signed_f64")]
    pub c_mp: f64,
    #[serde(with = "serde_signed_f64")]
    pub c_ms: f64,
    #[serde(with = "serde_signed_f64")]
    pub cutoff: f64,
}

pub fn asymptotic_velocities(w: &WaveMedium) -> AsymptoticVelocities {
    let m = &w.moduli;
    let (c_ms, c_mp) = w.curvature_moduli();
    AsymptoticVelocities {
        c_p: ((m.lambda_e + 2.0 * m.mu_e) / w.rho).sqrt(),
        c_t: (m.mu_e / w.rho).sqrt(),
        c_s: ((m.mu_e + m.mu_c) / w.rho).sqrt(),
        c_mp: (c_mp / w.rot_inertia).sqrt(),
        c_ms: (c_ms / w.rot_inertia).sqrt(),
        cutoff: 2.0 * (m.mu_c / w.rot_inertia).sqrt(),
    }
}

/// The 6×6 propagation matrix on `(u, ϑ)` for an arbitrary unit direction,
/// assembled from the acoustic-tensor blocks; reduces to `Q₁ ⊕ Q₂` for `ξ = e₁`.
pub fn full_propagation_matrix(w: &WaveMedium, xi: &Vector3<f64>, k: f64) -> Result<[[f64; 6]; 6]> {
    let (qh1, qh2) = acoustic_blocks(&w.d, xi, xi)?;
    let m = &w.moduli;
    let s = m.curvature_modulus();
    let coupling = anti(xi).to_matrix().scale(2.0 * k * m.mu_c);
    let mut q = [[0.0; 6]; 6];
    for i in 0..3 {
        for j in 0..3 {
            q[i][j] = 2.0 * k * k * qh1[(i, j)];
            q[i][j + 3] = coupling[(i, j)];
            q[j + 3][i] = coupling[(i, j)];
            q[i + 3][j + 3] = 2.0 * k * k * s * qh2[(i, j)] + if i == j { 4.0 * m.mu_c } else { 0.0 };
        }
    }
    Ok(q)
}

/// Largest deviation, relative to the largest ω², between the six ω² along
/// each direction and those along `e₁`.
pub fn isotropy_deviation(w: &WaveMedium, k: f64, directions: &[Vector3<f64>]) -> Result<f64> {
    let mass = [w.rho, w.rho, w.rho, w.rot_inertia, w.rot_inertia, w.rot_inertia];
    let reference = gen_eigen_pairs(&full_propagation_matrix(w, &Vector3::unit(0), k)?, &mass)?.values;
    let scale = reference.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
    let mut worst = 0.0f64;
    for xi in directions {
        let values = gen_eigen_pairs(&full_propagation_matrix(w, xi, k)?, &mass)?.values;
        for (a, b) in values.iter().zip(&reference) {
            worst = worst.max((a - b).abs() / scale);
        }
    }
    Ok(worst)
}
