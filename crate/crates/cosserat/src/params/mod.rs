//! Material parameter records for every notation, the exact conversions
//! between them, technical constants and the JSON material schema.

mod convert;
mod document;
mod extended;
mod technical;

pub use convert::{convert, from_dislocation, to_dislocation, weight_convert, weight_convert_inverse};
pub use document::{parse_material, Material, MaterialDocument, DEFAULT_L_C_MM};
pub use extended::{serde_signed_f64, Extended};
pub use technical::{technical_constants, TechnicalConstants};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Notation {
    Dislocation,
    Eringen,
    Nowacki,
    MindlinMicropolar,
    Lakes,
    RelaxedMicromorphic,
}

impl Notation {
    pub const ALL: [Notation; 6] = [
        Notation::Dislocation,
        Notation::Eringen,
        Notation::Nowacki,
        Notation::MindlinMicropolar,
        Notation::Lakes,
        Notation::RelaxedMicromorphic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Notation::Dislocation => "dislocation",
            Notation::Eringen => "eringen",
            Notation::Nowacki => "nowacki",
            Notation::MindlinMicropolar => "mindlin_micropolar",
            Notation::Lakes => "lakes",
            Notation::RelaxedMicromorphic => "relaxed_micromorphic",
        }
    }
}

impl std::fmt::Display for Notation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Notation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Notation::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::UnsupportedNotation(s.to_string()))
    }
}

/// `MPa_mm`: moduli in MPa, lengths in mm. `SI`: Pa and m.
/// Couple moduli are in N in both systems; ρ is always kg/m³ and ι always kg/m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnitSystem {
    #[serde(rename = "MPa_mm")]
    MpaMm,
    #[serde(rename = "SI")]
    Si,
}

impl UnitSystem {
    /// Factors (stress, length) taking values in `self` to `target`.
    fn factors_to(self, target: UnitSystem) -> (f64, f64) {
        match (self, target) {
            (UnitSystem::MpaMm, UnitSystem::Si) => (1e6, 1e-3),
            (UnitSystem::Si, UnitSystem::MpaMm) => (1e-6, 1e3),
            _ => (1.0, 1.0),
        }
    }
}

impl std::str::FromStr for UnitSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "MPa_mm" => Ok(UnitSystem::MpaMm),
            "SI" => Ok(UnitSystem::Si),
            _ => Err(Error::Parse(format!("unknown unit system {s:?} (expected MPa_mm or SI)"))),
        }
    }
}

/// The dislocation-format record: the hub of every conversion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DislocationParams {
    pub lambda_e: Extended,
    pub mu_e: f64,
    pub mu_c: Extended,
    pub l_c: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub rho: Option<f64>,
    /// ι = ρ·j·μe·τc², the rotational entry of the plane-wave mass matrices.
    pub rot_inertia: Option<f64>,
}

impl DislocationParams {
    /// Static record with finite moduli and no dynamic data.
    pub fn new(lambda_e: f64, mu_e: f64, mu_c: f64, l_c: f64, alpha: [f64; 3]) -> Self {
        Self {
            lambda_e: Extended::Finite(lambda_e),
            mu_e,
            mu_c: Extended::Finite(mu_c),
            l_c,
            alpha1: alpha[0],
            alpha2: alpha[1],
            alpha3: alpha[2],
            rho: None,
            rot_inertia: None,
        }
    }

    pub fn with_dynamics(mut self, rho: f64, rot_inertia: f64) -> Self {
        self.rho = Some(rho);
        self.rot_inertia = Some(rot_inertia);
        self
    }

    pub fn alpha(&self) -> [f64; 3] {
        [self.alpha1, self.alpha2, self.alpha3]
    }

    /// `(a₁, a₂, a₃)` of the dislocation-format curvature energy.
    pub fn a_weights(&self) -> [f64; 3] {
        weight_convert_inverse(self.alpha())
    }

    /// Gauge-invariant products `μe·Lc²·αᵢ`.
    pub fn gauge_products(&self) -> [f64; 3] {
        let s = self.mu_e * self.l_c * self.l_c;
        self.alpha().map(|a| s * a)
    }

    /// Finite moduli for energy and stress evaluation.
    pub fn moduli(&self) -> Result<CosseratModuli<f64>> {
        let lambda_e = self
            .lambda_e
            .finite()
            .ok_or_else(|| Error::Unavailable("lambda_e is infinite".into()))?;
        let mu_c = self.mu_c.finite().ok_or_else(|| Error::Unavailable("mu_c is infinite".into()))?;
        Ok(CosseratModuli {
            lambda_e,
            mu_e: self.mu_e,
            mu_c,
            l_c: self.l_c,
            alpha: self.alpha(),
        })
    }

    /// Same record re-gauged to another `Lc`, keeping `μe·Lc²·αᵢ` fixed.
    pub fn regauge(&self, l_c: f64) -> Self {
        let r = (self.l_c / l_c).powi(2);
        Self {
            l_c,
            alpha1: self.alpha1 * r,
            alpha2: self.alpha2 * r,
            alpha3: self.alpha3 * r,
            ..*self
        }
    }

    fn to_units(self, from: UnitSystem, to: UnitSystem) -> Self {
        let (s, l) = from.factors_to(to);
        Self {
            lambda_e: self.lambda_e.map(|x| x * s),
            mu_e: self.mu_e * s,
            mu_c: self.mu_c.map(|x| x * s),
            l_c: self.l_c * l,
            ..self
        }
    }
}

/// Finite dislocation-format moduli, generic over the scalar.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CosseratModuli<T> {
    pub lambda_e: T,
    pub mu_e: T,
    pub mu_c: T,
    pub l_c: T,
    pub alpha: [T; 3],
}

impl<T: Scalar> CosseratModuli<T> {
    pub fn a_weights(&self) -> [T; 3] {
        weight_convert_inverse(self.alpha)
    }

    /// `μe·Lc²`.
    pub fn curvature_modulus(&self) -> T {
        self.mu_e * self.l_c * self.l_c
    }
}

/// Eringen's notation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EringenParams<T = f64> {
    pub lambda: T,
    pub mu_star: T,
    pub varkappa: T,
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<T>,
}

impl<T: Scalar> EringenParams<T> {
    pub fn new(lambda: T, mu_star: T, varkappa: T, alpha: T, beta: T, gamma: T) -> Self {
        Self { lambda, mu_star, varkappa, alpha, beta, gamma, j: None, rho: None }
    }
}

/// Nowacki's notation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NowackiParams<T = f64> {
    #[serde(rename = "lambda_N")]
    pub lambda_n: T,
    #[serde(rename = "mu_N")]
    pub mu_n: T,
    #[serde(rename = "varkappa_N")]
    pub varkappa_n: T,
    #[serde(rename = "alpha_N")]
    pub alpha_n: T,
    #[serde(rename = "beta_N")]
    pub beta_n: T,
    #[serde(rename = "gamma_N")]
    pub gamma_n: T,
}

/// Mindlin's micropolar notation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MindlinMicropolarParams<T = f64> {
    #[serde(rename = "lambda_M")]
    pub lambda_m: T,
    #[serde(rename = "mu_M")]
    pub mu_m: T,
    #[serde(rename = "mu_c_M")]
    pub mu_c_m: T,
    #[serde(rename = "beta1_M")]
    pub beta1_m: T,
    #[serde(rename = "beta2_M")]
    pub beta2_m: T,
    #[serde(rename = "beta3_M")]
    pub beta3_m: T,
}

/// Engineering ("technical") constants as reported by size-effect experiments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LakesConstants {
    #[serde(rename = "E")]
    pub e: f64,
    #[serde(rename = "G")]
    pub g: f64,
    /// Informational; λe is computed from (E, G).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    /// Coupling number in [0, 1].
    #[serde(rename = "N")]
    pub n: f64,
    pub ell_t: f64,
    pub ell_b: f64,
    #[serde(rename = "Psi")]
    pub psi: f64,
}

/// Relaxed micromorphic moduli.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelaxedMicromorphicParams<T = f64> {
    pub mu_e: T,
    pub lambda_e: T,
    pub mu_c: T,
    pub mu_micro: T,
    pub lambda_micro: T,
    /// Curvature prefactor μ.
    pub mu: T,
    pub l_c: T,
    pub a1: T,
    pub a2: T,
    pub a3: T,
}

impl<T: Scalar> RelaxedMicromorphicParams<T> {
    /// Cosserat moduli reached when the micro-distortion is restricted to skew
    /// tensors; the curvature weights are rescaled so that `μe·Lc²·aᵢ` matches `μ·Lc²·aᵢ`.
    pub fn cosserat_limit(&self) -> CosseratModuli<T> {
        let r = self.mu / self.mu_e;
        CosseratModuli {
            lambda_e: self.lambda_e,
            mu_e: self.mu_e,
            mu_c: self.mu_c,
            l_c: self.l_c,
            alpha: weight_convert([self.a1 * r, self.a2 * r, self.a3 * r]),
        }
    }
}

/// Mindlin-22 (micromorphic) coefficients identified from relaxed moduli.
/// `a` holds `a₁ … a₁₅`; entries not listed by the identification are zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mindlin22<T = f64> {
    pub b1: T,
    pub b2: T,
    pub b3: T,
    pub g1: T,
    pub g2: T,
    pub mu_m: T,
    pub lambda_m: T,
    pub a: [T; 15],
}

impl<T: Scalar> Mindlin22<T> {
    /// `aₙ`, one-based.
    pub fn a(&self, n: usize) -> T {
        self.a[n - 1]
    }
}

pub fn micromorphic_to_mindlin<T: Scalar>(rm: &RelaxedMicromorphicParams<T>) -> Mindlin22<T> {
    let s = rm.mu * rm.l_c * rm.l_c;
    let mut a = [T::zero(); 15];
    a[3] = s * (T::int(2) * rm.a3 - rm.a1) / T::int(3);
    a[9] = s * (rm.a1 + rm.a2) / T::int(2);
    a[12] = s * (rm.a1 - rm.a2) / T::int(2);
    Mindlin22 {
        b1: rm.lambda_e + rm.lambda_micro,
        b2: rm.mu_e + rm.mu_micro + rm.mu_c,
        b3: rm.mu_e + rm.mu_micro - rm.mu_c,
        g1: -rm.lambda_micro,
        g2: -T::int(2) * rm.mu_micro,
        mu_m: rm.mu_micro,
        lambda_m: rm.lambda_micro,
        a,
    }
}

/// A record in one of the supported notations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Params {
    Dislocation(DislocationParams),
    Eringen(EringenParams),
    Nowacki(NowackiParams),
    MindlinMicropolar(MindlinMicropolarParams),
    Lakes(LakesConstants),
    RelaxedMicromorphic(RelaxedMicromorphicParams),
}

impl Params {
    pub fn notation(&self) -> Notation {
        match self {
            Params::Dislocation(_) => Notation::Dislocation,
            Params::Eringen(_) => Notation::Eringen,
            Params::Nowacki(_) => Notation::Nowacki,
            Params::MindlinMicropolar(_) => Notation::MindlinMicropolar,
            Params::Lakes(_) => Notation::Lakes,
            Params::RelaxedMicromorphic(_) => Notation::RelaxedMicromorphic,
        }
    }
}

/// A record tagged with its notation and unit system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaggedParams {
    pub params: Params,
    pub units: UnitSystem,
}

impl TaggedParams {
    pub fn new(params: Params, units: UnitSystem) -> Self {
        Self { params, units }
    }

    pub fn dislocation(d: DislocationParams) -> Self {
        Self::new(Params::Dislocation(d), UnitSystem::MpaMm)
    }

    pub fn notation(&self) -> Notation {
        self.params.notation()
    }

    /// Re-expresses the record in another unit system.
    pub fn to_units(&self, target: UnitSystem) -> TaggedParams {
        let (s, l) = self.units.factors_to(target);
        let params = match self.params {
            Params::Dislocation(d) => Params::Dislocation(d.to_units(self.units, target)),
            Params::Eringen(e) => Params::Eringen(EringenParams {
                lambda: e.lambda * s,
                mu_star: e.mu_star * s,
                varkappa: e.varkappa * s,
                j: e.j.map(|j| j * l * l),
                ..e
            }),
            Params::Nowacki(n) => Params::Nowacki(NowackiParams {
                lambda_n: n.lambda_n * s,
                mu_n: n.mu_n * s,
                varkappa_n: n.varkappa_n * s,
                ..n
            }),
            Params::MindlinMicropolar(m) => Params::MindlinMicropolar(MindlinMicropolarParams {
                lambda_m: m.lambda_m * s,
                mu_m: m.mu_m * s,
                mu_c_m: m.mu_c_m * s,
                ..m
            }),
            Params::Lakes(c) => Params::Lakes(LakesConstants {
                e: c.e * s,
                g: c.g * s,
                ell_t: c.ell_t * l,
                ell_b: c.ell_b * l,
                ..c
            }),
            Params::RelaxedMicromorphic(r) => Params::RelaxedMicromorphic(RelaxedMicromorphicParams {
                mu_e: r.mu_e * s,
                lambda_e: r.lambda_e * s,
                mu_c: r.mu_c * s,
                mu_micro: r.mu_micro * s,
                lambda_micro: r.lambda_micro * s,
                mu: r.mu * s,
                l_c: r.l_c * l,
                ..r
            }),
        };
        TaggedParams { params, units: target }
    }
}
