//! JSON material files:
//! `{"notation": ..., "units": "MPa_mm" | "SI", "values": {...}, "L_c": ..., "derived": {...}}`.
//!
//! Unknown keys are rejected; `+∞` is written as the string `"inf"`. `derived`
//! is output-only (technical constants, gauge products) and ignored on input.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{
    DislocationParams, EringenParams, Extended, LakesConstants, MindlinMicropolarParams, Notation, NowackiParams,
    Params, RelaxedMicromorphicParams, TaggedParams, UnitSystem,
};
use crate::error::{Error, Result};

/// Gauge used for the dislocation format when a file gives none, in mm.
pub const DEFAULT_L_C_MM: f64 = 1.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialDocument {
    pub notation: Notation,
    pub units: UnitSystem,
    pub values: Value,
    #[serde(rename = "L_c", default, skip_serializing_if = "Option::is_none")]
    pub l_c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived: Option<Value>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DislocationValues {
    lambda_e: Extended,
    mu_e: f64,
    mu_c: Extended,
    alpha1: f64,
    alpha2: f64,
    alpha3: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rho: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rot_inertia: Option<f64>,
    /// Micro-inertia j and characteristic time τc, folded into ι = ρ·j·μe·τc².
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tau_c: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LakesValues {
    #[serde(rename = "E")]
    e: f64,
    #[serde(rename = "G")]
    g: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nu: Option<f64>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    n: Option<f64>,
    #[serde(rename = "N2", default, skip_serializing_if = "Option::is_none")]
    n_squared: Option<f64>,
    ell_t: f64,
    ell_b: f64,
    #[serde(rename = "Psi")]
    psi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelaxedValues {
    mu_e: f64,
    lambda_e: f64,
    mu_c: f64,
    mu_micro: f64,
    lambda_micro: f64,
    mu: f64,
    a1: f64,
    a2: f64,
    a3: f64,
}

/// A parsed material file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    pub tagged: TaggedParams,
    /// The file's `L_c`, if it gave one.
    pub l_c: Option<f64>,
}

fn values<T: serde::de::DeserializeOwned>(v: &Value, notation: Notation) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Parse(format!("invalid values for notation {notation}: {e}")))
}

fn default_l_c(units: UnitSystem) -> f64 {
    match units {
        UnitSystem::MpaMm => DEFAULT_L_C_MM,
        UnitSystem::Si => DEFAULT_L_C_MM * 1e-3,
    }
}

/// Parses a material file. Syntax and schema problems are [`Error::Parse`]
/// (with line and column for syntax errors).
pub fn parse_material(text: &str) -> Result<Material> {
    let doc: MaterialDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_material()
}

impl MaterialDocument {
    pub fn to_material(&self) -> Result<Material> {
        let n = self.notation;
        let l_c = self.l_c.unwrap_or_else(|| default_l_c(self.units));
        let params = match n {
            Notation::Dislocation => {
                let v: DislocationValues = values(&self.values, n)?;
                let rot_inertia = match (v.rot_inertia, v.j, v.tau_c) {
                    (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
                        return Err(Error::Parse("give either rot_inertia or (j, tau_c), not both".into()))
                    }
                    (Some(i), None, None) => Some(i),
                    (None, Some(j), Some(tau)) => {
                        let rho = v.rho.ok_or_else(|| Error::Parse("j and tau_c need rho".into()))?;
                        let (s, _) = self.units.factors_to(UnitSystem::Si);
                        Some(rho * j * v.mu_e * s * tau * tau)
                    }
                    (None, None, None) => None,
                    _ => return Err(Error::Parse("j and tau_c must be given together".into())),
                };
                Params::Dislocation(DislocationParams {
                    lambda_e: v.lambda_e,
                    mu_e: v.mu_e,
                    mu_c: v.mu_c,
                    l_c,
                    alpha1: v.alpha1,
                    alpha2: v.alpha2,
                    alpha3: v.alpha3,
                    rho: v.rho,
                    rot_inertia,
                })
            }
            Notation::Eringen => Params::Eringen(values::<EringenParams>(&self.values, n)?),
            Notation::Nowacki => Params::Nowacki(values::<NowackiParams>(&self.values, n)?),
            Notation::MindlinMicropolar => Params::MindlinMicropolar(values::<MindlinMicropolarParams>(&self.values, n)?),
            Notation::Lakes => {
                let v: LakesValues = values(&self.values, n)?;
                let coupling = match (v.n, v.n_squared) {
                    (Some(c), None) => c,
                    (None, Some(c2)) => c2.sqrt(),
                    _ => return Err(Error::Parse("lakes values need exactly one of N, N2".into())),
                };
                Params::Lakes(LakesConstants {
                    e: v.e,
                    g: v.g,
                    nu: v.nu,
                    n: coupling,
                    ell_t: v.ell_t,
                    ell_b: v.ell_b,
                    psi: v.psi,
                })
            }
            Notation::RelaxedMicromorphic => {
                let v: RelaxedValues = values(&self.values, n)?;
                Params::RelaxedMicromorphic(RelaxedMicromorphicParams {
                    mu_e: v.mu_e,
                    lambda_e: v.lambda_e,
                    mu_c: v.mu_c,
                    mu_micro: v.mu_micro,
                    lambda_micro: v.lambda_micro,
                    mu: v.mu,
                    l_c,
                    a1: v.a1,
                    a2: v.a2,
                    a3: v.a3,
                })
            }
        };
        check_finite(&params)?;
        Ok(Material { tagged: TaggedParams::new(params, self.units), l_c: self.l_c })
    }

    /// Document for a record; `derived` is attached verbatim.
    pub fn from_tagged(p: &TaggedParams, derived: Option<Value>) -> Self {
        let (values, l_c) = match &p.params {
            Params::Dislocation(d) => (
                to_value(&DislocationValues {
                    lambda_e: d.lambda_e,
                    mu_e: d.mu_e,
                    mu_c: d.mu_c,
                    alpha1: d.alpha1,
                    alpha2: d.alpha2,
                    alpha3: d.alpha3,
                    rho: d.rho,
                    rot_inertia: d.rot_inertia,
                    j: None,
                    tau_c: None,
                }),
                Some(d.l_c),
            ),
            Params::Eringen(e) => (to_value(e), None),
            Params::Nowacki(x) => (to_value(x), None),
            Params::MindlinMicropolar(m) => (to_value(m), None),
            Params::Lakes(c) => (
                to_value(&LakesValues {
                    e: c.e,
                    g: c.g,
                    nu: c.nu,
                    n: Some(c.n),
                    n_squared: None,
                    ell_t: c.ell_t,
                    ell_b: c.ell_b,
                    psi: c.psi,
                }),
                None,
            ),
            Params::RelaxedMicromorphic(r) => (
                to_value(&RelaxedValues {
                    mu_e: r.mu_e,
                    lambda_e: r.lambda_e,
                    mu_c: r.mu_c,
                    mu_micro: r.mu_micro,
                    lambda_micro: r.lambda_micro,
                    mu: r.mu,
                    a1: r.a1,
                    a2: r.a2,
                    a3: r.a3,
                }),
                Some(r.l_c),
            ),
        };
        MaterialDocument { notation: p.notation(), units: p.units, values, l_c, derived }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("records serialize to JSON")
}

fn check_finite(p: &Params) -> Result<()> {
    let xs: Vec<f64> = match p {
        Params::Dislocation(d) => {
            let mut v = vec![d.mu_e, d.l_c, d.alpha1, d.alpha2, d.alpha3];
            v.extend(d.lambda_e.finite());
            v.extend(d.mu_c.finite());
            v.extend(d.rho);
            v.extend(d.rot_inertia);
            v
        }
        Params::Eringen(e) => {
            let mut v = vec![e.lambda, e.mu_star, e.varkappa, e.alpha, e.beta, e.gamma];
            v.extend(e.j);
            v.extend(e.rho);
            v
        }
        Params::Nowacki(n) => vec![n.lambda_n, n.mu_n, n.varkappa_n, n.alpha_n, n.beta_n, n.gamma_n],
        Params::MindlinMicropolar(m) => vec![m.lambda_m, m.mu_m, m.mu_c_m, m.beta1_m, m.beta2_m, m.beta3_m],
        Params::Lakes(c) => {
            let mut v = vec![c.e, c.g, c.n, c.ell_t, c.ell_b, c.psi];
            v.extend(c.nu);
            v
        }
        Params::RelaxedMicromorphic(r) => vec![
            r.mu_e,
            r.lambda_e,
            r.mu_c,
            r.mu_micro,
            r.lambda_micro,
            r.mu,
            r.l_c,
            r.a1,
            r.a2,
            r.a3,
        ],
    };
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidInput("parameter values must be finite (use \"inf\" for flagged moduli)".into()))
    }
}
