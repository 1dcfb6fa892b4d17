use serde::{Deserialize, Serialize};

use super::{DislocationParams, Extended, LakesConstants};
use crate::error::{Error, Result};

/// The full set of engineering constants of a dislocation record.
///
/// `None` marks a quantity that is undefined for this record
/// (a vanishing denominator).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TechnicalConstants {
    #[serde(rename = "E")]
    pub e: Option<f64>,
    #[serde(rename = "G")]
    pub g: f64,
    pub nu: Option<f64>,
    pub kappa_bulk: Extended,
    #[serde(rename = "N")]
    pub n: f64,
    #[serde(rename = "N2")]
    pub n_squared: f64,
    pub ell_t: f64,
    pub ell_b: f64,
    #[serde(rename = "Psi")]
    pub psi: Option<f64>,
    pub xi: Option<f64>,
    /// Torsional modulus 𝓔, in couple-modulus units.
    pub curly_e: Option<f64>,
    /// Torsional bulk modulus 𝓑, in couple-modulus units.
    pub curly_b: f64,
}

impl TechnicalConstants {
    pub fn to_lakes(&self) -> Result<LakesConstants> {
        let e = self.e.ok_or_else(|| Error::Unavailable("E is undefined (mu_e + lambda_e = 0)".into()))?;
        let psi = self
            .psi
            .ok_or_else(|| Error::Unavailable("Psi is undefined (alpha3 + 2 alpha1 = 0)".into()))?;
        Ok(LakesConstants {
            e,
            g: self.g,
            nu: self.nu,
            n: self.n,
            ell_t: self.ell_t,
            ell_b: self.ell_b,
            psi,
        })
    }
}

fn ratio(num: f64, den: f64) -> Option<f64> {
    (den != 0.0).then(|| num / den)
}

pub fn technical_constants(d: &DislocationParams) -> Result<TechnicalConstants> {
    let mu = d.mu_e;
    if !(mu > 0.0) {
        return Err(Error::InvalidInput(format!("mu_e = {mu} must be positive")));
    }
    if !(d.l_c > 0.0) {
        return Err(Error::InvalidInput(format!("L_c = {} must be positive", d.l_c)));
    }
    let (e, nu, kappa_bulk) = match d.lambda_e {
        Extended::Infinite => (Some(3.0 * mu), Some(0.5), Extended::Infinite),
        Extended::Finite(l) => (
            ratio(mu * (2.0 * mu + 3.0 * l), mu + l),
            ratio(l, 2.0 * (mu + l)),
            Extended::Finite(l + 2.0 * mu / 3.0),
        ),
    };
    let n_squared = match d.mu_c {
        Extended::Infinite => 1.0,
        Extended::Finite(c) => c / (mu + c),
    };
    if !(0.0..=1.0).contains(&n_squared) {
        return Err(Error::OutOfRange(format!(
            "mu_c / (mu_e + mu_c) = {n_squared} lies outside [0, 1]; N is undefined"
        )));
    }
    let [a1, a2, a3] = d.alpha();
    if a1 < 0.0 || a1 + a2 < 0.0 {
        return Err(Error::OutOfRange(
            "alpha1 >= 0 and alpha1 + alpha2 >= 0 are required for real ell_t, ell_b".into(),
        ));
    }
    let hs = 0.5 * mu * d.l_c * d.l_c;
    Ok(TechnicalConstants {
        e,
        g: mu,
        nu,
        kappa_bulk,
        n: n_squared.sqrt(),
        n_squared,
        ell_t: d.l_c * (a1 / 2.0).sqrt(),
        ell_b: d.l_c * ((a1 + a2) / 8.0).sqrt(),
        psi: ratio(2.0 * a1, a3 + 2.0 * a1),
        xi: ratio(a3, 2.0 * (a1 + a3)),
        curly_e: ratio(hs * a1 * (2.0 * a1 + 3.0 * a3), a1 + a3),
        curly_b: hs * (2.0 * a1 + 3.0 * a3) / 3.0,
    })
}
