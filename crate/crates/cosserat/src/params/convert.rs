use super::{
    technical_constants, CosseratModuli, DislocationParams, EringenParams, Extended, LakesConstants,
    MindlinMicropolarParams, Notation, NowackiParams, Params, TaggedParams,
};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `(a₁, a₂, a₃) ↦ (α₁, α₂, α₃)` with `α₃ = (2/3)(4a₃ − a₁)`.
pub fn weight_convert<T: Scalar>(a: [T; 3]) -> [T; 3] {
    [a[0], a[1], T::frac(2, 3) * (T::int(4) * a[2] - a[0])]
}

/// `(α₁, α₂, α₃) ↦ (a₁, a₂, a₃)` with `a₃ = (2α₁ + 3α₃)/8`.
pub fn weight_convert_inverse<T: Scalar>(alpha: [T; 3]) -> [T; 3] {
    [alpha[0], alpha[1], (T::int(2) * alpha[0] + T::int(3) * alpha[2]) / T::int(8)]
}

fn nonzero<T: Scalar>(x: T, what: &str) -> Result<T> {
    if x.is_zero() {
        Err(Error::InvalidInput(format!("{what} must be nonzero")))
    } else {
        Ok(x)
    }
}

impl<T: Scalar> CosseratModuli<T> {
    pub fn to_eringen(&self) -> EringenParams<T> {
        let s = self.curvature_modulus();
        let h = T::frac(1, 2);
        let [a1, a2, a3] = self.alpha;
        EringenParams::new(
            self.lambda_e,
            self.mu_e - self.mu_c,
            T::int(2) * self.mu_c,
            h * s * a3,
            h * s * (a1 - a2),
            h * s * (a1 + a2),
        )
    }

    pub fn to_nowacki(&self) -> NowackiParams<T> {
        let hs = self.curvature_modulus() * T::frac(1, 2);
        let [a1, a2, a3] = self.alpha;
        NowackiParams {
            lambda_n: self.lambda_e,
            mu_n: self.mu_e,
            varkappa_n: self.mu_c,
            alpha_n: hs * a3,
            beta_n: hs * a2,
            gamma_n: hs * a1,
        }
    }

    /// Energy-matching identification with Mindlin's third-order curvature.
    pub fn to_mindlin(&self) -> MindlinMicropolarParams<T> {
        let s = self.curvature_modulus();
        let [a1, a2, a3] = self.alpha;
        MindlinMicropolarParams {
            lambda_m: self.lambda_e,
            mu_m: self.mu_e,
            mu_c_m: self.mu_c,
            beta1_m: s * (a2 - a1) / T::int(4),
            beta2_m: s * (T::int(2) * a1 + a3) / T::int(8),
            beta3_m: -s * a3 / T::int(4),
        }
    }
}

impl<T: Scalar> EringenParams<T> {
    pub fn to_cosserat(&self, l_c: T) -> Result<CosseratModuli<T>> {
        let mu_e = self.mu_star + self.varkappa * T::frac(1, 2);
        let s = nonzero(mu_e * l_c * l_c, "mu_e * L_c^2")?;
        Ok(CosseratModuli {
            lambda_e: self.lambda,
            mu_e,
            mu_c: self.varkappa * T::frac(1, 2),
            l_c,
            alpha: [
                (self.gamma + self.beta) / s,
                (self.gamma - self.beta) / s,
                T::int(2) * self.alpha / s,
            ],
        })
    }
}

impl<T: Scalar> NowackiParams<T> {
    pub fn to_cosserat(&self, l_c: T) -> Result<CosseratModuli<T>> {
        let s = nonzero(self.mu_n * l_c * l_c, "mu_N * L_c^2")?;
        let two = T::int(2);
        Ok(CosseratModuli {
            lambda_e: self.lambda_n,
            mu_e: self.mu_n,
            mu_c: self.varkappa_n,
            l_c,
            alpha: [two * self.gamma_n / s, two * self.beta_n / s, two * self.alpha_n / s],
        })
    }
}

impl<T: Scalar> MindlinMicropolarParams<T> {
    /// Inverts [`CosseratModuli::to_mindlin`]:
    /// `(μeLc²/2)α₁ = 2β₂+β₃`, `(μeLc²/2)α₂ = 2β₁+2β₂+β₃`, `α₃ = −4β₃/(μeLc²)`.
    pub fn to_cosserat(&self, l_c: T) -> Result<CosseratModuli<T>> {
        let s = nonzero(self.mu_m * l_c * l_c, "mu_M * L_c^2")?;
        let two = T::int(2);
        let (b1, b2, b3) = (self.beta1_m, self.beta2_m, self.beta3_m);
        Ok(CosseratModuli {
            lambda_e: self.lambda_m,
            mu_e: self.mu_m,
            mu_c: self.mu_c_m,
            l_c,
            alpha: [
                two * (two * b2 + b3) / s,
                two * (two * b1 + two * b2 + b3) / s,
                -T::int(4) * b3 / s,
            ],
        })
    }
}

fn from_moduli(m: CosseratModuli<f64>, rho: Option<f64>) -> DislocationParams {
    DislocationParams {
        rho,
        ..DislocationParams::new(m.lambda_e, m.mu_e, m.mu_c, m.l_c, m.alpha)
    }
}

fn from_lakes(c: &LakesConstants, l_c: f64) -> Result<DislocationParams> {
    if !(c.g > 0.0) {
        return Err(Error::OutOfRange(format!("G = {} must be positive", c.g)));
    }
    if !(0.0..=1.0).contains(&c.n) {
        return Err(Error::OutOfRange(format!("coupling number N = {} must lie in [0, 1]", c.n)));
    }
    if !(c.psi > 0.0 && c.psi <= 1.5) {
        return Err(Error::OutOfRange(format!("polar ratio Psi = {} must lie in (0, 3/2]", c.psi)));
    }
    if !(c.ell_t >= 0.0 && c.ell_b >= 0.0) {
        return Err(Error::OutOfRange("characteristic lengths ell_t, ell_b must be non-negative".into()));
    }
    let g = c.g;
    let lambda_e = if c.e - 3.0 * g == 0.0 {
        Extended::Infinite
    } else {
        Extended::Finite(-g * (c.e - 2.0 * g) / (c.e - 3.0 * g))
    };
    let n2 = c.n * c.n;
    let mu_c = if n2 == 1.0 { Extended::Infinite } else { Extended::Finite(g * n2 / (1.0 - n2)) };
    let lt2 = c.ell_t * c.ell_t / (l_c * l_c);
    let lb2 = c.ell_b * c.ell_b / (l_c * l_c);
    Ok(DislocationParams {
        lambda_e,
        mu_e: g,
        mu_c,
        l_c,
        alpha1: 2.0 * lt2,
        alpha2: 8.0 * lb2 - 2.0 * lt2,
        alpha3: 4.0 * lt2 * (1.0 - c.psi) / c.psi,
        rho: None,
        rot_inertia: None,
    })
}

fn check_length(l_c: f64) -> Result<f64> {
    if l_c > 0.0 && l_c.is_finite() {
        Ok(l_c)
    } else {
        Err(Error::InvalidInput(format!("L_c = {l_c} must be finite and positive")))
    }
}

/// Expresses any micropolar record in the dislocation format with gauge `l_c`
/// (ignored when the source already is a dislocation record).
pub fn to_dislocation(p: &Params, l_c: f64) -> Result<DislocationParams> {
    match p {
        Params::Dislocation(d) => Ok(*d),
        Params::Eringen(e) => Ok(from_moduli(e.to_cosserat(check_length(l_c)?)?, e.rho)),
        Params::Nowacki(n) => Ok(from_moduli(n.to_cosserat(check_length(l_c)?)?, None)),
        Params::MindlinMicropolar(m) => Ok(from_moduli(m.to_cosserat(check_length(l_c)?)?, None)),
        Params::Lakes(c) => from_lakes(c, check_length(l_c)?),
        Params::RelaxedMicromorphic(_) => Err(Error::UnsupportedNotation(
            "relaxed_micromorphic records do not convert to micropolar notations".into(),
        )),
    }
}

/// Expresses a dislocation record in `target`.
pub fn from_dislocation(d: &DislocationParams, target: Notation) -> Result<Params> {
    check_length(d.l_c)?;
    Ok(match target {
        Notation::Dislocation => Params::Dislocation(*d),
        Notation::Eringen => Params::Eringen(EringenParams { rho: d.rho, ..d.moduli()?.to_eringen() }),
        Notation::Nowacki => Params::Nowacki(d.moduli()?.to_nowacki()),
        Notation::MindlinMicropolar => Params::MindlinMicropolar(d.moduli()?.to_mindlin()),
        Notation::Lakes => Params::Lakes(technical_constants(d)?.to_lakes()?),
        Notation::RelaxedMicromorphic => {
            return Err(Error::UnsupportedNotation(
                "micropolar records do not convert to relaxed_micromorphic".into(),
            ))
        }
    })
}

/// Converts between notations through the dislocation format.
///
/// `l_c_choice` fixes the gauge when entering the dislocation format from a
/// notation with dimensional couple moduli; it is required when the target is
/// the dislocation format and irrelevant otherwise.
pub fn convert(p: &TaggedParams, target: Notation, l_c_choice: Option<f64>) -> Result<TaggedParams> {
    if p.notation() == target {
        return Ok(*p);
    }
    let source = p.notation();
    let l_c = match (source, target, l_c_choice) {
        (Notation::Dislocation, _, _) => 1.0,
        (_, Notation::Dislocation, None) => return Err(Error::MissingLengthScale),
        (_, _, Some(l)) => l,
        (_, _, None) => 1.0,
    };
    let hub = to_dislocation(&p.params, l_c)?;
    Ok(TaggedParams { params: from_dislocation(&hub, target)?, units: p.units })
}
