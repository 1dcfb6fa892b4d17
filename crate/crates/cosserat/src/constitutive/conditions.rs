use serde::Serialize;

use crate::params::{serde_signed_f64, DislocationParams};

/// Margins within this fraction of the group scale (moduli or curvature
/// weights) count as exact ties at zero.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionSet {
    PositiveDefinite,
    WellPosed,
    RealPlaneWaves,
    StronglyElliptic,
    ConformalCurvature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">")]
    Positive,
    #[serde(rename = ">=")]
    NonNegative,
    #[serde(rename = "=")]
    Zero,
}

/// One inequality of a condition set; `margin` is the signed left-hand side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Inequality {
    pub set: ConditionSet,
    pub name: String,
    pub relation: Relation,
    #[serde(with = "serde_signed_f64")]
    pub margin: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub positive_definite: bool,
    pub well_posed: bool,
    pub real_plane_waves: bool,
    pub strongly_elliptic: bool,
    pub conformal_curvature: bool,
    pub inequalities: Vec<Inequality>,
}

impl ConditionReport {
    pub fn violated(&self) -> impl Iterator<Item = &Inequality> {
        self.inequalities.iter().filter(|i| !i.satisfied)
    }

    /// `positive_definite ⇒ well_posed ⇒ (real_plane_waves ∧ strongly_elliptic)`.
    pub fn implication_chain_holds(&self) -> bool {
        (!self.positive_definite || self.well_posed)
            && (!self.well_posed || (self.real_plane_waves && self.strongly_elliptic))
    }
}

struct Builder {
    moduli_scale: f64,
    weight_scale: f64,
    out: Vec<Inequality>,
}

#[derive(Clone, Copy)]
enum Group {
    Moduli,
    Weights,
}

impl Builder {
    fn push(&mut self, set: ConditionSet, name: &str, relation: Relation, margin: f64, group: Group) -> bool {
        let scale = match group {
            Group::Moduli => self.moduli_scale,
            Group::Weights => self.weight_scale,
        };
        let tie = margin.abs() <= TIE_TOLERANCE * scale;
        let satisfied = match relation {
            Relation::Positive => !tie && margin > 0.0,
            Relation::NonNegative => tie || margin > 0.0,
            Relation::Zero => tie,
        };
        self.out.push(Inequality { set, name: name.to_string(), relation, margin, satisfied });
        satisfied
    }
}

fn max_abs(xs: &[f64]) -> f64 {
    xs.iter().filter(|x| x.is_finite()).fold(0.0, |m, x| m.max(x.abs()))
}

/// Evaluates every condition set. Infinite λe or μc enter as limits
/// (e.g. μc = +∞ satisfies μc > 0).
pub fn check_conditions(d: &DislocationParams) -> ConditionReport {
    use ConditionSet::*;
    use Group::*;
    use Relation::*;

    let mu_e = d.mu_e;
    let lambda_e = d.lambda_e.value();
    let mu_c = d.mu_c.value();
    let [al1, al2, al3] = d.alpha();
    let [a1, a2, a3] = d.a_weights();

    let mut b = Builder {
        moduli_scale: max_abs(&[mu_e, lambda_e, mu_c]),
        weight_scale: max_abs(&[al1, al2, al3, a1, a2, a3]),
        out: Vec::new(),
    };

    let pd = [
        b.push(PositiveDefinite, "mu_e > 0", Positive, mu_e, Moduli),
        b.push(PositiveDefinite, "mu_c > 0", Positive, mu_c, Moduli),
        b.push(PositiveDefinite, "2 mu_e + 3 lambda_e > 0", Positive, 2.0 * mu_e + 3.0 * lambda_e, Moduli),
        b.push(PositiveDefinite, "a1 > 0", Positive, a1, Weights),
        b.push(PositiveDefinite, "a2 > 0", Positive, a2, Weights),
        b.push(PositiveDefinite, "a3 > 0", Positive, a3, Weights),
    ];
    let wp = [
        b.push(WellPosed, "mu_e > 0", Positive, mu_e, Moduli),
        b.push(WellPosed, "mu_c > 0", Positive, mu_c, Moduli),
        b.push(WellPosed, "2 mu_e + 3 lambda_e > 0", Positive, 2.0 * mu_e + 3.0 * lambda_e, Moduli),
        b.push(WellPosed, "a1 > 0", Positive, a1, Weights),
        b.push(WellPosed, "a2 >= 0", NonNegative, a2, Weights),
        b.push(WellPosed, "a3 >= 0", NonNegative, a3, Weights),
    ];
    let rw = [
        b.push(RealPlaneWaves, "2 mu_e + lambda_e > 0", Positive, 2.0 * mu_e + lambda_e, Moduli),
        b.push(RealPlaneWaves, "mu_e > 0", Positive, mu_e, Moduli),
        b.push(RealPlaneWaves, "mu_c > 0", Positive, mu_c, Moduli),
        b.push(RealPlaneWaves, "2 alpha1 + alpha3 > 0", Positive, 2.0 * al1 + al3, Weights),
        b.push(RealPlaneWaves, "alpha1 + alpha2 > 0", Positive, al1 + al2, Weights),
    ];
    let se = [
        b.push(StronglyElliptic, "2 mu_e + lambda_e > 0", Positive, 2.0 * mu_e + lambda_e, Moduli),
        b.push(StronglyElliptic, "mu_e + mu_c > 0", Positive, mu_e + mu_c, Moduli),
        b.push(StronglyElliptic, "a1 + 2 a3 > 0", Positive, a1 + 2.0 * a3, Weights),
        b.push(StronglyElliptic, "a1 + a2 > 0", Positive, a1 + a2, Weights),
    ];
    let cc = [
        b.push(ConformalCurvature, "a2 = 0", Zero, a2, Weights),
        b.push(ConformalCurvature, "a3 = 0", Zero, a3, Weights),
    ];

    ConditionReport {
        positive_definite: pd.iter().all(|&x| x),
        well_posed: wp.iter().all(|&x| x),
        real_plane_waves: rw.iter().all(|&x| x),
        strongly_elliptic: se.iter().all(|&x| x),
        conformal_curvature: cc.iter().all(|&x| x),
        inequalities: b.out,
    }
}
