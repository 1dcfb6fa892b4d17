//! Energies, stress laws, constitutive conditions, acoustic tensor blocks and
//! balance-equation residuals.

mod acoustic;
mod balance;
mod conditions;
mod energy;
mod mindlin;
mod stress;

pub use acoustic::{acoustic_blocks, rank_one_second_derivative, RankOneForm};
pub use balance::{balance_residuals, balance_residuals_with, BalanceResiduals};
pub use conditions::{check_conditions, ConditionReport, ConditionSet, Inequality, Relation, TIE_TOLERANCE};
pub use energy::{
    energy_dislocation, energy_eringen, energy_eringen_fields, energy_mindlin, energy_relaxed, energy_split,
    energy_split_parts, StrainState,
};
pub use mindlin::{levi_civita, Mindlin3Tensor};
pub use stress::{
    couple_stress, couple_stress_dislocation, couple_stress_eringen, dislocation_couple_stress, stress,
    stress_dislocation, stress_eringen,
};
