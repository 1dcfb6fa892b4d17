//! Plane-wave dispersion along `e₁`: propagation matrices, labelled
//! branches, phase/group velocities, sweeps and the real-wave scan.

mod branches;
mod medium;
mod sweep;

pub use branches::{branch_frequencies, velocities, Branch, BranchSolution};
pub use medium::{
    asymptotic_velocities, full_propagation_matrix, isotropy_deviation, propagation_matrices, AsymptoticVelocities,
    PropagationMatrices, WaveMedium,
};
pub use sweep::{
    dispersion_sweep, log_grid, real_wave_scan, BranchSeries, DispersionResult, DispersionRow, REAL_TOLERANCE,
};
