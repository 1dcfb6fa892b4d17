use serde::Serialize;

use super::branches::{hellmann_feynman, BlockSolve, Branch};
use super::medium::{asymptotic_velocities, propagation_derivatives, AsymptoticVelocities, WaveMedium};
use crate::error::{Error, Result};

/// Relative tolerance below zero for an ω² to still count as real.
pub const REAL_TOLERANCE: f64 = 1e-12;

/// One branch over the whole grid. `real[i] = false` marks an imaginary
/// frequency; `omega[i]` then holds `|ω|` and both velocities are NaN.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchSeries {
    pub branch: Branch,
    pub omega: Vec<f64>,
    pub omega_sq: Vec<f64>,
    pub phase_velocity: Vec<f64>,
    pub group_velocity: Vec<f64>,
    pub real: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DispersionResult {
    pub k_grid: Vec<f64>,
    /// In [`Branch::ALL`] order.
    pub branches: Vec<BranchSeries>,
    pub cutoff_frequency: f64,
    pub asymptotic: AsymptoticVelocities,
}

/// One CSV record: `k, branch_label, omega, omega_sq, phase_velocity, group_velocity, real_flag`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionRow {
    pub k: f64,
    pub branch: Branch,
    pub omega: f64,
    pub omega_sq: f64,
    pub phase_velocity: f64,
    pub group_velocity: f64,
    pub real: bool,
}

impl DispersionResult {
    pub fn series(&self, branch: Branch) -> &BranchSeries {
        &self.branches[branch.index()]
    }

    /// Rows ordered by wavenumber, then branch.
    pub fn rows(&self) -> Vec<DispersionRow> {
        let mut rows = Vec::with_capacity(self.k_grid.len() * 6);
        for (i, &k) in self.k_grid.iter().enumerate() {
            for s in &self.branches {
                rows.push(DispersionRow {
                    k,
                    branch: s.branch,
                    omega: s.omega[i],
                    omega_sq: s.omega_sq[i],
                    phase_velocity: s.phase_velocity[i],
                    group_velocity: s.group_velocity[i],
                    real: s.real[i],
                });
            }
        }
        rows
    }
}

fn check_grid(k_grid: &[f64], increasing: bool) -> Result<()> {
    if k_grid.is_empty() {
        return Err(Error::InvalidInput("empty k grid".into()));
    }
    if let Some(k) = k_grid.iter().find(|k| !(**k >= 0.0 && k.is_finite())) {
        return Err(Error::InvalidInput(format!("wavenumber {k} must be finite and non-negative")));
    }
    if increasing && k_grid.windows(2).any(|p| p[1] <= p[0]) {
        return Err(Error::InvalidInput("k grid must be strictly increasing".into()));
    }
    Ok(())
}

/// `n` log-spaced wavenumbers from `k_min` to `k_max` inclusive.
pub fn log_grid(k_min: f64, k_max: f64, n: usize) -> Result<Vec<f64>> {
    if !(k_min > 0.0 && k_max > k_min && k_max.is_finite()) || n < 2 {
        return Err(Error::InvalidInput(format!("invalid log grid [{k_min}, {k_max}] with {n} points")));
    }
    let (a, b) = (k_min.ln(), k_max.ln());
    Ok((0..n)
        .map(|i| match i {
            0 => k_min,
            _ if i == n - 1 => k_max,
            _ => (a + (b - a) * i as f64 / (n - 1) as f64).exp(),
        })
        .collect())
}

/// Best label permutation for one block: maximises `Σ |w_prevᵀ M w_new|`.
fn match_block(prev: &[[f64; 3]; 3], prev_labels: &[Branch; 3], solve: &BlockSolve, block: usize) -> [Branch; 3] {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let m = solve.mass(block);
    let overlap = |p: usize, n: usize| {
        let v = solve.pairs[block].vector(n);
        (0..3).map(|c| prev[p][c] * m[c] * v[c]).sum::<f64>().abs()
    };
    let best = PERMS
        .iter()
        .max_by(|a, b| {
            let sa: f64 = (0..3).map(|p| overlap(p, a[p])).sum();
            let sb: f64 = (0..3).map(|p| overlap(p, b[p])).sum();
            sa.total_cmp(&sb)
        })
        .unwrap_or(&PERMS[0]);
    let mut labels = *prev_labels;
    for p in 0..3 {
        labels[best[p]] = prev_labels[p];
    }
    labels
}

/// Sweeps the grid; labels come from polarisation at the first point and are
/// carried along by eigenvector overlap between neighbouring points.
pub fn dispersion_sweep(w: &WaveMedium, k_grid: &[f64]) -> Result<DispersionResult> {
    check_grid(k_grid, true)?;
    let solves = k_grid.iter().map(|&k| BlockSolve::new(w, k)).collect::<Result<Vec<_>>>()?;
    let n = k_grid.len();
    let mut branches: Vec<BranchSeries> = Branch::ALL
        .iter()
        .map(|&branch| BranchSeries {
            branch,
            omega: vec![0.0; n],
            omega_sq: vec![0.0; n],
            phase_velocity: vec![0.0; n],
            group_velocity: vec![0.0; n],
            real: vec![true; n],
        })
        .collect();
    let mut labels = solves[0].rule_labels(w.moduli().mu_c);
    for (i, (solve, &k)) in solves.iter().zip(k_grid).enumerate() {
        if i > 0 {
            let prev = &solves[i - 1];
            labels = std::array::from_fn(|block| {
                let vectors = std::array::from_fn(|j| prev.pairs[block].vector(j));
                match_block(&vectors, &labels[block], solve, block)
            });
        }
        let (dq1, dq2) = propagation_derivatives(w, k);
        for block in 0..2 {
            let dq = if block == 0 { &dq1 } else { &dq2 };
            let threshold = solve.real_threshold(block);
            for j in 0..3 {
                let s = &mut branches[labels[block][j].index()];
                let omega_sq = solve.pairs[block].values[j];
                let real = omega_sq >= threshold;
                let omega = if real { omega_sq.max(0.0).sqrt() } else { omega_sq.abs().sqrt() };
                s.omega_sq[i] = omega_sq;
                s.omega[i] = omega;
                s.real[i] = real;
                s.phase_velocity[i] = if real && k > 0.0 { omega / k } else { f64::NAN };
                s.group_velocity[i] = if real && omega > 0.0 {
                    hellmann_feynman(dq, solve.mass(block), &solve.pairs[block].vector(j)) / (2.0 * omega)
                } else {
                    f64::NAN
                };
            }
        }
    }
    let asymptotic = asymptotic_velocities(w);
    Ok(DispersionResult { k_grid: k_grid.to_vec(), branches, cutoff_frequency: asymptotic.cutoff, asymptotic })
}

/// True iff every ω² on the grid is at least `−1e−12·‖Q‖/‖M‖`.
pub fn real_wave_scan(w: &WaveMedium, k_grid: &[f64]) -> Result<bool> {
    check_grid(k_grid, false)?;
    for &k in k_grid {
        let solve = BlockSolve::new(w, k)?;
        for block in 0..2 {
            let threshold = solve.real_threshold(block);
            if solve.pairs[block].values.iter().any(|&v| v < threshold) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
