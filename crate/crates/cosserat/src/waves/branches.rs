use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::medium::{propagation_derivatives, propagation_matrices, PropagationMatrices, WaveMedium};
use crate::error::{Error, Result};
use crate::tensor::{gen_eigen_pairs, GenEigenPairs, Matrix3};

/// The six plane-wave branches. Block 1 carries `(u₁, u₂, ϑ₃)`, block 2 `(u₃, ϑ₁, ϑ₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    LongitudinalAcoustic,
    #[serde(rename = "shear-acoustic-1")]
    ShearAcoustic1,
    #[serde(rename = "rotational-optical-1")]
    RotationalOptical1,
    #[serde(rename = "shear-acoustic-2")]
    ShearAcoustic2,
    #[serde(rename = "rotational-optical-2")]
    RotationalOptical2,
    CompressionalRotationalOptical,
}

impl Branch {
    pub const ALL: [Branch; 6] = [
        Branch::LongitudinalAcoustic,
        Branch::ShearAcoustic1,
        Branch::RotationalOptical1,
        Branch::ShearAcoustic2,
        Branch::RotationalOptical2,
        Branch::CompressionalRotationalOptical,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Branch::LongitudinalAcoustic => "longitudinal-acoustic",
            Branch::ShearAcoustic1 => "shear-acoustic-1",
            Branch::RotationalOptical1 => "rotational-optical-1",
            Branch::ShearAcoustic2 => "shear-acoustic-2",
            Branch::RotationalOptical2 => "rotational-optical-2",
            Branch::CompressionalRotationalOptical => "compressional-rotational-optical",
        }
    }

    /// 0 for `(Q₁, M̂)`, 1 for `(Q₂, M̃)`.
    pub fn block(self) -> usize {
        match self {
            Branch::LongitudinalAcoustic | Branch::ShearAcoustic1 | Branch::RotationalOptical1 => 0,
            _ => 1,
        }
    }

    pub fn is_acoustic(self) -> bool {
        matches!(self, Branch::LongitudinalAcoustic | Branch::ShearAcoustic1 | Branch::ShearAcoustic2)
    }

    pub(crate) fn index(self) -> usize {
        Branch::ALL.iter().position(|&b| b == self).unwrap_or(0)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Branch::ALL
            .into_iter()
            .find(|b| b.label() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown branch '{s}'")))
    }
}

/// One labelled eigenpair at a fixed wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchSolution {
    pub branch: Branch,
    pub omega_sq: f64,
    /// `M`-normalised eigenvector in block coordinates.
    pub vector: [f64; 3],
    /// `‖(Q − ω²M)w‖ / (‖Q‖·‖w‖)`.
    pub residual: f64,
}

/// Per-block eigenpairs at one wavenumber.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BlockSolve {
    pub pm: PropagationMatrices,
    pub pairs: [GenEigenPairs<f64, 3>; 2],
}

impl BlockSolve {
    pub fn new(w: &WaveMedium, k: f64) -> Result<Self> {
        let pm = propagation_matrices(w, k)?;
        let pairs = [gen_eigen_pairs(&pm.q1.0, &pm.m1)?, gen_eigen_pairs(&pm.q2.0, &pm.m2)?];
        Ok(Self { pm, pairs })
    }

    pub fn q(&self, block: usize) -> &Matrix3<f64> {
        if block == 0 {
            &self.pm.q1
        } else {
            &self.pm.q2
        }
    }

    pub fn mass(&self, block: usize) -> &[f64; 3] {
        if block == 0 {
            &self.pm.m1
        } else {
            &self.pm.m2
        }
    }

    /// Tolerance below zero still counted as a real frequency.
    pub fn real_threshold(&self, block: usize) -> f64 {
        let m = self.mass(block);
        let m_norm = m.iter().map(|x| x * x).sum::<f64>().sqrt();
        -super::sweep::REAL_TOLERANCE * self.q(block).norm() / m_norm
    }

    pub fn residual(&self, block: usize, omega_sq: f64, v: &[f64; 3]) -> f64 {
        let q = self.q(block);
        let m = self.mass(block);
        let qv = q.mul_vec(&crate::tensor::Vector3(*v));
        let r: f64 = (0..3).map(|i| (qv[i] - omega_sq * m[i] * v[i]).powi(2)).sum::<f64>().sqrt();
        let v_norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let scale = q.norm() * v_norm;
        if scale > 0.0 {
            r / scale
        } else {
            r
        }
    }

    /// Labels by polarisation, using the k → 0 limits inside each coupled pair:
    /// the acoustic member is the one continuing ω² = 0.
    pub fn rule_labels(&self, mu_c: f64) -> [[Branch; 3]; 2] {
        let layouts = [
            (0usize, 1usize, Branch::LongitudinalAcoustic, Branch::ShearAcoustic1, Branch::RotationalOptical1),
            (1, 0, Branch::CompressionalRotationalOptical, Branch::ShearAcoustic2, Branch::RotationalOptical2),
        ];
        std::array::from_fn(|block| {
            let (pure, disp, pure_label, acoustic, optical) = layouts[block];
            let pairs = &self.pairs[block];
            let m = self.mass(block);
            let weight = |i: usize, c: usize| m[c] * pairs.vectors[c][i] * pairs.vectors[c][i];
            let p = (0..3).max_by(|&a, &b| weight(a, pure).total_cmp(&weight(b, pure))).unwrap_or(0);
            let rest: Vec<usize> = (0..3).filter(|&i| i != p).collect();
            let (lo, hi) = (rest[0], rest[1]);
            let acoustic_idx = if mu_c > 0.0 {
                lo
            } else if mu_c < 0.0 {
                hi
            } else if weight(lo, disp) >= weight(hi, disp) {
                lo
            } else {
                hi
            };
            let mut labels = [optical; 3];
            labels[p] = pure_label;
            labels[acoustic_idx] = acoustic;
            labels
        })
    }

    pub fn solutions(&self, labels: &[[Branch; 3]; 2]) -> [BranchSolution; 6] {
        let mut out = [BranchSolution { branch: Branch::LongitudinalAcoustic, omega_sq: 0.0, vector: [0.0; 3], residual: 0.0 }; 6];
        for block in 0..2 {
            for i in 0..3 {
                let branch = labels[block][i];
                let omega_sq = self.pairs[block].values[i];
                let vector = self.pairs[block].vector(i);
                out[branch.index()] =
                    BranchSolution { branch, omega_sq, vector, residual: self.residual(block, omega_sq, &vector) };
            }
        }
        out
    }
}

/// `dω²/dk = wᵀ(dQ/dk)w / (wᵀMw)`.
pub(crate) fn hellmann_feynman(dq: &Matrix3<f64>, mass: &[f64; 3], v: &[f64; 3]) -> f64 {
    let vv = crate::tensor::Vector3(*v);
    let num = vv.dot(&dq.mul_vec(&vv));
    let den: f64 = (0..3).map(|i| mass[i] * v[i] * v[i]).sum();
    num / den
}

/// The six ω² at wavenumber `k`, in [`Branch::ALL`] order.
pub fn branch_frequencies(w: &WaveMedium, k: f64) -> Result<[BranchSolution; 6]> {
    let solve = BlockSolve::new(w, k)?;
    Ok(solve.solutions(&solve.rule_labels(w.moduli().mu_c)))
}

/// `(phase, group)` velocities of one branch: `ω/k` and the Hellmann–Feynman `dω/dk`.
pub fn velocities(w: &WaveMedium, k: f64, branch: Branch) -> Result<(f64, f64)> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidInput(format!("velocities need k > 0, got {k}")));
    }
    let sol = branch_frequencies(w, k)?[branch.index()];
    if !(sol.omega_sq > 0.0) {
        return Err(Error::EvanescentBranch(sol.omega_sq));
    }
    let omega = sol.omega_sq.sqrt();
    let (dq1, dq2) = propagation_derivatives(w, k);
    let pm = propagation_matrices(w, k)?;
    let (dq, mass) = if branch.block() == 0 { (dq1, pm.m1) } else { (dq2, pm.m2) };
    let group = hellmann_feynman(&dq, &mass, &sol.vector) / (2.0 * omega);
    Ok((omega / k, group))
}
