//! Cyclic Jacobi eigensolver for small symmetric matrices, and the
//! generalized problem `Q w = ω² M w` with diagonal positive `M`.

use super::Matrix3;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition of a symmetric N×N matrix.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as the columns of the second array. Rotations are skipped for
/// exactly-zero off-diagonal entries, so block-diagonal structure is kept exactly.
pub fn jacobi_eigen<T: Real, const N: usize>(a: [[T; N]; N]) -> ([T; N], [[T; N]; N]) {
    let mut a = a;
    let mut v = [[T::zero(); N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = T::one();
    }
    let scale = frobenius(&a);
    let tol = T::jacobi_tolerance() * scale;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal(&a) <= tol {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                if a[p][q] == T::zero() {
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.map(|i| a[i][i]);
    let mut vectors = [[T::zero(); N]; N];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..N {
            vectors[row][col] = v[row][src];
        }
    }
    (values, vectors)
}

fn rotate<T: Real, const N: usize>(a: &mut [[T; N]; N], v: &mut [[T; N]; N], p: usize, q: usize) {
    let two = T::one() + T::one();
    let theta = (a[q][q] - a[p][p]) / (two * a[p][q]);
    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
    let t = if theta == T::zero() { T::one() } else { t };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    for k in 0..N {
        let akp = a[k][p];
        let akq = a[k][q];
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for k in 0..N {
        let apk = a[p][k];
        let aqk = a[q][k];
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    a[p][q] = T::zero();
    a[q][p] = T::zero();
    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

fn frobenius<T: Real, const N: usize>(a: &[[T; N]; N]) -> T {
    a.iter().flatten().fold(T::zero(), |s, &x| s + x * x).sqrt()
}

fn off_diagonal<T: Real, const N: usize>(a: &[[T; N]; N]) -> T {
    let mut s = T::zero();
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i != j {
                s = s + x * x;
            }
        }
    }
    s.sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymEigen<T> {
    /// Ascending.
    pub values: [T; 3],
    /// Orthonormal eigenvectors as columns.
    pub vectors: Matrix3<T>,
}

pub fn sym_eigen<T: Real>(s: &Matrix3<T>) -> Result<SymEigen<T>> {
    s.check_finite()?;
    let asym = (*s - s.transpose()).norm();
    if asym > T::structural_tolerance() * s.norm() {
        return Err(Error::InvalidInput(format!("matrix is not symmetric (|S - S^T| = {asym:?})")));
    }
    let (values, vectors) = jacobi_eigen(s.sym().0);
    Ok(SymEigen { values, vectors: Matrix3(vectors) })
}

/// Generalized eigenpairs of `(Q, M)` for an N×N symmetric `Q` and diagonal positive `M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenEigenPairs<T, const N: usize> {
    /// ω², ascending.
    pub values: [T; N],
    /// Columns `w_i` with `w_iᵀ M w_j = δ_ij`.
    pub vectors: [[T; N]; N],
}

impl<T: Real, const N: usize> GenEigenPairs<T, N> {
    pub fn vector(&self, i: usize) -> [T; N] {
        std::array::from_fn(|r| self.vectors[r][i])
    }
}

/// Reduces `Q w = ω² M w` by the congruence `M^(-1/2) Q M^(-1/2)`.
pub fn gen_eigen_pairs<T: Real, const N: usize>(q: &[[T; N]; N], mass: &[T; N]) -> Result<GenEigenPairs<T, N>> {
    for (i, &m) in mass.iter().enumerate() {
        if !(m > T::zero()) || !m.is_finite() {
            return Err(Error::InvalidMass(format!("mass entry {i} = {m:?} must be finite and positive")));
        }
    }
    if q.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput("Q has non-finite entries".into()));
    }
    let scale = frobenius(q);
    for i in 0..N {
        for j in (i + 1)..N {
            if (q[i][j] - q[j][i]).abs() > T::structural_tolerance() * scale {
                return Err(Error::InvalidInput("Q is not symmetric".into()));
            }
        }
    }
    let inv_sqrt: [T; N] = mass.map(|m| T::one() / m.sqrt());
    let two = T::one() + T::one();
    let c: [[T; N]; N] =
        std::array::from_fn(|i| std::array::from_fn(|j| (q[i][j] + q[j][i]) / two * inv_sqrt[i] * inv_sqrt[j]));
    let (values, v) = jacobi_eigen(c);
    let vectors = std::array::from_fn(|i| std::array::from_fn(|j| v[i][j] * inv_sqrt[i]));
    Ok(GenEigenPairs { values, vectors })
}

/// Generalized eigenvalues ω² (ascending) of `(Q, M)` with `M` diagonal positive.
pub fn gen_eigen_diag<T: Real>(q: &Matrix3<T>, m: &Matrix3<T>) -> Result<[T; 3]> {
    for i in 0..3 {
        for j in 0..3 {
            if i != j && m[(i, j)] != T::zero() {
                return Err(Error::InvalidMass("mass matrix must be diagonal".into()));
            }
        }
    }
    let mass = [m[(0, 0)], m[(1, 1)], m[(2, 2)]];
    Ok(gen_eigen_pairs(&q.0, &mass)?.values)
}
