use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Matrix3;

/// `ε_ijk`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// Third-order curvature `κ_{i[jk]}`, antisymmetric in `[jk]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mindlin3Tensor<T> {
    data: [[[T; 3]; 3]; 3],
}

impl<T: Scalar> Mindlin3Tensor<T> {
    /// Rejects data that is not exactly antisymmetric in the last two indices.
    pub fn new(data: [[[T; 3]; 3]; 3]) -> Result<Self> {
        for (i, d) in data.iter().enumerate() {
            for j in 0..3 {
                for k in 0..3 {
                    if d[j][k] != -d[k][j] {
                        return Err(Error::InvalidInput(format!(
                            "kappa[{i}][{j}][{k}] is not antisymmetric in its last two indices"
                        )));
                    }
                }
            }
        }
        Ok(Self { data })
    }

    /// `κ_{i[jk]} = ε_kjl 𝕶_li`.
    pub fn from_curvature(k: &Matrix3<T>) -> Self {
        let mut data = [[[T::zero(); 3]; 3]; 3];
        for (i, d) in data.iter_mut().enumerate() {
            for (j, row) in d.iter_mut().enumerate() {
                for (kk, slot) in row.iter_mut().enumerate() {
                    for l in 0..3 {
                        let e = levi_civita(kk, j, l);
                        if e != 0 {
                            *slot += T::int(e) * k[(l, i)];
                        }
                    }
                }
            }
        }
        Self { data }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.data[i][j][k]
    }

    /// `κ_{i[ik]} κ_{j[jk]}`.
    pub fn trace_contraction(&self) -> T {
        let mut s = T::zero();
        for k in 0..3 {
            let mut v = T::zero();
            for i in 0..3 {
                v += self.data[i][i][k];
            }
            s += v * v;
        }
        s
    }

    /// `κ_{i[jk]} κ_{i[jk]}`.
    pub fn full_contraction(&self) -> T {
        let mut s = T::zero();
        for x in self.data.iter().flatten().flatten() {
            s += *x * *x;
        }
        s
    }

    /// `κ_{i[jk]} κ_{j[ik]}`.
    pub fn cross_contraction(&self) -> T {
        let mut s = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    s += self.data[i][j][k] * self.data[j][i][k];
                }
            }
        }
        s
    }
}
