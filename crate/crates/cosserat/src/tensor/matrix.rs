use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Vector3;
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Row-major 3×3 tensor, `self.0[i][j] = X_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Matrix3<T>(pub [[T; 3]; 3]);

impl<T: Scalar> Matrix3<T> {
    pub fn zero() -> Self {
        Self([[T::zero(); 3]; 3])
    }

    pub fn identity() -> Self {
        Self::diag(T::one(), T::one(), T::one())
    }

    pub fn diag(a: T, b: T, c: T) -> Self {
        let mut m = Self::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> T) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    /// Checked constructor: rejects NaN and infinite entries.
    pub fn try_from_rows(rows: [[T; 3]; 3]) -> Result<Self> {
        let m = Self(rows);
        m.check_finite()?;
        Ok(m)
    }

    pub fn check_finite(&self) -> Result<()> {
        if self.0.iter().flatten().all(|x| x.is_finite_value()) {
            Ok(())
        } else {
            Err(Error::InvalidInput("matrix has non-finite entries".into()))
        }
    }

    /// `a ⊗ b`.
    pub fn outer(a: &Vector3<T>, b: &Vector3<T>) -> Self {
        Self::from_fn(|i, j| a.0[i] * b.0[j])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn trace(&self) -> T {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn sym(&self) -> Self {
        let h = T::frac(1, 2);
        Self::from_fn(|i, j| h * (self.0[i][j] + self.0[j][i]))
    }

    pub fn skew(&self) -> Self {
        let h = T::frac(1, 2);
        Self::from_fn(|i, j| h * (self.0[i][j] - self.0[j][i]))
    }

    pub fn dev(&self) -> Self {
        let t = self.trace() / T::int(3);
        let mut m = *self;
        for i in 0..3 {
            m.0[i][i] -= t;
        }
        m
    }

    pub fn dev_sym(&self) -> Self {
        self.sym().dev()
    }

    /// Frobenius inner product `⟨X, Y⟩ = tr(X Yᵀ)`.
    pub fn inner(&self, o: &Self) -> T {
        let mut s = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                s += self.0[i][j] * o.0[i][j];
            }
        }
        s
    }

    pub fn norm_sq(&self) -> T {
        self.inner(self)
    }

    pub fn scale(&self, s: T) -> Self {
        Self(self.0.map(|r| r.map(|x| x * s)))
    }

    pub fn mul_vec(&self, v: &Vector3<T>) -> Vector3<T> {
        Vector3([0, 1, 2].map(|i| self.0[i][0] * v.0[0] + self.0[i][1] * v.0[1] + self.0[i][2] * v.0[2]))
    }

    pub fn det(&self) -> T {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn max_abs(&self) -> T {
        self.0
            .iter()
            .flatten()
            .fold(T::zero(), |m, x| if x.magnitude() > m { x.magnitude() } else { m })
    }

    pub fn row(&self, i: usize) -> Vector3<T> {
        Vector3(self.0[i])
    }
}

impl<T: Real> Matrix3<T> {
    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }
}

impl<T> Index<(usize, usize)> for Matrix3<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.0[i][j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix3<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.0[i][j]
    }
}

impl<T: Scalar> Add for Matrix3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + o.0[i][j])
    }
}

impl<T: Scalar> Sub for Matrix3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - o.0[i][j])
    }
}

impl<T: Scalar> Neg for Matrix3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T: Scalar> Mul for Matrix3<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][0] * o.0[0][j] + self.0[i][1] * o.0[1][j] + self.0[i][2] * o.0[2][j])
    }
}

impl<T: Scalar> Mul<T> for Matrix3<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        self.scale(s)
    }
}

impl<T: Scalar> Zero for Matrix3<T> {
    fn zero() -> Self {
        Matrix3::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_zero())
    }
}
