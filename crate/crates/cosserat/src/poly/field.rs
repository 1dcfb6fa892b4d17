use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Matrix3, SkewMatrix3, Vector3};

pub const MAX_DEGREE: u32 = 6;

/// Exponents `(i, j, k)` of `x₁ⁱ x₂ʲ x₃ᵏ`.
pub type Monomial = [u8; 3];

fn degree_of(m: &Monomial) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

/// Polynomial in three variables; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyScalarField<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Default for PolyScalarField<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> PolyScalarField<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_terms_unchecked([([0, 0, 0], c)])
    }

    /// The coordinate function `x_axis`.
    pub fn coordinate(axis: usize) -> Self {
        let mut e = [0u8; 3];
        e[axis] = 1;
        Self::from_terms_unchecked([(e, T::one())])
    }

    pub fn monomial(exponents: Monomial, c: T) -> Result<Self> {
        Self::from_terms([(exponents, c)])
    }

    /// Sums repeated monomials; rejects degrees above [`MAX_DEGREE`] and non-finite coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, T)>) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            if degree_of(&m) > MAX_DEGREE {
                return Err(Error::InvalidInput(format!("monomial {m:?} exceeds max degree {MAX_DEGREE}")));
            }
            if !c.is_finite_value() {
                return Err(Error::InvalidInput(format!("non-finite coefficient on {m:?}")));
            }
            *out.entry(m).or_insert_with(T::zero) += c;
        }
        Ok(Self::normalized(out))
    }

    fn from_terms_unchecked(terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            *out.entry(m).or_insert_with(T::zero) += c;
        }
        Self::normalized(out)
    }

    fn normalized(mut terms: BTreeMap<Monomial, T>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> T {
        self.terms.get(m).copied().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for constants and for the zero field.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(degree_of).max().unwrap_or(0)
    }

    pub fn max_abs_coefficient(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |m, c| if c.magnitude() > m { c.magnitude() } else { m })
    }

    pub fn scale(&self, s: T) -> Self {
        Self::normalized(self.terms.iter().map(|(m, &c)| (*m, c * s)).collect())
    }

    pub fn derivative(&self, axis: usize) -> Self {
        let mut out = BTreeMap::new();
        for (m, &c) in &self.terms {
            let e = m[axis];
            if e == 0 {
                continue;
            }
            let mut d = *m;
            d[axis] = e - 1;
            *out.entry(d).or_insert_with(T::zero) += c * T::int(e as i64);
        }
        Self::normalized(out)
    }

    pub fn gradient(&self) -> PolyVectorField<T> {
        PolyVectorField([0, 1, 2].map(|j| self.derivative(j)))
    }

    /// Product; fails if the result would exceed [`MAX_DEGREE`].
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if !self.is_zero() && !o.is_zero() && self.degree() + o.degree() > MAX_DEGREE {
            return Err(Error::InvalidInput(format!(
                "product degree {} exceeds max degree {MAX_DEGREE}",
                self.degree() + o.degree()
            )));
        }
        let mut out = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &o.terms {
                let m = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                *out.entry(m).or_insert_with(T::zero) += ca * cb;
            }
        }
        Ok(Self::normalized(out))
    }

    pub fn eval(&self, p: &Vector3<T>) -> T {
        let mut pow = [[T::one(); MAX_DEGREE as usize + 1]; 3];
        for (axis, row) in pow.iter_mut().enumerate() {
            for e in 1..row.len() {
                row[e] = row[e - 1] * p.0[axis];
            }
        }
        let mut s = T::zero();
        for (m, &c) in &self.terms {
            s += c * pow[0][m[0] as usize] * pow[1][m[1] as usize] * pow[2][m[2] as usize];
        }
        s
    }

    fn combine(&self, o: &Self, sign: T) -> Self {
        let mut out = self.terms.clone();
        for (m, &c) in &o.terms {
            *out.entry(*m).or_insert_with(T::zero) += sign * c;
        }
        Self::normalized(out)
    }
}

macro_rules! field_ops {
    ($ty:ident, $add:expr, $sub:expr, $neg:expr) => {
        impl<T: Scalar> Add<&$ty<T>> for &$ty<T> {
            type Output = $ty<T>;
            fn add(self, o: &$ty<T>) -> $ty<T> {
                $add(self, o)
            }
        }
        impl<T: Scalar> Add for $ty<T> {
            type Output = $ty<T>;
            fn add(self, o: $ty<T>) -> $ty<T> {
                $add(&self, &o)
            }
        }
        impl<T: Scalar> Sub<&$ty<T>> for &$ty<T> {
            type Output = $ty<T>;
            fn sub(self, o: &$ty<T>) -> $ty<T> {
                $sub(self, o)
            }
        }
        impl<T: Scalar> Sub for $ty<T> {
            type Output = $ty<T>;
            fn sub(self, o: $ty<T>) -> $ty<T> {
                $sub(&self, &o)
            }
        }
        impl<T: Scalar> Neg for &$ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                $neg(self)
            }
        }
        impl<T: Scalar> Neg for $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                $neg(&self)
            }
        }
    };
}

field_ops!(
    PolyScalarField,
    |a: &PolyScalarField<T>, b| a.combine(b, T::one()),
    |a: &PolyScalarField<T>, b| a.combine(b, -T::one()),
    |a: &PolyScalarField<T>| a.scale(-T::one())
);

/// Vector field `(v₁, v₂, v₃)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyVectorField<T>(pub [PolyScalarField<T>; 3]);

impl<T: Scalar> PolyVectorField<T> {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| PolyScalarField::zero()))
    }

    pub fn constant(v: &Vector3<T>) -> Self {
        Self(v.0.map(PolyScalarField::constant))
    }

    /// The position field `x ↦ x`.
    pub fn position() -> Self {
        Self([0, 1, 2].map(PolyScalarField::coordinate))
    }

    pub fn eval(&self, p: &Vector3<T>) -> Vector3<T> {
        Vector3(std::array::from_fn(|i| self.0[i].eval(p)))
    }

    pub fn scale(&self, s: T) -> Self {
        Self(std::array::from_fn(|i| self.0[i].scale(s)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(PolyScalarField::is_zero)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(PolyScalarField::degree).max().unwrap_or(0)
    }

    pub fn max_abs_coefficient(&self) -> T {
        max_of(self.0.iter().map(PolyScalarField::max_abs_coefficient))
    }
}

field_ops!(
    PolyVectorField,
    |a: &PolyVectorField<T>, b: &PolyVectorField<T>| PolyVectorField(std::array::from_fn(|i| &a.0[i] + &b.0[i])),
    |a: &PolyVectorField<T>, b: &PolyVectorField<T>| PolyVectorField(std::array::from_fn(|i| &a.0[i] - &b.0[i])),
    |a: &PolyVectorField<T>| a.scale(-T::one())
);

/// Matrix field; `self.0[i][j]` is the (i, j) component.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrixField<T>(pub [[PolyScalarField<T>; 3]; 3]);

impl<T: Scalar> PolyMatrixField<T> {
    pub fn from_fn(f: impl Fn(usize, usize) -> PolyScalarField<T>) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| PolyScalarField::zero())
    }

    pub fn constant(m: &Matrix3<T>) -> Self {
        Self::from_fn(|i, j| PolyScalarField::constant(m.0[i][j]))
    }

    /// `f · Id`.
    pub fn spherical(f: &PolyScalarField<T>) -> Self {
        Self::from_fn(|i, j| if i == j { f.clone() } else { PolyScalarField::zero() })
    }

    pub fn from_rows(rows: [PolyVectorField<T>; 3]) -> Self {
        Self::from_fn(|i, j| rows[i].0[j].clone())
    }

    pub fn row(&self, i: usize) -> PolyVectorField<T> {
        PolyVectorField(self.0[i].clone())
    }

    pub fn eval(&self, p: &Vector3<T>) -> Matrix3<T> {
        Matrix3::from_fn(|i, j| self.0[i][j].eval(p))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn trace(&self) -> PolyScalarField<T> {
        &(&self.0[0][0] + &self.0[1][1]) + &self.0[2][2]
    }

    pub fn scale(&self, s: T) -> Self {
        Self::from_fn(|i, j| self.0[i][j].scale(s))
    }

    pub fn sym(&self) -> Self {
        let h = T::frac(1, 2);
        Self::from_fn(|i, j| (&self.0[i][j] + &self.0[j][i]).scale(h))
    }

    pub fn skew(&self) -> Self {
        let h = T::frac(1, 2);
        Self::from_fn(|i, j| (&self.0[i][j] - &self.0[j][i]).scale(h))
    }

    pub fn dev(&self) -> Self {
        let third = self.trace().scale(T::frac(1, 3));
        Self::from_fn(|i, j| if i == j { &self.0[i][j] - &third } else { self.0[i][j].clone() })
    }

    /// Axial vector of the skew part, `-½ ε_ijk X_ij`.
    pub fn axl_skew(&self) -> PolyVectorField<T> {
        let h = T::frac(1, 2);
        let m = &self.0;
        PolyVectorField([
            (&m[2][1] - &m[1][2]).scale(h),
            (&m[0][2] - &m[2][0]).scale(h),
            (&m[1][0] - &m[0][1]).scale(h),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(PolyScalarField::is_zero)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().flatten().map(PolyScalarField::degree).max().unwrap_or(0)
    }

    pub fn max_abs_coefficient(&self) -> T {
        max_of(self.0.iter().flatten().map(PolyScalarField::max_abs_coefficient))
    }
}

field_ops!(
    PolyMatrixField,
    |a: &PolyMatrixField<T>, b: &PolyMatrixField<T>| PolyMatrixField::from_fn(|i, j| &a.0[i][j] + &b.0[i][j]),
    |a: &PolyMatrixField<T>, b: &PolyMatrixField<T>| PolyMatrixField::from_fn(|i, j| &a.0[i][j] - &b.0[i][j]),
    |a: &PolyMatrixField<T>| a.scale(-T::one())
);

/// Skew-symmetric matrix field stored by its axial vector field, so that it
/// is skew at every point by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySkewField<T> {
    pub axial: PolyVectorField<T>,
}

impl<T: Scalar> PolySkewField<T> {
    pub fn from_axial(axial: PolyVectorField<T>) -> Self {
        Self { axial }
    }

    /// Accepts a matrix field only if it is exactly skew on coefficients
    /// (up to the scalar's structural tolerance relative to the largest coefficient).
    pub fn from_matrix_field(p: &PolyMatrixField<T>) -> Result<Self> {
        let sym = p.sym();
        let tol = T::structural_tolerance() * p.max_abs_coefficient();
        if sym.max_abs_coefficient() > tol {
            return Err(Error::InvalidInput("matrix field is not skew-symmetric".into()));
        }
        Ok(Self { axial: p.axl_skew() })
    }

    pub fn materialize(&self) -> PolyMatrixField<T> {
        let [a1, a2, a3] = &self.axial.0;
        let z = PolyScalarField::zero;
        PolyMatrixField([[z(), -a3, a2.clone()], [a3.clone(), z(), -a1], [-a2, a1.clone(), z()]])
    }

    pub fn eval(&self, p: &Vector3<T>) -> SkewMatrix3<T> {
        SkewMatrix3::from_axial(self.axial.eval(p))
    }
}

fn max_of<T: Scalar>(it: impl Iterator<Item = T>) -> T {
    it.fold(T::zero(), |m, x| if x > m { x } else { m })
}

/// `(Dv)_ij = ∂v_i/∂x_j`.
pub fn vector_grad<T: Scalar>(v: &PolyVectorField<T>) -> PolyMatrixField<T> {
    PolyMatrixField::from_fn(|i, j| v.0[i].derivative(j))
}

/// `(curl v)_i = ε_ijk ∂_j v_k`.
pub fn vector_curl<T: Scalar>(v: &PolyVectorField<T>) -> PolyVectorField<T> {
    let d = |i: usize, j: usize| v.0[i].derivative(j);
    PolyVectorField([&d(2, 1) - &d(1, 2), &d(0, 2) - &d(2, 0), &d(1, 0) - &d(0, 1)])
}

pub fn vector_div<T: Scalar>(v: &PolyVectorField<T>) -> PolyScalarField<T> {
    &(&v.0[0].derivative(0) + &v.0[1].derivative(1)) + &v.0[2].derivative(2)
}

/// Row-wise curl: row i of `Curl P` is `curl` of row i of `P`.
pub fn matrix_curl<T: Scalar>(p: &PolyMatrixField<T>) -> PolyMatrixField<T> {
    PolyMatrixField::from_rows([0, 1, 2].map(|i| vector_curl(&p.row(i))))
}

/// Row-wise divergence, `(Div P)_i = ∂_j P_ij`.
pub fn matrix_div<T: Scalar>(p: &PolyMatrixField<T>) -> PolyVectorField<T> {
    PolyVectorField([0, 1, 2].map(|i| vector_div(&p.row(i))))
}
