//! Fixed-size complex linear algebra: 2×2 matrices, 2-vectors, and a small
//! dense solver with partial pivoting.
//!
//! Everything here is plain value types over `Complex64`; all operations are
//! pure and allocation-free except for [`DenseMatC`].

use crate::error::{Error, Result};
pub use num_complex::Complex64 as C64;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Shorthand complex constructor.
pub const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub const ZERO: C64 = c(0.0, 0.0);
pub const ONE: C64 = c(1.0, 0.0);
pub const I: C64 = c(0.0, 1.0);

/// Relative singularity threshold for 2×2 inversion: a matrix counts as
/// singular when |det| ≤ EPS_SINGULAR · (max entry magnitude)². The quadratic
/// scaling keeps the test invariant under m ↦ s·m.
pub const EPS_SINGULAR: f64 = 1e-14;

/// Column 2-vector over ℂ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2C {
    pub a: C64,
    pub b: C64,
}

/// Row 2-vector over ℂ, produced by [`Vec2C::dagger`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowVec2C {
    pub a: C64,
    pub b: C64,
}

impl Vec2C {
    pub const fn new(a: C64, b: C64) -> Self {
        Self { a, b }
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.norm_sqr() == 0.0
    }

    /// Hermitian transpose ψ†: componentwise conjugate in row form.
    pub fn dagger(&self) -> RowVec2C {
        RowVec2C {
            a: self.a.conj(),
            b: self.b.conj(),
        }
    }

    /// σ₂·conj(v) with σ₂ = [[0, −i], [i, 0]]; orthogonal to `v` under the
    /// Hermitian inner product, and an involution up to sign: applying it
    /// twice gives exactly −v.
    pub fn orthogonal_companion(&self) -> Vec2C {
        Vec2C::new(-I * self.b.conj(), I * self.a.conj())
    }

    pub fn scale(&self, s: C64) -> Vec2C {
        Vec2C::new(self.a * s, self.b * s)
    }
}

impl RowVec2C {
    /// Row–column contraction (the Hermitian inner product when the row came
    /// from `dagger`): ψ†φ.
    pub fn dot(&self, v: Vec2C) -> C64 {
        self.a * v.a + self.b * v.b
    }
}

impl Add for Vec2C {
    type Output = Vec2C;
    fn add(self, rhs: Vec2C) -> Vec2C {
        Vec2C::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Vec2C {
    type Output = Vec2C;
    fn sub(self, rhs: Vec2C) -> Vec2C {
        Vec2C::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Vec2C {
    type Output = Vec2C;
    fn neg(self) -> Vec2C {
        Vec2C::new(-self.a, -self.b)
    }
}

/// 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C {
    pub m11: C64,
    pub m12: C64,
    pub m21: C64,
    pub m22: C64,
}

impl Mat2C {
    pub const fn new(m11: C64, m12: C64, m21: C64, m22: C64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn diag(d1: C64, d2: C64) -> Self {
        Self::new(d1, ZERO, ZERO, d2)
    }

    /// Rank-one product v·w (column times row).
    pub fn outer(v: Vec2C, w: RowVec2C) -> Self {
        Self::new(v.a * w.a, v.a * w.b, v.b * w.a, v.b * w.b)
    }

    pub fn det(&self) -> C64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(&self) -> C64 {
        self.m11 + self.m22
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new(
            self.m11.conj(),
            self.m21.conj(),
            self.m12.conj(),
            self.m22.conj(),
        )
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(
            self.m11.conj(),
            self.m12.conj(),
            self.m21.conj(),
            self.m22.conj(),
        )
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> f64 {
        self.m11
            .norm()
            .max(self.m12.norm())
            .max(self.m21.norm())
            .max(self.m22.norm())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.m11 * s, self.m12 * s, self.m21 * s, self.m22 * s)
    }

    /// Cofactor inverse; fails when |det| falls under the scale-invariant
    /// singularity threshold.
    pub fn inv(&self) -> Result<Self> {
        let det = self.det();
        let scale = self.max_norm();
        let threshold = EPS_SINGULAR * scale * scale;
        if det.norm() <= threshold {
            return Err(Error::SingularMatrix {
                det_mag: det.norm(),
                threshold,
            });
        }
        let inv_det = ONE / det;
        Ok(Self::new(
            self.m22 * inv_det,
            -self.m12 * inv_det,
            -self.m21 * inv_det,
            self.m11 * inv_det,
        ))
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;
    fn mul(self, r: Mat2C) -> Mat2C {
        Mat2C::new(
            self.m11 * r.m11 + self.m12 * r.m21,
            self.m11 * r.m12 + self.m12 * r.m22,
            self.m21 * r.m11 + self.m22 * r.m21,
            self.m21 * r.m12 + self.m22 * r.m22,
        )
    }
}

impl Mul<Vec2C> for Mat2C {
    type Output = Vec2C;
    fn mul(self, v: Vec2C) -> Vec2C {
        Vec2C::new(
            self.m11 * v.a + self.m12 * v.b,
            self.m21 * v.a + self.m22 * v.b,
        )
    }
}

impl Add for Mat2C {
    type Output = Mat2C;
    fn add(self, r: Mat2C) -> Mat2C {
        Mat2C::new(
            self.m11 + r.m11,
            self.m12 + r.m12,
            self.m21 + r.m21,
            self.m22 + r.m22,
        )
    }
}

impl Sub for Mat2C {
    type Output = Mat2C;
    fn sub(self, r: Mat2C) -> Mat2C {
        Mat2C::new(
            self.m11 - r.m11,
            self.m12 - r.m12,
            self.m21 - r.m21,
            self.m22 - r.m22,
        )
    }
}

/// Square dense complex matrix of side `n ≤ DIM_CAP`, row-major.
///
/// Backs the reflectionless inverse-scattering system (size 2N); the cap is a
/// guard against accidentally huge allocations, not a hard algorithmic limit.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatC {
    n: usize,
    data: Vec<C64>,
}

/// Largest admitted dense dimension.
pub const DIM_CAP: usize = 64;

impl DenseMatC {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 || n > DIM_CAP {
            return Err(Error::DimensionMismatch(format!(
                "dense dimension {n} outside 1..={DIM_CAP}"
            )));
        }
        Ok(Self {
            n,
            data: vec![ZERO; n * n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Solve a·x = rhs by LU factorization with partial pivoting.
    ///
    /// The entries 1/(λ_ℓ* − λ_j) of the scattering system can be badly
    /// scaled for nearby eigenvalues, so row pivoting is not optional here.
    pub fn solve(&self, rhs: &[C64]) -> Result<Vec<C64>> {
        let n = self.n;
        if rhs.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} does not match dimension {n}",
                rhs.len()
            )));
        }
        let mut a = self.data.clone();
        let mut x: Vec<C64> = rhs.to_vec();
        let scale = a.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
        let threshold = EPS_SINGULAR * scale;

        for k in 0..n {
            // pivot: largest magnitude in column k at or below the diagonal
            let mut p = k;
            let mut best = a[k * n + k].norm();
            for i in (k + 1)..n {
                let mag = a[i * n + k].norm();
                if mag > best {
                    best = mag;
                    p = i;
                }
            }
            if best <= threshold {
                return Err(Error::SingularMatrix {
                    det_mag: best,
                    threshold,
                });
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                x.swap(k, p);
            }
            let pivot = a[k * n + k];
            for i in (k + 1)..n {
                let factor = a[i * n + k] / pivot;
                a[i * n + k] = factor;
                for j in (k + 1)..n {
                    let akj = a[k * n + j];
                    a[i * n + j] -= factor * akj;
                }
                let xk = x[k];
                x[i] -= factor * xk;
            }
        }
        // back substitution
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in (i + 1)..n {
                s -= a[i * n + j] * x[j];
            }
            x[i] = s / a[i * n + i];
        }
        Ok(x)
    }

    /// Residual ‖a·x − rhs‖∞, for post-solve checks.
    pub fn residual(&self, x: &[C64], rhs: &[C64]) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for (i, r) in rhs.iter().enumerate().take(n) {
            let mut s = -r;
            for (j, xj) in x.iter().enumerate().take(n) {
                s += self.data[i * n + j] * xj;
            }
            worst = worst.max(s.norm());
        }
        worst
    }
}

impl Index<(usize, usize)> for DenseMatC {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatC {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}
