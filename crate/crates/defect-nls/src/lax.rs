//! The Lax pair of the focusing NLS equation and explicit zero-seed
//! solutions of the associated linear system.
//!
//! The spectral problem is ψ_x = Uψ, ψ_t = Vψ with
//!
//!   U = −iλσ₃ + Q,          Q  = [[0, u], [−u*, 0]],
//!   V = −2iλ²σ₃ + Q̃,        Q̃ = [[i|u|², 2λu + iu_x], [−2λu* + iu_x*, −i|u|²]],
//!
//! whose compatibility condition is the NLS equation itself. For the zero
//! seed u ≡ 0 the system has the explicit vector solutions
//!
//!   ψ_j(t, x) = e^{(−iλ_j x − 2iλ_j² t)σ₃} (u_j, v_j)ᵀ,
//!
//! one per spectral point (λ_j, (u_j, v_j)); these are the raw material every
//! dressing chain is built from.

use crate::error::{Error, Result};
use crate::linalg::{c, C64, Mat2C, Vec2C, I, ONE, ZERO};

/// σ₃ = diag(1, −1).
pub const SIGMA3: Mat2C = Mat2C::new(ONE, ZERO, ZERO, c(-1.0, 0.0));

/// σ = [[0, 1], [−1, 0]], the conjugation symmetry of the Lax pair:
/// U(λ*)* = σ U(λ) σ⁻¹ and likewise for V.
pub const SIGMA: Mat2C = Mat2C::new(ZERO, ONE, c(-1.0, 0.0), ZERO);

/// σ₂ = [[0, −i], [i, 0]]; σ₂·conj(·) produces the orthogonal companion.
pub const SIGMA2: Mat2C = Mat2C::new(ZERO, c(0.0, -1.0), I, ZERO);

/// Exponent guard: `seed_vector` refuses |Im θ| beyond this to keep e^{±θ}
/// inside f64 range.
pub const THETA_IM_LIMIT: f64 = 700.0;

/// Minimal |Im λ| for a spectral point; projectors degenerate at the real
/// axis.
pub const MIN_IMAG: f64 = 1e-12;

/// Phase θ(t, x, λ) = λx + 2λ²t.
pub fn theta(t: f64, x: f64, lambda: C64) -> C64 {
    lambda * x + 2.0 * lambda * lambda * t
}

/// Field value and spatial derivative at one point, the inputs of Q and Q̃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSample {
    pub u: C64,
    pub u_x: C64,
}

impl PotentialSample {
    pub const fn new(u: C64, u_x: C64) -> Self {
        Self { u, u_x }
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO)
    }
}

/// Q = [[0, u], [−u*, 0]].
pub fn q_matrix(p: &PotentialSample) -> Mat2C {
    Mat2C::new(ZERO, p.u, -p.u.conj(), ZERO)
}

/// Q̃ = [[i|u|², 2λu + iu_x], [−2λu* + iu_x*, −i|u|²]]; traceless.
pub fn qtilde_matrix(p: &PotentialSample, lambda: C64) -> Mat2C {
    let usq = I * p.u.norm_sqr();
    Mat2C::new(
        usq,
        2.0 * lambda * p.u + I * p.u_x,
        -2.0 * lambda * p.u.conj() + I * p.u_x.conj(),
        -usq,
    )
}

/// x-part of the Lax pair, U = −iλσ₃ + Q.
pub fn lax_u(lambda: C64, p: &PotentialSample) -> Mat2C {
    SIGMA3.scale(-I * lambda) + q_matrix(p)
}

/// t-part of the Lax pair, V = −2iλ²σ₃ + Q̃.
pub fn lax_v(lambda: C64, p: &PotentialSample) -> Mat2C {
    SIGMA3.scale(-2.0 * I * lambda * lambda) + qtilde_matrix(p, lambda)
}

/// Seed solution class. Only the vanishing seed is constructed explicitly;
/// the tag exists so the signature does not change if other seeds are added.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Seed {
    #[default]
    Zero,
}

/// One soliton's spectral identity: a non-real eigenvalue λ_j and the
/// constant initialization vector (u_j, v_j) of its seed solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    pub lambda: C64,
    pub init: Vec2C,
}

impl SpectralPoint {
    pub fn new(lambda: C64, init: Vec2C) -> Result<Self> {
        if lambda.im.abs() < MIN_IMAG {
            return Err(Error::RealEigenvalue(lambda.to_string()));
        }
        if init.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Self { lambda, init })
    }

    pub fn xi(&self) -> f64 {
        self.lambda.re
    }

    pub fn eta(&self) -> f64 {
        self.lambda.im
    }
}

/// Zero-seed Lax solution ψ_j(t, x) = (u_j e^{−iθ_j}, v_j e^{iθ_j}) with
/// θ_j = θ(t, x, λ_j).
///
/// Fails with `OverflowRange` when |Im θ| exceeds [`THETA_IM_LIMIT`], where
/// e^{±θ} would leave f64 range.
pub fn seed_vector(sp: &SpectralPoint, t: f64, x: f64) -> Result<Vec2C> {
    let th = theta(t, x, sp.lambda);
    if th.im.abs() > THETA_IM_LIMIT {
        return Err(Error::OverflowRange { exponent: th.im });
    }
    let phase = (-I * th).exp();
    Ok(Vec2C::new(sp.init.a * phase, sp.init.b / phase))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn mat_close(a: &Mat2C, b: &Mat2C, tol: f64) -> bool {
        (*a - *b).max_norm() <= tol
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(0.0, 0.0, c(0.3, -2.0)), ZERO);
        assert_eq!(theta(1.0, 2.0, ONE), c(4.0, 0.0));
        assert!(close(theta(1.0, 0.0, I), c(-2.0, 0.0), 0.0));
    }

    #[test]
    fn q_matrix_structure() {
        assert_eq!(q_matrix(&PotentialSample::zero()), Mat2C::zero());
        assert_eq!(
            q_matrix(&PotentialSample::new(ONE, ZERO)),
            Mat2C::new(ZERO, ONE, -ONE, ZERO)
        );
        // u = i: lower-left is −(i)* = i
        let q = q_matrix(&PotentialSample::new(I, ZERO));
        assert_eq!(q.m21, I);
        assert!(close(q.m21, -q.m12.conj(), 0.0));
    }

    #[test]
    fn qtilde_matrix_values() {
        assert_eq!(qtilde_matrix(&PotentialSample::zero(), I), Mat2C::zero());
        let q = qtilde_matrix(&PotentialSample::new(ONE, ZERO), ONE);
        assert!(mat_close(
            &q,
            &Mat2C::new(I, c(2.0, 0.0), c(-2.0, 0.0), -I),
            1e-15
        ));
        let q = qtilde_matrix(&PotentialSample::new(I, ONE), ZERO);
        assert!(mat_close(&q, &Mat2C::new(I, I, I, -I), 1e-15));
        assert!(close(q.trace(), ZERO, 0.0));
    }

    #[test]
    fn lax_matrices_traceless_and_values() {
        assert_eq!(lax_u(ZERO, &PotentialSample::zero()), Mat2C::zero());
        assert!(mat_close(
            &lax_u(ONE, &PotentialSample::zero()),
            &Mat2C::diag(-I, I),
            0.0
        ));
        assert!(mat_close(
            &lax_v(I, &PotentialSample::zero()),
            &Mat2C::diag(2.0 * I, -2.0 * I),
            0.0
        ));
        let p = PotentialSample::new(c(0.4, -1.3), c(-0.2, 0.7));
        let lam = c(0.8, 0.6);
        assert!(close(lax_u(lam, &p).trace(), ZERO, 1e-15));
        assert!(close(lax_v(lam, &p).trace(), ZERO, 1e-15));
    }

    #[test]
    fn lax_symmetry_exact() {
        // U(λ*)* = σ U(λ) σ⁻¹ (and the same for V), entrywise
        let p = PotentialSample::new(c(0.9, 0.2), c(-1.1, 0.5));
        let sigma_inv = SIGMA.inv().unwrap();
        for lam in [c(0.7, 0.3), c(-1.2, -0.8), c(0.0, 1.0)] {
            let lhs_u = lax_u(lam.conj(), &p).conj();
            let rhs_u = SIGMA * lax_u(lam, &p) * sigma_inv;
            assert!(mat_close(&lhs_u, &rhs_u, 1e-14));
            let lhs_v = lax_v(lam.conj(), &p).conj();
            let rhs_v = SIGMA * lax_v(lam, &p) * sigma_inv;
            assert!(mat_close(&lhs_v, &rhs_v, 1e-14));
        }
    }

    #[test]
    fn spectral_point_validation() {
        assert!(SpectralPoint::new(c(1.0, 0.0), Vec2C::new(ONE, ONE)).is_err());
        assert!(SpectralPoint::new(I, Vec2C::zero()).is_err());
        assert!(SpectralPoint::new(I, Vec2C::new(ONE, ONE)).is_ok());
    }

    #[test]
    fn seed_vector_values() {
        let sp = SpectralPoint::new(c(0.4, 0.9), Vec2C::new(c(1.0, -0.3), c(0.2, 0.8))).unwrap();
        let v = seed_vector(&sp, 0.0, 0.0).unwrap();
        assert!(close(v.a, sp.init.a, 0.0) && close(v.b, sp.init.b, 0.0));

        let sp = SpectralPoint::new(I, Vec2C::new(ONE, ONE)).unwrap();
        let v = seed_vector(&sp, 0.0, 1.0).unwrap();
        assert!(close(v.a, c(1.0f64.exp(), 0.0), 1e-14));
        assert!(close(v.b, c((-1.0f64).exp(), 0.0), 1e-15));
    }

    #[test]
    fn seed_vector_overflow_guard() {
        let sp = SpectralPoint::new(I, Vec2C::new(ONE, ONE)).unwrap();
        assert!(matches!(
            seed_vector(&sp, 0.0, 1e4),
            Err(Error::OverflowRange { .. })
        ));
    }

    #[test]
    fn seed_vector_solves_lax_system() {
        // ∂ₓψ = U(λ; u=0)ψ and ∂ₜψ = V(λ; u=0)ψ, 4th-order finite differences
        let sp = SpectralPoint::new(c(0.6, -0.8), Vec2C::new(c(0.3, 1.0), c(-0.7, 0.4))).unwrap();
        let h = 1e-3;
        let p0 = PotentialSample::zero();
        let mut worst = 0.0f64;
        // deterministic sample of (t, x) points in [−3, 3]²
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ((state >> 11) as f64 / (1u64 << 53) as f64 - 0.5) * 6.0
        };
        for _ in 0..100 {
            let (t, x) = (next(), next());
            let at = |tt: f64, xx: f64| seed_vector(&sp, tt, xx).unwrap();
            let psi = at(t, x);
            let dx = stencil(|s| at(t, x + s), h);
            let dt = stencil(|s| at(t + s, x), h);
            let rx = dx - lax_u(sp.lambda, &p0) * psi;
            let rt = dt - lax_v(sp.lambda, &p0) * psi;
            worst = worst.max(rx.norm() / psi.norm()).max(rt.norm() / psi.norm());
        }
        assert!(worst <= 1e-7, "lax residual {worst}");
    }

    fn stencil<F: Fn(f64) -> Vec2C>(f: F, h: f64) -> Vec2C {
        let eight = c(8.0, 0.0);
        (-f(2.0 * h) + f(h).scale(eight) - f(-h).scale(eight) + f(-2.0 * h))
            .scale(c(1.0 / (12.0 * h), 0.0))
    }
}
