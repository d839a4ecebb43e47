//! N-fold Darboux dressing of the zero seed.
//!
//! One fold at a spectral point (λ₁, ψ₁) is the degree-one matrix
//!
//!   D[1](λ) = (λ − λ₁*)·I + (λ₁* − λ₁)·P[1],   P[1] = ψ₁ψ₁†/(ψ₁†ψ₁),
//!
//! which annihilates ψ₁ at λ = λ₁. Folds chain: the j-th projector is built
//! from the previous factors applied to the j-th seed solution,
//!
//!   ψ_j[j−1] = D[j−1]|_{λ=λ_j} ψ_j,
//!
//! and the dressed field is read off the reconstruction sum
//!
//!   Q[N] = Q[0] − i Σ_j (λ_j − λ_j*)[σ₃, P[j]].
//!
//! Each fold adds one soliton; the N = 1 case collapses to the closed sech
//! formula in [`one_soliton_closed`], which the tests hold the chain against.

use crate::error::{Error, Result};
use crate::lax::{seed_vector, Seed, SpectralPoint};
use crate::linalg::{c, C64, Mat2C, Vec2C};

/// Pairwise λ separation below which dressing data count as coincident.
pub const MIN_LAMBDA_GAP: f64 = 1e-8;

/// Chains reject spectral points closer to the real axis than this.
pub const MIN_CHAIN_IMAG: f64 = 1e-6;

/// Default step for the finite-difference stencils.
pub const DERIVATIVE_STEP: f64 = 1e-3;

/// Which half-line a chain dresses. `Right` carries the field u on x ≥ 0,
/// `Left` the field ũ on x ≤ 0; both evaluate as formulas on the whole line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfLine {
    Right,
    Left,
}

/// Ordered spectral data of one N-fold dressing (N ≥ 0).
#[derive(Debug, Clone, PartialEq)]
pub struct DressingChain {
    points: Vec<SpectralPoint>,
    side: HalfLine,
    seed: Seed,
}

impl DressingChain {
    /// Validates pairwise-distinct, non-real spectral parameters.
    pub fn new(points: Vec<SpectralPoint>, side: HalfLine) -> Result<Self> {
        for (j, p) in points.iter().enumerate() {
            if p.lambda.im.abs() < MIN_CHAIN_IMAG {
                return Err(Error::RealEigenvalue(p.lambda.to_string()));
            }
            if p.init.is_zero() {
                return Err(Error::ZeroVector);
            }
            for q in &points[..j] {
                if (p.lambda - q.lambda).norm() < MIN_LAMBDA_GAP {
                    return Err(Error::DuplicateEigenvalue(p.lambda.to_string()));
                }
            }
        }
        Ok(Self {
            points,
            side,
            seed: Seed::Zero,
        })
    }

    pub fn empty(side: HalfLine) -> Self {
        Self {
            points: Vec::new(),
            side,
            seed: Seed::Zero,
        }
    }

    pub fn points(&self) -> &[SpectralPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn side(&self) -> HalfLine {
        self.side
    }

    /// Builds the per-(t, x) chain state: dressed kernel vectors and
    /// projectors, fold by fold.
    ///
    /// Dressed vectors are rescaled to unit max-component before the
    /// projector is formed; projectors are scale-invariant, and the raw
    /// components reach e^{±700} at the edge of the admitted (t, x) range,
    /// where their squared norm would overflow.
    pub fn state_at(&self, t: f64, x: f64) -> Result<ChainState> {
        let mut folds: Vec<Fold> = Vec::with_capacity(self.points.len());
        for (j, sp) in self.points.iter().enumerate() {
            let mut w = seed_vector(sp, t, x)?;
            for prior in &folds {
                w = fold_factor(prior.lambda, &prior.projector, sp.lambda) * w;
            }
            let scale = w.a.norm().max(w.b.norm());
            if scale < 1e-300 || !scale.is_finite() {
                return Err(Error::DegenerateDressing { index: j });
            }
            let w = w.scale(c(1.0 / scale, 0.0));
            let projector = projector(&w)?;
            folds.push(Fold {
                lambda: sp.lambda,
                dressed: w,
                projector,
            });
        }
        Ok(ChainState { t, x, folds })
    }

    /// Dressed field u[N](t, x) from the reconstruction sum over the zero
    /// seed.
    pub fn field(&self, t: f64, x: f64) -> Result<C64> {
        let state = self.state_at(t, x)?;
        Ok(state.reconstruct_u(crate::linalg::ZERO))
    }
}

/// One fold's data inside a [`ChainState`].
#[derive(Debug, Clone, Copy)]
struct Fold {
    lambda: C64,
    dressed: Vec2C,
    projector: Mat2C,
}

/// Dressing chain evaluated at one (t, x): the dressed vectors ψ_j[j−1] and
/// their projectors. Everything downstream (D[N], the reconstructed field)
/// reads from here.
#[derive(Debug, Clone)]
pub struct ChainState {
    pub t: f64,
    pub x: f64,
    folds: Vec<Fold>,
}

impl ChainState {
    pub fn len(&self) -> usize {
        self.folds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.folds.is_empty()
    }

    pub fn dressed_vector(&self, j: usize) -> Vec2C {
        self.folds[j].dressed
    }

    pub fn projector(&self, j: usize) -> Mat2C {
        self.folds[j].projector
    }

    pub fn lambda(&self, j: usize) -> C64 {
        self.folds[j].lambda
    }

    /// D[N](λ): the ordered product of one-fold factors, last fold leftmost.
    /// The empty chain gives the identity.
    pub fn eval_dn(&self, lambda: C64) -> Mat2C {
        let mut d = Mat2C::identity();
        for fold in &self.folds {
            d = fold_factor(fold.lambda, &fold.projector, lambda) * d;
        }
        d
    }

    /// Entry (1,2) of Q[N] = Q[0] − i Σ_j (λ_j − λ_j*)[σ₃, P[j]], i.e. the
    /// dressed field. The (2,1) entry is −conj of it whenever the projectors
    /// are Hermitian, which the debug build asserts.
    pub fn reconstruct_u(&self, seed_u: C64) -> C64 {
        let mut u = seed_u;
        for fold in &self.folds {
            // −i(λ−λ*)·[σ₃, P]₁₂ = −i·(2i Im λ)·2P₁₂ = 4 Im(λ)·P₁₂
            u += 4.0 * fold.lambda.im * fold.projector.m12;
        }
        debug_assert!(
            {
                let mut lower = -seed_u.conj();
                for fold in &self.folds {
                    lower -= 4.0 * fold.lambda.im * fold.projector.m21;
                }
                (lower - (-u.conj())).norm() <= 1e-12 * (1.0 + u.norm())
            },
            "reconstruction lost the off-diagonal conjugate symmetry"
        );
        u
    }
}

/// Rank-one Hermitian projector ψψ†/(ψ†ψ).
pub fn projector(v: &Vec2C) -> Result<Mat2C> {
    let nsq = v.norm_sqr();
    if nsq == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(Mat2C::outer(*v, v.dagger()).scale(c(1.0 / nsq, 0.0)))
}

/// One-fold dressing matrix D[1](λ) = (λ − λ₁*)I + (λ₁* − λ₁)P with the
/// projector built from `v`; annihilates `v` at λ = λ₁ and has determinant
/// (λ − λ₁)(λ − λ₁*).
pub fn one_fold(lambda1: C64, v: &Vec2C, lambda: C64) -> Result<Mat2C> {
    if lambda1.im == 0.0 {
        return Err(Error::RealEigenvalue(lambda1.to_string()));
    }
    let p = projector(v)?;
    Ok(fold_factor(lambda1, &p, lambda))
}

/// Fold factor from a precomputed projector; infallible inner kernel of
/// `one_fold` and the chained products.
fn fold_factor(lambda1: C64, p: &Mat2C, lambda: C64) -> Mat2C {
    let shift = lambda - lambda1.conj();
    let gap = lambda1.conj() - lambda1;
    Mat2C::new(
        shift + gap * p.m11,
        gap * p.m12,
        gap * p.m21,
        shift + gap * p.m22,
    )
}

/// Parameters of the closed-form one-soliton
///
///   u(t, x) = 2η e^{−i(2ξx + 4(ξ²−η²)t + φ₁ + π/2)} sech(2η(x + 4ξt − x₁)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneSolitonParams {
    pub xi: f64,
    pub eta: f64,
    pub x1: f64,
    pub phi1: f64,
}

impl OneSolitonParams {
    pub fn new(xi: f64, eta: f64, x1: f64, phi1: f64) -> Result<Self> {
        if eta <= 0.0 {
            return Err(Error::RealEigenvalue(format!("eta = {eta}")));
        }
        Ok(Self { xi, eta, x1, phi1 })
    }

    /// The (ξ, η, x₁, φ₁) equivalent of a one-fold dressing at `sp`: the
    /// amplitude/velocity come from λ₁ and the center/phase from the init
    /// ratio, x₁ = log|v₁/u₁|/(2η) and φ₁ = arg(v₁/u₁) − π/2. Requires both
    /// init components nonzero (one zero component makes the fold invisible).
    pub fn from_spectral_point(sp: &SpectralPoint) -> Result<Self> {
        if sp.lambda.im <= 0.0 {
            return Err(Error::RealEigenvalue(sp.lambda.to_string()));
        }
        if sp.init.a.norm() == 0.0 {
            return Err(Error::ZeroComponent { index: 0 });
        }
        if sp.init.b.norm() == 0.0 {
            return Err(Error::ZeroComponent { index: 1 });
        }
        let ratio = sp.init.b / sp.init.a;
        let eta = sp.lambda.im;
        Ok(Self {
            xi: sp.lambda.re,
            eta,
            x1: ratio.norm().ln() / (2.0 * eta),
            phi1: ratio.arg() - std::f64::consts::FRAC_PI_2,
        })
    }
}

/// Closed one-soliton formula; |u| ≤ 2η with equality on x + 4ξt = x₁.
pub fn one_soliton_closed(p: &OneSolitonParams, t: f64, x: f64) -> C64 {
    let carrier = -(2.0 * p.xi * x
        + 4.0 * (p.xi * p.xi - p.eta * p.eta) * t
        + p.phi1
        + std::f64::consts::FRAC_PI_2);
    let envelope = 2.0 * p.eta / (2.0 * p.eta * (x + 4.0 * p.xi * t - p.x1)).cosh();
    C64::from_polar(envelope, carrier)
}

/// (u_t, u_x, u_xx) of a complex field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivatives {
    pub u_t: C64,
    pub u_x: C64,
    pub u_xx: C64,
}

/// 4th-order central differences with the default step [`DERIVATIVE_STEP`].
pub fn numeric_derivatives<F>(field: F, t: f64, x: f64) -> Result<Derivatives>
where
    F: Fn(f64, f64) -> Result<C64>,
{
    numeric_derivatives_with_step(field, t, x, DERIVATIVE_STEP)
}

/// Same with an explicit step, so callers can run Richardson comparisons.
pub fn numeric_derivatives_with_step<F>(field: F, t: f64, x: f64, h: f64) -> Result<Derivatives>
where
    F: Fn(f64, f64) -> Result<C64>,
{
    let fxp2 = field(t, x + 2.0 * h)?;
    let fxp1 = field(t, x + h)?;
    let fx0 = field(t, x)?;
    let fxm1 = field(t, x - h)?;
    let fxm2 = field(t, x - 2.0 * h)?;
    let ftp2 = field(t + 2.0 * h, x)?;
    let ftp1 = field(t + h, x)?;
    let ftm1 = field(t - h, x)?;
    let ftm2 = field(t - 2.0 * h, x)?;
    let u_x = (-fxp2 + 8.0 * fxp1 - 8.0 * fxm1 + fxm2) / (12.0 * h);
    let u_t = (-ftp2 + 8.0 * ftp1 - 8.0 * ftm1 + ftm2) / (12.0 * h);
    let u_xx = (-fxp2 + 16.0 * fxp1 - 30.0 * fx0 + 16.0 * fxm1 - fxm2) / (12.0 * h * h);
    Ok(Derivatives { u_t, u_x, u_xx })
}

/// |i·u_t + u_xx + 2|u|²u| at (t, x): how far a field is from solving NLS.
pub fn nls_residual<F>(field: F, t: f64, x: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<C64> + Copy,
{
    let u = field(t, x)?;
    let d = numeric_derivatives(field, t, x)?;
    let i = crate::linalg::I;
    Ok((i * d.u_t + d.u_xx + 2.0 * u.norm_sqr() * u).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{I, ONE, ZERO};

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn sp(lambda: C64, a: C64, b: C64) -> SpectralPoint {
        SpectralPoint::new(lambda, Vec2C::new(a, b)).unwrap()
    }

    #[test]
    fn projector_examples() {
        let p = projector(&Vec2C::new(ONE, ZERO)).unwrap();
        assert_eq!(p, Mat2C::diag(ONE, ZERO));
        let p = projector(&Vec2C::new(ONE, ONE)).unwrap();
        let half = c(0.5, 0.0);
        assert_eq!(p, Mat2C::new(half, half, half, half));
        let p = projector(&Vec2C::new(ONE, I)).unwrap();
        assert!((p - Mat2C::new(half, -0.5 * I, 0.5 * I, half)).max_norm() <= 1e-15);
        assert!(matches!(projector(&Vec2C::zero()), Err(Error::ZeroVector)));
    }

    #[test]
    fn projector_laws() {
        let v = Vec2C::new(c(1.3, -0.4), c(-0.2, 2.1));
        let p = projector(&v).unwrap();
        assert!((p * p - p).max_norm() <= 1e-13);
        assert!((p - p.adjoint()).max_norm() <= 1e-13);
        assert!(close(p.trace(), ONE, 1e-13));
        assert!((p * v - v).norm() <= 1e-13 * v.norm());
    }

    #[test]
    fn one_fold_examples() {
        let lam = c(2.0, 1.0);
        let d = one_fold(I, &Vec2C::new(ONE, ZERO), lam).unwrap();
        assert!((d - Mat2C::diag(lam - I, lam + I)).max_norm() <= 1e-15);
        let d = one_fold(I, &Vec2C::new(ZERO, ONE), lam).unwrap();
        assert!((d - Mat2C::diag(lam + I, lam - I)).max_norm() <= 1e-15);
        // kernel by construction
        let v = Vec2C::new(c(0.7, 0.1), c(-0.3, 0.9));
        let d = one_fold(c(0.5, 0.8), &v, c(0.5, 0.8)).unwrap();
        assert!((d * v).norm() <= 1e-14 * v.norm());
        // det = (λ−λ₁)(λ−λ₁*)
        let d = one_fold(c(0.5, 0.8), &v, lam).unwrap();
        let expect = (lam - c(0.5, 0.8)) * (lam - c(0.5, -0.8));
        assert!(close(d.det(), expect, 1e-12));
        assert!(matches!(
            one_fold(ONE, &v, lam),
            Err(Error::RealEigenvalue(_))
        ));
        assert!(matches!(
            one_fold(I, &Vec2C::zero(), lam),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn chain_construction_rules() {
        let p1 = sp(I, ONE, ONE);
        assert!(DressingChain::new(vec![p1, p1], HalfLine::Right).is_err());
        let near_real = SpectralPoint::new(c(1.0, 1e-7), Vec2C::new(ONE, ONE)).unwrap();
        assert!(matches!(
            DressingChain::new(vec![near_real], HalfLine::Right),
            Err(Error::RealEigenvalue(_))
        ));
        assert!(DressingChain::new(vec![], HalfLine::Left)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn empty_chain_state() {
        let chain = DressingChain::empty(HalfLine::Right);
        let st = chain.state_at(0.3, -0.7).unwrap();
        assert!(st.is_empty());
        assert_eq!(st.eval_dn(c(1.2, 0.3)), Mat2C::identity());
        assert_eq!(st.reconstruct_u(ZERO), ZERO);
    }

    #[test]
    fn single_fold_state_matches_direct_projector() {
        let p1 = sp(I, ONE, ONE);
        let chain = DressingChain::new(vec![p1], HalfLine::Right).unwrap();
        let st = chain.state_at(0.4, -0.2).unwrap();
        let psi = seed_vector(&p1, 0.4, -0.2).unwrap();
        assert!((st.projector(0) - projector(&psi).unwrap()).max_norm() <= 1e-15);
    }

    #[test]
    fn two_fold_dressed_vector_hand_value() {
        // λ₁=i, λ₂=2i, inits (1,1): ψ₂[1] = D[1](2i)(1,1)ᵀ = (i, i) at t=x=0
        let chain = DressingChain::new(
            vec![sp(I, ONE, ONE), sp(2.0 * I, ONE, ONE)],
            HalfLine::Right,
        )
        .unwrap();
        let st = chain.state_at(0.0, 0.0).unwrap();
        let w = st.dressed_vector(1);
        assert!(close(w.a, I, 1e-15) && close(w.b, I, 1e-15));
    }

    #[test]
    fn reconstruct_examples() {
        // N=1, λ=i, init (1,1): u(0,0) = 2
        let chain = DressingChain::new(vec![sp(I, ONE, ONE)], HalfLine::Right).unwrap();
        assert!(close(chain.field(0.0, 0.0).unwrap(), c(2.0, 0.0), 1e-14));
        // invisible dressing: init (1,0) has a diagonal projector
        let chain = DressingChain::new(vec![sp(I, ONE, ZERO)], HalfLine::Right).unwrap();
        for (t, x) in [(0.0, 0.0), (1.3, -0.8), (-0.4, 2.0)] {
            assert!(close(chain.field(t, x).unwrap(), ZERO, 1e-15));
        }
    }

    #[test]
    fn dn_kernel_and_determinant() {
        let chain = DressingChain::new(
            vec![
                sp(c(0.5, 0.8), c(1.0, 0.3), c(-0.7, 0.2)),
                sp(c(-0.4, 1.1), c(0.6, -1.0), c(1.3, 0.4)),
                sp(c(0.1, 0.6), c(-1.1, 0.9), c(0.5, 0.8)),
            ],
            HalfLine::Right,
        )
        .unwrap();
        let mut state = 0x6a09e667f3bcc909u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ((state >> 11) as f64 / (1u64 << 53) as f64 - 0.5) * 4.0
        };
        for _ in 0..50 {
            let (t, x) = (next(), next());
            let st = chain.state_at(t, x).unwrap();
            // kernel property for every fold
            for p in chain.points() {
                let psi = seed_vector(p, t, x).unwrap();
                let image = st.eval_dn(p.lambda) * psi;
                assert!(image.norm() <= 1e-10 * psi.norm());
            }
            // determinant factorization at a random λ
            let lam = c(next(), next());
            let mut expect = ONE;
            for p in chain.points() {
                expect *= (lam - p.lambda) * (lam - p.lambda.conj());
            }
            let det = st.eval_dn(lam).det();
            assert!((det - expect).norm() <= 1e-10 * expect.norm().max(1.0));
        }
    }

    #[test]
    fn dressing_symmetry() {
        // D(λ*)* = σ D(λ) σ⁻¹
        let chain = DressingChain::new(
            vec![
                sp(c(0.5, 0.8), c(1.0, 0.3), c(-0.7, 0.2)),
                sp(c(-0.4, 1.1), c(0.6, -1.0), c(1.3, 0.4)),
            ],
            HalfLine::Right,
        )
        .unwrap();
        let sigma = crate::lax::SIGMA;
        let sigma_inv = sigma.inv().unwrap();
        let st = chain.state_at(0.7, -1.1).unwrap();
        for lam in [c(0.3, 0.9), c(-1.5, 0.2), c(2.0, -1.0)] {
            let lhs = st.eval_dn(lam.conj()).conj();
            let rhs = sigma * st.eval_dn(lam) * sigma_inv;
            assert!((lhs - rhs).max_norm() <= 1e-11);
        }
    }

    #[test]
    fn reconstruction_is_fold_order_invariant() {
        let a = sp(c(0.5, 0.8), c(1.0, 0.3), c(-0.7, 0.2));
        let b = sp(c(-0.4, 1.1), c(0.6, -1.0), c(1.3, 0.4));
        let d = sp(c(0.1, 0.6), c(-1.1, 0.9), c(0.5, 0.8));
        let orders: [Vec<SpectralPoint>; 3] = [vec![a, b, d], vec![d, a, b], vec![b, d, a]];
        let fields: Vec<C64> = orders
            .into_iter()
            .map(|pts| {
                DressingChain::new(pts, HalfLine::Right)
                    .unwrap()
                    .field(0.6, -0.9)
                    .unwrap()
            })
            .collect();
        assert!(close(fields[0], fields[1], 1e-10));
        assert!(close(fields[0], fields[2], 1e-10));
    }

    #[test]
    fn closed_form_values() {
        let p = OneSolitonParams::new(0.0, 0.5, 0.0, 0.0).unwrap();
        assert!(close(one_soliton_closed(&p, 0.0, 0.0), -I, 1e-15));
        let p = OneSolitonParams::new(0.0, 1.0, 0.0, -std::f64::consts::FRAC_PI_2).unwrap();
        assert!(close(one_soliton_closed(&p, 0.0, 0.0), c(2.0, 0.0), 1e-15));
        // |u| = 2η on the crest line x = x₁ − 4ξt
        let p = OneSolitonParams::new(0.7, 1.2, -0.3, 0.4).unwrap();
        for t in [-2.0, 0.0, 1.5] {
            let x = p.x1 - 4.0 * p.xi * t;
            assert!((one_soliton_closed(&p, t, x).norm() - 2.4).abs() <= 1e-12);
        }
    }

    #[test]
    fn closed_form_matches_one_fold_chain() {
        // asymmetric init so the center and phase maps are both exercised
        let point = sp(c(0.3, 1.2), c(1.0, -0.5), c(2.0, 1.0));
        let chain = DressingChain::new(vec![point], HalfLine::Right).unwrap();
        let params = OneSolitonParams::from_spectral_point(&point).unwrap();
        let mut worst = 0.0f64;
        for i in 0..41 {
            for j in 0..41 {
                let t = -3.0 + 6.0 * (i as f64) / 40.0;
                let x = -3.0 + 6.0 * (j as f64) / 40.0;
                let diff =
                    (chain.field(t, x).unwrap() - one_soliton_closed(&params, t, x)).norm();
                worst = worst.max(diff);
            }
        }
        assert!(worst <= 1e-10, "closed-form mismatch {worst}");
    }

    #[test]
    fn derivative_stencils() {
        let constant = |_t: f64, _x: f64| Ok(c(2.5, -1.0));
        let d = numeric_derivatives(constant, 0.3, 0.4).unwrap();
        assert!(d.u_t.norm() <= 1e-12 && d.u_x.norm() <= 1e-12 && d.u_xx.norm() <= 1e-9);

        let exp_x = |_t: f64, x: f64| Ok(c(x.exp(), 0.0));
        let d = numeric_derivatives(exp_x, 0.0, 0.0).unwrap();
        assert!(close(d.u_x, ONE, 1e-10));
        assert!(close(d.u_xx, ONE, 1e-7));
    }

    #[test]
    fn closed_form_solves_nls() {
        let p = OneSolitonParams::new(0.0, 0.5, 0.0, 0.0).unwrap();
        let field = |t: f64, x: f64| Ok(one_soliton_closed(&p, t, x));
        assert!(nls_residual(field, 0.0, 0.0).unwrap() <= 1e-7);
        assert!(nls_residual(field, 0.7, -1.2).unwrap() <= 1e-7);
    }

    #[test]
    fn dressed_fields_solve_nls_up_to_n4() {
        let pts = [
            sp(c(0.5, 0.8), c(1.0, 0.3), c(-0.7, 0.2)),
            sp(c(-0.4, 1.1), c(0.6, -1.0), c(1.3, 0.4)),
            sp(c(0.1, 0.6), c(-1.1, 0.9), c(0.5, 0.8)),
            sp(c(-0.8, 0.5), c(0.9, 0.1), c(-0.2, -1.0)),
        ];
        for n in 1..=4 {
            let chain = DressingChain::new(pts[..n].to_vec(), HalfLine::Right).unwrap();
            let field = |t: f64, x: f64| chain.field(t, x);
            let mut state = 0x1234_5678_9abc_def0u64 ^ (n as u64);
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                ((state >> 11) as f64 / (1u64 << 53) as f64 - 0.5) * 4.0
            };
            for _ in 0..25 {
                let (t, x) = (next(), next());
                assert!(
                    nls_residual(field, t, x).unwrap() <= 1e-6,
                    "NLS residual too large for N={n} at ({t}, {x})"
                );
            }
        }
    }
}
