//! Property-based invariants of the numeric substrate and the dressing
//! primitives.

use defect_nls::darboux::{one_fold, projector};
use defect_nls::defect::{Branch, DefectParams};
use defect_nls::linalg::{c, C64, DenseMatC, Mat2C, Vec2C};
use defect_nls::scattering::{predict_transmission, relate_norming, ScatteringDatum};
use proptest::prelude::*;

fn complex(mag: f64) -> impl Strategy<Value = C64> {
    (-mag..mag, -mag..mag).prop_map(|(re, im)| c(re, im))
}

fn mat2(mag: f64) -> impl Strategy<Value = Mat2C> {
    (complex(mag), complex(mag), complex(mag), complex(mag))
        .prop_map(|(a, b, d, e)| Mat2C::new(a, b, d, e))
}

fn vec2(mag: f64) -> impl Strategy<Value = Vec2C> {
    (complex(mag), complex(mag)).prop_map(|(a, b)| Vec2C::new(a, b))
}

proptest! {
    #[test]
    fn mat_mul_is_associative(a in mat2(3.0), b in mat2(3.0), d in mat2(3.0)) {
        let lhs = (a * b) * d;
        let rhs = a * (b * d);
        let scale = lhs.max_norm().max(1.0);
        prop_assert!((lhs - rhs).max_norm() <= 1e-12 * scale);
    }

    #[test]
    fn det_is_multiplicative(a in mat2(3.0), b in mat2(3.0)) {
        let lhs = (a * b).det();
        let rhs = a.det() * b.det();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
    }

    #[test]
    fn inverse_round_trips(m in mat2(3.0)) {
        // keep away from the singular set; the threshold itself is unit
        // tested separately
        prop_assume!(m.det().norm() > 0.3);
        let inv = m.inv().unwrap();
        prop_assert!((m * inv - Mat2C::identity()).max_norm() <= 1e-12);
        prop_assert!((inv * m - Mat2C::identity()).max_norm() <= 1e-12);
    }

    #[test]
    fn orthogonal_companion_is_sign_involution(v in vec2(5.0)) {
        let w = v.orthogonal_companion();
        // exact orthogonality up to rounding, exact sign involution
        prop_assert!(v.dagger().dot(w).norm() <= 1e-14 * v.norm_sqr().max(1.0));
        prop_assert_eq!(w.orthogonal_companion(), -v);
    }

    #[test]
    fn dense_solve_has_small_residual(
        n in 1usize..10,
        seed in any::<u64>(),
    ) {
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut a = DenseMatC::zeros(n).unwrap();
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = c(next(), next());
            }
            a[(i, i)] += c(3.0, 0.0);
        }
        let rhs: Vec<C64> = (0..n).map(|_| c(next(), next())).collect();
        let x = a.solve(&rhs).unwrap();
        let rhs_norm = rhs.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(1e-30);
        prop_assert!(a.residual(&x, &rhs) <= 1e-10 * rhs_norm);
    }

    #[test]
    fn projector_laws_hold(v in vec2(4.0)) {
        prop_assume!(v.norm_sqr() > 1e-6);
        let p = projector(&v).unwrap();
        prop_assert!((p * p - p).max_norm() <= 1e-13);
        prop_assert!((p - p.adjoint()).max_norm() <= 1e-13);
        prop_assert!((p.trace() - c(1.0, 0.0)).norm() <= 1e-13);
    }

    #[test]
    fn one_fold_kernel_and_determinant(
        v in vec2(4.0),
        lam1 in complex(2.0),
        lam in complex(2.0),
    ) {
        prop_assume!(v.norm_sqr() > 1e-6);
        prop_assume!(lam1.im.abs() > 1e-3);
        let d_at_pole = one_fold(lam1, &v, lam1).unwrap();
        prop_assert!((d_at_pole * v).norm() <= 1e-12 * v.norm());
        let d = one_fold(lam1, &v, lam).unwrap();
        let expect = (lam - lam1) * (lam - lam1.conj());
        prop_assert!((d.det() - expect).norm() <= 1e-12 * expect.norm().max(1.0));
    }

    #[test]
    fn transmission_phase_is_principal(
        alpha in -3.0f64..3.0,
        beta in 0.1f64..5.0,
        re in -2.0f64..2.0,
        im in 0.1f64..2.0,
    ) {
        let params = DefectParams::new(alpha, beta, Branch::Plus).unwrap();
        let lam = c(re, im);
        if let Ok(s) = predict_transmission(&params, lam) {
            prop_assert!(s.dphi > -std::f64::consts::PI && s.dphi <= std::f64::consts::PI);
            prop_assert!(s.dx.is_finite());
        }
    }

    #[test]
    fn branch_flip_inverts_the_norming_quotient(
        alpha in -3.0f64..3.0,
        beta in 0.1f64..5.0,
        re in -2.0f64..2.0,
        im in 0.2f64..2.0,
        c_re in -2.0f64..2.0,
        c_im in -2.0f64..2.0,
    ) {
        let lam = c(re, im);
        let weight = c(c_re, c_im);
        prop_assume!(weight.norm() > 1e-3);
        let plus = DefectParams::new(alpha, beta, Branch::Plus).unwrap();
        let minus = DefectParams::new(alpha, beta, Branch::Minus).unwrap();
        let d = ScatteringDatum::new(lam, weight).unwrap();
        if let (Ok(crossed), Ok(back)) = (
            relate_norming(&plus, &d),
            relate_norming(&plus, &d).and_then(|x| relate_norming(&minus, &x)),
        ) {
            prop_assert!(crossed.c.norm() > 0.0);
            prop_assert!((back.c - d.c).norm() <= 1e-12 * d.c.norm());
        }
    }
}
