//! The boundary-bound (destructive) solution: the right half-line stays
//! zero while a single soliton dressed exactly at the defect eigenvalue λ₀
//! lives on the left. Its amplitude |β| and drift velocity 2α are set by the
//! defect; for α ≠ 0 the soliton runs into the defect and is absorbed.
//!
//! Run with `cargo run --example destructive_soliton`.

use defect_nls::defect::{destructive_solution, Branch, DefectParams};
use defect_nls::linalg::{c, Vec2C};

fn peak_position(d: &defect_nls::defect::DestructiveSolution, t: f64) -> defect_nls::Result<f64> {
    let mut best = (0.0, f64::NEG_INFINITY);
    for k in 0..=1600 {
        let x = -8.0 + k as f64 * 0.01;
        let mag = d.field_left(t, x)?.norm();
        if mag > best.1 {
            best = (x, mag);
        }
    }
    Ok(best.0)
}

fn main() -> defect_nls::Result<()> {
    for alpha in [0.0, 0.5] {
        let params = DefectParams::new(alpha, 1.0, Branch::Plus)?;
        let d = destructive_solution(&params, Vec2C::new(c(1.0, 0.0), c(1.0, 0.0)))?;
        println!("== alpha = {alpha} ==");
        println!("  lambda0   = {}", d.lambda0());
        println!("  amplitude = {} (|beta|)", d.amplitude());
        println!("  velocity  = {} (2 alpha)", d.velocity());

        println!("  t     peak x   |u~(t,0)|   r1        r2");
        for k in 0..5 {
            let t = -2.0 + k as f64;
            let peak = peak_position(&d, t)?;
            let at0 = d.field_left(t, 0.0)?.norm();
            let (r1, r2) = d.defect_residual(t)?;
            println!("  {t:+.1} {peak:+8.3} {at0:10.6} {r1:9.2e} {r2:9.2e}");
        }

        // the right side is identically zero: everything that reaches the
        // defect is destroyed
        let right = d.field_right(1.0, 3.0)?;
        println!("  u(1, 3) on the right half-line = {right}");
        println!();
    }
    Ok(())
}
