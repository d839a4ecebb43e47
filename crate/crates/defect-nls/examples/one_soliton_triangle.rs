//! Three independent routes to the same one-soliton field:
//!
//! 1. a one-fold Darboux dressing of the zero seed,
//! 2. the reflectionless inverse-scattering linear system,
//! 3. the closed sech formula.
//!
//! Run with `cargo run --example one_soliton_triangle`.

use defect_nls::darboux::{one_soliton_closed, DressingChain, HalfLine, OneSolitonParams};
use defect_nls::lax::SpectralPoint;
use defect_nls::linalg::{c, Vec2C};
use defect_nls::scattering::{init_to_norming, solve_reflectionless};

fn main() -> defect_nls::Result<()> {
    // an off-axis eigenvalue and an asymmetric init, so nothing cancels by
    // accident
    let point = SpectralPoint::new(c(0.3, 1.2), Vec2C::new(c(1.0, -0.5), c(2.0, 1.0)))?;
    let chain = DressingChain::new(vec![point], HalfLine::Right)?;
    let params = OneSolitonParams::from_spectral_point(&point)?;
    let data = init_to_norming(&chain)?;

    println!("lambda      = {}", point.lambda);
    println!("norming C   = {}", data[0].c);
    println!(
        "center/phase: x1 = {:+.6}, phi1 = {:+.6}",
        params.x1, params.phi1
    );

    let mut worst = 0.0f64;
    for i in 0..41 {
        for j in 0..41 {
            let t = -3.0 + 6.0 * i as f64 / 40.0;
            let x = -3.0 + 6.0 * j as f64 / 40.0;
            let dressed = chain.field(t, x)?;
            let scattered = solve_reflectionless(&data, t, x)?;
            let closed = one_soliton_closed(&params, t, x);
            worst = worst
                .max((dressed - scattered).norm())
                .max((dressed - closed).norm())
                .max((scattered - closed).norm());
        }
    }
    println!("max pairwise deviation on a 41x41 grid over [-3,3]^2: {worst:.3e}");

    println!("\n|u(0, x)| profile:");
    for k in 0..13 {
        let x = -3.0 + 0.5 * k as f64;
        let amp = chain.field(0.0, x)?.norm();
        let bar = "#".repeat((amp * 20.0).round() as usize);
        println!("  x = {x:+5.2}  |u| = {amp:.4}  {bar}");
    }
    Ok(())
}
