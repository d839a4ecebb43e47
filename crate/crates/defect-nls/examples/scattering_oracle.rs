//! Cross-checks the Darboux construction against the inverse-scattering
//! route for a three-soliton field: the chain's init vectors are converted
//! to norming constants and the reflectionless linear system must reproduce
//! the dressed field everywhere.
//!
//! Run with `cargo run --example scattering_oracle`.

use defect_nls::darboux::{DressingChain, HalfLine};
use defect_nls::lax::SpectralPoint;
use defect_nls::linalg::{c, Vec2C};
use defect_nls::scattering::{init_to_norming, solve_reflectionless};

fn main() -> defect_nls::Result<()> {
    let chain = DressingChain::new(
        vec![
            SpectralPoint::new(c(0.5, 0.8), Vec2C::new(c(1.0, 0.3), c(-0.7, 0.2)))?,
            SpectralPoint::new(c(-0.4, 1.1), Vec2C::new(c(0.6, -1.0), c(1.3, 0.4)))?,
            SpectralPoint::new(c(0.1, 0.6), Vec2C::new(c(-1.1, 0.9), c(0.5, 0.8)))?,
        ],
        HalfLine::Right,
    )?;
    let data = init_to_norming(&chain)?;

    println!("scattering data equivalent to the 3-fold dressing:");
    for (j, d) in data.iter().enumerate() {
        println!(
            "  j={j}: lambda = {}, C = {}, center = {:+.4}, phase = {:+.4}",
            d.lambda,
            d.c,
            d.center(),
            d.phase()
        );
    }

    let mut worst = 0.0f64;
    for i in 0..21 {
        for j in 0..21 {
            let t = -2.0 + 4.0 * i as f64 / 20.0;
            let x = -2.0 + 4.0 * j as f64 / 20.0;
            let diff = (chain.field(t, x)? - solve_reflectionless(&data, t, x)?).norm();
            worst = worst.max(diff);
        }
    }
    println!("\nmax |dressing - inverse scattering| on a 21x21 grid: {worst:.3e}");

    println!("\n|u(t, 0)| at the origin as the solitons pass:");
    for k in 0..9 {
        let t = -2.0 + 0.5 * k as f64;
        println!("  t = {t:+4.1}  |u| = {:.5}", chain.field(t, 0.0)?.norm());
    }
    Ok(())
}
