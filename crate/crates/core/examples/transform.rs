//! Evaluating S[φ](z) on the cut plane, together with the two integrals
//! that decide solvability.
//!
//!     cargo run --example transform

use num_complex::Complex64;
use stieltjes::density::{make_density, Support};
use stieltjes::quadrature::{mass_over_zeta, stieltjes_transform, total_mass, CutPlanePoint, DEFAULT_REL_TOL};
use stieltjes::specialfn::e1_scaled;

fn main() -> stieltjes::error::Result<()> {
    // S[e^{-ζ}](z) = e^z E1(z)
    let phi = make_density(|z: f64| (-z).exp(), 0.0, f64::INFINITY, Support::new(0.0, f64::INFINITY), true)?;
    for (re, im) in [(1.0, 0.0), (0.1, 0.0), (-2.0, 0.5), (-5.0, -0.01), (0.0, 3.0)] {
        let z = CutPlanePoint::new(re, im)?;
        let q = stieltjes_transform(&phi, z, DEFAULT_REL_TOL)?.checked()?;
        let exact = e1_scaled(Complex64::new(re, im));
        println!(
            "z = {:>6.2}{:+.2}i   S = {:.12}{:+.12}i   |err| = {:.1e}   panels = {}",
            re,
            im,
            q.value.re,
            q.value.im,
            (q.value - exact).norm(),
            q.subdivisions
        );
    }

    println!("\n∫φ   = {:?}", total_mass(&phi, DEFAULT_REL_TOL)?);
    println!("∫φ/ζ = {:?}  (diverges at the origin)", mass_over_zeta(&phi, DEFAULT_REL_TOL)?);

    let sqrt = make_density(|z: f64| z.sqrt() * (-z).exp(), 0.5, f64::INFINITY, Support::new(0.0, f64::INFINITY), true)?;
    println!("∫√ζ e^-ζ/ζ = {:?}  (√π = {})", mass_over_zeta(&sqrt, DEFAULT_REL_TOL)?, std::f64::consts::PI.sqrt());

    match CutPlanePoint::new(-1.0, 0.0) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("\n{e}"),
    }
    Ok(())
}
