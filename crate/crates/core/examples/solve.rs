//! Classifying and solving S[φ](x) - bx - c = 0 for a user-supplied density.
//!
//!     cargo run --example solve

use stieltjes::density::{make_density, Density, Support};
use stieltjes::quadrature::{stieltjes_real, DEFAULT_REL_TOL};
use stieltjes::solver::solve_equation;

fn main() -> stieltjes::error::Result<()> {
    // φ = ζ/(1+ζ)^3 : ∫φ/ζ = 1/2, so K = 1/2.
    let phi = make_density(|z: f64| z / (1.0 + z).powi(3), 1.0, 2.0, Support::new(0.0, f64::INFINITY), true)?;

    println!("{:>5} {:>6}  {:<11} {:>16} {:>10} {:>9}", "b", "c", "outcome", "root", "residual", "bound");
    for (b, c) in [(1.0, 0.0), (1.0, 0.4), (1.0, 0.6), (0.0, 0.25), (0.0, 0.49), (0.0, 0.51), (0.0, -0.1)] {
        let r = solve_equation(&phi, b, c)?;
        let cls = r.classification;
        println!(
            "{b:>5} {c:>6}  {:<11} {:>16} {:>10} {:>9}",
            format!("{:?}", cls.outcome),
            r.root.map_or("-".into(), |x| format!("{x:.12}")),
            r.residual.map_or("-".into(), |x| format!("{x:.1e}")),
            if cls.is_unique_root() { format!("{:.4}", cls.hi) } else { "-".into() },
        );
        if let Some(x) = r.root {
            let s = stieltjes_real(&phi, x, DEFAULT_REL_TOL)?.value.re;
            assert!((s - b * x - c).abs() < 1e-9);
        }
    }

    let zero = Density::zero();
    println!("\nzero density, b = 0, c = 0: {:?}", solve_equation(&zero, 0.0, 0.0)?.classification.outcome);
    Ok(())
}
