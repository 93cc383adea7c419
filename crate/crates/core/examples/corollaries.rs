//! The five derived equation forms, each solved through its transformed
//! density and checked against the combination of g = S[φ] it encodes.
//!
//!     cargo run --example corollaries

use num_complex::Complex64;
use stieltjes::density::{apply_transform, make_density, Support, TransformKind};
use stieltjes::quadrature::{stieltjes_transform, total_mass, CutPlanePoint, DEFAULT_REL_TOL};
use stieltjes::solver::{corollary_combination, solve_corollary_form};

fn main() -> stieltjes::error::Result<()> {
    let phi = make_density(|z: f64| (-z).exp(), 0.0, f64::INFINITY, Support::new(0.0, f64::INFINITY), true)?;
    let g = |z: Complex64| stieltjes_transform(&phi, CutPlanePoint::try_from(z).unwrap(), DEFAULT_REL_TOL).unwrap().value;
    let mass = total_mass(&phi, DEFAULT_REL_TOL)?.finite();

    let forms = [
        TransformKind::Dilation { a: 2.0 },
        TransformKind::Moment,
        TransformKind::Resolvent { a: 1.0 },
        TransformKind::Inversion { a: 1.0 },
        TransformKind::SquareRoot,
    ];
    let z = Complex64::new(0.7, 0.3);
    for form in forms {
        let psi = apply_transform(&phi, form)?;
        let direct = stieltjes_transform(&psi, CutPlanePoint::try_from(z)?, DEFAULT_REL_TOL)?.value;
        let via_g = corollary_combination(form, &g, mass, z)?;
        let r = solve_corollary_form(&phi, form, 1.0, 0.2)?;
        println!(
            "{:<26} |S[Tφ] - combination| = {:.1e}   root(b=1, c=0.2) = {}",
            format!("{form:?}"),
            (direct - via_g).norm(),
            r.root.map_or("none".into(), |x| format!("{x:.10}"))
        );
    }
    Ok(())
}
