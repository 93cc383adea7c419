//! Sampling the sign of Im F(z) off the real axis: it always opposes Im z,
//! so every root lies on the positive axis.
//!
//!     cargo run --example offaxis

use stieltjes::catalog::{entry, params};
use stieltjes::solver::verify_no_offaxis_roots;

fn main() -> stieltjes::error::Result<()> {
    for (id, p) in [
        ("Ei1", params(&[("alpha", 1.0)])),
        ("p1", params(&[("alpha", 0.5)])),
        ("Erfc1", params(&[("a", 1.0)])),
    ] {
        let phi = entry(id)?.density(&p)?;
        let r = verify_no_offaxis_roots(&phi, 0.5, 0.0, 100)?;
        println!(
            "{id:<6} {} samples, {} violations, min |Im F| = {:.3e}",
            r.samples,
            r.violations.len(),
            r.min_abs_imag
        );
    }
    Ok(())
}
