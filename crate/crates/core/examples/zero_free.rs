//! Scanning the sectors in which the catalog's special functions are
//! claimed to have no zeros.
//!
//!     cargo run --release --example zero_free

use stieltjes::catalog::{all_entries, default_radii, zero_free_scan};

fn main() -> stieltjes::error::Result<()> {
    let radii = default_radii();
    for e in all_entries() {
        let Some(claim) = e.zero_free else { continue };
        let r = zero_free_scan(e.id, &e.default_params(), &radii, 64, None)?;
        println!(
            "{:<10} {:<26} |arg z| < {:.2}π   min |f| = {:.3e}   {}",
            e.id, claim.function, claim.half_angle, r.min_abs, r.verdict
        );
    }
    Ok(())
}
