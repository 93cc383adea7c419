//! The existence threshold in action: with b = 0 a root appears exactly
//! when 0 < c < K, and disappears as c crosses K.
//!
//!     cargo run --example boundary

use stieltjes::catalog::{entry, params, solve_entry};

fn main() -> stieltjes::error::Result<()> {
    let p = params(&[("a", 1.0), ("alpha", 0.5)]);
    let e = entry("p2")?;
    let k = e.critical_formula(&p)?.to_f64();
    println!("p2 with a = 1, α = 1/2: K = {k}");
    for row in e.condition_table(&p)? {
        println!("  {:<24} {:?}", row.when, row.outcome);
    }
    println!();
    for c in [0.5 * k, k * (1.0 - 1e-4), k * (1.0 + 1e-4), 2.0 * k] {
        let r = solve_entry("p2", &p, 0.0, c)?;
        println!(
            "c = {c:<20} {:<11} root = {}",
            format!("{:?}", r.report.classification.outcome),
            r.report.root.map_or("-".into(), |x| format!("{x:.6e}"))
        );
    }
    Ok(())
}
