//! Tour of the equation catalog: every entry's closed form against
//! quadrature, its critical value, and one solve.
//!
//!     cargo run --release --example catalog

use stieltjes::catalog::{all_entries, critical_check, cross_validate, log_grid, solve_entry, Tier};

fn main() -> stieltjes::error::Result<()> {
    let grid = log_grid(0.1, 10.0, 8);
    println!("{:<12} {:>4} {:>10} {:>14} {:>14} {:>12}  table", "entry", "tier", "max err", "K (formula)", "K (quad)", "root");
    for e in all_entries() {
        let p = e.default_params();
        let err = match e.tier {
            Tier::ClosedForm => format!("{:.1e}", cross_validate(e.id, &p, &grid)?),
            Tier::QuadratureOnly => "-".into(),
        };
        let (formula, quad) = critical_check(e.id, &p)?;
        let r = solve_entry(e.id, &p, 1.0, 0.0)?;
        println!(
            "{:<12} {:>4} {:>10} {:>14.8} {:>14.8} {:>12.8}  {}",
            e.id,
            e.tier.number(),
            err,
            formula.to_f64(),
            quad.to_f64(),
            r.report.root.unwrap_or(f64::NAN),
            if r.table_check { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
