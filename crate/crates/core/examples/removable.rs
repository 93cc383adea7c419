//! Closed forms of the difference-quotient type are 0/0 at z = a; the
//! catalog bridges the point with its limit.
//!
//!     cargo run --example removable

use stieltjes::catalog::entry;

fn main() -> stieltjes::error::Result<()> {
    for id in ["p2", "l1", "l6", "l7"] {
        let e = entry(id)?;
        let p = e.default_params();
        let ext = e.extension.expect("entry has an extension");
        let a = (ext.point)(&p);
        let v = (ext.value)(&p);
        println!("{id}: z = a = {a}, extension value {v:.15}");
        for s in [1.0 - 1e-6, 1.0, 1.0 + 1e-6, 1.01] {
            let x = a * s;
            let got = e.stieltjes_closed(&p, x)?;
            println!("    S({x:.9}) = {got:.15}   rel gap {:.1e}", ((got - v) / v).abs());
        }
    }
    Ok(())
}
