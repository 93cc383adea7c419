//! Spot values of the special functions behind the catalog's closed forms.
//!
//!     cargo run --example special_functions

use num_complex::Complex64;
use stieltjes::specialfn::*;

fn main() -> stieltjes::error::Result<()> {
    let rows: Vec<(&str, f64)> = vec![
        ("E1(1)", e1_real(1.0)),
        ("W0(1)", lambert_w0_real(1.0)?),
        ("Γ(0.5, 1)", upper_gamma_real(0.5, 1.0)),
        ("ψ(1)", digamma(1.0)),
        ("K_{1/2}(2)", bessel_k_real(0.5, 2.0)?),
        ("erfc(1)", erfc_real(1.0)),
        ("Ci(1)", ci(1.0)),
        ("si(1) = Si(1)-π/2", si(1.0)),
        ("J_0(1)", bessel_j(0.0, 1.0)?),
        ("Y_0(1)", bessel_y(0.0, 1.0)?),
        ("2F1(1,1;2;0.5)", hyp2f1_real(1.0, 1.0, 2.0, 0.5)?),
        ("ln Γ(10)", ln_gamma(10.0)),
    ];
    for (name, v) in rows {
        println!("{name:<20} {v:>22.16}");
    }

    let z = Complex64::new(-3.0, 0.5);
    println!("\noff the axis, z = {z}");
    println!("e^z E1(z)     {:.14}", e1_scaled(z));
    println!("erfcx(z)      {:.14}", erfcx(z));
    println!("W0(z)         {:.14}", lambert_w0(z)?);
    println!("J(z) (Binet)  {:.14}", binet(z));
    Ok(())
}
