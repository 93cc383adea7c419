//! Cosine and sine integrals on the positive axis, through
//! `E1(ix) = -Ci(x) + i(Si(x) - π/2)`.
//!
//! `si` follows the convention `si(x) = Si(x) - π/2`, which tends to 0 at
//! infinity.

use super::incgamma::e1;
use num_complex::Complex64;

/// (Ci(x), si(x)) for x > 0.
pub fn ci_si(x: f64) -> (f64, f64) {
    let e = e1(Complex64::new(0.0, x));
    (-e.re, e.im)
}

pub fn ci(x: f64) -> f64 {
    ci_si(x).0
}

pub fn si(x: f64) -> f64 {
    ci_si(x).1
}
