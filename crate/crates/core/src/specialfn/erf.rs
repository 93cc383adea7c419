//! Complementary error function and its scaled form `erfcx(z) = e^{z²} erfc(z)`.

use num_complex::Complex64;
use std::f64::consts::PI;

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const MAX_ITER: usize = 5000;

fn erf_series(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut p = z;
    let mut sum = z;
    for n in 1..MAX_ITER {
        let nf = n as f64;
        p = p * (-z2) / nf;
        let term = p / (2.0 * nf + 1.0);
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    sum * FRAC_2_SQRT_PI
}

/// `z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))`, so that
/// `erfcx(z) = 1/(√π · fraction)` for `Re z > 0`.
fn laplace_fraction(z: Complex64) -> Complex64 {
    let tiny = 1e-300;
    let mut f = z;
    let mut c = z;
    let mut d = Complex64::new(0.0, 0.0);
    for n in 1..MAX_ITER {
        let an = 0.5 * n as f64;
        d = z + d * an;
        if d.norm() < tiny {
            d = Complex64::new(tiny, 0.0);
        }
        c = z + an / c;
        if c.norm() < tiny {
            c = Complex64::new(tiny, 0.0);
        }
        d = d.inv();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    f
}

fn use_fraction(z: Complex64) -> bool {
    z.re >= 1.0 && z.norm() >= 2.0
}

/// erfc(z) for complex z.
pub fn erfc(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        return 2.0 - erfc(-z);
    }
    if use_fraction(z) {
        (-z * z).exp() / (laplace_fraction(z) * PI.sqrt())
    } else {
        1.0 - erf_series(z)
    }
}

/// `e^{z²} erfc(z)` for `Re z >= 0`.
pub fn erfcx(z: Complex64) -> Complex64 {
    if use_fraction(z) {
        (laplace_fraction(z) * PI.sqrt()).inv()
    } else {
        (z * z).exp() * erfc(z)
    }
}

pub fn erfc_real(x: f64) -> f64 {
    erfc(Complex64::new(x, 0.0)).re
}

pub fn erfcx_real(x: f64) -> f64 {
    if x >= 2.0 {
        erfcx(Complex64::new(x, 0.0)).re
    } else {
        (x * x).exp() * erfc_real(x)
    }
}
