//! Principal branch of the Lambert W function and the boundary values
//! `W(-t + i0)` on the branch cut.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::E;

const MAX_ITER: usize = 100;

fn initial_guess(z: Complex64) -> Complex64 {
    let near_branch = z + 1.0 / E;
    if near_branch.norm() < 0.3 {
        let p = (2.0 * (E * z + 1.0)).sqrt();
        return -1.0 + p - p * p / 3.0 + p * p * p * (11.0 / 72.0);
    }
    if z.re > -1.0 && z.re < 1.5 && z.im.abs() < 1.0 && -2.5 * z.im.abs() - 0.2 < z.re {
        return z * (3.0 + 6.0 * z + z * z) / (3.0 + 9.0 * z + 5.0 * z * z);
    }
    let l = z.ln();
    l - l.ln()
}

fn halley(z: Complex64, mut w: Complex64) -> Complex64 {
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - z;
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.norm() <= 1e-15 * (1.0 + w.norm()) {
            break;
        }
    }
    w
}

/// W0(z), the principal branch, cut along `(-inf, -1/e)`.
pub fn lambert_w0(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re < -1.0 / E {
        return Err(Error::DomainError(format!("W0 evaluated on its branch cut at {}", z.re)));
    }
    if z.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if z.im == 0.0 && z.re == -1.0 / E {
        return Ok(Complex64::new(-1.0, 0.0));
    }
    let w = halley(z, initial_guess(z));
    if z.im == 0.0 {
        return Ok(Complex64::new(w.re, 0.0));
    }
    Ok(w)
}

pub fn lambert_w0_real(x: f64) -> Result<f64> {
    lambert_w0(Complex64::new(x, 0.0)).map(|w| w.re)
}

/// W0'(z) = W/(z(1 + W)), with W0'(0) = 1.
pub fn lambert_w0_prime(z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let w = lambert_w0(z)?;
    Ok(w / (z * (1.0 + w)))
}

/// Upper boundary value `W0(-t + i0)` for `t > 1/e`: the solution of
/// `w e^w = -t` with `0 < Im w < π`, by damped Newton iteration.
pub fn lambert_w0_upper_cut(t: f64) -> Result<Complex64> {
    if !(t > 1.0 / E) || !t.is_finite() {
        return Err(Error::DomainError(format!("cut boundary value needs t > 1/e, got {t}")));
    }
    let mut w = if t - 1.0 / E < 0.3 {
        let p = Complex64::new(0.0, (2.0 * (E * t - 1.0)).sqrt());
        -1.0 + p - p * p / 3.0 + p * p * p * (11.0 / 72.0)
    } else {
        Complex64::new(t.ln(), std::f64::consts::FRAC_PI_2)
    };
    let f = |w: Complex64| w * w.exp() + t;
    let mut fw = f(w);
    for _ in 0..200 {
        let d = w.exp() * (1.0 + w);
        let step = fw / d;
        let mut lambda = 1.0;
        let mut next = w - step;
        let mut fnext = f(next);
        while fnext.norm() > fw.norm() && lambda > 1e-6 {
            lambda *= 0.5;
            next = w - step * lambda;
            fnext = f(next);
        }
        let moved = (next - w).norm();
        w = next;
        fw = fnext;
        if moved <= 1e-16 * (1.0 + w.norm()) || fw.norm() == 0.0 {
            break;
        }
    }
    debug_assert!(w.im > 0.0 && w.im < std::f64::consts::PI);
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_values() {
        assert!((lambert_w0_real(1.0).unwrap() - 0.567_143_290_409_783_8).abs() < 1e-16);
        assert!((lambert_w0_real(E).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(lambert_w0_real(0.0).unwrap(), 0.0);
        assert!((lambert_w0_real(-0.3).unwrap() + 0.489_402_227_180_215_3).abs() < 1e-14);
        assert!(lambert_w0_real(-1.0).is_err());
    }

    #[test]
    fn defining_equation() {
        for &(re, im) in &[(1.0, 1.0), (-3.0, 0.1), (-3.0, -0.1), (100.0, -40.0), (-0.36, 1e-3), (1e-3, 1e-3)] {
            let z = Complex64::new(re, im);
            let w = lambert_w0(z).unwrap();
            assert!((w * w.exp() - z).norm() <= 1e-12 * (1.0 + z.norm()), "{z}");
            assert!(w.im.abs() < std::f64::consts::PI);
        }
    }

    #[test]
    fn cut_boundary_matches_limit() {
        for &t in &[0.368, 0.5, 2.0, 50.0, 1e6] {
            let w = lambert_w0_upper_cut(t).unwrap();
            assert!((w * w.exp() + t).norm() < 1e-12 * t);
            assert!(w.im > 0.0 && w.im < std::f64::consts::PI);
            let near = lambert_w0(Complex64::new(-t, 1e-12 * t)).unwrap();
            assert!((near - w).norm() < 1e-5, "t={t}");
        }
    }
}
