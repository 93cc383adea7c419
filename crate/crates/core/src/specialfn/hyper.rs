//! Gauss hypergeometric ₂F₁ and the confluent function U.
//!
//! Both fall back on their Euler-type integral representations, evaluated
//! with the crate's adaptive Gauss–Kronrod rule after removing the algebraic
//! endpoint singularities by a power substitution.

use super::gamma::{beta, gamma, rgamma};
use crate::error::{Error, Result};
use crate::quadrature::gk::{Adaptive, Piece};
use num_complex::Complex64;

const INTEGRAL_TOL: f64 = 1e-13;

fn integrator() -> Adaptive {
    Adaptive { rel_tol: INTEGRAL_TOL, abs_tol: 0.0, max_panels: 4000 }
}

/// `∫_0^w s^{p-1} F(s) ds`, with the substitution `s = w u^{1/p}` when the
/// power is singular.
fn power_piece<'a>(w: f64, p: f64, f: impl Fn(f64) -> Complex64 + 'a) -> Piece<'a> {
    if p < 1.0 {
        let scale = w.powf(p) / p;
        let r = 1.0 / p;
        Piece::new(0.0, 1.0, move |u: f64| f(w * u.powf(r)) * scale)
    } else {
        Piece::new(0.0, w, move |s: f64| f(s) * s.powf(p - 1.0))
    }
}

fn series_2f1(a: f64, b: f64, c: f64, x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..5000 {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Euler's integral `B(b, c-b)^{-1} ∫_0^1 t^{b-1} (1-t)^{c-b-1} (1-zt)^{-a} dt`,
/// valid for `c > b > 0` and z off `[1, inf)`.
fn euler_2f1(a: f64, b: f64, c: f64, z: Complex64) -> Result<Complex64> {
    if !(c > b && b > 0.0) {
        return Err(Error::DomainError(format!("2F1 integral needs c > b > 0 (b={b}, c={c})")));
    }
    let d = c - b;
    let kernel = move |t: f64| (1.0 - z * t).powf(-a);
    let left = power_piece(0.5, b, move |t: f64| kernel(t) * (1.0 - t).powf(d - 1.0));
    let right = power_piece(0.5, d, move |s: f64| kernel(1.0 - s) * (1.0 - s).powf(b - 1.0));
    let out = integrator().integrate(&[left, right]);
    Ok(out.value / beta(b, d))
}

fn euler_either(a: f64, b: f64, c: f64, z: Complex64) -> Result<Complex64> {
    euler_2f1(a, b, c, z).or_else(|_| euler_2f1(b, a, c, z))
}

/// ₂F₁(a, b; c; x) for real x < 1.
pub fn hyp2f1_real(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    if !(x < 1.0) {
        return Err(Error::DomainError(format!("2F1 evaluated for x={x} >= 1")));
    }
    if x.abs() <= 0.75 {
        return Ok(series_2f1(a, b, c, x));
    }
    if x < 0.0 {
        // Pfaff: (1-x)^{-a} 2F1(a, c-b; c; x/(x-1))
        let u = x / (x - 1.0);
        let pre = (1.0 - x).powf(-a);
        if u <= 0.75 {
            return Ok(pre * series_2f1(a, c - b, c, u));
        }
        return Ok(pre * euler_either(a, c - b, c, Complex64::new(u, 0.0))?.re);
    }
    Ok(euler_either(a, b, c, Complex64::new(x, 0.0))?.re)
}

/// `₂F₁(a, b; c; 1 - w)` for `0 < w`, keeping the accuracy of a small `w`
/// that `1 - w` would round away. Below `w = 1/4` it uses the connection
/// formula about `z = 1`, which needs `c - a - b` off the integers; close to
/// one it loses about `log10(1/distance)` digits to cancellation.
pub fn hyp2f1_complement(a: f64, b: f64, c: f64, w: f64) -> Result<f64> {
    let e = c - a - b;
    if w >= 0.25 || (e - e.round()).abs() < 1e-9 {
        return hyp2f1_real(a, b, c, 1.0 - w);
    }
    let g = gamma(c);
    let t1 = g * gamma(e) * rgamma(c - a) * rgamma(c - b) * hyp2f1_real(a, b, 1.0 - e, w)?;
    let t2 = w.powf(e) * g * gamma(-e) * rgamma(a) * rgamma(b) * hyp2f1_real(c - a, c - b, 1.0 + e, w)?;
    Ok(t1 + t2)
}

/// ₂F₁(a, b; c; z) for complex z off `[1, inf)`; needs `c > b > 0` or
/// `c > a > 0` unless z is real.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return hyp2f1_real(a, b, c, z.re).map(|v| Complex64::new(v, 0.0));
    }
    if z.norm() <= 0.5 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for n in 0..5000 {
            let nf = n as f64;
            term = term * ((a + nf) * (b + nf) / ((c + nf) * (nf + 1.0))) * z;
            sum += term;
            if term.norm() < 1e-17 * sum.norm() {
                break;
            }
        }
        return Ok(sum);
    }
    euler_either(a, b, c, z)
}

/// Tricomi's confluent hypergeometric function U(a, b, z) for a > 0 and z
/// on the cut plane:
/// `U = z^{-a}/Γ(a) ∫_0^∞ e^{-s} s^{a-1} (1 + s/z)^{b-a-1} ds`.
pub fn hyperu(a: f64, b: f64, z: Complex64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::DomainError(format!("U(a, b, z) implemented for a > 0, got a={a}")));
    }
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::DomainError("U(a, b, z) needs z off (-inf, 0]".into()));
    }
    let c = b - a - 1.0;
    let zi = z.inv();
    let f = move |s: f64| (1.0 + s * zi).powf(c) * (-s).exp();
    let r = z.norm();
    let mut knots = vec![1.0_f64];
    if r > 1.0 {
        knots.extend([0.5 * r, r, 1.5 * r]);
    }
    let tail_end = knots[knots.len() - 1] + 60.0;
    knots.push(tail_end);
    let mut pieces = vec![power_piece(knots[0], a, f)];
    for w in knots.windows(2) {
        pieces.push(Piece::new(w[0], w[1], move |s: f64| f(s) * s.powf(a - 1.0)));
    }
    let out = integrator().integrate(&pieces);
    Ok(out.value * z.powf(-a) * rgamma(a))
}

pub fn hyperu_real(a: f64, b: f64, x: f64) -> Result<f64> {
    hyperu(a, b, Complex64::new(x, 0.0)).map(|v| v.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_near_one() {
        // 2F1(a, b; b; 1 - w) = w^-a, far below where 1 - w rounds to 1
        for (a, b) in [(0.3, 1.7), (-0.45, 0.8), (1.25, 2.0)] {
            for w in [1e-100, 1e-20, 1e-3, 0.2, 0.6] {
                let got = hyp2f1_complement(a, b, b, w).unwrap();
                assert!((got / w.powf(-a) - 1.0).abs() < 1e-13, "a={a} b={b} w={w}: {got}");
            }
        }
        // matches the direct evaluation where both work
        for (a, b, c) in [(0.5, 1.2, 2.3), (1.1, 0.6, 1.75), (2.0, 0.3, 2.6)] {
            let w = 0.01;
            let direct = hyp2f1_real(a, b, c, 1.0 - w).unwrap();
            assert!((hyp2f1_complement(a, b, c, w).unwrap() / direct - 1.0).abs() < 1e-11);
        }
    }

    #[test]
    fn elementary_2f1() {
        // 2F1(1,1;2;x) = -ln(1-x)/x
        for &x in &[-50.0, -3.0, -0.5, 0.3, 0.9, 0.99] {
            let v = hyp2f1_real(1.0, 1.0, 2.0, x).unwrap();
            let exact = -(1.0f64 - x).ln() / x;
            assert!(((v - exact) / exact).abs() < 1e-12, "x={x}: {v} vs {exact}");
        }
        // 2F1(a,b;b;x) = (1-x)^{-a}
        let v = hyp2f1(0.3, 0.7, 1.7, Complex64::new(0.2, 1.5)).unwrap();
        let w = hyp2f1(0.7, 0.3, 1.7, Complex64::new(0.2, 1.5)).unwrap();
        assert!((v - w).norm() < 1e-12);
    }

    #[test]
    fn complex_agrees_with_series_inside_disk() {
        let z = Complex64::new(0.3, 0.35);
        let series = hyp2f1(0.4, 0.8, 1.9, z).unwrap();
        let integral = euler_2f1(0.4, 0.8, 1.9, z).unwrap();
        assert!((series - integral).norm() < 1e-12);
    }

    #[test]
    fn u_closed_forms() {
        // U(a, a+1, z) = z^{-a}
        for &x in &[0.1, 1.0, 7.0, 30.0] {
            let v = hyperu_real(0.7, 1.7, x).unwrap();
            assert!((v / x.powf(-0.7) - 1.0).abs() < 1e-12, "{x}");
        }
        let z = Complex64::new(-3.0, 0.2);
        let v = hyperu(0.4, 1.4, z).unwrap();
        assert!((v / z.powf(-0.4) - 1.0).norm() < 1e-10, "{v}");
    }
}
