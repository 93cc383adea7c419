//! Bessel functions: J and Y of real order and positive argument, K of real
//! order (real argument by Temme's method, complex argument through the
//! confluent hypergeometric U).
//!
//! The real-argument routines follow the classic Steed/Temme scheme:
//! a continued fraction for `J'/J` (or `K'/K`), downward recurrence to an
//! order `|μ| <= 1/2`, Temme's series for small x or a second complex
//! continued fraction otherwise, then upward recurrence for Y (or K).

use super::gamma::{ln_gamma, RGAMMA1P};
use super::hyper::hyperu;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300 / 1e-16;
const MAX_ITER: usize = 100_000;
const XMIN: f64 = 2.0;

/// `Γ1(μ) = (1/Γ(1-μ) - 1/Γ(1+μ))/(2μ)` and
/// `Γ2(μ) = (1/Γ(1-μ) + 1/Γ(1+μ))/2` for `|μ| <= 1/2`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let m2 = mu * mu;
    // 1/Γ(1+x) = Σ c_k x^k: odd k give -Γ1, even k give Γ2
    let odd = RGAMMA1P.iter().skip(1).step_by(2).rev();
    let even = RGAMMA1P.iter().step_by(2).rev();
    let g1 = -odd.fold(0.0, |acc, &c| acc * m2 + c);
    let g2 = even.fold(0.0, |acc, &c| acc * m2 + c);
    let gampl = g2 - mu * g1; // 1/Γ(1+μ)
    let gammi = g2 + mu * g1; // 1/Γ(1-μ)
    (g1, g2, gampl, gammi)
}

/// (J_ν(x), Y_ν(x), J'_ν(x), Y'_ν(x)) for ν >= 0, x > 0.
fn besseljy(nu: f64, x: f64) -> (f64, f64, f64, f64) {
    let nl = if x < XMIN { (nu + 0.5) as i64 } else { ((nu - x + 1.5) as i64).max(0) };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..MAX_ITER {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() <= EPS {
            break;
        }
    }
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;
    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let e = e.exp();
        let mut p = e / (gampl * PI);
        let mut q = 1.0 / (e * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut c = 1.0;
        let d = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= d / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * (ff + r * q);
            sum += del;
            let del1 = c * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                break;
            }
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        for i in 1..MAX_ITER {
            a += 2.0 * i as f64;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() <= EPS {
                break;
            }
        }
        let gam = (p - f) / q;
        let mut r = (w / ((p - f) * gam + q)).sqrt();
        if rjl < 0.0 {
            r = -r;
        }
        rjmu = r;
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    let fact = rjmu / rjl;
    let jo = rjl1 * fact;
    let jpo = rjp1 * fact;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let yo = rymu;
    let ypo = nu * xi * rymu - ry1;
    (jo, yo, jpo, ypo)
}

/// Hankel's asymptotic expansion, valid for x large compared with ν².
fn hankel(nu: f64, x: f64) -> Option<(f64, f64)> {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    let mut k = 1usize;
    loop {
        let kf = k as f64;
        term *= (mu - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * x);
        if term.abs() > last {
            return None;
        }
        last = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
        k += 1;
        if k > 200 {
            return None;
        }
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    let s = (2.0 / (PI * x)).sqrt();
    let (sn, cs) = chi.sin_cos();
    Some((s * (p * cs - q * sn), s * (p * sn + q * cs)))
}

fn jy_nonneg(nu: f64, x: f64) -> (f64, f64) {
    if x > 30.0 + nu * nu {
        if let Some(v) = hankel(nu, x) {
            return v;
        }
    }
    let (j, y, _, _) = besseljy(nu, x);
    (j, y)
}

/// (J_ν(x), Y_ν(x)) for real ν and x > 0.
pub fn bessel_jy(nu: f64, x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) || !x.is_finite() || !nu.is_finite() {
        return Err(Error::DomainError(format!("Bessel J/Y need x > 0, got x={x}, nu={nu}")));
    }
    if nu >= 0.0 {
        return Ok(jy_nonneg(nu, x));
    }
    let n = -nu;
    let (j, y) = jy_nonneg(n, x);
    let (s, c) = (PI * n).sin_cos();
    Ok((c * j - s * y, s * j + c * y))
}

pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if x > 0.0 && x < 1e-8 && nu > -1.0 {
        // two series terms are exact to rounding; the recurrences underflow
        let h = 0.5 * x;
        return Ok((nu * h.ln() - ln_gamma(1.0 + nu)).exp() * (1.0 - h * h / (1.0 + nu)));
    }
    bessel_jy(nu, x).map(|v| v.0)
}

pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    bessel_jy(nu, x).map(|v| v.1)
}

/// `e^x K_ν(x)` for real ν and x > 0 (Temme's method for x < 2, Steed's
/// continued fraction otherwise).
pub fn bessel_k_scaled(nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() || !nu.is_finite() {
        return Err(Error::DomainError(format!("Bessel K needs x > 0, got x={x}")));
    }
    let nu = nu.abs();
    let nl = (nu + 0.5) as i64;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let (mut rkmu, mut rk1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let mut sum = ff;
        let e = e.exp();
        let mut p = 0.5 * e / gampl;
        let mut q = 0.5 / (e * gammi);
        let mut c = 1.0;
        let d = x2 * x2;
        let mut sum1 = p;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= d / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * ff;
            sum += del;
            let del1 = c * (p - fi * ff);
            sum1 += del1;
            if del.abs() < sum.abs() * EPS {
                break;
            }
        }
        rkmu = sum * x.exp();
        rk1 = sum1 * xi2 * x.exp();
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut h = d;
        let mut delh = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - xmu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            a -= 2.0 * fi;
            c = -a * c / (fi + 1.0);
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                break;
            }
        }
        h *= a1;
        rkmu = (PI / (2.0 * x)).sqrt() / s;
        rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
    }
    for i in 1..=nl {
        let rktemp = (xmu + i as f64) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    Ok(rkmu)
}

pub fn bessel_k_real(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_k_scaled(nu, x)? * (-x).exp())
}

/// `K_ν(z)` on the cut plane, from
/// `K_ν(z) = √π (2z)^ν e^{-z} U(ν + 1/2, 2ν + 1, 2z)`.
pub fn bessel_k(nu: f64, z: Complex64) -> Result<Complex64> {
    Ok(bessel_k_scaled_complex(nu, z)? * (-z).exp())
}

/// `e^z K_ν(z)` on the cut plane.
pub fn bessel_k_scaled_complex(nu: f64, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re > 0.0 {
        return Ok(Complex64::new(bessel_k_scaled(nu, z.re)?, 0.0));
    }
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::DomainError("Bessel K is evaluated on the cut plane only".into()));
    }
    let nu = nu.abs();
    let two_z = 2.0 * z;
    Ok(PI.sqrt() * two_z.powf(nu) * hyperu(nu + 0.5, 2.0 * nu + 1.0, two_z)?)
}
