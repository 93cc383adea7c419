//! Gamma, log-gamma, digamma and the Binet remainder `J(z)`.

use num_complex::Complex64;
use std::f64::consts::PI;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_8;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Taylor coefficients of `1/Γ(1+x)` about 0.
pub(crate) const RGAMMA1P: [f64; 28] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
];

/// Bernoulli numbers B_2, B_4, ..., B_20.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

fn lanczos_sum(x: f64) -> f64 {
    // x >= 0.5, argument already shifted by one
    let mut s = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (x + i as f64 - 1.0);
    }
    s
}

/// Γ(x) for real x; `inf`/`nan` at the poles.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 && x == x.floor() {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    if x == x.floor() && x <= 23.0 {
        return (1..x as u64).fold(1.0, |acc, k| acc * k as f64);
    }
    let t = x + LANCZOS_G - 0.5;
    (2.0 * PI).sqrt() * t.powf(x - 0.5) * (-t).exp() * lanczos_sum(x)
}

/// `1/Γ(x)`, finite everywhere (zero at the poles).
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        0.0
    } else if x.abs() < 0.5 {
        // 1/Γ(x) = x / Γ(1+x)
        x * RGAMMA1P.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    } else {
        1.0 / gamma(x)
    }
}

/// `ln |Γ(x)|` for real x.
pub fn ln_gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return f64::INFINITY;
    }
    if x < 0.5 {
        return (PI / (PI * x).sin().abs()).ln() - ln_gamma(1.0 - x);
    }
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if x < 10.0 {
        let t = x + LANCZOS_G - 0.5;
        return LN_SQRT_2PI + (x - 0.5) * t.ln() - t + lanczos_sum(x).ln();
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + binet(Complex64::new(x, 0.0)).re
}

/// Principal `ln Γ(z)` for `Re z > 0`, via the Binet remainder.
pub fn ln_gamma_complex(z: Complex64) -> Complex64 {
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + binet(z)
}

/// Digamma ψ(z) for complex z away from the poles.
pub fn digamma_complex(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // ψ(1-z) - ψ(z) = π cot(πz)
        let pz = z * PI;
        return digamma_complex(1.0 - z) - PI * pz.cos() / pz.sin();
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < 12.0 {
        acc -= w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv2;
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
        series += p * (b / (2.0 * (k as f64 + 1.0)));
        p *= inv2;
    }
    acc + w.ln() - inv * 0.5 - series
}

pub fn digamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return f64::NAN;
    }
    digamma_complex(Complex64::new(x, 0.0)).re
}

/// `(w + 1/2) log(1 + 1/w) - 1 = J(w) - J(w+1)`.
fn binet_step(w: Complex64) -> Complex64 {
    let u = w.inv();
    if u.norm() <= 0.5 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut p = u;
        let mut sign = -1.0;
        for m in 2..80 {
            p *= u;
            sign = -sign;
            let mf = m as f64;
            let term = p * (sign * (1.0 / (mf + 1.0) - 0.5 / mf));
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (w + 0.5) * (1.0 + u).ln() - 1.0
    }
}

/// Binet's function `J(z) = ln Γ(z) - (z - 1/2) ln z + z - ln √(2π)` on the
/// plane cut along `(-inf, 0]`.
pub fn binet(z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < 10.0 {
        acc += binet_step(w);
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut p = inv;
    let mut series = Complex64::new(0.0, 0.0);
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        let term = p * (b / (n * (n - 1.0)));
        series += term;
        if term.norm() <= 1e-17 * series.norm() {
            break;
        }
        p *= inv2;
    }
    acc + series
}

/// Beta function B(p, q) for real arguments.
pub fn beta(p: f64, q: f64) -> f64 {
    if p > 0.0 && q > 0.0 && p + q > 20.0 {
        return (ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q)).exp();
    }
    gamma(p) * gamma(q) * rgamma(p + q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_values() {
        assert!(rel(gamma(0.5), PI.sqrt()) < 1e-15);
        assert!(rel(gamma(5.0), 24.0) < 1e-15);
        assert!(rel(gamma(-1.5), 4.0 * PI.sqrt() / 3.0) < 1e-14);
        assert!(rel(gamma(7.3), 1_271.423_633_663_908_8) < 1e-13);
        assert!(rel(rgamma(0.1), 1.0 / 9.513_507_698_668_732) < 1e-14);
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for &x in &[0.3, 1.5, 4.2, 9.9, 10.1, 25.0, 60.5] {
            assert!((ln_gamma(x) - gamma(x).ln()).abs() < 1e-13 * (1.0 + gamma(x).ln().abs()), "{x}");
        }
    }

    #[test]
    fn digamma_values_and_recurrence() {
        assert!((digamma(1.0) + EULER_GAMMA).abs() < 1e-15);
        assert!(rel(digamma(0.5), -EULER_GAMMA - 2.0 * 2f64.ln()) < 1e-14);
        for i in 0..50 {
            let x = 0.1 + i as f64;
            assert!(rel(digamma(x + 1.0), digamma(x) + 1.0 / x) < 1e-12, "{x}");
        }
    }

    #[test]
    fn binet_values() {
        assert!((binet(Complex64::new(10.0, 0.0)).re - 0.008_330_563_433_362_87).abs() < 1e-16);
        // J(1) = 1 - ln √(2π)
        assert!((binet(Complex64::new(1.0, 0.0)).re - (1.0 - LN_SQRT_2PI)).abs() < 1e-15);
        // consistency with ln Γ along a complex ray
        let z = Complex64::new(3.0, 4.0);
        let lhs = ln_gamma_complex(z) - ln_gamma_complex(z + 1.0) + z.ln();
        assert!(lhs.norm() < 1e-13);
    }
}
