use super::{get, CatalogEntry, Extension, Params, Tier, ZeroFreeClaim};
use crate::density::{Density, DensityBuilder};
use crate::error::Result;
use crate::quadrature::ExtendedReal;
use crate::specialfn::{
    bessel_j, bessel_k_scaled, bessel_k_scaled_complex, beta as beta_fn, binet, ci_si, digamma, e1_scaled,
    e1_scaled_real, erfcx, erfcx_real, gamma, hyp2f1, hyp2f1_complement, hyperu_real, lambert_w0, lambert_w0_prime,
    lambert_w0_real, lambert_w0_upper_cut, upper_gamma_scaled, EULER_GAMMA,
};
use num_complex::Complex64;
use std::f64::consts::{E, PI};

type Check = std::result::Result<(), String>;

fn require(cond: bool, msg: &str) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn lerp(u: f64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * u
}

fn draw_a(u: f64) -> f64 {
    lerp(u, 0.5, 2.0)
}

/// `|α| ∈ [0.1, 0.85]` with the sign taken from `s`.
fn draw_signed(u: f64, s: f64) -> f64 {
    let m = lerp(u, 0.1, 0.85);
    if s < 0.5 {
        -m
    } else {
        m
    }
}

fn real(z: f64) -> Complex64 {
    Complex64::new(z, 0.0)
}

fn inf() -> ExtendedReal {
    ExtendedReal::PosInfinity
}

fn fin(v: f64) -> ExtendedReal {
    ExtendedReal::exact(v)
}

fn csc(x: f64) -> f64 {
    1.0 / x.sin()
}

/// `(ζ^α - a^α)/(ζ - a)`; near `ζ = a` written through `r = ζ/a - 1` to
/// avoid cancellation.
fn power_quotient(alpha: f64, a: f64, zeta: f64) -> f64 {
    let r = (zeta - a) / a;
    if r == 0.0 {
        return alpha * a.powf(alpha - 1.0);
    }
    if r.abs() > 0.5 {
        return (zeta.powf(alpha) - a.powf(alpha)) / (zeta - a);
    }
    a.powf(alpha) * (alpha * r.ln_1p()).exp_m1() / (a * r)
}

/// `log(ζ/a)/(ζ - a)`, equal to `1/a` at `ζ = a`.
fn log_quotient(a: f64, zeta: f64) -> f64 {
    let r = (zeta - a) / a;
    if r == 0.0 {
        return 1.0 / a;
    }
    if r.abs() > 0.5 {
        return (zeta / a).ln() / (zeta - a);
    }
    r.ln_1p() / (a * r)
}

fn no_params(_: &Params) -> Check {
    Ok(())
}

fn no_draw(_: &[f64]) -> Params {
    Params::new()
}

fn positive_a(p: &Params) -> Check {
    require(get(p, "a") > 0.0, "a must be positive")
}

fn positive_alpha(p: &Params) -> Check {
    require(get(p, "alpha") > 0.0, "alpha must be positive")
}

fn positive_alpha_d(p: &Params) -> Check {
    require(get(p, "alpha") > 0.0 && get(p, "d") > 0.0, "alpha and d must be positive")
}

fn draw_only_a(u: &[f64]) -> Params {
    super::params(&[("a", draw_a(u[0]))])
}

fn draw_only_alpha(u: &[f64]) -> Params {
    super::params(&[("alpha", lerp(u[0], 0.3, 2.0))])
}

fn draw_alpha_d(u: &[f64]) -> Params {
    super::params(&[("alpha", lerp(u[0], 0.3, 2.0)), ("d", lerp(u[1], 0.3, 2.0))])
}

fn unsupported(_: &Params) -> Result<Density> {
    unreachable!("every registry entry supplies a density")
}

fn infinite(_: &Params) -> ExtendedReal {
    inf()
}

const BASE: CatalogEntry = CatalogEntry {
    id: "",
    section: "",
    equation: "",
    density_text: "",
    domain_text: "",
    threshold_text: "∞",
    param_names: &[],
    tier: Tier::ClosedForm,
    printed_sign: 1.0,
    zero_free: None,
    extension: None,
    validate: no_params,
    build: unsupported,
    printed: None,
    critical: infinite,
    draw: no_draw,
    defaults: &[],
};

fn at_a(p: &Params) -> f64 {
    get(p, "a")
}

pub(super) fn all() -> Vec<CatalogEntry> {
    vec![
        // ---------------------------------------------------------------- exponential
        CatalogEntry {
            id: "e1",
            section: "Exponential forms",
            equation: "π z^{-1/2} (1 - e^{-2a z^{1/2}})/2 - bz - c = 0",
            density_text: "ζ^{-1/2} sin²(a ζ^{1/2})",
            domain_text: "a > 0",
            threshold_text: "πa",
            param_names: &["a"],
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| {
                    if z <= 0.0 {
                        return 0.0;
                    }
                    let s = (a * z.sqrt()).sin();
                    s * s / z.sqrt()
                })
                .p0(0.5)
                .delta(0.5)
                .oscillation(0.5, PI / a)
                .build()
            },
            printed: Some(|p, x| {
                let a = get(p, "a");
                Ok(PI / x.sqrt() * -(-2.0 * a * x.sqrt()).exp_m1() / 2.0)
            }),
            critical: |p| fin(PI * get(p, "a")),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "e2",
            section: "Exponential forms",
            equation: "π z^{-1/2} (1 + e^{-2a z^{1/2}})/2 - bz - c = 0",
            density_text: "ζ^{-1/2} cos²(a ζ^{1/2})",
            domain_text: "a > 0",
            param_names: &["a"],
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| {
                    let c = (a * z.sqrt()).cos();
                    c * c / z.sqrt()
                })
                .p0(-0.5)
                .delta(0.5)
                .oscillation(0.5, PI / a)
                .build()
            },
            printed: Some(|p, x| {
                let a = get(p, "a");
                Ok(PI / x.sqrt() * (1.0 + (-2.0 * a * x.sqrt()).exp()) / 2.0)
            }),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        // ---------------------------------------------------------------- hyperbolic
        CatalogEntry {
            id: "hyperbolic1",
            section: "Hyperbolic forms",
            equation: "π z^{-1/2} ((β/λ - λ/β) sinh(2a z^{1/2})/2 - 1) / ((β sinh(a z^{1/2}))² - (λ cosh(a z^{1/2}))²) - bz - c = 0",
            density_text: "ζ^{-1/2} / ((β sin(a ζ^{1/2}))² + (λ cos(a ζ^{1/2}))²)",
            domain_text: "a > 0, βλ > 0",
            param_names: &["a", "beta", "lambda_"],
            validate: |p| {
                positive_a(p)?;
                require(get(p, "beta") * get(p, "lambda_") > 0.0, "beta*lambda_ must be positive")
            },
            build: |p| {
                let (a, b, l) = (get(p, "a"), get(p, "beta"), get(p, "lambda_"));
                DensityBuilder::new(move |z: f64| {
                    let w = a * z.sqrt();
                    let (s, c) = w.sin_cos();
                    1.0 / (z.sqrt() * (b * b * s * s + l * l * c * c))
                })
                .p0(-0.5)
                .delta(0.5)
                .oscillation(0.5, PI / a)
                .build()
            },
            // numerator and denominator share the factor (β tanh w - λ)
            printed: Some(|p, x| {
                let (a, b, l) = (get(p, "a"), get(p, "beta"), get(p, "lambda_"));
                let t = (a * x.sqrt()).tanh();
                Ok(PI / x.sqrt() * (l * t + b) / (b * l * (b * t + l)))
            }),
            draw: |u| super::params(&[("a", draw_a(u[0])), ("beta", lerp(u[1], 0.5, 2.0)), ("lambda_", lerp(u[2], 0.5, 2.0))]),
            defaults: &[("a", 1.0), ("beta", 1.0), ("lambda_", 2.0)],
            ..BASE
        },
        // ---------------------------------------------------------------- power laws
        CatalogEntry {
            id: "p1",
            section: "Power laws",
            equation: "bz - π csc(πα) z^{α-1} + c = 0",
            density_text: "ζ^{α-1}",
            domain_text: "1 > α > 0",
            param_names: &["alpha"],
            printed_sign: -1.0,
            validate: |p| require(get(p, "alpha") > 0.0 && get(p, "alpha") < 1.0, "need 1 > alpha > 0"),
            build: |p| {
                let al = get(p, "alpha");
                DensityBuilder::new(move |z: f64| z.powf(al - 1.0)).p0(al - 1.0).delta(1.0 - al).build()
            },
            printed: Some(|p, x| {
                let al = get(p, "alpha");
                Ok(-PI * csc(PI * al) * x.powf(al - 1.0))
            }),
            draw: |u| super::params(&[("alpha", lerp(u[0], 0.15, 0.85))]),
            defaults: &[("alpha", 0.5)],
            ..BASE
        },
        CatalogEntry {
            id: "p2",
            section: "Power laws",
            equation: "π csc(πα) (z^α - a^α)/(z - a) - bz - c = 0",
            density_text: "ζ^α / (ζ + a)",
            domain_text: "a > 0, 1 > α > -1, α ≠ 0",
            threshold_text: "π a^{α-1} csc(πα) for α > 0; ∞ for α < 0",
            param_names: &["a", "alpha"],
            extension: Some(Extension {
                point: at_a,
                value: |p| {
                    let (a, al) = (get(p, "a"), get(p, "alpha"));
                    PI * al * a.powf(al - 1.0) * csc(PI * al)
                },
                removable: true,
            }),
            validate: |p| {
                positive_a(p)?;
                let al = get(p, "alpha");
                require(al.abs() < 1.0 && al != 0.0, "need 1 > alpha > -1, alpha != 0")
            },
            build: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                DensityBuilder::new(move |z: f64| z.powf(al) / (z + a)).p0(al).delta(1.0 - al).build()
            },
            printed: Some(|p, x| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                Ok(PI * csc(PI * al) * power_quotient(al, a, x))
            }),
            critical: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                if al > 0.0 {
                    fin(PI * a.powf(al - 1.0) * csc(PI * al))
                } else {
                    inf()
                }
            },
            draw: |u| super::params(&[("a", draw_a(u[0])), ("alpha", draw_signed(u[1], u[2]))]),
            defaults: &[("a", 1.0), ("alpha", 0.5)],
            ..BASE
        },
        CatalogEntry {
            id: "p3",
            section: "Power laws",
            equation: "π (a^{α-1} sec(πα/2) z - 2 csc(πα) z^α + a^α csc(πα/2)) / (2(z² + a²)) - bz - c = 0",
            density_text: "ζ^α / (ζ² + a²)",
            domain_text: "a > 0, 2 > α > -1, α ∉ {0, 1}",
            threshold_text: "π a^{α-2} csc(πα/2)/2 for α > 0; ∞ for α < 0",
            param_names: &["a", "alpha"],
            validate: |p| {
                positive_a(p)?;
                let al = get(p, "alpha");
                require(al > -1.0 && al < 2.0 && al != 0.0 && al != 1.0, "need 2 > alpha > -1, alpha not 0 or 1")
            },
            build: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                DensityBuilder::new(move |z: f64| z.powf(al) / (z * z + a * a)).p0(al).delta(2.0 - al).build()
            },
            printed: Some(|p, x| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                let h = PI * al / 2.0;
                let num = a.powf(al - 1.0) / h.cos() * x - 2.0 * csc(PI * al) * x.powf(al) + a.powf(al) * csc(h);
                Ok(PI * num / (2.0 * (x * x + a * a)))
            }),
            critical: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                if al > 0.0 {
                    fin(PI * a.powf(al - 2.0) * csc(PI * al / 2.0) / 2.0)
                } else {
                    inf()
                }
            },
            draw: |u| {
                let al = if u[1] < 1.0 / 3.0 {
                    lerp(u[0], -0.85, -0.1)
                } else if u[1] < 2.0 / 3.0 {
                    lerp(u[0], 0.1, 0.9)
                } else {
                    lerp(u[0], 1.1, 1.85)
                };
                super::params(&[("a", draw_a(u[2])), ("alpha", al.clamp(-0.85, 1.85))])
            },
            defaults: &[("a", 1.0), ("alpha", 0.5)],
            ..BASE
        },
        // ---------------------------------------------------------------- logarithms
        CatalogEntry {
            id: "l1",
            section: "Logarithms",
            equation: "log(a/z)/(z - a) + bz + c = 0",
            density_text: "1 / (ζ + a)",
            domain_text: "a > 0",
            param_names: &["a"],
            printed_sign: -1.0,
            extension: Some(Extension { point: at_a, value: |p| 1.0 / get(p, "a"), removable: true }),
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| 1.0 / (z + a)).p0(0.0).delta(1.0).build()
            },
            printed: Some(|p, x| Ok(-log_quotient(get(p, "a"), x))),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "l2",
            section: "Logarithms",
            equation: "(log(z/a) - πz/(2a)) / (z² + a²) + bz + c = 0",
            density_text: "1 / (ζ² + a²)",
            domain_text: "a > 0",
            param_names: &["a"],
            printed_sign: -1.0,
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| 1.0 / (z * z + a * a)).p0(0.0).delta(2.0).build()
            },
            printed: Some(|p, x| {
                let a = get(p, "a");
                Ok(((x / a).ln() - PI * x / (2.0 * a)) / (x * x + a * a))
            }),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "l3",
            section: "Logarithms",
            equation: "(z log(z/a) + πa/2) / (z² + a²) - bz - c = 0",
            density_text: "ζ / (ζ² + a²)",
            domain_text: "a > 0",
            threshold_text: "π/(2a)",
            param_names: &["a"],
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| z / (z * z + a * a)).p0(1.0).delta(1.0).build()
            },
            printed: Some(|p, x| {
                let a = get(p, "a");
                Ok((x * (x / a).ln() + PI * a / 2.0) / (x * x + a * a))
            }),
            critical: |p| fin(PI / (2.0 * get(p, "a"))),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "l4",
            section: "Logarithms",
            equation: "2π z^{-1/2} log(a^{1/2} z^{1/2} + 1) - bz - c = 0",
            density_text: "ζ^{-1/2} log(aζ + 1)",
            domain_text: "a > 0",
            threshold_text: "2π a^{1/2}",
            param_names: &["a"],
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| (a * z).ln_1p() / z.sqrt()).p0(0.5).delta(0.5).build()
            },
            printed: Some(|p, x| Ok(2.0 * PI / x.sqrt() * (get(p, "a") * x).sqrt().ln_1p())),
            critical: |p| fin(2.0 * PI * get(p, "a").sqrt()),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "l5",
            section: "Logarithms",
            equation: "(π² + log²(z/a)) / (2(z + a)) - bz - c = 0",
            density_text: "log(ζ/a)/(ζ - a), with value 1/a at ζ = a",
            domain_text: "a > 0",
            param_names: &["a"],
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| log_quotient(a, z)).p0(0.0).log_factor(true).delta(1.0).build()
            },
            printed: Some(|p, x| {
                let a = get(p, "a");
                let l = (x / a).ln();
                Ok((PI * PI + l * l) / (2.0 * (x + a)))
            }),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "l6",
            section: "Logarithms",
            equation: "π (a^α log(a/z)/π + csc(πα) z^α - a^α cot(πα)) / (a + z) - bz - c = 0",
            density_text: "(ζ^α - a^α)/(ζ - a), with value α a^{α-1} at ζ = a",
            domain_text: "a > 0, 1 > α > 0",
            param_names: &["a", "alpha"],
            extension: Some(Extension {
                point: at_a,
                value: |p| {
                    let (a, al) = (get(p, "a"), get(p, "alpha"));
                    PI / 2.0 * a.powf(al - 1.0) * (PI * al / 2.0).tan()
                },
                removable: false,
            }),
            validate: |p| {
                positive_a(p)?;
                let al = get(p, "alpha");
                require(al > 0.0 && al < 1.0, "need 1 > alpha > 0")
            },
            build: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                DensityBuilder::new(move |z: f64| power_quotient(al, a, z)).p0(0.0).delta(1.0 - al).build()
            },
            printed: Some(|p, x| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                let aa = a.powf(al);
                let t = PI * al;
                Ok(PI * (aa * (a / x).ln() / PI + csc(t) * x.powf(al) - aa * t.cos() / t.sin()) / (a + x))
            }),
            draw: |u| super::params(&[("a", draw_a(u[0])), ("alpha", lerp(u[1], 0.15, 0.85))]),
            defaults: &[("a", 1.0), ("alpha", 0.5)],
            ..BASE
        },
        CatalogEntry {
            id: "l7",
            section: "Logarithms",
            equation: "π/(z + a) (csc(πα) (π cot(πα)(z^α - a^α) - z^α log(z/a))/(z - a) + π a^{α-1}/(4 cos²(πα/2))) - bz - c = 0",
            density_text: "ζ^α log(ζ/a)/(ζ² - a²), with value a^{α-2}/2 at ζ = a",
            domain_text: "a > 0, 1 > α > -1, α ≠ 0",
            threshold_text: "π² a^{α-2} csc²(πα/2)/4 for α > 0; ∞ for α < 0",
            param_names: &["a", "alpha"],
            extension: Some(Extension {
                point: at_a,
                value: |p| {
                    let (a, al) = (get(p, "a"), get(p, "alpha"));
                    let t = PI * al;
                    let c2 = (t / 2.0).cos().powi(2);
                    PI * a.powf(al - 2.0) / 2.0 * (csc(t) * (t * t.cos() / t.sin() - 1.0) + PI / (4.0 * c2))
                },
                removable: true,
            }),
            validate: |p| {
                positive_a(p)?;
                let al = get(p, "alpha");
                require(al.abs() < 1.0 && al != 0.0, "need 1 > alpha > -1, alpha != 0")
            },
            build: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                DensityBuilder::new(move |z: f64| if z <= 0.0 { 0.0 } else { z.powf(al) * log_quotient(a, z) / (z + a) })
                    .p0(al)
                    .log_factor(true)
                    .delta(2.0 - al)
                    .build()
            },
            printed: Some(|p, x| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                let t = PI * al;
                let r = (x - a) / a;
                let l = (x / a).ln();
                let aa = a.powf(al);
                let quotient = aa * (PI * t.cos() / t.sin() * (al * l).exp_m1() - (al * l).exp() * l) / (a * r);
                let tail = PI * a.powf(al - 1.0) / (4.0 * (t / 2.0).cos().powi(2));
                Ok(PI / (x + a) * (csc(t) * quotient + tail))
            }),
            critical: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                if al > 0.0 {
                    fin(PI * PI * a.powf(al - 2.0) * csc(PI * al / 2.0).powi(2) / 4.0)
                } else {
                    inf()
                }
            },
            draw: |u| super::params(&[("a", draw_a(u[0])), ("alpha", draw_signed(u[1], u[2]))]),
            defaults: &[("a", 1.0), ("alpha", 0.5)],
            ..BASE
        },
        // ---------------------------------------------------------------- incomplete gamma
        CatalogEntry {
            id: "gamma1",
            section: "Incomplete Gamma function",
            equation: "Γ(1-α) z^{-α} e^{az} Γ(α, az) - bz - c = 0",
            density_text: "ζ^{-α} e^{-aζ}",
            domain_text: "a > 0, α < 1",
            threshold_text: "a^α Γ(-α) for α < 0; ∞ for 1 > α ≥ 0",
            param_names: &["a", "alpha"],
            zero_free: Some(ZeroFreeClaim {
                function: "Γ(α, z), scanned as e^z Γ(α, z)",
                half_angle: 1.0,
                eval: |p, z| Ok(upper_gamma_scaled(get(p, "alpha"), z)),
                excluded: None,
            }),
            validate: |p| {
                positive_a(p)?;
                require(get(p, "alpha") < 1.0, "need alpha < 1")
            },
            build: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                DensityBuilder::new(move |z: f64| (-al * z.ln() - a * z).exp()).p0(-al).build()
            },
            printed: Some(|p, x| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                Ok(gamma(1.0 - al) * x.powf(-al) * upper_gamma_scaled(al, real(a * x)).re)
            }),
            critical: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                if al < 0.0 {
                    fin(a.powf(al) * gamma(-al))
                } else {
                    inf()
                }
            },
            draw: |u| super::params(&[("a", draw_a(u[0])), ("alpha", lerp(u[1], -1.8, 0.9))]),
            defaults: &[("a", 1.0), ("alpha", 0.5)],
            ..BASE
        },
        CatalogEntry {
            id: "gamma2",
            section: "Incomplete Gamma function",
            equation: "Γ(1-α) z^{α-1} e^{a/z} Γ(α, a/z) - bz - c = 0",
            density_text: "ζ^{α-1} e^{-a/ζ}",
            domain_text: "a > 0, α < 1",
            threshold_text: "a^{α-1} Γ(1-α)",
            param_names: &["a", "alpha"],
            validate: |p| {
                positive_a(p)?;
                require(get(p, "alpha") < 1.0, "need alpha < 1")
            },
            build: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                DensityBuilder::new(move |z: f64| if z <= 0.0 { 0.0 } else { ((al - 1.0) * z.ln() - a / z).exp() })
                    .p0(f64::INFINITY)
                    .delta(1.0 - al)
                    .build()
            },
            printed: Some(|p, x| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                Ok(gamma(1.0 - al) * x.powf(al - 1.0) * upper_gamma_scaled(al, real(a / x)).re)
            }),
            critical: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                fin(a.powf(al - 1.0) * gamma(1.0 - al))
            },
            draw: |u| super::params(&[("a", draw_a(u[0])), ("alpha", lerp(u[1], -1.5, 0.9))]),
            defaults: &[("a", 1.0), ("alpha", 0.5)],
            ..BASE
        },
        CatalogEntry {
            id: "gamma3",
            section: "Incomplete Gamma function",
            equation: "Γ(2α+1) z^α (e^{i(πα + a z^{1/2})} Γ(-2α, i a z^{1/2}) + e^{-i(πα + a z^{1/2})} Γ(-2α, -i a z^{1/2})) - bz - c = 0",
            density_text: "ζ^α e^{-a ζ^{1/2}}",
            domain_text: "a > 0, α > -1",
            threshold_text: "2 a^{-2α} Γ(2α) for α > 0; ∞ for 0 ≥ α > -1",
            param_names: &["a", "alpha"],
            tier: Tier::QuadratureOnly,
            validate: |p| {
                positive_a(p)?;
                require(get(p, "alpha") > -1.0, "need alpha > -1")
            },
            build: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                DensityBuilder::new(move |z: f64| (al * z.ln() - a * z.sqrt()).exp()).p0(al).build()
            },
            critical: |p| {
                let (a, al) = (get(p, "a"), get(p, "alpha"));
                if al > 0.0 {
                    fin(2.0 * a.powf(-2.0 * al) * gamma(2.0 * al))
                } else {
                    inf()
                }
            },
            draw: |u| super::params(&[("a", draw_a(u[0])), ("alpha", lerp(u[1], -0.8, 2.0))]),
            defaults: &[("a", 1.0), ("alpha", 0.5)],
            ..BASE
        },
        // ---------------------------------------------------------------- digamma
        CatalogEntry {
            id: "psiG1",
            section: "Logarithmic derivative of the Gamma function",
            equation: "ψ(a z^{1/2}) - log(a z^{1/2}) + (2a z^{1/2})^{-1} + bz + c = 0",
            density_text: "1 / (exp(2πa ζ^{1/2}) - 1)",
            domain_text: "a > 0",
            param_names: &["a"],
            printed_sign: -1.0,
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| 1.0 / (2.0 * PI * a * z.sqrt()).exp_m1()).p0(-0.5).build()
            },
            printed: Some(|p, x| Ok(-digamma_remainder(get(p, "a") * x.sqrt()))),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "psiG2",
            section: "Logarithmic derivative of the Gamma function",
            equation: "ψ(z^{1/2}/2 + 1/2) - ψ(z^{1/2}/2) - z^{-1/2} - bz - c = 0",
            density_text: "1 / sinh(π ζ^{1/2})",
            domain_text: "none",
            build: |_| DensityBuilder::new(|z: f64| 1.0 / (PI * z.sqrt()).sinh()).p0(-0.5).build(),
            printed: Some(|_, x| {
                let w = x.sqrt() / 2.0;
                Ok(digamma(w + 0.5) - digamma(w) - 1.0 / x.sqrt())
            }),
            ..BASE
        },
        CatalogEntry {
            id: "psiG3",
            section: "Logarithmic derivative of the Gamma function",
            equation: "z^{-1/2} (ψ(z^{1/2}/2 + 3/4) - ψ(z^{1/2}/2 + 1/4)) - bz - c = 0",
            density_text: "ζ^{-1/2} / cosh(π ζ^{1/2})",
            domain_text: "none",
            build: |_| DensityBuilder::new(|z: f64| 1.0 / (z.sqrt() * (PI * z.sqrt()).cosh())).p0(-0.5).build(),
            printed: Some(|_, x| {
                let w = x.sqrt() / 2.0;
                Ok((digamma(w + 0.75) - digamma(w + 0.25)) / x.sqrt())
            }),
            ..BASE
        },
        // ---------------------------------------------------------------- hypergeometric
        CatalogEntry {
            id: "hyp1",
            section: "Gauss hypergeometric series",
            equation: "Γ(α)Γ(β-α)/(a^{β-1}Γ(β)) z^{α-1} 2F1(β-1, α; β; 1 - z/a) - bz - c = 0",
            density_text: "ζ^{α-1} / (ζ + a)^{β-1}",
            domain_text: "a > 0, β > α > 0",
            threshold_text: "a^{α-β} Γ(α-1)Γ(β-α)/Γ(β-1) for α > 1; ∞ for 1 ≥ α > 0",
            param_names: &["a", "alpha", "beta"],
            zero_free: Some(ZeroFreeClaim {
                function: "2F1(β-1, α; β; 1 - z/a)",
                half_angle: 1.0,
                eval: |p, z| {
                    let (a, al, be) = (get(p, "a"), get(p, "alpha"), get(p, "beta"));
                    hyp2f1(be - 1.0, al, be, 1.0 - z / a)
                },
                excluded: None,
            }),
            validate: |p| {
                positive_a(p)?;
                let (al, be) = (get(p, "alpha"), get(p, "beta"));
                require(be > al && al > 0.0, "need beta > alpha > 0")
            },
            build: |p| {
                let (a, al, be) = (get(p, "a"), get(p, "alpha"), get(p, "beta"));
                DensityBuilder::new(move |z: f64| ((al - 1.0) * z.ln() + (1.0 - be) * (z + a).ln()).exp())
                    .p0(al - 1.0)
                    .delta(be - al)
                    .build()
            },
            printed: Some(|p, x| {
                let (a, al, be) = (get(p, "a"), get(p, "alpha"), get(p, "beta"));
                let pre = gamma(al) * gamma(be - al) / (a.powf(be - 1.0) * gamma(be));
                Ok(pre * x.powf(al - 1.0) * hyp2f1_complement(be - 1.0, al, be, x / a)?)
            }),
            critical: |p| {
                let (a, al, be) = (get(p, "a"), get(p, "alpha"), get(p, "beta"));
                if al > 1.0 {
                    fin(a.powf(al - be) * beta_fn(al - 1.0, be - al))
                } else {
                    inf()
                }
            },
            draw: |u| {
                let al = lerp(u[1], 0.2, 2.5);
                super::params(&[("a", draw_a(u[0])), ("alpha", al), ("beta", al + lerp(u[2], 0.3, 2.0))])
            },
            defaults: &[("a", 1.0), ("alpha", 1.5), ("beta", 2.5)],
            ..BASE
        },
        CatalogEntry {
            id: "IB1",
            section: "Incomplete Beta function",
            equation: "π csc(πα) z^{-α} (a - z)^{-β} I_{1-z/a}(β, α) - bz - c = 0",
            density_text: "ζ^{-α} / (ζ + a)^β",
            domain_text: "a > 0, β > 0, 1 > α > -β, α ≠ 0 (α not an integer)",
            threshold_text: "a^{-α-β} Γ(-α)Γ(α+β)/Γ(β) for 0 > α > -β; ∞ for 1 > α > 0",
            param_names: &["a", "alpha", "beta"],
            zero_free: Some(ZeroFreeClaim {
                function: "I_{1-z/a}(β, α)",
                half_angle: 1.0,
                eval: |p, z| {
                    let (a, al, be) = (get(p, "a"), get(p, "alpha"), get(p, "beta"));
                    let u = 1.0 - z / a;
                    Ok(u.powf(be) * hyp2f1(be, 1.0 - al, be + 1.0, u)? / (be * beta_fn(be, al)))
                },
                excluded: Some(at_a),
            }),
            validate: |p| {
                positive_a(p)?;
                let (al, be) = (get(p, "alpha"), get(p, "beta"));
                require(
                    be > 0.0 && al < 1.0 && al > -be && al != al.round(),
                    "need beta > 0, 1 > alpha > -beta, alpha not an integer",
                )
            },
            build: |p| {
                let (a, al, be) = (get(p, "a"), get(p, "alpha"), get(p, "beta"));
                DensityBuilder::new(move |z: f64| (-al * z.ln() - be * (z + a).ln()).exp())
                    .p0(-al)
                    .delta(al + be)
                    .build()
            },
            printed: Some(|p, x| {
                let (a, al, be) = (get(p, "a"), get(p, "alpha"), get(p, "beta"));
                let f = hyp2f1_complement(be, 1.0 - al, be + 1.0, x / a)?;
                Ok(PI * csc(PI * al) * x.powf(-al) * a.powf(-be) * f / (be * beta_fn(be, al)))
            }),
            critical: |p| {
                let (a, al, be) = (get(p, "a"), get(p, "alpha"), get(p, "beta"));
                if al < 0.0 {
                    fin(a.powf(-al - be) * gamma(-al) * gamma(al + be) / gamma(be))
                } else {
                    inf()
                }
            },
            draw: |u| {
                let be = lerp(u[1], 0.3, 2.0);
                let lo = (-be).max(-0.95) + 0.05;
                let mut al = lerp(u[2], lo, 0.9);
                if al.abs() < 0.1 {
                    al = if u[3] < 0.5 && lo < -0.1 { -0.1 } else { 0.1 };
                }
                super::params(&[("a", draw_a(u[0])), ("alpha", al), ("beta", be)])
            },
            defaults: &[("a", 1.0), ("alpha", -0.5), ("beta", 1.0)],
            ..BASE
        },
        // ---------------------------------------------------------------- exponential integral
        CatalogEntry {
            id: "Ei1",
            section: "Exponential integral",
            equation: "e^{αz} Ei(-αz) + bz + c = 0",
            density_text: "e^{-αζ}",
            domain_text: "α > 0",
            param_names: &["alpha"],
            printed_sign: -1.0,
            zero_free: Some(ZeroFreeClaim {
                function: "Ei(-z) = -E1(z), scanned as e^z E1(z)",
                half_angle: 1.0,
                eval: |_, z| Ok(e1_scaled(z)),
                excluded: None,
            }),
            validate: positive_alpha,
            build: |p| {
                let al = get(p, "alpha");
                DensityBuilder::new(move |z: f64| (-al * z).exp()).p0(0.0).build()
            },
            printed: Some(|p, x| Ok(-e1_scaled_real(get(p, "alpha") * x))),
            draw: draw_only_alpha,
            defaults: &[("alpha", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "Ei2",
            section: "Exponential integral",
            equation: "e^{αz} (Ei(-αz - αd) - Ei(-αz)) - bz - c = 0",
            density_text: "e^{-αζ} on 0 < ζ < d, 0 beyond",
            domain_text: "α > 0, d > 0",
            param_names: &["alpha", "d"],
            validate: positive_alpha_d,
            build: |p| {
                let (al, d) = (get(p, "alpha"), get(p, "d"));
                DensityBuilder::new(move |z: f64| (-al * z).exp()).p0(0.0).support(0.0, d).build()
            },
            printed: Some(|p, x| {
                let (al, d) = (get(p, "alpha"), get(p, "d"));
                Ok(e1_scaled_real(al * x) - (-al * d).exp() * e1_scaled_real(al * (x + d)))
            }),
            draw: draw_alpha_d,
            defaults: &[("alpha", 1.0), ("d", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "Ei3",
            section: "Exponential integral",
            equation: "e^{αz} Ei(-αz - αd) + bz + c = 0",
            density_text: "0 on 0 < ζ < d, e^{-αζ} beyond",
            domain_text: "α > 0, d > 0",
            threshold_text: "-Ei(-αd)",
            param_names: &["alpha", "d"],
            printed_sign: -1.0,
            validate: positive_alpha_d,
            build: |p| {
                let (al, d) = (get(p, "alpha"), get(p, "d"));
                DensityBuilder::new(move |z: f64| (-al * z).exp()).support(d, f64::INFINITY).build()
            },
            printed: Some(|p, x| {
                let (al, d) = (get(p, "alpha"), get(p, "d"));
                Ok(-(-al * d).exp() * e1_scaled_real(al * (x + d)))
            }),
            critical: |p| {
                let y = get(p, "alpha") * get(p, "d");
                fin((-y).exp() * e1_scaled_real(y))
            },
            draw: draw_alpha_d,
            defaults: &[("alpha", 1.0), ("d", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "Ei4",
            section: "Exponential integral",
            equation: "(-1)^{n+1} z^n e^{αz} Ei(-αz) + Σ_{j=1}^{n} (-1)^{n-j} (j-1)! α^{-j} z^{n-j} - bz - c = 0",
            density_text: "ζ^n e^{-αζ}",
            domain_text: "α > 0, n ∈ {0, 1, 2, …}",
            threshold_text: "(n-1)! α^{-n} for n ≥ 1; ∞ for n = 0",
            param_names: &["alpha", "n"],
            validate: |p| {
                positive_alpha(p)?;
                let n = get(p, "n");
                require(n >= 0.0 && n <= 20.0 && n == n.round(), "n must be an integer in 0..=20")
            },
            build: |p| {
                let (al, n) = (get(p, "alpha"), get(p, "n"));
                DensityBuilder::new(move |z: f64| z.powi(n as i32) * (-al * z).exp()).p0(n).build()
            },
            printed: Some(|p, x| {
                let (al, n) = (get(p, "alpha"), get(p, "n") as i32);
                let sign = |k: i32| if k % 2 == 0 { 1.0 } else { -1.0 };
                let mut sum = sign(n) * x.powi(n) * e1_scaled_real(al * x);
                let mut fact = 1.0;
                for j in 1..=n {
                    if j > 1 {
                        fact *= (j - 1) as f64;
                    }
                    sum += sign(n - j) * fact * al.powi(-j) * x.powi(n - j);
                }
                Ok(sum)
            }),
            critical: |p| {
                let (al, n) = (get(p, "alpha"), get(p, "n"));
                if n >= 1.0 {
                    fin(gamma(n) * al.powf(-n))
                } else {
                    inf()
                }
            },
            draw: |u| super::params(&[("alpha", lerp(u[0], 0.3, 2.0)), ("n", 1.0 + (3.0 * u[1]).floor().min(2.0))]),
            defaults: &[("alpha", 1.0), ("n", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "Ei5",
            section: "Exponential integral",
            equation: "(log(αγz) - e^{αz} Ei(-αz))/z - bz - c = 0, γ = exp(C)",
            density_text: "(1 - e^{-αζ})/ζ",
            domain_text: "α > 0",
            param_names: &["alpha"],
            validate: positive_alpha,
            build: |p| {
                let al = get(p, "alpha");
                DensityBuilder::new(move |z: f64| if z == 0.0 { al } else { -(-al * z).exp_m1() / z })
                    .p0(0.0)
                    .delta(1.0)
                    .build()
            },
            printed: Some(|p, x| {
                let y = get(p, "alpha") * x;
                Ok((y.ln() + EULER_GAMMA + e1_scaled_real(y)) / x)
            }),
            draw: draw_only_alpha,
            defaults: &[("alpha", 1.0)],
            ..BASE
        },
        // ---------------------------------------------------------------- error function
        CatalogEntry {
            id: "Erfc1",
            section: "Error function",
            equation: "π z^{-1/2} e^{az} erfc(a^{1/2} z^{1/2}) - bz - c = 0",
            density_text: "ζ^{-1/2} e^{-aζ}",
            domain_text: "a > 0",
            param_names: &["a"],
            zero_free: Some(ZeroFreeClaim {
                function: "erfc(z), scanned as e^{z²} erfc(z)",
                half_angle: 0.5,
                eval: |_, z| Ok(erfcx(z)),
                excluded: None,
            }),
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| (-a * z).exp() / z.sqrt()).p0(-0.5).build()
            },
            printed: Some(|p, x| Ok(PI / x.sqrt() * erfcx_real((get(p, "a") * x).sqrt()))),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "Erfc2",
            section: "Error function",
            equation: "π z^{1/2} e^{az} erfc(a^{1/2} z^{1/2}) + bz + c - (π/a)^{1/2} = 0",
            density_text: "ζ^{1/2} e^{-aζ}",
            domain_text: "a > 0",
            threshold_text: "(π/a)^{1/2}",
            param_names: &["a"],
            printed_sign: -1.0,
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| z.sqrt() * (-a * z).exp()).p0(0.5).build()
            },
            printed: Some(|p, x| {
                let a = get(p, "a");
                Ok(PI * x.sqrt() * erfcx_real((a * x).sqrt()) - (PI / a).sqrt())
            }),
            critical: |p| fin((PI / get(p, "a")).sqrt()),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        // ---------------------------------------------------------------- cosine and sine integrals
        CatalogEntry {
            id: "ci1",
            section: "Cosine and sine integrals",
            equation: "2 cos(a z^{1/2}) ci(a z^{1/2}) - 2 sin(a z^{1/2}) si(a z^{1/2}) - bz - c = 0",
            density_text: "e^{-a ζ^{1/2}}",
            domain_text: "a > 0",
            param_names: &["a"],
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| (-a * z.sqrt()).exp()).p0(0.0).build()
            },
            // ci = -Ci, si = Si - π/2
            printed: Some(|p, x| {
                let w = get(p, "a") * x.sqrt();
                let (ci, si) = ci_si(w);
                let (s, c) = w.sin_cos();
                Ok(-2.0 * c * ci - 2.0 * s * si)
            }),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "ci2",
            section: "Cosine and sine integrals",
            equation: "2 z^{-1/2} (sin(a z^{1/2}) ci(a z^{1/2}) + cos(a z^{1/2}) si(a z^{1/2})) + bz + c = 0",
            density_text: "ζ^{-1/2} e^{-a ζ^{1/2}}",
            domain_text: "a > 0",
            param_names: &["a"],
            printed_sign: -1.0,
            validate: positive_a,
            build: |p| {
                let a = get(p, "a");
                DensityBuilder::new(move |z: f64| (-a * z.sqrt()).exp() / z.sqrt()).p0(-0.5).build()
            },
            printed: Some(|p, x| {
                let w = get(p, "a") * x.sqrt();
                let (ci, si) = ci_si(w);
                let (s, c) = w.sin_cos();
                Ok(2.0 / x.sqrt() * (-s * ci + c * si))
            }),
            draw: draw_only_a,
            defaults: &[("a", 1.0)],
            ..BASE
        },
        // ---------------------------------------------------------------- Whittaker
        CatalogEntry {
            id: "whittaker",
            section: "Whittaker function",
            equation: "z^{(α+β)/2-1} e^{z/2} W_{-(α+β)/2, (β-α)/2}(z) - bz - c = 0",
            density_text: "ζ^{(α+β)/2-1} e^{-ζ/2} W_{(α+β)/2, (α-β)/2}(ζ) / (Γ(α+1/2)Γ(β+1/2))",
            domain_text: "α > -1/2 and 1/2 > β > -1/2, or β > -1/2 and 1/2 > α > -1/2",
            param_names: &["alpha", "beta"],
            tier: Tier::QuadratureOnly,
            validate: |p| {
                let (al, be) = (get(p, "alpha"), get(p, "beta"));
                let inside = |x: f64| x > -0.5 && x < 0.5;
                require(
                    (al > -0.5 && inside(be)) || (be > -0.5 && inside(al)),
                    "need alpha > -1/2 and |beta| < 1/2, or the same with the roles swapped",
                )
            },
            build: |p| {
                // the density is symmetric in (α, β); order them so that β < 1/2
                let (x, y) = (get(p, "alpha"), get(p, "beta"));
                let (al, be) = (x.max(y), x.min(y));
                let norm = gamma(al + 0.5) * gamma(be + 0.5);
                DensityBuilder::new(move |z: f64| {
                    let u = hyperu_real(0.5 - be, 1.0 + al - be, z).unwrap_or(f64::NAN);
                    ((al - 0.5) * z.ln() - z).exp() * u / norm
                })
                .p0(be - 0.5)
                .log_factor((al - be).abs() < 0.15)
                .build()
            },
            draw: |u| super::params(&[("alpha", lerp(u[0], -0.3, 1.5)), ("beta", lerp(u[1], -0.3, 0.4))]),
            defaults: &[("alpha", 1.0), ("beta", 0.0)],
            ..BASE
        },
        // ---------------------------------------------------------------- Bessel
        CatalogEntry {
            id: "besselJY",
            section: "Bessel functions",
            equation: "(π/2) J_α(az) Y_α(az) + az Γ(α-1/2)/(π Γ(α+3/2)) 2F3(1, 1; 3/2, α+3/2, 3/2-α; -a²z²) + π (az)^{2α} tan(πα)/(2^{2α+1} Γ²(α+1)) 1F2(α+1/2; α+1, 2α+1; -a²z²) + bz + c = 0",
            density_text: "J_α(ζ)²",
            domain_text: "α > -1/2",
            threshold_text: "1/(2α) for α > 0; ∞ for α ≤ 0",
            param_names: &["alpha"],
            tier: Tier::QuadratureOnly,
            validate: |p| require(get(p, "alpha") > -0.5, "need alpha > -1/2"),
            build: |p| {
                let al = get(p, "alpha");
                DensityBuilder::new(move |z: f64| {
                    if z <= 0.0 {
                        return 0.0;
                    }
                    let j = bessel_j(al, z).unwrap_or(f64::NAN);
                    j * j
                })
                .p0(2.0 * al)
                .delta(1.0)
                .oscillation(1.0, PI)
                .build()
            },
            critical: |p| {
                let al = get(p, "alpha");
                if al > 0.0 {
                    fin(1.0 / (2.0 * al))
                } else {
                    inf()
                }
            },
            draw: |u| super::params(&[("alpha", lerp(u[0], -0.4, 2.0))]),
            defaults: &[("alpha", 1.0)],
            ..BASE
        },
        CatalogEntry {
            id: "besselK",
            section: "Bessel functions",
            equation: "(2πz)^{-1/2} e^z K_β(z) - bz - c = 0",
            density_text: "cos(πβ)/π · (2πζ)^{-1/2} e^{-ζ} K_β(ζ)",
            domain_text: "1/2 > β > -1/2",
            param_names: &["beta"],
            zero_free: Some(ZeroFreeClaim {
                function: "K_β(z), scanned as e^z K_β(z)",
                half_angle: 1.0,
                eval: |p, z| bessel_k_scaled_complex(get(p, "beta"), z),
                excluded: None,
            }),
            validate: |p| require(get(p, "beta").abs() < 0.5, "need 1/2 > beta > -1/2"),
            build: |p| {
                let be = get(p, "beta");
                let pre = (PI * be).cos() / PI;
                DensityBuilder::new(move |z: f64| {
                    if z <= 0.0 {
                        return 0.0;
                    }
                    let k = bessel_k_scaled(be, z).unwrap_or(f64::NAN);
                    pre * k * (-2.0 * z).exp() / (2.0 * PI * z).sqrt()
                })
                .p0(-0.5 - be.abs())
                .log_factor(be.abs() < 0.1)
                .build()
            },
            printed: Some(|p, x| Ok(bessel_k_scaled(get(p, "beta"), x)? / (2.0 * PI * x).sqrt())),
            draw: |u| super::params(&[("beta", lerp(u[0], -0.45, 0.45))]),
            defaults: &[("beta", 0.25)],
            ..BASE
        },
        // ---------------------------------------------------------------- Lambert W
        CatalogEntry {
            id: "W1",
            section: "Lambert W function",
            equation: "W(z)/z - bz - c = 0",
            density_text: "Im W(-t)/(πt) on t > 1/e",
            domain_text: "none",
            threshold_text: "∫_{1/e}^∞ Im W(-t)/(πt²) dt = 1",
            zero_free: Some(ZeroFreeClaim {
                function: "W(z)",
                half_angle: 1.0,
                eval: |_, z| lambert_w0(z),
                excluded: None,
            }),
            build: |_| {
                DensityBuilder::new(|t: f64| {
                    if t <= 1.0 / E {
                        return 0.0;
                    }
                    lambert_w0_upper_cut(t).map(|w| w.im / (PI * t)).unwrap_or(f64::NAN)
                })
                .support(1.0 / E, f64::INFINITY)
                .delta(1.0)
                .build()
            },
            printed: Some(|_, x| Ok(lambert_w0_real(x)? / x)),
            critical: |_| fin(1.0),
            ..BASE
        },
        CatalogEntry {
            id: "W2",
            section: "Lambert W function",
            equation: "W'(z) - bz - c = 0",
            density_text: "(1/π) d/dt Im W(-t) on t > 1/e",
            domain_text: "none",
            threshold_text: "∫_{1/e}^∞ (1/(πt)) d/dt Im W(-t) dt = 1",
            zero_free: Some(ZeroFreeClaim {
                function: "W'(z)",
                half_angle: 1.0,
                eval: |_, z| lambert_w0_prime(z),
                excluded: None,
            }),
            build: |_| {
                // dW(-t)/dt = W/(t(1 + W))
                DensityBuilder::new(|t: f64| {
                    if t <= 1.0 / E {
                        return 0.0;
                    }
                    lambert_w0_upper_cut(t).map(|w| (w / (t * (1.0 + w))).im / PI).unwrap_or(f64::NAN)
                })
                .support(1.0 / E, f64::INFINITY)
                .delta(1.0)
                .log_factor(true)
                .build()
            },
            printed: Some(|_, x| Ok(lambert_w0_prime(real(x))?.re)),
            critical: |_| fin(1.0),
            ..BASE
        },
        // ---------------------------------------------------------------- Binet
        CatalogEntry {
            id: "binet",
            section: "Binet function",
            equation: "J(z^{1/2})/z^{1/2} - bz - c = 0",
            density_text: "(2π ζ^{1/2})^{-1} log(1/(1 - e^{-2π ζ^{1/2}}))",
            domain_text: "none",
            zero_free: Some(ZeroFreeClaim {
                function: "J(z)",
                half_angle: 0.5,
                eval: |_, z| Ok(binet(z)),
                excluded: None,
            }),
            build: |_| {
                DensityBuilder::new(|z: f64| {
                    let s = 2.0 * PI * z.sqrt();
                    -(-(-s).exp_m1()).ln() / s
                })
                .p0(-0.5)
                .log_factor(true)
                .build()
            },
            printed: Some(|_, x| Ok(binet(real(x.sqrt())).re / x.sqrt())),
            ..BASE
        },
    ]
}

/// `log w - 1/(2w) - ψ(w)`, which is positive and `~ 1/(12 w²)`.
fn digamma_remainder(w: f64) -> f64 {
    const B: [f64; 8] = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0];
    if w >= 12.0 {
        let inv2 = 1.0 / (w * w);
        let mut p = inv2;
        let mut s = 0.0;
        for (k, b) in B.iter().enumerate() {
            s += b / (2.0 * (k as f64 + 1.0)) * p;
            p *= inv2;
        }
        return s;
    }
    w.ln() - 0.5 / w - digamma(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cross_validate, entry, log_grid, params};

    #[test]
    fn hyperbolic_reduces_to_its_unfactored_form() {
        let p = params(&[("a", 0.7), ("beta", 1.3), ("lambda_", 0.6)]);
        let e = entry("hyperbolic1").unwrap();
        for &x in &[0.2, 1.0, 3.0] {
            let w: f64 = 0.7 * f64::sqrt(x);
            let num = (1.3 / 0.6 - 0.6 / 1.3) * (2.0 * w).sinh() / 2.0 - 1.0;
            let den = (1.3 * w.sinh()).powi(2) - (0.6 * w.cosh()).powi(2);
            let raw = PI / x.sqrt() * num / den;
            let v = e.stieltjes_closed(&p, x).unwrap();
            assert!(((v - raw) / raw).abs() < 1e-12, "{x}: {v} vs {raw}");
        }
    }

    #[test]
    fn digamma_remainder_branches_agree() {
        let a = digamma_remainder(12.0);
        let b = 12f64.ln() - 0.5 / 12.0 - digamma(12.0);
        assert!(((a - b) / a).abs() < 1e-10);
    }

    #[test]
    fn p1_is_an_exact_power() {
        let err = cross_validate("p1", &params(&[("alpha", 0.5)]), &log_grid(0.1, 10.0, 20)).unwrap();
        assert!(err <= 1e-10, "{err}");
    }
}
