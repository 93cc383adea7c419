//! Special functions and catalog values against references computed
//! independently at 30 digits (mpmath), or against closed identities.

use num_complex::Complex64;
use std::f64::consts::PI;
use stieltjes::catalog::{entry, params, solve_entry};
use stieltjes::specialfn::*;

fn close(got: f64, want: f64, tol: f64) -> bool {
    ((got - want) / want).abs() <= tol
}

fn close_c(got: Complex64, want: Complex64, tol: f64) -> bool {
    (got - want).norm() <= tol * want.norm()
}

#[test]
fn real_reference_values() {
    let rows: [(&str, f64, f64, f64); 19] = [
        ("Γ(0.3, 2.5)", upper_gamma_real(0.3, 2.5), 0.035436097481611740574, 1e-12),
        ("Γ(2.5, 0.1)", upper_gamma_real(2.5, 0.1), 1.3281624080976364977, 1e-12),
        ("E1(0.01)", e1_real(0.01), 4.0379295765381138112, 1e-13),
        ("E1(30)", e1_real(30.0), 3.0215520106888125448e-15, 1e-12),
        ("erfcx(5)", erfcx_real(5.0), 0.11070463773306862637, 1e-13),
        ("erfc(-1.5)", erfc_real(-1.5), 1.9661051464753107271, 1e-14),
        ("K_0.25(3)", bessel_k_real(0.25, 3.0).unwrap(), 0.035057056089413133983, 1e-12),
        ("K_1.7(0.2)", bessel_k_real(1.7, 0.2).unwrap(), 22.464359638763550785, 1e-12),
        ("W0(10)", lambert_w0_real(10.0).unwrap(), 1.7455280027406993831, 1e-14),
        ("W0(-0.3)", lambert_w0_real(-0.3).unwrap(), -0.48940222718021493357, 1e-14),
        ("ψ(0.1)", digamma(0.1), -10.423754940411076232, 1e-14),
        ("ψ(25.5)", digamma(25.5), 3.2189424728839197665, 1e-14),
        ("2F1(.5,1.5;2;.9)", hyp2f1_real(0.5, 1.5, 2.0, 0.9).unwrap(), 2.0843177233129957864, 1e-12),
        ("2F1(1,.3;1.8;-4)", hyp2f1_real(1.0, 0.3, 1.8, -4.0).unwrap(), 0.72814283174060314403, 1e-12),
        ("J_0.5(3)", bessel_j(0.5, 3.0).unwrap(), 0.065008182877375778114, 1e-11),
        ("Y_1.3(7)", bessel_y(1.3, 7.0).unwrap(), -0.27512065995757823017, 1e-11),
        ("Ci(0.2)", ci(0.2), -1.042205595672781921, 1e-13),
        ("si(40)", si(40.0), 1.5869851193547845068 - PI / 2.0, 1e-10),
        ("ln Γ(0.01)", ln_gamma(0.01), 4.5994798780420217016, 1e-14),
    ];
    for (name, got, want, tol) in rows {
        assert!(close(got, want, tol), "{name}: {got} vs {want}");
    }
}

#[test]
fn complex_reference_values() {
    let c = Complex64::new;
    assert!(close_c(e1(c(-2.0, 0.5)), c(-4.7257499447988616976, -1.3323418528141996721), 1e-12));
    assert!(close_c(lambert_w0(c(1.0, 1.0)).unwrap(), c(0.65696606923043640587, 0.32545033941341502999), 1e-14));
    assert!(close_c(bessel_k(0.25, c(1.0, 2.0)).unwrap(), c(-0.24587497780126934629, -0.17502175126467661592), 1e-11));
    assert!(close_c(erfc(c(1.0, -2.0)), c(1.536643565778565034, -5.0491437034470346695), 1e-12));
}

#[test]
fn identities() {
    // K_{1/2}(x) = sqrt(π/2x) e^-x, Γ(1/2, x) = √π erfc(√x), E1 = Γ(0, ·)
    for x in [0.05, 0.7, 3.0, 12.0] {
        let k = bessel_k_real(0.5, x).unwrap();
        assert!(close(k, (PI / (2.0 * x)).sqrt() * (-x).exp(), 1e-13), "K at {x}");
        assert!(close(upper_gamma_real(0.5, x), PI.sqrt() * erfc_real(x.sqrt()), 1e-12), "Γ at {x}");
        assert!(close(e1_scaled_real(x), x.exp() * e1_real(x), 1e-12), "E1 at {x}");
        let w = lambert_w0_real(x).unwrap();
        assert!(close(w * w.exp(), x, 1e-14));
    }
    // ψ(x+1) = ψ(x) + 1/x, Γ(x+1) = xΓ(x)
    for x in [0.2, 1.5, 7.25] {
        assert!((digamma(x + 1.0) - digamma(x) - 1.0 / x).abs() < 1e-13);
        assert!(close(gamma(x + 1.0), x * gamma(x), 1e-14));
    }
    // Binet: ln Γ(z) = (z - 1/2) ln z - z + ln √(2π) + J(z)
    for x in [0.5, 2.0, 9.0] {
        let z = Complex64::new(x, 0.0);
        let lhs = (z - 0.5) * z.ln() - z + (2.0 * PI).sqrt().ln() + binet(z);
        assert!((lhs.re - ln_gamma(x)).abs() < 1e-13, "binet at {x}");
    }
}

#[test]
fn analytic_roots() {
    // p1 at α = 1/2: π x^{-1/2} = x, so x = π^{2/3}
    let r = solve_entry("p1", &params(&[("alpha", 0.5)]), 1.0, 0.0).unwrap();
    assert!(close(r.report.root.unwrap(), PI.powf(2.0 / 3.0), 1e-9));
    // W1 with b = 0, c = 1/2: W(x)/x = 1/2 at x = 2 ln 2
    let r = solve_entry("W1", &params(&[]), 0.0, 0.5).unwrap();
    assert!(close(r.report.root.unwrap(), 4f64.ln(), 1e-9));
}

#[test]
fn critical_values_by_hand() {
    let pi_sqrt = PI.sqrt();
    let cases = [
        ("e1", params(&[("a", 1.5)]), PI * 1.5),
        ("l3", params(&[("a", 1.0)]), PI / 2.0),
        ("gamma2", params(&[("a", 1.0), ("alpha", 0.5)]), pi_sqrt),
        ("Ei3", params(&[("alpha", 1.0), ("d", 1.0)]), e1_real(1.0)),
        ("W1", params(&[]), 1.0),
    ];
    for (id, p, want) in cases {
        let k = entry(id).unwrap().critical_formula(&p).unwrap().to_f64();
        assert!(close(k, want, 1e-12), "{id}: {k} vs {want}");
    }
}
