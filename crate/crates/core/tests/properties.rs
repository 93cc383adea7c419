use proptest::prelude::*;
use stieltjes::catalog::{
    all_entries, critical_check, cross_validate, entry, log_grid, solve_entry, CatalogEntry, Tier, DRAW_DIM,
};
use stieltjes::cli::{run_cli_with_tol, EquationReport, ValidateReport};
use stieltjes::density::{apply_transform, compose_transforms, make_density, Density, Support, TransformKind};
use stieltjes::quadrature::{mass_over_zeta, ExtendedReal, DEFAULT_REL_TOL};
use stieltjes::solver::{classify, Outcome};

fn closed_form_entries() -> Vec<&'static CatalogEntry> {
    all_entries().iter().filter(|e| e.tier == Tier::ClosedForm).collect()
}

fn finite_k_entries() -> Vec<&'static CatalogEntry> {
    all_entries()
        .iter()
        .filter(|e| e.critical_formula(&e.default_params()).map_or(false, |k| !k.is_infinite()))
        .collect()
}

fn unit_draw() -> impl Strategy<Value = [f64; DRAW_DIM]> {
    prop::array::uniform4(0.0..1.0f64)
}

fn extended() -> impl Strategy<Value = ExtendedReal> {
    prop_oneof![1 => Just(ExtendedReal::PosInfinity), 3 => (-2.0..6.0f64).prop_map(ExtendedReal::exact)]
}

fn gamma_density(p: f64) -> Density {
    make_density(move |z: f64| z.powf(p) * (-z).exp(), p, f64::INFINITY, Support::new(0.0, f64::INFINITY), true).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn classification_follows_the_table(mz in extended(), b in prop_oneof![Just(0.0), 0.0..5.0f64], c in -5.0..5.0f64) {
        let got = classify(mz, b, c).unwrap();
        let m_pos = mz.finite().map_or(true, |v| v - c > 0.0);
        let want = if m_pos && (b > 0.0 || c > 0.0) { Outcome::UniqueRoot } else { Outcome::NoSolution };
        prop_assert_eq!(got.outcome, want);
        if got.is_unique_root() && b > 0.0 {
            prop_assert_eq!(got.hi, mz.finite().map_or(f64::INFINITY, |v| (v - c) / b));
        }
    }

    #[test]
    fn negative_b_is_rejected(mz in extended(), b in -5.0..-1e-300f64, c in -5.0..5.0f64) {
        prop_assert!(classify(mz, b, c).is_err());
    }

    #[test]
    fn dilations_compose(a in 0.1..10.0f64, b in 0.1..10.0f64, z in 0.01..50.0f64) {
        // e^-ζ at large argument amplifies the rounding of the product a·b
        let phi = gamma_density(0.5);
        let twice = compose_transforms(&phi, &[TransformKind::Dilation { a }, TransformKind::Dilation { a: b }]).unwrap();
        let once = apply_transform(&phi, TransformKind::Dilation { a: a * b }).unwrap();
        let (u, v) = (twice.eval(z), once.eval(z));
        let tol = 4.0 * f64::EPSILON * (1.0 + z * a * b);
        prop_assert!((u - v).abs() <= tol * u.abs().max(1e-300), "{} vs {}", u, v);
    }

    #[test]
    fn transforms_preserve_nonnegativity(p in -0.5..2.0f64, k in 0usize..6, a in 0.2..5.0f64, z in 1e-3..1e3f64) {
        let phi = gamma_density(p);
        let psi = apply_transform(&phi, TransformKind::from_index(k, a).unwrap()).unwrap();
        prop_assert!(psi.eval(z) >= 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn transform_exponents_match_measured_slopes(p in -0.5..2.0f64, k in 0usize..6) {
        // ζ^p e^-ζ has a clean power law at the origin only; the large-ζ end
        // is exponential and its bookkeeping is a convention
        let phi = gamma_density(p);
        let psi = apply_transform(&phi, TransformKind::from_index(k, 1.0).unwrap()).unwrap();
        if k != 4 {
            let slope = psi.log_log_slope(1e-7, 1e-6).unwrap();
            prop_assert!((slope - psi.p0()).abs() < 0.05, "k={} slope {} vs p0 {}", k, slope, psi.p0());
        } else {
            let slope = psi.log_log_slope(1e6, 1e7).unwrap();
            prop_assert!((slope + psi.delta()).abs() < 0.05, "slope {} vs delta {}", slope, psi.delta());
        }
    }

    #[test]
    fn closed_forms_match_quadrature(i in 0usize..33, u in unit_draw()) {
        let entries = closed_form_entries();
        let e = entries[i % entries.len()];
        let p = e.draw_params(&u);
        let err = cross_validate(e.id, &p, &log_grid(0.05, 20.0, 7)).unwrap();
        prop_assert!(err <= 1e-8, "{} {:?}: {:e}", e.id, p, err);
    }

    #[test]
    fn critical_formula_matches_quadrature(i in 0usize..36, u in unit_draw()) {
        let e = &all_entries()[i % all_entries().len()];
        let p = e.draw_params(&u);
        let (formula, quad) = critical_check(e.id, &p).unwrap();
        match (formula, quad) {
            (ExtendedReal::PosInfinity, ExtendedReal::PosInfinity) => {}
            (ExtendedReal::Finite { value: a, .. }, ExtendedReal::Finite { value: b, .. }) => {
                prop_assert!((a - b).abs() <= 1e-8 * a.abs().max(1.0), "{} {:?}: {} vs {}", e.id, p, a, b);
            }
            _ => prop_assert!(false, "{} {:?}: {:?} vs {:?}", e.id, p, formula, quad),
        }
    }

    #[test]
    fn roots_respect_the_bound(i in 0usize..16, u in unit_draw(), b in 0.1..5.0f64, t in -1.0..0.95f64) {
        let entries = finite_k_entries();
        let e = entries[i % entries.len()];
        let p = e.draw_params(&u);
        let k = e.critical_formula(&p).unwrap();
        let c = t * k.finite().unwrap_or(1.0).abs().max(0.1);
        let r = solve_entry(e.id, &p, b, c).unwrap();
        prop_assert!(r.table_check, "{} {:?} b={} c={}", e.id, p, b, c);
        if let Some(k) = k.finite() {
            if c < k {
                let x = r.report.root.unwrap();
                prop_assert!(x > 0.0 && x < (k - c) / b, "{} {:?}: {} vs {}", e.id, p, x, (k - c) / b);
                prop_assert!(r.report.residual.unwrap() <= 1e-9 * (1.0 + c.abs()));
            }
        }
    }

    #[test]
    fn threshold_flips_the_outcome(i in 0usize..16, u in unit_draw()) {
        let entries = finite_k_entries();
        let e = entries[i % entries.len()];
        let p = e.draw_params(&u);
        // the classification comes from quadrature of ∫φ/ζ; the root itself
        // can sit below the smallest double when p0 is tiny
        if let Some(k) = e.critical_formula(&p).unwrap().finite() {
            let mz = mass_over_zeta(&e.density(&p).unwrap(), DEFAULT_REL_TOL).unwrap();
            prop_assert_eq!(classify(mz, 0.0, k * (1.0 - 1e-4)).unwrap().outcome, Outcome::UniqueRoot);
            prop_assert_eq!(classify(mz, 0.0, k * (1.0 + 1e-4)).unwrap().outcome, Outcome::NoSolution);
        }
    }

    #[test]
    fn removable_points_are_continuous(i in 0usize..4, u in unit_draw(), eps in -1e-6..1e-6f64) {
        let id = ["p2", "l1", "l6", "l7"][i];
        let e = entry(id).unwrap();
        let p = e.draw_params(&u);
        let ext = e.extension.unwrap();
        let (a, v) = ((ext.point)(&p), (ext.value)(&p));
        let got = e.stieltjes_closed(&p, a * (1.0 + eps)).unwrap();
        prop_assert!(((got - v) / v).abs() <= 1e-5, "{} {:?}: {} vs {}", id, p, got, v);
    }

    #[test]
    fn cli_reports_round_trip(i in 0usize..36, u in unit_draw(), b in 0.0..3.0f64, c in -2.0..2.0f64) {
        let e = &all_entries()[i % all_entries().len()];
        let p = e.draw_params(&u);
        let mut argv: Vec<String> = ["stieltjes", "classify", "--entry", e.id].iter().map(|s| s.to_string()).collect();
        for (k, v) in &p {
            argv.push("--param".into());
            argv.push(format!("{k}={v}"));
        }
        argv.extend(["--b".into(), b.to_string(), "--c".into(), c.to_string()]);
        let first = run_cli_with_tol(&argv, None);
        let second = run_cli_with_tol(&argv, None);
        prop_assert_eq!(first.code, 0, "{}", first.stderr);
        prop_assert_eq!(&first.stdout, &second.stdout);
        let report: EquationReport = serde_json::from_str(&first.stdout).unwrap();
        prop_assert_eq!(&report.params, &p);
        prop_assert!(report.table_check);
        let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
        prop_assert_eq!(&again, &first.stdout);
    }
}

#[test]
fn validate_report_round_trips() {
    let out = run_cli_with_tol(["stieltjes", "validate", "--entry", "l7", "--defaults"], None);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let r: ValidateReport = serde_json::from_str(&out.stdout).unwrap();
    assert!(r.passed);
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out.stdout);
}
