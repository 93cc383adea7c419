//! Classification and bracketed solution of `S[φ](z) - bz - c = 0`.
//!
//! On the positive axis `F(x) = S[φ](x) - bx - c` is continuous and strictly
//! decreasing, with `F(0+) = m` (the critical value) and `F(+inf) = -c` when
//! `b = 0`, or `-inf` when `b > 0`. Off the axis `Im F` has the sign of
//! `-Im z`, so a root, if any, is real, positive and unique. The solver
//! therefore needs only a sign change on `(0, hi]`, where `hi = m/b` when
//! that is finite.

use crate::density::{apply_transform, compose_transforms, Density, TransformKind};
use crate::error::{Error, Result};
use crate::quadrature::{
    mass_over_zeta, stieltjes_real, stieltjes_transform, total_mass, CutPlanePoint, ExtendedReal, DEFAULT_REL_TOL,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Relative inset of a finite bracket from its endpoints.
pub const BRACKET_INSET: f64 = 1e-12;
/// Expansion cap for brackets without an analytic upper end.
pub const EXPANSION_CAP: f64 = 1e15;
pub const DEFAULT_TOL_RES: f64 = 1e-10;

const MAX_BISECTIONS: usize = 400;
const MAX_SECANT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    NoSolution,
    UniqueRoot,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    MNonpositive,
    CNonpositiveBZero,
    CExceedsMass,
    ZeroDensityZeroB,
}

impl Reason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reason::MNonpositive => "m_nonpositive",
            Reason::CNonpositiveBZero => "c_nonpositive_b_zero",
            Reason::CExceedsMass => "c_exceeds_mass",
            Reason::ZeroDensityZeroB => "zero_density_zero_b",
        }
    }
}

/// Outcome of the existence test, with the bracket `(0, hi]` that holds
/// the root. `hi = +inf` means the upper end must be found by expansion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub outcome: Outcome,
    pub reason: Option<Reason>,
    pub lo: f64,
    #[serde(with = "inf_as_string")]
    pub hi: f64,
    pub critical_value: ExtendedReal,
}

impl Classification {
    pub fn is_unique_root(&self) -> bool {
        self.outcome == Outcome::UniqueRoot
    }

    fn no_solution(reason: Reason, m: ExtendedReal) -> Self {
        Classification { outcome: Outcome::NoSolution, reason: Some(reason), lo: 0.0, hi: 0.0, critical_value: m }
    }
}

mod inf_as_string {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(*v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Str(s) if s == "inf" => Ok(f64::INFINITY),
            Repr::Str(s) => Err(serde::de::Error::custom(format!("expected number or \"inf\", got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub classification: Classification,
    pub root: Option<f64>,
    pub residual: Option<f64>,
    /// `0 < root < hi` (vacuous when there is no root or `hi` is infinite).
    pub bound_ok: bool,
    pub iterations: usize,
    pub critical_value: ExtendedReal,
}

impl SolveReport {
    fn without_root(classification: Classification) -> Self {
        SolveReport {
            classification,
            root: None,
            residual: None,
            bound_ok: true,
            iterations: 0,
            critical_value: classification.critical_value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// Relative tolerance of every quadrature.
    pub rel_tol: f64,
    /// Residual target, scaled by `1 + |c|`.
    pub tol_res: f64,
    /// Finish the bisection with secant steps.
    pub secant: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { rel_tol: DEFAULT_REL_TOL, tol_res: DEFAULT_TOL_RES, secant: true }
    }
}

fn check_coefficients(b: f64, c: f64) -> Result<()> {
    if !(b >= 0.0) || !b.is_finite() {
        return Err(Error::BadParameter(format!("b must be finite and >= 0, got {b}")));
    }
    if !c.is_finite() {
        return Err(Error::BadParameter(format!("c must be finite, got {c}")));
    }
    Ok(())
}

/// Existence test given the critical value `m` directly.
pub fn classify_critical(m: ExtendedReal, b: f64, c: f64) -> Result<Classification> {
    check_coefficients(b, c)?;
    let positive = match m {
        ExtendedReal::PosInfinity => true,
        ExtendedReal::Finite { value, .. } => value > 0.0,
    };
    if b > 0.0 {
        if !positive {
            return Ok(Classification::no_solution(Reason::MNonpositive, m));
        }
        let hi = m.finite().map_or(f64::INFINITY, |v| v / b);
        return Ok(Classification { outcome: Outcome::UniqueRoot, reason: None, lo: 0.0, hi, critical_value: m });
    }
    if c <= 0.0 {
        return Ok(Classification::no_solution(Reason::CNonpositiveBZero, m));
    }
    if !positive {
        return Ok(Classification::no_solution(Reason::CExceedsMass, m));
    }
    Ok(Classification { outcome: Outcome::UniqueRoot, reason: None, lo: 0.0, hi: f64::INFINITY, critical_value: m })
}

/// Existence test from `mz = ∫ φ/ζ`, with critical value `m = mz - c`.
pub fn classify(mz: ExtendedReal, b: f64, c: f64) -> Result<Classification> {
    classify_critical(mz.minus(c), b, c)
}

struct Probe<'a> {
    f: &'a dyn Fn(f64) -> Result<f64>,
    calls: usize,
}

impl Probe<'_> {
    fn at(&mut self, x: f64) -> Result<f64> {
        self.calls += 1;
        (self.f)(x)
    }
}

/// Finds the sign change of a strictly decreasing `f` inside the bracket of
/// `cls`. `c` only scales the residual tolerance.
pub fn solve_real(
    f: &dyn Fn(f64) -> Result<f64>,
    cls: &Classification,
    c: f64,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    if !cls.is_unique_root() {
        return Ok(SolveReport::without_root(*cls));
    }
    let tol = opts.tol_res * (1.0 + c.abs());
    let mut probe = Probe { f, calls: 0 };

    // lower end: F must be positive
    let mut lo = if cls.hi.is_finite() { BRACKET_INSET * cls.hi } else { 1.0 };
    let mut f_lo = probe.at(lo)?;
    while f_lo <= 0.0 {
        if f_lo.abs() <= tol {
            return Ok(finish(cls, lo, f_lo, probe.calls));
        }
        lo *= if cls.hi.is_finite() { 1e-3 } else { 0.5 };
        if lo < 1e-300 {
            return Err(Error::BracketFailure(format!("residual stays negative down to x = {lo:e}")));
        }
        f_lo = probe.at(lo)?;
    }

    // upper end: F must be negative
    let mut hi = if cls.hi.is_finite() { cls.hi * (1.0 - BRACKET_INSET) } else { 2.0 * lo };
    let mut f_hi = probe.at(hi)?;
    while f_hi >= 0.0 {
        if f_hi.abs() <= tol {
            return Ok(finish(cls, hi, f_hi, probe.calls));
        }
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        if hi > EXPANSION_CAP {
            return Err(Error::BracketFailure(format!(
                "no sign change below {EXPANSION_CAP:e}; residual {f_hi:e} at the cap"
            )));
        }
        f_hi = probe.at(hi)?;
    }

    let mut best = if f_lo.abs() < f_hi.abs() { (lo, f_lo) } else { (hi, f_hi) };
    for _ in 0..MAX_BISECTIONS {
        // geometric steps while the bracket spans decades
        let mid = if hi > 4.0 * lo { (lo * hi).sqrt() } else { 0.5 * (lo + hi) };
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = probe.at(mid)?;
        if fm.abs() < best.1.abs() {
            best = (mid, fm);
        }
        if fm > 0.0 {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
        let width_ok = hi - lo <= 1e-13 * hi;
        if width_ok && (opts.secant || best.1.abs() <= tol) {
            break;
        }
    }

    if opts.secant && best.1 != 0.0 {
        // secant steps, safeguarded to stay inside the current bracket
        for _ in 0..MAX_SECANT {
            let x = lo - f_lo * (hi - lo) / (f_hi - f_lo);
            if !(x > lo && x < hi) {
                break;
            }
            let fx = probe.at(x)?;
            if fx.abs() < best.1.abs() {
                best = (x, fx);
            }
            if fx == 0.0 {
                break;
            }
            if fx > 0.0 {
                lo = x;
                f_lo = fx;
            } else {
                hi = x;
                f_hi = fx;
            }
            if best.1.abs() <= 1e-3 * tol {
                break;
            }
        }
    }

    if best.1.abs() > tol {
        return Err(Error::ToleranceNotMet { value: best.0, err_estimate: best.1.abs() });
    }
    Ok(finish(cls, best.0, best.1, probe.calls))
}

fn finish(cls: &Classification, root: f64, residual: f64, calls: usize) -> SolveReport {
    let bound_ok = root > 0.0 && (cls.hi.is_infinite() || root < cls.hi);
    SolveReport {
        classification: *cls,
        root: Some(root),
        residual: Some(residual.abs()),
        bound_ok,
        iterations: calls,
        critical_value: cls.critical_value,
    }
}

/// `x ↦ S[φ](x) - bx - c` on the positive axis. The root search needs a
/// sign, or a value good to the residual tolerance near the root; a
/// quadrature short of `rel_tol` that still settles one of those is used.
pub fn residual_fn<'a>(phi: &'a Density, b: f64, c: f64, opts: &SolveOptions) -> impl Fn(f64) -> Result<f64> + 'a {
    let (rel_tol, tol) = (opts.rel_tol, 0.1 * opts.tol_res * (1.0 + c.abs()));
    move |x: f64| {
        let q = stieltjes_real(phi, x, rel_tol)?;
        let r = q.value.re - b * x - c;
        if q.converged || (q.err_estimate.is_finite() && (q.err_estimate < 0.5 * r.abs() || q.err_estimate <= tol)) {
            Ok(r)
        } else {
            Err(q.checked().unwrap_err())
        }
    }
}

pub fn solve_equation(phi: &Density, b: f64, c: f64) -> Result<SolveReport> {
    solve_equation_with(phi, b, c, &SolveOptions::default())
}

pub fn solve_equation_with(phi: &Density, b: f64, c: f64, opts: &SolveOptions) -> Result<SolveReport> {
    check_coefficients(b, c)?;
    if phi.is_zero() && b == 0.0 && c == 0.0 {
        let cls = Classification {
            outcome: Outcome::Degenerate,
            reason: Some(Reason::ZeroDensityZeroB),
            lo: 0.0,
            hi: 0.0,
            critical_value: ExtendedReal::exact(0.0),
        };
        return Ok(SolveReport::without_root(cls));
    }
    let mz = mass_over_zeta(phi, opts.rel_tol)?;
    let cls = classify(mz, b, c)?;
    solve_real(&residual_fn(phi, b, c, opts), &cls, c, opts)
}

/// Solves one of the five corollary equations built from `g = S[φ]`:
///
/// | form | equation |
/// |------|----------|
/// | T1   | `g(az) - bz - c = 0` |
/// | T2   | `z g(z) + bz - c = 0` |
/// | T3   | `(g(z) - g(a))/(z - a) + bz + c = 0` |
/// | T4   | `g(a/z)/z - bz - c = 0` |
/// | T5   | `g(i√z) + g(-i√z) - bz - c = 0` |
///
/// Each is `S[Tφ](z) - b'z - c' = 0` for the transformed density; only T2
/// shifts the constant (`c' = ∫φ - c`, critical value `c`).
pub fn solve_corollary_form(phi: &Density, form: TransformKind, b: f64, c: f64) -> Result<SolveReport> {
    solve_corollary_form_with(phi, form, b, c, &SolveOptions::default())
}

pub fn solve_corollary_form_with(
    phi: &Density,
    form: TransformKind,
    b: f64,
    c: f64,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    check_coefficients(b, c)?;
    let psi = apply_transform(phi, form)?;
    if form != TransformKind::Moment {
        return solve_equation_with(&psi, b, c, opts);
    }
    let mass = match total_mass(phi, opts.rel_tol)? {
        ExtendedReal::Finite { value, .. } => value,
        ExtendedReal::PosInfinity => return Err(Error::InfiniteMass { delta: phi.delta() }),
    };
    let shifted = mass - c;
    let cls = classify_critical(ExtendedReal::exact(c), b, shifted)?;
    let f = residual_fn(&psi, b, shifted, opts);
    solve_real(&f, &cls, shifted, opts)
}

/// General form `S[T_{j1} ∘ … ∘ T_{jk} φ](z) - bz - c = 0`, operators applied
/// left to right.
pub fn solve_composed(phi: &Density, chain: &[TransformKind], b: f64, c: f64) -> Result<SolveReport> {
    solve_equation(&compose_transforms(phi, chain)?, b, c)
}

/// The corollary's right-hand combination of `g = S[φ]` that equals
/// `S[Tφ](z)`. T2 needs `∫φ`; T3 switches to a two-term Taylor expansion
/// near its removable point `z = a`.
pub fn corollary_combination(
    form: TransformKind,
    g: &dyn Fn(Complex64) -> Complex64,
    mass: Option<f64>,
    z: Complex64,
) -> Result<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    Ok(match form {
        TransformKind::Identity => g(z),
        TransformKind::Dilation { a } => g(z * a),
        TransformKind::Moment => {
            let m = mass.ok_or_else(|| Error::BadParameter("the moment form needs the total mass".into()))?;
            m - z * g(z)
        }
        TransformKind::Resolvent { a } => {
            let za = Complex64::new(a, 0.0);
            if (z - za).norm() <= 1e-4 * a {
                let h = 1e-3 * a;
                let at = |t: f64| g(Complex64::new(a + t * h, 0.0));
                let (m2, m1, p1, p2) = (at(-2.0), at(-1.0), at(1.0), at(2.0));
                let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
                let d2 = (-m2 + 16.0 * m1 - 30.0 * at(0.0) + 16.0 * p1 - p2) / (12.0 * h * h);
                -(d1 + d2 * (z - za) * 0.5)
            } else {
                (g(z) - g(za)) / (za - z)
            }
        }
        TransformKind::Inversion { a } => g(a / z) / z,
        TransformKind::SquareRoot => {
            let r = z.sqrt();
            g(i * r) + g(-i * r)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OffAxisReport {
    pub samples: usize,
    /// Smallest `|Im F(z)|` seen.
    pub min_abs_imag: f64,
    /// Points where `Im F(z)` failed to have the sign of `-Im z`, with the
    /// offending imaginary part.
    pub violations: Vec<(Complex64, f64)>,
}

/// Deterministic low-discrepancy points with `|Im z| >= 0.01`, moduli in
/// `[0.05, 20]` and `|arg z| <= 0.95π`.
pub fn offaxis_sample_points(samples: usize) -> Vec<Complex64> {
    const G1: f64 = 0.618_033_988_749_894_9;
    const G2: f64 = 0.754_877_666_246_692_7;
    let mut out = Vec::with_capacity(samples);
    let mut k = 0usize;
    while out.len() < samples {
        k += 1;
        let u = (k as f64 * G1).fract();
        let v = (k as f64 * G2).fract();
        let r = 0.05 * 400f64.powf(u);
        let theta = (2.0 * v - 1.0) * 0.95 * PI;
        let z = Complex64::from_polar(r, theta);
        if z.im.abs() >= 0.01 {
            out.push(z);
        }
    }
    out
}

/// Samples `Im(S[φ](z) - bz - c) = Im S[φ](z) - b Im z`, which must carry
/// the sign of `-Im z`: no root can sit off the positive axis.
pub fn verify_no_offaxis_roots(phi: &Density, b: f64, c: f64, samples: usize) -> Result<OffAxisReport> {
    verify_no_offaxis_roots_at(phi, b, c, &offaxis_sample_points(samples))
}

pub fn verify_no_offaxis_roots_at(phi: &Density, b: f64, _c: f64, points: &[Complex64]) -> Result<OffAxisReport> {
    let mut report = OffAxisReport { samples: points.len(), min_abs_imag: f64::INFINITY, violations: Vec::new() };
    if phi.is_zero() {
        return Ok(report);
    }
    for &z in points {
        let s = stieltjes_transform(phi, CutPlanePoint::try_from(z)?, DEFAULT_REL_TOL)?;
        let im = s.value.im - b * z.im;
        report.min_abs_imag = report.min_abs_imag.min(im.abs());
        if im * z.im >= 0.0 {
            report.violations.push((z, im));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{make_density, Support};

    fn fin(v: f64) -> ExtendedReal {
        ExtendedReal::exact(v)
    }

    fn exp_density() -> Density {
        make_density(|z: f64| (-z).exp(), 0.0, f64::INFINITY, Support::HALF_LINE, true).unwrap()
    }

    #[test]
    fn truth_table_rows() {
        let c = classify(ExtendedReal::PosInfinity, 2.0, 5.0).unwrap();
        assert_eq!(c.outcome, Outcome::UniqueRoot);
        assert!(c.hi.is_infinite());
        let c = classify(fin(PI), 1.0, 4.0).unwrap();
        assert_eq!(c.reason, Some(Reason::MNonpositive));
        let c = classify(fin(PI), 0.0, -1.0).unwrap();
        assert_eq!(c.reason, Some(Reason::CNonpositiveBZero));
        let c = classify(fin(PI), 1.0, 0.0).unwrap();
        assert_eq!(c.outcome, Outcome::UniqueRoot);
        assert_eq!(c.hi, PI);
        assert!(classify(fin(1.0), -1.0, 0.0).is_err());
        // equality at the boundary has no root
        assert_eq!(classify(fin(2.0), 1.0, 2.0).unwrap().outcome, Outcome::NoSolution);
        assert_eq!(classify(fin(2.0), 0.0, 2.0).unwrap().reason, Some(Reason::CExceedsMass));
        assert_eq!(classify(fin(2.0), 0.0, 0.0).unwrap().reason, Some(Reason::CNonpositiveBZero));
    }

    #[test]
    fn expansion_mode_and_both_finishes_agree() {
        let cls = classify(ExtendedReal::PosInfinity, 0.0, 0.25).unwrap();
        let f = |x: f64| Ok(1.0 / (1.0 + x) - 0.25);
        let a = solve_real(&f, &cls, 0.25, &SolveOptions::default()).unwrap();
        let b = solve_real(&f, &cls, 0.25, &SolveOptions { secant: false, ..Default::default() }).unwrap();
        assert!((a.root.unwrap() - 3.0).abs() < 1e-12);
        assert!((a.root.unwrap() - b.root.unwrap()).abs() < 1e-10 * 3.0);
    }

    #[test]
    fn expansion_cap_reports_bracket_failure() {
        let cls = classify(ExtendedReal::PosInfinity, 0.0, 1.0).unwrap();
        let f = |_: f64| Ok(1.0);
        assert!(matches!(solve_real(&f, &cls, 1.0, &SolveOptions::default()), Err(Error::BracketFailure(_))));
    }

    #[test]
    fn exponential_density_roots() {
        let phi = exp_density();
        let r = solve_equation(&phi, 0.0, -1.0).unwrap();
        assert_eq!(r.classification.outcome, Outcome::NoSolution);
        let r = solve_equation(&phi, 0.0, 0.5).unwrap();
        let x = r.root.unwrap();
        assert!(x > 1.0 && x < 1.5, "{x}");
        assert!((crate::specialfn::e1_scaled_real(x) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn degenerate_zero_density() {
        let r = solve_equation(&Density::zero(), 0.0, 0.0).unwrap();
        assert_eq!(r.classification.outcome, Outcome::Degenerate);
        // S = 0 leaves the linear equation -bz - c = 0
        let r = solve_equation(&Density::zero(), 2.0, -1.0).unwrap();
        assert!((r.root.unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn moment_form_bookkeeping() {
        let phi = exp_density();
        let r = solve_corollary_form(&phi, TransformKind::Moment, 1.0, -1.0).unwrap();
        assert_eq!(r.classification.outcome, Outcome::NoSolution);
        let r = solve_corollary_form(&phi, TransformKind::Moment, 1.0, 0.5).unwrap();
        let x = r.root.unwrap();
        assert!(x > 0.0 && x < 0.5);
        assert_eq!(r.critical_value.finite(), Some(0.5));
        // z g(z) + z - 1/2 = 0 with g(z) = e^z E1(z)
        let g = crate::specialfn::e1_scaled_real(x);
        assert!((x * g + x - 0.5).abs() < 1e-9);
    }

    #[test]
    fn offaxis_signs() {
        let phi = exp_density();
        let up = verify_no_offaxis_roots_at(&phi, 1.0, 0.0, &[Complex64::new(1.0, 1.0)]).unwrap();
        assert!(up.violations.is_empty());
        let rep = verify_no_offaxis_roots(&phi, 0.5, 0.3, 100).unwrap();
        assert_eq!(rep.samples, 100);
        assert!(rep.violations.is_empty());
    }
}
