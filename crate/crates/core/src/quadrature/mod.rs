//! Stieltjes transforms and the critical integrals of a density, by
//! globally adaptive Gauss–Kronrod quadrature on the half-line.
//!
//! Divergence is never inferred from quadrature: whether `∫φ/ζ` or `∫φ`
//! is infinite is read off the density's exponent metadata, so
//! classification downstream is deterministic.
//!
//! The half-line is split at the support ends and at `min(1,|z|)`,
//! `max(1,|z|)`. Power singularities at the origin are removed by
//! `ζ = b·s^{1/(1+e)}`, the tail is mapped to a finite interval by
//! `ζ = B/t` (followed by a power substitution when the decay is slow), and
//! densities flagged as oscillatory get their tail summed period by period
//! with Wynn-epsilon extrapolation of the partial sums.

mod epsilon;
pub(crate) mod gk;

use crate::density::{Density, Oscillation};
use crate::error::{Error, Result};
use gk::{Adaptive, Piece};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};


pub const DEFAULT_REL_TOL: f64 = 1e-10;
pub const DEFAULT_ABS_TOL: f64 = 1e-14;
pub const MAX_PANELS: usize = 2000;
/// Below this ζ an integrable origin singularity is replaced by its
/// leading power law.
const TINY: f64 = 1e-200;
pub const MIN_REL_TOL: f64 = 1e-14;
pub const MAX_REL_TOL: f64 = 1e-4;

const OSC_FIRST_BLOCK: usize = 2;
const OSC_MAX_DOUBLINGS: usize = 12;

/// A point of the complex plane cut along `(-inf, 0]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutPlanePoint {
    re: f64,
    im: f64,
}

impl CutPlanePoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !(re.is_finite() && im.is_finite()) || (im == 0.0 && re <= 0.0) {
            return Err(Error::NotOnCutPlane { re, im });
        }
        Ok(CutPlanePoint { re, im })
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(x, 0.0)
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl TryFrom<Complex64> for CutPlanePoint {
    type Error = Error;
    fn try_from(z: Complex64) -> Result<Self> {
        CutPlanePoint::new(z.re, z.im)
    }
}

/// A finite real with an error estimate, or `+inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    Finite { value: f64, err: f64 },
    PosInfinity,
}

impl ExtendedReal {
    pub fn exact(value: f64) -> Self {
        ExtendedReal::Finite { value, err: 0.0 }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedReal::PosInfinity)
    }

    /// The value as an `f64`, with `+inf` for the infinite case.
    pub fn to_f64(&self) -> f64 {
        match *self {
            ExtendedReal::Finite { value, .. } => value,
            ExtendedReal::PosInfinity => f64::INFINITY,
        }
    }

    pub fn finite(&self) -> Option<f64> {
        match *self {
            ExtendedReal::Finite { value, .. } => Some(value),
            ExtendedReal::PosInfinity => None,
        }
    }

    /// `self - c`, keeping `+inf` infinite.
    pub fn minus(&self, c: f64) -> ExtendedReal {
        match *self {
            ExtendedReal::Finite { value, err } => ExtendedReal::Finite { value: value - c, err },
            ExtendedReal::PosInfinity => ExtendedReal::PosInfinity,
        }
    }
}

impl Serialize for ExtendedReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            ExtendedReal::Finite { value, .. } => s.serialize_f64(value),
            ExtendedReal::PosInfinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(ExtendedReal::exact(v)),
            Repr::Str(s) if s == "inf" => Ok(ExtendedReal::PosInfinity),
            Repr::Str(s) => Err(serde::de::Error::custom(format!("expected number or \"inf\", got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub subdivisions: usize,
    /// False when the panel cap was hit before the tolerance was met; the
    /// value is then the best available and `err_estimate` is honest.
    pub converged: bool,
}

impl QuadResult {
    fn zero() -> Self {
        QuadResult { value: Complex64::new(0.0, 0.0), err_estimate: 0.0, subdivisions: 0, converged: true }
    }

    /// Turns a non-converged result into [`Error::ToleranceNotMet`].
    pub fn checked(self) -> Result<QuadResult> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::ToleranceNotMet { value: self.value.re, err_estimate: self.err_estimate })
        }
    }
}

fn check_rel_tol(rel_tol: f64) -> Result<()> {
    if (MIN_REL_TOL..=MAX_REL_TOL).contains(&rel_tol) {
        Ok(())
    } else {
        Err(Error::BadParameter(format!(
            "rel_tol {rel_tol:e} outside [{MIN_REL_TOL:e}, {MAX_REL_TOL:e}]"
        )))
    }
}

/// Shape of a weight `w(ζ)` multiplying the density: `w ~ ζ^origin` at 0
/// and `w ~ ζ^-decay` at infinity.
pub(crate) struct Weight<'a> {
    pub eval: &'a dyn Fn(f64) -> Complex64,
    pub origin: f64,
    pub decay: f64,
}

/// `∫ φ(ζ) w(ζ) dζ` over the support of φ, with `extra` breakpoints.
/// The caller guarantees convergence (origin exponent `p0 + origin > -1`,
/// tail decay `delta + decay > 1`).
pub(crate) fn weighted_integral(phi: &Density, weight: &Weight<'_>, extra: &[f64], rel_tol: f64) -> QuadResult {
    if phi.is_zero() {
        return QuadResult::zero();
    }
    let support = phi.support();
    let (lo, hi) = (support.lo, support.hi);
    let f = |zeta: f64| (weight.eval)(zeta) * phi.eval(zeta);

    let mut knots: Vec<f64> = vec![lo];
    let mut interior: Vec<f64> = extra.iter().copied().filter(|&x| x > lo && x < hi && x.is_finite()).collect();
    interior.sort_by(f64::total_cmp);
    interior.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
    knots.extend(interior);
    if hi.is_finite() {
        knots.push(hi);
        if knots.len() == 2 {
            knots.insert(1, 0.5 * (lo + hi));
        }
    } else if knots.len() == 1 {
        knots.push(if lo > 0.0 { 2.0 * lo } else { 1.0 });
    }

    let e0 = phi.p0() + weight.origin;
    let tail_decay = phi.delta() + weight.decay;
    let mut pieces: Vec<Piece<'_>> = Vec::new();
    let last = knots.len() - 1;
    for i in 0..last {
        let (a, b) = (knots[i], knots[i + 1]);
        if i == 0 && a == 0.0 && e0 > -1.0 && e0 < 0.0 {
            // ζ = b s^r makes the integrand bounded. For e0 near -1, r is
            // large and ζ underflows while s is still O(0.01); below TINY the
            // leading power law takes over, which is constant in s.
            let r = 1.0 / (1.0 + e0);
            let tiny = TINY.min(1e-30 * b).max(1e-300);
            let lead = f(tiny) * tiny.powf(-e0) * r * b.powf(1.0 + e0);
            pieces.push(Piece::new(0.0, 1.0, move |s: f64| {
                if s <= 0.0 {
                    return lead;
                }
                let zeta = b * s.powf(r);
                if zeta < tiny {
                    return lead;
                }
                f(zeta) * (b * r * s.powf(r - 1.0))
            }));
        } else if i == 0 && a > 0.0 {
            let w = b - a;
            pieces.push(Piece::new(0.0, 1.0, move |s: f64| f(a + w * s * s) * (2.0 * w * s)));
        } else if i == last - 1 && hi.is_finite() && i > 0 {
            let w = b - a;
            pieces.push(Piece::new(0.0, 1.0, move |s: f64| f(b - w * s * s) * (2.0 * w * s)));
        } else if a > 0.0 && b > 16.0 * a {
            // many decades: ζ = a e^t spreads them evenly
            let l = (b / a).ln();
            pieces.push(Piece::new(0.0, l, move |t: f64| {
                let zeta = a * t.exp();
                f(zeta) * zeta
            }));
        } else {
            pieces.push(Piece::new(a, b, f));
        }
    }

    let adaptive = Adaptive { rel_tol, abs_tol: DEFAULT_ABS_TOL, max_panels: MAX_PANELS };
    let big_b = knots[last];
    if hi.is_finite() {
        let out = adaptive.integrate(&pieces);
        return QuadResult { value: out.value, err_estimate: out.err, subdivisions: out.panels, converged: out.converged };
    }

    if let Some(osc) = phi.oscillation() {
        // head and tail errors add; split the budget
        let head = Adaptive { rel_tol: 0.5 * rel_tol, ..adaptive }.integrate(&pieces);
        let tail = oscillatory_tail(&f, big_b, osc, tail_decay, rel_tol, head.value.norm());
        let value = head.value + tail.value;
        let err = head.err + tail.err_estimate;
        let tol = DEFAULT_ABS_TOL.max(rel_tol * value.norm());
        return QuadResult {
            value,
            err_estimate: err,
            subdivisions: head.panels + tail.subdivisions,
            converged: head.converged && tail.converged && err <= tol,
        };
    }

    let d = tail_decay - 1.0;
    if d > 0.0 && d < 1.0 {
        let r = 1.0 / d;
        pieces.push(Piece::new(0.0, 1.0, move |s: f64| {
            if s <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let t = s.powf(r);
            let zeta = big_b / t;
            if !zeta.is_finite() {
                return Complex64::new(0.0, 0.0);
            }
            f(zeta) * (big_b / (t * t) * r * s.powf(r - 1.0))
        }));
    } else {
        pieces.push(Piece::new(0.0, 1.0, move |t: f64| {
            if t <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let zeta = big_b / t;
            if !zeta.is_finite() {
                return Complex64::new(0.0, 0.0);
            }
            f(zeta) * (big_b / (t * t))
        }));
    }
    let out = adaptive.integrate(&pieces);
    QuadResult { value: out.value, err_estimate: out.err, subdivisions: out.panels, converged: out.converged }
}

/// Tail `∫_B^∞ f` of an integrand that is asymptotically periodic in
/// `u = ζ^q`: integrate whole periods in `u`, in blocks of doubling length,
/// and extrapolate the partial sums. With `f ~ ζ^-decay` the remainder past
/// `u` goes as `u^-(decay-1)/q` times a series in `1/u`, which a power-law
/// fit removes; Wynn's algorithm covers the rest.
fn oscillatory_tail(
    f: &dyn Fn(f64) -> Complex64,
    big_b: f64,
    osc: Oscillation,
    decay: f64,
    rel_tol: f64,
    head_scale: f64,
) -> QuadResult {
    let Oscillation { power: q, period } = osc;
    // blocks shrink geometrically; hold them to the scale of the whole
    // integral, not their own
    let abs_tol = (DEFAULT_ABS_TOL * 0.1).max(0.01 * rel_tol * head_scale);
    let adaptive = Adaptive { rel_tol: rel_tol * 0.1, abs_tol, max_panels: MAX_PANELS };
    let inv_q = 1.0 / q;
    let s = (decay - 1.0) / q;
    let g = |u: f64| f(u.powf(inv_q)) * (inv_q * u.powf(inv_q - 1.0));

    let u_b = big_b.powf(q);
    let k0 = (u_b / period).ceil() + 1.0;
    let u0 = k0 * period;
    let lead = adaptive.integrate(&[Piece::new(u_b, u0, &g)]);
    let mut panels = lead.panels;
    let mut err = lead.err;
    let mut sum = lead.value;
    let mut partial = Vec::new();
    let mut cutoffs = Vec::new();
    let mut done_periods = 0usize;
    let mut converged = lead.converged;
    for j in 0..=OSC_MAX_DOUBLINGS {
        let target = OSC_FIRST_BLOCK << j;
        let pieces: Vec<Piece<'_>> = (done_periods..target)
            .map(|k| {
                let a = u0 + k as f64 * period;
                Piece::new(a, a + period, &g)
            })
            .collect();
        // one panel per period at least, plus room to refine each
        let budget = Adaptive { max_panels: MAX_PANELS.max(8 * pieces.len()), ..adaptive };
        let block = budget.integrate(&pieces);
        panels += block.panels;
        err += block.err;
        converged &= block.converged;
        sum += block.value;
        done_periods = target;
        partial.push(sum);
        cutoffs.push(u0 + target as f64 * period);

        let scale = (head_scale + sum.norm()).max(f64::MIN_POSITIVE);
        let tol = DEFAULT_ABS_TOL.max(rel_tol * scale);
        if block.value.norm() <= 0.1 * tol {
            return QuadResult { value: sum, err_estimate: err + block.value.norm(), subdivisions: panels, converged };
        }
        if partial.len() >= 4 {
            let (est, werr) = extrapolate(&partial, &cutoffs, s);
            if werr <= 0.5 * tol {
                return QuadResult { value: est, err_estimate: err + werr, subdivisions: panels, converged };
            }
        }
    }
    // out of blocks: the last extrapolation still counts if it is good enough
    let (est, werr) = extrapolate(&partial, &cutoffs, s);
    let tol = DEFAULT_ABS_TOL.max(rel_tol * (head_scale + est.norm()));
    QuadResult { value: est, err_estimate: err + werr, subdivisions: panels, converged: converged && err + werr <= tol }
}

fn extrapolate(partial: &[Complex64], cutoffs: &[f64], s: f64) -> (Complex64, f64) {
    let w = epsilon::wynn_epsilon(partial);
    let r = epsilon::power_law_limit(partial, cutoffs, s);
    if r.1 < w.1 {
        r
    } else {
        w
    }
}

/// `1/d` without squaring `d`, which underflows for `|d|` below 1e-154.
fn recip(d: Complex64) -> Complex64 {
    let s = d.re.abs().max(d.im.abs());
    let d = d / s;
    d.conj() / (d.norm_sqr() * s)
}

fn breakpoints(z: Complex64) -> [f64; 2] {
    let r = z.norm();
    [r.min(1.0), r.max(1.0)]
}

/// `S[φ](z) = ∫ φ(ζ)/(ζ+z) dζ` on the cut plane.
pub fn stieltjes_transform(phi: &Density, z: CutPlanePoint, rel_tol: f64) -> Result<QuadResult> {
    check_rel_tol(rel_tol)?;
    if phi.is_zero() {
        return Ok(QuadResult::zero());
    }
    if phi.p0() <= -1.0 && !phi.vanishes_near_origin() {
        return Err(Error::DivergentIntegral(format!(
            "origin exponent {} <= -1: the density is not integrable at 0",
            phi.p0()
        )));
    }
    let zc = z.to_complex();
    let w = move |zeta: f64| recip(Complex64::new(zeta, 0.0) + zc);
    let weight = Weight { eval: &w, origin: 0.0, decay: 1.0 };
    Ok(weighted_integral(phi, &weight, &breakpoints(zc), rel_tol))
}

/// Real part of the transform on the positive axis.
pub fn stieltjes_real(phi: &Density, x: f64, rel_tol: f64) -> Result<QuadResult> {
    stieltjes_transform(phi, CutPlanePoint::real(x)?, rel_tol)
}

/// `∫ φ(ζ)/(ζ+z)² dζ = -S'(z)`.
pub fn stieltjes_derivative(phi: &Density, z: CutPlanePoint, rel_tol: f64) -> Result<QuadResult> {
    check_rel_tol(rel_tol)?;
    if phi.is_zero() {
        return Ok(QuadResult::zero());
    }
    if phi.p0() <= -1.0 && !phi.vanishes_near_origin() {
        return Err(Error::DivergentIntegral("density not integrable at 0".into()));
    }
    let zc = z.to_complex();
    let w = move |zeta: f64| {
        let d = Complex64::new(zeta, 0.0) + zc;
        let r = recip(d);
        -(r * r)
    };
    let weight = Weight { eval: &w, origin: 0.0, decay: 2.0 };
    Ok(weighted_integral(phi, &weight, &breakpoints(zc), rel_tol))
}

fn finite_or_flag(q: QuadResult) -> Result<ExtendedReal> {
    let q = q.checked()?;
    Ok(ExtendedReal::Finite { value: q.value.re, err: q.err_estimate })
}

/// `∫ φ(ζ)/ζ dζ`; infinite exactly when `p0 <= 0` with the support
/// reaching the origin.
pub fn mass_over_zeta(phi: &Density, rel_tol: f64) -> Result<ExtendedReal> {
    check_rel_tol(rel_tol)?;
    if phi.is_zero() {
        return Ok(ExtendedReal::exact(0.0));
    }
    if phi.p0() <= 0.0 && !phi.vanishes_near_origin() {
        return Ok(ExtendedReal::PosInfinity);
    }
    let w = |zeta: f64| Complex64::new(1.0 / zeta, 0.0);
    let weight = Weight { eval: &w, origin: -1.0, decay: 1.0 };
    finite_or_flag(weighted_integral(phi, &weight, &[1.0], rel_tol))
}

/// `∫ φ(ζ) dζ`; infinite exactly when `delta <= 1` on an unbounded support.
pub fn total_mass(phi: &Density, rel_tol: f64) -> Result<ExtendedReal> {
    check_rel_tol(rel_tol)?;
    if phi.is_zero() {
        return Ok(ExtendedReal::exact(0.0));
    }
    if phi.delta() <= 1.0 && !phi.support().is_bounded() {
        return Ok(ExtendedReal::PosInfinity);
    }
    if phi.p0() <= -1.0 && !phi.vanishes_near_origin() {
        return Err(Error::DivergentIntegral("density not integrable at 0".into()));
    }
    let w = |_: f64| Complex64::new(1.0, 0.0);
    let weight = Weight { eval: &w, origin: 0.0, decay: 0.0 };
    finite_or_flag(weighted_integral(phi, &weight, &[1.0], rel_tol))
}

/// Heuristic check that `g` decays to zero along a geometric grid on
/// `[1, 1e6]`: `|g|` non-increasing from `x = 10` on and
/// `|g(1e6)| <= 1e-3 |g(1)|`.
pub fn decay_check(g: impl Fn(f64) -> f64) -> bool {
    let grid: Vec<f64> = (0..=60).map(|i| 10f64.powf(i as f64 * 0.1)).collect();
    let vals: Vec<f64> = grid.iter().map(|&x| g(x).abs()).collect();
    if vals.iter().any(|v| !v.is_finite()) {
        return false;
    }
    let monotone = vals[10..].windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12));
    monotone && vals[60] <= 1e-3 * vals[0] * (1.0 + 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{make_density, DensityBuilder, Support};
    use std::f64::consts::PI;

    const E1_AT_1: f64 = 0.219_383_934_395_520_27;

    fn exp() -> Density {
        make_density(|z: f64| (-z).exp(), 0.0, f64::INFINITY, Support::HALF_LINE, true).unwrap()
    }

    #[test]
    fn inverse_sqrt_transform_at_one_is_pi() {
        let phi = make_density(|z: f64| z.powf(-0.5), -0.5, 0.5, Support::HALF_LINE, true).unwrap();
        let r = stieltjes_transform(&phi, CutPlanePoint::real(1.0).unwrap(), 1e-12).unwrap();
        assert!(r.converged);
        assert!((r.value.re - PI).abs() < 1e-11, "{}", r.value);
    }

    #[test]
    fn exponential_transform_at_one() {
        let r = stieltjes_transform(&exp(), CutPlanePoint::real(1.0).unwrap(), 1e-12).unwrap();
        assert!((r.value.re - std::f64::consts::E * E1_AT_1).abs() < 1e-12);
    }

    #[test]
    fn zero_density_transform_vanishes() {
        let zero = Density::zero();
        let r = stieltjes_transform(&zero, CutPlanePoint::new(3.0, 4.0).unwrap(), 1e-10).unwrap();
        assert_eq!(r.value, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn branch_cut_rejected() {
        assert!(matches!(CutPlanePoint::new(-1.0, 0.0), Err(Error::NotOnCutPlane { .. })));
        assert!(CutPlanePoint::new(0.0, 0.0).is_err());
        assert!(CutPlanePoint::new(-1.0, 1e-3).is_ok());
    }

    #[test]
    fn divergent_transform_reported() {
        let phi = DensityBuilder::new(|z: f64| 1.0 / z).p0(-1.0).delta(1.0).build().unwrap();
        let r = stieltjes_transform(&phi, CutPlanePoint::real(1.0).unwrap(), 1e-10);
        assert!(matches!(r, Err(Error::DivergentIntegral(_))));
    }

    #[test]
    fn mass_over_zeta_examples() {
        let p2 = make_density(|z: f64| z.sqrt() / (z + 1.0), 0.5, 0.5, Support::HALF_LINE, true).unwrap();
        let m = mass_over_zeta(&p2, 1e-11).unwrap();
        assert!((m.to_f64() - PI).abs() < 1e-9, "{m:?}");
        assert!(mass_over_zeta(&exp(), 1e-10).unwrap().is_infinite());
        let cut = DensityBuilder::new(|z: f64| (-z).exp()).support(1.0, f64::INFINITY).build().unwrap();
        let m = mass_over_zeta(&cut, 1e-12).unwrap().to_f64();
        assert!((m - E1_AT_1).abs() < 1e-12, "{m}");
    }

    #[test]
    fn origin_exponent_close_to_minus_one() {
        // ∫ ζ^(α-1)/(ζ²+1) = (π/2) csc(πα/2); most of the mass sits at tiny ζ
        for al in [0.0067, 0.05, 0.3] {
            let phi = make_density(move |z: f64| z.powf(al) / (z * z + 1.0), al, 2.0 - al, Support::HALF_LINE, true)
                .unwrap();
            let m = mass_over_zeta(&phi, 1e-10).unwrap().to_f64();
            let want = PI / 2.0 / (PI * al / 2.0).sin();
            assert!(((m - want) / want).abs() < 1e-9, "alpha={al}: {m} vs {want}");
        }
    }

    #[test]
    fn transform_at_tiny_argument() {
        // S[ζ^-α/(ζ+1)](x) = π csc(πα) (x^-α - 1)/(1 - x); the piece [x, 1]
        // spans thirty decades
        for (al, x_min) in [(0.2, 1e-170), (0.85, 1e-100)] {
            let phi = make_density(move |z: f64| z.powf(-al) / (z + 1.0), -al, 1.0 + al, Support::HALF_LINE, true)
                .unwrap();
            for x in [x_min, 1e-30, 1e-12, 0.3] {
                let q = stieltjes_real(&phi, x, 1e-12).unwrap();
                let want = PI / (PI * al).sin() * (x.powf(-al) - 1.0) / (1.0 - x);
                assert!(q.converged && ((q.value.re - want) / want).abs() < 1e-11, "{al} {x}: {} vs {want}", q.value);
            }
        }
    }

    #[test]
    fn total_mass_examples() {
        assert!((total_mass(&exp(), 1e-12).unwrap().to_f64() - 1.0).abs() < 1e-12);
        let s = make_density(|z: f64| z.powf(-0.5), -0.5, 0.5, Support::HALF_LINE, true).unwrap();
        assert!(total_mass(&s, 1e-10).unwrap().is_infinite());
        let cube = make_density(|z: f64| (z + 1.0).powi(-3), 0.0, 3.0, Support::HALF_LINE, true).unwrap();
        assert!((total_mass(&cube, 1e-12).unwrap().to_f64() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn slowly_oscillating_tail() {
        // ζ^{-1/2} sin²(√ζ) has S(x) = π x^{-1/2}(1 - e^{-2√x})/2.
        let phi = DensityBuilder::new(|z: f64| z.sqrt().sin().powi(2) / z.sqrt())
            .p0(0.5)
            .delta(0.5)
            .oscillation(0.5, PI)
            .build()
            .unwrap();
        for x in [0.1, 1.0, 7.0] {
            let r = stieltjes_real(&phi, x, 1e-10).unwrap();
            let exact = PI / x.sqrt() * (1.0 - (-2.0 * x.sqrt()).exp()) / 2.0;
            assert!(((r.value.re - exact) / exact).abs() < 1e-9, "x={x}: {} vs {exact}", r.value.re);
        }
        let m = mass_over_zeta(&phi, 1e-10).unwrap().to_f64();
        assert!((m - PI).abs() < 1e-8, "{m}");
    }

    #[test]
    fn decay_check_examples() {
        assert!(decay_check(|x| PI / x.sqrt()));
        assert!(!decay_check(|x| 1.0 + 1.0 / x));
        assert!(decay_check(|x| 1.0 / (x + 1.0)));
    }

    #[test]
    fn rel_tol_range_enforced() {
        let z = CutPlanePoint::real(1.0).unwrap();
        assert!(stieltjes_transform(&exp(), z, 1e-3).is_err());
        assert!(stieltjes_transform(&exp(), z, 1e-16).is_err());
    }

    #[test]
    fn extended_real_serializes_infinity_as_string() {
        let s = serde_json::to_string(&ExtendedReal::PosInfinity).unwrap();
        assert_eq!(s, "\"inf\"");
        let back: ExtendedReal = serde_json::from_str(&s).unwrap();
        assert!(back.is_infinite());
        let v: ExtendedReal = serde_json::from_str("2.5").unwrap();
        assert_eq!(v.to_f64(), 2.5);
    }
}
