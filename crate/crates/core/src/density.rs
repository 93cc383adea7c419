//! Nonnegative densities on the positive half-line, the five elementary
//! transforms acting on them, and their composition.
//!
//! A [`Density`] carries, besides its evaluator, the exponent metadata that
//! decides convergence of every integral the solver needs: the leading
//! power `p0` at the origin (`φ(ζ) ~ A ζ^p0`) and a decay exponent `delta`
//! at infinity (`φ(ζ) = O(ζ^-delta)`). The metadata is supplied by the
//! caller; construction only cross-checks it by sampling.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Decay exponent used for densities decaying faster than any power.
pub const SUPER_POLYNOMIAL: f64 = 50.0;

/// Number of log-spaced samples in the nonnegativity audit.
pub const AUDIT_SAMPLES: usize = 1000;

/// Relative tolerance for negative round-off in the audit.
pub const TOL_NEG: f64 = 1e-12;

const SLOPE_TOLERANCE: f64 = 0.05;

pub type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Closed interval `[lo, hi]` outside which the density vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub lo: f64,
    pub hi: f64,
}

impl Support {
    pub const HALF_LINE: Support = Support { lo: 0.0, hi: f64::INFINITY };

    pub fn new(lo: f64, hi: f64) -> Self {
        Support { lo, hi }
    }

    pub fn contains(&self, zeta: f64) -> bool {
        zeta >= self.lo && zeta <= self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.hi.is_finite()
    }
}

impl Default for Support {
    fn default() -> Self {
        Support::HALF_LINE
    }
}

/// Asymptotic periodicity of a density: for large ζ it is a smooth envelope
/// times a function periodic in `ζ^power` with the given period. Used only
/// to pick the tail integration strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillation {
    pub power: f64,
    pub period: f64,
}

#[derive(Clone)]
pub struct Density {
    eval: Evaluator,
    p0: f64,
    delta: f64,
    support: Support,
    vanishes: bool,
    log_factor: bool,
    oscillation: Option<Oscillation>,
}

impl fmt::Debug for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Density")
            .field("p0", &self.p0)
            .field("delta", &self.delta)
            .field("support", &self.support)
            .field("vanishes", &self.vanishes)
            .field("log_factor", &self.log_factor)
            .field("oscillation", &self.oscillation)
            .finish()
    }
}

/// Builder for densities that need more metadata than [`make_density`]
/// takes.
pub struct DensityBuilder {
    eval: Evaluator,
    p0: f64,
    delta: f64,
    support: Support,
    nonneg_attested: bool,
    log_factor: bool,
    oscillation: Option<Oscillation>,
}

impl DensityBuilder {
    pub fn new(eval: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        DensityBuilder {
            eval: Arc::new(eval),
            p0: 0.0,
            delta: SUPER_POLYNOMIAL,
            support: Support::HALF_LINE,
            nonneg_attested: true,
            log_factor: false,
            oscillation: None,
        }
    }

    pub fn p0(mut self, p0: f64) -> Self {
        self.p0 = p0;
        self
    }

    pub fn delta(mut self, delta: f64) -> Self {
        self.delta = delta;
        self
    }

    pub fn support(mut self, lo: f64, hi: f64) -> Self {
        self.support = Support::new(lo, hi);
        self
    }

    pub fn nonneg_attested(mut self, attested: bool) -> Self {
        self.nonneg_attested = attested;
        self
    }

    /// Marks a logarithmic factor at an endpoint (`ζ^p0 log ζ`), which
    /// disables the slope cross-check.
    pub fn log_factor(mut self, flag: bool) -> Self {
        self.log_factor = flag;
        self
    }

    pub fn oscillation(mut self, power: f64, period: f64) -> Self {
        self.oscillation = Some(Oscillation { power, period });
        self
    }

    pub fn build(self) -> Result<Density> {
        if !self.nonneg_attested {
            return Err(Error::RejectedDensity("nonnegativity not attested".into()));
        }
        let density = Density::assemble(
            self.eval,
            self.p0,
            self.delta,
            self.support,
            self.log_factor,
            self.oscillation,
        )?;
        density.check_origin_slope()?;
        Ok(density)
    }
}

/// Validates and packages a density. `delta = +inf` is accepted and stored
/// as [`SUPER_POLYNOMIAL`]; `p0 = +inf` means the density vanishes faster
/// than any power at the origin.
pub fn make_density(
    eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    p0: f64,
    delta: f64,
    support: Support,
    nonneg_attested: bool,
) -> Result<Density> {
    DensityBuilder::new(eval)
        .p0(p0)
        .delta(delta)
        .support(support.lo, support.hi)
        .nonneg_attested(nonneg_attested)
        .build()
}

impl Density {
    /// The identically vanishing density.
    pub fn zero() -> Density {
        Density {
            eval: Arc::new(|_| 0.0),
            p0: 0.0,
            delta: SUPER_POLYNOMIAL,
            support: Support::HALF_LINE,
            vanishes: true,
            log_factor: false,
            oscillation: None,
        }
    }

    fn assemble(
        eval: Evaluator,
        p0: f64,
        delta: f64,
        support: Support,
        log_factor: bool,
        oscillation: Option<Oscillation>,
    ) -> Result<Density> {
        if delta.is_nan() || delta <= 0.0 {
            return Err(Error::RejectedDensity(format!("decay exponent must be positive, got {delta}")));
        }
        let delta = if delta.is_infinite() { SUPER_POLYNOMIAL } else { delta };
        if p0.is_nan() || p0 == f64::NEG_INFINITY {
            return Err(Error::RejectedDensity(format!("invalid origin exponent {p0}")));
        }
        if !(support.lo >= 0.0) || !support.lo.is_finite() || !(support.hi > support.lo) {
            return Err(Error::RejectedDensity(format!(
                "support [{}, {}] is not a subinterval of [0, inf]",
                support.lo, support.hi
            )));
        }
        if let Some(osc) = oscillation {
            if !(osc.power > 0.0 && osc.period > 0.0 && osc.period.is_finite()) {
                return Err(Error::RejectedDensity("oscillation metadata must be positive".into()));
            }
        }
        let mut density = Density { eval, p0, delta, support, vanishes: false, log_factor, oscillation };
        density.vanishes = density.audit_nonnegative()?;
        Ok(density)
    }

    /// Samples the density on a log-spaced grid; returns whether every
    /// sample was exactly zero.
    fn audit_nonnegative(&self) -> Result<bool> {
        let grid = self.audit_grid();
        let values: Vec<f64> = grid.iter().map(|&z| self.eval(z)).collect();
        let mut all_zero = true;
        for (i, (&z, &v)) in grid.iter().zip(&values).enumerate() {
            if v.is_nan() {
                return Err(Error::RejectedDensity(format!("evaluator returned NaN at {z:e}")));
            }
            if v != 0.0 {
                all_zero = false;
            }
            let lo = i.saturating_sub(1);
            let hi = (i + 1).min(values.len() - 1);
            let scale = values[lo..=hi].iter().fold(f64::MIN_POSITIVE, |m, x| m.max(x.abs()));
            if v < -TOL_NEG * scale {
                return Err(Error::RejectedDensity(format!("negative value {v:e} at {z:e}")));
            }
        }
        Ok(all_zero)
    }

    fn audit_grid(&self) -> Vec<f64> {
        let Support { lo, hi } = self.support;
        let start = if lo > 0.0 { lo } else { 1e-10 * hi.min(1.0) };
        let end = if hi.is_finite() { hi } else { 1e10_f64.max(1e3 * start) };
        let ratio = (end / start).ln();
        (0..AUDIT_SAMPLES)
            .map(|i| start * (ratio * (i as f64 + 0.5) / AUDIT_SAMPLES as f64).exp())
            .collect()
    }

    fn check_origin_slope(&self) -> Result<()> {
        if self.vanishes
            || self.log_factor
            || self.support.lo > 0.0
            || !self.p0.is_finite()
            || self.p0 >= SUPER_POLYNOMIAL
        {
            return Ok(());
        }
        let s = self.support.hi.min(1.0);
        let slope = self.log_log_slope(1e-9 * s, 1e-7 * s);
        match slope {
            Some(m) if (m - self.p0).abs() <= SLOPE_TOLERANCE => Ok(()),
            Some(m) => Err(Error::RejectedDensity(format!(
                "origin exponent {} disagrees with measured log-log slope {m:.4}",
                self.p0
            ))),
            None => Err(Error::RejectedDensity(format!(
                "origin exponent {} given but density vanishes near the origin",
                self.p0
            ))),
        }
    }

    /// Log–log slope of the density between two points, if both values are
    /// positive.
    pub fn log_log_slope(&self, z1: f64, z2: f64) -> Option<f64> {
        let (f1, f2) = (self.eval(z1), self.eval(z2));
        if f1 > 0.0 && f2 > 0.0 {
            Some((f2 / f1).ln() / (z2 / z1).ln())
        } else {
            None
        }
    }

    /// Value of the density; zero outside the support.
    pub fn eval(&self, zeta: f64) -> f64 {
        if self.vanishes || !self.support.contains(zeta) {
            0.0
        } else {
            (self.eval)(zeta)
        }
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn support(&self) -> Support {
        self.support
    }

    /// True when the density vanishes identically.
    pub fn is_zero(&self) -> bool {
        self.vanishes
    }

    pub fn has_log_factor(&self) -> bool {
        self.log_factor
    }

    pub fn oscillation(&self) -> Option<Oscillation> {
        self.oscillation
    }

    /// True when the density is identically zero on a neighbourhood of the
    /// origin.
    pub fn vanishes_near_origin(&self) -> bool {
        self.vanishes || self.support.lo > 0.0
    }

    pub fn nonneg_attested(&self) -> bool {
        true
    }
}

/// One of the five elementary operators (plus the identity) mapping
/// nonnegative densities to nonnegative densities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformKind {
    /// ζ ↦ φ(ζ)
    Identity,
    /// ζ ↦ φ(aζ)
    Dilation { a: f64 },
    /// ζ ↦ ζ φ(ζ)
    Moment,
    /// ζ ↦ φ(ζ)/(ζ + a)
    Resolvent { a: f64 },
    /// ζ ↦ φ(a/ζ)/ζ
    Inversion { a: f64 },
    /// ζ ↦ φ(ζ^{1/2})
    SquareRoot,
}

impl TransformKind {
    /// Position of the operator in the standard numbering 0..=5.
    pub fn index(&self) -> usize {
        match self {
            TransformKind::Identity => 0,
            TransformKind::Dilation { .. } => 1,
            TransformKind::Moment => 2,
            TransformKind::Resolvent { .. } => 3,
            TransformKind::Inversion { .. } => 4,
            TransformKind::SquareRoot => 5,
        }
    }

    pub fn parameter(&self) -> Option<f64> {
        match *self {
            TransformKind::Dilation { a } | TransformKind::Resolvent { a } | TransformKind::Inversion { a } => {
                Some(a)
            }
            _ => None,
        }
    }

    /// Builds a transform from its index and parameter (ignored where unused).
    pub fn from_index(index: usize, a: f64) -> Result<TransformKind> {
        Ok(match index {
            0 => TransformKind::Identity,
            1 => TransformKind::Dilation { a },
            2 => TransformKind::Moment,
            3 => TransformKind::Resolvent { a },
            4 => TransformKind::Inversion { a },
            5 => TransformKind::SquareRoot,
            _ => return Err(Error::BadParameter(format!("no transform with index {index}"))),
        })
    }
}

fn inv(a: f64, x: f64) -> f64 {
    if x == 0.0 {
        f64::INFINITY
    } else if x.is_infinite() {
        0.0
    } else {
        a / x
    }
}

pub fn apply_transform(phi: &Density, kind: TransformKind) -> Result<Density> {
    if let Some(a) = kind.parameter() {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::BadParameter(format!("transform parameter must be positive, got {a}")));
        }
    }
    if phi.vanishes {
        return Ok(phi.clone());
    }
    let inner = phi.clone();
    let Support { lo, hi } = phi.support;
    let (eval, p0, delta, support, oscillation): (Evaluator, f64, f64, Support, Option<Oscillation>) = match kind {
        TransformKind::Identity => return Ok(phi.clone()),
        TransformKind::Dilation { a } => (
            Arc::new(move |z| inner.eval(a * z)),
            phi.p0,
            phi.delta,
            Support::new(lo / a, hi / a),
            phi.oscillation.map(|o| Oscillation { power: o.power, period: o.period / a.powf(o.power) }),
        ),
        TransformKind::Moment => {
            if phi.delta <= 1.0 && !phi.support.is_bounded() {
                return Err(Error::InfiniteMass { delta: phi.delta });
            }
            let delta = if phi.support.is_bounded() && phi.delta <= 1.0 { SUPER_POLYNOMIAL } else { phi.delta - 1.0 };
            (Arc::new(move |z| z * inner.eval(z)), phi.p0 + 1.0, delta, phi.support, phi.oscillation)
        }
        TransformKind::Resolvent { a } => (
            Arc::new(move |z| inner.eval(z) / (z + a)),
            phi.p0,
            phi.delta + 1.0,
            phi.support,
            phi.oscillation,
        ),
        TransformKind::Inversion { a } => {
            let delta = if phi.p0.is_infinite() { SUPER_POLYNOMIAL } else { phi.p0 + 1.0 };
            if delta <= 0.0 {
                return Err(Error::RejectedDensity(format!(
                    "inversion of a density with origin exponent {} has no decay",
                    phi.p0
                )));
            }
            (
                Arc::new(move |z| if z > 0.0 { inner.eval(a / z) / z } else { 0.0 }),
                phi.delta - 1.0,
                delta,
                Support::new(inv(a, hi), inv(a, lo)),
                None,
            )
        }
        TransformKind::SquareRoot => (
            Arc::new(move |z| inner.eval(z.sqrt())),
            phi.p0 / 2.0,
            phi.delta / 2.0,
            Support::new(lo * lo, hi * hi),
            phi.oscillation.map(|o| Oscillation { power: o.power / 2.0, period: o.period }),
        ),
    };
    Density::assemble(eval, p0, delta, support, phi.log_factor, oscillation)
}

/// Left-to-right fold of [`apply_transform`]; errors carry the failing
/// stage index.
pub fn compose_transforms(phi: &Density, chain: &[TransformKind]) -> Result<Density> {
    chain.iter().enumerate().try_fold(phi.clone(), |acc, (stage, &kind)| {
        apply_transform(&acc, kind).map_err(|e| Error::TransformStage { stage, source: Box::new(e) })
    })
}
