//! The registry of worked equations: each pairs a nonnegative density with
//! the closed form of its Stieltjes transform, the printed existence
//! conditions, the critical value and, where one is made, a zero-free claim
//! about the special function involved.

mod entries;
mod reference;

pub use reference::reference_document;

use crate::density::Density;
use crate::error::{Error, Result};
use crate::quadrature::{mass_over_zeta, stieltjes_real, ExtendedReal, DEFAULT_REL_TOL};
use crate::solver::{solve_equation_with, Outcome, SolveOptions, SolveReport};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Named real parameters, e.g. `{"a": 1.0, "alpha": 0.5}`.
pub type Params = BTreeMap<String, f64>;

/// Builds a [`Params`] map from pairs.
pub fn params(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

pub(crate) fn get(p: &Params, key: &str) -> f64 {
    p.get(key).copied().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tier {
    /// Closed-form left-hand side available.
    ClosedForm,
    /// Validated through quadrature only.
    QuadratureOnly,
}

impl Tier {
    pub fn number(&self) -> u8 {
        match self {
            Tier::ClosedForm => 1,
            Tier::QuadratureOnly => 2,
        }
    }
}

pub type ParamFn<T> = fn(&Params) -> T;
pub type ClosedForm = fn(&Params, f64) -> Result<f64>;
pub type SectorFn = fn(&Params, Complex64) -> Result<Complex64>;

/// A function claimed to have no zeros in `|arg z| < half_angle·π`.
#[derive(Clone, Copy)]
pub struct ZeroFreeClaim {
    pub function: &'static str,
    pub half_angle: f64,
    pub eval: SectorFn,
    /// Point (depending on the parameters) whose neighbourhood is excluded.
    pub excluded: Option<ParamFn<f64>>,
}

/// Value of the transform at a distinguished point `z = a`; when
/// `removable` is set the closed form is 0/0 there and is replaced nearby
/// by a local Taylor series anchored at `value`.
#[derive(Clone, Copy)]
pub struct Extension {
    pub point: ParamFn<f64>,
    pub value: ParamFn<f64>,
    pub removable: bool,
}

#[derive(Clone, Copy)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub section: &'static str,
    /// Printed equation, plain-text rendering.
    pub equation: &'static str,
    pub density_text: &'static str,
    pub domain_text: &'static str,
    pub threshold_text: &'static str,
    pub param_names: &'static [&'static str],
    pub tier: Tier,
    /// `+1` when the equation is printed as `P - bz - c = 0`, `-1` for
    /// `P + bz + c = 0`; either way `S[φ] = sign·P`.
    pub printed_sign: f64,
    pub zero_free: Option<ZeroFreeClaim>,
    pub extension: Option<Extension>,
    pub(crate) validate: ParamFn<std::result::Result<(), String>>,
    pub(crate) build: ParamFn<Result<Density>>,
    pub(crate) printed: Option<ClosedForm>,
    pub(crate) critical: ParamFn<ExtendedReal>,
    pub(crate) draw: fn(&[f64]) -> Params,
    pub(crate) defaults: &'static [(&'static str, f64)],
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("id", &self.id).field("tier", &self.tier).finish()
    }
}

/// Number of uniforms consumed by [`CatalogEntry::draw_params`].
pub const DRAW_DIM: usize = 4;

impl CatalogEntry {
    pub fn check_params(&self, p: &Params) -> Result<()> {
        for key in p.keys() {
            if !self.param_names.contains(&key.as_str()) {
                return Err(Error::InvalidParams(format!(
                    "{}: unknown parameter {key:?} (expected {:?})",
                    self.id, self.param_names
                )));
            }
        }
        for name in self.param_names {
            match p.get(*name) {
                None => return Err(Error::InvalidParams(format!("{}: missing parameter {name:?}", self.id))),
                Some(v) if !v.is_finite() => {
                    return Err(Error::InvalidParams(format!("{}: parameter {name} = {v} is not finite", self.id)))
                }
                _ => {}
            }
        }
        (self.validate)(p).map_err(|m| Error::InvalidParams(format!("{}: {m}", self.id)))
    }

    pub fn default_params(&self) -> Params {
        params(self.defaults)
    }

    /// Maps `DRAW_DIM` uniforms in `[0, 1)` to an in-domain parameter set.
    pub fn draw_params(&self, u: &[f64]) -> Params {
        let mut padded = [0.5; DRAW_DIM];
        for (dst, src) in padded.iter_mut().zip(u) {
            *dst = *src;
        }
        (self.draw)(&padded)
    }

    pub fn density(&self, p: &Params) -> Result<Density> {
        self.check_params(p)?;
        (self.build)(p)
    }

    /// Closed form of `∫ φ/ζ`.
    pub fn critical_formula(&self, p: &Params) -> Result<ExtendedReal> {
        self.check_params(p)?;
        Ok((self.critical)(p))
    }

    /// The `c`-threshold of the printed conditions. For every entry it
    /// is the critical formula itself (with `+inf` on rows that carry no
    /// upper bound on `c`).
    pub fn printed_threshold(&self, p: &Params) -> Result<ExtendedReal> {
        self.critical_formula(p)
    }

    /// Outcome the printed condition table predicts for `(b, c)`.
    pub fn expected_outcome(&self, p: &Params, b: f64, c: f64) -> Result<Outcome> {
        let t = self.printed_threshold(p)?;
        let below = match t {
            ExtendedReal::PosInfinity => true,
            ExtendedReal::Finite { value, .. } => c < value,
        };
        let unique = if b > 0.0 { below } else { c > 0.0 && below };
        Ok(if unique { Outcome::UniqueRoot } else { Outcome::NoSolution })
    }

    /// Rows of the condition table, rendered for the given parameters.
    pub fn condition_table(&self, p: &Params) -> Result<Vec<ConditionRow>> {
        let t = self.printed_threshold(p)?;
        let rows = match t {
            ExtendedReal::PosInfinity => vec![
                ConditionRow { when: "b > 0".into(), outcome: Outcome::UniqueRoot },
                ConditionRow { when: "b = 0, c > 0".into(), outcome: Outcome::UniqueRoot },
            ],
            ExtendedReal::Finite { value, .. } => vec![
                ConditionRow { when: format!("b > 0, c < {value}"), outcome: Outcome::UniqueRoot },
                ConditionRow { when: format!("b = 0, {value} > c > 0"), outcome: Outcome::UniqueRoot },
            ],
        };
        let mut rows = rows;
        rows.push(ConditionRow { when: "otherwise".into(), outcome: Outcome::NoSolution });
        Ok(rows)
    }

    /// The printed part `P` on the positive axis.
    pub fn printed_part(&self, p: &Params, x: f64) -> Result<f64> {
        Ok(self.printed_sign * self.stieltjes_closed(p, x)?)
    }

    /// Closed-form `S[φ](x)`, sign-normalised, with removable points
    /// bridged by a local series.
    pub fn stieltjes_closed(&self, p: &Params, x: f64) -> Result<f64> {
        let f = self.printed.ok_or_else(|| Error::TierMismatch(self.id.into()))?;
        self.check_params(p)?;
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::DomainError(format!("closed forms are evaluated for x > 0, got {x}")));
        }
        let s = |t: f64| f(p, t).map(|v| self.printed_sign * v);
        if let Some(ext) = self.extension.filter(|e| e.removable) {
            let a = (ext.point)(p);
            if (x - a).abs() <= REMOVABLE_WINDOW * a {
                return local_series(&s, a, (ext.value)(p), x);
            }
        }
        s(x)
    }

    /// The printed left-hand side `sign·(S - bx - c)`.
    pub fn printed_lhs(&self, p: &Params, x: f64, b: f64, c: f64) -> Result<f64> {
        Ok(self.printed_sign * (self.stieltjes_closed(p, x)? - b * x - c))
    }
}

/// Relative half-width of the window around a removable point.
pub const REMOVABLE_WINDOW: f64 = 1e-4;

/// Second-order Taylor expansion about `a` with the exact value `s0`;
/// derivatives by fourth-order differences at `a ± h, a ± 2h`, outside the
/// cancellation window.
fn local_series(s: &dyn Fn(f64) -> Result<f64>, a: f64, s0: f64, x: f64) -> Result<f64> {
    let h = 1e-2 * a;
    let (p1, m1, p2, m2) = (s(a + h)?, s(a - h)?, s(a + 2.0 * h)?, s(a - 2.0 * h)?);
    let d1 = (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * h);
    let d2 = (16.0 * (p1 + m1) - (p2 + m2) - 30.0 * s0) / (12.0 * h * h);
    let t = x - a;
    Ok(s0 + t * (d1 + 0.5 * t * d2))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionRow {
    pub when: String,
    pub outcome: Outcome,
}

fn registry() -> &'static [CatalogEntry] {
    static REGISTRY: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    REGISTRY.get_or_init(entries::all)
}

pub fn all_entries() -> &'static [CatalogEntry] {
    registry()
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    registry().iter().find(|e| e.id == id).ok_or_else(|| Error::NotFound(id.into()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntrySummary {
    pub id: String,
    pub tier: u8,
    pub params: String,
}

pub fn list_entries() -> Vec<EntrySummary> {
    registry()
        .iter()
        .map(|e| EntrySummary { id: e.id.into(), tier: e.tier.number(), params: e.domain_text.into() })
        .collect()
}

/// `n` log-spaced points on `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let r = (hi / lo).ln();
    (0..n).map(|i| lo * (r * i as f64 / (n - 1) as f64).exp()).collect()
}

/// Maximum relative gap between the closed form and quadrature of the
/// density over `grid`.
pub fn cross_validate(id: &str, p: &Params, grid: &[f64]) -> Result<f64> {
    cross_validate_with(id, p, grid, DEFAULT_REL_TOL)
}

pub fn cross_validate_with(id: &str, p: &Params, grid: &[f64], rel_tol: f64) -> Result<f64> {
    let e = entry(id)?;
    if e.tier != Tier::ClosedForm {
        return Err(Error::TierMismatch(id.into()));
    }
    let phi = e.density(p)?;
    let mut worst: f64 = 0.0;
    for &x in grid {
        let closed = e.stieltjes_closed(p, x)?;
        let quad = stieltjes_real(&phi, x, rel_tol)?.checked()?.value.re;
        worst = worst.max(((closed - quad) / quad).abs());
    }
    Ok(worst)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub entry: String,
    pub params: Params,
    pub report: SolveReport,
    /// Realised outcome matches the printed condition table and, for
    /// closed-form entries, the printed left-hand side vanishes at the root.
    pub table_check: bool,
    pub closed_form_residual: Option<f64>,
}

/// Tolerance of the closed-form residual check at a computed root.
pub const CLOSED_FORM_RESIDUAL_TOL: f64 = 1e-8;

pub fn solve_entry(id: &str, p: &Params, b: f64, c: f64) -> Result<EntryReport> {
    solve_entry_with(id, p, b, c, &SolveOptions::default())
}

pub fn solve_entry_with(id: &str, p: &Params, b: f64, c: f64, opts: &SolveOptions) -> Result<EntryReport> {
    let e = entry(id)?;
    let phi = e.density(p)?;
    let report = solve_equation_with(&phi, b, c, opts)?;
    let mut table_check = report.classification.outcome == e.expected_outcome(p, b, c)?;
    let mut closed_form_residual = None;
    if let (Some(x), Tier::ClosedForm) = (report.root, e.tier) {
        let r = e.printed_lhs(p, x, b, c)?.abs();
        closed_form_residual = Some(r);
        table_check &= r <= CLOSED_FORM_RESIDUAL_TOL * (1.0 + c.abs());
    }
    Ok(EntryReport { entry: id.into(), params: p.clone(), report, table_check, closed_form_residual })
}

/// Compares the closed-form critical value with quadrature of `∫ φ/ζ`;
/// returns `(formula, quadrature)`.
pub fn critical_check(id: &str, p: &Params) -> Result<(ExtendedReal, ExtendedReal)> {
    let e = entry(id)?;
    let phi = e.density(p)?;
    Ok((e.critical_formula(p)?, mass_over_zeta(&phi, DEFAULT_REL_TOL)?))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroFreeReport {
    pub entry: String,
    pub function: String,
    /// Largest `|arg z|/π` sampled.
    pub max_arg: f64,
    pub points: usize,
    pub min_abs: f64,
    /// Grid points `(re, im)` where `|f|` fell below the floor.
    pub violations: Vec<(f64, f64)>,
    pub verdict: String,
}

impl ZeroFreeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sampling margin inside a claimed sector, in units of π.
pub const SECTOR_MARGIN: f64 = 0.01;
/// A grid value counts as a zero below this fraction of the ring maximum.
pub const ZERO_FLOOR: f64 = 1e-12;

pub fn default_radii() -> Vec<f64> {
    log_grid(0.05, 20.0, 20)
}

/// Evaluates the claimed zero-free function on `radii × n_angles` points
/// of the sector `|arg z| <= half_angle - margin` (or `max_arg` if
/// smaller).
pub fn zero_free_scan(id: &str, p: &Params, radii: &[f64], n_angles: usize, max_arg: Option<f64>) -> Result<ZeroFreeReport> {
    let e = entry(id)?;
    let claim = e.zero_free.ok_or_else(|| Error::NoClaim(id.into()))?;
    e.check_params(p)?;
    let limit = (claim.half_angle - SECTOR_MARGIN).min(max_arg.unwrap_or(f64::INFINITY));
    let excluded = claim.excluded.map(|f| f(p));
    let angles: Vec<f64> = if n_angles <= 1 {
        vec![0.0]
    } else {
        (0..n_angles).map(|k| PI * limit * (2.0 * k as f64 / (n_angles - 1) as f64 - 1.0)).collect()
    };
    let mut min_abs = f64::INFINITY;
    let mut violations = Vec::new();
    let mut points = 0;
    for &r in radii {
        let ring: Vec<Complex64> = angles
            .iter()
            .map(|&t| Complex64::from_polar(r, t))
            .filter(|z| excluded.map_or(true, |a| (z - a).norm() >= 0.05 * a))
            .collect();
        let values = ring.iter().map(|&z| (claim.eval)(p, z).map(|v| v.norm())).collect::<Result<Vec<f64>>>()?;
        let scale = values.iter().cloned().filter(|v| v.is_finite()).fold(0.0, f64::max);
        for (z, v) in ring.iter().zip(&values) {
            points += 1;
            if v.is_finite() {
                min_abs = min_abs.min(*v);
            }
            if !v.is_finite() || *v <= ZERO_FLOOR * scale {
                violations.push((z.re, z.im));
            }
        }
    }
    let verdict = if violations.is_empty() {
        format!("no zero found on grid ({points} points)")
    } else {
        format!("{} grid point(s) below floor", violations.len())
    };
    Ok(ZeroFreeReport {
        entry: id.into(),
        function: claim.function.into(),
        max_arg: limit,
        points,
        min_abs,
        violations,
        verdict,
    })
}
