//! Globally adaptive 21-point Gauss–Kronrod integration of complex-valued
//! integrands over a collection of finite pieces.

use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Kronrod abscissae on [0, 1]; odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_355_441,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

pub(crate) type Integrand<'a> = Box<dyn Fn(f64) -> Complex64 + 'a>;

/// A finite interval together with the integrand expressed in that
/// interval's own variable.
pub(crate) struct Piece<'a> {
    pub f: Integrand<'a>,
    pub a: f64,
    pub b: f64,
}

impl<'a> Piece<'a> {
    pub fn new(a: f64, b: f64, f: impl Fn(f64) -> Complex64 + 'a) -> Self {
        Piece { f: Box::new(f), a, b }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct RuleResult {
    pub value: Complex64,
    pub err: f64,
}

/// One application of the 21-point Kronrod rule with the QUADPACK error
/// heuristic. Non-finite samples poison the result so the caller sees them.
pub(crate) fn qk21(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> RuleResult {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = fc * WGK[10];
    let mut resg = Complex64::new(0.0, 0.0);
    let mut resabs = fc.norm() * WGK[10];
    let mut fv1 = [Complex64::new(0.0, 0.0); 10];
    let mut fv2 = [Complex64::new(0.0, 0.0); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += (f1 + f2) * WGK[j];
        resabs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            resg += (f1 + f2) * WG[j / 2];
        }
    }
    let reskh = resk * 0.5;
    let mut resasc = (fc - reskh).norm() * WGK[10];
    for j in 0..10 {
        resasc += ((fv1[j] - reskh).norm() + (fv2[j] - reskh).norm()) * WGK[j];
    }
    let hl = half.abs();
    let value = resk * half;
    resabs *= hl;
    resasc *= hl;
    let mut err = ((resk - resg) * half).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    if !value.re.is_finite() || !value.im.is_finite() {
        err = f64::INFINITY;
    }
    RuleResult { value, err }
}

struct Panel {
    piece: usize,
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct AdaptiveOutcome {
    pub value: Complex64,
    pub err: f64,
    pub panels: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Adaptive {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_panels: usize,
}

impl Adaptive {
    pub fn integrate(&self, pieces: &[Piece<'_>]) -> AdaptiveOutcome {
        let mut heap = BinaryHeap::new();
        let mut frozen_value = Complex64::new(0.0, 0.0);
        let mut frozen_err = 0.0;
        let mut total = Complex64::new(0.0, 0.0);
        let mut total_err = 0.0;
        let mut count = 0usize;
        for (i, p) in pieces.iter().enumerate() {
            if p.b <= p.a {
                continue;
            }
            let r = qk21(&*p.f, p.a, p.b);
            total += r.value;
            total_err += r.err;
            count += 1;
            heap.push(Panel { piece: i, a: p.a, b: p.b, value: r.value, err: r.err });
        }
        let cap = self.max_panels.max(2 * count);
        loop {
            let tol = self.abs_tol.max(self.rel_tol * total.norm());
            if total_err <= tol && total.norm().is_finite() {
                return AdaptiveOutcome { value: total, err: total_err, panels: count, converged: true };
            }
            if count >= cap {
                break;
            }
            let Some(panel) = heap.pop() else { break };
            let mid = 0.5 * (panel.a + panel.b);
            let scale = panel.a.abs().max(panel.b.abs()).max(f64::MIN_POSITIVE);
            if (panel.b - panel.a) <= 1e3 * f64::EPSILON * scale || mid <= panel.a || mid >= panel.b {
                frozen_value += panel.value;
                frozen_err += panel.err;
                if heap.is_empty() {
                    break;
                }
                continue;
            }
            let f = &*pieces[panel.piece].f;
            let left = qk21(f, panel.a, mid);
            let right = qk21(f, mid, panel.b);
            total += left.value + right.value - panel.value;
            total_err += left.err + right.err - panel.err;
            count += 1;
            heap.push(Panel { piece: panel.piece, a: panel.a, b: mid, value: left.value, err: left.err });
            heap.push(Panel { piece: panel.piece, a: mid, b: panel.b, value: right.value, err: right.err });
            // Periodically resum to keep round-off from the running updates out of the estimate.
            if count % 64 == 0 {
                total = frozen_value + heap.iter().map(|p| p.value).sum::<Complex64>();
                total_err = frozen_err + heap.iter().map(|p| p.err).sum::<f64>();
            }
        }
        let value = frozen_value + heap.iter().map(|p| p.value).sum::<Complex64>();
        let err = frozen_err + heap.iter().map(|p| p.err).sum::<f64>();
        let tol = self.abs_tol.max(self.rel_tol * value.norm());
        AdaptiveOutcome { value, err, panels: count, converged: err <= tol && value.norm().is_finite() }
    }
}
