//! Adaptive Gauss–Kronrod quadrature over finite panels and exponential tails.
#![allow(clippy::excessive_precision)]
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Error, Result};

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
    0.123_491_976_262_065_851_077_208_703_049_876,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
// Gauss weights for XGK[1], XGK[3], ..., XGK[9]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Tolerances for the oracle integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSpec {
    pub rel_tol: f64,
    /// Absolute error accepted regardless of the value (guards zero integrals).
    pub abs_floor: f64,
    pub max_subdivisions: usize,
    /// Split inner integrals at `r₁ = r₂`; every `r<`/`r>` kernel needs it.
    pub split_at_diagonal: bool,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec { rel_tol: 1e-11, abs_floor: 1e-300, max_subdivisions: 4000, split_at_diagonal: true }
    }
}

impl QuadSpec {
    pub fn from_config(cfg: &crate::PrecisionConfig) -> Self {
        QuadSpec { rel_tol: cfg.quad_rel_tol, max_subdivisions: cfg.quad_max_subdivisions, ..QuadSpec::default() }
    }
}

/// An integral value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// One piece of the integration range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Panel {
    Finite(f64, f64),
    /// `[start, ∞)`, integrated in `u = e^{-rate (r - start)}`.
    Tail { start: f64, rate: f64 },
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    map: Option<(f64, f64)>,
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod(f: &mut dyn FnMut(f64) -> f64, map: Option<(f64, f64)>, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut eval = |x: f64| -> f64 {
        match map {
            None => f(x),
            Some((start, rate)) => {
                if x <= 0.0 {
                    0.0
                } else {
                    f(start - x.ln() / rate) / (rate * x)
                }
            }
        }
    };
    let fc = eval(c);
    let mut k = WGK[10] * fc;
    let mut g = 0.0;
    for i in 0..10 {
        let dx = h * XGK[i];
        let s = eval(c - dx) + eval(c + dx);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    let k = k * h;
    let g = g * h;
    let err = (k - g).abs();
    (k, if err.is_finite() { err } else { f64::INFINITY })
}

/// Globally adaptive integration over a union of panels.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below `max(rel_tol·|value|, abs_floor)`. Running out of
/// subdivisions returns [`Error::Tolerance`] carrying the best value.
pub fn integrate(f: &mut dyn FnMut(f64) -> f64, panels: &[Panel], spec: &QuadSpec) -> Result<Estimate> {
    let mut heap = BinaryHeap::new();
    for panel in panels {
        let (map, a, b) = match *panel {
            Panel::Finite(a, b) => (None, a, b),
            Panel::Tail { start, rate } => (Some((start, rate)), 0.0, 1.0),
        };
        if a == b {
            continue;
        }
        let (value, error) = kronrod(f, map, a, b);
        heap.push(Piece { map, a, b, value, error });
    }
    let mut subdivisions = 0;
    loop {
        let value: f64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        if !value.is_finite() {
            return Err(Error::NotFinite);
        }
        if error <= (spec.rel_tol * value.abs()).max(spec.abs_floor) {
            return Ok(Estimate { value, error });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::Tolerance { value, error });
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            return Err(Error::Tolerance { value, error });
        }
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (v, e) = kronrod(f, worst.map, a, b);
            heap.push(Piece { map: worst.map, a, b, value: v, error: e });
        }
        subdivisions += 1;
    }
}

/// Breakpoints `[lo, hi]` plus a tail decaying at `rate`, around the given
/// bump centres and widths.
pub fn panels_around(lo: f64, hi: Option<f64>, bumps: &[(f64, f64)], rate: f64) -> Vec<Panel> {
    let mut pts = vec![lo];
    for &(centre, width) in bumps {
        for k in [-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0] {
            pts.push(centre + k * width);
        }
    }
    let top = hi.unwrap_or(f64::INFINITY);
    pts.retain(|x| x.is_finite() && *x >= lo && *x <= top);
    if let Some(h) = hi {
        pts.push(h);
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs().max(1e-300));
    let mut out: Vec<Panel> = pts.windows(2).map(|w| Panel::Finite(w[0], w[1])).collect();
    if hi.is_none() {
        out.push(Panel::Tail { start: *pts.last().unwrap(), rate });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_exact_for_polynomials() {
        let wk: f64 = WGK[..10].iter().sum::<f64>() * 2.0 + WGK[10];
        let wg: f64 = WG.iter().sum::<f64>() * 2.0;
        assert!((wk - 2.0).abs() < 1e-15 && (wg - 2.0).abs() < 1e-15);
        for deg in [2, 10, 18, 30] {
            let mut f = |x: f64| x.powi(deg);
            let (k, _) = kronrod(&mut f, None, -1.0, 1.0);
            assert!((k - 2.0 / (deg + 1) as f64).abs() < 1e-15, "K21 degree {deg}");
        }
        let mut f = |x: f64| x.powi(18);
        let (k, e) = kronrod(&mut f, None, -1.0, 1.0);
        assert!(e < 1e-15 && (k - 2.0 / 19.0).abs() < 1e-15);
    }

    #[test]
    fn gamma_integral_through_tail() {
        let spec = QuadSpec { rel_tol: 1e-13, ..QuadSpec::default() };
        let mut f = |r: f64| r.powf(4.5) * (-2.0 * r).exp();
        let panels = panels_around(0.0, None, &[(2.25, 1.1)], 2.0);
        let est = integrate(&mut f, &panels, &spec).unwrap();
        let want = libm::tgamma(5.5) / 2f64.powf(5.5);
        assert!((est.value / want - 1.0).abs() < 1e-13, "{est:?}");
    }

    #[test]
    fn endpoint_singularity() {
        let spec = QuadSpec { rel_tol: 1e-10, ..QuadSpec::default() };
        let mut f = |r: f64| r.powf(-0.5);
        let est = integrate(&mut f, &[Panel::Finite(0.0, 1.0)], &spec).unwrap();
        assert!((est.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let spec = QuadSpec { rel_tol: 1e-15, max_subdivisions: 3, ..QuadSpec::default() };
        let mut f = |r: f64| r.powf(-0.9);
        assert!(matches!(integrate(&mut f, &[Panel::Finite(0.0, 1.0)], &spec), Err(Error::Tolerance { .. })));
    }
}
