use super::RadialParams;
use crate::numerics::{gamma_signed, pochhammer, LogScaled, ScaledSum};
use crate::{Error, PrecisionConfig, Result};

/// Finite coefficient functions that connect the single-series closed forms
/// to `R^L`.
///
/// `h2` and `l2` are `None` when `(n-L)_{2L+1}` vanishes exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelperSet {
    pub f1: f64,
    pub f2: f64,
    pub g: LogScaled,
    pub h1: LogScaled,
    pub h2: Option<LogScaled>,
    pub l1: LogScaled,
    pub l2: Option<LogScaled>,
    pub e: LogScaled,
    pub m: LogScaled,
}

fn pole_check(x: f64, what: &'static str, cfg: &PrecisionConfig) -> Result<()> {
    if cfg.near_integer(x) && x.round() <= 0.0 {
        return Err(Error::Pole { what, at: x });
    }
    Ok(())
}

/// Evaluate every helper at one `L`.
pub fn compute_helpers(p: &RadialParams, l: u32, cfg: &PrecisionConfig) -> Result<HelperSet> {
    p.validate()?;
    let l1 = l1_direct(p, l, cfg)?;
    helpers_with_l1(p, l, l1, cfg)
}

pub(crate) fn helpers_with_l1(p: &RadialParams, l: u32, l1: LogScaled, cfg: &PrecisionConfig) -> Result<HelperSet> {
    let lf = l as f64;
    let (n, np, zeta, zetap) = (p.n, p.nprime, p.zeta, p.zetaprime);
    let k = 2 * l + 1;
    if cfg.near_integer(np - lf) {
        return Err(Error::Pole { what: "n' - L", at: np - lf });
    }

    let f1 = (n + lf + 1.0) / (lf - np);
    let ratio_pow = LogScaled::powf(zetap / zeta, k as f64);
    let f2 = f1 * -(zetap / zeta).powi(k as i32) * (zeta + zetap) / zetap;

    let pre = p.prefactor(cfg)?;
    let g = -(gamma_signed(n + lf + 2.0, cfg)? * gamma_signed(np - lf, cfg)?)
        * LogScaled::powf(zeta, -n - lf - 1.0)
        * LogScaled::powf(zetap, lf - np)
        / pre;

    let up = pochhammer(n - lf, k);
    let down = pochhammer(-np - lf - 1.0, k);
    if down.is_zero() {
        return Err(Error::Pole { what: "(-n'-L-1)_{2L+1}", at: -np - lf - 1.0 });
    }
    let mix = (np + lf + 1.0) / (n + lf + 1.0);
    let h1 = (up / down * -ratio_pow).scale(mix * f1) + LogScaled::ONE;
    let h2 = if up.is_zero() {
        None
    } else {
        Some(LogScaled::from_f64(mix * f1) + down / up * -ratio_pow.recip())
    };

    let l2 = if up.is_zero() { None } else { Some(l2_direct(p, l)) };

    let e = pre.scale(1.0 / (np + lf + 1.0));
    let m = pre.scale(1.0 / (n + lf + 1.0)) * (g + l1);
    Ok(HelperSet { f1, f2, g, h1, h2, l1, l2, e, m })
}

/// `l¹` through its finite sum, rewritten with unit-shifted Pochhammer ratios.
pub(crate) fn l1_direct(p: &RadialParams, l: u32, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let ctx = L1Context::new(p, l, cfg)?;
    Ok(ctx.value(p, l))
}

fn l2_direct(p: &RadialParams, l: u32) -> LogScaled {
    let lf = l as f64;
    let y = -p.zeta / p.zetaprime;
    let mut sum = ScaledSum::new();
    let mut term = LogScaled::ONE;
    for k in 1..=(2 * l + 1) {
        let kf = k as f64;
        term = term.scale((-p.nprime - lf - 2.0 + kf) / (p.n - lf - 1.0 + kf));
        if k > 1 {
            term = term.scale(y);
        }
        sum.add(term);
    }
    let pre = (p.n + lf + 1.0) / (p.nprime + lf + 1.0) * (p.zeta + p.zetaprime) / p.zetaprime;
    sum.value().scale(pre)
}

/// Direction of a unit step in [`l1_step`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// `n → n + 1`
    N,
    /// `n' → n' + 1`
    NPrime,
    /// `L → L + 1`
    L,
}

/// Running state for updating `l¹` without re-summing.
///
/// Holds `S = Σ_{j=0}^{M} (a)_j / (c)_j y^j` and its last term, with
/// `a = -n-L`, `c = n'-L+1`, `y = -ζ'/ζ`, `M = 2L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L1Context {
    a: f64,
    c: f64,
    y: f64,
    m: f64,
    sum: LogScaled,
    last: LogScaled,
}

impl L1Context {
    pub fn new(p: &RadialParams, l: u32, cfg: &PrecisionConfig) -> Result<Self> {
        let lf = l as f64;
        let a = -p.n - lf;
        let c = p.nprime - lf + 1.0;
        let y = -p.zetaprime / p.zeta;
        for j in 0..2 * l {
            pole_check(c + j as f64, "(n'-L+1)_j", cfg)?;
        }
        let mut sum = ScaledSum::new();
        let mut term = LogScaled::ONE;
        sum.add(term);
        for j in 0..2 * l {
            let jf = j as f64;
            term = term.scale((a + jf) / (c + jf) * y);
            sum.add(term);
        }
        Ok(L1Context { a, c, y, m: 2.0 * lf, sum: sum.value(), last: term })
    }

    /// `l¹` for the parameters this context currently describes.
    pub fn value(&self, p: &RadialParams, l: u32) -> LogScaled {
        let lf = l as f64;
        self.sum.scale((p.n + lf + 1.0) / ((p.nprime - lf) * p.z()))
    }

    fn step_a(&mut self) {
        let (a, c, y, m) = (self.a, self.c, self.y, self.m);
        let t = self.last.scale((a - 1.0) / (a - 1.0 + m));
        self.sum = (self.sum.scale((a - 1.0) * (1.0 - y)) - LogScaled::from_f64(c - 1.0) + t.scale(y * (a - 1.0 + m)))
            .scale(1.0 / (a - c));
        self.last = t;
        self.a = a - 1.0;
    }

    fn step_c(&mut self) {
        let (a, c, y, m) = (self.a, self.c, self.y, self.m);
        let t = self.last.scale(c / (c + m));
        self.sum = (self.sum.scale(c * (1.0 - y)) - LogScaled::from_f64(c) + t.scale(y * (a + m)))
            .scale(1.0 / (y * (a - c)));
        self.last = t;
        self.c = c + 1.0;
    }

    fn step_l(&mut self) {
        self.step_a();
        let (a, c, y, m) = (self.a, self.c, self.y, self.m);
        let w = (self.sum.scale(y * a - c + 1.0) + LogScaled::from_f64(c - 1.0) - self.last.scale(y * (a + m)))
            .scale(1.0 / (1.0 - y));
        let mut sum = self.sum + w.scale(1.0 / (c - 1.0));
        let t3 = self.last.scale((c - 1.0 + m) / (c - 1.0));
        let t4 = t3.scale((a + m) / (c - 1.0 + m) * y);
        let t5 = t4.scale((a + m + 1.0) / (c + m) * y);
        sum = sum + t4 + t5;
        self.sum = sum;
        self.last = t5;
        self.c = c - 1.0;
        self.m = m + 2.0;
    }
}

/// Advance `ctx` by one unit along `axis`.
///
/// The caller keeps its own parameters in step; `value` then returns the
/// helper at the new point.
pub fn l1_step(ctx: &mut L1Context, axis: Axis) {
    match axis {
        Axis::N => ctx.step_a(),
        Axis::NPrime => ctx.step_c(),
        Axis::L => ctx.step_l(),
    }
}
