use super::helpers::{helpers_with_l1, L1Context, l1_step, Axis};
use super::seeds::{channel_seed0, channel_seed1};
use super::series::{combine_channels, guarded};
use super::{radial_direct_series, RadialParams};
use crate::numerics::{hyp2f1_unit_a, LogScaled};
use crate::{Error, PrecisionConfig, Result};

/// The family `F_L = ₂F₁(1, n+n'+1; n+L+2; z)` for `L = 0, 1, 2, …`.
///
/// Both hypergeometric terms of `R^L` are channels: the electron-1 term is
/// `Channel::primary(p)`, the electron-2 term (`𝕽^L`) is `Channel::partner(p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Channel {
    pub n: f64,
    pub nprime: f64,
    pub z: f64,
    pub zp: f64,
}

impl Channel {
    pub fn primary(p: &RadialParams) -> Channel {
        Channel { n: p.n, nprime: p.nprime, z: p.z(), zp: p.zp() }
    }

    pub fn partner(p: &RadialParams) -> Channel {
        Channel::primary(&p.swap())
    }

    /// Direct series value at `L`.
    pub fn series(&self, l: u32, cfg: &PrecisionConfig) -> Result<LogScaled> {
        hyp2f1_unit_a(self.n + self.nprime + 1.0, self.n + l as f64 + 2.0, self.z, cfg)
    }

    /// `(α, β)` with `F_{L+2} = α F_L + β F_{L+1}`, or `None` at the pole `n' = L+2`.
    fn forward_coefs(&self, l: u32, cfg: &PrecisionConfig) -> Option<(f64, f64)> {
        let lf = l as f64;
        let pole = lf + 2.0 - self.nprime;
        if cfg.near_integer(pole) && pole.round() == 0.0 {
            return None;
        }
        let c = (self.n + lf + 3.0) / (self.z * (self.n + lf + 2.0) * pole);
        let alpha = c * self.zp * (self.n + lf + 2.0);
        let beta = c * (self.z * (lf + 1.0 - self.nprime) - self.zp * (self.n + lf + 2.0));
        Some((alpha, beta))
    }

    /// `(γ, δ)` with `F_L = γ F_{L+2} + δ F_{L+1}`; never singular.
    fn backward_coefs(&self, l: u32) -> (f64, f64) {
        let lf = l as f64;
        let d = self.zp * (self.n + lf + 2.0);
        let gamma = self.z * (self.n + lf + 2.0) * (lf + 2.0 - self.nprime) / (self.n + lf + 3.0) / d;
        let delta = -(self.z * (lf + 1.0 - self.nprime) - d) / d;
        (gamma, delta)
    }
}

/// How a table entry was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Incomplete-beta seed or its contiguous step.
    Seed,
    /// Upward three-term recursion.
    Forward,
    /// Downward recursion from two series anchors at the top.
    Backward,
    /// Direct hypergeometric series.
    Series,
}

/// Work done while filling a table.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LadderReport {
    pub series_calls: usize,
    pub forward_steps: usize,
    pub backward_steps: usize,
    /// `(L, reason)` for every entry that could not use the recursion or helpers.
    pub fallbacks: Vec<(u32, Error)>,
}

/// One channel evaluated for `L = 0..=l_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelTable {
    pub values: Vec<LogScaled>,
    pub sources: Vec<Source>,
    pub report: LadderReport,
}

/// Rounding-error growth of a recursion, tracked through its two normalized
/// homogeneous solutions.
struct Drift {
    h: [[f64; 2]; 2],
    steps: usize,
}

impl Drift {
    fn new() -> Self {
        Drift { h: [[1.0, 0.0], [0.0, 1.0]], steps: 0 }
    }

    /// Advance by `new = a·older + b·newer` with `older/new` and `newer/new` magnitude ratios.
    fn push(&mut self, a: f64, b: f64, r_older: f64, r_newer: f64) -> f64 {
        self.steps += 1;
        let mut est = 0.0;
        for h in self.h.iter_mut() {
            let next = a * h[0] * r_older + b * h[1] * r_newer;
            *h = [h[1], next];
            est += next.abs();
        }
        2.0 * f64::EPSILON * (self.steps + 3) as f64 * est
    }
}

fn series_entry(ch: &Channel, l: u32, cfg: &PrecisionConfig, report: &mut LadderReport) -> Result<LogScaled> {
    report.series_calls += 1;
    ch.series(l, cfg)
}

fn usable(v: LogScaled) -> bool {
    v.sign() > 0 && v.log_mag().is_finite()
}

/// Fill one channel by upward recursion from the seeds, re-anchoring at the
/// top and recursing downward once the upward error estimate exceeds
/// `cfg.ladder_rel_tol`; anything still unresolved comes from the series.
pub fn channel_ladder(ch: &Channel, l_max: u32, cfg: &PrecisionConfig) -> Result<ChannelTable> {
    let size = l_max as usize + 1;
    let mut report = LadderReport::default();
    let mut values: Vec<Option<LogScaled>> = vec![None; size];
    let mut sources = vec![Source::Series; size];

    match channel_seed0(ch, cfg) {
        Ok(v) => {
            values[0] = Some(v);
            sources[0] = Source::Seed;
        }
        Err(e) => {
            report.fallbacks.push((0, e));
            values[0] = Some(series_entry(ch, 0, cfg, &mut report)?);
        }
    }
    if l_max >= 1 {
        match channel_seed1(ch, values[0].unwrap(), cfg) {
            Ok(v) => {
                values[1] = Some(v);
                sources[1] = Source::Seed;
            }
            Err(e) => {
                report.fallbacks.push((1, e));
                values[1] = Some(series_entry(ch, 1, cfg, &mut report)?);
            }
        }
    }

    let mut switch = size;
    let mut drift = Drift::new();
    for l in 0..l_max.saturating_sub(1) {
        let i = l as usize;
        let Some((a, b)) = ch.forward_coefs(l, cfg) else {
            report.fallbacks.push((l + 2, Error::Pole { what: "n' - L - 2", at: ch.nprime - l as f64 - 2.0 }));
            switch = i + 2;
            break;
        };
        let (f0, f1) = (values[i].unwrap(), values[i + 1].unwrap());
        let next = f0.scale(a) + f1.scale(b);
        if !usable(next) {
            switch = i + 2;
            break;
        }
        let est = drift.push(a, b, f0.ratio(next), f1.ratio(next));
        if est > cfg.ladder_rel_tol {
            switch = i + 2;
            break;
        }
        report.forward_steps += 1;
        values[i + 2] = Some(next);
        sources[i + 2] = Source::Forward;
    }

    if switch < size {
        let top = l_max as usize;
        values[top] = Some(series_entry(ch, l_max, cfg, &mut report)?);
        sources[top] = Source::Series;
        if top > switch {
            values[top - 1] = Some(series_entry(ch, l_max - 1, cfg, &mut report)?);
            sources[top - 1] = Source::Series;
            let mut drift = Drift::new();
            let (mut hi, mut mid) = (values[top].unwrap(), values[top - 1].unwrap());
            for i in (switch..top - 1).rev() {
                let (g, d) = ch.backward_coefs(i as u32);
                let v = hi.scale(g) + mid.scale(d);
                if !usable(v) {
                    break;
                }
                let est = drift.push(g, d, hi.ratio(v), mid.ratio(v));
                report.backward_steps += 1;
                if est <= cfg.ladder_rel_tol {
                    values[i] = Some(v);
                    sources[i] = Source::Backward;
                }
                hi = mid;
                mid = v;
            }
        }
    }

    let mut out = Vec::with_capacity(size);
    for (l, v) in values.into_iter().enumerate() {
        out.push(match v {
            Some(v) => v,
            None => series_entry(ch, l as u32, cfg, &mut report)?,
        });
    }
    Ok(ChannelTable { values: out, sources, report })
}

/// How `R^L` is rebuilt from the channel values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RecoveryMode {
    /// Ladder both channels and add them; no cancellation anywhere.
    #[default]
    TwoChannel,
    /// Ladder `𝕽^L` only and unwrap it with `e`, `h` and `m`, carrying `l¹`
    /// upward by its unit step. Entries whose unwrapping cancels are taken
    /// from the direct series.
    Helpers,
}

/// `R^L` and `𝕽^L` for `L = 0..=l_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderTable {
    pub l_max: u32,
    /// `𝕽^L = ₂F₁(1, n+n'+1; n'+L+2; ζ'/(ζ+ζ'))`.
    pub frak_r: Vec<LogScaled>,
    /// `₂F₁(1, n+n'+1; n+L+2; ζ/(ζ+ζ'))`; empty in helper mode.
    pub primary: Vec<LogScaled>,
    pub r: Vec<LogScaled>,
    pub frak_sources: Vec<Source>,
    pub primary_sources: Vec<Source>,
    pub report: LadderReport,
}

/// [`ladder_with`] in the default two-channel mode.
pub fn ladder(p: &RadialParams, l_max: u32, cfg: &PrecisionConfig) -> Result<LadderTable> {
    ladder_with(p, l_max, RecoveryMode::TwoChannel, cfg)
}

/// Every `R^L` up to `l_max` from two hypergeometric-free seeds per channel.
pub fn ladder_with(p: &RadialParams, l_max: u32, mode: RecoveryMode, cfg: &PrecisionConfig) -> Result<LadderTable> {
    p.validate()?;
    let partner = channel_ladder(&Channel::partner(p), l_max, cfg)?;
    let mut report = partner.report.clone();
    let pre = p.prefactor(cfg)?;
    let mut r = Vec::with_capacity(l_max as usize + 1);
    let mut primary_values = Vec::new();
    let mut primary_sources = Vec::new();

    match mode {
        RecoveryMode::TwoChannel => {
            let primary = channel_ladder(&Channel::primary(p), l_max, cfg)?;
            report.series_calls += primary.report.series_calls;
            report.forward_steps += primary.report.forward_steps;
            report.backward_steps += primary.report.backward_steps;
            report.fallbacks.extend(primary.report.fallbacks.iter().cloned());
            for l in 0..=l_max {
                let i = l as usize;
                let v = combine_channels(p, l, pre, primary.values[i], partner.values[i]);
                r.push(checked_positive(p, l, v, cfg, &mut report)?);
            }
            primary_values = primary.values;
            primary_sources = primary.sources;
        }
        RecoveryMode::Helpers => {
            let mut ctx = L1Context::new(p, 0, cfg).ok();
            for l in 0..=l_max {
                let i = l as usize;
                let attempt = match ctx.as_ref() {
                    Some(c) => unwrap_frak(p, l, partner.values[i], c, cfg),
                    None => Err(Error::Pole { what: "(n'-L+1)_j", at: p.nprime - l as f64 + 1.0 }),
                };
                let v = match attempt {
                    Ok(v) if usable(v) => v,
                    Ok(v) => {
                        report.fallbacks.push((l, Error::Instability { condition: v.to_f64() }));
                        report.series_calls += 2;
                        radial_direct_series(p, l, cfg)?
                    }
                    Err(e) => {
                        report.fallbacks.push((l, e));
                        report.series_calls += 2;
                        radial_direct_series(p, l, cfg)?
                    }
                };
                r.push(v);
                if let Some(c) = ctx.as_mut() {
                    l1_step(c, Axis::L);
                }
            }
        }
    }

    Ok(LadderTable {
        l_max,
        frak_r: partner.values,
        primary: primary_values,
        r,
        frak_sources: partner.sources,
        primary_sources,
        report,
    })
}

fn checked_positive(
    p: &RadialParams,
    l: u32,
    v: LogScaled,
    cfg: &PrecisionConfig,
    report: &mut LadderReport,
) -> Result<LogScaled> {
    if usable(v) {
        return Ok(v);
    }
    report.fallbacks.push((l, Error::Instability { condition: f64::INFINITY }));
    report.series_calls += 2;
    radial_direct_series(p, l, cfg)
}

fn unwrap_frak(p: &RadialParams, l: u32, frak: LogScaled, ctx: &L1Context, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let h = helpers_with_l1(p, l, ctx.value(p, l), cfg)?;
    let pre = p.prefactor(cfg)?.scale(1.0 / (p.n + l as f64 + 1.0));
    let scale = (h.e * frak).abs() * ((h.h1 - LogScaled::ONE).abs() + LogScaled::ONE) + pre.abs() * (h.g.abs() + h.l1.abs());
    guarded(h.e * h.h1 * frak, h.m, scale, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::partner_channel;

    const TABLE: [f64; 11] = [
        29.214103839897745,
        25.622699228991727,
        22.679215280002873,
        20.243567625184863,
        18.209840992660358,
        16.497172446641568,
        15.043246176657511,
        13.799606631510756,
        12.728249973986842,
        11.799122653005792,
        10.988269542104628,
    ];

    #[test]
    fn reproduces_table_channel() {
        let cfg = PrecisionConfig::default();
        let p = RadialParams::new(99.5, 99.51, 1.1, 1.2).unwrap();
        let t = ladder(&p, 10, &cfg).unwrap();
        for (l, want) in TABLE.iter().enumerate() {
            let got = t.frak_r[l].to_f64();
            assert!((got / want - 1.0).abs() < 5e-13, "L={l}: {got} vs {want}");
        }
    }

    #[test]
    fn l_max_one_is_seeds() {
        let cfg = PrecisionConfig::default();
        let p = RadialParams::new(3.3, 4.4, 0.9, 1.7).unwrap();
        let t = ladder(&p, 1, &cfg).unwrap();
        assert_eq!(t.frak_r.len(), 2);
        assert_eq!(t.frak_sources, vec![Source::Seed, Source::Seed]);
        assert_eq!(t.report.forward_steps, 0);
    }

    #[test]
    fn agrees_with_series_to_25() {
        let cfg = PrecisionConfig::default();
        let p = RadialParams::new(3.3, 4.4, 0.9, 1.7).unwrap();
        let t = ladder(&p, 25, &cfg).unwrap();
        for l in 0..=25u32 {
            let want = radial_direct_series(&p, l, &cfg).unwrap();
            assert!(t.r[l as usize].rel_diff(want) < 1e-12, "L={l}");
            let f = partner_channel(&p, l, &cfg).unwrap();
            assert!(t.frak_r[l as usize].rel_diff(f) < 1e-12, "L={l}");
        }
    }

    #[test]
    fn helper_mode_agrees_or_falls_back() {
        let cfg = PrecisionConfig::default();
        let p = RadialParams::new(3.3, 4.4, 0.9, 1.7).unwrap();
        let t = ladder_with(&p, 12, RecoveryMode::Helpers, &cfg).unwrap();
        for l in 0..=12u32 {
            let want = radial_direct_series(&p, l, &cfg).unwrap();
            assert!(t.r[l as usize].rel_diff(want) < 1e-10, "L={l}");
        }
    }

    #[test]
    fn integer_parameters_hit_pole_and_recover() {
        let cfg = PrecisionConfig::default();
        let p = RadialParams::new(4.0, 6.0, 1.3, 0.7).unwrap();
        let t = ladder(&p, 12, &cfg).unwrap();
        for l in 0..=12u32 {
            let want = radial_direct_series(&p, l, &cfg).unwrap();
            assert!(t.r[l as usize].rel_diff(want) < 1e-12, "L={l}");
        }
    }
}
