use super::helpers::compute_helpers;
use super::RadialParams;
use crate::error::ensure_domain;
use crate::numerics::{hyp2f1_unit_a, LogScaled};
use crate::{Error, PrecisionConfig, Result};

/// `₂F₁(1, n+n'+1; n+L+2; ζ/(ζ+ζ'))`, the electron-1 channel at `L`.
pub fn primary_channel(p: &RadialParams, l: u32, cfg: &PrecisionConfig) -> Result<LogScaled> {
    hyp2f1_unit_a(p.b(), p.n + l as f64 + 2.0, p.z(), cfg)
}

/// `₂F₁(1, n+n'+1; n'+L+2; ζ'/(ζ+ζ'))`, the electron-2 channel at `L`.
pub fn partner_channel(p: &RadialParams, l: u32, cfg: &PrecisionConfig) -> Result<LogScaled> {
    primary_channel(&p.swap(), l, cfg)
}

/// Assemble `R^L` from the two channel values.
pub(crate) fn combine_channels(
    p: &RadialParams,
    l: u32,
    prefactor: LogScaled,
    primary: LogScaled,
    partner: LogScaled,
) -> LogScaled {
    let lf = l as f64;
    prefactor * (primary.scale(1.0 / (p.n + lf + 1.0)) + partner.scale(1.0 / (p.nprime + lf + 1.0)))
}

/// `R^L` from the pole-free two-series representation.
///
/// This is the reference every faster route is tested against and the
/// fallback the ladder uses whenever a step is rejected.
pub fn radial_direct_series(p: &RadialParams, l: u32, cfg: &PrecisionConfig) -> Result<LogScaled> {
    p.validate()?;
    let pre = p.prefactor(cfg)?;
    let f1 = primary_channel(p, l, cfg)?;
    let f2 = partner_channel(p, l, cfg)?;
    Ok(combine_channels(p, l, pre, f1, f2))
}

/// Which single-series expression [`radial_closed_form`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// Electron-2 channel at `c = n'+L+2`.
    Upper,
    /// Electron-1 channel at `c = n+L+2`.
    UpperSwapped,
    /// Electron-2 channel at `c = n'-L+1`.
    Lower,
    /// Electron-1 channel at `c = n-L+1`.
    LowerSwapped,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 4] =
        [ClosedForm::Upper, ClosedForm::UpperSwapped, ClosedForm::Lower, ClosedForm::LowerSwapped];

    /// Numeric label used on the command line (25 through 28).
    pub fn label(self) -> u32 {
        match self {
            ClosedForm::Upper => 25,
            ClosedForm::UpperSwapped => 26,
            ClosedForm::Lower => 27,
            ClosedForm::LowerSwapped => 28,
        }
    }

    pub fn from_label(label: u32) -> Option<ClosedForm> {
        ClosedForm::ALL.into_iter().find(|v| v.label() == label)
    }
}

/// `R^L` from one hypergeometric series plus the finite helper terms.
///
/// Fails with a pole error when `n' - L` (or `n - L` for the swapped forms)
/// is an integer, and with an instability error when the two terms cancel
/// by more than the configured budget allows.
pub fn radial_closed_form(p: &RadialParams, l: u32, variant: ClosedForm, cfg: &PrecisionConfig) -> Result<LogScaled> {
    p.validate()?;
    match variant {
        ClosedForm::Upper => closed_upper(p, l, cfg),
        ClosedForm::UpperSwapped => closed_upper(&p.swap(), l, cfg),
        ClosedForm::Lower => closed_lower(p, l, cfg),
        ClosedForm::LowerSwapped => closed_lower(&p.swap(), l, cfg),
    }
}

/// Relative accuracy assumed for each ingredient of a closed form (gamma
/// ratios, powers and one series), a few units of rounding each.
const INGREDIENT_EPS: f64 = 32.0 * f64::EPSILON;

/// `plus - minus`, refused when `scale` (the sum of magnitudes of every
/// term that entered either side) exceeds the result by too much.
pub(crate) fn guarded(plus: LogScaled, minus: LogScaled, scale: LogScaled, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let r = plus - minus;
    if r.is_zero() {
        return Err(Error::Instability { condition: f64::INFINITY });
    }
    let condition = scale.ratio(r.abs());
    if condition * INGREDIENT_EPS > cfg.cancellation_rel_tol {
        return Err(Error::Instability { condition });
    }
    Ok(r)
}

fn closed_upper(p: &RadialParams, l: u32, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let h = compute_helpers(p, l, cfg)?;
    let f = partner_channel(p, l, cfg)?;
    let pre = p.prefactor(cfg)?.scale(1.0 / (p.n + l as f64 + 1.0));
    let scale = (h.e * f).abs() * ((h.h1 - LogScaled::ONE).abs() + LogScaled::ONE) + pre.abs() * (h.g.abs() + h.l1.abs());
    guarded(h.e * f * h.h1, h.m, scale, cfg)
}

fn closed_lower(p: &RadialParams, l: u32, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let lf = l as f64;
    let c = p.nprime - lf + 1.0;
    ensure_domain!(c > 0.0, "lower closed form needs n' - L + 1 > 0, got {c}");
    let h = compute_helpers(p, l, cfg)?;
    let (h2, l2) = match (h.h2, h.l2) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Pole { what: "(n-L)_{2L+1}", at: p.n - lf }),
    };
    let f = hyp2f1_unit_a(p.b(), c, p.zp(), cfg)?;
    let pre = p.prefactor(cfg)?.scale(1.0 / (p.n + lf + 1.0));
    let mix = LogScaled::from_f64((p.nprime + lf + 1.0) / (p.n + lf + 1.0) * h.f1);
    let scale = (h.e * f).abs() * (mix.abs() + (h2 - mix).abs()) + pre.abs() * (h.g.abs() + l2.abs());
    guarded(h.e * f * h2, pre * (h.g - l2), scale, cfg)
}
