use super::ladder::Channel;
use super::RadialParams;
use crate::numerics::{hyp2f1_unit_a, inc_beta_scaled, LogScaled};
use crate::{Error, PrecisionConfig, Result};

/// `L = 0` value of a channel through the incomplete beta function.
///
/// `₂F₁(1, n+n'+1; n+2; z) = (n+1) z^{-n-1} (1-z)^{-n'} B_z(n+1, n')`; the
/// incomplete beta is evaluated on whichever side of its symmetry point
/// converges, so no difference of complete and incomplete beta is formed.
pub(crate) fn channel_seed0(ch: &Channel, cfg: &PrecisionConfig) -> Result<LogScaled> {
    inc_beta_scaled(ch.n + 1.0, ch.nprime, ch.z, cfg)
}

/// `L = 1` value of a channel from its `L = 0` value by one contiguous step.
///
/// Refuses with a pole error when `n'` is too close to 1 and with an
/// instability error when the step cancels, so the caller can evaluate the
/// series instead.
pub(crate) fn channel_seed1(ch: &Channel, f0: LogScaled, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let d = ch.nprime - 1.0;
    if d.abs() <= cfg.integer_detect_eps {
        return Err(Error::Pole { what: "n' - 1", at: d });
    }
    let lead = f0.scale(ch.zp);
    let diff = lead - LogScaled::ONE;
    let scale = lead.abs() + LogScaled::ONE;
    if diff.is_zero() {
        return Err(Error::Instability { condition: f64::INFINITY });
    }
    let condition = scale.ratio(diff.abs());
    if condition * f64::EPSILON > 0.1 * cfg.ladder_rel_tol {
        return Err(Error::Instability { condition });
    }
    Ok(diff.scale((ch.n + 2.0) / (d * ch.z)))
}

/// `𝕽⁰`, the electron-2 channel `₂F₁(1, n+n'+1; n'+2; ζ'/(ζ+ζ'))`, without a
/// hypergeometric series.
pub fn seed_l0(p: &RadialParams, cfg: &PrecisionConfig) -> Result<LogScaled> {
    p.validate()?;
    channel_seed0(&Channel::partner(p), cfg)
}

/// `𝕽¹` from the `L = 0` incomplete-beta value by one contiguous step.
///
/// Errors when the step is unusable; [`seed_l1_or_series`] falls back instead.
pub fn seed_l1(p: &RadialParams, cfg: &PrecisionConfig) -> Result<LogScaled> {
    p.validate()?;
    let ch = Channel::partner(p);
    let f0 = channel_seed0(&ch, cfg)?;
    channel_seed1(&ch, f0, cfg)
}

/// [`seed_l1`], or the direct series when the step is refused.
pub fn seed_l1_or_series(p: &RadialParams, cfg: &PrecisionConfig) -> Result<LogScaled> {
    match seed_l1(p, cfg) {
        Err(Error::Pole { .. }) | Err(Error::Instability { .. }) => {
            hyp2f1_unit_a(p.b(), p.nprime + 3.0, p.zp(), cfg)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::partner_channel;

    #[test]
    fn seeds_match_series() {
        let cfg = PrecisionConfig::default();
        for &(n, np, z, zp) in &[(3.3, 4.4, 0.9, 1.7), (99.5, 99.51, 1.1, 1.2), (1.2, 60.5, 4.0, 0.3), (7.0, 2.0, 1.0, 1.0)] {
            let p = RadialParams::new(n, np, z, zp).unwrap();
            let s0 = seed_l0(&p, &cfg).unwrap();
            assert!(s0.rel_diff(partner_channel(&p, 0, &cfg).unwrap()) < 1e-12, "{p:?}");
            let s1 = seed_l1_or_series(&p, &cfg).unwrap();
            assert!(s1.rel_diff(partner_channel(&p, 1, &cfg).unwrap()) < 1e-12, "{p:?}");
        }
    }

    #[test]
    fn table_row_zero() {
        let cfg = PrecisionConfig::default();
        let p = RadialParams::new(99.5, 99.51, 1.1, 1.2).unwrap();
        let v = seed_l0(&p, &cfg).unwrap().to_f64();
        assert!((v / 29.214103839897745 - 1.0).abs() < 5e-13, "{v}");
    }

    #[test]
    fn step_near_one_is_refused() {
        let cfg = PrecisionConfig::default();
        let p = RadialParams::new(1.0, 2.5, 1.0, 1.0).unwrap();
        assert!(matches!(seed_l1(&p, &cfg), Err(Error::Pole { .. })));
        let v = seed_l1_or_series(&p, &cfg).unwrap();
        assert!(v.rel_diff(partner_channel(&p, 1, &cfg).unwrap()) < 1e-14);
    }
}
