use super::RadialParams;
use crate::numerics::{hyp2f1_unit_a, LogScaled};
use crate::{Error, PrecisionConfig, Result};

/// `∫∫ r₁^n e^{-ζr₁} (r<^L / r>^σ) r₂^{n'} e^{-ζ'r₂} dr₁ dr₂`.
///
/// With `half_range` only the part `r₁ > r₂` is kept. Powers may be zero or
/// negative as long as each kept region converges; `σ = L + 1` with the full
/// range is `R^L`.
pub fn radial_generalized(
    p: &RadialParams,
    l: u32,
    sigma: f64,
    half_range: bool,
    cfg: &PrecisionConfig,
) -> Result<LogScaled> {
    p.validate_exponents()?;
    if !sigma.is_finite() {
        return Err(Error::Domain(format!("sigma must be finite, got {sigma}")));
    }
    let lf = l as f64;
    let total = p.n + p.nprime + lf + 2.0 - sigma;
    if total <= 0.0 {
        return Err(Error::Divergence(format!(
            "outer integral needs n + n' + L + 2 - sigma > 0, got {total}"
        )));
    }
    let common = p.gamma_power(&[p.n, p.nprime, lf, 2.0, -sigma], cfg)?;
    let upper = region(p.nprime, lf, total, p.zp(), cfg)?;
    if half_range {
        return Ok(common * upper);
    }
    let lower = region(p.n, lf, total, p.z(), cfg)?;
    Ok(common * (lower + upper))
}

/// Contribution of the region where the variable carrying `power` is the smaller radius.
fn region(power: f64, lf: f64, total: f64, z: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let inner = power + lf + 1.0;
    if inner <= 0.0 {
        return Err(Error::Divergence(format!("inner integral needs power + L + 1 > 0, got {inner}")));
    }
    Ok(hyp2f1_unit_a(total, inner + 1.0, z, cfg)?.scale(1.0 / inner))
}
