use crate::error::ensure_domain;
use crate::numerics::{digamma, gamma_signed, LogScaled};
use crate::{PrecisionConfig, Result};

/// Combined radial powers and screening exponents of the two charge densities.
///
/// `n` and `zeta` belong to electron 1 (`n = n₁ + n'₁`, `zeta = ζ₁ + ζ'₁`),
/// `nprime` and `zetaprime` to electron 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialParams {
    pub n: f64,
    pub nprime: f64,
    pub zeta: f64,
    pub zetaprime: f64,
}

impl RadialParams {
    /// Validating constructor: every field finite and strictly positive.
    pub fn new(n: f64, nprime: f64, zeta: f64, zetaprime: f64) -> Result<Self> {
        let p = RadialParams { n, nprime, zeta, zetaprime };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.n, self.nprime, self.zeta, self.zetaprime];
        ensure_domain!(
            all.iter().all(|v| v.is_finite() && *v > 0.0),
            "radial parameters must be finite and positive: {self:?}"
        );
        Ok(())
    }

    /// Looser check for kernels that allow negative powers: exponents positive, powers finite.
    pub(crate) fn validate_exponents(&self) -> Result<()> {
        ensure_domain!(
            self.n.is_finite() && self.nprime.is_finite(),
            "radial powers must be finite: {self:?}"
        );
        ensure_domain!(
            self.zeta > 0.0 && self.zetaprime > 0.0 && self.zeta.is_finite() && self.zetaprime.is_finite(),
            "screening exponents must be finite and positive: {self:?}"
        );
        Ok(())
    }

    /// `ζ / (ζ + ζ')`
    pub fn z(&self) -> f64 {
        self.zeta / (self.zeta + self.zetaprime)
    }

    /// `ζ' / (ζ + ζ')`
    pub fn zp(&self) -> f64 {
        self.zetaprime / (self.zeta + self.zetaprime)
    }

    /// Exchange the two electrons.
    pub fn swap(&self) -> Self {
        RadialParams { n: self.nprime, nprime: self.n, zeta: self.zetaprime, zetaprime: self.zeta }
    }

    /// Both exponents multiplied by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Self {
        RadialParams { zeta: self.zeta * lambda, zetaprime: self.zetaprime * lambda, ..*self }
    }

    /// `n + n' + 1`, the common upper parameter of both hypergeometric channels.
    pub fn b(&self) -> f64 {
        self.n + self.nprime + 1.0
    }

    /// `Γ(n+n'+1) / (ζ+ζ')^{n+n'+1}`
    pub fn prefactor(&self, cfg: &PrecisionConfig) -> Result<LogScaled> {
        self.gamma_power(&[self.n, self.nprime, 1.0], cfg)
    }

    /// `Γ(t) / (ζ+ζ')^t` with `t` the exact sum of `parts`.
    ///
    /// For `t` in the hundreds a rounding of `t` by one ulp already moves the
    /// result by ~1e-13, so the part lost when summing is put back through
    /// `d/dt = ψ(t) - ln(ζ+ζ')`.
    pub(crate) fn gamma_power(&self, parts: &[f64], cfg: &PrecisionConfig) -> Result<LogScaled> {
        let (t, lo) = exact_sum(parts);
        let v = gamma_signed(t, cfg)? * LogScaled::pow_of_sum(self.zeta, self.zetaprime, -t);
        if lo == 0.0 {
            return Ok(v);
        }
        let slope = digamma(t, cfg)? - (self.zeta + self.zetaprime).ln();
        Ok(v.scale((lo * slope).exp()))
    }
}

/// `(hi, lo)` with `hi + lo` equal to the sum of `xs` to twice working precision.
fn exact_sum(xs: &[f64]) -> (f64, f64) {
    let mut hi = 0.0f64;
    let mut lo = 0.0f64;
    for &x in xs {
        let s = hi + x;
        let bb = s - hi;
        lo += (hi - (s - bb)) + (x - bb);
        hi = s;
    }
    let s = hi + lo;
    (s, lo - (s - hi))
}
