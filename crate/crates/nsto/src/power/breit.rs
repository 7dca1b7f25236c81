use crate::numerics::LogScaled;
use crate::oracle::{quad_2d, Density, QuadSpec, Region};
use crate::radial::{radial_generalized, RadialParams};
use crate::{PrecisionConfig, Result};

/// Reading of the step function `e(r₁ - r₂)` in the spin-spin integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StepConvention {
    /// `e(x) = 1` for `x > 0`: the region `r₁ > r₂`.
    #[default]
    Positive,
    /// `e(x) = 1` for `x > 1`: the region `r₁ > r₂ + 1`. No closed form;
    /// evaluated by quadrature.
    ShiftedByOne,
}

/// `N^L`: `∫∫ r₁^n e^{-ζr₁} (r<^L / r>^{L+3}) e(r₁-r₂) r₂^{n'} e^{-ζ'r₂}`,
/// where `n = n₁+n'₁`, `ζ = ζ₁+ζ'₁` and likewise for electron 2.
pub fn breit_n(n: f64, nprime: f64, zeta: f64, zetaprime: f64, l: u32, cfg: &PrecisionConfig) -> Result<LogScaled> {
    breit_n_with(n, nprime, zeta, zetaprime, l, StepConvention::Positive, cfg)
}

pub fn breit_n_with(
    n: f64,
    nprime: f64,
    zeta: f64,
    zetaprime: f64,
    l: u32,
    step: StepConvention,
    cfg: &PrecisionConfig,
) -> Result<LogScaled> {
    let p = RadialParams { n, nprime, zeta, zetaprime };
    p.validate_exponents()?;
    match step {
        StepConvention::Positive => radial_generalized(&p, l, l as f64 + 3.0, true, cfg),
        StepConvention::ShiftedByOne => {
            let kernel = crate::oracle::power_kernel(l, l as f64 + 3.0);
            let q = quad_2d(
                &Density::monomial(n, zeta),
                &Density::monomial(nprime, zetaprime),
                &kernel,
                Region::UpperShifted(1.0),
                &QuadSpec::from_config(cfg),
            )?;
            Ok(q.value)
        }
    }
}

/// `V^L`: the orbit-orbit integral with `∂/∂r₁ (r₁^{n'₁} e^{-ζ'₁r₁})` on
/// electron 1, over the full range.
///
/// Expands the derivative into `n'₁ r₁^{n'₁-1} - ζ'₁ r₁^{n'₁}`; the first
/// term is dropped when `n'₁ = 0`.
pub fn breit_v(
    n1: f64,
    n1p: f64,
    zeta1: f64,
    zeta1p: f64,
    n2: f64,
    zeta2: f64,
    l: u32,
    cfg: &PrecisionConfig,
) -> Result<LogScaled> {
    let sigma = l as f64 + 3.0;
    let g = |n: f64| radial_generalized(&RadialParams { n, nprime: n2, zeta: zeta1 + zeta1p, zetaprime: zeta2 }, l, sigma, false, cfg);
    let second = g(n1 + n1p)?.scale(-zeta1p);
    if n1p == 0.0 {
        return Ok(second);
    }
    Ok(g(n1 + n1p - 1.0)?.scale(n1p) + second)
}

/// [`breit_v`] by two-dimensional quadrature of the derivative density.
pub fn breit_v_quadrature(
    n1: f64,
    n1p: f64,
    zeta1: f64,
    zeta1p: f64,
    n2: f64,
    zeta2: f64,
    l: u32,
    spec: &QuadSpec,
) -> Result<LogScaled> {
    let mut terms = vec![(-zeta1p, n1 + n1p)];
    if n1p != 0.0 {
        terms.insert(0, (n1p, n1 + n1p - 1.0));
    }
    let rho1 = Density::new(terms, zeta1 + zeta1p);
    let rho2 = Density::monomial(n2, zeta2);
    let kernel = crate::oracle::power_kernel(l, l as f64 + 3.0);
    Ok(quad_2d(&rho1, &rho2, &kernel, Region::Full, spec)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halves_tile_full_range() {
        let cfg = PrecisionConfig::default();
        let (n, np, z, zp, l) = (5.5, 4.5, 1.2, 2.1, 2);
        let a = breit_n(n, np, z, zp, l, &cfg).unwrap();
        let b = breit_n(np, n, zp, z, l, &cfg).unwrap();
        let p = RadialParams::new(n, np, z, zp).unwrap();
        let full = radial_generalized(&p, l, l as f64 + 3.0, false, &cfg).unwrap();
        assert!((a + b).rel_diff(full) < 1e-13);
        assert!(a.sign() > 0);
    }

    #[test]
    fn pure_exponential_derivative_is_negative() {
        let cfg = PrecisionConfig::default();
        let v = breit_v(3.0, 0.0, 1.0, 1.0, 4.0, 2.0, 0, &cfg).unwrap();
        assert!(v.sign() < 0);
    }
}
