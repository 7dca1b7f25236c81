//! Brute-force two-dimensional radial integrals.
use super::quad::{integrate, panels_around, Estimate, Panel, QuadSpec};
use crate::numerics::LogScaled;
use crate::radial::RadialParams;
use crate::{Error, Result};

/// `Σ c_j r^{p_j} e^{-ζ r}`, evaluated relative to its largest term's peak.
#[derive(Debug, Clone, PartialEq)]
pub struct Density {
    pub terms: Vec<(f64, f64)>,
    pub zeta: f64,
    shift: f64,
}

impl Density {
    /// `terms` are `(coefficient, power)` pairs.
    pub fn new(terms: Vec<(f64, f64)>, zeta: f64) -> Density {
        let shift = terms
            .iter()
            .filter(|t| t.0 != 0.0)
            .map(|&(c, p)| {
                let r = peak(p, zeta);
                c.abs().ln() + p * r.ln() - zeta * r
            })
            .fold(f64::NEG_INFINITY, f64::max);
        Density { terms, zeta, shift: if shift.is_finite() { shift } else { 0.0 } }
    }

    pub fn monomial(power: f64, zeta: f64) -> Density {
        Density::new(vec![(1.0, power)], zeta)
    }

    /// Value divided by `e^{shift}`.
    fn scaled(&self, r: f64) -> f64 {
        let lr = r.ln();
        self.terms.iter().map(|&(c, p)| c * (p * lr - self.zeta * r - self.shift).exp()).sum()
    }

    fn bumps(&self) -> Vec<(f64, f64)> {
        self.terms.iter().map(|&(_, p)| (peak(p, self.zeta), p.max(1.0).sqrt() / self.zeta)).collect()
    }

    fn single_signed(&self) -> bool {
        self.terms.iter().all(|t| t.0 >= 0.0) || self.terms.iter().all(|t| t.0 <= 0.0)
    }

    fn split(&self) -> Vec<Density> {
        self.terms.iter().map(|&t| Density::new(vec![t], self.zeta)).collect()
    }
}

fn peak(p: f64, zeta: f64) -> f64 {
    if p > 0.0 {
        p / zeta
    } else {
        1.0 / zeta
    }
}

/// Which part of the `(r₁, r₂)` quadrant is integrated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    Full,
    /// `r₁ > r₂`
    Upper,
    /// `r₁ > r₂ + d`
    UpperShifted(f64),
}

/// A brute-force value with its relative error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: LogScaled,
    pub rel_error: f64,
}

impl QuadResult {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// `∫∫ ρ₁(r₁) K(r₁, r₂) ρ₂(r₂) dr₁ dr₂` over `region`, as nested adaptive
/// integrals with the inner one split at `r₁ = r₂`.
///
/// Mixed-sign densities are integrated term by term.
pub fn quad_2d(
    rho1: &Density,
    rho2: &Density,
    kernel: &dyn Fn(f64, f64) -> f64,
    region: Region,
    spec: &QuadSpec,
) -> Result<QuadResult> {
    if !rho1.single_signed() || !rho2.single_signed() {
        let mut total = LogScaled::ZERO;
        let mut abs_err = LogScaled::ZERO;
        for a in rho1.split() {
            for b in rho2.split() {
                let part = quad_2d(&a, &b, kernel, region, spec)?;
                total = total + part.value;
                abs_err = abs_err + part.value.abs().scale(part.rel_error);
            }
        }
        let rel_error = if total.is_zero() { f64::INFINITY } else { abs_err.ratio(total.abs()) };
        return Ok(QuadResult { value: total, rel_error });
    }

    let inner_spec = QuadSpec { rel_tol: spec.rel_tol * 1e-2, abs_floor: 0.0, ..*spec };
    let mut inner_rel = 0.0f64;
    let mut failure: Option<Error> = None;
    let bumps1 = rho1.bumps();
    let mut outer = |r2: f64| -> f64 {
        let w2 = rho2.scaled(r2);
        if w2 == 0.0 {
            return 0.0;
        }
        let mut g = |r1: f64| rho1.scaled(r1) * kernel(r1, r2);
        let panels = match region {
            Region::Full if spec.split_at_diagonal => {
                let mut v = panels_around(0.0, Some(r2), &bumps1, rho1.zeta);
                v.extend(panels_around(r2, None, &bumps1, rho1.zeta));
                v
            }
            Region::Full => panels_around(0.0, None, &bumps1, rho1.zeta),
            Region::Upper => panels_around(r2, None, &bumps1, rho1.zeta),
            Region::UpperShifted(d) => panels_around(r2 + d, None, &bumps1, rho1.zeta),
        };
        match integrate(&mut g, &panels, &inner_spec) {
            Ok(Estimate { value, error }) => {
                if value != 0.0 {
                    inner_rel = inner_rel.max(error / value.abs());
                }
                w2 * value
            }
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        }
    };
    let mut bumps = rho2.bumps();
    bumps.extend(rho1.bumps());
    let rate = match region {
        Region::Full => rho2.zeta,
        _ => rho1.zeta + rho2.zeta,
    };
    let panels = panels_around(0.0, None, &bumps, rate);
    let est = integrate(&mut outer, &panels, spec);
    if let Some(e) = failure {
        return Err(e);
    }
    let est = est?;
    let value = LogScaled::from_f64(est.value) * LogScaled::exp(rho1.shift + rho2.shift);
    let rel_error = if est.value == 0.0 { f64::INFINITY } else { est.error / est.value.abs() + inner_rel };
    if rel_error > spec.rel_tol.max(1e-15) * 10.0 {
        return Err(Error::Tolerance { value: value.to_f64(), error: rel_error * value.to_f64().abs() });
    }
    Ok(QuadResult { value, rel_error })
}

/// Kernel `r<^L / r>^σ`.
pub fn power_kernel(l: u32, sigma: f64) -> impl Fn(f64, f64) -> f64 {
    move |r1: f64, r2: f64| {
        let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
        (lo / hi).powi(l as i32) * hi.powf(l as f64 - sigma)
    }
}

/// Brute-force `∫∫ r₁^n e^{-ζr₁} (r<^L/r>^σ) r₂^{n'} e^{-ζ'r₂} dr₁ dr₂`,
/// over `r₁ > r₂` only when `half_range`.
pub fn quad_radial(p: &RadialParams, l: u32, sigma: f64, half_range: bool, q: &QuadSpec) -> Result<QuadResult> {
    p.validate_exponents()?;
    let rho1 = Density::monomial(p.n, p.zeta);
    let rho2 = Density::monomial(p.nprime, p.zetaprime);
    let region = if half_range { Region::Upper } else { Region::Full };
    quad_2d(&rho1, &rho2, &power_kernel(l, sigma), region, q)
}

/// `∫ ρ(r) dr` over `[0, ∞)`.
pub fn quad_1d(rho: &Density, spec: &QuadSpec) -> Result<QuadResult> {
    let mut f = |r: f64| rho.scaled(r);
    let panels: Vec<Panel> = panels_around(0.0, None, &rho.bumps(), rho.zeta);
    let est = integrate(&mut f, &panels, spec)?;
    Ok(QuadResult {
        value: LogScaled::from_f64(est.value) * LogScaled::exp(rho.shift),
        rel_error: est.error / est.value.abs(),
    })
}
