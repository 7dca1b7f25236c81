//! Normalized orbitals, the four-orbital repulsion integral and the
//! relativistic radial densities.
use std::collections::HashMap;

use crate::angular::{a_coeff, gaunt_c, lm_channels, AngularKey, Convention};
use crate::error::ensure_domain;
use crate::numerics::{gamma_signed, LogScaled};
use crate::radial::{ladder, radial_direct_series, RadialParams};
use crate::{Error, PrecisionConfig, Result};

/// `N r^{n-1} e^{-ζr} Y_{lm}` with real `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Orbital {
    pub n: f64,
    pub l: i32,
    pub m: i32,
    pub zeta: f64,
}

impl Orbital {
    pub fn new(n: f64, l: i32, m: i32, zeta: f64) -> Result<Self> {
        let o = Orbital { n, l, m, zeta };
        o.validate()?;
        Ok(o)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_domain!(self.n.is_finite() && self.n > 0.0, "n must be positive, got {}", self.n);
        ensure_domain!(self.zeta.is_finite() && self.zeta > 0.0, "zeta must be positive, got {}", self.zeta);
        ensure_domain!(
            self.l >= 0 && (self.l as f64) <= self.n.floor() - 1.0,
            "need 0 <= l <= floor(n) - 1, got l = {} for n = {}",
            self.l,
            self.n
        );
        ensure_domain!(self.m.abs() <= self.l, "need |m| <= l, got m = {}", self.m);
        Ok(())
    }
}

/// `(2ζ)^{n+1/2} / √Γ(2n+1)`.
pub fn normalization(n: f64, zeta: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    ensure_domain!(n > 0.0 && zeta > 0.0, "need n > 0 and zeta > 0, got {n}, {zeta}");
    let g = gamma_signed(2.0 * n + 1.0, cfg)?;
    Ok(LogScaled::powf(2.0 * zeta, n + 0.5) * LogScaled::exp(-0.5 * g.log_mag()))
}

/// How [`eri_with`] obtains the radial integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadialMethod {
    #[default]
    Ladder,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EriOptions {
    pub convention: Convention,
    pub method: RadialMethod,
}

/// `⟨1 1' | 2 2'⟩ = ∫∫ χ₁* χ₁' (1/r₁₂) χ₂ χ₂'*` with default options.
pub fn eri(o1: &Orbital, o1p: &Orbital, o2: &Orbital, o2p: &Orbital, cfg: &PrecisionConfig) -> Result<f64> {
    eri_with(o1, o1p, o2, o2p, EriOptions::default(), cfg)
}

pub fn eri_with(
    o1: &Orbital,
    o1p: &Orbital,
    o2: &Orbital,
    o2p: &Orbital,
    opts: EriOptions,
    cfg: &PrecisionConfig,
) -> Result<f64> {
    for o in [o1, o1p, o2, o2p] {
        o.validate()?;
    }
    let key = AngularKey {
        l1: o1.l,
        m1: o1.m,
        l1p: o1p.l,
        m1p: o1p.m,
        l2: o2.l,
        m2: o2.m,
        l2p: o2p.l,
        m2p: o2p.m,
    };
    let channels = lm_channels(&key, opts.convention);
    let Some(l_max) = channels.iter().map(|c| c.0).max() else {
        return Ok(0.0);
    };
    let p = RadialParams::new(o1.n + o1p.n, o2.n + o2p.n, o1.zeta + o1p.zeta, o2.zeta + o2p.zeta)?;
    let radial: Vec<LogScaled> = match opts.method {
        RadialMethod::Ladder => ladder(&p, l_max as u32, cfg)?.r,
        RadialMethod::Series => (0..=l_max as u32).map(|l| radial_direct_series(&p, l, cfg)).collect::<Result<_>>()?,
    };
    let conv = opts.convention;
    let mut acc = LogScaled::ZERO;
    for (big_l, big_m) in channels {
        let ang = gaunt_c(big_l, big_m.abs(), o1.l, o1.m, o1p.l, o1p.m, conv)
            * gaunt_c(big_l, big_m.abs(), o2.l, o2.m, o2p.l, o2p.m, conv)
            * a_coeff(big_m, o1.m, o1p.m, conv)
            * a_coeff(big_m, o2.m, o2p.m, conv);
        if ang != 0.0 {
            acc = acc + radial[big_l as usize].scale(ang);
        }
    }
    let mut norm = LogScaled::ONE;
    for o in [o1, o1p, o2, o2p] {
        norm = norm * normalization(o.n, o.zeta, cfg)?;
    }
    let j = (acc * norm).to_f64();
    if !j.is_finite() {
        return Err(Error::NotFinite);
    }
    Ok(j)
}

/// Radial coefficients `A`, `B` of one relativistic component
/// `(A r^n + ζ B r^{n+1}) e^{-ζr}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelDensityCoeffs {
    pub a: f64,
    pub b: f64,
    pub n: f64,
    pub zeta: f64,
}

impl RelDensityCoeffs {
    pub fn validate(&self) -> Result<()> {
        ensure_domain!(self.a != 0.0 || self.b != 0.0, "A and B cannot both vanish");
        ensure_domain!(self.n.is_finite() && self.n > 0.0, "n must be positive, got {}", self.n);
        ensure_domain!(self.zeta.is_finite() && self.zeta > 0.0, "zeta must be positive, got {}", self.zeta);
        Ok(())
    }
}

/// Power terms `(power, coefficient)` of the product density of two
/// components; the exponential `e^{-(ζ+ζ')r}` is implied. Zero terms are dropped.
pub fn rel_density_terms(c1: &RelDensityCoeffs, c2: &RelDensityCoeffs) -> Vec<(f64, f64)> {
    let n = c1.n + c2.n;
    [
        (n, c1.a * c2.a),
        (n + 1.0, c2.zeta * c1.a * c2.b),
        (n + 1.0, c1.zeta * c1.b * c2.a),
        (n + 2.0, c1.zeta * c2.zeta * c1.b * c2.b),
    ]
    .into_iter()
    .filter(|t| t.1 != 0.0)
    .collect()
}

/// Electrostatic radial integral of two relativistic densities: the sum of
/// up to sixteen `R^L` terms weighted by the density coefficients.
pub fn rel_coulomb_g(
    d1: (&RelDensityCoeffs, &RelDensityCoeffs),
    d2: (&RelDensityCoeffs, &RelDensityCoeffs),
    l: u32,
    cfg: &PrecisionConfig,
) -> Result<LogScaled> {
    for c in [d1.0, d1.1, d2.0, d2.1] {
        c.validate()?;
    }
    let t1 = rel_density_terms(d1.0, d1.1);
    let t2 = rel_density_terms(d2.0, d2.1);
    let (z1, z2) = (d1.0.zeta + d1.1.zeta, d2.0.zeta + d2.1.zeta);
    let mut cache: HashMap<(u64, u64), LogScaled> = HashMap::new();
    let mut acc = LogScaled::ZERO;
    for &(p1, c1) in &t1 {
        for &(p2, c2) in &t2 {
            let r = match cache.get(&(p1.to_bits(), p2.to_bits())) {
                Some(r) => *r,
                None => {
                    let p = RadialParams::new(p1, p2, z1, z2)?;
                    let r = ladder(&p, l, cfg)?.r[l as usize];
                    cache.insert((p1.to_bits(), p2.to_bits()), r);
                    r
                }
            };
            acc = acc + r.scale(c1 * c2);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_values() {
        let cfg = PrecisionConfig::default();
        assert!((normalization(1.0, 1.0, &cfg).unwrap().to_f64() - 2.0).abs() < 1e-15);
        assert!((normalization(0.5, 1.7, &cfg).unwrap().to_f64() - 3.4).abs() < 1e-14);
    }

    #[test]
    fn hydrogen_like_1s() {
        let cfg = PrecisionConfig::default();
        for zeta in [0.5, 1.0, 2.0, 6.7] {
            let o = Orbital::new(1.0, 0, 0, zeta).unwrap();
            let j = eri(&o, &o, &o, &o, &cfg).unwrap();
            assert!((j / (0.625 * zeta) - 1.0).abs() < 1e-13, "{zeta}: {j}");
        }
    }

    #[test]
    fn orbital_bounds() {
        assert!(Orbital::new(1.5, 1, 0, 1.0).is_err());
        assert!(Orbital::new(2.5, 1, -1, 1.0).is_ok());
        assert!(Orbital::new(2.5, 1, 2, 1.0).is_err());
    }

    #[test]
    fn density_terms() {
        let c = RelDensityCoeffs { a: 1.5, b: 0.0, n: 2.0, zeta: 1.0 };
        assert_eq!(rel_density_terms(&c, &c), vec![(4.0, 2.25)]);
        let d = RelDensityCoeffs { a: 0.0, b: 2.0, n: 2.0, zeta: 1.5 };
        assert_eq!(rel_density_terms(&d, &d), vec![(6.0, 9.0)]);
        let e = RelDensityCoeffs { a: 1.0, b: 2.0, n: 1.5, zeta: 0.5 };
        assert_eq!(rel_density_terms(&e, &e).len(), 4);
        assert_eq!(rel_density_terms(&e, &d).len(), 2);
    }
}
