//! Gamma, reciprocal gamma, Pochhammer symbols and digamma.
use super::LogScaled;
use crate::error::ensure_domain;
use crate::{Error, PrecisionConfig, Result};
use std::f64::consts::PI;

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    ensure_domain!(x > 0.0 && x.is_finite(), "ln_gamma needs a positive argument, got {x}");
    Ok(libm::lgamma_r(x).0)
}

// tgamma is accurate to a few ulp up to here; above it, multiply down.
const TGAMMA_MAX: f64 = 170.0;
const PRODUCT_MAX: f64 = 4000.0;

fn gamma_pos(x: f64) -> LogScaled {
    debug_assert!(x > 0.0);
    if x < TGAMMA_MAX {
        return LogScaled::from_f64(libm::tgamma(x));
    }
    if x > PRODUCT_MAX {
        return LogScaled::exp(libm::lgamma_r(x).0);
    }
    let k = (x - (TGAMMA_MAX - 10.0)).ceil();
    let base = x - k;
    let mut acc = LogScaled::from_f64(libm::tgamma(base));
    let mut run = 1.0f64;
    let mut t = base;
    while t < x - 0.5 {
        run *= t;
        if run > 1e280 {
            acc = acc.scale(run);
            run = 1.0;
        }
        t += 1.0;
    }
    acc.scale(run)
}

/// `sin(πx)` with the argument reduced exactly.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// `Γ(x)` with sign, for any real `x` away from the poles.
pub fn gamma_signed(x: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    ensure_domain!(x.is_finite(), "gamma of non-finite {x}");
    if x > 0.0 {
        return Ok(gamma_pos(x));
    }
    if cfg.near_integer(x) {
        return Err(Error::Pole { what: "gamma", at: x });
    }
    Ok(LogScaled::from_f64(PI / sin_pi(x)) / gamma_pos(1.0 - x))
}

/// `1/Γ(x)`; exactly zero at the non-positive integers.
pub fn rgamma(x: f64) -> LogScaled {
    if x > 0.0 {
        return gamma_pos(x).recip();
    }
    if x == x.round() {
        return LogScaled::ZERO;
    }
    gamma_pos(1.0 - x).scale(sin_pi(x) / PI)
}

/// Complete beta function `Γ(a)Γ(b)/Γ(a+b)` for `a, b > 0`.
pub fn beta(a: f64, b: f64) -> Result<LogScaled> {
    ensure_domain!(a > 0.0 && b > 0.0, "beta needs positive arguments, got ({a}, {b})");
    Ok(gamma_pos(a) * gamma_pos(b) / gamma_pos(a + b))
}

/// Rising factorial `x (x+1) ... (x+k-1)`.
pub fn pochhammer(x: f64, k: u32) -> LogScaled {
    let mut acc = LogScaled::ONE;
    let mut run = 1.0f64;
    for j in 0..k {
        let f = x + j as f64;
        if f == 0.0 {
            return LogScaled::ZERO;
        }
        run *= f;
        if !(1e-280..=1e280).contains(&run.abs()) {
            acc = acc.scale(run);
            run = 1.0;
        }
    }
    acc.scale(run)
}

/// Digamma `ψ(x)`; poles at the non-positive integers.
pub fn digamma(x: f64, cfg: &PrecisionConfig) -> Result<f64> {
    ensure_domain!(x.is_finite(), "digamma of non-finite {x}");
    if x <= 0.0 && cfg.near_integer(x) {
        return Err(Error::Pole { what: "digamma", at: x });
    }
    if x < 0.5 {
        // ψ(1-x) - ψ(x) = π cot(πx)
        let cot = sin_pi(x + 0.5) / sin_pi(x);
        return Ok(digamma(1.0 - x, cfg)? - PI * cot);
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 12.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    // Bernoulli tail: 1/12, -1/120, 1/252, -1/240, 1/132, -691/32760, 1/12
    let tail = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    Ok(acc + y.ln() - 0.5 / y - tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn small_exact_values() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert!((ln_gamma(0.5).unwrap() - 0.572_364_942_924_700_1).abs() < 1e-15);
        assert!(ln_gamma(0.0).is_err() && ln_gamma(-1.5).is_err());
        let g3 = gamma_signed(3.0, &cfg()).unwrap();
        assert_eq!(g3.sign(), 1);
        assert!((g3.log_mag() - 2f64.ln()).abs() < 1e-15);
        let gm = gamma_signed(-0.5, &cfg()).unwrap();
        assert_eq!(gm.sign(), -1);
        assert!((gm.log_mag() - (2.0 * PI.sqrt()).ln()).abs() < 1e-14);
    }

    #[test]
    fn poles_are_typed() {
        for x in [0.0, -1.0, -7.0, -3.0 + 1e-11] {
            assert!(matches!(gamma_signed(x, &cfg()), Err(Error::Pole { .. })));
        }
        assert!(rgamma(-4.0).is_zero());
        assert!(digamma(-2.0, &cfg()).is_err());
    }

    #[test]
    fn large_arguments_stay_accurate() {
        // Γ(201) = 200!; compare mantissa against the ratio Γ(201)/Γ(200) = 200
        let a = gamma_signed(201.0, &cfg()).unwrap();
        let b = gamma_signed(200.0, &cfg()).unwrap();
        assert!((a.ratio(b) - 200.0).abs() < 1e-12);
        let c = gamma_signed(200.01, &cfg()).unwrap();
        assert!((c.log_mag() - ln_gamma(200.01).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn pochhammer_products() {
        assert_eq!(pochhammer(5.5, 0).to_f64(), 1.0);
        assert_eq!(pochhammer(1.0, 4).to_f64(), 24.0);
        assert_eq!(pochhammer(-2.5, 3).to_f64(), -1.875);
        assert!(pochhammer(-2.0, 5).is_zero());
        let big = pochhammer(100.0, 300);
        let expect = ln_gamma(400.0).unwrap() - ln_gamma(100.0).unwrap();
        assert!((big.log_mag() - expect).abs() < 1e-11);
    }

    #[test]
    fn digamma_values() {
        let euler = 0.577_215_664_901_532_9;
        assert!((digamma(1.0, &cfg()).unwrap() + euler).abs() < 1e-15);
        assert!((digamma(0.5, &cfg()).unwrap() + euler + 2.0 * 2f64.ln()).abs() < 1e-14);
        // ψ(x+1) = ψ(x) + 1/x, including negative x
        for x in [-3.7, -0.2, 0.3, 2.9, 40.5] {
            let d = digamma(x + 1.0, &cfg()).unwrap() - digamma(x, &cfg()).unwrap();
            assert!((d - 1.0 / x).abs() < 1e-12 * (1.0 + 1.0 / x.abs()), "x={x}");
        }
    }
}
