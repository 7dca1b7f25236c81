//! Lower and upper incomplete gamma functions.
use super::gamma::gamma_signed;
use super::LogScaled;
use crate::error::ensure_domain;
use crate::{Error, PrecisionConfig, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const TINY: f64 = 1e-300;

/// `γ[a, x] = ∫_0^x t^{a-1} e^{-t} dt` by its power series.
pub fn lower_inc_gamma(a: f64, x: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    ensure_domain!(a > 0.0 && a.is_finite(), "lower incomplete gamma needs a > 0, got {a}");
    ensure_domain!(x >= 0.0 && x.is_finite(), "lower incomplete gamma needs x >= 0, got {x}");
    if x == 0.0 {
        return Ok(LogScaled::ZERO);
    }
    // γ = x^a e^{-x} Σ_k x^k / (a (a+1)_k); terms rescaled to dodge overflow
    let mut term = 1.0 / a;
    let mut sum = super::CompensatedSum::new();
    sum.add(term);
    let mut shift = 0i32;
    let mut quiet = 0;
    for k in 1..=cfg.series_max_terms {
        let r = x / (a + k as f64);
        term *= r;
        sum.add(term);
        if term > 1e250 {
            term = libm::ldexp(term, -600);
            sum.rescale(-600);
            shift += 600;
        }
        let rn = x / (a + k as f64 + 1.0);
        if rn < 1.0 && term * rn / (1.0 - rn) < cfg.series_rel_tol * sum.value() {
            quiet += 1;
            if quiet >= 3 {
                let pre = LogScaled::exp(a * x.ln() - x);
                return Ok(pre * LogScaled::from_parts(sum.value(), shift as i64));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence { terms: cfg.series_max_terms })
}

/// `Γ[a, x] = ∫_x^∞ t^{a-1} e^{-t} dt` for any real `a` and `x > 0`.
pub fn upper_inc_gamma(a: f64, x: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    ensure_domain!(a.is_finite(), "upper incomplete gamma of non-finite a");
    ensure_domain!(x > 0.0 && x.is_finite(), "upper incomplete gamma needs x > 0, got {x}");
    if x >= 1.5 && (a <= 0.0 || x >= a + 1.0) {
        return upper_cf(a, x, cfg);
    }
    if a > 0.5 {
        let total = gamma_signed(a, cfg)?;
        return Ok(total - lower_inc_gamma(a, x, cfg)?);
    }
    if a >= -0.5 {
        return Ok(LogScaled::from_f64(upper_small(a, x)));
    }
    // walk down from s0 ∈ (-1/2, 1/2]: Γ[s,x] = (Γ[s+1,x] - x^s e^{-x}) / s
    let k = (-a + 0.5).floor();
    let s0 = a + k;
    let mut g = LogScaled::from_f64(upper_small(s0, x));
    let lx = x.ln();
    for j in 1..=(k as i64) {
        let s = s0 - j as f64;
        g = (g - LogScaled::exp(s * lx - x)).scale(1.0 / s);
    }
    Ok(g)
}

/// `|a| <= 1/2`, `x < 1.5`: Γ(a) - x^a/a via expm1, then the alternating tail.
fn upper_small(a: f64, x: f64) -> f64 {
    let lx = x.ln();
    let head = if a == 0.0 {
        -EULER_GAMMA - lx
    } else {
        (libm::expm1(libm::lgamma_r(1.0 + a).0) - libm::expm1(a * lx)) / a
    };
    let mut tail = super::CompensatedSum::new();
    let mut t = 1.0;
    for k in 1..60 {
        t *= -x / k as f64;
        tail.add(t / (a + k as f64));
        if t.abs() < 1e-18 {
            break;
        }
    }
    head - (a * lx).exp() * tail.value()
}

/// Modified Lentz evaluation of the Legendre continued fraction.
fn upper_cf(a: f64, x: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=cfg.series_max_terms {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 0.5 * cfg.series_rel_tol {
            return Ok(LogScaled::exp(a * x.ln() - x).scale(h));
        }
    }
    Err(Error::NonConvergence { terms: cfg.series_max_terms })
}

/// `𝒜_n[p] = p^{-n-1} Γ[n+1, p]`.
pub fn a_func(n: f64, p: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    ensure_domain!(p > 0.0, "a_func needs p > 0, got {p}");
    Ok(LogScaled::powf(p, -n - 1.0) * upper_inc_gamma(n + 1.0, p, cfg)?)
}
