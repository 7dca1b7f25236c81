//! Gauss hypergeometric function on `[0, 1)`.
use super::gamma::{digamma, gamma_signed, pochhammer, rgamma};
use super::{CompensatedSum, LogScaled};
use crate::error::ensure_domain;
use crate::{Error, PrecisionConfig, Result};

/// Sums `Σ t_k`, `t_0 = 1`, `t_{k+1} = t_k ratio(k)`, at a floating scale.
///
/// Stops once the geometric tail bound (ratio capped below by `zbound`)
/// stays under the tolerance for three consecutive terms, or when a ratio is
/// exactly zero.
fn ratio_series(ratio: impl Fn(f64) -> f64, zbound: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let mut term = 1.0f64;
    let mut sum = CompensatedSum::new();
    sum.add(1.0);
    let mut shift = 0i64;
    let mut quiet = 0;
    for k in 0..cfg.series_max_terms {
        let r = ratio(k as f64);
        if r == 0.0 {
            return Ok(LogScaled::from_parts(sum.value(), shift));
        }
        term *= r;
        sum.add(term);
        if term.abs() > 1e250 {
            term = libm::ldexp(term, -600);
            sum.rescale(-600);
            shift += 600;
        }
        let rhat = ratio(k as f64 + 1.0).abs().max(zbound);
        if rhat < 1.0 && term.abs() * rhat / (1.0 - rhat) <= cfg.series_rel_tol * sum.value().abs() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(LogScaled::from_parts(sum.value(), shift));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence { terms: cfg.series_max_terms })
}

/// `₂F₁(1, b; c; z)` by its power series.
pub fn hyp2f1_unit_a(b: f64, c: f64, z: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    ensure_domain!(b.is_finite() && c > 0.0 && c.is_finite(), "need finite b and c > 0, got b={b} c={c}");
    ensure_domain!((0.0..1.0).contains(&z), "need 0 <= z < 1, got {z}");
    if z == 0.0 {
        return Ok(LogScaled::ONE);
    }
    ratio_series(|k| (b + k) / (c + k) * z, z, cfg)
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// `₂F₁(a, b; c; z)` for `0 <= z < 1`.
///
/// Direct series up to `z = 3/4`; beyond that the `1 - z` connection formula,
/// or its logarithmic limit when `c - a - b` is an integer.
pub fn hyp2f1_general(a: f64, b: f64, c: f64, z: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    hyp2f1_complement(a, b, c, z, 1.0 - z, cfg)
}

/// [`hyp2f1_general`] with `w = 1 - z` supplied by the caller, for arguments
/// so close to 1 that forming `1 - z` would lose digits.
pub fn hyp2f1_complement(a: f64, b: f64, c: f64, z: f64, w: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    ensure_domain!(a.is_finite() && b.is_finite() && c.is_finite(), "non-finite parameter");
    ensure_domain!((0.0..1.0).contains(&z), "need 0 <= z < 1, got {z}");
    ensure_domain!(w > 0.0 && w <= 1.0, "need 0 < 1 - z <= 1, got {w}");
    if z == 0.0 {
        return Ok(LogScaled::ONE);
    }
    let terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if !terminating && is_nonpositive_integer(c) {
        return Err(Error::Pole { what: "2F1 lower parameter", at: c });
    }
    let series = |cfg: &PrecisionConfig| {
        ratio_series(|k| (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z, z, cfg)
    };
    if terminating || z <= 0.75 {
        return series(cfg);
    }
    let s = c - a - b;
    let sr = s.round();
    if (s - sr).abs() <= 1e-12 * s.abs().max(1.0) {
        if sr >= 0.0 {
            return degenerate(a, b, sr as u32, w, cfg);
        }
        // Euler: F(a,b;c;z) = (1-z)^{c-a-b} F(c-a, c-b; c; z)
        let pre = LogScaled::powf(w, s);
        let (a2, b2) = (c - a, c - b);
        let inner = if is_nonpositive_integer(a2) || is_nonpositive_integer(b2) {
            ratio_series(|k| (a2 + k) * (b2 + k) / ((c + k) * (k + 1.0)) * z, z, cfg)?
        } else {
            degenerate(a2, b2, (-sr) as u32, w, cfg)?
        };
        return Ok(pre * inner);
    }
    if (s - sr).abs() <= 1e-6 {
        // both connection forms lose most digits this close to an integer
        return series(cfg);
    }
    let gc = gamma_signed(c, cfg)?;
    let t1 = gc * gamma_signed(-s, cfg)? * rgamma(a) * rgamma(b) * LogScaled::powf(w, s);
    let t1 = if t1.is_zero() { t1 } else { t1 * hyp2f1_complement(c - a, c - b, s + 1.0, w, z, cfg)? };
    let t2 = gc * gamma_signed(s, cfg)? * rgamma(c - a) * rgamma(c - b);
    let t2 = if t2.is_zero() { t2 } else { t2 * hyp2f1_complement(a, b, 1.0 - s, w, z, cfg)? };
    Ok(t1 + t2)
}

/// `F(a, b; a+b+m; z)` from the logarithmic connection formula.
fn degenerate(a: f64, b: f64, m: u32, w: f64, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let mf = m as f64;
    let c = a + b + mf;
    // finite part: Σ_{k<m} (a)_k (b)_k (m-k-1)! / k! (z-1)^k / (Γ(a+m) Γ(b+m))
    let mut finite = LogScaled::ZERO;
    for k in 0..m {
        let kk = k as f64;
        let fact = LogScaled::exp(libm::lgamma_r(mf - kk).0 - libm::lgamma_r(kk + 1.0).0);
        let t = pochhammer(a, k) * pochhammer(b, k) * fact * LogScaled::from_f64(-w).powi(k as i32);
        finite = finite + t;
    }
    let finite = finite * rgamma(a + mf) * rgamma(b + mf);
    // logarithmic part
    let lw = w.ln();
    let mut psi1 = digamma(1.0, cfg)?;
    let mut psi2 = digamma(mf + 1.0, cfg)?;
    let mut psi3 = digamma(a + mf, cfg)?;
    let mut psi4 = digamma(b + mf, cfg)?;
    let mut coef = 1.0 / libm::tgamma(mf + 1.0);
    let mut sum = CompensatedSum::new();
    let mut done = false;
    for k in 0..cfg.series_max_terms {
        let kk = k as f64;
        let t = coef * (lw - psi1 - psi2 + psi3 + psi4);
        sum.add(t);
        if t.abs() <= 0.1 * cfg.series_rel_tol * sum.value().abs() && k > 2 {
            done = true;
            break;
        }
        coef *= (a + mf + kk) * (b + mf + kk) / ((kk + 1.0) * (kk + mf + 1.0)) * w;
        psi1 += 1.0 / (kk + 1.0);
        psi2 += 1.0 / (kk + mf + 1.0);
        psi3 += 1.0 / (a + mf + kk);
        psi4 += 1.0 / (b + mf + kk);
    }
    if !done {
        return Err(Error::NonConvergence { terms: cfg.series_max_terms });
    }
    let log_part = LogScaled::from_f64(-w).powi(m as i32) * rgamma(a) * rgamma(b) * LogScaled::from_f64(sum.value());
    Ok(gamma_signed(c, cfg)? * (finite - log_part))
}
