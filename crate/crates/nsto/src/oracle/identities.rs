//! Randomized checks of the hypergeometric and incomplete-function identities
//! behind the closed forms and the ladder.
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::quad::{integrate, panels_around, Panel, QuadSpec};
use crate::numerics::{
    beta, gamma_signed, hyp2f1_general, hyp2f1_unit_a, inc_beta, lower_inc_gamma, pochhammer, upper_inc_gamma,
    LogScaled,
};
use crate::radial::{compute_helpers, RadialParams};
use crate::{PrecisionConfig, Result};

/// Largest relative deviation accepted for any sample.
pub const IDENTITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRow {
    pub name: &'static str,
    pub samples: usize,
    /// `INFINITY` when some sample could not be evaluated.
    pub max_rel_dev: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub rows: Vec<IdentityRow>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

type Check = fn(&mut ChaCha8Rng, &PrecisionConfig) -> Result<f64>;

const CHECKS: [(&str, Check); 9] = [
    ("upper_gamma_laplace", upper_gamma_laplace),
    ("lower_gamma_laplace", lower_gamma_laplace),
    ("unit_a_reflection", unit_a_reflection),
    ("helper_split", helper_split),
    ("c_shift_down", c_shift_down),
    ("c_shift_up", c_shift_up),
    ("three_term_contiguous", three_term_contiguous),
    ("inc_beta_complement", inc_beta_complement),
    ("one_minus_z_connection", one_minus_z_connection),
];

/// Run every identity on `samples` random parameter draws.
///
/// The same `seed` always yields the same draws and the same report.
pub fn identity_suite(samples: usize, seed: u64) -> IdentityReport {
    identity_suite_with(samples, seed, &PrecisionConfig::default())
}

pub fn identity_suite_with(samples: usize, seed: u64, cfg: &PrecisionConfig) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = CHECKS
        .iter()
        .map(|&(name, check)| {
            let mut worst = 0.0f64;
            for _ in 0..samples {
                let dev = check(&mut rng, cfg).unwrap_or(f64::INFINITY);
                worst = if dev.is_nan() { f64::INFINITY } else { worst.max(dev) };
            }
            IdentityRow { name, samples, max_rel_dev: worst, pass: worst <= IDENTITY_TOL }
        })
        .collect();
    IdentityReport { rows }
}

/// `|lhs - Σ terms|` relative to the larger of `|lhs|` and `Σ |terms|`.
///
/// When the terms cancel, no evaluation in double precision can do better
/// than their magnitude allows, so that magnitude sets the yardstick.
fn deviation(lhs: LogScaled, terms: &[LogScaled]) -> f64 {
    let mut rhs = LogScaled::ZERO;
    let mut scale = lhs.abs();
    let mut mag = LogScaled::ZERO;
    for &t in terms {
        rhs = rhs + t;
        mag = mag + t.abs();
    }
    if mag > scale {
        scale = mag;
    }
    if scale.is_zero() {
        return 0.0;
    }
    (lhs - rhs).abs().ratio(scale)
}

/// Uniform draw whose distance to every integer is at least `gap`.
fn off_integer(rng: &mut ChaCha8Rng, lo: f64, hi: f64, gap: f64) -> f64 {
    loop {
        let x: f64 = rng.gen_range(lo..hi);
        if (x - x.round()).abs() >= gap {
            return x;
        }
    }
}

fn quad_spec() -> QuadSpec {
    QuadSpec { rel_tol: 1e-13, ..QuadSpec::default() }
}

/// `∫_0^∞ x^{m-1} e^{-bx} Γ[n, ax] dx = a^n Γ(m+n) / (m (a+b)^{m+n}) F(1, m+n; m+1; b/(a+b))`.
fn upper_gamma_laplace(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    gamma_laplace(rng, cfg, true)
}

/// The lower-incomplete companion: `m` and `b` trade places with `n` and `a`.
fn lower_gamma_laplace(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    gamma_laplace(rng, cfg, false)
}

fn gamma_laplace(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig, upper: bool) -> Result<f64> {
    let n: f64 = rng.gen_range(0.5..5.0);
    let m: f64 = rng.gen_range(1.0..5.0);
    let a: f64 = rng.gen_range(0.3..3.0);
    let b: f64 = rng.gen_range(0.3..3.0);
    laplace_case(n, m, a, b, upper, cfg)
}

fn laplace_case(n: f64, m: f64, a: f64, b: f64, upper: bool, cfg: &PrecisionConfig) -> Result<f64> {
    let mut err = None;
    let mut f = |x: f64| {
        if x == 0.0 {
            return 0.0;
        }
        let g = if upper { upper_inc_gamma(n, a * x, cfg) } else { lower_inc_gamma(n, a * x, cfg) };
        match g {
            Ok(g) => (LogScaled::exp((m - 1.0) * x.ln() - b * x) * g).to_f64(),
            Err(e) => {
                err.get_or_insert(e);
                0.0
            }
        }
    };
    let rate = if upper { a + b } else { b };
    let peak = ((m - 1.0).max(0.5)) / rate;
    let panels = panels_around(0.0, None, &[(peak, peak.max(0.5))], rate);
    let lhs = integrate(&mut f, &panels, &quad_spec())?.value;
    if let Some(e) = err {
        return Err(e);
    }
    let s = a + b;
    let rhs = if upper {
        gamma_signed(m + n, cfg)? * LogScaled::powf(s, -(m + n)) * hyp2f1_unit_a(m + n, m + 1.0, b / s, cfg)?
    } else {
        gamma_signed(m + n, cfg)? * LogScaled::powf(s, -(m + n)) * hyp2f1_unit_a(m + n, n + 1.0, a / s, cfg)?
    };
    let rhs = rhs.scale(if upper { 1.0 / m } else { 1.0 / n }) * LogScaled::powf(a, n);
    Ok(LogScaled::from_f64(lhs).rel_diff(rhs))
}

/// `F(1,b;c;z)` through the `c → b-c+2` reflection, with the partner at `1-z`.
fn unit_a_reflection(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    let b: f64 = rng.gen_range(1.0..5.0);
    let c = b + off_integer(rng, -0.9, 1.8, 0.1);
    let z: f64 = rng.gen_range(0.1..0.7);
    let lhs = hyp2f1_unit_a(b, c, z, cfg)?;
    let pi = std::f64::consts::PI;
    let k = (gamma_signed(c, cfg)? / (gamma_signed(b, cfg)? * gamma_signed(c - b, cfg)?)).scale(pi / (pi * (b - c)).sin());
    let power = -(LogScaled::powf(1.0 - z, c - b - 1.0) * LogScaled::powf(z, 1.0 - c));
    let partner = gamma_signed(b, cfg)? / (gamma_signed(c - 1.0, cfg)? * gamma_signed(b - c + 2.0, cfg)?)
        * hyp2f1_unit_a(b, b - c + 2.0, 1.0 - z, cfg)?;
    Ok(deviation(lhs, &[k * power, k * partner]))
}

/// `F(1, b; n+L+2; z) = f¹ F(1, b; n'-L+1; 1-z) - g`.
fn helper_split(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    let n: f64 = rng.gen_range(0.5..6.0);
    let np = off_integer(rng, 0.5, 6.0, 0.1);
    let l = rng.gen_range(0..=(np.floor() as u32).min(3));
    let p = RadialParams::new(n, np, rng.gen_range(0.3..3.0), rng.gen_range(0.3..3.0))?;
    let h = compute_helpers(&p, l, cfg)?;
    let lf = l as f64;
    let lhs = hyp2f1_unit_a(p.b(), n + lf + 2.0, p.z(), cfg)?;
    let split = hyp2f1_unit_a(p.b(), np - lf + 1.0, p.zp(), cfg)?.scale(h.f1);
    Ok(deviation(lhs, &[split, -h.g]))
}

fn shift_draw(rng: &mut ChaCha8Rng) -> (f64, f64, u32, f64) {
    let m = rng.gen_range(1..=4u32);
    let mf = m as f64;
    let c = off_integer(rng, mf + 0.3, mf + 6.0, 0.1);
    // keep every (b-c+1)_k factor away from zero
    let b = c - 1.0 + off_integer(rng, -3.0, 4.0, 0.1);
    let b = if b <= 0.2 { b + 4.0 } else { b };
    (b, c, m, rng.gen_range(0.1..0.7))
}

/// `F(1,b;c;z)` from `F(1,b;c-m;z)` plus a finite sum.
fn c_shift_down(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    let (b, c, m, z) = shift_draw(rng);
    shift_down_case(b, c, m, z, cfg)
}

fn shift_down_case(b: f64, c: f64, m: u32, z: f64, cfg: &PrecisionConfig) -> Result<f64> {
    let q = (z - 1.0) / z;
    let lhs = hyp2f1_unit_a(b, c, z, cfg)?;
    let head = pochhammer(1.0 - c, m) / pochhammer(b - c + 1.0, m) * LogScaled::from_f64(q).powi(m as i32);
    let mut terms = vec![head * hyp2f1_unit_a(b, c - m as f64, z, cfg)?];
    for k in 1..=m {
        let t = pochhammer(1.0 - c, k) / pochhammer(b - c + 1.0, k) * LogScaled::from_f64(q).powi(k as i32 - 1);
        terms.push(t.scale(1.0 / z));
    }
    Ok(deviation(lhs, &terms))
}

/// The inverse step: `F(1,b;c-m;z)` from `F(1,b;c;z)`.
fn c_shift_up(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    let (b, c, m, z) = shift_draw(rng);
    let q = (z - 1.0) / z;
    let lhs = hyp2f1_unit_a(b, c - m as f64, z, cfg)?;
    let qm = LogScaled::from_f64(q).powi(-(m as i32));
    let mut terms = vec![pochhammer(b - c + 1.0, m) / pochhammer(1.0 - c, m) * qm * hyp2f1_unit_a(b, c, z, cfg)?];
    for k in 1..=m {
        let kf = k as f64;
        let t = pochhammer(b - c + 1.0 + kf, m - k) / pochhammer(1.0 - c + kf, m - k)
            * LogScaled::from_f64(q).powi(k as i32 - 1);
        terms.push(-(qm * t.scale(1.0 / z)));
    }
    Ok(deviation(lhs, &terms))
}

/// `F(c)` from `F(c-1)` and `F(c-2)` at `a = 1`.
fn three_term_contiguous(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    let a = 1.0;
    let c: f64 = rng.gen_range(2.5..8.0);
    let b = c - 1.0 + off_integer(rng, -1.5, 6.0, 0.1);
    let b = if b <= 0.2 { b + 3.0 } else { b };
    let z: f64 = rng.gen_range(0.05..0.75);
    let den = (a - c + 1.0) * (b - c + 1.0) * z;
    let c1 = (c - 1.0) * (2.0 - c - (a + b - 2.0 * c + 3.0) * z) / den;
    let c2 = (c - 1.0) * (c - 2.0) * (1.0 - z) / den;
    let lhs = hyp2f1_unit_a(b, c, z, cfg)?;
    let terms = [hyp2f1_unit_a(b, c - 1.0, z, cfg)?.scale(c1), hyp2f1_unit_a(b, c - 2.0, z, cfg)?.scale(c2)];
    Ok(deviation(lhs, &terms))
}

/// `B_z(a,b) = B(a,b) - B_{1-z}(b,a)`, with the left side by quadrature.
fn inc_beta_complement(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    let a: f64 = rng.gen_range(1.0..6.0);
    let b: f64 = rng.gen_range(1.0..6.0);
    let z: f64 = rng.gen_range(0.2..0.9);
    let mut f = |t: f64| {
        if t <= 0.0 {
            return 0.0;
        }
        ((a - 1.0) * t.ln() + (b - 1.0) * (-t).ln_1p()).exp()
    };
    let lhs = integrate(&mut f, &[Panel::Finite(0.0, z)], &quad_spec())?.value;
    let direct = inc_beta(a, b, z, cfg)?;
    let terms = [beta(a, b)?, -inc_beta(b, a, 1.0 - z, cfg)?];
    Ok(deviation(LogScaled::from_f64(lhs), &terms).max(deviation(direct, &terms)))
}

/// The `1 - z` connection formula against the direct series.
fn one_minus_z_connection(rng: &mut ChaCha8Rng, cfg: &PrecisionConfig) -> Result<f64> {
    let a: f64 = rng.gen_range(0.3..3.0);
    let b: f64 = rng.gen_range(0.3..3.0);
    let s = off_integer(rng, -1.5, 3.0, 0.1);
    let c = a + b + s;
    if c <= 0.2 {
        return one_minus_z_connection(rng, cfg);
    }
    connection_case(a, b, c, rng.gen_range(0.3..0.7), cfg)
}

fn connection_case(a: f64, b: f64, c: f64, z: f64, cfg: &PrecisionConfig) -> Result<f64> {
    let s = c - a - b;
    let lhs = hyp2f1_general(a, b, c, z, cfg)?;
    let gc = gamma_signed(c, cfg)?;
    let t1 = gc * gamma_signed(-s, cfg)? / (gamma_signed(a, cfg)? * gamma_signed(b, cfg)?)
        * LogScaled::powf(1.0 - z, s)
        * hyp2f1_general(c - a, c - b, s + 1.0, 1.0 - z, cfg)?;
    let t2 = gc * gamma_signed(s, cfg)? / (gamma_signed(c - a, cfg)? * gamma_signed(c - b, cfg)?)
        * hyp2f1_general(a, b, 1.0 - s, 1.0 - z, cfg)?;
    Ok(deviation(lhs, &[t1, t2]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_holds() {
        let report = identity_suite(12, 7);
        assert_eq!(report.rows.len(), CHECKS.len());
        for row in &report.rows {
            assert!(row.pass, "{} deviates by {:e}", row.name, row.max_rel_dev);
        }
    }

    #[test]
    fn fixed_cases() {
        let cfg = PrecisionConfig::default();
        assert!(laplace_case(1.0, 2.0, 1.0, 1.0, true, &cfg).unwrap() < IDENTITY_TOL);
        assert_eq!(shift_down_case(2.5, 3.7, 0, 0.4, &cfg).unwrap(), 0.0);
        assert!(connection_case(0.75, 0.75, 2.25, 0.5, &cfg).unwrap() < 1e-14);
    }

    #[test]
    fn seeded_draws_repeat() {
        assert_eq!(identity_suite(3, 11), identity_suite(3, 11));
    }
}
