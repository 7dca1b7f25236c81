use crate::error::ensure_domain;
use crate::numerics::{hyp2f1_complement, pochhammer, LogScaled};
use crate::oracle::{quad_2d, Density, QuadSpec, Region};
use crate::radial::{radial_generalized, RadialParams};
use crate::{Error, PrecisionConfig, Result};

/// One term `^μR^L` of the expansion of `r₁₂^μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerParams {
    pub mu: i32,
    pub base: RadialParams,
    pub l: u32,
}

impl PowerParams {
    pub fn new(mu: i32, base: RadialParams, l: u32) -> Result<Self> {
        ensure_domain!(mu <= 1 && mu != 0, "mu must be a non-zero integer <= 1, got {mu}");
        base.validate_exponents()?;
        Ok(PowerParams { mu, base, l })
    }
}

fn kernel_params(mu: i32, l: u32) -> (f64, f64, f64) {
    let m = mu as f64;
    let lf = l as f64;
    let (a, b) = if mu.rem_euclid(2) == 1 { (-0.5 - m / 2.0, lf - m / 2.0) } else { (lf - m / 2.0, -0.5 - m / 2.0) };
    (a, b, lf + 1.5)
}

fn kernel_prefactor(mu: i32, l: u32) -> f64 {
    let p = pochhammer(-(mu as f64) / 2.0, l);
    if p.is_zero() {
        return 0.0;
    }
    (p / pochhammer(0.5, l)).to_f64()
}

/// Radial factor of the `L`-th term in the expansion of `r₁₂^μ`:
/// `(-μ/2)_L / (1/2)_L · r>^μ (r</r>)^L ₂F₁(a, b; L+3/2; (r</r>)²)`.
pub fn sack_kernel(mu: i32, l: u32, r1: f64, r2: f64, cfg: &PrecisionConfig) -> Result<f64> {
    ensure_domain!(r1 > 0.0 && r2 > 0.0, "radii must be positive, got {r1}, {r2}");
    if r1 == r2 && mu <= -2 {
        return Err(Error::Singular(r1));
    }
    let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
    let t = lo / hi;
    let pre = kernel_prefactor(mu, l);
    if pre == 0.0 {
        return Ok(0.0);
    }
    let (a, b, c) = kernel_params(mu, l);
    let w = (hi - lo) * (hi + lo) / (hi * hi);
    let f = hyp2f1_complement(a, b, c, t * t, w, cfg)?.to_f64();
    Ok(pre * hi.powi(mu) * t.powi(l as i32) * f)
}

/// Pointwise residual of the three-term relation between the kernels at
/// `μ+2`, `μ` and `μ-2`, normalized by its largest term.
pub fn kernel_relation_residual(mu: i32, l: u32, r1: f64, r2: f64, cfg: &PrecisionConfig) -> Result<f64> {
    let (m, lf) = (mu as f64, l as f64);
    let s = r1 * r1 + r2 * r2;
    let d = r1 * r1 - r2 * r2;
    let terms = [
        (4.0 + 2.0 * lf + m) * (2.0 * lf - 2.0 - m) * sack_kernel(mu + 2, l, r1, r2, cfg)?,
        2.0 * (m + 2.0).powi(2) * s * sack_kernel(mu, l, r1, r2, cfg)?,
        -m * (m + 2.0) * d * d * sack_kernel(mu - 2, l, r1, r2, cfg)?,
    ];
    let big = terms.iter().fold(0.0f64, |a, t| a.max(t.abs()));
    Ok(if big == 0.0 { 0.0 } else { terms.iter().sum::<f64>().abs() / big })
}

/// `^μR^L`: the radial integral with the `r₁₂^μ` kernel.
///
/// Terminating kernels (`μ = -1`, `μ = 1`) reduce to finitely many
/// [`radial_generalized`] terms; `μ = -2` has a logarithmic diagonal and is
/// integrated numerically; `μ <= -3` does not converge.
pub fn sack_radial(pp: &PowerParams, cfg: &PrecisionConfig) -> Result<LogScaled> {
    let PowerParams { mu, base, l } = *pp;
    ensure_domain!(mu <= 1 && mu != 0, "mu must be a non-zero integer <= 1, got {mu}");
    if mu <= -3 {
        return Err(Error::Divergence(format!(
            "the r12^{mu} kernel has a non-integrable singularity on r1 = r2"
        )));
    }
    let (a, b, c) = kernel_params(mu, l);
    if a <= 0.0 && a == a.round() {
        let pre = kernel_prefactor(mu, l);
        let mut coef = pre;
        let mut acc = LogScaled::ZERO;
        for k in 0..=(-a as u32) {
            let kf = k as f64;
            let lk = l + 2 * k;
            let term = radial_generalized(&base, lk, lk as f64 - mu as f64, false, cfg)?;
            acc = acc + term.scale(coef);
            coef *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
        }
        return Ok(acc);
    }
    let rho1 = Density::monomial(base.n, base.zeta);
    let rho2 = Density::monomial(base.nprime, base.zetaprime);
    let kernel = |r1: f64, r2: f64| sack_kernel(mu, l, r1, r2, cfg).unwrap_or(f64::NAN);
    let q = quad_2d(&rho1, &rho2, &kernel, Region::Full, &QuadSpec::from_config(cfg))?;
    Ok(q.value)
}

/// The four terms of the integrated three-term relation, all by quadrature:
/// `A·^{μ+2}R[n,n']`, `B·^μR[n+2,n']`, `B·^μR[n,n'+2]` and
/// `-μ(μ+2)∫∫ ρ₁ρ₂ (r₁²-r₂²)² 𝓡_{μ-2}`.
///
/// The last term is integrated as one piece: its three expanded parts
/// diverge separately for `μ = -1`.
pub fn mu_ladder_terms(pp: &PowerParams, spec: &QuadSpec, cfg: &PrecisionConfig) -> Result<[LogScaled; 4]> {
    let PowerParams { mu, base, l } = *pp;
    let (m, lf) = (mu as f64, l as f64);
    let quad = |n: f64, np: f64, kernel: &dyn Fn(f64, f64) -> f64| -> Result<LogScaled> {
        let rho1 = Density::monomial(n, base.zeta);
        let rho2 = Density::monomial(np, base.zetaprime);
        Ok(quad_2d(&rho1, &rho2, kernel, Region::Full, spec)?.value)
    };
    let k_up = |r1: f64, r2: f64| sack_kernel(mu + 2, l, r1, r2, cfg).unwrap_or(f64::NAN);
    let k_mid = |r1: f64, r2: f64| sack_kernel(mu, l, r1, r2, cfg).unwrap_or(f64::NAN);
    let k_down = |r1: f64, r2: f64| {
        let d = r1 * r1 - r2 * r2;
        d * d * sack_kernel(mu - 2, l, r1, r2, cfg).unwrap_or(f64::NAN)
    };
    let a = (4.0 + 2.0 * lf + m) * (2.0 * lf - 2.0 - m);
    let b = 2.0 * (m + 2.0).powi(2);
    let c = m * (m + 2.0);
    Ok([
        quad(base.n, base.nprime, &k_up)?.scale(a),
        quad(base.n + 2.0, base.nprime, &k_mid)?.scale(b),
        quad(base.n, base.nprime + 2.0, &k_mid)?.scale(b),
        quad(base.n, base.nprime, &k_down)?.scale(-c),
    ])
}

/// `|Σ terms| / max |term|`; zero when every term is zero.
pub fn mu_ladder_residual(terms: &[LogScaled]) -> f64 {
    let big = terms.iter().map(|t| t.abs()).fold(LogScaled::ZERO, |a, b| if b > a { b } else { a });
    if big.is_zero() {
        return 0.0;
    }
    let sum = terms.iter().fold(LogScaled::ZERO, |a, &b| a + b);
    sum.abs().ratio(big)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::radial_direct_series;

    #[test]
    fn coulomb_and_linear_kernels() {
        let cfg = PrecisionConfig::default();
        for l in 0..4 {
            let k = sack_kernel(-1, l, 0.7, 1.9, &cfg).unwrap();
            assert!((k - 0.7f64.powi(l as i32) / 1.9f64.powi(l as i32 + 1)).abs() < 1e-15);
        }
        let x: f64 = (0.5f64 / 1.5).powi(2);
        let k = sack_kernel(1, 0, 0.5, 1.5, &cfg).unwrap();
        assert!((k - 1.5 * (1.0 + x / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn inverse_square_log_form() {
        let cfg = PrecisionConfig::default();
        for &(r1, r2) in &[(0.5, 1.5), (1.0, 1.01), (2.0, 1.999_999), (3.0, 0.1)] {
            let want = ((r1 + r2) / (r1 - r2 as f64).abs()).ln() / (2.0 * r1 * r2);
            let got = sack_kernel(-2, 0, r1, r2, &cfg).unwrap();
            assert!((got / want - 1.0).abs() < 1e-12, "({r1},{r2}): {got} {want}");
        }
        assert!(matches!(sack_kernel(-2, 1, 1.0, 1.0, &cfg), Err(Error::Singular(_))));
    }

    #[test]
    fn pointwise_relation() {
        let cfg = PrecisionConfig::default();
        for mu in [-1, 1] {
            for l in 0..4 {
                for &(r1, r2) in &[(0.5, 1.5), (2.0, 0.3), (1.0, 0.9)] {
                    let r = kernel_relation_residual(mu, l, r1, r2, &cfg).unwrap();
                    assert!(r < 1e-13, "mu={mu} L={l} ({r1},{r2}): {r}");
                }
            }
        }
    }

    #[test]
    fn mu_minus_one_is_coulomb() {
        let cfg = PrecisionConfig::default();
        let base = RadialParams::new(3.5, 2.5, 1.0, 1.5).unwrap();
        let pp = PowerParams::new(-1, base, 2).unwrap();
        let want = radial_direct_series(&base, 2, &cfg).unwrap();
        assert!(sack_radial(&pp, &cfg).unwrap().rel_diff(want) < 1e-12);
        let pp = PowerParams { mu: -3, ..pp };
        assert!(matches!(sack_radial(&pp, &cfg), Err(Error::Divergence(_))));
        assert!(PowerParams::new(2, base, 0).is_err());
    }

    #[test]
    fn zero_terms_give_zero_residual() {
        assert_eq!(mu_ladder_residual(&[LogScaled::ZERO; 4]), 0.0);
    }
}
