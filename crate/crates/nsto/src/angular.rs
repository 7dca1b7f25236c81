//! Gaunt coefficients, `A`-coefficients and the `(L, M)` channels of a
//! four-orbital integral.
//!
//! Complex harmonics follow Condon–Shortley phases. The real harmonics are
//!
//! ```text
//! S_{l,+m} = √2 (-1)^m Re Y_{lm},   S_{l,0} = Y_{l0},   S_{l,-m} = √2 (-1)^m Im Y_{lm}   (m > 0)
//! ```
//!
//! and their product expansion is factored as `C^{L|M|} · A^M_{mm'}`, where
//! `C` is the complex coefficient for the reference pair `(|m|, ±|m'|)` and
//! `A` depends only on `m`, `m'` and `M`.
use crate::numerics::ln_gamma;

/// Which spherical harmonics the orbitals carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Complex,
    Real,
}

/// Angular quantum numbers of the four orbitals of `⟨1 1' | 2 2'⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AngularKey {
    pub l1: i32,
    pub m1: i32,
    pub l1p: i32,
    pub m1p: i32,
    pub l2: i32,
    pub m2: i32,
    pub l2p: i32,
    pub m2p: i32,
}

impl AngularKey {
    pub fn is_valid(&self) -> bool {
        [(self.l1, self.m1), (self.l1p, self.m1p), (self.l2, self.m2), (self.l2p, self.m2p)]
            .iter()
            .all(|&(l, m)| l >= 0 && m.abs() <= l)
    }
}

fn ln_fact(n: i32) -> f64 {
    ln_gamma(n as f64 + 1.0).expect("non-negative factorial argument")
}

/// Wigner 3j symbol by the Racah sum, with factorials through `ln Γ`.
pub fn wigner3j(j1: i32, j2: i32, j3: i32, m1: i32, m2: i32, m3: i32) -> f64 {
    if m1 + m2 + m3 != 0 || m1.abs() > j1 || m2.abs() > j2 || m3.abs() > j3 {
        return 0.0;
    }
    if j3 < (j1 - j2).abs() || j3 > j1 + j2 {
        return 0.0;
    }
    let ln_pre = 0.5
        * (ln_fact(j1 + j2 - j3) + ln_fact(j1 - j2 + j3) + ln_fact(-j1 + j2 + j3) - ln_fact(j1 + j2 + j3 + 1)
            + ln_fact(j1 + m1)
            + ln_fact(j1 - m1)
            + ln_fact(j2 + m2)
            + ln_fact(j2 - m2)
            + ln_fact(j3 + m3)
            + ln_fact(j3 - m3));
    let kmin = 0.max(j2 - j3 - m1).max(j1 - j3 + m2);
    let kmax = (j1 + j2 - j3).min(j1 - m1).min(j2 + m2);
    if kmin > kmax {
        return 0.0;
    }
    let terms: Vec<(f64, f64)> = (kmin..=kmax)
        .map(|k| {
            let ln_den = ln_fact(k)
                + ln_fact(j3 - j2 + k + m1)
                + ln_fact(j3 - j1 + k - m2)
                + ln_fact(j1 + j2 - j3 - k)
                + ln_fact(j1 - k - m1)
                + ln_fact(j2 - k + m2);
            (if k % 2 == 0 { 1.0 } else { -1.0 }, ln_pre - ln_den)
        })
        .collect();
    let top = terms.iter().map(|t| t.1).fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = terms.iter().map(|&(s, l)| s * (l - top).exp()).sum();
    let phase = if (j1 - j2 - m3).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    phase * sum * top.exp()
}

/// `c^L(lm, l'm') = √(4π/(2L+1)) ∫ Y*_{lm} Y_{L,m-m'} Y_{l'm'} dΩ`.
pub fn gaunt_complex(big_l: i32, l: i32, m: i32, lp: i32, mp: i32) -> f64 {
    if big_l < 0 || (l + lp + big_l) % 2 != 0 || big_l < (l - lp).abs() || big_l > l + lp {
        return 0.0;
    }
    if m.abs() > l || mp.abs() > lp || (m - mp).abs() > big_l {
        return 0.0;
    }
    let phase = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    phase
        * (((2 * l + 1) * (2 * lp + 1)) as f64).sqrt()
        * wigner3j(l, big_l, lp, 0, 0, 0)
        * wigner3j(l, big_l, lp, -m, m - mp, mp)
}

/// `C^{L|M|}(lm, l'm')` in the chosen convention; exactly zero off the selection rules.
///
/// Complex: the coefficient above when `Mabs = |m - m'|`. Real: the complex
/// coefficient of the reference pair `(|m|, ±|m'|)` whose difference is `Mabs`.
pub fn gaunt_c(big_l: i32, mabs: i32, l: i32, m: i32, lp: i32, mp: i32, conv: Convention) -> f64 {
    match conv {
        Convention::Complex => {
            if mabs != (m - mp).abs() {
                return 0.0;
            }
            gaunt_complex(big_l, l, m, lp, mp)
        }
        Convention::Real => match reference_pair(mabs, m, mp) {
            Some((a, b)) => gaunt_complex(big_l, l, a, lp, b),
            None => 0.0,
        },
    }
}

fn reference_pair(mabs: i32, m: i32, mp: i32) -> Option<(i32, i32)> {
    let (a, b) = (m.abs(), mp.abs());
    if (a - b).abs() == mabs {
        Some((a, b))
    } else if a + b == mabs {
        Some((a, -b))
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Cx(f64, f64);

impl std::ops::Mul for Cx {
    type Output = Cx;
    fn mul(self, o: Cx) -> Cx {
        Cx(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
}

/// Coefficient of `Y_{l,mu}` in `S_{l,m}`.
fn u_entry(m: i32, mu: i32) -> Cx {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let k = m.abs();
    let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
    match (m.signum(), mu) {
        (0, 0) => Cx(1.0, 0.0),
        (1, x) if x == k => Cx(sgn * h, 0.0),
        (1, x) if x == -k => Cx(h, 0.0),
        (-1, x) if x == -k => Cx(0.0, h),
        (-1, x) if x == k => Cx(0.0, -sgn * h),
        _ => Cx(0.0, 0.0),
    }
}

fn partners(m: i32) -> Vec<i32> {
    if m == 0 {
        vec![0]
    } else {
        vec![m.abs(), -m.abs()]
    }
}

/// Real-harmonic coupling factor: `Re Σ U_{m,μ} U_{m',μ'} U_{M,-μ-μ'} (-1)^μ`.
fn real_a(big_m: i32, m: i32, mp: i32) -> f64 {
    let mut acc = Cx(0.0, 0.0);
    for mu in partners(m) {
        for mup in partners(mp) {
            let phase = if mu.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let t = u_entry(m, mu) * u_entry(mp, mup) * u_entry(big_m, -mu - mup);
            acc = Cx(acc.0 + phase * t.0, acc.1 + phase * t.1);
        }
    }
    debug_assert!(acc.1.abs() < 1e-14, "real coupling picked up an imaginary part");
    if acc.0.abs() < 1e-15 {
        0.0
    } else {
        acc.0
    }
}

/// `A^M_{mm'}`: a Kronecker delta `M = m - m'` for complex harmonics, the
/// real-harmonic coupling table otherwise.
pub fn a_coeff(big_m: i32, m: i32, mp: i32, conv: Convention) -> f64 {
    match conv {
        Convention::Complex => {
            if big_m == m - mp {
                1.0
            } else {
                0.0
            }
        }
        Convention::Real => real_a(big_m, m, mp),
    }
}

/// `√(4π/(2L+1)) ∫ S_{lm} S_{l'm'} S_{LM} dΩ` for real harmonics.
pub fn real_gaunt(big_l: i32, big_m: i32, l: i32, m: i32, lp: i32, mp: i32) -> f64 {
    gaunt_c(big_l, big_m.abs(), l, m, lp, mp, Convention::Real) * a_coeff(big_m, m, mp, Convention::Real)
}

/// Every `(L, M)` allowed by the triangle bounds, parity and the support of
/// the `A`-coefficients of both pairs, in ascending order.
pub fn lm_channels(key: &AngularKey, conv: Convention) -> Vec<(i32, i32)> {
    if !key.is_valid() {
        return Vec::new();
    }
    let lo = (key.l1 - key.l1p).abs().max((key.l2 - key.l2p).abs());
    let hi = (key.l1 + key.l1p).min(key.l2 + key.l2p);
    let mut out = Vec::new();
    for big_l in lo..=hi {
        if (key.l1 + key.l1p + big_l) % 2 != 0 || (key.l2 + key.l2p + big_l) % 2 != 0 {
            continue;
        }
        for big_m in -big_l..=big_l {
            let a1 = a_coeff(big_m, key.m1, key.m1p, conv);
            let a2 = a_coeff(big_m, key.m2, key.m2p, conv);
            if a1 != 0.0 && a2 != 0.0 {
                out.push((big_l, big_m));
            }
        }
    }
    out
}
