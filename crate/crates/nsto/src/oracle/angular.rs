//! Angular quadrature of triple products of spherical harmonics.
use super::quad::{integrate, Panel, QuadSpec};
use crate::angular::Convention;
use crate::{Error, Result};
use std::f64::consts::PI;

/// `P_l^m(x)` for `m >= 0`, without the Condon–Shortley sign.
fn legendre(l: i32, m: i32, x: f64) -> f64 {
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= (2 * k - 1) as f64 * s;
    }
    if l == m {
        return pmm;
    }
    let mut p1 = x * (2 * m + 1) as f64 * pmm;
    if l == m + 1 {
        return p1;
    }
    let mut p0 = pmm;
    for ll in (m + 2)..=l {
        let p2 = ((2 * ll - 1) as f64 * x * p1 - (ll + m - 1) as f64 * p0) / (ll - m) as f64;
        p0 = p1;
        p1 = p2;
    }
    p1
}

fn norm(l: i32, m: i32) -> f64 {
    let mut ratio = 1.0;
    for k in (l - m + 1)..=(l + m) {
        ratio /= k as f64;
    }
    ((2 * l + 1) as f64 / (4.0 * PI) * ratio).sqrt()
}

/// `Y_{lm}(θ, φ)` with Condon–Shortley phase, as `(re, im)`.
pub fn spherical_harmonic(l: i32, m: i32, theta: f64, phi: f64) -> (f64, f64) {
    let k = m.abs();
    let mut v = norm(l, k) * legendre(l, k, theta.cos());
    if k % 2 == 1 {
        v = -v;
    }
    let (s, c) = (m as f64 * phi).sin_cos();
    let (re, im) = (v * c, v * s);
    if m < 0 && k % 2 == 1 {
        // Y_{l,-k} = (-1)^k conj(Y_{lk}); the phase above already used (-1)^k
        (-re, -im)
    } else {
        (re, im)
    }
}

/// Real harmonic `√2 N P_l^{|m|} cos(mφ)` / `sin(|m|φ)`, `N P_l^0` for `m = 0`.
pub fn real_harmonic(l: i32, m: i32, theta: f64, phi: f64) -> f64 {
    let k = m.abs();
    let base = norm(l, k) * legendre(l, k, theta.cos());
    match m.signum() {
        0 => base,
        1 => 2f64.sqrt() * base * (k as f64 * phi).cos(),
        _ => 2f64.sqrt() * base * (k as f64 * phi).sin(),
    }
}

/// `√(4π/(2L+1))` times the angular integral of
/// `Y*_{lm} Y_{LM} Y_{l'm'}` (complex) or `S_{lm} S_{LM} S_{l'm'}` (real).
pub fn quad_gaunt(big_l: i32, big_m: i32, l: i32, m: i32, lp: i32, mp: i32, conv: Convention) -> Result<f64> {
    for (ll, mm) in [(big_l, big_m), (l, m), (lp, mp)] {
        if ll < 0 || mm.abs() > ll {
            return Err(Error::Domain(format!("invalid harmonic ({ll}, {mm})")));
        }
    }
    let spec = QuadSpec { rel_tol: 1e-13, abs_floor: 1e-15, ..QuadSpec::default() };
    let inner_spec = QuadSpec { abs_floor: 1e-16, ..spec };
    let mut failure = None;
    let mut over_theta = |theta: f64| -> f64 {
        let mut over_phi = |phi: f64| -> f64 {
            match conv {
                Convention::Complex => {
                    let a = spherical_harmonic(l, m, theta, phi);
                    let b = spherical_harmonic(big_l, big_m, theta, phi);
                    let c = spherical_harmonic(lp, mp, theta, phi);
                    let ab = (a.0 * b.0 + a.1 * b.1, a.0 * b.1 - a.1 * b.0);
                    ab.0 * c.0 - ab.1 * c.1
                }
                Convention::Real => {
                    real_harmonic(l, m, theta, phi)
                        * real_harmonic(big_l, big_m, theta, phi)
                        * real_harmonic(lp, mp, theta, phi)
                }
            }
        };
        let panels: Vec<Panel> = (0..4).map(|k| Panel::Finite(k as f64 * PI / 2.0, (k + 1) as f64 * PI / 2.0)).collect();
        match integrate(&mut over_phi, &panels, &inner_spec) {
            Ok(e) => e.value * theta.sin(),
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        }
    };
    let panels: Vec<Panel> = (0..4).map(|k| Panel::Finite(k as f64 * PI / 4.0, (k + 1) as f64 * PI / 4.0)).collect();
    let est = integrate(&mut over_theta, &panels, &spec);
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(est?.value * (4.0 * PI / (2 * big_l + 1) as f64).sqrt())
}
