use nsto::angular::{gaunt_complex, wigner3j, Convention};
use nsto::oracle::quad_gaunt;
use nsto::power::kernel_relation_residual;
use nsto::radial::{ladder, ladder_with, radial_direct_series, RadialParams, RecoveryMode};
use nsto::{LogScaled, PrecisionConfig};
use proptest::prelude::*;

fn cfg() -> PrecisionConfig {
    PrecisionConfig::default()
}

fn power() -> impl Strategy<Value = f64> {
    (1.1f64..120.0).prop_filter("non-integer", |x| (x - x.round()).abs() > 0.02)
}

fn params() -> impl Strategy<Value = RadialParams> {
    (power(), power(), 0.3f64..10.0, 0.3f64..10.0).prop_map(|(n, np, z, zp)| RadialParams::new(n, np, z, zp).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ladder_tracks_series(p in params(), l_max in 0u32..=40) {
        let t = ladder(&p, l_max, &cfg()).unwrap();
        for l in 0..=l_max {
            let s = radial_direct_series(&p, l, &cfg()).unwrap();
            prop_assert!(t.r[l as usize].rel_diff(s) < 1e-10, "L={} {} vs {}", l, t.r[l as usize], s);
        }
    }

    #[test]
    fn helper_recovery_agrees_with_two_channels(p in params(), l_max in 0u32..=25) {
        let a = ladder(&p, l_max, &cfg()).unwrap();
        let b = ladder_with(&p, l_max, RecoveryMode::Helpers, &cfg()).unwrap();
        for (x, y) in a.r.iter().zip(&b.r) {
            prop_assert!(x.rel_diff(*y) < 1e-10, "{} vs {}", x, y);
        }
    }

    #[test]
    fn symmetric_under_electron_exchange(p in params(), l in 0u32..=25) {
        let a = radial_direct_series(&p, l, &cfg()).unwrap();
        let b = radial_direct_series(&p.swap(), l, &cfg()).unwrap();
        prop_assert!(a.rel_diff(b) < 1e-13);
    }

    #[test]
    fn log_scaled_arithmetic_matches_f64(a in -1e100f64..1e100, b in -1e100f64..1e100) {
        let (x, y) = (LogScaled::from_f64(a), LogScaled::from_f64(b));
        prop_assert_eq!((x * y).to_f64(), a * b);
        prop_assert_eq!((x + y).to_f64(), a + b);
        prop_assert_eq!((x - y).to_f64(), a - b);
        if b != 0.0 {
            prop_assert_eq!((x / y).to_f64(), a / b);
        }
    }

    #[test]
    fn kernels_obey_three_term_relation(mu in 0i32..=4, l in 0u32..=6, r1 in 0.05f64..20.0, r2 in 0.05f64..20.0) {
        prop_assume!((r1 - r2).abs() > 1e-3 * r1.max(r2));
        let res = kernel_relation_residual(mu, l, r1, r2, &cfg()).unwrap();
        prop_assert!(res < 1e-11, "residual {}", res);
    }

    #[test]
    fn three_j_column_swap_sign(j1 in 0i32..=6, j2 in 0i32..=6, j3 in 0i32..=6, m1 in -6i32..=6, m2 in -6i32..=6) {
        let m3 = -m1 - m2;
        let a = wigner3j(j1, j2, j3, m1, m2, m3);
        let b = wigner3j(j2, j1, j3, m2, m1, m3);
        let sign = if (j1 + j2 + j3) % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((a - sign * b).abs() < 1e-13);
    }

    #[test]
    fn gaunt_matches_angular_quadrature(big_l in 0i32..=4, l in 0i32..=3, lp in 0i32..=3, m in -3i32..=3, mp in -3i32..=3) {
        prop_assume!(m.abs() <= l && mp.abs() <= lp && (m - mp).abs() <= big_l);
        let want = quad_gaunt(big_l, m - mp, l, m, lp, mp, Convention::Complex).unwrap();
        prop_assert!((gaunt_complex(big_l, l, m, lp, mp) - want).abs() < 1e-10);
    }
}
