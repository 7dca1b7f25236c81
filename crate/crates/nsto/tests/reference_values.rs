// Values from tests/oracle_scripts/radial_reference.py (40-digit quadrature
// over incomplete gammas).
use nsto::power::{breit_n, breit_v};
use nsto::radial::{ladder, radial_closed_form, radial_direct_series, radial_generalized, ClosedForm, RadialParams};
use nsto::{LogScaled, PrecisionConfig};

const RADIAL: [(f64, f64, f64, f64, u32, f64); 11] = [
    (2.5, 3.7, 1.1, 1.3, 0, 2.8679211243677360044),
    (2.5, 3.7, 1.1, 1.3, 1, 1.8095456123860744842),
    (2.5, 3.7, 1.1, 1.3, 5, 0.66540889293422566399),
    (99.5, 99.51, 1.1, 1.2, 0, 7.4694637200686581017e+299),
    (99.5, 99.51, 1.1, 1.2, 10, 2.9198333791215858755e+299),
    (99.5, 99.51, 1.1, 1.2, 40, 9.021937444254093678e+298),
    (1.1, 119.7, 0.3, 10.0, 0, 3.3608113813071654872e+77),
    (1.1, 119.7, 0.3, 10.0, 25, 1.0531199709377165852e+76),
    (50.25, 7.75, 9.0, 0.4, 3, 2.3198775805841819089e+21),
    (50.25, 7.75, 9.0, 0.4, 20, 94987378377426529240.0),
    (3.3, 3.3, 2.0, 2.0, 2, 0.039838766921198488081),
];

const BREIT_N: [(f64, f64, f64, f64, u32, f64); 2] =
    [(5.5, 4.5, 1.2, 2.1, 2, 0.34887106062570432285), (3.25, 6.5, 0.8, 1.7, 0, 3.4323625052887734829)];

const BREIT_V: [(f64, f64, f64, f64, f64, f64, u32, f64); 2] = [
    (2.5, 1.5, 1.1, 0.8, 3.5, 1.4, 1, 0.012415555255675738395),
    (3.0, 0.0, 1.0, 1.0, 4.0, 2.0, 0, -0.029296875),
];

fn cfg() -> PrecisionConfig {
    PrecisionConfig::default()
}

#[test]
fn series_and_ladder_match_reference() {
    for (n, np, z, zp, l, want) in RADIAL {
        let p = RadialParams::new(n, np, z, zp).unwrap();
        let want = LogScaled::from_f64(want);
        let s = radial_direct_series(&p, l, &cfg()).unwrap();
        assert!(s.rel_diff(want) < 1e-13, "series {p:?} L={l}: {s} vs {want}");
        let t = ladder(&p, l, &cfg()).unwrap();
        assert!(t.r[l as usize].rel_diff(want) < 1e-13, "ladder {p:?} L={l}: {} vs {want}", t.r[l as usize]);
        let g = radial_generalized(&p, l, l as f64 + 1.0, false, &cfg()).unwrap();
        assert!(g.rel_diff(want) < 1e-13, "generalized {p:?} L={l}");
    }
}

#[test]
fn closed_forms_match_reference_where_accepted() {
    let mut accepted = 0;
    for (n, np, z, zp, l, want) in RADIAL {
        let p = RadialParams::new(n, np, z, zp).unwrap();
        for form in ClosedForm::ALL {
            if let Ok(v) = radial_closed_form(&p, l, form, &cfg()) {
                assert!(v.rel_diff(LogScaled::from_f64(want)) < 1e-10, "{form:?} {p:?} L={l}");
                accepted += 1;
            }
        }
    }
    assert!(accepted >= 10);
}

#[test]
fn breit_integrals_match_reference() {
    for (n, np, z, zp, l, want) in BREIT_N {
        let v = breit_n(n, np, z, zp, l, &cfg()).unwrap().to_f64();
        assert!((v / want - 1.0).abs() < 1e-13, "N {n} {np} L={l}: {v}");
    }
    for (n1, n1p, z1, z1p, n2, z2, l, want) in BREIT_V {
        let v = breit_v(n1, n1p, z1, z1p, n2, z2, l, &cfg()).unwrap().to_f64();
        assert!((v / want - 1.0).abs() < 1e-13, "V {n1} {n1p} L={l}: {v}");
    }
}
