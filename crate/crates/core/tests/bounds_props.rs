use proptest::prelude::*;

use spectral_moore_core::bounds::{b_upper, compare, m_bound, ty_improved, v_upper, Value};
use spectral_moore_core::lpcert::{build_certificate, lp_bound};
use spectral_moore_core::orthopoly::spectral_radius_edge;
use spectral_moore_core::spectra::{build_quotient, second_eigenvalue_b, QuotientKind};
use spectral_moore_core::theta::Theta;

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

proptest! {
    #![proptest_config(cfg(300))]

    #[test]
    fn bipartite_bound_never_exceeds_general(k in 3u64..9, frac in 0.001f64..0.999) {
        let theta = Theta::from_f64(frac * spectral_radius_edge(k));
        let cmp = compare(k, &theta).unwrap();
        prop_assert!(cmp.consistent(), "{:?}", cmp);
    }

    #[test]
    fn bipartite_bound_is_monotone(k in 3u64..9, a in 0.0f64..0.998, b in 0.0f64..0.998) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let edge = spectral_radius_edge(k);
        let m_lo = b_upper(k, &Theta::from_f64(lo * edge)).unwrap().value.to_f64();
        let m_hi = b_upper(k, &Theta::from_f64(hi * edge)).unwrap().value.to_f64();
        prop_assert!(m_lo <= m_hi * (1.0 + 1e-9));
    }

    #[test]
    fn bound_recovers_quotient_parameters(k in 3u64..8, t in 4usize..9, frac in 0.05f64..0.95) {
        let c = 1.0 + frac * (k as f64 - 1.0);
        let theta = second_eigenvalue_b(k, t, &spectral_moore_core::poly::f64_to_rat(c).unwrap()).unwrap();
        let r = b_upper(k, &Theta::from_f64(theta)).unwrap();
        prop_assert_eq!(r.t, t);
        prop_assert!(rel_close(r.c.to_f64(), c, 1e-6), "c = {} vs {}", r.c.to_f64(), c);
        let m = m_bound(k, t, &Value::Approx(c)).unwrap().to_f64();
        prop_assert!(rel_close(r.value.to_f64(), m, 1e-6));
    }

    #[test]
    fn quotient_spectrum_contains_second_eigenvalue(k in 3u64..8, t in 4usize..9, frac in 0.0f64..1.0) {
        let c = 1.0 + frac * (k as f64 - 1.0);
        let cq = spectral_moore_core::poly::f64_to_rat(c).unwrap();
        let ev = build_quotient(QuotientKind::B, k, t, &cq).unwrap().numeric_spectrum();
        prop_assert!(rel_close(ev[0], k as f64, 1e-9));
        prop_assert!(rel_close(ev[1], second_eigenvalue_b(k, t, &cq).unwrap(), 1e-8));
    }

    #[test]
    fn lp_certificate_is_nonnegative_and_tight(k in 3u64..8, t in 4usize..9, frac in 0.0f64..1.0) {
        let c = 1.0 + frac * (k as f64 - 1.0);
        let cq = spectral_moore_core::poly::f64_to_rat(c).unwrap();
        let theta = Theta::from_f64(second_eigenvalue_b(k, t, &cq).unwrap());
        let cert = build_certificate(k, t, &Value::Approx(c), &theta).unwrap();
        prop_assert!(cert.coefficients_nonnegative(), "{:?}", cert.f);
        let lp = lp_bound(k, &[], &cert).unwrap();
        let m = m_bound(k, t, &Value::Approx(c)).unwrap().to_f64();
        prop_assert!(rel_close(lp.bound.to_f64(), m, 1e-6), "{} vs {}", lp.bound.to_f64(), m);
    }

    #[test]
    fn improved_small_theta_bound_is_stronger(k in 3u64..40, frac in 0.01f64..0.99) {
        let kf = k as f64;
        let lo = kf.sqrt().sqrt();
        let hi = (kf - 1.0).sqrt();
        let theta = lo + frac * (hi - lo);
        let r = ty_improved(k, &Theta::from_f64(theta)).unwrap();
        prop_assert!(r.strict);
        prop_assert!(r.improved.to_f64() < r.previous.to_f64());
    }
}

#[test]
fn general_bound_matches_petersen() {
    let r = v_upper(3, &Theta::from_integer(1)).unwrap();
    assert_eq!(r.value, Value::int(10));
    let r = b_upper(3, &Theta::from_integer(1)).unwrap();
    assert_eq!(r.value, Value::int(8));
}
