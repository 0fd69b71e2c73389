use num_complex::Complex64;
use proptest::prelude::*;

use spectral_moore_core::bounds::Value;
use spectral_moore_core::feasibility::{
    check_multiplicities, drg_spectrum, f_last, mod_case, multiplicity, multiplicity_classical, s_derivative,
    DrgCandidate, Table7,
};
use spectral_moore_core::graphs::{table1_entries, Table1Entry};
use spectral_moore_core::lpcert::{build_certificate, lp_bound};
use spectral_moore_core::poly::rat;
use spectral_moore_core::theta::Theta;

/// Root of `tau + 1/tau = x / sqrt(k - 1)` on the unit circle.
fn tau_of(k: u64, x: f64) -> Complex64 {
    let s = ((k - 1) as f64).sqrt();
    let y = x / (2.0 * s);
    Complex64::new(y, (1.0 - y * y).max(0.0).sqrt())
}

fn close_c(z: Complex64, x: f64, tol: f64) -> bool {
    (z.re - x).abs() <= tol * x.abs().max(1.0) && z.im.abs() <= tol * x.abs().max(1.0)
}

fn check_closed_forms(k: u64, d: usize, c: u64) {
    let cand = DrgCandidate::new(k, d, c).unwrap();
    let (kf, cf) = (k as f64, c as f64);
    for theta in drg_spectrum(&cand).unwrap().positive {
        let tau = tau_of(k, theta);
        let t2 = tau * tau;
        let lhs = tau.powu(2 * d as u32 - 2);
        let rhs = ((cf - 1.0) * t2 + (kf - 1.0)) / ((kf - 1.0) * t2 + (cf - 1.0));
        assert!((lhs - rhs).norm() < 1e-8, "tau relation at {:?}", (k, d, c));

        let f = -cf * (kf - cf) * (kf - 1.0).powf((d as f64 - 2.0) / 2.0)
            / (tau.powu(d as u32 - 2) * ((kf - 1.0) * t2 + (cf - 1.0)));
        assert!(close_c(f, f_last(k, d, c, theta), 1e-8), "f closed form at {:?}", (k, d, c));

        let df = d as f64;
        let bracket = (df - 1.0) * (kf - 1.0) * (cf - 1.0) * (t2 * t2 + 1.0)
            + (df * (kf - 1.0).powi(2) + (df - 2.0) * (cf - 1.0).powi(2)) * t2;
        let sd = 2.0 * (kf - 1.0).powf((df - 4.0) / 2.0) * bracket
            / (tau.powu(d as u32 - 2) * (t2 - 1.0).powu(2) * ((kf - 1.0) * t2 + (cf - 1.0)));
        assert!(close_c(sd, s_derivative(k, d, c, theta), 1e-8), "S' closed form at {:?}", (k, d, c));

        let a = multiplicity(&cand, theta).unwrap();
        let b = multiplicity_classical(&cand, theta);
        assert!((a - b).abs() <= 1e-8 * a.abs().max(1.0));
    }
}

#[test]
fn closed_forms_on_known_parameters() {
    for (k, d, c) in [(3, 3, 1), (3, 4, 1), (3, 6, 1), (6, 4, 2), (3, 3, 2), (4, 3, 1), (5, 3, 2), (3, 4, 2), (5, 4, 4)] {
        check_closed_forms(k, d, c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn closed_forms_on_random_parameters(k in 3u64..12, d in 4usize..16, c in 1u64..11) {
        prop_assume!(c < k);
        check_closed_forms(k, d, c);
    }

    #[test]
    fn multiplicities_always_sum_to_order(k in 3u64..12, d in 3usize..16, c in 1u64..11) {
        prop_assume!(c < k);
        let r = check_multiplicities(&DrgCandidate::new(k, d, c).unwrap()).unwrap();
        prop_assert!(r.total_ok, "{:?}", (k, d, c, r.total));
    }
}

fn drg_rows() -> Vec<Table1Entry> {
    table1_entries().into_iter().filter(|e| e.k >= 3 && e.c < e.k && e.d >= 3).collect()
}

#[test]
fn multiplicities_match_eigensolver() {
    for e in drg_rows() {
        let g = e.graph.build().unwrap();
        let spec = g.spectrum();
        let cand = DrgCandidate::new(e.k, e.d, e.c).unwrap();
        assert_eq!(cand.n, rat(g.n() as i64));
        let drg = drg_spectrum(&cand).unwrap();
        for theta in drg.nontrivial() {
            let count = spec.iter().filter(|x| (*x - theta).abs() < 1e-6).count() as f64;
            let m = multiplicity(&cand, theta).unwrap();
            assert!((m - count).abs() < 1e-6, "{}: m({}) = {} vs {}", e.name, theta, m, count);
        }
        let r = check_multiplicities(&cand).unwrap();
        assert!(r.feasible(), "{}", e.name);
    }
}

#[test]
fn spectra_are_symmetric() {
    for e in table1_entries() {
        let s = e.graph.build().unwrap().spectrum();
        for (a, b) in s.iter().zip(s.iter().rev()) {
            assert!((a + b).abs() < 1e-8, "{}", e.name);
        }
    }
}

#[test]
fn lp_bound_is_attained_by_known_graphs() {
    for e in table1_entries() {
        let g = e.graph.build().unwrap();
        let (t, c) = e.certificate_params();
        let cert = build_certificate(e.k, t, &Value::int(c as i64), &e.theta()).unwrap();
        assert!(cert.coefficients_positive(), "{}: {:?}", e.name, cert.f);
        let spectrum: Vec<Theta> = g
            .spectrum()
            .iter()
            .skip(1)
            .take(g.n() - 2)
            .map(|x| {
                let sq = (x * x).round() as i64;
                assert!((x * x - sq as f64).abs() < 1e-6);
                let t = Theta::from_square(rat(sq));
                if *x < 0.0 {
                    t.negated()
                } else {
                    t
                }
            })
            .collect();
        let lp = lp_bound(e.k, &spectrum, &cert).unwrap();
        assert_eq!(lp.bound, Value::int(g.n() as i64), "{}", e.name);
        assert!(lp.equality, "{}", e.name);
    }
}

#[test]
fn residue_cases_admit_actual_diameters() {
    let table = Table7::builtin();
    for e in drg_rows() {
        let mc = mod_case(e.c, e.k, Some(&table)).unwrap();
        assert!(mc.admits(e.d), "{}", e.name);
        assert!(mc.table7_row.unwrap().contains(&e.d), "{}", e.name);
    }
    for (k, d, c) in [(3, 6, 1), (6, 4, 2)] {
        let mc = mod_case(c, k, Some(&table)).unwrap();
        assert!(mc.admits(d));
    }
}

#[test]
fn table7_rows_respect_their_constraints() {
    let t = Table7::builtin();
    assert!(t.inconsistencies().is_empty());
    assert!(!t.contains(15) && t.contains(14) && t.contains(162));
}
