use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use proptest::prelude::*;

use spectral_moore_core::feasibility::{h_poly, DrgCandidate};
use spectral_moore_core::orthopoly::{p_sequence, Families};
use spectral_moore_core::poly::{rat, ratio};
use spectral_moore_core::spectra::{build_quotient, quotient_polynomial, QuotientKind};
use spectral_moore_core::ExactPolynomial;

fn q(n: i64, d: i64) -> BigRational {
    ratio(n, d)
}

fn powr(x: &BigRational, e: usize) -> BigRational {
    Pow::pow(x, e)
}

/// Determinant by cofactor expansion along the first row, for small matrices.
fn laplace_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigRational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * laplace_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn cfg() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn g_satisfies_three_term_recurrence(k in 2u64..12, i in 2usize..14, xn in -40i64..40) {
        let mut fam = Families::new(k).unwrap();
        let x = q(xn, 7);
        let lhs = fam.g(i).eval(&x);
        let rhs = &x * fam.g(i - 1).eval(&x) - rat(k as i64 - 1) * fam.g(i - 2).eval(&x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_is_difference_of_g(k in 2u64..12, i in 2usize..14, xn in -40i64..40) {
        let mut fam = Families::new(k).unwrap();
        let x = q(xn, 5);
        let lhs = fam.f(i).eval(&x);
        let rhs = fam.g(i).eval(&x) - fam.g(i - 2).eval(&x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn g_matches_chebyshev_closed_form(k in 2u64..12, i in 0usize..16, a in 0.05f64..3.09) {
        let mut fam = Families::new(k).unwrap();
        let s = ((k - 1) as f64).sqrt();
        let x = 2.0 * s * a.cos();
        let expected = s.powi(i as i32) * ((i as f64 + 1.0) * a).sin() / a.sin();
        let got = fam.g(i).eval_f64(x);
        prop_assert!((got - expected).abs() <= 1e-7 * (1.0 + expected.abs()));
    }

    #[test]
    fn cal_g_is_consecutive_sum(k in 2u64..12, j in 1usize..14, xn in -40i64..40) {
        let mut fam = Families::new(k).unwrap();
        let x = q(xn, 3);
        let lhs = fam.cal_g(j).eval(&x);
        let rhs = fam.g(j).eval(&x) + fam.g(j - 1).eval(&x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scr_f_is_parity_part(k in 2u64..12, e in 0u8..2, i in 0usize..8, xn in -30i64..30) {
        let mut fam = Families::new(k).unwrap();
        let x = q(xn, 4);
        let mut lhs = fam.scr_f(e, i).eval(&(&x * &x));
        if e == 1 {
            lhs *= &x;
        }
        prop_assert_eq!(lhs, fam.f(2 * i + e as usize).eval(&x));
    }

    #[test]
    fn scr_g_parity_matches_g(k in 2u64..12, e in 0u8..2, i in 0usize..8, xn in -30i64..30) {
        let mut fam = Families::new(k).unwrap();
        let x = q(xn, 4);
        let mut lhs = fam.scr_g(e, i).eval(&(&x * &x));
        if e == 1 {
            lhs *= &x;
        }
        prop_assert_eq!(lhs, fam.g(2 * i + e as usize).eval(&x));
    }

    #[test]
    fn p_closed_form(e in 0u8..2, i in 1usize..14, un in 2i64..30, ud in 1i64..7) {
        let u = q(un, ud);
        prop_assume!(u != BigRational::one());
        let z = &u + u.recip() + rat(2);
        let ps = p_sequence(i, e).unwrap();
        let num = powr(&u, 2 * i + 1 - e as usize) - rat(1);
        let mut den = powr(&u, i - e as usize) * (&u - rat(1));
        if e == 1 {
            den *= &u + rat(1);
        }
        prop_assert_eq!(ps[i].eval(&z), num / den);
    }

    #[test]
    fn p_table_identities(d in 5usize..40, un in 2i64..20, ud in 1i64..5) {
        let u = q(un, ud);
        prop_assume!(u != BigRational::one());
        let e = if d % 2 == 0 { 1usize } else { 0 };
        let m = (d - 1 + e) / 2;
        let z = &u + u.recip() + rat(2);
        let ps = p_sequence(m, e as u8).unwrap();
        let pm = ps[m].eval(&z);
        let pm1 = ps[m - 1].eval(&z);
        let one = rat(1);
        let up1e = powr(&(&u + &one), e);
        prop_assert_eq!(&pm, &((powr(&u, d) - &one) / (powr(&u, m - e) * (&u - &one) * &up1e)));
        prop_assert_eq!(&pm1, &((powr(&u, d - 2) - &one) / (powr(&u, m - 1 - e) * (&u - &one) * &up1e)));
        let sum = powr(&(&u + &one), 1 - e) * (powr(&u, d - 1) - &one) / (powr(&u, m - e) * (&u - &one));
        prop_assert_eq!(&pm1 + &pm, sum);
        let diff = (powr(&u, d - 1) + &one) / (powr(&u, m - e) * &up1e);
        prop_assert_eq!(&pm - &pm1, diff);
    }

    #[test]
    fn h_in_squared_variable_is_s(k in 3u64..10, d in 3usize..14, cc in 1u64..9, xn in -30i64..30) {
        prop_assume!(cc < k);
        let cand = DrgCandidate::new(k, d, cc).unwrap();
        let x = q(xn, 3);
        let km1 = rat(k as i64 - 1);
        let e = cand.epsilon as usize;
        let mut lhs = h_poly(&cand).eval(&(&x * &x / &km1)) * powr(&km1, (d - 3 - e) / 2);
        if e == 1 {
            lhs *= &x;
        }
        let s = quotient_polynomial(k, d + 1, &rat(cc as i64)).unwrap();
        prop_assert_eq!(lhs, s.eval(&x));
    }

    #[test]
    fn charpoly_matches_laplace_determinant(k in 2u64..8, t in 4usize..8, cn in 1i64..16, xn in -20i64..20) {
        let c = q(cn, 2);
        prop_assume!(c <= rat(k as i64));
        let m = build_quotient(QuotientKind::B, k, t, &c).unwrap();
        let x = q(xn, 3);
        let rows: Vec<Vec<BigRational>> = (0..t)
            .map(|i| (0..t).map(|j| {
                let a = -m.entry(i, j);
                if i == j { a + &x } else { a }
            }).collect())
            .collect();
        let det = laplace_det(&rows);
        let s = quotient_polynomial(k, t, &c).unwrap();
        let k2 = rat((k * k) as i64);
        prop_assert_eq!(&det, &m.charpoly().eval(&x));
        prop_assert_eq!(det, (&x * &x - k2) * s.eval(&x));
    }

    #[test]
    fn t_quotient_rows_sum_to_k(k in 2u64..10, t in 2usize..10, cn in 1i64..20) {
        let c = q(cn, 2);
        prop_assume!(c <= rat(k as i64));
        let m = build_quotient(QuotientKind::T, k, t, &c).unwrap();
        prop_assert!(m.row_sums().iter().all(|s| s == &rat(k as i64)));
    }
}

#[test]
fn polynomial_text_round_trip() {
    let p = ExactPolynomial::new(vec![q(-3, 2), BigRational::zero(), rat(5), BigRational::from_integer(BigInt::from(-1))]);
    let text = format!("{}", p);
    assert_eq!(ExactPolynomial::parse(&text).unwrap().0, p);
}
