//! The polynomial families behind the bounds.
//!
//! * `F_i`: `F_0 = 1`, `F_1 = x`, `F_2 = x^2 - k`, `F_i = x F_{i-1} - (k-1) F_{i-2}`.
//! * `G_i = F_i + F_{i-2} + F_{i-4} + ...`
//! * `CalG_j = F_0 + F_1 + ... + F_j`
//! * `ScrF_{e,i}` with `x^e ScrF_{e,i}(x^2) = F_{2i+e}(x)`, and
//!   `ScrG_{e,i} = ScrF_{e,0} + ... + ScrF_{e,i}`.
//! * `P_{i,e}(z) = (z - 2) P_{i-1,e} - P_{i-2,e}` with `P_{0,e} = 1 - e`,
//!   `P_{1,1} = 1`, `P_{1,0} = z - 1`; independent of `k`.
//!
//! Coefficients are exact. [`Families`] memoizes every family for one `k`.

use alloc::vec::Vec;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::fmath;
use crate::poly::{rat, ExactPolynomial};
use crate::roots::bisect_f64;

/// Selects one member of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyQuery {
    pub k: u64,
    pub index: usize,
    pub epsilon: u8,
}

impl FamilyQuery {
    pub fn new(k: u64, index: usize, epsilon: u8) -> Result<Self> {
        check_k(k)?;
        check_epsilon(epsilon)?;
        Ok(Self { k, index, epsilon })
    }

    pub fn plain(k: u64, index: usize) -> Result<Self> {
        Self::new(k, index, 0)
    }
}

fn check_k(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidDegree(k))
    } else {
        Ok(())
    }
}

fn check_epsilon(e: u8) -> Result<()> {
    if e > 1 {
        Err(Error::InvalidEpsilon(e))
    } else {
        Ok(())
    }
}

/// Memo table for every family at a fixed `k`.
#[derive(Clone, Debug)]
pub struct Families {
    k: u64,
    f: Vec<ExactPolynomial>,
    g: Vec<ExactPolynomial>,
    cal_g: Vec<ExactPolynomial>,
    scr_f: [Vec<ExactPolynomial>; 2],
    scr_g: [Vec<ExactPolynomial>; 2],
}

impl Families {
    pub fn new(k: u64) -> Result<Self> {
        check_k(k)?;
        Ok(Self {
            k,
            f: Vec::new(),
            g: Vec::new(),
            cal_g: Vec::new(),
            scr_f: [Vec::new(), Vec::new()],
            scr_g: [Vec::new(), Vec::new()],
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    fn km1(&self) -> BigRational {
        rat(self.k as i64 - 1)
    }

    pub fn f(&mut self, i: usize) -> &ExactPolynomial {
        while self.f.len() <= i {
            let n = self.f.len();
            let next = match n {
                0 => ExactPolynomial::one(),
                1 => ExactPolynomial::x(),
                2 => ExactPolynomial::from_i64s(&[-(self.k as i64), 0, 1]),
                _ => {
                    let a = self.f[n - 1].mul_x_pow(1);
                    let b = self.f[n - 2].scale(&self.km1());
                    &a - &b
                }
            };
            self.f.push(next);
        }
        &self.f[i]
    }

    /// `G_i`, built from its defining sum over `F`.
    pub fn g(&mut self, i: usize) -> &ExactPolynomial {
        while self.g.len() <= i {
            let n = self.g.len();
            let next = if n < 2 {
                self.f(n).clone()
            } else {
                let fi = self.f(n).clone();
                &self.g[n - 2] + &fi
            };
            self.g.push(next);
        }
        &self.g[i]
    }

    /// `CalG_j = sum_{i <= j} F_i`.
    pub fn cal_g(&mut self, j: usize) -> &ExactPolynomial {
        while self.cal_g.len() <= j {
            let n = self.cal_g.len();
            let fi = self.f(n).clone();
            let next = if n == 0 { fi } else { &self.cal_g[n - 1] + &fi };
            self.cal_g.push(next);
        }
        &self.cal_g[j]
    }

    /// `ScrF_{e,i}`, read off the even or odd coefficients of `F_{2i+e}`.
    pub fn scr_f(&mut self, epsilon: u8, i: usize) -> &ExactPolynomial {
        let e = epsilon as usize;
        while self.scr_f[e].len() <= i {
            let n = self.scr_f[e].len();
            let (even, odd) = self.f(2 * n + e).even_odd_split();
            self.scr_f[e].push(if e == 0 { even } else { odd });
        }
        &self.scr_f[e][i]
    }

    pub fn scr_g(&mut self, epsilon: u8, i: usize) -> &ExactPolynomial {
        let e = epsilon as usize;
        while self.scr_g[e].len() <= i {
            let n = self.scr_g[e].len();
            let fi = self.scr_f(epsilon, n).clone();
            let next = if n == 0 { fi } else { &self.scr_g[e][n - 1] + &fi };
            self.scr_g[e].push(next);
        }
        &self.scr_g[e][i]
    }

    /// `(c - 1) G_{t-4} + G_{t-2}`: the non-trivial factor of the
    /// characteristic polynomial of `B(k, t, c)`, `t >= 4`.
    pub fn quotient_factor(&mut self, t: usize, c: &BigRational) -> ExactPolynomial {
        assert!(t >= 4, "quotient factor needs t >= 4");
        let low = self.g(t - 4).scale(&(c - rat(1)));
        &low + self.g(t - 2)
    }

    /// The same factor in the squared variable: `x^e * S(x^2) = quotient_factor`,
    /// with `e = t mod 2`.
    pub fn quotient_factor_squared(&mut self, t: usize, c: &BigRational) -> (u8, ExactPolynomial) {
        assert!(t >= 4, "quotient factor needs t >= 4");
        let e = (t % 2) as u8;
        let s = t / 2 - 1;
        let low = self.scr_g(e, s - 1).scale(&(c - rat(1)));
        (e, &low + self.scr_g(e, s))
    }
}

pub fn f_poly(q: FamilyQuery) -> Result<ExactPolynomial> {
    Ok(Families::new(q.k)?.f(q.index).clone())
}

pub fn g_poly(q: FamilyQuery) -> Result<ExactPolynomial> {
    Ok(Families::new(q.k)?.g(q.index).clone())
}

pub fn calg_poly(q: FamilyQuery) -> Result<ExactPolynomial> {
    Ok(Families::new(q.k)?.cal_g(q.index).clone())
}

pub fn scr_f_poly(q: FamilyQuery) -> Result<ExactPolynomial> {
    Ok(Families::new(q.k)?.scr_f(q.epsilon, q.index).clone())
}

pub fn scr_g_poly(q: FamilyQuery) -> Result<ExactPolynomial> {
    Ok(Families::new(q.k)?.scr_g(q.epsilon, q.index).clone())
}

/// `P_{i,e}(z)`.
pub fn p_poly(i: usize, epsilon: u8) -> Result<ExactPolynomial> {
    Ok(p_sequence(i, epsilon)?.pop().expect("nonempty"))
}

/// `P_{0,e}, ..., P_{n,e}`.
pub fn p_sequence(n: usize, epsilon: u8) -> Result<Vec<ExactPolynomial>> {
    check_epsilon(epsilon)?;
    let mut out = Vec::with_capacity(n + 1);
    let z_minus_2 = ExactPolynomial::from_i64s(&[-2, 1]);
    for i in 0..=n {
        let next = match (i, epsilon) {
            (0, e) => ExactPolynomial::from_i64s(&[1 - e as i64]),
            (1, 1) => ExactPolynomial::one(),
            (1, _) => ExactPolynomial::from_i64s(&[-1, 1]),
            _ => &(&z_minus_2 * &out[i - 1]) - &out[i - 2],
        };
        out.push(next);
    }
    Ok(out)
}

/// `2 sqrt(k-1)`, the edge of the spectral support.
pub fn spectral_radius_edge(k: u64) -> f64 {
    2.0 * fmath::sqrt((k - 1) as f64)
}

/// Largest zero of `G_j`: `2 sqrt(k-1) cos(pi / (j + 1))`.
pub fn lambda_j(k: u64, j: usize) -> f64 {
    let v = spectral_radius_edge(k) * fmath::cos(core::f64::consts::PI / (j as f64 + 1.0));
    // cos(pi/2) is not exactly zero in floating point
    if j == 1 {
        0.0
    } else {
        v
    }
}

/// `F_0(x), ..., F_n(x)` in floating point via the recurrence.
pub fn eval_f_seq(k: u64, n: usize, x: f64) -> Vec<f64> {
    let km1 = (k - 1) as f64;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let v = match i {
            0 => 1.0,
            1 => x,
            2 => x * x - k as f64,
            _ => x * out[i - 1] - km1 * out[i - 2],
        };
        out.push(v);
    }
    out
}

/// `G_0(x), ..., G_n(x)` in floating point via `G_i = x G_{i-1} - (k-1) G_{i-2}`.
pub fn eval_g_seq(k: u64, n: usize, x: f64) -> Vec<f64> {
    let km1 = (k - 1) as f64;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let v = match i {
            0 => 1.0,
            1 => x,
            _ => x * out[i - 1] - km1 * out[i - 2],
        };
        out.push(v);
    }
    out
}

/// `CalG_j(x)` in floating point.
pub fn eval_cal_g(k: u64, j: usize, x: f64) -> f64 {
    let g = eval_g_seq(k, j, x);
    if j == 0 {
        g[0]
    } else {
        g[j] + g[j - 1]
    }
}

/// Largest zero of `F_j`, `j >= 1`; it lies in `(lambda_j, 2 sqrt(k-1))`.
pub fn mu_j(k: u64, j: usize) -> Result<f64> {
    check_k(k)?;
    if j == 1 {
        return Ok(0.0);
    }
    let lo = lambda_j(k, j);
    let hi = spectral_radius_edge(k);
    bisect_f64(|x| eval_f_seq(k, j, x)[j], lo, hi, 1e-14)
}

/// Evaluates `x^e * p(x^2)`.
pub fn eval_parity_form(epsilon: u8, p: &ExactPolynomial, x: &BigRational) -> BigRational {
    let v = p.eval(&(x * x));
    if epsilon == 1 {
        v * x
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: u64, i: usize, e: u8) -> FamilyQuery {
        FamilyQuery::new(k, i, e).unwrap()
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_poly(q(3, 2, 0)).unwrap(), ExactPolynomial::from_i64s(&[-3, 0, 1]));
        assert_eq!(f_poly(q(3, 0, 0)).unwrap(), ExactPolynomial::one());
        assert_eq!(
            f_poly(q(3, 4, 0)).unwrap(),
            ExactPolynomial::from_i64s(&[6, 0, -7, 0, 1])
        );
        assert_eq!(FamilyQuery::new(1, 2, 0), Err(Error::InvalidDegree(1)));
        assert_eq!(FamilyQuery::new(3, 2, 2), Err(Error::InvalidEpsilon(2)));
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_poly(q(3, 2, 0)).unwrap(), ExactPolynomial::from_i64s(&[-2, 0, 1]));
        assert_eq!(g_poly(q(3, 1, 0)).unwrap(), ExactPolynomial::x());
        assert_eq!(
            g_poly(q(3, 4, 0)).unwrap(),
            ExactPolynomial::from_i64s(&[4, 0, -6, 0, 1])
        );
    }

    #[test]
    fn cal_g_examples() {
        assert_eq!(calg_poly(q(3, 2, 0)).unwrap(), ExactPolynomial::from_i64s(&[-2, 1, 1]));
        assert_eq!(calg_poly(q(3, 0, 0)).unwrap(), ExactPolynomial::one());
        assert_eq!(calg_poly(q(3, 1, 0)).unwrap(), ExactPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn scr_f_examples() {
        assert_eq!(scr_f_poly(q(3, 1, 0)).unwrap(), ExactPolynomial::from_i64s(&[-3, 1]));
        assert_eq!(scr_f_poly(q(3, 1, 1)).unwrap(), ExactPolynomial::from_i64s(&[-5, 1]));
        assert_eq!(scr_f_poly(q(3, 2, 0)).unwrap(), ExactPolynomial::from_i64s(&[6, -7, 1]));
    }

    #[test]
    fn scr_g_examples() {
        assert_eq!(scr_g_poly(q(3, 1, 0)).unwrap(), ExactPolynomial::from_i64s(&[-2, 1]));
        assert_eq!(scr_g_poly(q(3, 0, 0)).unwrap(), ExactPolynomial::one());
        assert_eq!(scr_g_poly(q(3, 1, 1)).unwrap(), ExactPolynomial::from_i64s(&[-4, 1]));
    }

    #[test]
    fn p_examples() {
        assert_eq!(p_poly(1, 0).unwrap(), ExactPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(p_poly(2, 1).unwrap(), ExactPolynomial::from_i64s(&[-2, 1]));
        assert_eq!(p_poly(2, 0).unwrap(), ExactPolynomial::from_i64s(&[1, -3, 1]));
        assert!(p_poly(0, 1).unwrap().is_zero());
        assert!(p_poly(3, 2).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_j(3, 1), 0.0);
        assert!((lambda_j(3, 2) - 2f64.sqrt()).abs() < 1e-12);
        assert!((lambda_j(10, 2) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn mu_is_largest_zero_of_f() {
        // F_2 = x^2 - k
        assert!((mu_j(3, 2).unwrap() - 3f64.sqrt()).abs() < 1e-12);
        // F_3 = x^3 - (2k-1) x
        assert!((mu_j(3, 3).unwrap() - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn float_sequences_match_exact() {
        let mut fam = Families::new(4).unwrap();
        let x = 1.3;
        let fs = eval_f_seq(4, 10, x);
        let gs = eval_g_seq(4, 10, x);
        for i in 0..=10 {
            assert!((fam.f(i).eval_f64(x) - fs[i]).abs() < 1e-9 * (1.0 + fs[i].abs()));
            assert!((fam.g(i).eval_f64(x) - gs[i]).abs() < 1e-9 * (1.0 + gs[i].abs()));
        }
        assert!((fam.cal_g(7).eval_f64(x) - eval_cal_g(4, 7, x)).abs() < 1e-9);
    }
}
