//! Linear programming certificates for the bipartite order bound.
//!
//! The certificate for `B(k, t, c)` with top eigenvalue `theta` is the
//! polynomial `f(y) = y^e S(y)^2 / (y - theta^2)` written in the basis
//! `ScrF_{0,0}, ScrF_{0,1}, ...`, where `x^e S(x^2)` is the non-trivial factor
//! of the characteristic polynomial. The order is then at most `2 f(k^2) / f_0`.

use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bounds::{Value, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::orthopoly::Families;
use crate::poly::{rat, rat_to_f64, ExactPolynomial};
use crate::roots::SturmChain;
use crate::theta::Theta;

/// Residual accepted by the floating point division.
pub const DIVISION_TOL: f64 = 1e-8;

/// Coefficients of `y^e ScrF_{e,i} ScrF_{e,j}` in the `ScrF_{0,l}` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearizationTable {
    pub k: u64,
    pub epsilon: u8,
    pub i: usize,
    pub j: usize,
    pub p: Vec<BigRational>,
}

impl LinearizationTable {
    pub fn coefficient(&self, l: usize) -> BigRational {
        self.p.get(l).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// Writes `poly` in the monic, degree-graded basis `ScrF_{0,0}, ScrF_{0,1}, ...`.
pub fn expand_in_basis(fam: &mut Families, poly: &ExactPolynomial) -> Vec<BigRational> {
    let Some(deg) = poly.degree() else {
        return Vec::new();
    };
    let mut rest = poly.clone();
    let mut out = alloc::vec![BigRational::zero(); deg + 1];
    for l in (0..=deg).rev() {
        let b = fam.scr_f(0, l);
        let coef = rest.coeff(l) / b.leading().expect("basis element is nonzero");
        rest = &rest - &b.scale(&coef);
        out[l] = coef;
    }
    debug_assert!(rest.is_zero());
    out
}

fn expand_in_basis_f64(fam: &mut Families, poly: &[f64]) -> Vec<f64> {
    let mut rest = poly.to_vec();
    while rest.len() > 1 && rest[rest.len() - 1] == 0.0 {
        rest.pop();
    }
    let deg = rest.len() - 1;
    let mut out = alloc::vec![0.0; deg + 1];
    for l in (0..=deg).rev() {
        let basis: Vec<f64> = fam.scr_f(0, l).coeffs().iter().map(rat_to_f64).collect();
        let coef = rest[l] / basis[l];
        for (r, b) in rest.iter_mut().zip(&basis) {
            *r -= coef * b;
        }
        out[l] = coef;
    }
    out
}

pub fn linearize(k: u64, epsilon: u8, i: usize, j: usize) -> Result<LinearizationTable> {
    if epsilon > 1 {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let mut fam = Families::new(k)?;
    let prod = &fam.scr_f(epsilon, i).clone() * fam.scr_f(epsilon, j);
    let prod = prod.mul_x_pow(epsilon as usize);
    let p = expand_in_basis(&mut fam, &prod);
    Ok(LinearizationTable { k, epsilon, i, j, p })
}

/// Certificate coefficients, exact or floating point.
#[derive(Clone, Debug, PartialEq)]
pub enum Coeffs {
    Exact(Vec<BigRational>),
    Approx(Vec<f64>),
}

impl Coeffs {
    pub fn len(&self) -> usize {
        match self {
            Coeffs::Exact(v) => v.len(),
            Coeffs::Approx(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> Value {
        match self {
            Coeffs::Exact(v) => Value::Exact(v[i].clone()),
            Coeffs::Approx(v) => Value::Approx(v[i]),
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            Coeffs::Exact(v) => v.iter().map(rat_to_f64).collect(),
            Coeffs::Approx(v) => v.clone(),
        }
    }

    /// Evaluates the power-basis polynomial these coefficients describe.
    fn eval(&self, y: &Value) -> Value {
        match (self, y) {
            (Coeffs::Exact(v), Value::Exact(q)) => Value::Exact(ExactPolynomial::new(v.clone()).eval(q)),
            _ => {
                let y = y.to_f64();
                Value::Approx(self.to_f64().iter().rev().fold(0.0, |acc, c| acc * y + c))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub k: u64,
    pub t: usize,
    pub c: Value,
    pub theta: Theta,
    pub epsilon: u8,
    /// Coefficients `f_0, f_1, ...` in the `ScrF_{0,.}` basis.
    pub f: Coeffs,
    /// The same polynomial in the power basis.
    pub power: Coeffs,
}

impl Certificate {
    /// `f_0 > 0` and `f_i >= 0` (up to tolerance for floats).
    pub fn coefficients_nonnegative(&self) -> bool {
        match &self.f {
            Coeffs::Exact(v) => v[0].is_positive() && v.iter().all(|x| !x.is_negative()),
            Coeffs::Approx(v) => v[0] > DEFAULT_TOL && v.iter().all(|x| *x >= -DEFAULT_TOL),
        }
    }

    /// `f_i > 0` for every index.
    pub fn coefficients_positive(&self) -> bool {
        match &self.f {
            Coeffs::Exact(v) => v.iter().all(Signed::is_positive),
            Coeffs::Approx(v) => v.iter().all(|x| *x > DEFAULT_TOL),
        }
    }

    /// `f(y)`.
    pub fn eval(&self, y: &Value) -> Value {
        self.power.eval(y)
    }

    pub fn eval_at_square(&self, tau: &Theta) -> Value {
        match tau.square() {
            Some(s) => self.eval(&Value::Exact(s.clone())),
            None => self.eval(&Value::Approx(tau.value() * tau.value())),
        }
    }
}

pub fn build_certificate(k: u64, t: usize, c: &Value, theta: &Theta) -> Result<Certificate> {
    if t < 4 {
        return Err(Error::InvalidShape(format!("certificates need t >= 4, got {}", t)));
    }
    let mut fam = Families::new(k)?;
    match (c, theta.square()) {
        (Value::Exact(cq), Some(s)) => {
            let (e, sq) = fam.quotient_factor_squared(t, cq);
            let residual = sq.eval(s);
            if !residual.is_zero() {
                return Err(Error::NotARoot {
                    residual: rat_to_f64(&residual),
                });
            }
            if SturmChain::new(&sq).count_above(s) > 0 {
                return Err(Error::HypothesisViolated(format!(
                    "theta = {} is not the largest zero of the quotient polynomial",
                    theta
                )));
            }
            let (g, r) = sq.div_rem(&ExactPolynomial::linear_root(s.clone()))?;
            debug_assert!(r.is_zero());
            let power = (&sq * &g).mul_x_pow(e as usize);
            let f = expand_in_basis(&mut fam, &power);
            Ok(Certificate {
                k,
                t,
                c: c.clone(),
                theta: theta.clone(),
                epsilon: e,
                f: Coeffs::Exact(f),
                power: Coeffs::Exact(power.into_coeffs()),
            })
        }
        _ => {
            let cf = c.to_f64();
            let e = (t % 2) as u8;
            let s = t / 2 - 1;
            let hi: Vec<f64> = fam.scr_g(e, s).coeffs().iter().map(rat_to_f64).collect();
            let lo: Vec<f64> = fam.scr_g(e, s - 1).coeffs().iter().map(rat_to_f64).collect();
            let sq: Vec<f64> = (0..hi.len())
                .map(|i| hi[i] + (cf - 1.0) * lo.get(i).copied().unwrap_or(0.0))
                .collect();
            let y0 = theta.value() * theta.value();
            // synthetic division by (y - y0)
            let n = sq.len() - 1;
            let mut g = alloc::vec![0.0; n];
            let mut acc = 0.0;
            for i in (0..=n).rev() {
                acc = acc * y0 + sq[i];
                if i > 0 {
                    g[i - 1] = acc;
                }
            }
            let scale: f64 = sq
                .iter()
                .enumerate()
                .map(|(i, a)| a.abs() * crate::fmath::powi(y0.abs().max(1.0), i as i32))
                .sum();
            if acc.abs() > DIVISION_TOL * scale.max(1.0) {
                return Err(Error::NotARoot { residual: acc });
            }
            let mut power = alloc::vec![0.0; e as usize + sq.len() + g.len() - 1];
            for (i, a) in sq.iter().enumerate() {
                for (j, b) in g.iter().enumerate() {
                    power[e as usize + i + j] += a * b;
                }
            }
            let f = expand_in_basis_f64(&mut fam, &power);
            Ok(Certificate {
                k,
                t,
                c: c.clone(),
                theta: theta.clone(),
                epsilon: e,
                f: Coeffs::Approx(f),
                power: Coeffs::Approx(power),
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpBound {
    /// `2 f(k^2) / f_0`.
    pub bound: Value,
    /// `f(tau^2)` for each supplied eigenvalue.
    pub values_at_spectrum: Vec<Value>,
    /// Every `f(tau^2)` vanishes, so a graph with this spectrum attains the bound.
    pub equality: bool,
}

pub fn lp_bound(k: u64, spectrum: &[Theta], cert: &Certificate) -> Result<LpBound> {
    if !cert.coefficients_nonnegative() {
        let bad = (0..cert.f.len())
            .find(|&i| {
                let v = cert.f.get(i).to_f64();
                if i == 0 {
                    v <= 0.0
                } else {
                    v < -DEFAULT_TOL
                }
            })
            .unwrap_or(0);
        return Err(Error::HypothesisViolated(format!(
            "coefficient f_{} = {} violates f_0 > 0, f_j >= 0",
            bad,
            cert.f.get(bad)
        )));
    }
    let k2 = Value::Exact(rat((k * k) as i64));
    let top = cert.eval(&k2);
    if top.to_f64() <= 0.0 {
        return Err(Error::HypothesisViolated(format!("f(k^2) = {} is not positive", top)));
    }
    let mut values = Vec::with_capacity(spectrum.len());
    let mut equality = true;
    for tau in spectrum {
        let v = cert.eval_at_square(tau);
        let (positive, zero) = match &v {
            Value::Exact(q) => (q.is_positive(), q.is_zero()),
            Value::Approx(x) => (*x > DEFAULT_TOL * (1.0 + top.to_f64().abs()), x.abs() <= DEFAULT_TOL * (1.0 + top.to_f64().abs())),
        };
        if positive {
            return Err(Error::HypothesisViolated(format!(
                "f(tau^2) = {} > 0 at tau = {}",
                v, tau
            )));
        }
        equality &= zero;
        values.push(v);
    }
    let f0 = cert.f.get(0);
    let bound = match (&top, &f0) {
        (Value::Exact(a), Value::Exact(b)) => Value::Exact(rat(2) * a / b),
        _ => Value::Approx(2.0 * top.to_f64() / f0.to_f64()),
    };
    Ok(LpBound {
        bound,
        values_at_spectrum: values,
        equality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn linearize_examples() {
        assert_eq!(linearize(3, 0, 1, 0).unwrap().p, rats(&[0, 1]));
        assert_eq!(linearize(3, 0, 1, 1).unwrap().p, rats(&[6, 1, 1]));
        assert_eq!(linearize(3, 1, 0, 0).unwrap().p, rats(&[3, 1]));
        assert!(linearize(3, 2, 0, 0).is_err());
    }

    #[test]
    fn certificate_examples() {
        let c = build_certificate(3, 4, &Value::int(1), &Theta::from_square(rat(2))).unwrap();
        assert_eq!(c.f, Coeffs::Exact(rats(&[1, 1])));
        assert_eq!(c.power, Coeffs::Exact(rats(&[-2, 1])));
        let c = build_certificate(3, 4, &Value::int(2), &Theta::from_integer(1)).unwrap();
        assert_eq!(c.f, Coeffs::Exact(rats(&[2, 1])));
        let c = build_certificate(3, 5, &Value::int(1), &Theta::from_integer(2)).unwrap();
        assert_eq!(c.f, Coeffs::Exact(rats(&[3, 3, 1])));
        assert!(matches!(
            build_certificate(3, 4, &Value::int(1), &Theta::from_integer(1)),
            Err(Error::NotARoot { .. })
        ));
        assert!(build_certificate(3, 4, &Value::int(1), &Theta::from_square(rat(2)).negated()).is_ok());
    }

    #[test]
    fn lp_examples() {
        let cases: [(usize, i64, Theta, i64); 3] = [
            (4, 1, Theta::from_square(rat(2)), 14),
            (4, 2, Theta::from_integer(1), 8),
            (5, 1, Theta::from_integer(2), 30),
        ];
        for (t, c, th, want) in cases {
            let cert = build_certificate(3, t, &Value::int(c), &th).unwrap();
            let r = lp_bound(3, core::slice::from_ref(&th), &cert).unwrap();
            assert_eq!(r.bound, Value::int(want));
            assert!(r.equality);
        }
    }

    #[test]
    fn float_path_agrees() {
        let th = Theta::from_f64(2f64.sqrt());
        let cert = build_certificate(3, 4, &Value::Approx(1.0), &th).unwrap();
        let f = cert.f.to_f64();
        assert!((f[0] - 1.0).abs() < 1e-9 && (f[1] - 1.0).abs() < 1e-9);
        let r = lp_bound(3, &[th], &cert).unwrap();
        assert!((r.bound.to_f64() - 14.0).abs() < 1e-8);
    }

    #[test]
    fn violated_hypothesis_is_reported() {
        let cert = build_certificate(3, 4, &Value::int(2), &Theta::from_integer(1)).unwrap();
        assert!(matches!(
            lp_bound(3, &[Theta::from_integer(2)], &cert),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
