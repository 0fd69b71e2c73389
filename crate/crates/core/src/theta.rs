//! Eigenvalue parameters that may be known exactly as `+-sqrt(s)` with `s` rational.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::fmath;
use crate::poly::{rat_to_f64, sign, ExactPolynomial};

/// `sign * sqrt(square)`, with the rational root cached when `square` is a
/// perfect square.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactTheta {
    pub square: BigRational,
    pub negative: bool,
    pub root: Option<BigRational>,
}

/// An eigenvalue parameter: always a float, optionally exact.
#[derive(Clone, Debug, PartialEq)]
pub struct Theta {
    value: f64,
    exact: Option<ExactTheta>,
}

/// Rational square root when one exists.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl Theta {
    pub fn from_f64(value: f64) -> Self {
        Self { value, exact: None }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self {
            value: rat_to_f64(&q),
            exact: Some(ExactTheta {
                square: &q * &q,
                negative: q.is_negative(),
                root: Some(q),
            }),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `sqrt(s)` for `s >= 0`.
    pub fn from_square(s: BigRational) -> Self {
        assert!(!s.is_negative(), "square must be nonnegative");
        match rational_sqrt(&s) {
            Some(r) => Self::from_rational(r),
            None => Self {
                value: fmath::sqrt(rat_to_f64(&s)),
                exact: Some(ExactTheta {
                    square: s,
                    negative: false,
                    root: None,
                }),
            },
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            value: -self.value,
            exact: self.exact.as_ref().map(|e| ExactTheta {
                square: e.square.clone(),
                negative: !e.negative && !e.square.is_zero(),
                root: e.root.as_ref().map(|r| -r),
            }),
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn exact(&self) -> Option<&ExactTheta> {
        self.exact.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn square(&self) -> Option<&BigRational> {
        self.exact.as_ref().map(|e| &e.square)
    }

    pub fn rational(&self) -> Option<&BigRational> {
        self.exact.as_ref().and_then(|e| e.root.as_ref())
    }

    pub fn is_zero(&self) -> bool {
        match &self.exact {
            Some(e) => e.square.is_zero(),
            None => self.value == 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.exact {
            Some(e) => e.negative,
            None => self.value < 0.0,
        }
    }

    /// `(E, O)` with `p(theta) = E + theta * O`, exact when theta is.
    pub fn eval_split(&self, p: &ExactPolynomial) -> Option<(BigRational, BigRational)> {
        let e = self.exact.as_ref()?;
        let (even, odd) = p.even_odd_split();
        Some((even.eval(&e.square), odd.eval(&e.square)))
    }

    /// Exact sign of `p(theta)`.
    pub fn sign_of(&self, p: &ExactPolynomial) -> Option<i32> {
        let e = self.exact.as_ref()?;
        if let Some(r) = &e.root {
            return Some(p.sign_at(r));
        }
        let (a, b) = self.eval_split(p)?;
        let b = if e.negative { -b } else { b };
        Some(surd_sign(&a, &b, &e.square))
    }

    /// Exact value of `num(theta) / den(theta)` when it is rational.
    pub fn rational_ratio(&self, num: &ExactPolynomial, den: &ExactPolynomial) -> Option<BigRational> {
        let e = self.exact.as_ref()?;
        if let Some(r) = &e.root {
            let d = den.eval(r);
            return if d.is_zero() { None } else { Some(num.eval(r) / d) };
        }
        let (n0, n1) = self.eval_split(num)?;
        let (d0, d1) = self.eval_split(den)?;
        if d0.is_zero() && d1.is_zero() {
            return None;
        }
        if &n0 * &d1 != &n1 * &d0 {
            return None;
        }
        if !d0.is_zero() {
            Some(n0 / d0)
        } else {
            Some(n1 / d1)
        }
    }

    /// Exact comparison of `theta^2` against a rational when available.
    pub fn cmp_square(&self, q: &BigRational) -> Option<Ordering> {
        self.square().map(|s| s.cmp(q))
    }
}

/// Sign of `a + b sqrt(s)` for `s >= 0`.
pub fn surd_sign(a: &BigRational, b: &BigRational, s: &BigRational) -> i32 {
    let sa = sign(a);
    let sb = if s.is_zero() { 0 } else { sign(b) };
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    let lhs = a * a;
    let rhs = b * b * s;
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// Compares theta with a simple root `root` of `p`, where `p` is negative just
/// below the root and positive just above it. Falls back to the exact sign of
/// `p(theta)` when the float gap is too small to trust.
pub fn cmp_with_root(theta: &Theta, root: f64, p: &ExactPolynomial, tol: f64) -> Ordering {
    let gap = theta.value() - root;
    if gap.abs() > tol * (1.0 + root.abs()) {
        return if gap > 0.0 { Ordering::Greater } else { Ordering::Less };
    }
    match theta.sign_of(p) {
        Some(s) if s > 0 => Ordering::Greater,
        Some(s) if s < 0 => Ordering::Less,
        _ => Ordering::Equal,
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(ExactTheta { root: Some(r), .. }) => write!(f, "{}", r),
            Some(e) => write!(f, "{}sqrt({})", if e.negative { "-" } else { "" }, e.square),
            None => write!(f, "{}", self.value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn surd_signs() {
        // 3 - 2 sqrt(2) > 0
        assert_eq!(surd_sign(&rat(3), &rat(-2), &rat(2)), 1);
        // 1 - sqrt(2) < 0
        assert_eq!(surd_sign(&rat(1), &rat(-1), &rat(2)), -1);
        // 2 - sqrt(4) = 0
        assert_eq!(surd_sign(&rat(2), &rat(-1), &rat(4)), 0);
        assert_eq!(surd_sign(&rat(0), &rat(-1), &rat(3)), -1);
    }

    #[test]
    fn perfect_squares_become_rational() {
        let t = Theta::from_square(ratio(9, 4));
        assert_eq!(t.rational(), Some(&ratio(3, 2)));
        assert!(Theta::from_square(rat(2)).rational().is_none());
    }

    #[test]
    fn exact_sign_at_sqrt2() {
        let p = ExactPolynomial::from_i64s(&[-2, 0, 1]);
        let t = Theta::from_square(rat(2));
        assert_eq!(t.sign_of(&p), Some(0));
        let q = ExactPolynomial::from_i64s(&[-1, 1]);
        assert_eq!(t.sign_of(&q), Some(1));
        assert_eq!(t.negated().sign_of(&q), Some(-1));
    }

    #[test]
    fn ratio_detects_rationality() {
        let t = Theta::from_square(rat(2));
        // (x^2 + x) / (x + 1) = x is irrational
        let num = ExactPolynomial::from_i64s(&[0, 1, 1]);
        let den = ExactPolynomial::from_i64s(&[1, 1]);
        assert_eq!(t.rational_ratio(&num, &den), None);
        // (2x + 2 x^2) / (x + x^2) = 2
        let num2 = ExactPolynomial::from_i64s(&[0, 2, 2]);
        let den2 = ExactPolynomial::from_i64s(&[0, 1, 1]);
        assert_eq!(t.rational_ratio(&num2, &den2), Some(rat(2)));
    }

    #[test]
    fn root_comparison_uses_exact_sign() {
        let p = ExactPolynomial::from_i64s(&[-2, 0, 1]);
        let r = 2f64.sqrt();
        let t = Theta::from_square(rat(2));
        assert_eq!(cmp_with_root(&t, r, &p, 1e-9), Ordering::Equal);
        let above = Theta::from_square(BigRational::new(20001.into(), 10000.into()));
        assert_eq!(cmp_with_root(&above, r, &p, 1e-3), Ordering::Greater);
    }
}
