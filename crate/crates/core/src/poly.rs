//! Dense univariate polynomials with exact rational coefficients.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator too large for a direct conversion
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Exact rational for a finite float (every finite f64 is a dyadic rational).
pub fn f64_to_rat(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Polynomial `c_0 + c_1 x + ... + c_n x^n` over the rationals.
///
/// Coefficients are stored lowest degree first with trailing zeros trimmed,
/// so the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `x - a`
    pub fn linear_root(a: BigRational) -> Self {
        Self::new(vec![-a, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i32 {
        sign(&self.eval(x))
    }

    /// Compensated Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let coeffs: Vec<f64> = self.coeffs.iter().map(rat_to_f64).collect();
        compensated_horner(&coeffs, x)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul_x_pow(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dl = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / dl;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors (up to a constant).
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// `p(x) -> p(x^2)`
    pub fn substitute_square(&self) -> Self {
        let mut coeffs = vec![BigRational::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Splits `p(x) = even(x^2) + x * odd(x^2)`.
    pub fn even_odd_split(&self) -> (Self, Self) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (Self::new(even), Self::new(odd))
    }

    /// `p(x) -> p(a x + b)`
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Primitive integer polynomial with positive leading coefficient that is
    /// a rational multiple of `self`.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        let sgn = if ints.last().is_some_and(Signed::is_negative) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let g = g * sgn;
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Renders the polynomial with the given variable name.
    pub fn display_var(&self, var: char) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, var }
    }

    /// Parses strings such as `z^3 - 2*z + 1/2` or `3x^2+x-7` in one variable.
    /// Returns the polynomial and the variable name found (`x` when constant).
    pub fn parse(input: &str) -> Result<(Self, char)> {
        parse_poly(input)
    }
}

pub fn sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, crate::fmath::mul_add(a, b, -p))
}

/// Horner evaluation with error-free transformations; coefficients lowest first.
pub fn compensated_horner(coeffs: &[f64], x: f64) -> f64 {
    let Some((&lead, rest)) = coeffs.split_last() else {
        return 0.0;
    };
    let mut s = lead;
    let mut c = 0.0;
    for &a in rest.iter().rev() {
        let (p, pe) = two_prod(s, x);
        let (ns, se) = two_sum(p, a);
        s = ns;
        c = c * x + (pe + se);
    }
    s + c
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ExactPolynomial {
            type Output = ExactPolynomial;
            fn $m(self, rhs: ExactPolynomial) -> ExactPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ExactPolynomial> for ExactPolynomial {
            type Output = ExactPolynomial;
            fn $m(self, rhs: &ExactPolynomial) -> ExactPolynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        -&self
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a ExactPolynomial,
    var: char,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "{mag}*{}", self.var)?,
                (_, true) => write!(f, "{}^{i}", self.var)?,
                (_, false) => write!(f, "{mag}*{}^{i}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var('x').fmt(f)
    }
}

fn parse_err(msg: &str, input: &str) -> Error {
    let mut s = String::from(msg);
    s.push_str(" in `");
    s.push_str(input);
    s.push('`');
    Error::Parse(s)
}

fn parse_poly(input: &str) -> Result<(ExactPolynomial, char)> {
    let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(parse_err("empty input", input));
    }
    let mut var: Option<char> = None;
    let mut acc = ExactPolynomial::zero();
    let bytes: Vec<char> = text.chars().collect();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut negative = false;
        if bytes[pos] == '+' || bytes[pos] == '-' {
            negative = bytes[pos] == '-';
            pos += 1;
        } else if pos != 0 {
            return Err(parse_err("expected `+` or `-`", input));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != '+' && bytes[pos] != '-' {
            pos += 1;
        }
        if start == pos {
            return Err(parse_err("empty term", input));
        }
        let term: String = bytes[start..pos].iter().collect();
        let (coef, deg) = parse_term(&term, &mut var, input)?;
        let coef = if negative { -coef } else { coef };
        acc = &acc + &ExactPolynomial::monomial(coef, deg);
    }
    Ok((acc, var.unwrap_or('x')))
}

fn parse_term(term: &str, var: &mut Option<char>, input: &str) -> Result<(BigRational, usize)> {
    let letter = term.chars().find(|c| c.is_ascii_alphabetic());
    let Some(v) = letter else {
        return Ok((parse_rational(term, input)?, 0));
    };
    match var {
        Some(existing) if *existing != v => {
            return Err(parse_err("more than one variable", input));
        }
        _ => *var = Some(v),
    }
    let idx = term.find(v).expect("letter present");
    let coef_part = term[..idx].trim_end_matches('*');
    let coef = if coef_part.is_empty() {
        BigRational::one()
    } else {
        parse_rational(coef_part, input)?
    };
    let rest = &term[idx + v.len_utf8()..];
    let deg = if rest.is_empty() {
        1
    } else if let Some(e) = rest.strip_prefix('^') {
        e.parse::<usize>()
            .map_err(|_| parse_err("bad exponent", input))?
    } else {
        return Err(parse_err("unexpected text after variable", input));
    };
    Ok((coef, deg))
}

fn parse_rational(s: &str, input: &str) -> Result<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| parse_err("bad coefficient", input))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| parse_err("bad coefficient", input))?;
    if d.is_zero() {
        return Err(parse_err("zero denominator", input));
    }
    Ok(BigRational::new(n, d))
}

impl ExactPolynomial {
    /// Text form used by the command line (`--show-poly`).
    pub fn render(&self, var: char) -> String {
        self.display_var(var).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_trims() {
        let p = ExactPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(ExactPolynomial::from_i64s(&[0, 0]).coeffs().is_empty());
        assert_eq!(ExactPolynomial::zero().degree(), None);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = ExactPolynomial::from_i64s(&[-2, 0, 0, 1]);
        let b = ExactPolynomial::from_i64s(&[1, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
        assert_eq!(a.div_rem(&ExactPolynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = ExactPolynomial::from_i64s(&[-1, 1]);
        let b = ExactPolynomial::from_i64s(&[2, 1]);
        let p = &(&a * &a) * &b;
        assert_eq!(p.gcd(&p.derivative()), a);
        assert_eq!(p.squarefree_part(), &a * &b);
    }

    #[test]
    fn render_and_parse() {
        let p = ExactPolynomial::new(vec![ratio(-1, 2), rat(0), rat(-3), rat(1)]);
        assert_eq!(p.render('x'), "x^3 - 3*x^2 - 1/2");
        let (q, v) = ExactPolynomial::parse("x^3 - 3*x^2 - 1/2").unwrap();
        assert_eq!((q, v), (p, 'x'));
        let (q, v) = ExactPolynomial::parse("z^9+3z^2-z+1").unwrap();
        assert_eq!(v, 'z');
        assert_eq!(q.coeff(9), rat(1));
        assert_eq!(q.coeff(1), rat(-1));
        assert!(ExactPolynomial::parse("x+y").is_err());
        assert!(ExactPolynomial::parse("").is_err());
    }

    #[test]
    fn compensated_horner_beats_cancellation() {
        // (x - 1)^7 expanded, evaluated near the root
        let mut p = ExactPolynomial::one();
        for _ in 0..7 {
            p = &p * &ExactPolynomial::from_i64s(&[-1, 1]);
        }
        let x: f64 = 1.0 + 1e-3;
        let exact = (x - 1.0).powi(7);
        assert!((p.eval_f64(x) - exact).abs() < 1e-6 * exact);
    }

    #[test]
    fn even_odd_split_roundtrip() {
        let p = ExactPolynomial::from_i64s(&[5, -4, 3, 2, 1]);
        let (e, o) = p.even_odd_split();
        let back = &e.substitute_square() + &o.substitute_square().mul_x_pow(1);
        assert_eq!(back, p);
    }
}
