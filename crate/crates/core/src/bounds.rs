//! Order bounds for bipartite regular graphs with a given second eigenvalue.
//!
//! `M(k, t, c)` bounds the order of a bipartite `k`-regular graph whose second
//! eigenvalue is at most `theta`; `N(k, t, c)` does the same for arbitrary
//! `k`-regular graphs. Both are evaluated exactly whenever `theta^2` is rational.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::fmath;
use crate::orthopoly::{eval_cal_g, eval_f_seq, eval_g_seq, lambda_j, spectral_radius_edge, Families};
use crate::poly::{rat, rat_to_f64};
use crate::roots::bisect_f64;
use crate::theta::{cmp_with_root, Theta};

/// Float tolerance used whenever exact arithmetic is unavailable.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest index searched when locating `t`.
const MAX_INDEX: usize = 100_000;

/// A rational number when it can be computed exactly, a float otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Approx(f64),
}

impl Value {
    pub fn int(n: i64) -> Self {
        Value::Exact(rat(n))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => rat_to_f64(q),
            Value::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Approx(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    /// Equality with a rational, exact when possible and within `tol` otherwise.
    pub fn approx_eq_rat(&self, q: &BigRational, tol: f64) -> bool {
        match self {
            Value::Exact(v) => v == q,
            Value::Approx(x) => (x - rat_to_f64(q)).abs() <= tol * (1.0 + x.abs()),
        }
    }

    /// Ordering that treats floats within `tol` (relative) as equal.
    pub fn cmp_tol(&self, other: &Value, tol: f64) -> Ordering {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                if (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs())) {
                    Ordering::Equal
                } else if a < b {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{}", q),
            Value::Approx(x) => write!(f, "{}", x),
        }
    }
}

fn check_k(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidDegree(k))
    } else {
        Ok(())
    }
}

fn check_c(c: &Value) -> Result<()> {
    let ok = match c {
        Value::Exact(q) => q.is_positive(),
        Value::Approx(x) => *x > 0.0 && x.is_finite(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidC(format!("{}", c)))
    }
}

/// Evaluates `a + b / c` in the representation of `c`.
fn affine_over_c(a: BigRational, b: BigRational, c: &Value) -> Value {
    match c {
        Value::Exact(q) => Value::Exact(a + b / q),
        Value::Approx(x) => Value::Approx(rat_to_f64(&a) + rat_to_f64(&b) / x),
    }
}

fn pow_km1(k: u64, e: usize) -> BigRational {
    num_traits::pow(rat(k as i64 - 1), e)
}

/// `M(k, t, c) = 2 (sum_{i=0}^{t-4} (k-1)^i + ((k-1)^{t-3} + (k-1)^{t-2}) / c)`.
pub fn m_bound(k: u64, t: usize, c: &Value) -> Result<Value> {
    check_k(k)?;
    if t < 3 {
        return Err(Error::InvalidShape(format!("M needs t >= 3, got {}", t)));
    }
    check_c(c)?;
    let head: BigRational = (0..t.saturating_sub(3)).map(|i| pow_km1(k, i)).sum();
    let tail = pow_km1(k, t - 3) + pow_km1(k, t - 2);
    Ok(match affine_over_c(head, tail, c) {
        Value::Exact(q) => Value::Exact(q * rat(2)),
        Value::Approx(x) => Value::Approx(2.0 * x),
    })
}

/// `N(k, t, c) = 1 + sum_{i=0}^{t-3} k (k-1)^i + k (k-1)^{t-2} / c`.
pub fn n_bound(k: u64, t: usize, c: &Value) -> Result<Value> {
    check_k(k)?;
    if t < 2 {
        return Err(Error::InvalidShape(format!("N needs t >= 2, got {}", t)));
    }
    check_c(c)?;
    let kk = rat(k as i64);
    let head: BigRational = BigRational::one() + (0..t - 2).map(|i| &kk * pow_km1(k, i)).sum::<BigRational>();
    let tail = &kk * pow_km1(k, t - 2);
    Ok(affine_over_c(head, tail, c))
}

fn check_theta_upper(k: u64, theta: &Theta) -> Result<()> {
    let edge_sq = rat(4 * (k as i64 - 1));
    let too_big = match theta.cmp_square(&edge_sq) {
        Some(o) => !theta.is_negative() && o != Ordering::Less,
        None => theta.value() >= spectral_radius_edge(k),
    };
    if too_big || !theta.value().is_finite() {
        Err(Error::OutOfRange(format!(
            "theta = {} must be below 2 sqrt(k - 1) = {}",
            theta,
            spectral_radius_edge(k)
        )))
    } else {
        Ok(())
    }
}

/// The unique `t >= 4` with `lambda^{(t-3)} < theta <= lambda^{(t-2)}`;
/// `theta = 0` gives `t = 4`.
pub fn locate_t(k: u64, theta: &Theta) -> Result<usize> {
    check_k(k)?;
    check_theta_upper(k, theta)?;
    if theta.is_negative() {
        return Err(Error::OutOfRange(format!("theta = {} must be nonnegative", theta)));
    }
    if theta.is_zero() {
        return Ok(4);
    }
    let mut fam = Families::new(k)?;
    for j in 2..MAX_INDEX {
        let root = lambda_j(k, j);
        let gap = theta.value() - root;
        let ord = if gap.abs() > DEFAULT_TOL * (1.0 + root) {
            if gap > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else {
            cmp_with_root(theta, root, fam.g(j), DEFAULT_TOL)
        };
        if ord != Ordering::Greater {
            return Ok(j + 2);
        }
    }
    Err(Error::OutOfRange(format!("theta = {} too close to 2 sqrt(k - 1)", theta)))
}

/// `c = -F_{t-2}(theta) / G_{t-4}(theta)`, exact when `theta^2` is rational.
pub fn c_from_theta(k: u64, t: usize, theta: &Theta) -> Result<Value> {
    check_k(k)?;
    if t < 4 {
        return Err(Error::OutOfRange(format!("t = {} below 4", t)));
    }
    let out_of_range = || Error::OutOfRange(format!("G_{}({}) vanishes", t - 4, theta));
    if theta.is_exact() {
        let mut fam = Families::new(k)?;
        let num = fam.f(t - 2).clone();
        let den = fam.g(t - 4).clone();
        if let Some(r) = theta.rational_ratio(&num, &den) {
            return Ok(Value::Exact(-r));
        }
        if theta.sign_of(&den) == Some(0) {
            return Err(out_of_range());
        }
    }
    let x = theta.value();
    let f = eval_f_seq(k, t - 2, x)[t - 2];
    let g = eval_g_seq(k, t - 4, x)[t - 4];
    if g == 0.0 {
        return Err(out_of_range());
    }
    Ok(Value::Approx(-f / g))
}

/// Which bound a [`BoundResult`] reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Bipartite,
    General,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub kind: BoundKind,
    pub k: u64,
    pub theta: Theta,
    pub t: usize,
    pub c: Value,
    pub value: Value,
    /// Equivalent `(t, c)` giving the same value at a boundary point.
    pub alternate: Option<(usize, Value)>,
    /// Description of the graphs meeting the bound with equality, if known.
    pub extremal_family: Option<&'static str>,
}

impl BoundResult {
    pub fn exact(&self) -> bool {
        self.value.is_exact()
    }

    /// Diameter of an extremal graph, `t - 1`.
    pub fn diameter(&self) -> usize {
        self.t - 1
    }
}

fn is_one(c: &Value) -> bool {
    c.approx_eq_rat(&BigRational::one(), DEFAULT_TOL)
}

fn is_integer_value(c: &Value) -> Option<u64> {
    match c {
        Value::Exact(q) if q.is_integer() => q.to_integer().to_u64(),
        _ => None,
    }
}

/// Families known to meet `M(k, d + 1, c)` with equality.
pub fn extremal_family(k: u64, d: usize, c: &Value) -> Option<&'static str> {
    let c = is_integer_value(c)?;
    match (k, d, c) {
        (2, _, 1) => Some("cycle C_{2d}"),
        (_, 2, _) if c == 1 || c == k => Some("complete bipartite graph K_{k,k}"),
        (_, 3, 1) => Some("incidence graph of a projective plane of order k - 1"),
        (_, 3, _) if c + 1 == k => Some("K_{k+1,k+1} minus a perfect matching"),
        (_, 3, _) => Some("incidence graph of a symmetric 2-(v, k, c) design"),
        (_, 4, 1) => Some("incidence graph of a generalized quadrangle of order (k - 1, k - 1)"),
        (_, 4, _) if c + 1 == k => Some("affine plane of order k minus one parallel class"),
        (_, 4, _) => Some("incidence graph of a partial geometry pg(k, k, c)"),
        (_, 6, 1) => Some("incidence graph of a generalized hexagon of order (k - 1, k - 1)"),
        _ => None,
    }
}

/// Bound on the order of a bipartite `k`-regular graph with second eigenvalue
/// at most `theta`, `0 <= theta < 2 sqrt(k - 1)`.
pub fn b_upper(k: u64, theta: &Theta) -> Result<BoundResult> {
    let t = locate_t(k, theta)?;
    let c = c_from_theta(k, t, theta)?;
    let value = m_bound(k, t, &c)?;
    let alternate = if theta.is_zero() {
        Some((3, Value::int(1)))
    } else if is_one(&c) {
        Some((t + 1, Value::int(k as i64)))
    } else {
        None
    };
    let extremal = extremal_family(k, t - 1, &c);
    Ok(BoundResult {
        kind: BoundKind::Bipartite,
        k,
        theta: theta.clone(),
        t,
        c,
        value,
        alternate,
        extremal_family: extremal,
    })
}

/// Largest zero of `CalG_j`; `-1` for `j = 1`.
pub fn r_j(k: u64, j: usize) -> Result<f64> {
    check_k(k)?;
    match j {
        0 => Err(Error::OutOfRange("CalG_0 = 1 has no zero".into())),
        1 => Ok(-1.0),
        _ => bisect_f64(|x| eval_cal_g(k, j, x), lambda_j(k, j - 1), lambda_j(k, j), 1e-15),
    }
}

/// Bound on the order of a `k`-regular graph with second eigenvalue at most
/// `theta`, `-1 < theta < 2 sqrt(k - 1)`.
pub fn v_upper(k: u64, theta: &Theta) -> Result<BoundResult> {
    check_k(k)?;
    check_theta_upper(k, theta)?;
    let at_or_below_minus_one = match theta.square() {
        Some(sq) => theta.is_negative() && sq >= &rat(1),
        None => theta.value() <= -1.0,
    };
    if at_or_below_minus_one {
        return Err(Error::OutOfRange(format!("theta = {} must exceed -1", theta)));
    }
    let mut fam = Families::new(k)?;
    let mut j = 2;
    loop {
        if j >= MAX_INDEX {
            return Err(Error::OutOfRange(format!("theta = {} too close to 2 sqrt(k - 1)", theta)));
        }
        let root = r_j(k, j)?;
        if cmp_with_root(theta, root, fam.cal_g(j), DEFAULT_TOL) != Ordering::Greater {
            break;
        }
        j += 1;
    }
    let t = j + 1;
    let num = fam.f(t - 1).clone();
    let den = fam.cal_g(t - 2).clone();
    let c = match theta.rational_ratio(&num, &den) {
        Some(r) => Value::Exact(-r),
        None => {
            let x = theta.value();
            Value::Approx(-eval_f_seq(k, t - 1, x)[t - 1] / eval_cal_g(k, t - 2, x))
        }
    };
    let value = n_bound(k, t, &c)?;
    Ok(BoundResult {
        kind: BoundKind::General,
        k,
        theta: theta.clone(),
        t,
        c,
        value,
        alternate: None,
        extremal_family: None,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub bipartite: BoundResult,
    pub general: BoundResult,
    /// Ordering of `M` against `N`.
    pub verdict: Ordering,
    /// `theta = lambda^{(t-1)}` with `c_1 = 1` and `c_2 = k`, where equality is possible.
    pub at_boundary: bool,
}

impl Comparison {
    /// `M <= N`, with equality only at a boundary point.
    pub fn consistent(&self) -> bool {
        match self.verdict {
            Ordering::Less => true,
            Ordering::Equal => self.at_boundary,
            Ordering::Greater => false,
        }
    }
}

pub fn compare(k: u64, theta: &Theta) -> Result<Comparison> {
    if theta.is_negative() || theta.is_zero() {
        return Err(Error::OutOfRange(format!("theta = {} must be positive", theta)));
    }
    let m = b_upper(k, theta)?;
    let n = v_upper(k, theta)?;
    let verdict = m.value.cmp_tol(&n.value, DEFAULT_TOL);
    let at_boundary =
        m.t == n.t && is_one(&m.c) && n.c.approx_eq_rat(&rat(k as i64), DEFAULT_TOL);
    Ok(Comparison {
        bipartite: m,
        general: n,
        verdict,
        at_boundary,
    })
}

/// Half-order bound `1 + n (n - 1) / (n - lambda^2)` for `lambda <= sqrt(n - 1)`.
pub fn hj_bound_t4(n: u64, lambda2: f64) -> Result<f64> {
    check_k(n)?;
    let nf = n as f64;
    if !(0.0..=fmath::sqrt(nf - 1.0) * (1.0 + DEFAULT_TOL)).contains(&lambda2) {
        return Err(Error::OutOfRange(format!("lambda2 = {} outside [0, sqrt(n - 1)]", lambda2)));
    }
    Ok(1.0 + nf * (nf - 1.0) / (nf - lambda2 * lambda2))
}

/// Half-order bound `n + n (n - 1) / (2n - lambda^2 - 1)` for
/// `sqrt(n - 1) <= lambda <= sqrt(2 (n - 1))`.
pub fn hj_bound_t5(n: u64, lambda2: f64) -> Result<f64> {
    check_k(n)?;
    let nf = n as f64;
    let lo = fmath::sqrt(nf - 1.0) * (1.0 - DEFAULT_TOL);
    let hi = fmath::sqrt(2.0 * (nf - 1.0)) * (1.0 + DEFAULT_TOL);
    if !(lo..=hi).contains(&lambda2) {
        return Err(Error::OutOfRange(format!(
            "lambda2 = {} outside [sqrt(n - 1), sqrt(2 (n - 1))]",
            lambda2
        )));
    }
    Ok(nf + nf * (nf - 1.0) / (2.0 * nf - lambda2 * lambda2 - 1.0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct TyComparison {
    pub improved: Value,
    pub previous: Value,
    /// `improved < previous`; fails only at `theta^2 = k - 1`.
    pub strict: bool,
}

/// `2 (1 + (k-1)/(k - theta^2) + (k-1)^2/(k - theta^2))` against
/// `2 (theta^4 + theta^2 + 1)` for `k^{1/4} < theta <= sqrt(k - 1)`.
pub fn ty_improved(k: u64, theta: &Theta) -> Result<TyComparison> {
    check_k(k)?;
    let kf = k as f64;
    let range_err = || {
        Error::OutOfRange(format!(
            "theta = {} outside (k^(1/4), sqrt(k - 1)] = ({}, {}]",
            theta,
            fmath::sqrt(fmath::sqrt(kf)),
            fmath::sqrt(kf - 1.0)
        ))
    };
    if theta.is_negative() {
        return Err(range_err());
    }
    match theta.square() {
        Some(s) => {
            let kk = rat(k as i64);
            let km1 = rat(k as i64 - 1);
            if s > &km1 || (s * s) <= kk {
                return Err(range_err());
            }
            let two = rat(2);
            let denom = &kk - s;
            let improved = &two * (BigRational::one() + (&km1 + &km1 * &km1) / &denom);
            let previous = &two * (s * s + s + BigRational::one());
            let strict = improved < previous;
            Ok(TyComparison {
                improved: Value::Exact(improved),
                previous: Value::Exact(previous),
                strict,
            })
        }
        None => {
            let y = theta.value() * theta.value();
            if y > (kf - 1.0) * (1.0 + DEFAULT_TOL) || y * y <= kf {
                return Err(range_err());
            }
            let improved = 2.0 * (1.0 + ((kf - 1.0) + (kf - 1.0) * (kf - 1.0)) / (kf - y));
            let previous = 2.0 * (y * y + y + 1.0);
            Ok(TyComparison {
                improved: Value::Approx(improved),
                previous: Value::Approx(previous),
                strict: improved < previous * (1.0 - DEFAULT_TOL),
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GirthThreshold {
    pub half_girth: usize,
    /// `2 cos(pi / l)`.
    pub theta: f64,
    /// Second eigenvalue of `B(k, l + 1, 1)`: `2 sqrt(k - 1) cos(pi / l)`.
    pub quotient_theta: f64,
    /// `M(k, l + 1, 1)`, the least order of a bipartite graph of girth `2l`.
    pub min_order: Value,
}

pub fn girth_threshold(k: u64, girth: usize) -> Result<GirthThreshold> {
    check_k(k)?;
    if !girth.is_multiple_of(2) || girth < 4 {
        return Err(Error::OutOfRange(format!("girth {} must be even and at least 4", girth)));
    }
    let l = girth / 2;
    let theta = if l == 2 {
        0.0
    } else {
        2.0 * fmath::cos(core::f64::consts::PI / l as f64)
    };
    Ok(GirthThreshold {
        half_girth: l,
        theta,
        quotient_theta: lambda_j(k, l - 1),
        min_order: m_bound(k, l + 1, &Value::int(1))?,
    })
}

/// `-theta G_{t-3}(theta) / F_{t-2}(theta) + 1`, which equals `k / c`.
pub fn k_over_c_identity(k: u64, t: usize, theta: f64) -> f64 {
    let g = eval_g_seq(k, t - 3, theta)[t - 3];
    let f = eval_f_seq(k, t - 2, theta)[t - 2];
    -theta * g / f + 1.0
}

/// Bound values on a grid of thetas, for sweeps.
pub fn b_upper_grid(k: u64, thetas: &[f64]) -> Vec<Result<BoundResult>> {
    thetas.iter().map(|&x| b_upper(k, &Theta::from_f64(x))).collect()
}
