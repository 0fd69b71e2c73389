//! Feasibility of bipartite distance-regular graphs with quotient `B(k, d+1, c)`.
//!
//! The nontrivial eigenvalues are the zeros of `S_d = (c-1) G_{d-3} + G_{d-1}`,
//! their squares scaled by `k - 1` are the zeros of
//! `H_d(z) = (c-1) P_{m-1,e}(z) + (k-1) P_{m,e}(z)`, and every multiplicity must
//! be a positive integer. The screens below combine these facts with
//! reductions of `H_d` modulo small primes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::bounds::{m_bound, Value};
use crate::error::{Error, Result};
use crate::fmath;
use crate::gfpoly::{gf_factor, is_prime, q_splitting_screen, residue_pairs, FactorizationWitness, GFPoly, SplittingVerdict};
use crate::orthopoly::{eval_g_seq, p_sequence};
use crate::poly::{rat, rat_to_f64, ExactPolynomial};
use crate::roots::bisect_f64;

/// Tolerance for integrality and for the order sum.
pub const MULTIPLICITY_TOL: f64 = 1e-6;

/// Largest degree searched for the threshold above which the irrational
/// budget applies.
const MAX_K_SEARCH: u64 = 100_000;

/// Parameters `(k, d, c)` of a candidate graph with quotient `B(k, d+1, c)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DrgCandidate {
    pub k: u64,
    pub d: usize,
    pub c: u64,
    pub epsilon: u8,
    pub m: usize,
    pub d_prime: usize,
    /// `M(k, d+1, c)`; not necessarily an integer.
    pub n: BigRational,
}

impl DrgCandidate {
    pub fn new(k: u64, d: usize, c: u64) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidCandidate(format!("k must be at least 3, got {}", k)));
        }
        if d < 3 {
            return Err(Error::InvalidCandidate(format!("d must be at least 3, got {}", d)));
        }
        if c < 1 || c >= k {
            return Err(Error::InvalidCandidate(format!("c must lie in [1, k-1], got {}", c)));
        }
        let epsilon = if d.is_multiple_of(2) { 1 } else { 0 };
        let n = match m_bound(k, d + 1, &Value::int(c as i64))? {
            Value::Exact(q) => q,
            Value::Approx(_) => unreachable!("integer c gives an exact bound"),
        };
        Ok(Self {
            k,
            d,
            c,
            epsilon,
            m: (d - 1 + epsilon as usize) / 2,
            d_prime: (d - 1) / 2,
            n,
        })
    }

    pub fn order_is_integral(&self) -> bool {
        self.n.is_integer()
    }

    pub fn n_f64(&self) -> f64 {
        rat_to_f64(&self.n)
    }

    /// `(c - 1, k - 1)`.
    pub fn primed(&self) -> (u64, u64) {
        (self.c - 1, self.k - 1)
    }
}

/// `U_0(y), ..., U_n(y)`.
fn chebyshev_u(n: usize, y: f64) -> Vec<f64> {
    let mut u = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let v = match i {
            0 => 1.0,
            1 => 2.0 * y,
            _ => 2.0 * y * u[i - 1] - u[i - 2],
        };
        u.push(v);
    }
    u
}

/// `S_d(2 sqrt(k-1) cos a) / sqrt(k-1)^{d-1}`.
fn scaled_s(k: u64, d: usize, c: u64, a: f64) -> f64 {
    let u = chebyshev_u(d - 1, fmath::cos(a));
    (c as f64 - 1.0) / (k as f64 - 1.0) * u[d - 3] + u[d - 1]
}

/// Nontrivial eigenvalues of a candidate.
#[derive(Clone, Debug, PartialEq)]
pub struct DrgSpectrum {
    /// Positive nontrivial eigenvalues, descending.
    pub positive: Vec<f64>,
    /// Zero is an eigenvalue exactly when `d` is even.
    pub has_zero: bool,
}

impl DrgSpectrum {
    /// All `d - 1` nontrivial eigenvalues, descending.
    pub fn nontrivial(&self) -> Vec<f64> {
        let mut v = self.positive.clone();
        if self.has_zero {
            v.push(0.0);
        }
        v.extend(self.positive.iter().rev().map(|x| -x));
        v
    }
}

/// Zeros of `S_d`, one bisection per interlacing bracket
/// `(i pi / d, i pi / (d - 1))` in the angle `x = 2 sqrt(k-1) cos a`.
pub fn drg_spectrum(cand: &DrgCandidate) -> Result<DrgSpectrum> {
    let (k, d, c) = (cand.k, cand.d, cand.c);
    let df = d as f64;
    let delta = PI / (4.0 * df * (df - 1.0));
    let edge = 2.0 * fmath::sqrt((k - 1) as f64);
    let mut positive = Vec::with_capacity(cand.d_prime);
    for i in 1..=cand.d_prime {
        let lo = i as f64 * PI / df - delta;
        let hi = i as f64 * PI / (df - 1.0) + delta;
        let a = bisect_f64(|a| scaled_s(k, d, c, a), lo, hi, 1e-15)
            .map_err(|_| Error::BracketFailure(format!("zero {} of S_{} for k = {}, c = {}", i, d, k, c)))?;
        positive.push(edge * fmath::cos(a));
    }
    Ok(DrgSpectrum {
        positive,
        has_zero: d % 2 == 0,
    })
}

fn check_degenerate(k: u64, c: u64) -> Result<()> {
    if k == 2 && c == 1 {
        Err(Error::DegenerateParameters)
    } else {
        Ok(())
    }
}

/// Multiplicity of a nontrivial eigenvalue `theta` from its square `phi (k-1)`.
pub fn multiplicity_phi(k: u64, d: usize, c: u64, n: f64, phi: f64) -> Result<f64> {
    check_degenerate(k, c)?;
    let (kf, cf, df) = (k as f64, c as f64, d as f64);
    let kc = kf - cf;
    let num = n * kf * (kf - 1.0) * (phi - 4.0) * ((cf - 1.0) * (kf - 1.0) * phi + kc * kc);
    let den = 2.0
        * ((kf - 1.0) * phi - kf * kf)
        * ((df - 1.0) * (cf - 1.0) * (kf - 1.0) * phi + df * kc * kc + 2.0 * (cf - 1.0) * kc);
    Ok(num / den)
}

/// Exact multiplicity when `phi` is rational.
pub fn multiplicity_phi_exact(k: u64, d: usize, c: u64, n: &BigRational, phi: &BigRational) -> Result<BigRational> {
    check_degenerate(k, c)?;
    let (kk, cc, dd) = (rat(k as i64), rat(c as i64), rat(d as i64));
    let one = rat(1);
    let kc = &kk - &cc;
    let num = n * &kk * (&kk - &one) * (phi - rat(4)) * ((&cc - &one) * (&kk - &one) * phi + &kc * &kc);
    let den = rat(2)
        * ((&kk - &one) * phi - &kk * &kk)
        * ((&dd - &one) * (&cc - &one) * (&kk - &one) * phi + &dd * &kc * &kc + rat(2) * (&cc - &one) * &kc);
    if den.is_zero() {
        return Err(Error::DegenerateParameters);
    }
    Ok(num / den)
}

/// Multiplicity of the nontrivial eigenvalue `theta` of a candidate.
pub fn multiplicity(cand: &DrgCandidate, theta: f64) -> Result<f64> {
    multiplicity_phi(cand.k, cand.d, cand.c, cand.n_f64(), theta * theta / (cand.k - 1) as f64)
}

/// `f_{d-1}(x) = (x - 1 + c) G_{d-2} + (x - k + c) G_{d-3} - (k - 1) G_{d-4}`,
/// with `G_{-1} = 0`.
pub fn f_last(k: u64, d: usize, c: u64, x: f64) -> f64 {
    let g = eval_g_seq(k, d - 2, x);
    let (kf, cf) = (k as f64, c as f64);
    let g4 = if d >= 4 { g[d - 4] } else { 0.0 };
    (x - 1.0 + cf) * g[d - 2] + (x - kf + cf) * g[d - 3] - (kf - 1.0) * g4
}

/// `S_d'(x)` from the recurrence for `G_i'`.
pub fn s_derivative(k: u64, d: usize, c: u64, x: f64) -> f64 {
    let km1 = (k - 1) as f64;
    let g = eval_g_seq(k, d - 1, x);
    let mut dg = Vec::with_capacity(d);
    for i in 0..d {
        let v = match i {
            0 => 0.0,
            1 => 1.0,
            _ => g[i - 1] + x * dg[i - 1] - km1 * dg[i - 2],
        };
        dg.push(v);
    }
    (c as f64 - 1.0) * dg[d - 3] + dg[d - 1]
}

/// The classical multiplicity formula
/// `n c k (k - c) (k-1)^{d-2} / ((k^2 - x^2) S_d'(x) f_{d-1}(x))`.
pub fn multiplicity_classical(cand: &DrgCandidate, theta: f64) -> f64 {
    let (k, d, c) = (cand.k, cand.d, cand.c);
    let (kf, cf) = (k as f64, c as f64);
    let num = cand.n_f64() * cf * kf * (kf - cf) * fmath::powi(kf - 1.0, (d - 2) as i32);
    num / ((kf * kf - theta * theta) * s_derivative(k, d, c, theta) * f_last(k, d, c, theta))
}

/// One nontrivial eigenvalue and its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicityRecord {
    pub theta: f64,
    pub phi: f64,
    pub m_theta: f64,
    /// Exact multiplicity when `phi` is rational.
    pub exact: Option<BigRational>,
    pub is_integral: bool,
}

/// Integrality, unimodality and order-sum checks for a candidate.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicityCheck {
    /// Positive eigenvalues, descending.
    pub records: Vec<MultiplicityRecord>,
    /// Eigenvalue zero when `d` is even.
    pub zero: Option<MultiplicityRecord>,
    pub integral: bool,
    pub unimodal: bool,
    pub total: f64,
    pub total_ok: bool,
}

impl MultiplicityCheck {
    pub fn feasible(&self) -> bool {
        self.integral && self.unimodal && self.total_ok
    }
}

fn near_integer(x: f64) -> bool {
    let r = x - (x + 0.5).floor();
    r.abs() <= MULTIPLICITY_TOL * (1.0 + x.abs()) && x > 0.5
}

/// Increases strictly, then decreases strictly, with at most one tie at the peak.
pub fn is_unimodal(seq: &[f64]) -> bool {
    let eq = |a: f64, b: f64| (a - b).abs() <= MULTIPLICITY_TOL * (1.0 + a.abs());
    let mut i = 0;
    while i + 1 < seq.len() && seq[i + 1] > seq[i] && !eq(seq[i], seq[i + 1]) {
        i += 1;
    }
    if i + 1 < seq.len() && eq(seq[i], seq[i + 1]) {
        i += 1;
    }
    while i + 1 < seq.len() {
        if !(seq[i + 1] < seq[i]) || eq(seq[i], seq[i + 1]) {
            return false;
        }
        i += 1;
    }
    true
}

/// Rational roots of `H_d`, read off its linear factors over the rationals.
fn rational_phis(verdict: Option<&SplittingVerdict>) -> Vec<BigRational> {
    verdict
        .map(|v| {
            v.linear_factors
                .iter()
                .map(|l| -l.coeff(0) / l.coeff(1))
                .collect()
        })
        .unwrap_or_default()
}

fn record(cand: &DrgCandidate, theta: f64, rationals: &[BigRational]) -> Result<MultiplicityRecord> {
    let phi = theta * theta / (cand.k - 1) as f64;
    let m_theta = multiplicity(cand, theta)?;
    let exact = rationals
        .iter()
        .find(|q| (rat_to_f64(q) - phi).abs() < 1e-7 * (1.0 + phi))
        .map(|q| multiplicity_phi_exact(cand.k, cand.d, cand.c, &cand.n, q))
        .transpose()?;
    let is_integral = match &exact {
        Some(q) => q.is_integer() && q.is_positive(),
        None => near_integer(m_theta),
    };
    Ok(MultiplicityRecord {
        theta,
        phi,
        m_theta,
        exact,
        is_integral,
    })
}

fn check_with(cand: &DrgCandidate, verdict: Option<&SplittingVerdict>) -> Result<MultiplicityCheck> {
    let spec = drg_spectrum(cand)?;
    let mut rationals = rational_phis(verdict);
    let records = spec
        .positive
        .iter()
        .map(|&t| record(cand, t, &rationals))
        .collect::<Result<Vec<_>>>()?;
    let zero = if spec.has_zero {
        rationals.push(BigRational::zero());
        Some(record(cand, 0.0, &rationals)?)
    } else {
        None
    };
    let ms: Vec<f64> = records.iter().map(|r| r.m_theta).collect();
    let total = 2.0 + 2.0 * ms.iter().sum::<f64>() + zero.as_ref().map_or(0.0, |z| z.m_theta);
    let n = cand.n_f64();
    Ok(MultiplicityCheck {
        integral: records.iter().chain(zero.iter()).all(|r| r.is_integral) && cand.order_is_integral(),
        unimodal: is_unimodal(&ms),
        total_ok: (total - n).abs() <= MULTIPLICITY_TOL * n,
        total,
        records,
        zero,
    })
}

/// Multiplicities of every nontrivial eigenvalue with the three checks.
pub fn check_multiplicities(cand: &DrgCandidate) -> Result<MultiplicityCheck> {
    let verdict = q_splitting_screen(&hhat_poly(cand)).ok();
    check_with(cand, verdict.as_ref())
}

/// `3 sqrt(3) (d-1) / 4 * (1 - 2/k)^2 (1 + cos 2v) sin^2 2w` for
/// `pi/4 < v < w <= pi/2`.
pub fn l_value(k: u64, d: usize, v: f64, w: f64) -> Result<f64> {
    let eps = 1e-12;
    if !(v > PI / 4.0 && v < w && w <= PI / 2.0 + eps) {
        return Err(Error::AngleOrder { v, w });
    }
    let a = 1.0 - 2.0 / k as f64;
    let s = fmath::sin(2.0 * w);
    Ok(3.0 * fmath::sqrt(3.0) * (d as f64 - 1.0) / 4.0 * a * a * (1.0 + fmath::cos(2.0 * v)) * s * s)
}

/// The smallest admissible `j` with its angle pair and `L` value.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrationalBudget {
    pub j: usize,
    pub v: f64,
    pub w: f64,
    pub l: f64,
}

/// Smallest `j` with `0 <= j < d' - (d+3)/4` and `L(u_{d'-j-1}, u_{d'-j}) >= 1`,
/// where `u_i = i pi / (d - 1)`; at most `j` positive eigenvalues then have
/// irrational square.
pub fn max_irrational_count(k: u64, d: usize) -> Result<Option<IrrationalBudget>> {
    if k < 3 || d < 3 {
        return Err(Error::InvalidCandidate(format!("need k >= 3 and d >= 3, got k = {}, d = {}", k, d)));
    }
    let dp = (d - 1) / 2;
    let u = |i: usize| i as f64 * PI / (d as f64 - 1.0);
    let mut j = 0;
    // j < d' - (d+3)/4  <=>  4j < 4d' - d - 3
    while (4 * j + d + 3) < 4 * dp {
        let (v, w) = (u(dp - j - 1), u(dp - j));
        let l = l_value(k, d, v, w)?;
        if l >= 1.0 {
            return Ok(Some(IrrationalBudget { j, v, w, l }));
        }
        j += 1;
    }
    Ok(None)
}

/// Smallest `k >= 3` from which the budget is at most `j`. The only
/// `k`-dependent factor of `L` is increasing, so the budget holds for all
/// larger `k` as well.
pub fn budget_threshold(d: usize, j: usize) -> Result<Option<(u64, IrrationalBudget)>> {
    for k in 3..MAX_K_SEARCH {
        if let Some(b) = max_irrational_count(k, d)? {
            if b.j <= j {
                return Ok(Some((k, b)));
            }
        }
    }
    Ok(None)
}

/// `ord_p(a)`, with `None` standing for infinity at `a = 0`.
pub fn ord(p: u64, mut a: u64) -> Option<u32> {
    if a == 0 {
        return None;
    }
    let mut s = 0;
    while a.is_multiple_of(p) {
        a /= p;
        s += 1;
    }
    Some(s)
}

fn ord_cmp(p: u64, a: u64, b: u64) -> core::cmp::Ordering {
    use core::cmp::Ordering::*;
    match (ord(p, a), ord(p, b)) {
        (None, None) => Equal,
        (None, Some(_)) => Greater,
        (Some(_), None) => Less,
        (Some(x), Some(y)) => x.cmp(&y),
    }
}

/// Reduction of the content-free `H_d` modulo 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case2 {
    A,
    B,
    C,
}

/// Reduction of the content-free `H_d` modulo 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case3 {
    A,
    B,
    C,
    D,
}

impl Case2 {
    pub const ALL: [Case2; 3] = [Case2::A, Case2::B, Case2::C];

    /// Shift `s` such that `d - s = 2^r w` with `w` in `{1, 3, 5}`.
    pub fn d_form(self) -> &'static str {
        match self {
            Case2::A => "d = 2^r w, w in {1,3,5}",
            Case2::B => "d - 2 = 2^r w, w in {1,3,5}",
            Case2::C => "d - 1 = 2^r w, w in {1,3,5}",
        }
    }

    pub fn admits(self, d: usize) -> bool {
        let n = match self {
            Case2::A => d,
            Case2::B => d - 2,
            Case2::C => d - 1,
        };
        has_form(n as u64, 2, &[1, 3, 5])
    }

    pub fn letter(self) -> char {
        match self {
            Case2::A => 'A',
            Case2::B => 'B',
            Case2::C => 'C',
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "A" => Some(Case2::A),
            "B" => Some(Case2::B),
            "C" => Some(Case2::C),
            _ => None,
        }
    }
}

impl Case3 {
    pub const ALL: [Case3; 4] = [Case3::A, Case3::B, Case3::C, Case3::D];

    pub fn d_form(self) -> &'static str {
        match self {
            Case3::A => "d = 3^r w, w in {1,2,4,5,8,10}",
            Case3::B => "d - 2 = 3^r w, w in {1,2,4,5,8,10}",
            Case3::C => "d - 1 = 3^r w, w in {1,2,4,5,8,10}",
            Case3::D => "2d - 2 = 3^r w, w in {1,2,4,5,8,10}",
        }
    }

    pub fn admits(self, d: usize) -> bool {
        let n = match self {
            Case3::A => d,
            Case3::B => d - 2,
            Case3::C => d - 1,
            Case3::D => 2 * d - 2,
        };
        has_form(n as u64, 3, &[1, 2, 4, 5, 8, 10])
    }

    pub fn letter(self) -> char {
        match self {
            Case3::A => 'a',
            Case3::B => 'b',
            Case3::C => 'c',
            Case3::D => 'd',
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "a" => Some(Case3::A),
            "b" => Some(Case3::B),
            "c" => Some(Case3::C),
            "d" => Some(Case3::D),
            _ => None,
        }
    }
}

impl fmt::Display for Case2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl fmt::Display for Case3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// `n = base^r w` for some `r >= 0` and `w` in `ws`.
fn has_form(mut n: u64, base: u64, ws: &[u64]) -> bool {
    if n == 0 {
        return false;
    }
    loop {
        if ws.contains(&n) {
            return true;
        }
        if !n.is_multiple_of(base) {
            return false;
        }
        n /= base;
    }
}

pub fn mod2_case(c: u64, k: u64) -> Case2 {
    match ord_cmp(2, c - 1, k - 1) {
        core::cmp::Ordering::Greater => Case2::A,
        core::cmp::Ordering::Less => Case2::B,
        core::cmp::Ordering::Equal => Case2::C,
    }
}

pub fn mod3_case(c: u64, k: u64) -> Case3 {
    let (c1, k1) = (c - 1, k - 1);
    match ord_cmp(3, c1, k1) {
        core::cmp::Ordering::Greater => Case3::A,
        core::cmp::Ordering::Less => Case3::B,
        core::cmp::Ordering::Equal => {
            let s = ord(3, c1).unwrap_or(0);
            let (c2, k2) = (c1 / 3u64.pow(s), k1 / 3u64.pow(s));
            if (c2 + 3 - k2 % 3) % 3 == 0 {
                Case3::C
            } else {
                Case3::D
            }
        }
    }
}

/// Both case letters of `(c, k)` with their constraints on `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModCaseReport {
    pub case2: Case2,
    pub case3: Case3,
    pub d_form2: &'static str,
    pub d_form3: &'static str,
    /// The matching row of the table of admissible diameters, when present.
    pub table7_row: Option<Vec<usize>>,
}

impl ModCaseReport {
    pub fn admits(&self, d: usize) -> bool {
        self.case2.admits(d) && self.case3.admits(d)
    }
}

pub fn mod_case(c: u64, k: u64, table: Option<&Table7>) -> Result<ModCaseReport> {
    if k < 3 || c < 1 || c >= k {
        return Err(Error::InvalidCandidate(format!("need k >= 3 and 1 <= c <= k - 1, got c = {}, k = {}", c, k)));
    }
    let case2 = mod2_case(c, k);
    let case3 = mod3_case(c, k);
    Ok(ModCaseReport {
        case2,
        case3,
        d_form2: case2.d_form(),
        d_form3: case3.d_form(),
        table7_row: table.and_then(|t| t.lookup(case2, case3)).map(|r| r.d.clone()),
    })
}

/// One row of the table of admissible diameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table7Row {
    pub case2: Case2,
    pub case3: Vec<Case3>,
    pub d: Vec<usize>,
}

/// Admissible diameters for each pair of residue cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table7 {
    pub rows: Vec<Table7Row>,
}

fn span(lo: usize, hi: usize, extra: &[usize]) -> Vec<usize> {
    (lo..=hi).chain(extra.iter().copied()).collect()
}

impl Table7 {
    pub fn new(rows: Vec<Table7Row>) -> Self {
        Self { rows }
    }

    pub fn builtin() -> Self {
        use Case2 as P;
        use Case3 as Q;
        let row = |case2, case3: &[Case3], d| Table7Row {
            case2,
            case3: case3.to_vec(),
            d,
        };
        Self::new(alloc::vec![
            row(P::A, &[Q::A], span(3, 6, &[8, 10, 12, 24])),
            row(P::A, &[Q::B], span(3, 6, &[8, 10, 12, 20, 32])),
            row(P::A, &[Q::C, Q::D], span(3, 6, &[10, 16])),
            row(P::B, &[Q::A], span(3, 6, &[8, 10, 12, 18, 162])),
            row(P::B, &[Q::B], span(3, 8, &[10, 12, 14, 26])),
            row(P::B, &[Q::C, Q::D], span(3, 7, &[10, 82])),
            row(P::C, &[Q::A], span(3, 6, &[9, 81])),
            row(P::C, &[Q::B], span(3, 7, &[11, 17])),
            row(P::C, &[Q::C], span(3, 7, &[9, 11, 13, 25])),
            row(P::C, &[Q::D], span(3, 7, &[13])),
        ])
    }

    pub fn lookup(&self, case2: Case2, case3: Case3) -> Option<&Table7Row> {
        self.rows.iter().find(|r| r.case2 == case2 && r.case3.contains(&case3))
    }

    /// Case pairs whose row lists `d`.
    pub fn rows_admitting(&self, d: usize) -> Vec<(Case2, Case3)> {
        self.rows
            .iter()
            .filter(|r| r.d.contains(&d))
            .flat_map(|r| r.case3.iter().map(move |&c3| (r.case2, c3)))
            .collect()
    }

    pub fn contains(&self, d: usize) -> bool {
        self.rows.iter().any(|r| r.d.contains(&d))
    }

    /// Sorted union of all listed diameters.
    pub fn all_d(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().flat_map(|r| r.d.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Entries `(case2, case3, d)` that violate their row's constraints.
    pub fn inconsistencies(&self) -> Vec<(Case2, Case3, usize)> {
        let mut out = Vec::new();
        for r in &self.rows {
            for &c3 in &r.case3 {
                for &d in &r.d {
                    if !(r.case2.admits(d) && c3.admits(d)) {
                        out.push((r.case2, c3, d));
                    }
                }
            }
        }
        out
    }
}

/// `a P_{m-1,e} + b P_{m,e}` over the integers.
fn h_combination(d: usize, a: i64, b: i64) -> ExactPolynomial {
    let epsilon = if d.is_multiple_of(2) { 1 } else { 0 };
    let m = (d - 1 + epsilon as usize) / 2;
    let ps = p_sequence(m, epsilon).expect("epsilon is 0 or 1");
    &ps[m - 1].scale(&rat(a)) + &ps[m].scale(&rat(b))
}

/// `H_d(z) = (c-1) P_{m-1,e}(z) + (k-1) P_{m,e}(z)`.
pub fn h_poly(cand: &DrgCandidate) -> ExactPolynomial {
    let (c1, k1) = cand.primed();
    h_combination(cand.d, c1 as i64, k1 as i64)
}

/// `H_d` divided by its content.
pub fn hhat_poly(cand: &DrgCandidate) -> ExactPolynomial {
    ExactPolynomial::from_bigints(&h_poly(cand).primitive_integer())
}

/// Integer coefficients of the content-free `H_d`, constant term first.
pub fn hhat(cand: &DrgCandidate) -> Vec<BigInt> {
    h_poly(cand).primitive_integer()
}

pub fn hhat_mod_p(cand: &DrgCandidate, p: u64) -> Result<GFPoly> {
    GFPoly::from_bigints(p, &hhat(cand))
}

/// `c' P_{m-1,e} + k' P_{m,e}` reduced modulo `p` for residues `c'`, `k'`.
pub fn screen_poly(d: usize, p: u64, c1: u64, k1: u64) -> Result<GFPoly> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let h = h_combination(d, c1 as i64, k1 as i64);
    GFPoly::from_exact(p, &h)
}

/// Factorization of one residue pair.
#[derive(Clone, Debug, PartialEq)]
pub struct PairWitness {
    pub c1: u64,
    pub k1: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    pub quadratic_count: usize,
    /// Blocked under the screen's criterion.
    pub blocked: bool,
    /// Blocked only when irrational roots are counted in conjugate pairs.
    pub ambiguous: bool,
    pub factorization: FactorizationWitness,
}

/// Which factor pattern blocks a residue pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScreenCriterion {
    /// Some irreducible factor has degree at least three.
    CubicFactor,
    /// A factor of degree at least three, or more than `budget` irreducible
    /// quadratic factors counted with multiplicity.
    QuadraticCount { budget: usize },
}

/// Outcome of a screen over all nonzero residue pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct GfScreenReport {
    pub d: usize,
    pub p: u64,
    pub criterion: ScreenCriterion,
    pub pairs: Vec<PairWitness>,
    pub all_pairs_blocked: bool,
    pub ambiguous_pairs: usize,
}

impl GfScreenReport {
    pub fn unblocked(&self) -> impl Iterator<Item = &PairWitness> {
        self.pairs.iter().filter(|w| !w.blocked)
    }
}

/// Factors the screening polynomial of a single pair.
pub fn screen_pair(d: usize, p: u64, c1: u64, k1: u64, criterion: ScreenCriterion) -> Result<PairWitness> {
    let f = screen_poly(d, p, c1, k1)?;
    let w = gf_factor(&f)?;
    let q = w.count_of_degree(2);
    let cubic = w.max_irreducible_degree >= 3;
    let (blocked, ambiguous) = match criterion {
        ScreenCriterion::CubicFactor => (cubic, false),
        ScreenCriterion::QuadraticCount { budget } => {
            let literal = cubic || q > budget;
            let paired = cubic || q > budget / 2;
            (literal, paired && !literal)
        }
    };
    Ok(PairWitness {
        c1,
        k1,
        min_degree: w.min_irreducible_degree,
        max_degree: w.max_irreducible_degree,
        quadratic_count: q,
        blocked,
        ambiguous,
        factorization: w,
    })
}

/// Runs a screen over every pair in `GF(p)^2 \ {(0, 0)}`.
pub fn gf_screen(d: usize, p: u64, criterion: ScreenCriterion) -> Result<GfScreenReport> {
    if d < 5 {
        return Err(Error::InvalidCandidate(format!("screens need d >= 5, got {}", d)));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pairs = residue_pairs(p)
        .into_iter()
        .map(|(c1, k1)| screen_pair(d, p, c1, k1, criterion))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_screen(d, p, criterion, pairs))
}

/// Collects per-pair witnesses, which may be computed in any order.
pub fn assemble_screen(d: usize, p: u64, criterion: ScreenCriterion, mut pairs: Vec<PairWitness>) -> GfScreenReport {
    pairs.sort_by_key(|w| (w.c1, w.k1));
    GfScreenReport {
        d,
        p,
        criterion,
        all_pairs_blocked: pairs.iter().all(|w| w.blocked),
        ambiguous_pairs: pairs.iter().filter(|w| w.ambiguous).count(),
        pairs,
    }
}

/// Degree-three screen: every pair needs an irreducible factor of degree at least three.
pub fn gf_factor_screen(d: usize, p: u64) -> Result<GfScreenReport> {
    gf_screen(d, p, ScreenCriterion::CubicFactor)
}

/// How a diameter is attacked beyond the table of admissible values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EliminationPlan {
    /// Degree-three screen modulo `p`.
    Cubic { p: u64 },
    /// Irrational budget `j` for large `k`, splitting over the rationals for
    /// small `k`, and a quadratic-count screen modulo `p`.
    Budget { budget: usize, p: u64 },
}

pub fn elimination_plan(d: usize) -> Option<EliminationPlan> {
    match d {
        17 => Some(EliminationPlan::Cubic { p: 43 }),
        18 | 81 | 82 | 162 => Some(EliminationPlan::Cubic { p: 5 }),
        20 | 32 => Some(EliminationPlan::Cubic { p: 7 }),
        11 => Some(EliminationPlan::Budget { budget: 1, p: 2 }),
        16 | 24 | 25 | 26 => Some(EliminationPlan::Budget { budget: 2, p: 3 }),
        _ => None,
    }
}

/// Splitting of `H_d` over the rationals for one `(k, c)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalScreenEntry {
    pub k: u64,
    pub c: u64,
    pub splits: bool,
    pub irrational_roots: usize,
    /// Degree of the part left after removing linear and quadratic factors.
    pub residual_degree: usize,
    /// Prime at which a factor of degree at least three was already visible.
    pub modular_prime: Option<u64>,
}

pub fn rational_screen(k: u64, d: usize, c: u64) -> Result<RationalScreenEntry> {
    let cand = DrgCandidate::new(k, d, c)?;
    let v = q_splitting_screen(&hhat_poly(&cand))?;
    Ok(RationalScreenEntry {
        k,
        c,
        splits: v.splits_deg_le_2,
        irrational_roots: v.irrational_root_count(),
        residual_degree: v.residual.degree().unwrap_or(0),
        modular_prime: v.modular_witness.map(|w| w.p),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence {
    /// `d` is listed in no row of the table of admissible diameters.
    NotInTable7,
    /// Case pairs whose row lists `d`.
    Table7Rows(Vec<(Case2, Case3)>),
    GfScreen(GfScreenReport),
    /// From `k_from` on, at most `budget` positive eigenvalues have irrational square.
    IrrationalBudget { budget: usize, k_from: u64, found: IrrationalBudget },
    /// `H_d` has an irreducible factor of degree at least three for each entry.
    RationalScreen(Vec<RationalScreenEntry>),
    GfCountScreen(GfScreenReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Eliminated,
    Open,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Eliminated => "ELIMINATED",
            Verdict::Open => "OPEN",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NonexistenceReport {
    pub d: usize,
    pub verdict: Verdict,
    pub mechanism: String,
    pub evidence: Vec<Evidence>,
}

/// Evidence chain for the diameter `d`, re-running every screen involved.
/// `prime` overrides the default prime of a cubic screen.
pub fn nonexistence_report(d: usize, table: &Table7, prime: Option<u64>) -> Result<NonexistenceReport> {
    if d < 3 {
        return Err(Error::InvalidCandidate(format!("d must be at least 3, got {}", d)));
    }
    let rows = table.rows_admitting(d);
    if rows.is_empty() {
        return Ok(NonexistenceReport {
            d,
            verdict: Verdict::Eliminated,
            mechanism: String::from("no residue case modulo 2 and 3 admits d"),
            evidence: alloc::vec![Evidence::NotInTable7],
        });
    }
    let mut evidence = alloc::vec![Evidence::Table7Rows(rows)];
    let plan = match (prime, elimination_plan(d)) {
        (Some(p), _) => Some(EliminationPlan::Cubic { p }),
        (None, plan) => plan,
    };
    let (verdict, mechanism) = match plan {
        None => (Verdict::Open, String::from("admitted by the residue tables; no further screen")),
        Some(EliminationPlan::Cubic { p }) => {
            let screen = gf_factor_screen(d, p)?;
            let ok = screen.all_pairs_blocked;
            evidence.push(Evidence::GfScreen(screen));
            if ok {
                (Verdict::Eliminated, format!("irreducible factor of degree >= 3 over GF({}) for every pair", p))
            } else {
                (Verdict::Open, format!("some pair over GF({}) has only factors of degree <= 2", p))
            }
        }
        Some(EliminationPlan::Budget { budget, p }) => budget_chain(d, budget, p, &mut evidence)?,
    };
    Ok(NonexistenceReport {
        d,
        verdict,
        mechanism,
        evidence,
    })
}

fn budget_chain(d: usize, budget: usize, p: u64, evidence: &mut Vec<Evidence>) -> Result<(Verdict, String)> {
    let Some((k_from, found)) = budget_threshold(d, budget)? else {
        return Ok((Verdict::Open, format!("no k up to {} reaches budget {}", MAX_K_SEARCH, budget)));
    };
    evidence.push(Evidence::IrrationalBudget { budget, k_from, found });
    let mut entries = Vec::new();
    for k in 3..k_from {
        for c in 1..k {
            entries.push(rational_screen(k, d, c)?);
        }
    }
    let small_ok = entries.iter().all(|e| !e.splits);
    evidence.push(Evidence::RationalScreen(entries));
    let screen = gf_screen(d, p, ScreenCriterion::QuadraticCount { budget })?;
    let count_ok = screen.all_pairs_blocked;
    let ambiguous = screen.ambiguous_pairs;
    let unblocked = screen.unblocked().count();
    evidence.push(Evidence::GfCountScreen(screen));
    Ok(if small_ok && count_ok {
        (
            Verdict::Eliminated,
            format!(
                "k >= {}: at most {} irrational eigenvalue square(s), contradicted over GF({}); k < {}: no splitting over Q",
                k_from, budget, p, k_from
            ),
        )
    } else if !small_ok {
        (Verdict::Open, format!("H_d splits over Q for some k < {}", k_from))
    } else {
        (
            Verdict::Open,
            format!(
                "{} pair(s) over GF({}) unblocked ({} blocked only under conjugate counting)",
                unblocked, p, ambiguous
            ),
        )
    })
}

/// Everything known about one candidate.
#[derive(Clone, Debug, PartialEq)]
pub struct FeasibilityReport {
    pub candidate: DrgCandidate,
    pub check: MultiplicityCheck,
    pub mod_case: ModCaseReport,
    pub d_admitted: bool,
    pub hhat: ExactPolynomial,
    pub irrational_phi: Option<usize>,
    pub budget: Option<IrrationalBudget>,
}

pub fn feasibility_report(cand: &DrgCandidate, table: &Table7) -> Result<FeasibilityReport> {
    let hhat = hhat_poly(cand);
    let verdict = q_splitting_screen(&hhat).ok();
    let check = check_with(cand, verdict.as_ref())?;
    let mc = mod_case(cand.c, cand.k, Some(table))?;
    Ok(FeasibilityReport {
        d_admitted: mc.admits(cand.d) && mc.table7_row.as_ref().is_some_and(|r| r.contains(&cand.d)),
        candidate: cand.clone(),
        check,
        mod_case: mc,
        irrational_phi: verdict.map(|v| v.irrational_root_count()),
        budget: max_irrational_count(cand.k, cand.d)?,
        hhat,
    })
}

/// Integer value of `x` if it is one.
pub fn as_integer(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// `gcd(c - 1, k - 1)`, the content of `H_d`.
pub fn content(cand: &DrgCandidate) -> u64 {
    let (c1, k1) = cand.primed();
    c1.gcd(&k1)
}
