//! Real root localization: Sturm chains over the rationals and bisection.
//!
//! Exact paths work on dyadic midpoints, so every sign decision is exact.
//! The float path is only used where a guaranteed bracket is known in
//! advance (interlacing), and needs no more than a sign change.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{f64_to_rat, rat, rat_to_f64, sign, ExactPolynomial};

/// Interval `[lo, hi]` expected to contain a root, with a stopping width.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
}

impl RootBracket {
    pub fn new(lo: f64, hi: f64, tol: f64) -> Self {
        Self { lo, hi, tol }
    }

    pub fn with_default_tol(lo: f64, hi: f64) -> Self {
        Self::new(lo, hi, DEFAULT_ROOT_TOL)
    }
}

pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<ExactPolynomial>,
}

impl SturmChain {
    /// Chain of the squarefree part of `p`, so counts are of distinct roots.
    pub fn new(p: &ExactPolynomial) -> Self {
        let p0 = normalize(&p.squarefree_part());
        let mut chain = Vec::new();
        if p0.degree().unwrap_or(0) == 0 {
            chain.push(p0);
            return Self { chain };
        }
        let p1 = normalize(&p0.derivative());
        chain.push(p0);
        chain.push(p1);
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2]
                .div_rem(&chain[n - 1])
                .expect("chain members are nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(normalize(&-r));
        }
        Self { chain }
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        count_changes(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        count_changes(self.chain.iter().map(|p| {
            let lead = p.leading().map_or(0, sign);
            let deg = p.degree().unwrap_or(0);
            if positive || deg % 2 == 0 {
                lead
            } else {
                -lead
            }
        }))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Number of distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations(a)
            .saturating_sub(self.variations_at_infinity(true))
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }

    pub fn squarefree(&self) -> &ExactPolynomial {
        &self.chain[0]
    }
}

fn normalize(p: &ExactPolynomial) -> ExactPolynomial {
    match p.leading() {
        Some(l) => p.scale(&l.abs().recip()),
        None => ExactPolynomial::zero(),
    }
}

fn count_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Cauchy bound: every root has absolute value below the returned number.
pub fn cauchy_bound(p: &ExactPolynomial) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| (c / lead).abs())
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m });
    // round up to an integer to keep midpoints dyadic
    (max + BigRational::one()).ceil()
}

/// Largest zero of `p` in `[lo, hi]`, located with Sturm counts and exact
/// bisection on dyadic points to within `tol`.
pub fn largest_zero(p: &ExactPolynomial, bracket: RootBracket) -> Result<f64> {
    let no_change = Error::NoSignChange {
        lo: bracket.lo,
        hi: bracket.hi,
    };
    if p.degree().unwrap_or(0) == 0 || !(bracket.lo < bracket.hi) {
        return Err(no_change);
    }
    let lo = f64_to_rat(bracket.lo).ok_or_else(|| no_change.clone())?;
    let hi = f64_to_rat(bracket.hi).ok_or_else(|| no_change.clone())?;
    let tol = f64_to_rat(bracket.tol.max(f64::MIN_POSITIVE)).expect("finite tolerance");
    largest_zero_exact(p, lo, hi, &tol)
        .map(|iv| rat_to_f64(&iv.midpoint()))
        .ok_or(no_change)
}

/// Isolating interval for a single real root: the root lies in `(lo, hi]`,
/// or equals `lo` when `lo == hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.midpoint())
    }
}

/// Exact variant of [`largest_zero`] working on a closed rational bracket.
pub fn largest_zero_exact(
    p: &ExactPolynomial,
    lo: BigRational,
    hi: BigRational,
    tol: &BigRational,
) -> Option<RootInterval> {
    let sturm = SturmChain::new(p);
    let sq = sturm.squarefree();
    if sq.sign_at(&hi) == 0 {
        return Some(RootInterval {
            lo: hi.clone(),
            hi,
        });
    }
    if sq.sign_at(&lo) == 0 && sturm.count_in(&lo, &hi) == 0 {
        return Some(RootInterval {
            lo: lo.clone(),
            hi: lo,
        });
    }
    if sturm.count_in(&lo, &hi) == 0 {
        return None;
    }
    let (mut lo, mut hi) = (lo, hi);
    let two = rat(2);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let above = sturm.count_in(&mid, &hi);
        if above == 0 {
            if sq.sign_at(&mid) == 0 {
                return Some(RootInterval {
                    lo: mid.clone(),
                    hi: mid,
                });
            }
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(RootInterval { lo, hi })
}

/// Isolates every distinct real root of `p`, ascending.
pub fn isolate_real_roots(p: &ExactPolynomial) -> Vec<RootInterval> {
    let sturm = SturmChain::new(p);
    let sq = sturm.squarefree().clone();
    if sq.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let bound = cauchy_bound(&sq);
    let mut out = Vec::new();
    let mut stack = alloc::vec![(-bound.clone(), bound)];
    let two = rat(2);
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count_in(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootInterval { lo: a, hi: b });
            continue;
        }
        let mid = (&a + &b) / &two;
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    for iv in &mut out {
        if sq.sign_at(&iv.hi) == 0 {
            iv.lo = iv.hi.clone();
        }
    }
    out
}

/// Halves an isolating interval of a simple root of `sq` (squarefree).
pub fn refine_root(sq: &ExactPolynomial, iv: &mut RootInterval) {
    if iv.is_exact() {
        return;
    }
    let mid = iv.midpoint();
    let sm = sq.sign_at(&mid);
    if sm == 0 {
        iv.lo = mid.clone();
        iv.hi = mid;
        return;
    }
    // the root is the only sign change in (lo, hi]; p(hi) != 0 here
    let sh = sq.sign_at(&iv.hi);
    if sm == sh {
        iv.hi = mid;
    } else {
        iv.lo = mid;
    }
}

/// Sign-change bisection for a continuous function on `[lo, hi]`.
pub fn bisect_f64(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let (mut flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExactPolynomial;

    #[test]
    fn sturm_counts_distinct_roots() {
        // (x - 1)^2 (x + 2) (x^2 + 1)
        let a = ExactPolynomial::from_i64s(&[-1, 1]);
        let b = ExactPolynomial::from_i64s(&[2, 1]);
        let c = ExactPolynomial::from_i64s(&[1, 0, 1]);
        let p = &(&(&a * &a) * &b) * &c;
        let s = SturmChain::new(&p);
        assert_eq!(s.count_real(), 2);
        assert_eq!(s.count_in(&rat(-2), &rat(1)), 1);
        assert_eq!(s.count_in(&rat(-3), &rat(1)), 2);
        assert_eq!(s.count_above(&rat(0)), 1);
    }

    #[test]
    fn largest_zero_of_x2_minus_2() {
        let p = ExactPolynomial::from_i64s(&[-2, 0, 1]);
        let r = largest_zero(&p, RootBracket::with_default_tol(1.0, 2.0)).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn largest_zero_takes_top_root_not_any_root() {
        // roots -1, 0.5, 1.5 all inside the bracket
        let p = &(&ExactPolynomial::from_i64s(&[1, 1]) * &ExactPolynomial::from_i64s(&[-1, 2]))
            * &ExactPolynomial::from_i64s(&[-3, 2]);
        let r = largest_zero(&p, RootBracket::with_default_tol(-4.0, 4.0)).unwrap();
        assert_eq!(r, 1.5);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        let p = ExactPolynomial::from_i64s(&[1, 0, 1]);
        assert!(matches!(
            largest_zero(&p, RootBracket::with_default_tol(-1.0, 1.0)),
            Err(Error::NoSignChange { .. })
        ));
        assert!(largest_zero(&ExactPolynomial::one(), RootBracket::with_default_tol(0.0, 1.0)).is_err());
    }

    #[test]
    fn isolation_then_refinement() {
        let p = ExactPolynomial::from_i64s(&[0, -4, 0, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        let sq = SturmChain::new(&p).squarefree().clone();
        let mut mids = Vec::new();
        for mut iv in roots {
            for _ in 0..60 {
                refine_root(&sq, &mut iv);
            }
            mids.push(iv.to_f64());
        }
        assert!((mids[0] + 2.0).abs() < 1e-12);
        assert!(mids[1].abs() < 1e-12);
        assert!((mids[2] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn float_bisection() {
        let r = bisect_f64(|x| x * x - 3.0, 0.0, 3.0, 1e-14).unwrap();
        assert!((r - 3f64.sqrt()).abs() < 1e-13);
        assert!(bisect_f64(|x| x * x + 1.0, 0.0, 3.0, 1e-14).is_err());
    }
}
