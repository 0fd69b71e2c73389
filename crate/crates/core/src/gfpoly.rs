//! Polynomials over prime fields, their complete factorization, and a
//! rigorous test for splitting over the rationals into factors of degree at most two.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{rat, ExactPolynomial};
use crate::roots::{cauchy_bound, isolate_real_roots, refine_root, RootInterval, SturmChain};

/// Seed used by [`gf_factor`].
pub const DEFAULT_SEED: u64 = 0x5eed_0f9f;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial over `GF(p)`, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GFPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod_u64(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    powmod_u64(a, p - 2, p)
}

impl GFPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    fn raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Result<Self> {
        let pi = p as i64;
        Self::new(p, coeffs.iter().map(|c| c.rem_euclid(pi) as u64).collect())
    }

    pub fn from_bigints(p: u64, coeffs: &[BigInt]) -> Result<Self> {
        let pb = BigInt::from(p);
        Self::new(
            p,
            coeffs
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().expect("reduced residue fits"))
                .collect(),
        )
    }

    /// Reduction of an integral [`ExactPolynomial`].
    pub fn from_exact(p: u64, f: &ExactPolynomial) -> Result<Self> {
        if !f.is_integral() {
            return Err(Error::Parse("polynomial has non-integer coefficients".into()));
        }
        let ints: Vec<BigInt> = f.coeffs().iter().map(|c| c.to_integer()).collect();
        Self::from_bigints(p, &ints)
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::raw(p, alloc::vec![1 % p])
    }

    pub fn x(p: u64) -> Self {
        Self::raw(p, alloc::vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, c| (mulmod(acc, x, self.p) + c) % self.p)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0) + o.coeffs.get(i).copied().unwrap_or(0)) % self.p
            })
            .collect();
        Self::raw(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0) + self.p - o.coeffs.get(i).copied().unwrap_or(0))
                    % self.p
            })
            .collect();
        Self::raw(self.p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut v = alloc::vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + mulmod(*a, *b, self.p)) % self.p;
            }
        }
        Self::raw(self.p, v)
    }

    pub fn scale(&self, s: u64) -> Self {
        Self::raw(self.p, self.coeffs.iter().map(|c| mulmod(*c, s, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.p;
        let dd = d.coeffs.len() - 1;
        let inv = inv_mod(d.leading(), p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(p), self.clone()));
        }
        let mut q = alloc::vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = mulmod(r[i + dd], inv, p);
            q[i] = coef;
            if coef == 0 {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[i + j] = (r[i + j] + p - mulmod(coef, *b, p)) % p;
            }
        }
        r.truncate(dd);
        Ok((Self::raw(p, q), Self::raw(p, r)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).expect("nonzero divisor").1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| mulmod(*c, i as u64 % self.p, self.p))
            .collect();
        Self::raw(self.p, v)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    fn pow_mod_u64(&self, e: u64, m: &Self) -> Self {
        self.pow_mod(&BigUint::from(e), m)
    }

    /// `g` with `g^p = self`, for a polynomial whose derivative vanishes.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let v = self.coeffs.iter().step_by(p).copied().collect();
        Self::raw(self.p, v)
    }
}

impl fmt::Display for GFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, *c) {
                (0, c) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "z")?,
                (1, c) => write!(f, "{}*z", c)?,
                (i, 1) => write!(f, "z^{}", i)?,
                (i, c) => write!(f, "{}*z^{}", c, i)?,
            }
        }
        Ok(())
    }
}

/// Complete factorization `unit * prod factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationWitness {
    pub p: u64,
    pub unit: u64,
    /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
    pub factors: Vec<(GFPoly, usize)>,
    pub min_irreducible_degree: usize,
    pub max_irreducible_degree: usize,
}

impl FactorizationWitness {
    /// Expands the factorization back into a polynomial.
    pub fn product(&self) -> GFPoly {
        let mut acc = GFPoly::raw(self.p, alloc::vec![self.unit]);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Number of irreducible factors of the given degree, with multiplicity.
    pub fn count_of_degree(&self, d: usize) -> usize {
        self.factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(d))
            .map(|(_, m)| m)
            .sum()
    }

    /// Degrees of all irreducible factors, repeated by multiplicity, ascending.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| core::iter::repeat_n(f.degree().unwrap_or(0), *m))
            .collect();
        v.sort_unstable();
        v
    }
}

fn squarefree_decomposition(f: &GFPoly) -> Vec<(GFPoly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fd = f.derivative();
    let mut c = f.gcd(&fd);
    let mut w = f.div_rem(&c).expect("nonzero").0.monic();
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).expect("nonzero").0.monic();
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_rem(&w).expect("nonzero").0.monic();
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root().monic();
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * f.p as usize));
        }
    }
    out
}

/// Splits a monic squarefree polynomial by the degrees of its irreducible factors.
fn distinct_degree(f: &GFPoly) -> Vec<(GFPoly, usize)> {
    let p = f.p;
    let x = GFPoly::x(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod_u64(p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            out.push((g.clone(), i));
            rest = rest.div_rem(&g).expect("nonzero").0.monic();
            h = h.rem(&rest);
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d` into its factors.
fn equal_degree(f: &GFPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<GFPoly>) {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    let exponent = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a = GFPoly::raw(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map to GF(2)
            let mut term = a.rem(f);
            let mut acc = term.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                acc = acc.add(&term);
            }
            acc
        } else {
            a.pow_mod(&exponent, f).sub(&GFPoly::one(p))
        };
        let g = b.gcd(f);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.div_rem(&g).expect("nonzero").0.monic();
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

pub fn gf_factor(f: &GFPoly) -> Result<FactorizationWitness> {
    gf_factor_seeded(f, DEFAULT_SEED)
}

pub fn gf_factor_seeded(f: &GFPoly, seed: u64) -> Result<FactorizationWitness> {
    if !is_prime(f.p) {
        return Err(Error::NotPrime(f.p));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = f.leading();
    let monic = f.monic();
    let mut factors: Vec<(GFPoly, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&part) {
            let mut pieces = Vec::new();
            equal_degree(&block, d, &mut rng, &mut pieces);
            for piece in pieces {
                match factors.iter_mut().find(|(g, _)| g == &piece) {
                    Some(entry) => entry.1 += mult,
                    None => factors.push((piece, mult)),
                }
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
    });
    let degrees = factors.iter().map(|(g, _)| g.degree().unwrap_or(0));
    let min = degrees.clone().min().unwrap_or(0);
    let max = degrees.max().unwrap_or(0);
    Ok(FactorizationWitness {
        p: f.p,
        unit,
        factors,
        min_irreducible_degree: min,
        max_irreducible_degree: max,
    })
}

pub fn is_irreducible(f: &GFPoly) -> Result<bool> {
    let w = gf_factor(f)?;
    Ok(w.factors.len() == 1 && w.factors[0].1 == 1 && f.degree().unwrap_or(0) > 0)
}

/// Factor of degree at least three found modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularWitness {
    pub p: u64,
    pub factor_degree: usize,
}

/// Outcome of the splitting test over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct SplittingVerdict {
    /// Every irreducible factor over the rationals has degree at most two.
    pub splits_deg_le_2: bool,
    /// Primitive integer linear factors found.
    pub linear_factors: Vec<ExactPolynomial>,
    /// Primitive integer irreducible quadratic factors found.
    pub quadratic_factors: Vec<ExactPolynomial>,
    /// The squarefree part with the factors above removed; constant iff it splits.
    pub residual: ExactPolynomial,
    /// Present when a reduction modulo a prime already rules out splitting.
    pub modular_witness: Option<ModularWitness>,
}

impl SplittingVerdict {
    /// Number of distinct irrational real roots.
    pub fn irrational_root_count(&self) -> usize {
        2 * self.quadratic_factors.len() + self.residual.degree().unwrap_or(0)
    }
}

const MAX_REFINEMENTS: u32 = 4000;
const MODULAR_PRIMES: usize = 3;

fn squarefree_integer(f: &ExactPolynomial) -> Result<ExactPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(ExactPolynomial::from_bigints(&f.squarefree_part().primitive_integer()))
}

/// Decides whether a polynomial with only real roots splits over the
/// rationals into factors of degree at most two, first trying a few primes
/// for a quick certificate of a degree-three factor.
pub fn q_splitting_screen(f: &ExactPolynomial) -> Result<SplittingVerdict> {
    let g = squarefree_integer(f)?;
    let lc = g.leading().expect("nonzero").to_integer();
    let mut tried = 0;
    let mut p = 3u64;
    while tried < MODULAR_PRIMES {
        if is_prime(p) && !(&lc % BigInt::from(p)).is_zero() {
            tried += 1;
            let w = gf_factor(&GFPoly::from_exact(p, &g)?)?;
            if w.max_irreducible_degree >= 3 {
                if SturmChain::new(&g).count_real() < g.degree().unwrap_or(0) {
                    return Err(Error::NonRealRoots);
                }
                return Ok(SplittingVerdict {
                    splits_deg_le_2: false,
                    linear_factors: Vec::new(),
                    quadratic_factors: Vec::new(),
                    residual: g,
                    modular_witness: Some(ModularWitness {
                        p,
                        factor_degree: w.max_irreducible_degree,
                    }),
                });
            }
        }
        p += 2;
    }
    q_splitting_by_roots(f)
}

/// Integers in the closed interval `[a, b]`: zero, one (returned), or more.
enum IntegerCount {
    None,
    One(BigInt),
    Many,
}

fn integers_in(a: &BigRational, b: &BigRational) -> IntegerCount {
    let lo = a.ceil().to_integer();
    let hi = b.floor().to_integer();
    if hi < lo {
        IntegerCount::None
    } else if hi == lo {
        IntegerCount::One(lo)
    } else {
        IntegerCount::Many
    }
}

/// Splitting test from isolated real roots alone.
///
/// A rational root `r` of a primitive integer polynomial with leading
/// coefficient `a` has `a r` integral; an integer quadratic factor
/// `l x^2 + b x + c` with `l | a` has `a (r_1 + r_2)` and `a r_1 r_2` integral.
/// Roots are refined until each such expression pins down at most one integer,
/// which is then tested exactly.
pub fn q_splitting_by_roots(f: &ExactPolynomial) -> Result<SplittingVerdict> {
    let g = squarefree_integer(f)?;
    let n = g.degree().unwrap_or(0);
    if SturmChain::new(&g).count_real() < n {
        return Err(Error::NonRealRoots);
    }
    let lc = g.leading().expect("nonzero").clone();
    let mut roots = isolate_real_roots(&g);
    let bound = cauchy_bound(&g) + rat(1);
    let target = rat(1) / (rat(8) * &lc * &bound);
    for iv in roots.iter_mut() {
        let mut steps = 0;
        while iv.width() > target {
            refine_root(&g, iv);
            steps += 1;
            if steps > MAX_REFINEMENTS {
                return Err(Error::PrecisionExhausted(steps));
            }
        }
    }
    let mut rest = g.clone();
    let mut linear = Vec::new();
    let mut irrational: Vec<RootInterval> = Vec::new();
    for iv in roots {
        let candidate = if iv.is_exact() {
            Some(iv.lo.clone())
        } else {
            match integers_in(&(&lc * &iv.lo), &(&lc * &iv.hi)) {
                IntegerCount::One(m) => Some(BigRational::from_integer(m) / &lc),
                IntegerCount::None => None,
                IntegerCount::Many => return Err(Error::PrecisionExhausted(MAX_REFINEMENTS)),
            }
        };
        match candidate {
            Some(r) if g.eval(&r).is_zero() => {
                let lin = ExactPolynomial::from_bigints(&ExactPolynomial::linear_root(r).primitive_integer());
                rest = rest.exact_div(&lin).expect("rational root divides");
                linear.push(lin);
            }
            _ => irrational.push(iv),
        }
    }
    let mut used = alloc::vec![false; irrational.len()];
    let mut quadratic = Vec::new();
    for i in 0..irrational.len() {
        if used[i] {
            continue;
        }
        for j in (i + 1)..irrational.len() {
            if used[j] {
                continue;
            }
            let (a, b) = (&irrational[i], &irrational[j]);
            let s = integers_in(&(&lc * (&a.lo + &b.lo)), &(&lc * (&a.hi + &b.hi)));
            let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
            let pmin = products.iter().min().expect("four products");
            let pmax = products.iter().max().expect("four products");
            let pr = integers_in(&(&lc * pmin), &(&lc * pmax));
            let (sum, prod) = match (s, pr) {
                (IntegerCount::One(s), IntegerCount::One(p)) => (s, p),
                (IntegerCount::Many, _) | (_, IntegerCount::Many) => {
                    return Err(Error::PrecisionExhausted(MAX_REFINEMENTS));
                }
                _ => continue,
            };
            let q = ExactPolynomial::new(alloc::vec![
                BigRational::from_integer(prod),
                BigRational::from_integer(-sum),
                lc.clone(),
            ]);
            let q = ExactPolynomial::from_bigints(&q.primitive_integer());
            if let Some(quot) = rest.exact_div(&q) {
                rest = quot;
                quadratic.push(q);
                used[i] = true;
                used[j] = true;
                break;
            }
        }
    }
    let rest = ExactPolynomial::from_bigints(&rest.primitive_integer());
    let splits = rest.degree().unwrap_or(0) == 0;
    Ok(SplittingVerdict {
        splits_deg_le_2: splits,
        linear_factors: linear,
        quadratic_factors: quadratic,
        residual: rest,
        modular_witness: None,
    })
}

/// All pairs in `GF(p) x GF(p)` other than `(0, 0)`.
pub fn residue_pairs(p: u64) -> Vec<(u64, u64)> {
    (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .filter(|&(a, b)| a != 0 || b != 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, c: &[i64]) -> GFPoly {
        GFPoly::from_i64s(p, c).unwrap()
    }

    #[test]
    fn factor_examples() {
        let w = gf_factor(&gf(2, &[1, 1, 1])).unwrap();
        assert_eq!(w.factors.len(), 1);
        assert_eq!(w.min_irreducible_degree, 2);
        assert!(is_irreducible(&gf(3, &[1, 0, 1])).unwrap());
        let f = gf(5, &[-1, 1]).mul(&gf(5, &[-2, 1]));
        let w = gf_factor(&f).unwrap();
        assert_eq!(w.factors, alloc::vec![(gf(5, &[3, 1]), 1), (gf(5, &[4, 1]), 1)]);
        assert_eq!(GFPoly::new(4, alloc::vec![1, 1]), Err(Error::NotPrime(4)));
        assert_eq!(gf_factor(&GFPoly::zero(5)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn repeated_and_pth_power_factors() {
        // (z + 1)^2 (z^2 + z + 1)^3 over GF(2)
        let a = gf(2, &[1, 1]);
        let b = gf(2, &[1, 1, 1]);
        let f = a.mul(&a).mul(&b).mul(&b).mul(&b);
        let w = gf_factor(&f).unwrap();
        assert_eq!(w.product(), f);
        assert_eq!(w.factors, alloc::vec![(a, 2), (b, 3)]);
        // z^3 - 1 = (z - 1)^3 over GF(3)
        let w = gf_factor(&gf(3, &[-1, 0, 0, 1])).unwrap();
        assert_eq!(w.factors, alloc::vec![(gf(3, &[2, 1]), 3)]);
    }

    #[test]
    fn unit_is_recorded() {
        let f = gf(7, &[3, 0, 5]);
        let w = gf_factor(&f).unwrap();
        assert_eq!(w.unit, 5);
        assert_eq!(w.product(), f);
    }

    #[test]
    fn splitting_examples() {
        // (x^2 - 2)(x - 1)(2x + 1)
        let f = &(&ExactPolynomial::from_i64s(&[-2, 0, 1]) * &ExactPolynomial::from_i64s(&[-1, 1]))
            * &ExactPolynomial::from_i64s(&[1, 2]);
        let v = q_splitting_by_roots(&f).unwrap();
        assert!(v.splits_deg_le_2);
        assert_eq!(v.linear_factors.len(), 2);
        assert_eq!(v.quadratic_factors, alloc::vec![ExactPolynomial::from_i64s(&[-2, 0, 1])]);
        assert!(q_splitting_screen(&f).unwrap().splits_deg_le_2);
        // x^3 - 3x + 1 is irreducible with three real roots
        let g = ExactPolynomial::from_i64s(&[1, -3, 0, 1]);
        assert!(!q_splitting_by_roots(&g).unwrap().splits_deg_le_2);
        let s = q_splitting_screen(&g).unwrap();
        assert!(!s.splits_deg_le_2);
        assert!(s.modular_witness.is_some());
        assert_eq!(
            q_splitting_screen(&ExactPolynomial::from_i64s(&[1, 0, 1])),
            Err(Error::NonRealRoots)
        );
    }

    #[test]
    fn quadratic_with_leading_coefficient() {
        // (3x^2 - 6x + 1)(5x^2 - 1)
        let f = &ExactPolynomial::from_i64s(&[1, -6, 3]) * &ExactPolynomial::from_i64s(&[-1, 0, 5]);
        let v = q_splitting_by_roots(&f).unwrap();
        assert!(v.splits_deg_le_2);
        assert_eq!(v.quadratic_factors.len(), 2);
    }
}
