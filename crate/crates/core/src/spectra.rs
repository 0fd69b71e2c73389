//! Tridiagonal quotient matrices `B(k, t, c)` and `T(k, t, c)` and their spectra.

use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::eigen::tridiagonal_eigenvalues;
use crate::error::{Error, Result};
use crate::fmath;
use crate::orthopoly::Families;
use crate::poly::{f64_to_rat, rat, rat_to_f64, ExactPolynomial};
use crate::roots::{largest_zero_exact, RootInterval, DEFAULT_ROOT_TOL};

/// `B` is the bipartite quotient with zero diagonal; `T` carries the loop
/// `k - c` on its last row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientKind {
    B,
    T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    pub kind: QuotientKind,
    pub k: u64,
    pub t: usize,
    pub c: BigRational,
    diag: Vec<BigRational>,
    lower: Vec<BigRational>,
    upper: Vec<BigRational>,
}

fn check_c(k: u64, c: &BigRational) -> Result<()> {
    if !c.is_positive() || c > &rat(k as i64) {
        Err(Error::InvalidC(format!("{}", c)))
    } else {
        Ok(())
    }
}

pub fn build_quotient(kind: QuotientKind, k: u64, t: usize, c: &BigRational) -> Result<QuotientMatrix> {
    if k < 2 {
        return Err(Error::InvalidDegree(k));
    }
    check_c(k, c)?;
    let kk = rat(k as i64);
    let km1 = rat(k as i64 - 1);
    let one = rat(1);
    let (lower, upper) = match kind {
        QuotientKind::B => {
            if t < 3 {
                return Err(Error::InvalidShape(format!("B needs t >= 3, got {}", t)));
            }
            if t == 3 && c != &one {
                return Err(Error::InvalidShape(format!("B(k, 3, c) needs c = 1, got {}", c)));
            }
            let mut lower = alloc::vec![one.clone(); t - 3];
            lower.push(c.clone());
            lower.push(kk.clone());
            let mut upper = alloc::vec![kk.clone()];
            upper.extend(core::iter::repeat_n(km1.clone(), t - 3));
            upper.push(&kk - c);
            (lower, upper)
        }
        QuotientKind::T => {
            if t < 2 {
                return Err(Error::InvalidShape(format!("T needs t >= 2, got {}", t)));
            }
            let mut lower = alloc::vec![one.clone(); t - 2];
            lower.push(c.clone());
            let mut upper = alloc::vec![kk.clone()];
            upper.extend(core::iter::repeat_n(km1.clone(), t - 2));
            (lower, upper)
        }
    };
    let diag = (0..t)
        .map(|i| {
            let mut s = BigRational::zero();
            if i > 0 {
                s += &lower[i - 1];
            }
            if i + 1 < t {
                s += &upper[i];
            }
            &kk - s
        })
        .collect();
    Ok(QuotientMatrix {
        kind,
        k,
        t,
        c: c.clone(),
        diag,
        lower,
        upper,
    })
}

impl QuotientMatrix {
    pub fn size(&self) -> usize {
        self.t
    }

    pub fn diag(&self) -> &[BigRational] {
        &self.diag
    }

    /// Entries `(i + 1, i)`.
    pub fn lower(&self) -> &[BigRational] {
        &self.lower
    }

    /// Entries `(i, i + 1)`.
    pub fn upper(&self) -> &[BigRational] {
        &self.upper
    }

    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        if i == j {
            self.diag[i].clone()
        } else if j == i + 1 {
            self.upper[i].clone()
        } else if i == j + 1 {
            self.lower[j].clone()
        } else {
            BigRational::zero()
        }
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.t)
            .map(|i| (0..self.t).map(|j| self.entry(i, j)).sum())
            .collect()
    }

    /// Characteristic polynomial by the continuant recurrence.
    pub fn charpoly(&self) -> ExactPolynomial {
        let mut prev = ExactPolynomial::one();
        let mut cur = ExactPolynomial::linear_root(self.diag[0].clone());
        for i in 1..self.t {
            let next = &(&ExactPolynomial::linear_root(self.diag[i].clone()) * &cur)
                - &prev.scale(&(&self.upper[i - 1] * &self.lower[i - 1]));
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Float eigenvalues, descending, from the symmetrized matrix.
    pub fn numeric_spectrum(&self) -> Vec<f64> {
        let diag: Vec<f64> = self.diag.iter().map(rat_to_f64).collect();
        let off: Vec<f64> = self
            .upper
            .iter()
            .zip(&self.lower)
            .map(|(u, l)| fmath::sqrt(rat_to_f64(&(u * l))))
            .collect();
        tridiagonal_eigenvalues(&diag, &off)
    }
}

/// `(charpoly, S)` with `charpoly = (x^2 - k^2) S` for `B(k, t, c)`.
pub fn charpoly_b(k: u64, t: usize, c: &BigRational) -> Result<(ExactPolynomial, ExactPolynomial)> {
    let m = build_quotient(QuotientKind::B, k, t, c)?;
    let factor = quotient_polynomial(k, t, c)?;
    Ok((m.charpoly(), factor))
}

/// `S = (c - 1) G_{t-4} + G_{t-2}` for `t >= 4`, and `x` for `t = 3`.
pub fn quotient_polynomial(k: u64, t: usize, c: &BigRational) -> Result<ExactPolynomial> {
    if k < 2 {
        return Err(Error::InvalidDegree(k));
    }
    check_c(k, c)?;
    match t {
        0..=2 => Err(Error::InvalidShape(format!("B needs t >= 3, got {}", t))),
        3 => Ok(ExactPolynomial::x()),
        _ => Ok(Families::new(k)?.quotient_factor(t, c)),
    }
}

/// Isolating interval for the second largest eigenvalue of `B(k, t, c)`.
pub fn second_eigenvalue_b_exact(k: u64, t: usize, c: &BigRational, tol: f64) -> Result<RootInterval> {
    if t == 3 {
        build_quotient(QuotientKind::B, k, t, c)?;
        return Ok(RootInterval {
            lo: BigRational::zero(),
            hi: BigRational::zero(),
        });
    }
    let s = quotient_polynomial(k, t, c)?;
    let tol = f64_to_rat(tol.max(f64::MIN_POSITIVE)).expect("finite tolerance");
    largest_zero_exact(&s, BigRational::zero(), rat(k as i64), &tol)
        .ok_or(Error::NoSignChange { lo: 0.0, hi: k as f64 })
}

pub fn second_eigenvalue_b(k: u64, t: usize, c: &BigRational) -> Result<f64> {
    Ok(second_eigenvalue_b_exact(k, t, c, DEFAULT_ROOT_TOL)?.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn b_shapes() {
        let m = build_quotient(QuotientKind::B, 3, 3, &rat(1)).unwrap();
        assert_eq!(m.lower(), &[rat(1), rat(3)]);
        assert_eq!(m.upper(), &[rat(3), rat(2)]);
        let m = build_quotient(QuotientKind::B, 3, 4, &rat(1)).unwrap();
        assert_eq!(m.lower(), &[rat(1), rat(1), rat(3)]);
        assert_eq!(m.upper(), &[rat(3), rat(2), rat(2)]);
        assert!(m.diag().iter().all(Zero::is_zero));
        assert!(matches!(
            build_quotient(QuotientKind::B, 3, 3, &rat(2)),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            build_quotient(QuotientKind::B, 3, 4, &rat(0)),
            Err(Error::InvalidC(_))
        ));
    }

    #[test]
    fn t_has_loop_on_last_row() {
        let m = build_quotient(QuotientKind::T, 3, 3, &rat(2)).unwrap();
        assert_eq!(m.diag(), &[rat(0), rat(0), rat(1)]);
        assert!(m.row_sums().iter().all(|s| s == &rat(3)));
    }

    #[test]
    fn charpoly_examples() {
        let (p, s) = charpoly_b(3, 4, &rat(1)).unwrap();
        assert_eq!(s, ExactPolynomial::from_i64s(&[-2, 0, 1]));
        assert_eq!(p, &ExactPolynomial::from_i64s(&[-9, 0, 1]) * &s);
        let (p, s) = charpoly_b(3, 5, &rat(1)).unwrap();
        assert_eq!(s, ExactPolynomial::from_i64s(&[0, -4, 0, 1]));
        assert_eq!(p, &ExactPolynomial::from_i64s(&[-9, 0, 1]) * &s);
        let (p, _) = charpoly_b(3, 3, &rat(1)).unwrap();
        assert_eq!(p, ExactPolynomial::from_i64s(&[0, -9, 0, 1]));
    }

    #[test]
    fn second_eigenvalues() {
        assert!((second_eigenvalue_b(3, 4, &rat(1)).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!((second_eigenvalue_b(3, 5, &rat(1)).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(second_eigenvalue_b(5, 4, &rat(5)).unwrap(), 0.0);
        assert_eq!(second_eigenvalue_b(5, 3, &rat(1)).unwrap(), 0.0);
        assert!((second_eigenvalue_b(3, 4, &ratio(3, 2)).unwrap() - 1.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn numeric_matches_exact() {
        let m = build_quotient(QuotientKind::B, 4, 6, &rat(2)).unwrap();
        let ev = m.numeric_spectrum();
        assert!((ev[0] - 4.0).abs() < 1e-10);
        assert!((ev[ev.len() - 1] + 4.0).abs() < 1e-10);
        let l2 = second_eigenvalue_b(4, 6, &rat(2)).unwrap();
        assert!((ev[1] - l2).abs() < 1e-10);
    }
}
