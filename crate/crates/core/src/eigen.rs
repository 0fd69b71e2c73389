//! Cyclic Jacobi eigenvalue iteration for small dense symmetric matrices.

use alloc::vec::Vec;

use crate::fmath;

/// Dense symmetric matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, a: alloc::vec![0.0; n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = v;
    }

    fn off_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j) * self.get(i, j);
                }
            }
        }
        s
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(mut self) -> Vec<f64> {
        let n = self.n;
        let scale: f64 = self.a.iter().map(|v| v * v).sum::<f64>().max(1.0);
        for _sweep in 0..100 {
            if self.off_norm() <= 1e-30 * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = self.get(p, q);
                    if apq == 0.0 {
                        continue;
                    }
                    let app = self.get(p, p);
                    let aqq = self.get(q, q);
                    let tau = (aqq - app) / (2.0 * apq);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + fmath::sqrt(1.0 + tau * tau))
                    } else {
                        -1.0 / (-tau + fmath::sqrt(1.0 + tau * tau))
                    };
                    let c = 1.0 / fmath::sqrt(1.0 + t * t);
                    let s = t * c;
                    for r in 0..n {
                        let arp = self.get(r, p);
                        let arq = self.get(r, q);
                        self.a[r * n + p] = c * arp - s * arq;
                        self.a[r * n + q] = s * arp + c * arq;
                    }
                    for r in 0..n {
                        let apr = self.get(p, r);
                        let aqr = self.get(q, r);
                        self.a[p * n + r] = c * apr - s * aqr;
                        self.a[q * n + r] = s * apr + c * aqr;
                    }
                }
            }
        }
        let mut ev: Vec<f64> = (0..n).map(|i| self.get(i, i)).collect();
        ev.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        ev
    }
}

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal and
/// off-diagonal, descending.
pub fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let mut m = SymMatrix::zeros(diag.len());
    for (i, d) in diag.iter().enumerate() {
        m.set(i, i, *d);
    }
    for (i, o) in off.iter().enumerate() {
        m.set(i, i + 1, *o);
    }
    m.eigenvalues()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_spectrum() {
        // P_4 has eigenvalues 2 cos(j pi / 5)
        let ev = tridiagonal_eigenvalues(&[0.0; 4], &[1.0; 3]);
        for (j, v) in ev.iter().enumerate() {
            let want = 2.0 * (core::f64::consts::PI * (j as f64 + 1.0) / 5.0).cos();
            assert!((v - want).abs() < 1e-12);
        }
    }

    #[test]
    fn diagonal_matrix() {
        let ev = tridiagonal_eigenvalues(&[3.0, -1.0, 2.0], &[0.0, 0.0]);
        assert_eq!(ev, alloc::vec![3.0, 2.0, -1.0]);
    }
}
