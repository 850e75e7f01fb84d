//! Inertia of Hermitian matrices.
//!
//! H = S + iA (S symmetric, A antisymmetric) is embedded as the real
//! symmetric [[S, −A], [A, S]], whose spectrum is that of H with every
//! eigenvalue doubled. The embedding is reduced to tridiagonal form by
//! Householder reflections and eigenvalues are counted on either side of
//! ±τ with a Sturm recurrence.

use alloc::vec;
use alloc::vec::Vec;

/// Relative tolerance for treating an eigenvalue as zero.
pub const REL_TOL: f64 = 1e-9;

/// A dense Hermitian matrix split into real and imaginary parts.
#[derive(Clone, Debug, PartialEq)]
pub struct Hermitian {
    n: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub near_zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i32 {
        self.positive as i32 - self.negative as i32
    }
}

impl Hermitian {
    /// Builds from row-major real and imaginary parts; only the upper
    /// triangle is read, the rest is filled by conjugate symmetry.
    pub fn from_parts(n: usize, re: &[f64], im: &[f64]) -> Self {
        assert_eq!(re.len(), n * n);
        assert_eq!(im.len(), n * n);
        let mut h = Hermitian { n, re: vec![0.0; n * n], im: vec![0.0; n * n] };
        for i in 0..n {
            h.re[i * n + i] = re[i * n + i];
            for j in i + 1..n {
                h.re[i * n + j] = re[i * n + j];
                h.re[j * n + i] = re[i * n + j];
                h.im[i * n + j] = im[i * n + j];
                h.im[j * n + i] = -im[i * n + j];
            }
        }
        h
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn frobenius_norm(&self) -> f64 {
        let s: f64 = self.re.iter().chain(self.im.iter()).map(|v| v * v).sum();
        libm::sqrt(s)
    }

    /// Counts eigenvalues above τ, below −τ and within [−τ, τ], where
    /// τ = `rel_tol`·‖H‖_F.
    pub fn inertia(&self, rel_tol: f64) -> Inertia {
        let n = self.n;
        if n == 0 {
            return Inertia { positive: 0, negative: 0, near_zero: 0 };
        }
        let m = 2 * n;
        let mut a = vec![0.0; m * m];
        for i in 0..n {
            for j in 0..n {
                let (s, t) = (self.re[i * n + j], self.im[i * n + j]);
                a[i * m + j] = s;
                a[(i + n) * m + (j + n)] = s;
                a[i * m + (j + n)] = -t;
                a[(i + n) * m + j] = t;
            }
        }
        let (d, e) = tridiagonalize(&mut a, m);
        let tau = rel_tol * self.frobenius_norm();
        let below_neg = count_below(&d, &e, -tau);
        let below_pos = count_below(&d, &e, tau);
        Inertia {
            positive: (m - below_pos) / 2,
            negative: below_neg / 2,
            near_zero: (below_pos - below_neg).div_ceil(2),
        }
    }
}

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// Returns (diagonal, off-diagonal).
fn tridiagonalize(a: &mut [f64], m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0; m];
    let mut p = vec![0.0; m];
    for k in 0..m.saturating_sub(2) {
        let norm: f64 = libm::sqrt((k + 1..m).map(|i| a[i * m + k] * a[i * m + k]).sum());
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1) * m + k];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        for i in k + 1..m {
            v[i] = a[i * m + k];
        }
        v[k + 1] -= alpha;
        let vnorm: f64 = libm::sqrt((k + 1..m).map(|i| v[i] * v[i]).sum());
        if vnorm == 0.0 {
            continue;
        }
        for vi in v.iter_mut().take(m).skip(k + 1) {
            *vi /= vnorm;
        }
        // p = A v on the trailing block, K = vᵀ p, w = p − K v
        for i in k + 1..m {
            p[i] = (k + 1..m).map(|j| a[i * m + j] * v[j]).sum();
        }
        let kk: f64 = (k + 1..m).map(|i| v[i] * p[i]).sum();
        for i in k + 1..m {
            p[i] -= kk * v[i];
        }
        for i in k + 1..m {
            for j in k + 1..m {
                a[i * m + j] -= 2.0 * (v[i] * p[j] + p[i] * v[j]);
            }
        }
        a[(k + 1) * m + k] = alpha;
        a[k * m + k + 1] = alpha;
        for i in k + 2..m {
            a[i * m + k] = 0.0;
            a[k * m + i] = 0.0;
        }
    }
    let d = (0..m).map(|i| a[i * m + i]).collect();
    let e = (0..m.saturating_sub(1)).map(|i| a[(i + 1) * m + i]).collect();
    (d, e)
}

/// Number of eigenvalues of the tridiagonal (d, e) strictly below `x`.
fn count_below(d: &[f64], e: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..d.len() {
        let off = if i == 0 { 0.0 } else { e[i - 1] * e[i - 1] };
        q = d[i] - x - if i == 0 { 0.0 } else { off / q };
        if q == 0.0 {
            q = f64::MIN_POSITIVE;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_diagonal() {
        let h = Hermitian::from_parts(3, &[2.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 5.0], &[0.0; 9]);
        let i = h.inertia(REL_TOL);
        assert_eq!((i.positive, i.negative, i.near_zero), (2, 1, 0));
        assert_eq!(i.signature(), 1);
    }

    #[test]
    fn complex_two_by_two() {
        // [[0, i], [−i, 0]] has eigenvalues ±1
        let h = Hermitian::from_parts(2, &[0.0; 4], &[0.0, 1.0, -1.0, 0.0]);
        assert_eq!(h.inertia(REL_TOL), Inertia { positive: 1, negative: 1, near_zero: 0 });
        // [[1, 1+i], [1−i, 2]]: det = 0, trace 3
        let h = Hermitian::from_parts(2, &[1.0, 1.0, 1.0, 2.0], &[0.0, 1.0, -1.0, 0.0]);
        assert_eq!(h.inertia(REL_TOL), Inertia { positive: 1, negative: 0, near_zero: 1 });
    }

    #[test]
    fn empty() {
        let h = Hermitian::from_parts(0, &[], &[]);
        assert_eq!(h.inertia(REL_TOL).signature(), 0);
    }
}
