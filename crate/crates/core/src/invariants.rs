//! Alexander polynomial, signature function and jump divisor of a knot
//! given by a Seifert matrix.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::braid::IntMatrix;
use crate::hermitian::{Hermitian, REL_TOL};
use crate::sympoly::{isolate_roots, AlgebraicRoot, SymPoly};
use crate::{Error, Result};

/// Fraction-free Gaussian elimination; the matrix is consumed.
pub(crate) fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                Some(i) => {
                    for j in 0..n {
                        a.swap(k * n + j, i * n + j);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = a[k * n + k].clone();
    }
    sign * &a[n * n - 1]
}

fn det_at(v: &IntMatrix, t: i64) -> BigInt {
    let n = v.dim();
    let mut a = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push(BigInt::from(t * v.get(i, j) - v.get(j, i)));
        }
    }
    bareiss_det(a, n)
}

/// Coefficients (ascending) of the polynomial of degree ≤ n through
/// (k, values[k]), k = 0..=n, by Newton divided differences.
fn interpolate(values: &[BigInt]) -> Vec<BigInt> {
    let n = values.len();
    let mut dd: Vec<BigRational> = values.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // expand Σ dd[k] ∏_{i<k} (t − i)
    let mut out = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        // out = out·(t − k) + dd[k]
        let mut next = vec![BigRational::zero(); n];
        for i in 0..n {
            if out[i].is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += &out[i];
            }
            next[i] -= &out[i] * BigRational::from_integer(BigInt::from(k));
        }
        next[0] += &dd[k];
        out = next;
    }
    out.into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Symmetrized Alexander polynomial t^{−g}·det(tV − Vᵀ) in the x-basis,
/// normalized so that Δ(1) = 1.
///
/// The determinant is evaluated exactly at t = 0, …, 2g and interpolated,
/// which is much cheaper than elimination over polynomial entries.
pub fn alexander(v: &IntMatrix) -> Result<SymPoly> {
    let n = v.dim();
    if n == 0 {
        return Ok(SymPoly::one());
    }
    let d1 = det_at(v, 1);
    if d1.abs() != BigInt::one() {
        return Err(Error::InvalidSeifert(d1.to_string()));
    }
    let values: Vec<BigInt> = (0..=n as i64).map(|t| det_at(v, t)).collect();
    let laurent = interpolate(&values);
    let p = SymPoly::from_laurent(&laurent).map_err(|_| Error::InvalidSeifert(d1.to_string()))?;
    Ok(if p.at_one().is_negative() { -p } else { p })
}

fn hermitian_at(v: &IntMatrix, s: f64) -> Hermitian {
    let n = v.dim();
    let theta = 2.0 * PI * s;
    let (c, sn) = (1.0 - libm::cos(theta), libm::sin(theta));
    let mut re = vec![0.0; n * n];
    let mut im = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (v.get(i, j) as f64, v.get(j, i) as f64);
            re[i * n + j] = c * (a + b);
            im[i * n + j] = sn * (b - a);
        }
    }
    Hermitian::from_parts(n, &re, &im)
}

/// Signature of B(t) = (1 − t)V + (1 − t̄)Vᵀ at t = e^{2πis}.
pub fn signature_at(v: &IntMatrix, s: f64) -> Result<i32> {
    let inertia = hermitian_at(v, s).inertia(REL_TOL);
    if inertia.near_zero > 0 {
        return Err(Error::DegenerateEvaluation { turn: s });
    }
    Ok(inertia.signature())
}

#[derive(Clone, Debug)]
pub struct JumpEntry {
    pub root: AlgebraicRoot,
    pub jump: i32,
}

/// Jumps at the Alexander roots on the open upper semicircle, sorted by
/// turn. The lower semicircle carries the negated values.
#[derive(Clone, Debug, Default)]
pub struct JumpDivisor {
    entries: Vec<JumpEntry>,
}

impl JumpDivisor {
    pub fn new(mut entries: Vec<JumpEntry>) -> Self {
        entries.sort_by(|a, b| a.root.cmp_turn(&b.root));
        JumpDivisor { entries }
    }

    pub fn entries(&self) -> &[JumpEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn jumps(&self) -> Vec<i32> {
        self.entries.iter().map(|e| e.jump).collect()
    }

    /// Sum of all jumps, which is σ₋₁ when the divisor is a signature
    /// jump divisor.
    pub fn total(&self) -> i32 {
        self.entries.iter().map(|e| e.jump).sum()
    }

    /// Prefix sum of the jumps at roots below `s`: the signature at an
    /// off-root turn s ∈ (0, ½].
    pub fn value_at(&self, s: f64) -> i32 {
        self.entries.iter().filter(|e| e.root.turn_f64() < s).map(|e| e.jump).sum()
    }

    pub fn negated(&self) -> Self {
        JumpDivisor {
            entries: self.entries.iter().map(|e| JumpEntry { root: e.root.clone(), jump: -e.jump }).collect(),
        }
    }

    /// Multiset union; jumps at a shared point add.
    pub fn union(&self, other: &JumpDivisor) -> Self {
        let mut entries = self.entries.clone();
        for e in &other.entries {
            match entries.iter_mut().find(|f| f.root.same_point(&e.root)) {
                Some(f) => f.jump += e.jump,
                None => entries.push(e.clone()),
            }
        }
        Self::new(entries)
    }

    /// Root-by-root agreement of points and values.
    pub fn matches(&self, other: &JumpDivisor) -> bool {
        self.len() == other.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.jump == b.jump && a.root.same_point(&b.root))
    }

    /// |jump| = 2a with a ≤ multiplicity and a ≡ multiplicity (mod 2) at
    /// every root.
    pub fn satisfies_parity(&self) -> bool {
        self.entries.iter().all(|e| {
            let m = e.root.multiplicity() as i32;
            e.jump % 2 == 0 && {
                let a = e.jump.abs() / 2;
                a <= m && (m - a) % 2 == 0
            }
        })
    }
}

/// Half the smallest gap between consecutive points of {0, roots, ½}.
fn min_gap(turns: &[f64]) -> f64 {
    let mut pts = vec![0.0];
    pts.extend_from_slice(turns);
    pts.push(0.5);
    pts.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
}

/// Step δ used on either side of a root: min(10⁻³, gap/4).
pub fn jump_step(turns: &[f64]) -> f64 {
    (min_gap(turns) / 4.0).min(1e-3)
}

/// j(K) from a Seifert matrix: σ(s₀ + δ) − σ(s₀ − δ) at every root s₀ of Δ
/// in (0, ½).
pub fn jump_divisor(v: &IntMatrix) -> Result<JumpDivisor> {
    let delta = alexander(v)?;
    jump_divisor_with(v, &delta)
}

/// As [`jump_divisor`] with Δ already known.
pub fn jump_divisor_with(v: &IntMatrix, delta: &SymPoly) -> Result<JumpDivisor> {
    let roots = isolate_roots(delta)?;
    let turns: Vec<f64> = roots.iter().map(AlgebraicRoot::turn_f64).collect();
    let mut step = jump_step(&turns);
    let mut entries = Vec::with_capacity(roots.len());
    for (root, &s) in roots.into_iter().zip(&turns) {
        let jump = loop {
            match (signature_at(v, s + step), signature_at(v, s - step)) {
                (Ok(hi), Ok(lo)) => break hi - lo,
                (Err(e), _) | (_, Err(e)) => {
                    if step < 1e-12 {
                        return Err(e);
                    }
                    step /= 2.0;
                }
            }
        };
        entries.push(JumpEntry { root, jump });
    }
    Ok(JumpDivisor::new(entries))
}

/// Samples of σ for a step plot: `n` evenly spaced midpoints, one point
/// inside every gap between consecutive roots, and s = ½. Points that land
/// numerically on a root are skipped.
pub fn signature_samples(v: &IntMatrix, n: usize) -> Result<Vec<(f64, i32)>> {
    let delta = alexander(v)?;
    let roots = isolate_roots(&delta)?;
    let turns: Vec<f64> = roots.iter().map(AlgebraicRoot::turn_f64).collect();
    let mut pts: Vec<f64> = (0..n).map(|k| (k as f64 + 0.5) / (2.0 * n as f64)).collect();
    let mut ends = vec![0.0];
    ends.extend_from_slice(&turns);
    ends.push(0.5);
    pts.extend(ends.windows(2).map(|w| 0.5 * (w[0] + w[1])));
    pts.push(0.5);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let mut out = Vec::with_capacity(pts.len());
    for s in pts {
        match signature_at(v, s) {
            Ok(sig) => out.push((s, sig)),
            Err(Error::DegenerateEvaluation { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
