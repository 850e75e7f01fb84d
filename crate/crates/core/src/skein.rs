//! Crossing changes: good projections, the skein formula for the jump at a
//! simple root, and randomized checks of the bordered-matrix lemmas.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::braid::BraidWord;
use crate::hermitian::{Hermitian, REL_TOL};
use crate::hp::bits_for_digits;
use crate::invariants::{alexander, signature_at};
use crate::sympoly::{sign_at, theta_sign, turn_to_x_fixed, AlgebraicRoot, SymPoly};
use crate::{Error, Result};

/// Threading budget for [`make_good`].
pub const MAX_THREAD_DEPTH: usize = 2;

/// A diagram and crossing whose flip gives a knot with Δ(ρ) ≠ 0.
#[derive(Clone, Debug)]
pub struct GoodProjection {
    pub braid: BraidWord,
    pub pos: usize,
    /// Sign of the chosen crossing, so that K = K^ε.
    pub epsilon: i32,
    pub root: AlgebraicRoot,
    /// Number of cancelling pairs inserted to reach this diagram.
    pub depth: usize,
}

impl GoodProjection {
    /// The braid with the chosen crossing flipped (K^{−ε}).
    pub fn flipped(&self) -> BraidWord {
        self.braid.flip_crossing(self.pos).expect("position checked on construction")
    }

    /// (K⁺, K⁻) as braid words.
    pub fn pair(&self) -> (BraidWord, BraidWord) {
        if self.epsilon > 0 {
            (self.braid.clone(), self.flipped())
        } else {
            (self.flipped(), self.braid.clone())
        }
    }
}

fn delta_of(b: &BraidWord) -> Result<SymPoly> {
    alexander(&b.seifert_matrix()?)
}

fn good_at(b: &BraidWord, pos: usize, r: &AlgebraicRoot) -> Result<bool> {
    Ok(sign_at(&delta_of(&b.flip_crossing(pos)?)?, r) != 0)
}

/// Finds a (ρ, K)-good crossing: first among the existing crossings,
/// left to right; then by inserting cancelling pairs σ_g σ_g⁻¹ (ordered
/// by position, then generator) up to [`MAX_THREAD_DEPTH`] deep and trying
/// the inserted crossings.
pub fn make_good(b: &BraidWord, r: &AlgebraicRoot) -> Result<GoodProjection> {
    let delta = delta_of(b)?;
    if sign_at(&delta, r) != 0 {
        return Err(Error::Precondition(format!("turn {:.12} is not an Alexander root of {b}", r.turn_f64())));
    }
    let found = |braid: &BraidWord, pos: usize, depth: usize| GoodProjection {
        braid: braid.clone(),
        pos,
        epsilon: braid.letters()[pos].signum(),
        root: r.clone(),
        depth,
    };
    for pos in 0..b.len() {
        if good_at(b, pos, r)? {
            return Ok(found(b, pos, 0));
        }
    }
    let mut layer = vec![b.clone()];
    for depth in 1..=MAX_THREAD_DEPTH {
        let mut next = Vec::new();
        for w in &layer {
            for pos in 0..=w.len() {
                for g in 1..w.strands() as i32 {
                    let t = w.insert_trivial_pair(pos, g)?;
                    for p in [pos, pos + 1] {
                        if good_at(&t, p, r)? {
                            return Ok(found(&t, p, depth));
                        }
                    }
                    next.push(t);
                }
            }
        }
        layer = next;
    }
    Err(Error::SearchExhausted { depth: MAX_THREAD_DEPTH })
}

/// j_ρ(K) = 2ε·sgn(Δ(K⁺), θ)·sgn(Δ(K⁻), θ).
pub fn skein_jump(g: &GoodProjection) -> Result<i32> {
    let (plus, minus) = g.pair();
    let sp = theta_sign(&delta_of(&plus)?, &g.root)?;
    let sm = theta_sign(&delta_of(&minus)?, &g.root)?;
    Ok(2 * g.epsilon * sp.sign * sm.sign)
}

/// All crossings of `b` (no threading) that are good for `r`.
pub fn good_crossings(b: &BraidWord, r: &AlgebraicRoot) -> Result<Vec<GoodProjection>> {
    let mut out = Vec::new();
    for pos in 0..b.len() {
        if good_at(b, pos, r)? {
            out.push(GoodProjection {
                braid: b.clone(),
                pos,
                epsilon: b.letters()[pos].signum(),
                root: r.clone(),
                depth: 0,
            });
        }
    }
    Ok(out)
}

/// Sign of f(e^{2πis}) with 40 digits of working precision.
fn sign_at_turn(p: &SymPoly, s: f64) -> i32 {
    let sr = BigRational::from_float(s).expect("finite turn");
    let bits = bits_for_digits(40);
    let x = turn_to_x_fixed(&crate::hp::Fixed::from_ratio(&sr, bits));
    p.eval_fixed(&x).signum()
}

/// Checks σ_s(K⁻) − σ_s(K⁺) against the sign of Δ(K⁺)Δ(K⁻) at e^{2πis}
/// for the crossing at `pos`.
pub fn verify_lemma_skeins(b: &BraidWord, pos: usize, s: f64) -> Result<bool> {
    let flipped = b.flip_crossing(pos)?;
    let (plus, minus) = if b.letters()[pos] > 0 { (b.clone(), flipped) } else { (flipped, b.clone()) };
    let (vp, vm) = (plus.seifert_matrix()?, minus.seifert_matrix()?);
    let prod = sign_at_turn(&alexander(&vp)?, s) * sign_at_turn(&alexander(&vm)?, s);
    if prod == 0 {
        return Err(Error::Precondition(format!("Δ(K+)Δ(K-) vanishes at turn {s}")));
    }
    let diff = signature_at(&vm, s)? - signature_at(&vp, s)?;
    Ok(diff == if prod < 0 { 2 } else { 0 })
}

/// Gaussian integer a + bi. Bareiss intermediates for 7×7 matrices scaled
/// by 1000 overflow i128, hence bignum parts.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Gi(BigInt, BigInt);

impl Gi {
    fn int(re: i64, im: i64) -> Gi {
        Gi(BigInt::from(re), BigInt::from(im))
    }
    fn mul(&self, o: &Gi) -> Gi {
        Gi(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }
    fn sub(&self, o: &Gi) -> Gi {
        Gi(&self.0 - &o.0, &self.1 - &o.1)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }
    /// Exact quotient; the division must be exact.
    fn div(&self, o: &Gi) -> Gi {
        let n = &o.0 * &o.0 + &o.1 * &o.1;
        let p = self.mul(&Gi(o.0.clone(), -&o.1));
        debug_assert!((&p.0 % &n).is_zero() && (&p.1 % &n).is_zero());
        Gi(p.0 / &n, p.1 / n)
    }
}

/// Exact determinant over ℤ[i] by Bareiss elimination.
fn gauss_det(mut a: Vec<Gi>, n: usize) -> Gi {
    if n == 0 {
        return Gi::int(1, 0);
    }
    let mut neg = false;
    let mut prev = Gi::int(1, 0);
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                Some(i) => {
                    for j in 0..n {
                        a.swap(k * n + j, i * n + j);
                    }
                    neg = !neg;
                }
                None => return Gi::int(0, 0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i * n + j].mul(&a[k * n + k]).sub(&a[i * n + k].mul(&a[k * n + j]));
                a[i * n + j] = v.div(&prev);
            }
        }
        prev = a[k * n + k].clone();
    }
    let d = a.swap_remove(n * n - 1);
    if neg {
        Gi(-d.0, -d.1)
    } else {
        d
    }
}

/// Outcome counts of [`tbordered_trials`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrialCounts {
    pub passed: usize,
    pub failed: usize,
    pub resampled: usize,
}

/// Random ρ-bordered triples of size n + 1: A₊ = [[a, v], [v*, A₀]] and A₋
/// with corner a + 2 − 2cos θ, integer Gaussian entries in [−5, 5] and
/// cos θ = p/1000. Determinant signs are exact; signatures numeric.
pub fn tbordered_trials(n: usize, trials: usize, seed: u64) -> TrialCounts {
    const Q: i64 = 1000;
    let mut rng = SmallRng::seed_from_u64(seed);
    let m = n + 1;
    let mut counts = TrialCounts::default();
    while counts.passed + counts.failed < trials {
        // A₊ scaled by Q, so that every entry of Q·A₋ is integral too
        let mut plus = vec![(0i64, 0i64); m * m];
        for i in 0..m {
            plus[i * m + i] = (rng.gen_range(-5..=5), 0);
            for j in i + 1..m {
                let z = (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
                plus[i * m + j] = z;
                plus[j * m + i] = (z.0, -z.1);
            }
        }
        let p: i64 = rng.gen_range(-Q + 1..Q);
        let corner = 2 * Q - 2 * p; // Q·(2 − 2cos θ)
        let scaled: Vec<Gi> = plus.iter().map(|z| Gi::int(z.0 * Q, z.1 * Q)).collect();
        let mut minus = scaled.clone();
        minus[0].0 += corner;
        let (dp, dm) = (gauss_det(scaled, m), gauss_det(minus, m));
        debug_assert!(dp.1.is_zero() && dm.1.is_zero());
        if dp.0.is_zero() || dm.0.is_zero() {
            counts.resampled += 1;
            continue;
        }
        let herm = |extra: f64| {
            let re: Vec<f64> = plus.iter().map(|z| z.0 as f64).collect();
            let mut re = re;
            re[0] += extra;
            let im: Vec<f64> = plus.iter().map(|z| z.1 as f64).collect();
            Hermitian::from_parts(m, &re, &im).inertia(REL_TOL)
        };
        let (ip, im) = (herm(0.0), herm(corner as f64 / Q as f64));
        if ip.near_zero > 0 || im.near_zero > 0 {
            counts.resampled += 1;
            continue;
        }
        let expected = if dp.0.sign() != dm.0.sign() { 2 } else { 0 };
        if im.signature() - ip.signature() == expected {
            counts.passed += 1;
        } else {
            counts.failed += 1;
        }
    }
    counts
}

/// `trials` random bordered triples with A₀ of size n all satisfy the
/// signature/determinant rule.
pub fn verify_lemma_tbordered(n: usize, trials: usize) -> bool {
    tbordered_trials(n, trials, 0x5eed ^ n as u64).failed == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympoly::isolate_roots;

    #[test]
    fn gaussian_det() {
        // [[2, 1+i], [1−i, 3]] → 6 − 2 = 4
        let a = vec![Gi::int(2, 0), Gi::int(1, 1), Gi::int(1, -1), Gi::int(3, 0)];
        assert_eq!(gauss_det(a, 2), Gi::int(4, 0));
    }

    #[test]
    fn trefoil_skein() {
        let b = BraidWord::parse("[1,1,1]").unwrap();
        let r = isolate_roots(&SymPoly::from_i64s(&[1, 1])).unwrap().remove(0);
        let g = make_good(&b, &r).unwrap();
        assert_eq!((g.pos, g.epsilon, g.depth), (0, 1, 0));
        assert_eq!(skein_jump(&g).unwrap(), -2);
        let g = make_good(&b.mirror(), &r).unwrap();
        assert_eq!(skein_jump(&g).unwrap(), 2);
        assert!(verify_lemma_skeins(&b, 0, 0.3).unwrap());
        assert!(verify_lemma_skeins(&b, 1, 0.1).unwrap());
    }

    #[test]
    fn not_a_root() {
        let b = BraidWord::parse("[1,1,1]").unwrap();
        let r = isolate_roots(&SymPoly::from_i64s(&[1, 5, 2])).unwrap().remove(0);
        assert!(matches!(make_good(&b, &r), Err(Error::Precondition(_))));
    }

    #[test]
    fn bordered_small() {
        assert!(verify_lemma_tbordered(0, 200));
        assert!(verify_lemma_tbordered(3, 200));
    }
}
