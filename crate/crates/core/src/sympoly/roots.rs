//! Real roots of x-polynomials in (−4, 0), i.e. Alexander roots on the
//! open upper unit semicircle, isolated by Sturm sequences over ℚ and
//! refined by bisection. All zero tests are exact.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::{count_open, squarefree_factors, QPoly};
use super::{x_to_turn_fixed, SymPoly};
use crate::hp::{self, Fixed};
use crate::{Error, Result};

/// An isolated root x₀ ∈ (−4, 0) of a squarefree integer polynomial, i.e.
/// the point e^{2πis₀} with s₀ = arccos(1 + x₀/2)/(2π) ∈ (0, ½).
///
/// `(lo, hi)` is an open interval containing x₀ and no other root of
/// `defpoly`; `defpoly` is nonzero at both endpoints.
#[derive(Clone, Debug)]
pub struct AlgebraicRoot {
    defpoly: SymPoly,
    lo: BigRational,
    hi: BigRational,
    multiplicity: usize,
    sign_lo: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaSign {
    /// Vanishing order at the root.
    pub order: usize,
    /// Sign of the first nonvanishing Taylor coefficient in θ.
    pub sign: i32,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl AlgebraicRoot {
    fn new(defpoly: SymPoly, lo: BigRational, hi: BigRational, multiplicity: usize) -> Self {
        let sign_lo = sign_rational(&defpoly, &lo);
        debug_assert!(sign_lo != 0);
        AlgebraicRoot { defpoly, lo, hi, multiplicity, sign_lo }
    }

    pub fn defpoly(&self) -> &SymPoly {
        &self.defpoly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Halves the isolating interval once.
    pub fn bisect(&mut self) {
        let w = self.width();
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        match sign_rational(&self.defpoly, &mid) {
            0 => {
                // Rational root: center a strictly smaller interval on it.
                let q = w / BigRational::from_integer(4.into());
                self.lo = &mid - &q;
                self.hi = &mid + &q;
                self.sign_lo = sign_rational(&self.defpoly, &self.lo);
            }
            s if s == self.sign_lo => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    /// One Newton step from the midpoint, accepted only if the interval
    /// [x − ε, x + ε] around the iterate lies inside the current one and
    /// brackets the sign change. `target_bits` caps the precision asked for.
    fn newton_step(&mut self, target_bits: u64) -> bool {
        let w = self.width();
        let k = w.denom().bits().saturating_sub(w.numer().bits());
        if k < 8 {
            return false;
        }
        let e = (2 * k - 4).min(target_bits + 1);
        let bits = (e + 16) as u32;
        let x = Fixed::from_ratio(&self.midpoint(), bits);
        let d = self.defpoly.derivative().eval_fixed(&x);
        if d.is_zero() {
            return false;
        }
        let xn = x.sub(&self.defpoly.eval_fixed(&x).div(&d)).to_ratio();
        let eps = BigRational::new(BigInt::one(), BigInt::one() << e);
        let (lo, hi) = (&xn - &eps, &xn + &eps);
        if lo <= self.lo || hi >= self.hi {
            return false;
        }
        if sign_rational(&self.defpoly, &lo) != self.sign_lo || sign_rational(&self.defpoly, &hi) != -self.sign_lo {
            return false;
        }
        self.lo = lo;
        self.hi = hi;
        true
    }

    /// Shrinks the interval below `width`, quadratically once Newton
    /// steps take hold.
    pub fn refine_to_width(&mut self, width: &BigRational) {
        let target_bits = width.denom().bits().saturating_sub(width.numer().bits()) + 1;
        while &self.width() >= width {
            if !self.newton_step(target_bits) {
                for _ in 0..4 {
                    self.bisect();
                }
            }
        }
    }

    /// Shrinks the interval below 10^{−k}.
    pub fn refine(&mut self, k: u32) {
        let w = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize));
        self.refine_to_width(&w);
    }

    pub fn refined(&self, k: u32) -> Self {
        let mut r = self.clone();
        r.refine(k);
        r
    }

    fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// x₀ to `bits` fractional bits.
    pub fn x_fixed(&self, bits: u32) -> Fixed {
        let mut r = self.clone();
        r.refine_to_width(&BigRational::new(BigInt::one(), BigInt::one() << (bits + 2)));
        Fixed::from_ratio(&r.midpoint(), bits)
    }

    pub fn x_f64(&self) -> f64 {
        self.x_fixed(64).to_f64()
    }

    /// s₀ with `digits` significant digits of working precision.
    pub fn turn_fixed(&self, digits: u32) -> Fixed {
        let bits = hp::bits_for_digits(digits);
        x_to_turn_fixed(&self.x_fixed(bits))
    }

    pub fn turn_f64(&self) -> f64 {
        self.turn_fixed(20).to_f64()
    }

    /// True when both describe the same point, decided exactly by a gcd.
    pub fn same_point(&self, other: &AlgebraicRoot) -> bool {
        let lo = if self.lo > other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi < other.hi { &self.hi } else { &other.hi };
        if lo >= hi {
            return false;
        }
        let g = QPoly::from_sym(&self.defpoly).gcd(&QPoly::from_sym(&other.defpoly));
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        count_open(&g.sturm_chain(), lo, hi) > 0
    }

    /// Orders by turn (equivalently by decreasing x), refining copies until
    /// the intervals separate. Equal points compare equal.
    pub fn cmp_turn(&self, other: &AlgebraicRoot) -> Ordering {
        if self.same_point(other) {
            return Ordering::Equal;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Greater;
            }
            if b.hi <= a.lo {
                return Ordering::Less;
            }
            a.bisect();
            b.bisect();
        }
    }

    /// Sign of p on the whole isolating interval, if constant.
    fn interval_sign(&self, p: &SymPoly) -> Option<i32> {
        let (a, b) = interval_horner(p, &self.lo, &self.hi);
        if a.is_positive() {
            Some(1)
        } else if b.is_negative() {
            Some(-1)
        } else {
            None
        }
    }
}

/// Sign of p(n/d) from the homogenized integer sum Σ cᵢ nⁱ d^{deg−i}.
pub(crate) fn sign_rational(p: &SymPoly, x: &BigRational) -> i32 {
    let (n, d) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in p.coeffs().iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    match acc.sign() {
        Sign::Plus => 1,
        Sign::Minus => -1,
        Sign::NoSign => 0,
    }
}

/// Enclosure of p over [lo, hi] by interval Horner evaluation, carried out
/// on integers scaled by powers of the common denominator D. The bounds
/// returned are D^deg times the true ones, which keeps their signs.
fn interval_horner(p: &SymPoly, lo: &BigRational, hi: &BigRational) -> (BigInt, BigInt) {
    let den = lo.denom().lcm(hi.denom());
    let a_num = lo.numer() * (&den / lo.denom());
    let b_num = hi.numer() * (&den / hi.denom());
    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in p.coeffs().iter().rev() {
        let prods = [&a * &a_num, &a * &b_num, &b * &a_num, &b * &b_num];
        let mn = prods.iter().min().unwrap();
        let mx = prods.iter().max().unwrap();
        let cs = c * &dpow;
        a = mn + &cs;
        b = mx + cs;
        dpow *= &den;
    }
    (a, b)
}

/// All roots of `p` in (−4, 0) with multiplicities, sorted by increasing
/// turn.
pub fn isolate_roots(p: &SymPoly) -> Result<Vec<AlgebraicRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    for (factor, mult) in squarefree_factors(&QPoly::from_sym(p)) {
        let def = factor.to_primitive();
        let q = QPoly::from_sym(&def);
        let chain = q.sturm_chain();
        let mut stack = alloc::vec![(ratio(-4, 1), ratio(0, 1))];
        while let Some((a, b)) = stack.pop() {
            let n = count_open(&chain, &a, &b);
            if n == 0 {
                continue;
            }
            if n == 1 && q.sign_at(&a) != 0 && q.sign_at(&b) != 0 {
                roots.push(AlgebraicRoot::new(def.clone(), a, b, mult));
                continue;
            }
            let mid = (&a + &b) / BigRational::from_integer(2.into());
            if q.sign_at(&mid) == 0 {
                let mut d = (&b - &a) / BigRational::from_integer(4.into());
                loop {
                    let (l, h) = (&mid - &d, &mid + &d);
                    if count_open(&chain, &l, &h) == 1 && q.sign_at(&l) != 0 && q.sign_at(&h) != 0 {
                        roots.push(AlgebraicRoot::new(def.clone(), l, h, mult));
                        break;
                    }
                    d /= BigRational::from_integer(2.into());
                }
            }
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
    }
    separate_and_sort(&mut roots);
    Ok(roots)
}

fn separate_and_sort(roots: &mut [AlgebraicRoot]) {
    loop {
        // ascending turn = descending x
        roots.sort_by(|a, b| b.lo.cmp(&a.lo));
        let mut clean = true;
        for i in 1..roots.len() {
            // roots[i] should sit entirely left of roots[i−1]
            if roots[i].hi > roots[i - 1].lo {
                clean = false;
                roots[i].bisect();
                roots[i - 1].bisect();
            }
        }
        if clean {
            return;
        }
    }
}

/// Exact sign of p(x₀). Interval evaluation settles nonzero signs
/// quickly; an exact gcd test is only run when that stalls.
pub fn sign_at(p: &SymPoly, r: &AlgebraicRoot) -> i32 {
    if p.is_zero() {
        return 0;
    }
    let mut r = r.clone();
    let width = |bits: usize| BigRational::new(BigInt::one(), BigInt::one() << bits);
    for bits in [8, 64, 192] {
        r.refine_to_width(&width(bits));
        if let Some(s) = r.interval_sign(p) {
            return s;
        }
    }
    let g = QPoly::from_sym(p).gcd(&QPoly::from_sym(&r.defpoly));
    if g.degree().unwrap_or(0) > 0 && count_open(&g.sturm_chain(), &r.lo, &r.hi) > 0 {
        return 0;
    }
    let mut bits = 384;
    loop {
        r.refine_to_width(&width(bits));
        if let Some(s) = r.interval_sign(p) {
            return s;
        }
        bits *= 2;
    }
}

/// [`sign_at`] after first refining the root below width 10^{−k}.
pub fn sign_at_with_width(p: &SymPoly, r: &AlgebraicRoot, k: u32) -> i32 {
    sign_at(p, &r.refined(k))
}

/// Order and sign of f(θ) = p(x(θ)) at the root, x(θ) = 2cos θ − 2. Since
/// dx/dθ = −2 sin θ < 0 on (0, π), the sign is sgn(p^{(k)}(x₀))·(−1)^k.
pub fn theta_sign(p: &SymPoly, r: &AlgebraicRoot) -> Result<ThetaSign> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut q = p.clone();
    let mut order = 0;
    loop {
        let s = sign_at(&q, r);
        if s != 0 {
            let sign = if order % 2 == 0 { s } else { -s };
            return Ok(ThetaSign { order, sign });
        }
        q = q.derivative();
        order += 1;
    }
}
