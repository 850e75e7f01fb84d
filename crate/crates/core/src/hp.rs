//! Binary fixed-point reals on top of `BigInt`.
//!
//! A [`Fixed`] holds `mant / 2^bits`. All operands of a binary operation must
//! share the same `bits`; results are truncated toward negative infinity, so
//! every operation loses at most one unit in the last place. Callers size
//! `bits` from a requested number of decimal digits plus guard bits via
//! [`bits_for_digits`].

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Guard bits added on top of the requested decimal precision.
pub const GUARD_BITS: u32 = 48;

/// Number of fractional bits needed to carry `digits` significant decimal
/// digits of a quantity of magnitude around one, plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) < 3.3220
    (digits * 33220).div_ceil(10000) + GUARD_BITS
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    mant: BigInt,
    bits: u32,
}

impl Fixed {
    pub fn zero(bits: u32) -> Self {
        Fixed { mant: BigInt::zero(), bits }
    }

    pub fn from_int(v: i64, bits: u32) -> Self {
        Fixed { mant: BigInt::from(v) << bits, bits }
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Self {
        Fixed { mant: v << bits, bits }
    }

    pub fn from_ratio(r: &BigRational, bits: u32) -> Self {
        let mant = (r.numer() << bits).div_floor(r.denom());
        Fixed { mant, bits }
    }

    /// Exact conversion of the binary value of `v`, then truncation.
    pub fn from_f64(v: f64, bits: u32) -> Self {
        let r = BigRational::from_float(v).expect("finite f64");
        Self::from_ratio(&r, bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn to_ratio(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        // Keep 64 significant bits before handing over to f64.
        let excess = (self.mant.bits() as i64 - 64).max(0) as u32;
        let m = (&self.mant >> excess).to_f64().unwrap_or(0.0);
        m * libm::exp2(excess as f64 - self.bits as f64)
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn abs(&self) -> Self {
        Fixed { mant: self.mant.abs(), bits: self.bits }
    }

    pub fn neg(&self) -> Self {
        Fixed { mant: -&self.mant, bits: self.bits }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        Fixed { mant: &self.mant + &o.mant, bits: self.bits }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        Fixed { mant: &self.mant - &o.mant, bits: self.bits }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        Fixed { mant: (&self.mant * &o.mant) >> self.bits, bits: self.bits }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Fixed { mant: &self.mant * k, bits: self.bits }
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Self {
        Fixed { mant: &self.mant * k, bits: self.bits }
    }

    pub fn div(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        assert!(!o.mant.is_zero(), "fixed-point division by zero");
        Fixed { mant: (&self.mant << self.bits).div_floor(&o.mant), bits: self.bits }
    }

    pub fn div_int(&self, k: i64) -> Self {
        Fixed { mant: self.mant.div_floor(&BigInt::from(k)), bits: self.bits }
    }

    pub fn shl(&self, k: u32) -> Self {
        Fixed { mant: &self.mant << k, bits: self.bits }
    }

    pub fn shr(&self, k: u32) -> Self {
        Fixed { mant: &self.mant >> k, bits: self.bits }
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.mant.is_negative(), "sqrt of negative fixed-point value");
        Fixed { mant: (&self.mant << self.bits).sqrt(), bits: self.bits }
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut acc = Fixed::from_int(1, self.bits);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Decimal string with `sig` significant digits, rounded half away from
    /// zero, in positional notation (`0.16666666666666666667`).
    pub fn to_sig_string(&self, sig: u32) -> String {
        format_sig(&self.to_ratio(), sig)
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.bits == other.bits).then(|| self.mant.cmp(&other.mant))
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(20) as u32;
        f.write_str(&self.to_sig_string(sig))
    }
}

/// Formats an exact rational with `sig` significant digits.
pub fn format_sig(r: &BigRational, sig: u32) -> String {
    let sig = sig.max(1);
    if r.is_zero() {
        let mut s = String::from("0.");
        s.extend(core::iter::repeat_n('0', sig.saturating_sub(1) as usize));
        return s;
    }
    let neg = r.is_negative();
    let a = r.abs();
    // Decimal exponent e with 10^e <= a < 10^(e+1).
    let mut e = decimal_exponent_estimate(&a);
    loop {
        if pow10_ratio(e) > a {
            e -= 1;
        } else if pow10_ratio(e + 1) <= a {
            e += 1;
        } else {
            break;
        }
    }
    // digits = round(a * 10^(sig-1-e))
    let shift = sig as i64 - 1 - e;
    let scaled = &a * pow10_ratio(shift);
    let num: BigInt = scaled.numer() * 2 + scaled.denom();
    let mut n = num.div_floor(&(scaled.denom() * 2));
    if n.to_string_len() > sig as usize {
        // rounding carried into a new digit
        n /= 10;
        e += 1;
    }
    let digits = n.to_str_radix(10);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e < 0 {
        out.push_str("0.");
        out.extend(core::iter::repeat_n('0', (-e - 1) as usize));
        out.push_str(&digits);
    } else {
        let int_len = (e + 1) as usize;
        if digits.len() <= int_len {
            out.push_str(&digits);
            out.extend(core::iter::repeat_n('0', int_len - digits.len()));
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    }
    out
}

trait DigitLen {
    fn to_string_len(&self) -> usize;
}

impl DigitLen for BigInt {
    fn to_string_len(&self) -> usize {
        self.to_str_radix(10).trim_start_matches('-').len()
    }
}

fn pow10_ratio(e: i64) -> BigRational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn decimal_exponent_estimate(a: &BigRational) -> i64 {
    let nb = a.numer().bits() as f64;
    let db = a.denom().bits() as f64;
    libm::floor((nb - db) * core::f64::consts::LOG10_2) as i64
}

/// π to `bits` fractional bits (Machin: π = 16 atan(1/5) − 4 atan(1/239)).
pub fn pi(bits: u32) -> Fixed {
    let wb = bits + 16;
    let a = atan_inv(5, wb).mul_int(16);
    let b = atan_inv(239, wb).mul_int(4);
    let p = a.sub(&b);
    Fixed { mant: p.mant >> 16, bits }
}

fn atan_inv(k: i64, bits: u32) -> Fixed {
    let k2 = BigInt::from(k * k);
    let mut power = (BigInt::one() << bits) / k; // 1/k^(2n+1)
    let mut sum = BigInt::zero();
    let mut n: i64 = 0;
    while !power.is_zero() {
        let term = &power / (2 * n + 1);
        if n % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        n += 1;
    }
    Fixed { mant: sum, bits }
}

/// cos(x) by Taylor series after reduction to |x| ≤ π.
pub fn cos(x: &Fixed) -> Fixed {
    let bits = x.bits;
    let wb = bits + 24;
    let xw = reduce_two_pi(&Fixed { mant: &x.mant << 24, bits: wb });
    let x2 = xw.mul(&xw);
    let one = Fixed::from_int(1, wb);
    let mut term = one.clone();
    let mut sum = one;
    let mut k: i64 = 0;
    loop {
        term = term.mul(&x2).neg().div_int((2 * k + 1) * (2 * k + 2));
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        k += 1;
    }
    Fixed { mant: sum.mant >> 24, bits }
}

/// sin(x) by Taylor series after reduction to |x| ≤ π.
pub fn sin(x: &Fixed) -> Fixed {
    let bits = x.bits;
    let wb = bits + 24;
    let xw = reduce_two_pi(&Fixed { mant: &x.mant << 24, bits: wb });
    let x2 = xw.mul(&xw);
    let mut term = xw.clone();
    let mut sum = xw;
    let mut k: i64 = 1;
    loop {
        term = term.mul(&x2).neg().div_int((2 * k) * (2 * k + 1));
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        k += 1;
    }
    Fixed { mant: sum.mant >> 24, bits }
}

fn reduce_two_pi(x: &Fixed) -> Fixed {
    let two_pi = pi(x.bits).shl(1);
    let half = two_pi.shr(1);
    // n = round(x / 2π)
    let q = x.add(&half).div(&two_pi);
    let n = q.mant >> x.bits;
    if n.is_zero() {
        x.clone()
    } else {
        x.sub(&two_pi.mul_bigint(&n))
    }
}

/// atan(z) by repeated half-angle reduction and a Taylor series.
pub fn atan(z: &Fixed) -> Fixed {
    let bits = z.bits;
    let wb = bits + 24;
    let one = Fixed::from_int(1, wb);
    let mut w = Fixed { mant: &z.mant << 24, bits: wb };
    let mut halvings = 0u32;
    // atan(w) = 2 atan(w / (1 + sqrt(1 + w²)))
    let small = Fixed { mant: BigInt::one() << (wb - 4), bits: wb };
    while w.abs() > small {
        let r = one.add(&w.mul(&w)).sqrt();
        w = w.div(&one.add(&r));
        halvings += 1;
    }
    let w2 = w.mul(&w);
    let mut power = w.clone();
    let mut sum = w;
    let mut n: i64 = 1;
    loop {
        power = power.mul(&w2).neg();
        let term = power.div_int(2 * n + 1);
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    Fixed { mant: (sum.mant << halvings) >> 24, bits }
}

/// acos(y) for y ∈ [−1, 1].
pub fn acos(y: &Fixed) -> Fixed {
    let bits = y.bits;
    let one = Fixed::from_int(1, bits);
    assert!(y.abs() <= one, "acos argument outside [-1, 1]");
    if y.mant == -&one.mant {
        return pi(bits);
    }
    // acos(y) = 2 atan(sqrt((1 − y)/(1 + y)))
    atan(&one.sub(y).div(&one.add(y)).sqrt()).shl(1)
}

/// Horner evaluation of integer coefficients (ascending) at `x`.
pub fn horner(coeffs: &[BigInt], x: &Fixed) -> Fixed {
    let mut acc = Fixed::zero(x.bits);
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&Fixed::from_bigint(c, x.bits));
    }
    acc
}

/// Rounds a slice of fixed values to f64, mostly for diagnostics.
pub fn to_f64_vec(v: &[Fixed]) -> Vec<f64> {
    v.iter().map(Fixed::to_f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn pi_digits() {
        let p = pi(bits_for_digits(40));
        assert_eq!(p.to_sig_string(40), "3.141592653589793238462643383279502884197");
    }

    #[test]
    fn acos_half_is_sixth_turn() {
        let bits = bits_for_digits(30);
        let half = Fixed::from_ratio(&BigRational::new(1.into(), 2.into()), bits);
        let s = acos(&half).div(&pi(bits).shl(1));
        assert_eq!(s.to_sig_string(20), "0.16666666666666666667");
    }

    #[test]
    fn trig_identities() {
        let bits = bits_for_digits(30);
        for v in [-7.3, -1.0, 0.0, 0.4, 2.9, 12.5] {
            let x = Fixed::from_f64(v, bits);
            let c = cos(&x);
            let s = sin(&x);
            let one = c.mul(&c).add(&s.mul(&s));
            assert!((one.to_f64() - 1.0).abs() < 1e-25, "{v}");
            assert!((c.to_f64() - libm::cos(v)).abs() < 1e-15);
            assert!((s.to_f64() - libm::sin(v)).abs() < 1e-15);
        }
        for v in [-20.0, -0.3, 0.0, 0.01, 1.0, 3.7] {
            let a = atan(&Fixed::from_f64(v, bits));
            assert!((a.to_f64() - libm::atan(v)).abs() < 1e-15, "{v}");
        }
        let m1 = Fixed::from_int(-1, bits);
        assert_eq!(acos(&m1), pi(bits));
    }

    #[test]
    fn sig_formatting() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(format_sig(&r(1, 6), 5), "0.16667");
        assert_eq!(format_sig(&r(-1, 3), 3), "-0.333");
        assert_eq!(format_sig(&r(999_999, 1_000_000), 3), "1.00");
        assert_eq!(format_sig(&r(123_456, 1), 3), "123000");
        assert_eq!(format_sig(&r(-5, 1000), 2), "-0.0050");
        assert_eq!(format_sig(&r(0, 1), 3), "0.00");
        assert_eq!(Fixed::from_int(42, 64).to_string(), "42.000000000000000000");
    }
}
