//! Symmetric Laurent polynomials f(t) = f(1/t), stored in the variable
//! x = z² = t − 2 + 1/t.
//!
//! On the unit circle t = e^{2πis} the variable x becomes 2cos(2πs) − 2,
//! which sweeps (−4, 0) monotonically as s runs over (0, ½). Roots of f on
//! the upper semicircle are therefore real roots of p(x) in (−4, 0).

mod parse;
pub(crate) mod qpoly;
mod roots;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::hp::{self, Fixed};
use crate::{Error, Result};

pub use roots::{isolate_roots, sign_at, sign_at_with_width, theta_sign, AlgebraicRoot, ThetaSign};

/// p(x) = Σ a_k x^k with exact integer coefficients; trailing zeros are
/// stripped so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymPoly {
    coeffs: Vec<BigInt>,
}

impl SymPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        SymPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> Self {
        SymPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// The polynomial x itself.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in x; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at t = 1, i.e. x = 0.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_fixed(&self, x: &Fixed) -> Fixed {
        hp::horner(&self.coeffs, x)
    }

    /// f(e^{2πis}) in double precision.
    pub fn eval_turn(&self, s: f64) -> f64 {
        self.eval_f64(turn_to_x(s))
    }

    /// f(e^{2πis}) with `digits` significant decimal digits of working
    /// precision (plus guard bits).
    pub fn eval_turn_precise(&self, s: &BigRational, digits: u32) -> Fixed {
        let bits = hp::bits_for_digits(digits);
        let x = turn_to_x_fixed(&Fixed::from_ratio(s, bits));
        self.eval_fixed(&x)
    }

    /// Coefficients of t^{−d}, …, t^{d} of the Laurent polynomial f(t).
    pub fn to_laurent(&self) -> Vec<BigInt> {
        let d = self.coeffs.len().saturating_sub(1);
        let mut out = vec![BigInt::zero(); 2 * d + 1];
        if self.is_zero() {
            return Vec::new();
        }
        // x = t − 2 + t⁻¹; keep (x)^k as a centered Laurent vector.
        let mut power = vec![BigInt::one()]; // x^0, centered at index 0
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                let mut next = vec![BigInt::zero(); power.len() + 2];
                for (i, v) in power.iter().enumerate() {
                    next[i] += v;
                    next[i + 1] -= v * 2;
                    next[i + 2] += v;
                }
                power = next;
            }
            if !c.is_zero() {
                // power has length 2k+1 centered on t^0
                let off = d - k;
                for (i, v) in power.iter().enumerate() {
                    out[off + i] += c * v;
                }
            }
        }
        out
    }

    /// Inverse of [`SymPoly::to_laurent`]; the input must have odd length and
    /// be palindromic.
    pub fn from_laurent(c: &[BigInt]) -> Result<Self> {
        if c.is_empty() || c.iter().all(Zero::is_zero) {
            return Ok(Self::zero());
        }
        if c.len().is_multiple_of(2) || c.iter().ne(c.iter().rev()) {
            return Err(Error::NotSymmetric);
        }
        let d = c.len() / 2;
        // t^k + t^{−k} = C_k(y), y = t + 1/t = x + 2; C_0 = 2, C_1 = y,
        // C_{k+1} = y C_k − C_{k−1}.
        let y = Self::from_i64s(&[2, 1]);
        let mut out = Self::constant(c[d].clone());
        let mut prev = Self::from_i64s(&[2]);
        let mut cur = y.clone();
        for k in 1..=d {
            if k > 1 {
                let next = &(&y * &cur) - &prev;
                prev = cur;
                cur = next;
            }
            out = &out + &(&cur * &Self::constant(c[d + k].clone()));
        }
        Ok(out)
    }

    /// Parses an x-polynomial: `"1 + 5*x + 2*x^2"`, `"1 + 5 z^2 + 2 z^4"`,
    /// or a coefficient list `"[1,5,2]"` (ascending powers of x).
    pub fn parse(s: &str) -> Result<Self> {
        parse::parse_poly(s)
    }

    /// Coefficient list form, e.g. `[1,5,2]`.
    pub fn to_list_string(&self) -> String {
        let mut out = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&c.to_str_radix(10));
        }
        out.push(']');
        out
    }
}

/// x = 2cos(2πs) − 2.
pub fn turn_to_x(s: f64) -> f64 {
    2.0 * libm::cos(2.0 * core::f64::consts::PI * s) - 2.0
}

pub fn turn_to_x_fixed(s: &Fixed) -> Fixed {
    let bits = s.bits();
    let theta = hp::pi(bits).shl(1).mul(s);
    hp::cos(&theta).shl(1).sub(&Fixed::from_int(2, bits))
}

/// s = arccos(1 + x/2)/(2π) for x ∈ [−4, 0], computed as
/// atan(sqrt(−x/(4 + x)))/π.
pub fn x_to_turn_fixed(x: &Fixed) -> Fixed {
    let bits = x.bits();
    let four = Fixed::from_int(4, bits);
    let denom = four.add(x);
    if denom.signum() <= 0 {
        return Fixed::from_ratio(&BigRational::new(1.into(), 2.into()), bits);
    }
    let ratio = x.neg().div(&denom);
    let ratio = if ratio.signum() < 0 { Fixed::zero(bits) } else { ratio };
    hp::atan(&ratio.sqrt()).div(&hp::pi(bits))
}

pub fn x_to_turn(x: f64) -> f64 {
    libm::acos((1.0 + x / 2.0).clamp(-1.0, 1.0)) / (2.0 * core::f64::consts::PI)
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, o: &SymPoly) -> SymPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            out[i] += c;
        }
        SymPoly::new(out)
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, o: &SymPoly) -> SymPoly {
        self + &(-o)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, o: &SymPoly) -> SymPoly {
        if self.is_zero() || o.is_zero() {
            return SymPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SymPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SymPoly {
            type Output = SymPoly;
            fn $m(self, o: SymPoly) -> SymPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        -&self
    }
}

impl fmt::Display for SymPoly {
    /// `1 + 5*x + 2*x^2`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                _ => {
                    if !unit {
                        f.write_str("*")?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl core::str::FromStr for SymPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
