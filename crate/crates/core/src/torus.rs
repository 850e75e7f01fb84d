//! Torus knots T(a, b): closed-form Δ, roots, jumps and Q, and a four-way
//! check of j = jj.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::braid::BraidWord;
use crate::hp::{self, Fixed};
use crate::invariants::{jump_divisor_with, JumpDivisor, JumpEntry};
use crate::qjump::{jj_divisor, numeric_c, Status};
use crate::sympoly::{isolate_roots, turn_to_x_fixed, AlgebraicRoot, SymPoly};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    a: u32,
    b: u32,
}

impl TorusKnot {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a < 2 || a >= b || a.gcd(&b) != 1 {
            return Err(Error::BadTorusParameters { a, b });
        }
        Ok(TorusKnot { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn genus(&self) -> usize {
        ((self.a - 1) * (self.b - 1) / 2) as usize
    }

    /// (σ₁σ₂⋯σ_{a−1})^b, whose closure is T(a, b).
    pub fn braid(&self) -> BraidWord {
        let letters: Vec<i32> = (0..self.b).flat_map(|_| 1..self.a as i32).collect();
        BraidWord::new(letters).expect("nonempty word")
    }
}

/// tⁿ − 1 as ascending coefficients.
fn t_pow_minus_one(n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n + 1];
    v[0] = -BigInt::one();
    v[n] = BigInt::one();
    v
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient by a monic divisor; the remainder must vanish.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut r = num.to_vec();
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd].clone();
        for (j, d) in den.iter().enumerate() {
            r[k + j] -= &c * d;
        }
        q[k] = c;
    }
    assert!(r.iter().all(Zero::is_zero), "torus Alexander quotient is not exact");
    q
}

/// Δ(T(a,b)) = (t^{ab} − 1)(t − 1)/((t^a − 1)(t^b − 1)), centered.
pub fn delta_torus(k: TorusKnot) -> SymPoly {
    let (a, b) = (k.a as usize, k.b as usize);
    let num = poly_mul(&t_pow_minus_one(a * b), &t_pow_minus_one(1));
    let den = poly_mul(&t_pow_minus_one(a), &t_pow_minus_one(b));
    let q = poly_div_exact(&num, &den);
    let p = SymPoly::from_laurent(&q).expect("cyclotomic quotient is palindromic");
    if p.at_one().is_negative() {
        -p
    } else {
        p
    }
}

/// The turns m/a + n/b mod 1 (0 < m < a, 0 < n < b) lying in (0, ½),
/// ascending.
pub fn roots_torus(k: TorusKnot) -> Vec<BigRational> {
    let (a, b) = (k.a as i64, k.b as i64);
    let ab = a * b;
    let mut out = Vec::new();
    for m in 1..a {
        for n in 1..b {
            let num = (m * b + n * a) % ab;
            if 2 * num < ab {
                out.push(BigRational::new(num.into(), ab.into()));
            }
        }
    }
    out.sort();
    out
}

/// Pairs each exact turn with the isolated root of Δ it equals (to 10⁻²⁵).
fn matched_roots(k: TorusKnot) -> Result<Vec<(BigRational, AlgebraicRoot)>> {
    let delta = delta_torus(k);
    let roots = isolate_roots(&delta)?;
    let turns = roots_torus(k);
    if roots.len() != turns.len() {
        return Err(Error::Precondition(alloc::format!(
            "T({},{}): {} isolated roots but {} exact turns",
            k.a,
            k.b,
            roots.len(),
            turns.len()
        )));
    }
    let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(25));
    let mut out = Vec::with_capacity(turns.len());
    for (s, r) in turns.into_iter().zip(roots) {
        let approx = r.turn_fixed(40).to_ratio();
        if (&approx - &s).abs() > tol || r.multiplicity() != 1 {
            return Err(Error::Precondition(alloc::format!("T({},{}): root at turn {s} not matched", k.a, k.b)));
        }
        out.push((s, r));
    }
    Ok(out)
}

/// Signature jump at the upper root s₀ = m/a + n/b mod 1: +2 when s₀ is
/// itself a lattice sum m/a + n/b (0 < m < a, 0 < n < b), −2 when only
/// m/a + n/b − 1 hits it. This is the Kearton/Litherland count; note that
/// it is not −2 at every upper root once 1/a + 1/b < ½.
pub fn kearton_jump(k: TorusKnot, s0: &BigRational) -> i32 {
    let (a, b) = (k.a as i64, k.b as i64);
    let scaled = s0 * BigRational::from_integer(BigInt::from(a * b));
    let direct = scaled.is_integer() && {
        let num = scaled.to_integer();
        (1..a).any(|m| {
            let rest = &num - BigInt::from(m * b);
            rest.is_positive() && (&rest % a).is_zero() && rest < BigInt::from(a * b)
        })
    };
    if direct {
        2
    } else {
        -2
    }
}

/// The jump divisor from [`kearton_jump`] at the isolated roots of Δ.
pub fn jump_torus(k: TorusKnot) -> Result<JumpDivisor> {
    let entries =
        matched_roots(k)?.into_iter().map(|(s0, root)| JumpEntry { jump: kearton_jump(k, &s0), root }).collect();
    Ok(JumpDivisor::new(entries))
}

/// P(T(a,b)) = Q·Δ² as an exact x-polynomial, from Rozansky's closed form
/// with the x-derivative expanded analytically:
///
/// 4ab·P = (a²−1)(b²−1)p² − 4[(4+x)p′p + (x(4+x)p″ + (2+x)p′)p − 2x(4+x)p′²]
///
/// where p = Δ in the x-basis.
pub fn p_torus(k: TorusKnot) -> SymPoly {
    let (a, b) = (BigInt::from(k.a), BigInt::from(k.b));
    let p = delta_torus(k);
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let c = |v: i64| SymPoly::from_i64s(&[v]);
    let x = SymPoly::x();
    let four_x = SymPoly::from_i64s(&[4, 1]);
    let two_x = SymPoly::from_i64s(&[2, 1]);
    let x4x = &x * &four_x;
    let lead = SymPoly::constant((&a * &a - 1u32) * (&b * &b - 1u32));
    let bracket =
        &(&(&(&four_x * &d1) * &p) + &(&(&(&x4x * &d2) + &(&two_x * &d1)) * &p)) - &(&(&c(2) * &x4x) * &(&d1 * &d1));
    let total = &(&lead * &(&p * &p)) - &(&c(4) * &bracket);
    let denom = BigInt::from(4u32) * &a * &b;
    SymPoly::new(
        total
            .coeffs()
            .iter()
            .map(|v| {
                let (q, r) = v.div_rem(&denom);
                assert!(r.is_zero(), "torus P is not integral");
                q
            })
            .collect(),
    )
}

/// Q(T(a,b))(e^{2πis}) = P/Δ² with `digits` digits of working precision.
pub fn q_torus_fixed(k: TorusKnot, s: &BigRational, digits: u32) -> Result<Fixed> {
    let bits = hp::bits_for_digits(digits);
    let x = turn_to_x_fixed(&Fixed::from_ratio(s, bits));
    let d = delta_torus(k).eval_fixed(&x);
    let guard = Fixed::from_ratio(&BigRational::new(BigInt::one(), BigInt::from(10).pow(digits * 2 / 3)), bits);
    if d.abs() < guard {
        return Err(Error::Precondition(alloc::format!("turn {s} is an Alexander root of T({},{})", k.a, k.b)));
    }
    Ok(p_torus(k).eval_fixed(&x).div(&d.mul(&d)))
}

pub fn q_torus(k: TorusKnot, s: f64) -> Result<f64> {
    let s = BigRational::from_float(s).ok_or(Error::Precondition("non-finite turn".into()))?;
    Ok(q_torus_fixed(k, &s, 40)?.to_f64())
}

/// Coefficient of (s − s₀)⁻² of Q at every torus root: −1/(2π²ab).
pub fn pole_coefficient(k: TorusKnot) -> f64 {
    -1.0 / (2.0 * core::f64::consts::PI * core::f64::consts::PI * (k.a * k.b) as f64)
}

/// Σ k·a_k·sin(kθ₀) for Δ = Σ a_k(t^k + t^{−k}); the θ-coefficient of the
/// double pole is proportional to −4 times its square.
pub fn sine_sum(k: TorusKnot, s0: &BigRational, digits: u32) -> Fixed {
    let bits = hp::bits_for_digits(digits);
    let c = delta_torus(k).to_laurent();
    let d = c.len() / 2;
    let theta = hp::pi(bits).shl(1).mul(&Fixed::from_ratio(s0, bits));
    let mut acc = Fixed::zero(bits);
    for j in 1..=d {
        let term = hp::sin(&theta.mul_int(j as i64)).mul_bigint(&c[d + j]).mul_int(j as i64);
        acc = acc.add(&term);
    }
    acc
}

/// Fits c in Q ≈ c(s − s₀)⁻² from symmetric samples at s₀ ± h, h = 10⁻⁴
/// and 10⁻⁵, removing the h² term by Richardson extrapolation.
pub fn fitted_pole_coefficient(k: TorusKnot, s0: &BigRational, digits: u32) -> Result<f64> {
    let sym = |h: &BigRational| -> Result<Fixed> {
        let bits = hp::bits_for_digits(digits);
        let up = q_torus_fixed(k, &(s0 + h), digits)?;
        let dn = q_torus_fixed(k, &(s0 - h), digits)?;
        Ok(up.add(&dn).shr(1).mul(&Fixed::from_ratio(&(h * h), bits)))
    };
    let h1 = BigRational::new(BigInt::one(), BigInt::from(10_000));
    let h2 = BigRational::new(BigInt::one(), BigInt::from(100_000));
    let (a1, a2) = (sym(&h1)?.to_f64(), sym(&h2)?.to_f64());
    // A(h) = c + c₂h²: c = (A(h₂)h₁² − A(h₁)h₂²)/(h₁² − h₂²)
    Ok((a2 * 1e-8 - a1 * 1e-10) / (1e-8 - 1e-10))
}

#[derive(Clone, Debug)]
pub struct TorusRow {
    pub turn: BigRational,
    /// Kearton's lattice-point formula ([`kearton_jump`]).
    pub j_kearton: i32,
    /// Signature jump of the torus braid's Seifert matrix.
    pub j_seifert: i32,
    /// jj from the exact sign of P at the root.
    pub jj_exact: i32,
    /// jj from the sign of −4(Σ k a_k sin kθ₀)².
    pub jj_sine: i32,
    /// jj from the sign of the fitted pole coefficient.
    pub jj_fit: i32,
    pub c_closed: f64,
    pub c_exact: f64,
    pub c_fit: f64,
}

impl TorusRow {
    /// The two signature-side computations agree.
    pub fn j_consistent(&self) -> bool {
        self.j_seifert == self.j_kearton
    }

    /// The three Q-side computations agree, and both numeric pole
    /// coefficients match the closed form to 10⁻⁶ relative.
    pub fn jj_consistent(&self) -> bool {
        let rel = |a: f64, b: f64| (a - b).abs() <= 1e-6 * b.abs();
        self.jj_exact == self.jj_sine
            && self.jj_exact == self.jj_fit
            && rel(self.c_exact, self.c_closed)
            && rel(self.c_fit, self.c_closed)
    }

    pub fn agrees(&self) -> bool {
        self.j_consistent() && self.jj_consistent() && self.j_kearton == self.jj_exact
    }
}

#[derive(Clone, Debug)]
pub struct TorusReport {
    pub knot: TorusKnot,
    pub rows: Vec<TorusRow>,
    /// σ₋₁ from the Seifert jumps.
    pub sigma: i32,
    /// Σ jj over the upper roots.
    pub sigma_jj: i32,
    pub status: Status,
    pub notes: Vec<String>,
}

impl TorusReport {
    pub fn matches(&self) -> bool {
        self.status == Status::Match
    }
}

fn sign2(v: f64) -> i32 {
    if v > 0.0 {
        2
    } else if v < 0.0 {
        -2
    } else {
        0
    }
}

/// Checks j = jj on T(a, b). j is computed from Kearton's formula and from
/// the torus braid's Seifert matrix; jj from the exact sign of P, from the
/// sine-sum sign, and from a numeric pole fit of the closed-form Q.
pub fn verify_torus(k: TorusKnot) -> Result<TorusReport> {
    let delta = delta_torus(k);
    let p = p_torus(k);
    let kearton = jump_torus(k)?;
    let seifert = jump_divisor_with(&k.braid().seifert_matrix()?, &delta)?;
    let exact = jj_divisor(&delta, &p)?;
    let turns = roots_torus(k);
    let same_roots = seifert.len() == kearton.len()
        && exact.len() == kearton.len()
        && kearton.entries().iter().zip(seifert.entries()).all(|(a, b)| a.root.same_point(&b.root))
        && kearton.entries().iter().zip(exact.entries()).all(|(a, b)| a.root.same_point(&b.root));
    let mut rows = Vec::with_capacity(turns.len());
    for (i, s0) in turns.into_iter().enumerate() {
        let root = &kearton.entries()[i].root;
        let sine = sine_sum(k, &s0, 40);
        let tiny = Fixed::from_ratio(&BigRational::new(BigInt::one(), BigInt::from(10).pow(30)), sine.bits());
        let jj_sine = if sine.abs() > tiny { -2 } else { 0 };
        let c_fit = fitted_pole_coefficient(k, &s0, 40)?;
        rows.push(TorusRow {
            j_kearton: kearton.entries()[i].jump,
            j_seifert: seifert.entries().get(i).map_or(0, |e| e.jump),
            jj_exact: exact.entries().get(i).map_or(0, |e| e.jump),
            jj_sine,
            jj_fit: sign2(c_fit),
            c_closed: pole_coefficient(k),
            c_exact: numeric_c(&delta, &p, root, 30).to_f64(),
            c_fit,
            turn: s0,
        });
    }
    let mut notes = Vec::new();
    if !same_roots {
        notes.push("root sets of the four computations differ".to_string());
    }
    if !rows.iter().all(TorusRow::j_consistent) {
        notes.push("Seifert jumps disagree with the lattice-point formula".to_string());
    }
    if !rows.iter().all(TorusRow::jj_consistent) {
        notes.push("Q-side computations disagree".to_string());
    }
    let bad: Vec<String> = rows.iter().filter(|r| r.j_kearton != r.jj_exact).map(|r| r.turn.to_string()).collect();
    if !bad.is_empty() {
        notes.push(alloc::format!("j = +2 but jj = -2 at turn(s) {}", bad.join(", ")));
    }
    let status = if notes.is_empty() { Status::Match } else { Status::Mismatch };
    let sigma_jj = rows.iter().map(|r| r.jj_exact).sum();
    Ok(TorusReport { knot: k, rows, sigma: seifert.total(), sigma_jj, status, notes })
}

/// Coprime pairs 2 ≤ a < b with ab ≤ `max_ab`.
pub fn torus_pairs(max_ab: u32) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    for a in 2..max_ab {
        for b in a + 1..=max_ab / a {
            if let Ok(k) = TorusKnot::new(a, b) {
                out.push(k);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let t23 = TorusKnot::new(2, 3).unwrap();
        assert_eq!(delta_torus(t23), SymPoly::from_i64s(&[1, 1]));
        assert_eq!(p_torus(t23), SymPoly::from_i64s(&[0, 2, 1]));
        assert_eq!(roots_torus(t23), vec![BigRational::new(1.into(), 6.into())]);
        let t25 = TorusKnot::new(2, 5).unwrap();
        assert_eq!(delta_torus(t25), SymPoly::from_i64s(&[1, 3, 1]));
        assert_eq!(
            roots_torus(t25),
            vec![BigRational::new(1.into(), 10.into()), BigRational::new(3.into(), 10.into())]
        );
        assert!(TorusKnot::new(2, 4).is_err());
        assert!(TorusKnot::new(3, 2).is_err());
    }

    #[test]
    fn trefoil_verifies() {
        let r = verify_torus(TorusKnot::new(2, 3).unwrap()).unwrap();
        assert!(r.matches(), "{r:?}");
        assert_eq!(r.sigma, -2);
        assert!((r.rows[0].c_fit + 0.00844343197019).abs() < 1e-9);
    }
}
