//! The Q-function P/Δ² near the Alexander roots, the Jones jump divisor
//! jj(K), and the comparison j(K) = jj(K) for simple knots.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::braid::{BraidWord, IntMatrix};
use crate::hp::{self, Fixed};
use crate::invariants::{alexander, jump_divisor_with, JumpDivisor, JumpEntry};
use crate::skein::{make_good, skein_jump};
use crate::sympoly::{isolate_roots, theta_sign, AlgebraicRoot, SymPoly};
use crate::{Error, Result};

/// Working precision (decimal digits) for Laurent coefficients.
pub const DEFAULT_DIGITS: u32 = 30;

/// A knot given by a braid, optionally with Δ and P data. Construction
/// checks that the stored Δ is the one the braid produces.
#[derive(Clone, Debug)]
pub struct KnotRecord {
    pub name: String,
    pub braid: BraidWord,
    pub delta: Option<SymPoly>,
    pub p1: Option<SymPoly>,
    seifert: IntMatrix,
    alexander: SymPoly,
}

impl KnotRecord {
    pub fn new(name: impl Into<String>, braid: BraidWord, delta: Option<SymPoly>, p1: Option<SymPoly>) -> Result<Self> {
        let name = name.into();
        let seifert = braid.seifert_matrix()?;
        let computed = alexander(&seifert)?;
        if let Some(d) = &delta {
            if *d != computed {
                return Err(Error::DeltaMismatch { name, stored: d.to_string(), computed: computed.to_string() });
            }
        }
        Ok(KnotRecord { name, braid, delta, p1, seifert, alexander: computed })
    }

    pub fn seifert(&self) -> &IntMatrix {
        &self.seifert
    }

    /// Δ computed from the braid.
    pub fn alexander(&self) -> &SymPoly {
        &self.alexander
    }
}

/// Lowest term c·(s − s₀)^m of Q = P/Δ² at a simple root.
#[derive(Clone, Debug)]
pub struct LaurentLeading {
    /// m = ord(P) − 2, or `None` when P = 0 (order +∞).
    pub order: Option<i32>,
    /// Exact sign of c (0 when P = 0).
    pub sign: i32,
    /// c in turn⁻² units, present when m = −2.
    pub numeric_c: Option<Fixed>,
}

impl LaurentLeading {
    /// sgn(c)·max(0, −m) on the upper semicircle.
    pub fn jj(&self) -> i32 {
        match self.order {
            Some(m) => self.sign * (-m).max(0),
            None => 0,
        }
    }
}

fn require_simple(r: &AlgebraicRoot) -> Result<()> {
    if r.multiplicity() > 1 {
        return Err(Error::NonSimpleRoot { turn: r.turn_f64(), multiplicity: r.multiplicity() });
    }
    Ok(())
}

/// c = P(x₀) / (Δ′(x₀)·x′(s₀))², with x′(s)² = 4π²(−x)(4 + x).
pub fn numeric_c(delta: &SymPoly, p1: &SymPoly, r: &AlgebraicRoot, digits: u32) -> Fixed {
    let bits = hp::bits_for_digits(digits);
    let x = r.x_fixed(bits);
    let p = p1.eval_fixed(&x);
    let d = delta.derivative().eval_fixed(&x);
    let four_pi2 = hp::pi(bits).powi(2).mul_int(4);
    let dxds2 = four_pi2.mul(&x.neg()).mul(&x.add(&Fixed::from_int(4, bits)));
    p.div(&d.mul(&d).mul(&dxds2))
}

fn leading(delta: &SymPoly, p1: &SymPoly, r: &AlgebraicRoot, digits: Option<u32>) -> Result<LaurentLeading> {
    require_simple(r)?;
    if p1.is_zero() {
        return Ok(LaurentLeading { order: None, sign: 0, numeric_c: None });
    }
    // Δ² has a double zero with positive leading coefficient in θ, so c has
    // the sign of the first nonvanishing θ-derivative of P.
    let ts = theta_sign(p1, r)?;
    let order = ts.order as i32 - 2;
    let numeric_c = match (order, digits) {
        (-2, Some(d)) => Some(numeric_c(delta, p1, r, d)),
        _ => None,
    };
    Ok(LaurentLeading { order: Some(order), sign: ts.sign, numeric_c })
}

/// Order, exact sign and (for a double pole) high-precision value of the
/// leading Laurent coefficient of P/Δ² at the simple root `r`.
pub fn laurent_leading(delta: &SymPoly, p1: &SymPoly, r: &AlgebraicRoot) -> Result<LaurentLeading> {
    leading(delta, p1, r, Some(DEFAULT_DIGITS))
}

pub fn laurent_leading_with(delta: &SymPoly, p1: &SymPoly, r: &AlgebraicRoot, digits: u32) -> Result<LaurentLeading> {
    leading(delta, p1, r, Some(digits))
}

/// jj(K) at the upper-semicircle roots of Δ; zero entries are kept.
pub fn jj_divisor(delta: &SymPoly, p1: &SymPoly) -> Result<JumpDivisor> {
    let roots = isolate_roots(delta)?;
    let mut entries = Vec::with_capacity(roots.len());
    for root in roots {
        let jump = leading(delta, p1, &root, None)?.jj();
        entries.push(JumpEntry { root, jump });
    }
    Ok(JumpDivisor::new(entries))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Match,
    Mismatch,
    NotSimple,
    NoPData,
    Vacuous,
    SearchExhausted,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::NotSimple => "NOT_SIMPLE",
            Status::NoPData => "NO_P_DATA",
            Status::Vacuous => "VACUOUS",
            Status::SearchExhausted => "SEARCH_EXHAUSTED",
        }
    }

    /// Statuses that count as a failed check.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Mismatch | Status::SearchExhausted)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct RootRow {
    pub root: AlgebraicRoot,
    pub j: i32,
    pub jj: Option<i32>,
    /// Jump from the skein formula; `None` for non-simple roots or when no
    /// good projection was found.
    pub skein_jump: Option<i32>,
    pub numeric_c: Option<Fixed>,
}

#[derive(Clone, Debug)]
pub struct KnotReport {
    pub name: String,
    pub status: Status,
    pub rows: Vec<RootRow>,
    /// σ₋₁ as the sum of the signature jumps.
    pub sigma_j: i32,
    /// σ₋₁ as the sum of jj, when P is known.
    pub sigma_jj: Option<i32>,
    pub notes: Vec<String>,
}

pub fn check_conjecture(rec: &KnotRecord) -> Result<KnotReport> {
    check_conjecture_with(rec, DEFAULT_DIGITS)
}

/// Compares j and jj root by root, cross-checking j with the skein formula.
pub fn check_conjecture_with(rec: &KnotRecord, digits: u32) -> Result<KnotReport> {
    let delta = rec.alexander();
    let j = jump_divisor_with(rec.seifert(), delta)?;
    let simple = j.entries().iter().all(|e| e.root.multiplicity() == 1);
    let mut notes = Vec::new();
    if !j.satisfies_parity() {
        notes.push("signature jumps violate the parity bound".to_string());
    }

    let mut rows = Vec::with_capacity(j.len());
    let mut exhausted = false;
    let mut skein_disagrees = false;
    for e in j.entries() {
        let mut row = RootRow { root: e.root.clone(), j: e.jump, jj: None, skein_jump: None, numeric_c: None };
        if e.root.multiplicity() == 1 {
            match make_good(&rec.braid, &e.root) {
                Ok(g) => row.skein_jump = Some(skein_jump(&g)?),
                Err(Error::SearchExhausted { .. }) => exhausted = true,
                Err(err) => return Err(err),
            }
            if row.skein_jump.is_some_and(|v| v != e.jump) {
                skein_disagrees = true;
            }
            if let Some(p) = &rec.p1 {
                let l = laurent_leading_with(delta, p, &e.root, digits)?;
                row.jj = Some(l.jj());
                row.numeric_c = l.numeric_c;
            }
        }
        rows.push(row);
    }
    if exhausted {
        notes.push("no good projection within the threading budget".to_string());
    }
    if skein_disagrees {
        notes.push("skein formula disagrees with the signature jump".to_string());
    }

    let sigma_jj = if simple && rec.p1.is_some() { Some(rows.iter().filter_map(|r| r.jj).sum()) } else { None };
    let status = if j.is_empty() {
        Status::Vacuous
    } else if !simple {
        Status::NotSimple
    } else if rec.p1.is_none() {
        Status::NoPData
    } else {
        let odd = rows.iter().any(|r| r.jj.is_some_and(|v| v % 2 != 0));
        if odd {
            notes.push("P has a simple zero at a root: jj is odd".to_string());
        }
        if odd || skein_disagrees || rows.iter().any(|r| r.jj != Some(r.j)) {
            Status::Mismatch
        } else if exhausted {
            Status::SearchExhausted
        } else {
            Status::Match
        }
    };
    Ok(KnotReport { name: rec.name.clone(), status, rows, sigma_j: j.total(), sigma_jj, notes })
}

/// f(t) ↦ f(tⁿ), in the x-basis.
pub fn parallel_pullback(p: &SymPoly, n: usize) -> SymPoly {
    assert!(n >= 1, "parallel_pullback needs n >= 1");
    let c = p.to_laurent();
    if c.is_empty() {
        return SymPoly::zero();
    }
    let d = c.len() / 2;
    let mut out = alloc::vec![BigInt::zero(); 2 * d * n + 1];
    for (i, v) in c.into_iter().enumerate() {
        out[i * n] = v;
    }
    SymPoly::from_laurent(&out).expect("substitution keeps the palindrome")
}
