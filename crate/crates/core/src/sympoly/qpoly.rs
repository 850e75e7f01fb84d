//! Dense univariate polynomials over the rationals: gcd, exact division,
//! Sturm chains. Only used behind `SymPoly` and `AlgebraicRoot`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SymPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly(pub Vec<BigRational>);

impl QPoly {
    pub fn from_sym(p: &SymPoly) -> Self {
        QPoly(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> Self {
        QPoly(self.0.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(BigInt::from(k))).collect())
            .trimmed()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i32 {
        sign(&self.eval(x))
    }

    pub fn neg(&self) -> Self {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        let lead = d.lead().clone();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (QPoly(q).trimmed(), QPoly(r).trimmed())
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        QPoly(self.0.iter().map(|c| c / &l).collect())
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient.
    pub fn to_primitive(&self) -> SymPoly {
        if self.is_zero() {
            return SymPoly::zero();
        }
        let lcm = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.0.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let s = if ints.last().unwrap().is_negative() { -g } else { g };
        SymPoly::new(ints.into_iter().map(|c| c / &s).collect())
    }

    /// Sturm chain p, p', −rem(p_{k−1}, p_k), … (with positive rational
    /// rescaling, which leaves sign variations unchanged).
    pub fn sturm_chain(&self) -> Vec<QPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            let scale = r.lead().abs();
            chain.push(QPoly(r.0.iter().map(|c| c / &scale).collect()));
        }
        chain
    }
}

pub(crate) fn sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn variations(chain: &[QPoly], x: &BigRational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct roots in the open interval (a, b), a < b, for a
/// squarefree polynomial with Sturm chain `chain`.
pub(crate) fn count_open(chain: &[QPoly], a: &BigRational, b: &BigRational) -> usize {
    let half_open = variations(chain, a) - variations(chain, b);
    if chain[0].sign_at(b) == 0 {
        half_open - 1
    } else {
        half_open
    }
}

/// Squarefree factorization p = c · ∏ f_i^i via the gcd chain
/// g₀ = p, g_{k+1} = gcd(g_k, g_k′). Returns (f_i, i) for non-constant f_i.
pub(crate) fn squarefree_factors(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut chain = vec![p.monic()];
    while chain.last().unwrap().degree().unwrap_or(0) > 0 {
        let g = chain.last().unwrap();
        let next = g.gcd(&g.derivative());
        chain.push(next);
    }
    // h_i = g_{i−1}/g_i has every root of multiplicity ≥ i exactly once.
    let h: Vec<QPoly> = chain.windows(2).map(|w| w[0].div_exact(&w[1])).collect();
    let mut out = Vec::new();
    for i in 0..h.len() {
        let f = if i + 1 < h.len() { h[i].div_exact(&h[i + 1]) } else { h[i].clone() };
        if f.degree().unwrap_or(0) > 0 {
            out.push((f, i + 1));
        }
    }
    out
}
