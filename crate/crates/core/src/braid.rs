//! Braid words, the crossing edits used by the skein machinery, and the
//! Seifert matrix of a braid closure.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A braid word: letter `i` is σ_{|i|} with the sign of `i`. The strand
/// count is max |letter| + 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyBraid);
        }
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(BraidWord { letters })
    }

    /// Parses `[-1,3,3,3,2,1,1,-3,2]`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let lead = s.len() - s.trim_start().len();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse { pos: lead, msg: "braid must be written as [a,b,...]".into() })?;
        let mut letters = Vec::new();
        let mut pos = lead + 1;
        if !inner.trim().is_empty() {
            for item in inner.split(',') {
                let v: i32 = item.trim().parse().map_err(|_| Error::Parse {
                    pos: pos + (item.len() - item.trim_start().len()),
                    msg: alloc::format!("expected a nonzero integer, found {:?}", item.trim()),
                })?;
                letters.push(v);
                pos += item.len() + 1;
            }
        }
        Self::new(letters)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn strands(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1
    }

    /// Number of components of the closure (cycles of the underlying
    /// permutation).
    pub fn components(&self) -> usize {
        let n = self.strands();
        let mut perm: Vec<usize> = (0..n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
        cycles
    }

    pub fn ensure_knot(&self) -> Result<()> {
        match self.components() {
            1 => Ok(()),
            k => Err(Error::NotAKnot(k)),
        }
    }

    /// Negates the letter at `pos`: the K⁺ ↔ K⁻ skein partner at that
    /// crossing.
    pub fn flip_crossing(&self, pos: usize) -> Result<Self> {
        if pos >= self.len() {
            return Err(Error::IndexOutOfRange { index: pos, len: self.len() });
        }
        let mut letters = self.letters.clone();
        letters[pos] = -letters[pos];
        Ok(BraidWord { letters })
    }

    /// Mirror image: every crossing reversed.
    pub fn mirror(&self) -> Self {
        BraidWord { letters: self.letters.iter().map(|l| -l).collect() }
    }

    /// Inserts σ_g σ_g⁻¹ before position `pos` (Reidemeister II).
    pub fn insert_trivial_pair(&self, pos: usize, generator: i32) -> Result<Self> {
        if pos > self.len() {
            return Err(Error::IndexOutOfRange { index: pos, len: self.len() });
        }
        let strands = self.strands();
        if generator < 1 || generator as usize > strands - 1 {
            return Err(Error::GeneratorOutOfRange { generator, strands });
        }
        let mut letters = self.letters.clone();
        letters.splice(pos..pos, [generator, -generator]);
        Ok(BraidWord { letters })
    }

    /// Concatenation; the closure of the product of two knot braids on
    /// disjoint strand ranges is the connected sum.
    pub fn concat(&self, other: &BraidWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    /// Shifts every generator index up by `k` (moves the braid to higher
    /// strands).
    pub fn shifted(&self, k: i32) -> Self {
        BraidWord { letters: self.letters.iter().map(|&l| l.signum() * (l.abs() + k)).collect() }
    }

    /// Seifert matrix of the closure from the canonical surface: one disk
    /// per strand, one half-twisted band per letter. The homology basis has
    /// one loop per pair of consecutive letters on the same generator.
    pub fn seifert_matrix(&self) -> Result<IntMatrix> {
        self.ensure_knot()?;
        let loops = self.loops();
        let m = loops.len();
        let mut v = IntMatrix::zeros(m);
        let sign = |pos: usize| self.letters[pos].signum();
        for (i, a) in loops.iter().enumerate() {
            v.set(
                i,
                i,
                match (sign(a.start), sign(a.end)) {
                    (1, 1) => -1,
                    (-1, -1) => 1,
                    _ => 0,
                },
            );
            for (j, b) in loops.iter().enumerate() {
                if b.generator == a.generator && b.start == a.end {
                    // consecutive loops sharing the band at a.end
                    if sign(a.end) > 0 {
                        v.set(i, j, 1);
                    } else {
                        v.set(j, i, -1);
                    }
                } else if b.generator == a.generator + 1 {
                    if a.start < b.start && b.start < a.end && a.end < b.end {
                        v.set(i, j, -1);
                    } else if b.start < a.start && a.start < b.end && b.end < a.end {
                        v.set(i, j, 1);
                    }
                }
            }
        }
        Ok(v)
    }

    fn loops(&self) -> Vec<Loop> {
        let mut out = Vec::new();
        for g in 1..self.strands() {
            let pos: Vec<usize> = (0..self.len()).filter(|&p| self.letters[p].unsigned_abs() as usize == g).collect();
            out.extend(pos.windows(2).map(|w| Loop { generator: g, start: w[0], end: w[1] }));
        }
        out
    }
}

struct Loop {
    generator: usize,
    start: usize,
    end: usize,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

impl core::str::FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Dense square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(IntMatrix { n, data: rows.concat() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn scaled(&self, k: i64) -> Self {
        IntMatrix { n: self.n, data: self.data.iter().map(|v| v * k).collect() }
    }

    /// Seifert matrix of the mirror image: V ↦ −Vᵀ.
    pub fn mirror(&self) -> Self {
        self.transpose().scaled(-1)
    }

    /// Block diagonal V ⊕ W: a Seifert matrix of the connected sum.
    pub fn direct_sum(&self, other: &IntMatrix) -> Self {
        let n = self.n + other.n;
        let mut m = Self::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m.set(self.n + i, self.n + j, other.get(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in self.rows() {
            s.push('[');
            for (j, v) in r.iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                s.push_str(&alloc::format!("{v}"));
            }
            s.push_str("]\n");
        }
        s
    }
}
