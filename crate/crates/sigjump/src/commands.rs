//! The subcommands as plain functions returning their printout, so they can
//! be tested without spawning the binary.

use std::fmt::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use sigjump_core::invariants::{jump_divisor_with, signature_samples};
use sigjump_core::qjump::{check_conjecture_with, jj_divisor, laurent_leading_with, KnotReport};
use sigjump_core::skein::{make_good, skein_jump};
use sigjump_core::sympoly::theta_sign;
use sigjump_core::torus::{torus_pairs, verify_torus, TorusReport};
use sigjump_core::{alexander, signature_at, BraidWord, SymPoly};

use crate::catalog::load_catalog;
use crate::report::{self, Format};

/// A printout plus whether the run counts as a pass for the exit code.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, pass: true }
    }
}

pub fn parse_braid(s: &str) -> Result<BraidWord> {
    BraidWord::parse(s).with_context(|| format!("braid {s:?}"))
}

pub fn parse_poly(s: &str, what: &str) -> Result<SymPoly> {
    SymPoly::parse(s).with_context(|| format!("{what} {s:?}"))
}

/// A turn given as a decimal or as a fraction `m/n`.
pub fn parse_turn(s: &str) -> Result<f64> {
    let t = s.trim();
    let v = match t.split_once('/') {
        Some((n, d)) => {
            let int = |v: &str| v.trim().parse::<BigInt>().map_err(|e| anyhow::anyhow!("turn {s:?}: {e}"));
            let (n, d) = (int(n)?, int(d)?);
            if d == BigInt::from(0) {
                bail!("turn {s:?}: zero denominator");
            }
            BigRational::new(n, d).to_f64().unwrap_or(f64::NAN)
        }
        None => t.parse().with_context(|| format!("turn {s:?}"))?,
    };
    if !v.is_finite() {
        bail!("turn {s:?} is not finite");
    }
    Ok(v)
}

pub fn cmd_alex(braid: &BraidWord) -> Result<Output> {
    let d = alexander(&braid.seifert_matrix()?)?;
    Ok(Output::ok(format!("{d}\n")))
}

pub fn cmd_sig(braid: &BraidWord, s: f64) -> Result<Output> {
    let v = signature_at(&braid.seifert_matrix()?, s)?;
    Ok(Output::ok(format!("{v}\n")))
}

pub fn cmd_jump(braid: &BraidWord) -> Result<Output> {
    let v = braid.seifert_matrix()?;
    let j = jump_divisor_with(&v, &alexander(&v)?)?;
    let mut out = String::new();
    for e in j.entries() {
        writeln!(out, "{}\t{}", report::turn_pretty(&e.root), e.jump)?;
    }
    Ok(Output::ok(out))
}

pub fn cmd_jjump(delta: &SymPoly, p: &SymPoly, digits: u32) -> Result<Output> {
    let jj = jj_divisor(delta, p)?;
    let mut out = String::new();
    for e in jj.entries() {
        let c = laurent_leading_with(delta, p, &e.root, digits)?.numeric_c;
        let c = c.map_or_else(|| "-".to_string(), |c| c.to_sig_string(report::OUTPUT_DIGITS));
        writeln!(out, "{}\t{}\t{}", report::turn_pretty(&e.root), e.jump, c)?;
    }
    Ok(Output::ok(out))
}

pub fn check_reports(records: &[sigjump_core::qjump::KnotRecord], digits: u32) -> Result<Vec<KnotReport>> {
    records.par_iter().map(|r| check_conjecture_with(r, digits).with_context(|| format!("record {}", r.name))).collect()
}

pub fn cmd_check(path: &Path, digits: u32, format: Format) -> Result<Output> {
    let records = load_catalog(path)?;
    let reports = check_reports(&records, digits)?;
    let pass = report::all_pass(reports.iter().map(|r| &r.status));
    let text = match format {
        Format::Tsv => report::check_tsv(&reports),
        Format::Json => report::render_json(&report::check_json(&reports)),
    };
    Ok(Output { text, pass })
}

pub fn torus_reports(max_ab: u32) -> Result<Vec<TorusReport>> {
    Ok(torus_pairs(max_ab).into_par_iter().map(verify_torus).collect::<sigjump_core::Result<_>>()?)
}

pub fn cmd_torus(max_ab: u32, format: Format) -> Result<Output> {
    let reports = torus_reports(max_ab)?;
    let pass = report::all_pass(reports.iter().map(|r| &r.status));
    let text = match format {
        Format::Tsv => report::torus_tsv(&reports),
        Format::Json => report::render_json(&report::torus_json(&reports)),
    };
    Ok(Output { text, pass })
}

pub fn cmd_skein(braid: &BraidWord, root_index: usize) -> Result<Output> {
    let v = braid.seifert_matrix()?;
    let delta = alexander(&v)?;
    let j = jump_divisor_with(&v, &delta)?;
    let Some(e) = j.entries().get(root_index) else {
        bail!("root index {root_index} out of range: {} root(s) in (0, 1/2)", j.len());
    };
    let mut out = String::new();
    writeln!(out, "root\t{}", report::turn_pretty(&e.root))?;
    let g = match make_good(braid, &e.root) {
        Ok(g) => g,
        Err(err @ sigjump_core::Error::SearchExhausted { .. }) => {
            writeln!(out, "status\tSEARCH_EXHAUSTED\t{err}")?;
            return Ok(Output { text: out, pass: false });
        }
        Err(err) => return Err(err.into()),
    };
    let (plus, minus) = g.pair();
    let dp = alexander(&plus.seifert_matrix()?)?;
    let dm = alexander(&minus.seifert_matrix()?)?;
    let sp = theta_sign(&dp, &e.root)?;
    let sm = theta_sign(&dm, &e.root)?;
    let jump = skein_jump(&g)?;
    writeln!(out, "projection\t{}", g.braid)?;
    writeln!(out, "crossing\t{}", g.pos)?;
    writeln!(out, "epsilon\t{}", g.epsilon)?;
    writeln!(out, "threading_depth\t{}", g.depth)?;
    writeln!(out, "theta_sign(K+)\t{}\t{}", sp.sign, dp)?;
    writeln!(out, "theta_sign(K-)\t{}\t{}", sm.sign, dm)?;
    writeln!(out, "skein_jump\t{jump}")?;
    writeln!(out, "signature_jump\t{}", e.jump)?;
    Ok(Output { text: out, pass: jump == e.jump })
}

pub fn cmd_samples(braid: &BraidWord, n: usize) -> Result<Output> {
    let mut out = String::from("turn\tsignature\n");
    for (s, v) in signature_samples(&braid.seifert_matrix()?, n)? {
        writeln!(out, "{s}\t{v}")?;
    }
    Ok(Output::ok(out))
}
