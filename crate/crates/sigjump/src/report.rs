//! TSV and JSON renderings of conjecture and torus reports. Output is a
//! pure function of the input: fixed ordering, fixed digit counts.

use std::fmt::Write;

use serde_json::{json, Value};
use sigjump_core::qjump::{KnotReport, Status};
use sigjump_core::sympoly::{sign_at, AlgebraicRoot};
use sigjump_core::torus::TorusReport;
use sigjump_core::SymPoly;

/// Significant digits for turns and coefficients in reports.
pub const OUTPUT_DIGITS: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// A root's turn to [`OUTPUT_DIGITS`] significant digits.
pub fn turn_decimal(r: &AlgebraicRoot) -> String {
    r.turn_fixed(OUTPUT_DIGITS + 6).to_sig_string(OUTPUT_DIGITS)
}

/// The turn as an exact fraction when it is rational (x ∈ {−1, −2, −3}
/// are the only rational cosines in the open range), else as a decimal.
pub fn turn_pretty(r: &AlgebraicRoot) -> String {
    for (c, s) in [(1, "1/6"), (2, "1/4"), (3, "1/3")] {
        if sign_at(&SymPoly::from_i64s(&[c, 1]), r) == 0 {
            return s.to_string();
        }
    }
    turn_decimal(r)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// Batch verdict: failures are MISMATCH and SEARCH_EXHAUSTED.
pub fn all_pass<'a>(statuses: impl IntoIterator<Item = &'a Status>) -> bool {
    statuses.into_iter().all(|s| !s.is_failure())
}

pub fn check_tsv(reports: &[KnotReport]) -> String {
    let mut out = String::from("knot\tstatus\troot_turn\tmultiplicity\tj\tjj\tskein_jump\tnumeric_c\n");
    for r in reports {
        if r.rows.is_empty() {
            writeln!(out, "{}\t{}\t-\t-\t-\t-\t-\t-", r.name, r.status).unwrap();
        }
        for row in &r.rows {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.name,
                r.status,
                turn_decimal(&row.root),
                row.root.multiplicity(),
                row.j,
                opt(row.jj),
                opt(row.skein_jump),
                opt(row.numeric_c.as_ref().map(|c| c.to_sig_string(OUTPUT_DIGITS))),
            )
            .unwrap();
        }
    }
    out
}

pub fn check_json(reports: &[KnotReport]) -> Value {
    let knots: Vec<Value> = reports
        .iter()
        .map(|r| {
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "turn": turn_decimal(&row.root),
                        "multiplicity": row.root.multiplicity(),
                        "j": row.j,
                        "jj": row.jj,
                        "skein_jump": row.skein_jump,
                        "numeric_c": row.numeric_c.as_ref().map(|c| c.to_sig_string(OUTPUT_DIGITS)),
                    })
                })
                .collect();
            json!({
                "name": r.name,
                "status": r.status.as_str(),
                "sigma_j": r.sigma_j,
                "sigma_jj": r.sigma_jj,
                "notes": r.notes,
                "rows": rows,
            })
        })
        .collect();
    json!({ "verdict": verdict(all_pass(reports.iter().map(|r| &r.status))), "knots": knots })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn torus_tsv(reports: &[TorusReport]) -> String {
    let mut out = String::from("a\tb\troot\tj\tjj\tstatus\n");
    for r in reports {
        for row in &r.rows {
            let status = if row.agrees() { Status::Match } else { Status::Mismatch };
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.knot.a(),
                r.knot.b(),
                row.turn,
                row.j_seifert,
                row.jj_exact,
                status
            )
            .unwrap();
        }
    }
    out
}

pub fn torus_json(reports: &[TorusReport]) -> Value {
    let knots: Vec<Value> = reports
        .iter()
        .map(|r| {
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "turn": row.turn.to_string(),
                        "j_lattice": row.j_kearton,
                        "j_seifert": row.j_seifert,
                        "jj_exact": row.jj_exact,
                        "jj_sine": row.jj_sine,
                        "jj_fit": row.jj_fit,
                        "c_closed": format!("{:.12e}", row.c_closed),
                        "c_exact": format!("{:.12e}", row.c_exact),
                        "c_fit": format!("{:.12e}", row.c_fit),
                    })
                })
                .collect();
            json!({
                "a": r.knot.a(),
                "b": r.knot.b(),
                "status": r.status.as_str(),
                "sigma": r.sigma,
                "sigma_jj": r.sigma_jj,
                "notes": r.notes,
                "rows": rows,
            })
        })
        .collect();
    json!({ "verdict": verdict(all_pass(reports.iter().map(|r| &r.status))), "knots": knots })
}

pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report values serialize");
    s.push('\n');
    s
}
