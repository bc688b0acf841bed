//! Serialized views of library results. Unbounded integers are rendered as
//! canonical decimal strings so JSON consumers never overflow.

use std::io::{self, Write};

use num_bigint::BigUint;
use serde::Serialize;

use crate::construction::{CandidateRecord, Family, ParityVerdict};
use crate::continuant::{ContinuantTriple, SymmetricWord};
use crate::corollary::{ErrataRow, ParityReport};
use crate::surd::CfExpansion;

fn dec(v: &BigUint) -> String {
    v.to_str_radix(10)
}

fn dec_all(vs: &[BigUint]) -> Vec<String> {
    vs.iter().map(dec).collect()
}

/// Inverse of the decimal rendering used in every output record.
pub fn parse_decimal(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return None;
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
}

pub fn render_decimal(v: &BigUint) -> String {
    dec(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionOut {
    #[serde(rename = "N")]
    pub n: String,
    pub a0: String,
    pub period: Vec<String>,
    pub k: usize,
}

impl ExpansionOut {
    pub fn new(n: &BigUint, e: &CfExpansion) -> Self {
        ExpansionOut {
            n: dec(n),
            a0: dec(&e.a0),
            period: dec_all(&e.period),
            k: e.k(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct CheckOut {
    pub word: Vec<String>,
    pub k: usize,
    pub C: String,
    pub B: String,
    pub A: String,
    pub B_even: bool,
    pub A_even: bool,
    pub solvable: bool,
}

impl CheckOut {
    pub fn new(word: &SymmetricWord, t: &ContinuantTriple, v: &ParityVerdict) -> Self {
        CheckOut {
            word: dec_all(word.parts()),
            k: t.k,
            C: dec(&t.c),
            B: dec(&t.b),
            A: dec(&t.a),
            B_even: v.b_even,
            A_even: v.a_even,
            solvable: v.solvable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyOut {
    pub word: Vec<String>,
    pub k: usize,
    pub r: String,
    pub m: String,
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
}

impl FamilyOut {
    pub fn new(f: &Family) -> Self {
        FamilyOut {
            word: dec_all(f.word.parts()),
            k: f.word.period(),
            r: dec(&f.r),
            m: dec(&f.m),
            alpha: dec(&f.alpha),
            beta: dec(&f.beta),
            gamma: dec(&f.gamma),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordOut {
    pub b: u64,
    pub a0: String,
    #[serde(rename = "N")]
    pub n: String,
    pub expected_period: usize,
    pub actual_period: usize,
    pub word_match: bool,
    pub squarefree: &'static str,
}

impl From<&CandidateRecord> for RecordOut {
    fn from(r: &CandidateRecord) -> Self {
        RecordOut {
            b: r.b,
            a0: dec(&r.a0),
            n: dec(&r.n),
            expected_period: r.expected_period,
            actual_period: r.actual_period,
            word_match: r.word_match,
            squarefree: r.squarefree.as_str(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportOut {
    pub k: usize,
    pub word: Vec<String>,
    #[serde(rename = "Q_k_minus_1")]
    pub q_k_minus_1: String,
    pub is_odd: bool,
    pub fib_identity_value: String,
    pub identity_holds: bool,
}

impl From<&ParityReport> for ReportOut {
    fn from(r: &ParityReport) -> Self {
        ReportOut {
            k: r.k,
            word: dec_all(r.word.parts()),
            q_k_minus_1: dec(&r.q_k_minus_1),
            is_odd: r.is_odd,
            fib_identity_value: dec(&r.fib_identity_value),
            identity_holds: r.identity_holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrataOut {
    pub k: usize,
    pub corrected_word: String,
    pub original_word: String,
    #[serde(rename = "corrected_Q")]
    pub corrected_q: String,
    #[serde(rename = "original_Q")]
    pub original_q: String,
    pub corrected_odd: bool,
    pub original_odd: bool,
    pub erroneous_formula_value: Option<String>,
}

impl From<&ErrataRow> for ErrataOut {
    fn from(r: &ErrataRow) -> Self {
        ErrataOut {
            k: r.k,
            corrected_word: r.corrected_word.to_string(),
            original_word: r.original_word.to_string(),
            corrected_q: dec(&r.corrected_q),
            original_q: dec(&r.original_q),
            corrected_odd: r.corrected_odd,
            original_odd: r.original_odd,
            erroneous_formula_value: r.erroneous_formula_value.as_ref().map(dec),
        }
    }
}

/// One JSON object per line.
pub fn write_json_line<W: Write, T: Serialize>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

pub fn write_errata_csv<W: Write>(out: W, rows: &[ErrataRow]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(ErrataOut::from(row))?;
    }
    w.flush()
}

/// Left-aligned columns separated by two spaces.
pub fn write_table<W: Write>(out: &mut W, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut W, cells: Vec<&str>| -> io::Result<()> {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if i + 1 < cells.len() {
                s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
            }
        }
        writeln!(out, "{s}")
    };
    line(out, header.to_vec())?;
    for row in rows {
        line(out, row.iter().map(String::as_str).collect())?;
    }
    Ok(())
}
