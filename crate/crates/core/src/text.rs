//! Text formats.
//!
//! * Element: decimal residue for prime fields, `[c0,c1,...]` otherwise.
//! * Sequence / polynomial: whitespace-separated elements, low index first.
//! * Sequence file: one sequence per line; `# q=<p>^<m> mod=<c0,...,cm>`
//!   selects the field for the lines that follow, other `#` lines and blank
//!   lines are ignored.
//! * Histogram: CSV lines `r,count`.

use std::fmt::Write as _;

use crate::enumerate::ComplexityHistogram;
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::lfsr::{BmResult, Sequence};
use crate::oss::DecodeResult;
use crate::poly::Polynomial;

fn tokenize(text: &str) -> std::result::Result<Vec<String>, (usize, String)> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut tok = String::new();
        if c == '[' {
            for c in chars.by_ref() {
                if !c.is_whitespace() {
                    tok.push(c);
                }
                if c == ']' {
                    break;
                }
            }
            if !tok.ends_with(']') {
                return Err((tokens.len() + 1, format!("unterminated element `{tok}`")));
            }
        } else {
            while let Some(&c) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                tok.push(c);
                chars.next();
            }
        }
        tokens.push(tok);
    }
    Ok(tokens)
}

/// Parses whitespace-separated elements. Error positions are 1-based token
/// indices.
pub fn parse_elements(text: &str, field: &Field) -> Result<Vec<Fe>> {
    let tokens =
        tokenize(text).map_err(|(position, message)| Error::Parse { position, message })?;
    tokens
        .iter()
        .enumerate()
        .map(|(i, t)| {
            field.parse_element(t).map_err(|message| Error::Parse {
                position: i + 1,
                message,
            })
        })
        .collect()
}

pub fn parse_sequence(text: &str, field: &Field) -> Result<Sequence> {
    Sequence::new(field, parse_elements(text, field)?)
}

pub fn format_elements(field: &Field, elems: &[Fe]) -> String {
    elems
        .iter()
        .map(|&e| field.format_element(e))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_sequence(s: &Sequence) -> String {
    format_elements(s.field(), s.elems())
}

/// Zero polynomial renders as a single zero element.
pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        p.field().format_element(Fe::ZERO)
    } else {
        format_elements(p.field(), p.coeffs())
    }
}

pub fn parse_polynomial(text: &str, field: &Field) -> Result<Polynomial> {
    Polynomial::new(field, parse_elements(text, field)?)
}

/// The `# q=...` header describing `field`.
pub fn format_header(field: &Field) -> String {
    match field.modulus() {
        None => format!("# q={}^1", field.p()),
        Some(m) => {
            let coeffs: Vec<String> = m.iter().map(u64::to_string).collect();
            format!("# q={}^{} mod={}", field.p(), field.m(), coeffs.join(","))
        }
    }
}

/// Parses a `# q=<p>^<m> mod=<coeffs>` line; `None` if the line is not a
/// field header.
pub fn parse_header(line: &str) -> Option<Result<Field>> {
    let body = line.trim().strip_prefix('#')?;
    let mut q = None;
    let mut modulus = None;
    for part in body.split_whitespace() {
        if let Some(v) = part.strip_prefix("q=") {
            q = Some(v);
        } else if let Some(v) = part.strip_prefix("mod=") {
            modulus = Some(v);
        }
    }
    let q = q?;
    Some(parse_field_spec(q, modulus))
}

fn parse_field_spec(q: &str, modulus: Option<&str>) -> Result<Field> {
    let bad = |message: String| Error::Parse {
        position: 0,
        message,
    };
    let (p, m) = match q.split_once('^') {
        Some((p, m)) => (p, m),
        None => (q, "1"),
    };
    let p: u64 = p
        .parse()
        .map_err(|_| bad(format!("bad characteristic `{p}`")))?;
    let m: u32 = m
        .parse()
        .map_err(|_| bad(format!("bad extension degree `{m}`")))?;
    let modulus = match modulus {
        None => None,
        Some(text) => {
            let text = text.trim_start_matches('[').trim_end_matches(']');
            Some(
                text.split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<u64>()
                            .map_err(|_| bad(format!("bad modulus coefficient `{c}`")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            )
        }
    };
    Field::new(p, m, modulus.as_deref())
}

/// Reads a sequence file. `default` is used until a header names a field.
pub fn parse_sequence_file(text: &str, default: Option<&Field>) -> Result<Vec<Sequence>> {
    let mut field = default.cloned();
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            if let Some(f) = parse_header(trimmed) {
                field = Some(f?);
            }
            continue;
        }
        let f = field.as_ref().ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("line {}: no field given", lineno + 1),
        })?;
        let seq = parse_sequence(trimmed, f).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position,
                message: format!("line {}: {message}", lineno + 1),
            },
            other => other,
        })?;
        out.push(seq);
    }
    Ok(out)
}

/// One sequence per line, preceded by a header when the field is an
/// extension field.
pub fn format_sequence_file(seqs: &[Sequence]) -> String {
    let mut out = String::new();
    if let Some(first) = seqs.first() {
        if !first.field().is_prime_field() {
            out.push_str(&format_header(first.field()));
            out.push('\n');
        }
    }
    for s in seqs {
        out.push_str(&format_sequence(s));
        out.push('\n');
    }
    out
}

/// `r,count` lines for `r = 0..=n`.
pub fn format_histogram(h: &ComplexityHistogram) -> String {
    let mut out = String::new();
    for (r, c) in h.counts().iter().enumerate() {
        let _ = writeln!(out, "{r},{c}");
    }
    out
}

pub fn format_bm(r: &BmResult) -> String {
    format!(
        "L: {}\nconnection: {}\nfeedback: {}\n",
        r.linear_complexity(),
        format_polynomial(r.connection()),
        format_polynomial(r.feedback())
    )
}

pub fn format_decode(field: &Field, d: &DecodeResult) -> String {
    format!(
        "message: {}\nerror: {}\ncodeword: {}\n",
        format_elements(field, &d.message),
        format_sequence(&d.error),
        format_sequence(&d.corrected)
    )
}
