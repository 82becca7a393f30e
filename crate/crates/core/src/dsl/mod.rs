//! Text format for algebra definitions.
//!
//! ```text
//! algebra h3 field Q
//! basis e f z
//! [e,f] = z
//! [f,e] = -1 z
//! end
//! ```
//!
//! Brackets are listed pairwise; nothing is assumed about `[b,a]` from `[a,b]`.

mod report;

pub use report::{basis_strings, report_json, sha256_hex, Analysis, Report, ReportInput};

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::exactlin::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub lhs: (String, String),
    pub rhs: Vec<(Scalar, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub name: String,
    pub field: Field,
    pub basis: Vec<String>,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    text: String,
    col: usize,
}

fn parse_error(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits a comment-free line into words and the punctuation `[ , ] =`.
fn tokenize(line: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start = 0;
    for (idx, c) in line.chars().enumerate() {
        let col = idx + 1;
        if c.is_whitespace() || matches!(c, '[' | ',' | ']' | '=') {
            if !current.is_empty() {
                out.push(Token {
                    text: std::mem::take(&mut current),
                    col: start,
                });
            }
            if !c.is_whitespace() {
                out.push(Token { text: c.to_string(), col });
            }
        } else {
            if current.is_empty() {
                start = col;
            }
            current.push(c);
        }
    }
    if !current.is_empty() {
        out.push(Token { text: current, col: start });
    }
    out
}

struct Line {
    number: usize,
    tokens: Vec<Token>,
    end_col: usize,
}

impl Line {
    fn expect(&self, pos: usize, what: &str) -> Result<&Token, Error> {
        self.tokens.get(pos).ok_or_else(|| {
            parse_error(self.number, self.end_col, format!("expected {what}, found end of line"))
        })
    }

    fn expect_text(&self, pos: usize, text: &str) -> Result<(), Error> {
        let tok = self.expect(pos, &format!("`{text}`"))?;
        if tok.text == text {
            Ok(())
        } else {
            Err(parse_error(self.number, tok.col, format!("expected `{text}`, found `{}`", tok.text)))
        }
    }

    fn expect_ident(&self, pos: usize) -> Result<&Token, Error> {
        let tok = self.expect(pos, "an identifier")?;
        if is_ident(&tok.text) {
            Ok(tok)
        } else {
            Err(parse_error(self.number, tok.col, format!("expected an identifier, found `{}`", tok.text)))
        }
    }

    fn expect_done(&self, pos: usize) -> Result<(), Error> {
        match self.tokens.get(pos) {
            None => Ok(()),
            Some(tok) => Err(parse_error(self.number, tok.col, format!("unexpected `{}`", tok.text))),
        }
    }
}

pub fn parse(text: &str) -> Result<AlgebraDoc, Error> {
    let mut lines = text.lines().enumerate().filter_map(|(idx, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        (!tokens.is_empty()).then(|| Line {
            number: idx + 1,
            tokens,
            end_col: content.chars().count() + 1,
        })
    });
    let eof_line = text.lines().count().max(1);

    let header = lines
        .next()
        .ok_or_else(|| parse_error(eof_line, 1, "expected `algebra`, found end of input"))?;
    header.expect_text(0, "algebra")?;
    let name = header.expect_ident(1)?.text.clone();
    header.expect_text(2, "field")?;
    let ftok = header.expect(3, "a field tag")?;
    let field: Field = ftok
        .text
        .parse()
        .map_err(|e: Error| parse_error(header.number, ftok.col, e.to_string()))?;
    header.expect_done(4)?;

    let basis_line = lines
        .next()
        .ok_or_else(|| parse_error(eof_line, 1, "expected `basis`, found end of input"))?;
    basis_line.expect_text(0, "basis")?;
    basis_line.expect_ident(1)?;
    let mut basis = Vec::new();
    let mut seen = HashSet::new();
    for pos in 1..basis_line.tokens.len() {
        let tok = basis_line.expect_ident(pos)?;
        if !seen.insert(tok.text.clone()) {
            return Err(parse_error(basis_line.number, tok.col, format!("duplicate basis label `{}`", tok.text)));
        }
        basis.push(tok.text.clone());
    }

    let mut entries: Vec<Entry> = Vec::new();
    let mut keys = HashSet::new();
    let mut ended = false;
    for line in lines.by_ref() {
        if line.tokens[0].text == "end" {
            line.expect_done(1)?;
            ended = true;
            break;
        }
        let label = |pos: usize| -> Result<String, Error> {
            let tok = line.expect_ident(pos)?;
            if seen.contains(&tok.text) {
                Ok(tok.text.clone())
            } else {
                Err(parse_error(line.number, tok.col, format!("undeclared label `{}`", tok.text)))
            }
        };
        line.expect_text(0, "[")?;
        let a = label(1)?;
        line.expect_text(2, ",")?;
        let b = label(3)?;
        line.expect_text(4, "]")?;
        line.expect_text(5, "=")?;
        if !keys.insert((a.clone(), b.clone())) {
            return Err(parse_error(line.number, line.tokens[0].col, format!("duplicate entry [{a},{b}]")));
        }
        let mut rhs = Vec::new();
        let mut pos = 6;
        loop {
            let first = line.expect(pos, "a term")?;
            let coeff_follows = line.tokens.get(pos + 1).is_some_and(|t| is_ident(&t.text));
            let coeff = if coeff_follows {
                let c: Scalar = first
                    .text
                    .parse()
                    .map_err(|e: Error| parse_error(line.number, first.col, e.to_string()))?;
                if !field.admits(&c) {
                    return Err(parse_error(line.number, first.col, format!("scalar `{c}` is not in field {field}")));
                }
                pos += 1;
                c
            } else {
                Scalar::one()
            };
            rhs.push((coeff, label(pos)?));
            pos += 1;
            match line.tokens.get(pos) {
                None => break,
                Some(t) if t.text == "+" => pos += 1,
                Some(t) => return Err(parse_error(line.number, t.col, format!("expected `+` or end of line, found `{}`", t.text))),
            }
        }
        entries.push(Entry { lhs: (a, b), rhs });
    }
    if !ended {
        return Err(parse_error(eof_line, 1, "expected `end`, found end of input"));
    }
    if let Some(extra) = lines.next() {
        return Err(parse_error(extra.number, extra.tokens[0].col, "content after `end`"));
    }
    Ok(AlgebraDoc {
        name,
        field,
        basis,
        entries,
    })
}

/// Canonical text: entries in basis order, like terms merged, zeros dropped.
pub fn serialize(doc: &AlgebraDoc) -> Result<String, Error> {
    let alg = to_algebra(doc)?;
    Ok(serialize_algebra(&doc.name, &alg))
}

pub fn serialize_algebra(name: &str, alg: &Algebra) -> String {
    let labels = alg.labels();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {name} field {}", alg.field());
    let _ = writeln!(out, "basis {}", labels.join(" "));
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let terms = alg.basis_product(i, j);
            if terms.is_empty() {
                continue;
            }
            let rhs: Vec<String> = terms
                .iter()
                .map(|(k, c)| {
                    if c.is_one() {
                        labels[*k].clone()
                    } else {
                        format!("{c} {}", labels[*k])
                    }
                })
                .collect();
            let _ = writeln!(out, "[{},{}] = {}", labels[i], labels[j], rhs.join(" + "));
        }
    }
    out.push_str("end\n");
    out
}

pub fn to_algebra(doc: &AlgebraDoc) -> Result<Algebra, Error> {
    let index = |s: &str| {
        doc.basis
            .iter()
            .position(|b| b == s)
            .ok_or_else(|| Error::InvalidArgument(format!("undeclared label `{s}`")))
    };
    let mut triples = Vec::new();
    for e in &doc.entries {
        let (i, j) = (index(&e.lhs.0)?, index(&e.lhs.1)?);
        for (c, lbl) in &e.rhs {
            triples.push((i, j, index(lbl)?, c.clone()));
        }
    }
    Algebra::from_entries(doc.field, doc.basis.clone(), triples)
}

pub fn from_algebra(name: &str, alg: &Algebra) -> AlgebraDoc {
    let labels = alg.labels();
    let mut entries = Vec::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let terms = alg.basis_product(i, j);
            if !terms.is_empty() {
                entries.push(Entry {
                    lhs: (labels[i].clone(), labels[j].clone()),
                    rhs: terms.iter().map(|(k, c)| (c.clone(), labels[*k].clone())).collect(),
                });
            }
        }
    }
    AlgebraDoc {
        name: name.to_string(),
        field: alg.field(),
        basis: labels.to_vec(),
        entries,
    }
}
