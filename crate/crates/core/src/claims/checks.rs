use std::fmt::Display;

use super::Outcome;
use crate::derivations::{is_derivation, span_of};
use crate::dsl::basis_strings;
use crate::error::Error;
use crate::exactlin::{Mat, Scalar, Subspace};
use crate::Algebra;

/// Accumulates labelled expected/actual pairs.
#[derive(Default)]
pub(super) struct Checks {
    items: Vec<(String, String, String)>,
    notes: Vec<String>,
}

impl Checks {
    pub fn eq<T: Display + PartialEq>(&mut self, label: &str, expected: T, actual: T) -> bool {
        let ok = expected == actual;
        self.items.push((label.to_string(), expected.to_string(), actual.to_string()));
        ok
    }

    pub fn holds(&mut self, label: &str, actual: bool) -> bool {
        self.eq(label, true, actual)
    }

    /// Empty `mismatches` means the table matched.
    pub fn table(&mut self, label: &str, mismatches: Vec<String>) {
        let actual = if mismatches.is_empty() {
            "matches".to_string()
        } else {
            format!("differs at {}", mismatches.join(", "))
        };
        self.eq(label, "matches".to_string(), actual);
    }

    /// Subspace equality; on mismatch both canonical bases go into the notes.
    pub fn same(&mut self, label: &str, actual: &Subspace, expected: &Subspace) -> bool {
        let ok = self.holds(label, actual == expected);
        if !ok {
            let show = |s: &Subspace| format!("{:?}", basis_strings(s));
            self.notes.push(format!("{label}: actual basis {}; expected basis {}", show(actual), show(expected)));
        }
        ok
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(self) -> Outcome {
        let holds = self.items.iter().all(|(_, e, a)| e == a);
        let render = |pick: fn(&(String, String, String)) -> &String| {
            self.items
                .iter()
                .map(|it| format!("{}: {}", it.0, pick(it)))
                .collect::<Vec<_>>()
                .join("; ")
        };
        Outcome {
            holds,
            expected: render(|it| &it.1),
            actual: render(|it| &it.2),
            notes: self.notes,
        }
    }
}

/// Every matrix is a derivation of `l`; returns the labels that are not.
pub(super) fn non_derivations(l: &Algebra, named: &[(String, Mat)]) -> Result<Vec<String>, Error> {
    let mut bad = Vec::new();
    for (name, m) in named {
        if !is_derivation(m, l)? {
            bad.push(name.clone());
        }
    }
    Ok(bad)
}

pub(super) fn flat_span(d: usize, mats: &[Mat]) -> Result<Subspace, Error> {
    let field = mats.first().map(Mat::field).unwrap_or(crate::Field::Q);
    span_of(d, field, mats)
}

pub(super) fn neg(m: &Mat) -> Mat {
    m.scale(&Scalar::from_int(-1))
}

/// Compares `[p, q]` with the expected value for every listed pair, and with
/// zero for every unlisted pair when `others_zero` is set.
pub(super) fn bracket_table(
    named: &[(String, Mat)],
    listed: &[(String, String, Mat)],
    others_zero: bool,
) -> Result<Vec<String>, Error> {
    let mut bad = Vec::new();
    let find = |name: &str| named.iter().find(|(n, _)| n == name).map(|(_, m)| m);
    for (p, q, want) in listed {
        let (Some(mp), Some(mq)) = (find(p), find(q)) else {
            return Err(Error::Internal(format!("unnamed generator in [{p},{q}]")));
        };
        if &mp.commutator(mq)? != want {
            bad.push(format!("[{p},{q}]"));
        }
    }
    if others_zero {
        for (i, (p, mp)) in named.iter().enumerate() {
            for (q, mq) in &named[i + 1..] {
                let is_listed = listed
                    .iter()
                    .any(|(a, b, _)| (a == p && b == q) || (a == q && b == p));
                if !is_listed && !mp.commutator(mq)?.is_zero() {
                    bad.push(format!("[{p},{q}]"));
                }
            }
        }
    }
    Ok(bad)
}

pub(super) fn labelled(prefix: &str, mats: &[Mat], first: usize) -> Vec<(String, Mat)> {
    mats.iter()
        .enumerate()
        .map(|(i, m)| (format!("{prefix}{}", i + first), m.clone()))
        .collect()
}
