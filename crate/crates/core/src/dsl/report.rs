//! JSON report schema: `{version, input, analyses[], claims[]}`.
//!
//! Keys are emitted sorted and every scalar is an exact string.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::claims::{ClaimResult, Status};
use crate::error::Error;
use crate::exactlin::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportInput {
    pub description: String,
    pub sha256: String,
}

impl ReportInput {
    pub fn new(description: impl Into<String>, content: &str) -> Self {
        ReportInput {
            description: description.into(),
            sha256: sha256_hex(content),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub subject: String,
    #[serde(default)]
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub series: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub flags: BTreeMap<String, bool>,
    #[serde(default)]
    pub bases: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl Analysis {
    pub fn new(subject: impl Into<String>) -> Self {
        Analysis {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn dim(&mut self, key: &str, value: usize) -> &mut Self {
        self.dims.insert(key.to_string(), value);
        self
    }

    pub fn flag(&mut self, key: &str, value: bool) -> &mut Self {
        self.flags.insert(key.to_string(), value);
        self
    }

    pub fn basis(&mut self, key: &str, s: &Subspace) -> &mut Self {
        self.bases.insert(key.to_string(), basis_strings(s));
        self
    }
}

pub fn basis_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis()
        .iter()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub input: ReportInput,
    #[serde(default)]
    pub analyses: Vec<Analysis>,
    #[serde(default)]
    pub claims: Vec<ClaimResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(input: ReportInput) -> Self {
        Report {
            version: crate::VERSION.to_string(),
            input,
            analyses: Vec::new(),
            claims: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }

    /// Refuted and discrepant results must say what was expected and found.
    pub fn validate(&self) -> Result<(), Error> {
        for c in &self.claims {
            if matches!(c.status, Status::Refuted | Status::Discrepancy)
                && (c.expected.is_empty() || c.actual.is_empty())
            {
                return Err(Error::Internal(format!("claim {} lacks expected/actual", c.id)));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Report, Error> {
        let r: Report = serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        r.validate()?;
        Ok(r)
    }
}

pub fn report_json(report: &Report) -> String {
    // Round trip through Value so object keys come out sorted.
    let value = serde_json::to_value(report).expect("report is serializable");
    let mut text = serde_json::to_string_pretty(&value).expect("value is serializable");
    text.push('\n');
    text
}

pub fn sha256_hex(content: &str) -> String {
    hex::encode(Sha256::digest(content.as_bytes()))
}
