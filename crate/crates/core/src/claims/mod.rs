//! Machine-checkable statements about the derivation algebras in the catalog.
//!
//! Each claim is instantiated over a parameter domain and checked with the
//! public engine operations only. A mismatch is `refuted` unless the claim
//! carries a suspected-typo marker for that instance, in which case it is a
//! `discrepancy`.

mod checks;
pub mod named;
mod registry;

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::Algebra;
use crate::catalog::{self, BasisOrder};
use crate::derivations::{der_algebra, induced_structure, MatrixLieAlgebra};
use crate::dsl::{Report, ReportInput};
use crate::error::Error;
use crate::exactlin::Scalar;

pub use registry::{realify_derivation, registry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Confirmed,
    Refuted,
    Discrepancy,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Confirmed => "confirmed",
            Status::Refuted => "refuted",
            Status::Discrepancy => "discrepancy",
            Status::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ClaimResult {
    pub fn new(id: &str, params: BTreeMap<String, String>, status: Status, expected: &str, actual: &str) -> Self {
        ClaimResult {
            id: id.to_string(),
            params,
            status,
            expected: expected.to_string(),
            actual: actual.to_string(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }
}

/// One point of a claim's parameter domain.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Instance {
    pub family: Option<&'static str>,
    pub n: Option<usize>,
    pub a: Option<Scalar>,
}

impl Instance {
    pub fn n(n: usize) -> Self {
        Instance {
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn na(n: usize, a: &Scalar) -> Self {
        Instance {
            n: Some(n),
            a: Some(a.clone()),
            ..Default::default()
        }
    }

    pub fn params(&self) -> BTreeMap<String, String> {
        let mut p = BTreeMap::new();
        if let Some(f) = self.family {
            p.insert("family".to_string(), f.to_string());
        }
        if let Some(n) = self.n {
            p.insert("n".to_string(), n.to_string());
        }
        if let Some(a) = &self.a {
            p.insert("a".to_string(), a.to_string());
        }
        p
    }

    fn n_val(&self) -> usize {
        self.n.expect("instance has n")
    }

    fn a_val(&self) -> Scalar {
        self.a.clone().expect("instance has a")
    }
}

/// What a checker found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub holds: bool,
    pub expected: String,
    pub actual: String,
    pub notes: Vec<String>,
}

pub type Checker = fn(&mut Engine, &Instance) -> Result<Outcome, Error>;

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    /// Quoted phrase the claim is taken from.
    pub anchor: &'static str,
    pub domain: &'static str,
    instances: fn(usize, &[Scalar]) -> Vec<Instance>,
    /// Suspected-typo marker and the instances it covers.
    pub typo: Option<(&'static str, TypoScope)>,
    check: Checker,
}

pub type TypoScope = fn(&Instance) -> bool;

impl Claim {
    pub fn instances(&self, nmax: usize, a_set: &[Scalar]) -> Vec<Instance> {
        (self.instances)(nmax, a_set)
    }

    pub fn run(&self, engine: &mut Engine, inst: &Instance) -> Result<ClaimResult, Error> {
        let out = (self.check)(engine, inst)?;
        let flagged = self.typo.filter(|(_, covers)| covers(inst));
        let status = match (out.holds, flagged) {
            (true, _) => Status::Confirmed,
            (false, Some(_)) => Status::Discrepancy,
            (false, None) => Status::Refuted,
        };
        let mut r = ClaimResult::new(self.id, inst.params(), status, &out.expected, &out.actual);
        if let Some((marker, _)) = flagged {
            r.notes.push(format!("suspected typo: {marker}"));
        }
        r.notes.extend(out.notes);
        Ok(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyKey {
    Heisenberg { n: usize, a: Scalar, order: BasisOrder },
    HeisenbergLie { n: usize, order: BasisOrder },
    Kronecker { n: usize, order: BasisOrder },
    Dieudonne { n: usize },
    /// `𝔩₅ᴿ` for `z = a + b i`, basis `e_1, f_1, e_2, f_2, z`.
    Real { a: Scalar, b: Scalar },
}

impl FamilyKey {
    pub fn build(&self) -> Result<Algebra, Error> {
        match self {
            FamilyKey::Heisenberg { n, a, order } => catalog::heisenberg_leibniz(*n, &catalog::jordan(a, *n), *order),
            FamilyKey::HeisenbergLie { n, order } => catalog::heisenberg_lie(*n, *order),
            FamilyKey::Kronecker { n, order } => catalog::kronecker(*n, *order),
            FamilyKey::Dieudonne { n } => catalog::dieudonne(*n),
            FamilyKey::Real { a, b } => {
                catalog::heisenberg_leibniz(2, &catalog::real_block(a, b, 1)?, BasisOrder::Interleaved)
            }
        }
    }
}

/// An algebra with its derivation algebra.
pub struct Computed {
    pub algebra: Algebra,
    pub der: MatrixLieAlgebra,
    /// `Der` as an abstract Lie algebra on the canonical basis of `der`.
    pub lie: Algebra,
}

/// Memoizes derivation algebras across claims.
#[derive(Default)]
pub struct Engine {
    cache: HashMap<FamilyKey, Rc<Computed>>,
    seed: u64,
    current: Option<(String, BTreeMap<String, String>)>,
}

impl Engine {
    pub fn new(seed: u64) -> Self {
        Engine {
            seed,
            ..Default::default()
        }
    }

    pub fn get(&mut self, key: FamilyKey) -> Result<Rc<Computed>, Error> {
        if let Some(c) = self.cache.get(&key) {
            return Ok(c.clone());
        }
        let algebra = key.build()?;
        let der = der_algebra(&algebra);
        let lie = induced_structure(&der)?;
        let c = Rc::new(Computed { algebra, der, lie });
        self.cache.insert(key, c.clone());
        Ok(c)
    }

    /// Seed for the claim instance being run, from its id, parameters and the master seed.
    pub fn instance_seed(&self) -> u64 {
        let mut h = Sha256::new();
        if let Some((id, params)) = &self.current {
            h.update(id.as_bytes());
            for (k, v) in params {
                h.update(format!("|{k}={v}").as_bytes());
            }
        }
        h.update(self.seed.to_le_bytes());
        let digest = h.finalize();
        u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOptions {
    pub nmax: usize,
    pub a_set: Vec<Scalar>,
    pub seed: u64,
    /// Restrict to these claim ids.
    pub only: Option<Vec<String>>,
    pub timings: bool,
}

impl RunOptions {
    pub fn new(nmax: usize, a_set: Vec<Scalar>, seed: u64) -> Self {
        RunOptions {
            nmax,
            a_set,
            seed,
            only: None,
            timings: false,
        }
    }

    pub fn describe(&self) -> String {
        let a: Vec<String> = self.a_set.iter().map(ToString::to_string).collect();
        let mut s = format!("verify-paper nmax={} a={} seed={}", self.nmax, a.join(","), self.seed);
        if let Some(only) = &self.only {
            s.push_str(&format!(" claims={}", only.join(",")));
        }
        s
    }
}

pub fn default_a_set() -> Vec<Scalar> {
    [(2, 1), (1, 2), (-3, 1), (1, 1), (-1, 1), (0, 1)]
        .iter()
        .map(|&(p, q)| Scalar::ratio(p, q))
        .collect()
}

pub fn run_all(nmax: usize, a_set: &[Scalar], seed: u64) -> Result<Report, Error> {
    run(&RunOptions::new(nmax, a_set.to_vec(), seed))
}

pub fn run(opts: &RunOptions) -> Result<Report, Error> {
    if opts.nmax == 0 {
        return Err(Error::InvalidArgument("nmax must be at least 1".into()));
    }
    if let Some(bad) = opts.a_set.iter().find(|a| !a.is_real()) {
        return Err(Error::InvalidArgument(format!("parameter a = {bad} is not rational")));
    }
    let claims = registry();
    if let Some(only) = &opts.only {
        if let Some(unknown) = only.iter().find(|id| !claims.iter().any(|c| c.id == id.as_str())) {
            return Err(Error::InvalidArgument(format!("unknown claim `{unknown}`")));
        }
    }
    let start = Instant::now();
    let mut engine = Engine::new(opts.seed);
    let mut report = Report::new(ReportInput::new(opts.describe(), &opts.describe()));
    for claim in &claims {
        if opts.only.as_ref().is_some_and(|o| !o.iter().any(|id| id == claim.id)) {
            continue;
        }
        let instances = claim.instances(opts.nmax, &opts.a_set);
        if instances.is_empty() {
            let mut r = ClaimResult::new(claim.id, BTreeMap::new(), Status::Skipped, "", "");
            r.notes.push(format!("no instance of `{}` within nmax={} and the given a", claim.domain, opts.nmax));
            report.claims.push(r);
            continue;
        }
        for inst in instances {
            engine.current = Some((claim.id.to_string(), inst.params()));
            let t = Instant::now();
            let mut r = claim.run(&mut engine, &inst)?;
            if opts.timings {
                r.elapsed_ms = Some(t.elapsed().as_millis() as u64);
            }
            report.claims.push(r);
        }
    }
    if opts.timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}
