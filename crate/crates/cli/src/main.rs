//! `leibder`: check, derive, analyze, catalog and verify-paper.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use leibder::catalog::{self, BasisOrder};
use leibder::claims::{self, RunOptions, Status};
use leibder::derivations::{aider_genus1, der_algebra, induced_structure, inner_derivations, MatrixLieAlgebra};
use leibder::dsl::{self, report_json, Analysis, Report, ReportInput};
use leibder::liestruct::{self, LeviStatus};
use leibder::{Algebra, Error, Mat, Scalar, Subspace};

#[derive(Parser)]
#[command(name = "leibder", version, about = "Derivation algebras of nilpotent Leibniz algebras, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a DSL file and report its Leibniz identities and genus.
    Check { file: String },
    /// Dimensions and canonical bases of Der, Inn and AIDer.
    Derive {
        #[command(flatten)]
        source: Source,
        /// Also print the bracket table induced on Der.
        #[arg(long)]
        brackets: bool,
        #[arg(long)]
        json: bool,
    },
    /// Series, centers, Killing rank, radical, nilradical and Levi check.
    Analyze {
        #[command(flatten)]
        source: Source,
        /// Analyze Der(L) instead of L.
        #[arg(long)]
        der: bool,
        /// Claimed Levi complement, `v1;v2;…`, each a comma-separated coordinate vector.
        #[arg(long, allow_hyphen_values = true)]
        levi: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print a catalog algebra as a DSL document.
    Catalog {
        family: FamilyName,
        #[command(flatten)]
        params: FamilyParams,
    },
    /// Check the registered claims and report each instance.
    #[command(name = "verify-paper")]
    VerifyPaper {
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Comma-separated rational values of a.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to these claim ids.
        #[arg(long = "claim")]
        claims: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Treat discrepancies as failures.
        #[arg(long)]
        strict: bool,
        /// Record elapsed times (makes the output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    HeisenbergLie,
    Heisenberg,
    Kronecker,
    Dieudonne,
    RealifyHeisenberg,
}

#[derive(Args)]
struct FamilyParams {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, default_value = "grouped")]
    order: String,
}

#[derive(Args)]
struct Source {
    /// DSL file.
    #[arg(conflicts_with = "family", required_unless_present = "family")]
    file: Option<String>,
    #[arg(long)]
    family: Option<FamilyName>,
    #[command(flatten)]
    params: FamilyParams,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::ClosureNotVerified => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

fn scalar(s: &str) -> Res<Scalar> {
    s.trim()
        .parse::<Scalar>()
        .map_err(|_| Failure::Usage(format!("malformed scalar `{s}`")))
}

fn required<T>(v: Option<T>, flag: &str) -> Res<T> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this family")))
}

fn family_slug(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '-' => 'm'.to_string(),
            '/' => "_".to_string(),
            c => c.to_string(),
        })
        .collect()
}

/// Builds a catalog algebra; returns a DSL-friendly name with it.
fn build_family(family: FamilyName, p: &FamilyParams) -> Res<(String, Algebra)> {
    let order: BasisOrder = p.order.parse()?;
    let n = required(p.n, "n")?;
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let a = p.a.as_deref().map(scalar).transpose()?;
    let b = p.b.as_deref().map(scalar).transpose()?;
    let no_extra = |name: &str, allow_a: bool, allow_b: bool| -> Res<()> {
        if (a.is_some() && !allow_a) || (b.is_some() && !allow_b) {
            return Err(Failure::Usage(format!("{name} does not take this parameter")));
        }
        Ok(())
    };
    let (name, alg) = match family {
        FamilyName::HeisenbergLie => {
            no_extra("heisenberg-lie", false, false)?;
            (format!("heisenberg_lie_{n}"), catalog::heisenberg_lie(n, order)?)
        }
        FamilyName::Heisenberg => {
            no_extra("heisenberg", true, false)?;
            let a = required(a, "a")?;
            (
                format!("heisenberg_{n}_{}", family_slug(&a.to_string())),
                catalog::heisenberg_leibniz(n, &catalog::jordan(&a, n), order)?,
            )
        }
        FamilyName::Kronecker => {
            no_extra("kronecker", false, false)?;
            (format!("kronecker_{n}"), catalog::kronecker(n, order)?)
        }
        FamilyName::Dieudonne => {
            no_extra("dieudonne", false, false)?;
            if order != BasisOrder::Grouped {
                return Err(Failure::Usage("dieudonne has a single basis order".into()));
            }
            (format!("dieudonne_{n}"), catalog::dieudonne(n)?)
        }
        FamilyName::RealifyHeisenberg => {
            let a = required(a, "a")?;
            let b = required(b, "b")?;
            (
                format!("realify_heisenberg_{n}_{}_{}", family_slug(&a.to_string()), family_slug(&b.to_string())),
                catalog::realify_heisenberg(n, &a, &b, order)?,
            )
        }
    };
    Ok((name, alg))
}

/// The algebra, a description, and the text it was read from (for the report hash).
fn load(src: &Source) -> Res<(String, Algebra, String)> {
    match (&src.file, src.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            let doc = dsl::parse(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            let alg = dsl::to_algebra(&doc)?;
            Ok((doc.name, alg, text))
        }
        (None, Some(f)) => {
            let (name, alg) = build_family(f, &src.params)?;
            let text = dsl::serialize_algebra(&name, &alg);
            Ok((name, alg, text))
        }
        _ => Err(Failure::Usage("give either a file or --family".into())),
    }
}

fn render_matrix(m: &Mat) -> String {
    let mut terms = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = &m[(r, c)];
            if !v.is_zero() {
                terms.push(if v.is_one() {
                    format!("e{},{}", r + 1, c + 1)
                } else {
                    format!("{v}·e{},{}", r + 1, c + 1)
                });
            }
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn print_basis(out: &mut String, title: &str, m: &MatrixLieAlgebra) {
    let _ = writeln!(out, "{title} basis:");
    for (k, mat) in m.basis().iter().enumerate() {
        let _ = writeln!(out, "  d{} = {}", k + 1, render_matrix(mat));
    }
}

fn cmd_check(file: &str) -> Res<String> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
    let doc = dsl::parse(&text).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
    let alg = dsl::to_algebra(&doc)?;
    let kind = alg.classify();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} over {} of dim {}", doc.name, alg.field(), alg.dim());
    let _ = writeln!(out, "left Leibniz: {}", kind.left_leibniz);
    let _ = writeln!(out, "right Leibniz: {}", kind.right_leibniz);
    let _ = writeln!(out, "symmetric Leibniz: {}", kind.symmetric);
    let _ = writeln!(out, "Lie: {}", kind.lie);
    let _ = writeln!(out, "genus = {}", alg.genus());
    if !kind.left_leibniz {
        return Err(Failure::Usage(format!("{out}not a left Leibniz algebra")));
    }
    Ok(out)
}

fn cmd_derive(src: &Source, brackets: bool, json: bool) -> Res<String> {
    let (name, alg, text) = load(src)?;
    let der = der_algebra(&alg);
    let inn = inner_derivations(&alg)?;
    let aider = if alg.genus() == 1 { Some(aider_genus1(&alg)?) } else { None };
    if json {
        let mut a = Analysis::new(name.clone());
        a.dim("der", der.dim()).dim("inn", inn.dim()).basis("der", der.span()).basis("inn", inn.span());
        match &aider {
            Some(ad) => {
                a.dim("aider", ad.dim()).basis("aider", ad.span());
            }
            None => a.notes.push(format!("AIDer not computed: genus {}", alg.genus())),
        }
        let mut report = Report::new(ReportInput::new(format!("derive {name}"), &text));
        report.analyses.push(a);
        return Ok(report_json(&report));
    }
    let mut out = String::new();
    let _ = writeln!(out, "algebra {name} of dim {}", alg.dim());
    let _ = writeln!(out, "dim Der = {}", der.dim());
    let _ = writeln!(out, "dim Inn = {}", inn.dim());
    match &aider {
        Some(ad) => {
            let _ = writeln!(out, "dim AIDer = {}", ad.dim());
        }
        None => {
            let _ = writeln!(out, "AIDer not computed: genus {}", alg.genus());
        }
    }
    print_basis(&mut out, "Der", &der);
    print_basis(&mut out, "Inn", &inn);
    if let Some(ad) = &aider {
        print_basis(&mut out, "AIDer", ad);
    }
    if brackets {
        let lie = induced_structure(&der)?;
        out.push_str(&dsl::serialize_algebra(&format!("der_{name}"), &lie));
    }
    Ok(out)
}

fn parse_levi(spec: &str, g: &Algebra) -> Res<Subspace> {
    let dim = g.dim();
    let mut rows = Vec::new();
    for part in spec.split(';').filter(|p| !p.trim().is_empty()) {
        let v = part.split(',').map(scalar).collect::<Res<Vec<_>>>()?;
        if v.len() != dim {
            return Err(Failure::Usage(format!("Levi vector `{part}` has {} coordinates, expected {dim}", v.len())));
        }
        rows.push(v);
    }
    Ok(Subspace::span(g.field(), dim, rows)?)
}

fn levi_text(s: &LeviStatus) -> String {
    match s {
        LeviStatus::Verified(_) => "verified".into(),
        LeviStatus::Failed(f) => format!("failed ({f:?})"),
    }
}

fn cmd_analyze(src: &Source, use_der: bool, levi: Option<&str>, json: bool) -> Res<String> {
    let (name, base, text) = load(src)?;
    let (subject, g) = if use_der || !base.classify().lie {
        (format!("Der({name})"), induced_structure(&der_algebra(&base))?)
    } else {
        (name.clone(), base.clone())
    };
    let claimed = levi.map(|l| parse_levi(l, &g)).transpose()?;
    let rep = liestruct::structure_report(&g, claimed.as_ref())?;
    let centers = g.centers();
    let nilpotent = g.is_nilpotent().0;
    let solvable = g.is_solvable().0;
    if json {
        let mut a = Analysis::new(subject.clone());
        a.dim("dim", rep.dim)
            .dim("center", rep.center_dim)
            .dim("killing_rank", rep.killing_rank)
            .dim("radical", rep.radical.dim())
            .dim("nilradical", rep.nilradical.dim())
            .flag("nilpotent", nilpotent)
            .flag("solvable", solvable)
            .basis("radical", &rep.radical)
            .basis("nilradical", &rep.nilradical)
            .basis("center", &centers.center);
        a.series.insert("derived".into(), rep.derived_series.clone());
        a.series.insert("lower_central".into(), rep.lower_central_series.clone());
        if let Some(s) = &rep.levi {
            a.flag("levi_verified", s.is_verified());
            a.notes.push(format!("Levi complement {}", levi_text(s)));
        }
        if subject != name {
            a.notes.push(format!("{name} is not analyzed directly; Der({name}) is"));
        }
        let mut report = Report::new(ReportInput::new(format!("analyze {name}"), &text));
        report.analyses.push(a);
        return Ok(report_json(&report));
    }
    let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    let mut out = String::new();
    let _ = writeln!(out, "{subject} of dim {}", rep.dim);
    let _ = writeln!(out, "derived series dims: {}", list(&rep.derived_series));
    let _ = writeln!(out, "lower central series dims: {}", list(&rep.lower_central_series));
    let _ = writeln!(out, "solvable: {solvable}, nilpotent: {nilpotent}");
    let _ = writeln!(out, "dim center = {}", rep.center_dim);
    let _ = writeln!(out, "Killing rank = {}", rep.killing_rank);
    let _ = writeln!(out, "dim radical = {}", rep.radical.dim());
    let _ = writeln!(out, "dim nilradical = {}", rep.nilradical.dim());
    let labels = g.labels();
    for (title, s) in [("radical", &rep.radical), ("nilradical", &rep.nilradical)] {
        let _ = writeln!(out, "{title} basis:");
        for v in s.basis() {
            let _ = writeln!(out, "  {}", render_vector(labels, v));
        }
    }
    if let Some(s) = &rep.levi {
        let _ = writeln!(out, "Levi complement: {}", levi_text(s));
    }
    Ok(out)
}

fn render_vector(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c} {l}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn cmd_catalog(family: FamilyName, params: &FamilyParams) -> Res<String> {
    let (name, alg) = build_family(family, params)?;
    Ok(dsl::serialize_algebra(&name, &alg))
}

struct VerifyArgs<'a> {
    nmax: usize,
    a: Option<&'a str>,
    seed: u64,
    claims: &'a [String],
    json: bool,
    strict: bool,
    timings: bool,
}

fn cmd_verify(v: VerifyArgs) -> Res<(String, bool)> {
    let a_set = match v.a {
        Some(list) => list.split(',').map(scalar).collect::<Res<Vec<_>>>()?,
        None => claims::default_a_set(),
    };
    let mut opts = RunOptions::new(v.nmax, a_set, v.seed);
    if !v.claims.is_empty() {
        opts.only = Some(v.claims.to_vec());
    }
    opts.timings = v.timings;
    let report = claims::run(&opts)?;
    report.validate()?;
    let refuted = report.count(Status::Refuted);
    let discrepancies = report.count(Status::Discrepancy);
    let failed = refuted > 0 || (v.strict && discrepancies > 0);
    if v.json {
        return Ok((report_json(&report), failed));
    }
    let mut out = String::new();
    for r in &report.claims {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "{:<4} {:<30} {}", r.id, params.join(" "), r.status);
        if r.status != Status::Confirmed {
            if !r.expected.is_empty() {
                let _ = writeln!(out, "       expected: {}", r.expected);
                let _ = writeln!(out, "       actual:   {}", r.actual);
            }
            for note in &r.notes {
                let _ = writeln!(out, "       note: {note}");
            }
        }
    }
    let _ = writeln!(
        out,
        "confirmed {}, refuted {refuted}, discrepancy {discrepancies}, skipped {}",
        report.count(Status::Confirmed),
        report.count(Status::Skipped)
    );
    Ok((out, failed))
}

fn run(cli: Cli) -> Res<(String, bool)> {
    match &cli.command {
        Command::Check { file } => cmd_check(file).map(|s| (s, false)),
        Command::Derive { source, brackets, json } => cmd_derive(source, *brackets, *json).map(|s| (s, false)),
        Command::Analyze { source, der, levi, json } => {
            cmd_analyze(source, *der, levi.as_deref(), *json).map(|s| (s, false))
        }
        Command::Catalog { family, params } => cmd_catalog(*family, params).map(|s| (s, false)),
        Command::VerifyPaper {
            nmax,
            a,
            seed,
            claims,
            json,
            strict,
            timings,
        } => cmd_verify(VerifyArgs {
            nmax: *nmax,
            a: a.as_deref(),
            seed: *seed,
            claims,
            json: *json,
            strict: *strict,
            timings: *timings,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, failed)) => {
            print!("{out}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
