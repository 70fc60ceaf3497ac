use std::fmt::{self, Write as _};
use std::path::Path;
use std::sync::Arc;

use clap::ValueEnum;
use hopfcat::duoidal::{bimonoid_from_category, category_from_bimonoid, verify_bimonoid};
use hopfcat::format::{self, Document};
use hopfcat::fundamental::{
    can_ranks, check_antipode_bijective, check_equivalence, coinvariants, fundamental_conditions, integrals,
    randomized_free_module, recover_antipode, verify_hopf_module, HopfModuleData,
};
use hopfcat::modules::{verify_comodule, verify_module};
use hopfcat::weak_hopf::weakness_item;
use hopfcat::{
    check_antipode_theorems, check_strictness, dualize, from_graded, linearize_groupoid, pack, pack_dual, transform,
    undualize, verify_dual, verify_structure, verify_weak_hopf, Error, Field, HopfCatData, Level, Mode, Report,
    ReportItem,
};

use crate::output::{atomic_write, InputDigest};
use crate::{Cli, Command};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformOp {
    Pack,
    PackDual,
    Dualize,
    Undualize,
    FromGroupoid,
    FromGraded,
    Opposite,
    Coopposite,
    Opcop,
    Bimonoid,
    Unbimonoid,
    StripAntipode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AnalyzeOp {
    RecoverAntipode,
    Integrals,
    Coinvariants,
    CanRanks,
    Strictness,
    /// Free/coinvariant equivalence on `M^z` for every `z` and on a seeded free module.
    Equivalence,
    /// Agreement of the conditions equivalent to having an antipode.
    Conditions,
}

/// Errors that end a run before any report exists.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or unparseable input, kind mismatch, bad flag: exit 2.
    Input(String),
    /// A computed result contradicts an internal cross-check: exit 3.
    Breach(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Breach(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Breach(m) => write!(f, "internal invariant breach: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

pub struct Outcome {
    pub report: Report,
    pub exit: u8,
    pub inputs: Vec<InputDigest>,
}

impl Outcome {
    fn from_report(report: Report, inputs: Vec<InputDigest>) -> Self {
        let exit = if report.passed() { 0 } else { 1 };
        Outcome { report, exit, inputs }
    }
}

/// Errors that describe a property of the input become a failing report item;
/// the rest abort the run.
fn classify(e: Error) -> std::result::Result<Report, CliError> {
    let none: [&str; 0] = [];
    let item = |axiom: &str, objects: &[&str], msg: String| {
        let mut r = Report::new();
        r.push(ReportItem::verdict(axiom, objects, false, Some(msg)));
        Ok(r)
    };
    match e {
        Error::InvariantBreach(m) => Err(CliError::Breach(m)),
        Error::MissingAntipode => item("antipode-present", &none, e.to_string()),
        Error::NotGroupoid { ref morphism, .. } => {
            let m = morphism.clone();
            item("groupoid-axioms", &[m.as_str()], e.to_string())
        }
        Error::GradedAxiom { ref sigma, ref tau, .. } => {
            let (s, t) = (sigma.clone(), tau.clone());
            item("graded-axioms", &[s.as_str(), t.as_str()], e.to_string())
        }
        Error::RecoveryFailed { ref z, ref x, ref y, .. } => {
            let (z, x, y) = (z.clone(), x.clone(), y.clone());
            item("antipode-recoverable", &[z.as_str(), x.as_str(), y.as_str()], e.to_string())
        }
        Error::Precondition(m) => item("precondition", &none, m),
        other => Err(CliError::Input(other.to_string())),
    }
}

fn run(f: impl FnOnce() -> hopfcat::Result<Report>) -> std::result::Result<Report, CliError> {
    f().or_else(classify)
}

fn doc_field(doc: &Document) -> Option<Field> {
    Some(match doc {
        Document::HopfCategory(a) => a.field(),
        Document::DualHopfCategory(c) => c.field(),
        Document::WeakHopf(w) => w.field,
        Document::Groupoid(_) => return None,
        Document::GradedHopf(h) => h.field,
        Document::Module { data, .. } => data.base.field(),
        Document::Comodule { data, .. } => data.base.field(),
        Document::HopfModule { data, .. } => data.base().field(),
        Document::Bimonoid(b) => b.field,
    })
}

struct Ctx {
    field: Field,
    seed: u64,
    quiet: bool,
}

impl Ctx {
    fn new(cli: &Cli) -> std::result::Result<Self, CliError> {
        let field = match &cli.field {
            Some(s) => s.parse::<Field>().map_err(|e| CliError::Input(format!("--field: {e}")))?,
            None => Field::Rational,
        };
        Ok(Ctx { field, seed: cli.seed, quiet: cli.quiet })
    }
}

fn load(path: &Path, cli: &Cli, ctx: &Ctx) -> std::result::Result<(Document, InputDigest), CliError> {
    let doc = format::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if let (Some(_), Some(declared)) = (&cli.field, doc_field(&doc)) {
        if declared != ctx.field {
            return Err(CliError::Input(format!(
                "--field {} does not match the file's field {declared}",
                ctx.field
            )));
        }
    }
    let digest = InputDigest::new(path, doc.kind().as_str(), &format::write(&doc));
    Ok((doc, digest))
}

pub fn dispatch(cli: &Cli) -> std::result::Result<Outcome, CliError> {
    let ctx = Ctx::new(cli)?;
    match &cli.command {
        Command::Verify { path, level, strictness, antipode_theorems, fundamental } => {
            let (doc, digest) = load(path, cli, &ctx)?;
            let opts = VerifyOpts {
                level: level.map(Level::from),
                strictness: *strictness,
                antipode_theorems: *antipode_theorems,
                fundamental: *fundamental,
            };
            let report = verify_document(&doc, &opts, &ctx)?;
            Ok(Outcome::from_report(report, vec![digest]))
        }
        Command::Transform { path, op, out } => {
            let (doc, digest) = load(path, cli, &ctx)?;
            let produced = apply_transform(&doc, *op, &ctx)?;
            let produced = match produced {
                Ok(d) => d,
                Err(report) => return Ok(Outcome::from_report(report, vec![digest])),
            };
            let report = verify_document(&produced, &VerifyOpts::default(), &ctx)?;
            if !report.passed() {
                return Ok(Outcome { report, exit: 3, inputs: vec![digest] });
            }
            atomic_write(out, &format::write(&produced)).map_err(|e| CliError::Input(format!("{}: {e}", out.display())))?;
            Ok(Outcome::from_report(report, vec![digest]))
        }
        Command::Analyze { path, op, out } => {
            let (doc, digest) = load(path, cli, &ctx)?;
            let (report, artifact) = analyze(&doc, *op, &ctx)?;
            if let Some(text) = artifact {
                match out {
                    Some(p) => atomic_write(p, &text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
                    None if !ctx.quiet => print!("{text}"),
                    None => {}
                }
            }
            Ok(Outcome::from_report(report, vec![digest]))
        }
    }
}

#[derive(Default)]
struct VerifyOpts {
    level: Option<Level>,
    strictness: bool,
    antipode_theorems: bool,
    fundamental: bool,
}

fn verify_category(a: &HopfCatData, opts: &VerifyOpts) -> std::result::Result<Report, CliError> {
    let level = opts.level.unwrap_or(if a.has_antipode() { Level::Hopf } else { Level::Semihopf });
    let mut report = run(|| verify_structure(a, level))?;
    let hopf_ok = level == Level::Hopf && report.passed();
    if opts.antipode_theorems && hopf_ok {
        report.extend(run(|| check_antipode_theorems(a))?);
    }
    if opts.strictness {
        report.extend(check_strictness(a).report);
    }
    if opts.fundamental && report.passed() && level >= Level::Semihopf {
        report.extend(run(|| fundamental_conditions(a))?);
        if a.has_antipode() {
            report.extend(run(|| check_antipode_bijective(a))?);
        }
    }
    Ok(report)
}

fn verify_document(doc: &Document, opts: &VerifyOpts, ctx: &Ctx) -> std::result::Result<Report, CliError> {
    match doc {
        Document::HopfCategory(a) => verify_category(a, opts),
        Document::DualHopfCategory(c) => Ok(verify_dual(c)),
        Document::WeakHopf(w) => {
            let mut r = run(|| verify_weak_hopf(w))?;
            r.push(weakness_item(w));
            Ok(r)
        }
        Document::Groupoid(g) => {
            if let Err(e) = g.validate() {
                return classify(e);
            }
            let a = linearize_groupoid(g, ctx.field).map_err(|e| CliError::Input(e.to_string()))?;
            verify_category(&a, opts)
        }
        Document::GradedHopf(h) => {
            if let Err(e) = h.validate() {
                return classify(e);
            }
            let a = from_graded(h).map_err(|e| CliError::Input(e.to_string()))?;
            verify_category(&a, opts)
        }
        Document::Module { data, .. } => Ok(verify_module(data)),
        Document::Comodule { data, .. } => Ok(verify_comodule(data)),
        Document::HopfModule { data, .. } => run(|| verify_hopf_module(data)),
        Document::Bimonoid(b) => run(|| verify_bimonoid(b)),
    }
}

fn kind_error(doc: &Document, wanted: &str) -> CliError {
    CliError::Input(format!("expected a `{wanted}` file, found `{}`", doc.kind()))
}

/// `Ok(Err(report))` when the construction itself rejects the input.
fn apply_transform(
    doc: &Document,
    op: TransformOp,
    ctx: &Ctx,
) -> std::result::Result<std::result::Result<Document, Report>, CliError> {
    let produced: hopfcat::Result<Document> = match (op, doc) {
        (TransformOp::Pack, Document::HopfCategory(a)) => pack(a).map(Document::WeakHopf),
        (TransformOp::PackDual, Document::DualHopfCategory(c)) => pack_dual(c).map(Document::WeakHopf),
        (TransformOp::Dualize, Document::HopfCategory(a)) => dualize(a).map(Document::DualHopfCategory),
        (TransformOp::Undualize, Document::DualHopfCategory(c)) => undualize(c).map(Document::HopfCategory),
        (TransformOp::FromGroupoid, Document::Groupoid(g)) => {
            g.validate().and_then(|_| linearize_groupoid(g, ctx.field)).map(Document::HopfCategory)
        }
        (TransformOp::FromGraded, Document::GradedHopf(h)) => from_graded(h).map(Document::HopfCategory),
        (TransformOp::Opposite, Document::HopfCategory(a)) => transform(a, Mode::Opposite).map(Document::HopfCategory),
        (TransformOp::Coopposite, Document::HopfCategory(a)) => {
            transform(a, Mode::Coopposite).map(Document::HopfCategory)
        }
        (TransformOp::Opcop, Document::HopfCategory(a)) => transform(a, Mode::Opcop).map(Document::HopfCategory),
        (TransformOp::Bimonoid, Document::HopfCategory(a)) => bimonoid_from_category(a).map(Document::Bimonoid),
        (TransformOp::Unbimonoid, Document::Bimonoid(b)) => category_from_bimonoid(b).map(Document::HopfCategory),
        (TransformOp::StripAntipode, Document::HopfCategory(a)) => Ok(Document::HopfCategory(a.strip_antipode())),
        (op, doc) => {
            let wanted = match op {
                TransformOp::PackDual | TransformOp::Undualize => "dual-hopf-category",
                TransformOp::FromGroupoid => "groupoid",
                TransformOp::FromGraded => "graded-hopf",
                TransformOp::Unbimonoid => "bimonoid",
                _ => "hopf-category",
            };
            return Err(kind_error(doc, wanted));
        }
    };
    match produced {
        Ok(d) => Ok(Ok(d)),
        Err(e) => classify(e).map(Err),
    }
}

fn category_input(doc: &Document, ctx: &Ctx) -> std::result::Result<HopfCatData, CliError> {
    match doc {
        Document::HopfCategory(a) => Ok(a.clone()),
        Document::Groupoid(g) => {
            g.validate().and_then(|_| linearize_groupoid(g, ctx.field)).map_err(|e| CliError::Input(e.to_string()))
        }
        Document::GradedHopf(h) => from_graded(h).map_err(|e| CliError::Input(e.to_string())),
        other => Err(kind_error(other, "hopf-category")),
    }
}

fn write_vector(out: &mut String, v: &[hopfcat::Scalar]) {
    let tokens: Vec<String> = v.iter().map(|s| s.to_token()).collect();
    let _ = writeln!(out, "  vector {}", tokens.join(" "));
}

fn analyze(doc: &Document, op: AnalyzeOp, ctx: &Ctx) -> std::result::Result<(Report, Option<String>), CliError> {
    match op {
        AnalyzeOp::Coinvariants => {
            let m = match doc {
                Document::HopfModule { data, .. } => data.clone(),
                other => HopfModuleData::regular(Arc::new(category_input(other, ctx)?)),
            };
            let mut report = run(|| verify_hopf_module(&m))?;
            if !report.passed() {
                return Ok((report, None));
            }
            let family = match coinvariants(&m) {
                Ok(f) => f,
                Err(e) => return Ok((classify(e)?, None)),
            };
            let base = m.base();
            let mut text = String::from("coinvariants\n");
            for (x, basis) in family.bases.iter().enumerate() {
                let _ = writeln!(text, "object {} dim {}", base.label(x), basis.len());
                basis.iter().for_each(|v| write_vector(&mut text, v));
                report.push(
                    ReportItem::verdict("coinvariant-dimension", &[base.label(x)], true, Some(basis.len().to_string()))
                        .informational(),
                );
            }
            Ok((report, Some(text)))
        }
        AnalyzeOp::Equivalence => {
            if let Document::HopfModule { data, .. } = doc {
                return Ok((run(|| check_equivalence(data))?, None));
            }
            let a = Arc::new(category_input(doc, ctx)?);
            let mut report = Report::new();
            for z in 0..a.n() {
                report.extend(run(|| HopfModuleData::m_z(a.clone(), z).and_then(|m| check_equivalence(&m)))?);
            }
            report.extend(run(|| {
                randomized_free_module(a.clone(), ctx.seed).and_then(|m| check_equivalence(&m))
            })?);
            Ok((report, None))
        }
        _ => {
            let a = category_input(doc, ctx)?;
            analyze_category(a, op)
        }
    }
}

fn analyze_category(a: HopfCatData, op: AnalyzeOp) -> std::result::Result<(Report, Option<String>), CliError> {
    match op {
        AnalyzeOp::RecoverAntipode => {
            let stripped = a.strip_antipode();
            match recover_antipode(&stripped) {
                Ok(full) => {
                    let none: [&str; 0] = [];
                    let mut report = Report::new();
                    report.push(ReportItem::verdict("antipode-recoverable", &none, true, None));
                    if a.has_antipode() {
                        let same = full == a;
                        report.push(ReportItem::verdict(
                            "recovered-antipode-matches-input",
                            &none,
                            same,
                            (!same).then(|| "input antipode differs from the recovered one".to_string()),
                        ));
                    }
                    Ok((report, Some(format::write(&Document::HopfCategory(full)))))
                }
                Err(e) => Ok((classify(e)?, None)),
            }
        }
        AnalyzeOp::Integrals => {
            let a = Arc::new(a);
            let mut report = Report::new();
            let mut text = String::from("integrals\n");
            for x in 0..a.n() {
                let ints = match integrals(a.clone(), x) {
                    Ok(i) => i,
                    Err(e) => return Ok((classify(e)?, None)),
                };
                let _ = writeln!(text, "object {} dim {}", a.label(x), ints.basis.len());
                ints.basis.iter().for_each(|v| write_vector(&mut text, v));
                for &(y, rank, rows, cols) in &ints.maps {
                    let _ = writeln!(text, "  map {} rank {rank} shape {rows}x{cols}", a.label(y));
                    let ok = rank == rows && rank == cols;
                    report.push(ReportItem::verdict(
                        "integral-map-bijective",
                        &[a.label(x), a.label(y)],
                        ok,
                        Some(format!("rank {rank} of {rows}x{cols}")),
                    ));
                }
                report.push(
                    ReportItem::verdict("integral-dimension", &[a.label(x)], true, Some(ints.basis.len().to_string()))
                        .informational(),
                );
            }
            Ok((report, Some(text)))
        }
        AnalyzeOp::CanRanks => {
            let mut report = Report::new();
            let mut text = String::from("z x y rank rows cols invertible\n");
            for c in can_ranks(&a) {
                let labels = [a.label(c.z), a.label(c.x), a.label(c.y)];
                let _ = writeln!(
                    text,
                    "{} {} {} {} {} {} {}",
                    labels[0],
                    labels[1],
                    labels[2],
                    c.rank,
                    c.rows,
                    c.cols,
                    if c.invertible() { "yes" } else { "no" }
                );
                report.push(ReportItem::verdict(
                    "can-invertible",
                    &labels,
                    c.invertible(),
                    Some(format!("rank {} of {}x{}", c.rank, c.rows, c.cols)),
                ));
            }
            Ok((report, Some(text)))
        }
        AnalyzeOp::Strictness => {
            let s = check_strictness(&a);
            let text = format!(
                "strict {}\nloops-surjective {}\n",
                if s.all_triples { "yes" } else { "no" },
                if s.loops { "yes" } else { "no" }
            );
            Ok((s.report, Some(text)))
        }
        AnalyzeOp::Conditions => Ok((run(|| fundamental_conditions(&a))?, None)),
        AnalyzeOp::Coinvariants | AnalyzeOp::Equivalence => unreachable!("handled before dispatching on the category"),
    }
}
