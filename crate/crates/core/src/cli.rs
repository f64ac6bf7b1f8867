//! The `trisys` command line: checks, cohomology tables, Maurer-Cartan
//! tests, the coboundary oracle and conversions between document kinds.
//!
//! Exit codes: 0 when every check passes or the computation succeeds, 1 when
//! a mathematical check fails (including unmet mathematical preconditions of
//! a conversion), 2 for usage, input and I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebras::{
    adjoint_unchecked, check_leibniz, check_lie, check_lts, check_nambu, check_representation,
    representation_identities, Algebra, AlgebraKind, CheckReport, Rep,
};
use crate::cohomology::{cohomology_dims, is_cocycle, oracle_delta_vs_bracket};
use crate::controlling::{final_slot_conditions, mc_report};
use crate::error::{Error, Result};
use crate::formats::{emit, read_document, write_document, Document, Payload, ReportDoc};
use crate::multilinear::Space;
use crate::twoterm::{
    categorify, check_crossed_module, check_two_term, check_two_vector, crossed_to_strict, decategorify,
    quadruple_to_skeletal, skeletal_to_quadruple, strict_to_crossed, CrossedModule,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exact checks and cohomology for Lie triple systems and their 2-term versions.
#[derive(Parser, Debug)]
#[command(name = "trisys", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the defining identities of the structure in a document.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = CheckKind::Auto)]
        kind: CheckKind,
        /// Print a report document instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Dimensions of cochains, coboundary ranks and cohomology.
    Cohomology {
        path: PathBuf,
        /// `adjoint`, `trivial`, or a representation document.
        #[arg(long, default_value = "adjoint")]
        rep: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Whether the bracket is a Maurer-Cartan element satisfying the cochain constraints.
    Mc { path: PathBuf },
    /// Compare the coboundary with the signed controlling bracket on all basis cochains.
    Oracle {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Convert between 2-term systems, quadruples, crossed modules and 2-systems.
    Convert {
        path: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Which identities `check` verifies; `Auto` follows the document kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Auto,
    Lts,
    Nambu,
    Leibniz,
    Lie,
    Rep,
    TwoTerm,
    Crossed,
    TwoVector,
    Quadruple,
}

/// Result kind of a conversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Skeletal,
    Quadruple,
    Crossed,
    Strict,
    Categorified,
    Decategorified,
}

impl CheckKind {
    /// Parses a flag value such as `two-term`.
    pub fn parse(s: &str) -> Result<Self> {
        <Self as ValueEnum>::from_str(s, false).map_err(|_| Error::usage(format!("unknown check kind {s:?}")))
    }
}

impl Target {
    /// Parses a flag value such as `quadruple`.
    pub fn parse(s: &str) -> Result<Self> {
        <Self as ValueEnum>::from_str(s, false).map_err(|_| Error::usage(format!("unknown conversion target {s:?}")))
    }
}

/// Runs the command line with the given arguments (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let oracle = matches!(cli.command, Command::Oracle { .. });
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "trisys: {e}");
            match e {
                Error::Precondition(_) if !oracle => EXIT_CHECK_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Check { path, kind, json } => cmd_check(&path, kind, json, out),
        Command::Cohomology { path, rep, max_degree, json } => cmd_cohomology(&path, &rep, max_degree, json, out, err),
        Command::Mc { path } => cmd_mc(&path, out),
        Command::Oracle { path, degree, json } => cmd_oracle(&path, degree, json, out),
        Command::Convert { path, to, out: target } => cmd_convert(&path, to, target.as_deref(), out),
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io { path: "<stdout>".into(), source: e }
}

fn print_report(name: &str, report: &CheckReport, json: bool, out: &mut dyn Write) -> Result<i32> {
    if json {
        let doc = Document::new(Payload::Report(ReportDoc { subject: name.to_string(), report: report.clone() }));
        out.write_all(emit(&doc).as_bytes()).map_err(io_err)?;
    } else {
        write_table(report, out).map_err(io_err)?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

const SHOWN_VIOLATIONS: usize = 5;

fn write_table(report: &CheckReport, out: &mut dyn Write) -> std::io::Result<()> {
    let width = report.identities.iter().map(String::len).max().unwrap_or(0);
    for name in &report.identities {
        let bad: Vec<_> = report.violations.iter().filter(|v| &v.identity == name).collect();
        if bad.is_empty() {
            writeln!(out, "{name:<width$}  ok")?;
            continue;
        }
        writeln!(out, "{name:<width$}  FAILED ({} violations)", bad.len())?;
        for v in bad.iter().take(SHOWN_VIOLATIONS) {
            let show = |xs: &[crate::exactlin::Rat]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            writeln!(
                out,
                "    at ({}): lhs = [{}], rhs = [{}]",
                v.witness_labels.join(", "),
                show(&v.lhs),
                show(&v.rhs)
            )?;
        }
        if bad.len() > SHOWN_VIOLATIONS {
            writeln!(out, "    ... {} more", bad.len() - SHOWN_VIOLATIONS)?;
        }
    }
    Ok(())
}

fn algebra_check(a: &Algebra, kind: AlgebraKind) -> Result<CheckReport> {
    let a = a.with_kind(kind)?;
    match kind {
        AlgebraKind::Lts => check_lts(&a),
        AlgebraKind::Nambu => check_nambu(&a),
        AlgebraKind::Leibniz => check_leibniz(&a),
        AlgebraKind::Lie => check_lie(&a),
    }
}

/// Base axioms first; the representation identities only over a genuine LTS.
fn rep_report(r: &Rep) -> Result<CheckReport> {
    let mut out = CheckReport::new();
    let base = check_lts(&r.base)?;
    let ok = base.passed();
    out.merge("base", base);
    if ok {
        out.merge("", representation_identities(r));
    }
    Ok(out)
}

fn crossed_report(c: &CrossedModule) -> Result<CheckReport> {
    let (g, h) = (check_lts(&c.g)?, check_lts(&c.h)?);
    if g.passed() && h.passed() {
        return check_crossed_module(c);
    }
    let mut out = CheckReport::new();
    out.merge("g", g);
    out.merge("h", h);
    Ok(out)
}

fn quadruple_report(q: &crate::twoterm::Quadruple) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    let base = check_lts(&q.lts)?;
    let ok = base.passed();
    r.merge("lts", base);
    if !ok {
        return Ok(r);
    }
    r.merge("rep", representation_identities(&q.rep));
    r.begin("omega-constraints");
    if !final_slot_conditions(&q.omega.map).both() {
        r.compare(
            "omega-constraints",
            &[],
            vec![],
            vec![crate::exactlin::Rat::zero()],
            vec![crate::exactlin::Rat::one()],
        );
    }
    r.begin("omega-cocycle");
    if !is_cocycle(&q.lts, &q.rep, &q.omega)? {
        r.compare("omega-cocycle", &[], vec![], vec![crate::exactlin::Rat::zero()], vec![crate::exactlin::Rat::one()]);
    }
    Ok(r)
}

/// Checks the structure in a document. Base algebras are verified first;
/// when they fail, the report contains only their identities.
pub fn check_document(doc: &Document, kind: CheckKind) -> Result<CheckReport> {
    let mismatch =
        || Error::usage(format!("--kind {kind:?} does not apply to a {} document", doc.kind()).to_lowercase());
    Ok(match (&doc.payload, kind) {
        (Payload::Algebra(a), CheckKind::Auto) => algebra_check(a, a.kind)?,
        (Payload::Algebra(a), CheckKind::Lts) => algebra_check(a, AlgebraKind::Lts)?,
        (Payload::Algebra(a), CheckKind::Nambu) => algebra_check(a, AlgebraKind::Nambu)?,
        (Payload::Algebra(a), CheckKind::Leibniz) => algebra_check(a, AlgebraKind::Leibniz)?,
        (Payload::Algebra(a), CheckKind::Lie) => algebra_check(a, AlgebraKind::Lie)?,
        (Payload::Representation(r), CheckKind::Auto | CheckKind::Rep) => rep_report(r)?,
        (Payload::TwoTermSystem(s), CheckKind::Auto | CheckKind::TwoTerm) => check_two_term(s),
        (Payload::CrossedModule(c), CheckKind::Auto | CheckKind::Crossed) => crossed_report(c)?,
        (Payload::TwoVectorSystem(l), CheckKind::Auto | CheckKind::TwoVector) => check_two_vector(l)?,
        (Payload::Quadruple(q), CheckKind::Auto | CheckKind::Quadruple) => quadruple_report(q)?,
        (Payload::Cochain(_) | Payload::Report(_), CheckKind::Auto) => {
            return Err(Error::usage(format!("nothing to check in a {} document", doc.kind())))
        }
        _ => return Err(mismatch()),
    })
}

fn cmd_check(path: &Path, kind: CheckKind, json: bool, out: &mut dyn Write) -> Result<i32> {
    let report = check_document(&read_document(path)?, kind)?;
    print_report(&path.display().to_string(), &report, json, out)
}

fn load_rep(spec: &str, lts: &Algebra) -> Result<Rep> {
    match spec {
        "adjoint" => Ok(adjoint_unchecked(lts)),
        "trivial" => Ok(Rep::zero(lts.clone(), Space::from_labels(&["v"])?)),
        path => match read_document(Path::new(path))?.payload {
            Payload::Representation(r) if r.base == *lts => Ok(r),
            Payload::Representation(_) => Err(Error::usage("the representation is over a different algebra")),
            _ => Err(Error::usage("--rep must be adjoint, trivial or a representation document")),
        },
    }
}

fn load_lts(path: &Path) -> Result<Algebra> {
    match read_document(path)?.payload {
        Payload::Algebra(a) if a.kind.is_ternary() => a.with_kind(AlgebraKind::Lts),
        Payload::Algebra(a) => Err(Error::usage(format!("a {} algebra has no ternary bracket", a.kind))),
        other => Err(Error::usage(format!("expected an algebra document, got {}", Document::new(other).kind()))),
    }
}

fn cmd_cohomology(
    path: &Path,
    rep: &str,
    max_degree: usize,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    if max_degree == 0 {
        return Err(Error::usage("--max-degree must be at least 1"));
    }
    let lts = load_lts(path)?;
    let lts_report = check_lts(&lts)?;
    if !lts_report.passed() {
        writeln!(err, "trisys: the algebra is not a Lie triple system").map_err(io_err)?;
        write_table(&lts_report, out).map_err(io_err)?;
        return Ok(EXIT_CHECK_FAILED);
    }
    let rep = load_rep(rep, &lts)?;
    let rep_report = check_representation(&rep)?;
    if !rep_report.passed() {
        writeln!(err, "trisys: the representation fails its identities").map_err(io_err)?;
        write_table(&rep_report, out).map_err(io_err)?;
        return Ok(EXIT_CHECK_FAILED);
    }
    if max_degree > 3 {
        writeln!(err, "trisys: warning: degree {max_degree} needs {}^{} basis tuples", lts.dim(), 2 * max_degree - 1)
            .map_err(io_err)?;
    }
    let dims = cohomology_dims(&lts, &rep, max_degree)?;
    if json {
        let rows: Vec<_> = dims
            .iter()
            .map(|d| json!({"degree": d.degree, "cochains": d.cochains, "rank": d.rank, "cohomology": d.cohomology}))
            .collect();
        let mut s = serde_json::to_string_pretty(&json!({ "degrees": rows })).expect("serializable");
        s.push('\n');
        out.write_all(s.as_bytes()).map_err(io_err)?;
    } else {
        writeln!(out, "{:>3}  {:>9}  {:>9}  {:>9}", "n", "dim C^n", "rank d_n", "dim H^n").map_err(io_err)?;
        for d in &dims {
            writeln!(out, "{:>3}  {:>9}  {:>9}  {:>9}", d.degree, d.cochains, d.rank, d.cohomology).map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_mc(path: &Path, out: &mut dyn Write) -> Result<i32> {
    let a = match read_document(path)?.payload {
        Payload::Algebra(a) => a,
        other => {
            return Err(Error::usage(format!("expected an algebra document, got {}", Document::new(other).kind())))
        }
    };
    if !matches!(a.kind, AlgebraKind::Nambu | AlgebraKind::Lts) {
        return Err(Error::usage(format!("the Maurer-Cartan test needs a nambu or lts algebra, got {}", a.kind)));
    }
    let r = mc_report(&a)?;
    let mc = match &r.witness {
        None => "yes".to_string(),
        Some((t, _)) => {
            let l = |i: usize| a.space.label(t[i]).to_string();
            format!("no (defect at ({}⊗{}, {}⊗{}, {}))", l(0), l(1), l(2), l(3), l(4))
        }
    };
    let yn = |b: bool| if b { "yes" } else { "no" };
    writeln!(
        out,
        "MC: {mc}; constraints: {} (antisymmetry: {}, cyclic: {})",
        yn(r.constraints.both()),
        yn(r.constraints.cond1),
        yn(r.constraints.cond2)
    )
    .map_err(io_err)?;
    Ok(if r.passes(a.kind) { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_oracle(path: &Path, degree: usize, json: bool, out: &mut dyn Write) -> Result<i32> {
    if degree == 0 {
        return Err(Error::usage("--degree must be at least 1"));
    }
    let lts = load_lts(path)?;
    let report = oracle_delta_vs_bracket(&lts, degree)?;
    print_report(&path.display().to_string(), &report, json, out)
}

/// Converts a document; unmet mathematical preconditions are
/// [`Error::Precondition`], a document of the wrong kind is [`Error::Usage`].
pub fn convert_document(doc: &Document, to: Target) -> Result<Document> {
    let wrong =
        |want: &str| Error::usage(format!("--to {to:?} needs a {want} document, got {}", doc.kind()).to_lowercase());
    let payload = match (to, &doc.payload) {
        (Target::Quadruple, Payload::TwoTermSystem(s)) => Payload::Quadruple(skeletal_to_quadruple(s)?),
        (Target::Quadruple, _) => return Err(wrong("two_term_system")),
        (Target::Skeletal, Payload::Quadruple(q)) => Payload::TwoTermSystem(quadruple_to_skeletal(q)?),
        (Target::Skeletal, _) => return Err(wrong("quadruple")),
        (Target::Crossed, Payload::TwoTermSystem(s)) => Payload::CrossedModule(strict_to_crossed(s)?),
        (Target::Crossed, _) => return Err(wrong("two_term_system")),
        (Target::Strict, Payload::CrossedModule(c)) => {
            let report = check_crossed_module(c)?;
            if !report.passed() {
                return Err(Error::precondition(format!(
                    "not a crossed module: {} fail",
                    report.failed_identities().join(", ")
                )));
            }
            Payload::TwoTermSystem(crossed_to_strict(c)?)
        }
        (Target::Strict, _) => return Err(wrong("crossed_module")),
        (Target::Categorified, Payload::TwoTermSystem(s)) => Payload::TwoVectorSystem(categorify(s)?),
        (Target::Categorified, _) => return Err(wrong("two_term_system")),
        (Target::Decategorified, Payload::TwoVectorSystem(l)) => {
            let report = check_two_vector(l)?;
            if !report.passed() {
                return Err(Error::precondition(format!(
                    "not a Lie triple 2-system: {} fail",
                    report.failed_identities().join(", ")
                )));
            }
            Payload::TwoTermSystem(decategorify(l)?)
        }
        (Target::Decategorified, _) => return Err(wrong("two_vector_system")),
    };
    Ok(Document::new(payload))
}

fn cmd_convert(path: &Path, to: Target, target: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let result = convert_document(&read_document(path)?, to)?;
    match target {
        Some(p) => write_document(p, &result)?,
        None => out.write_all(emit(&result).as_bytes()).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}
