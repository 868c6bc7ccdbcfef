//! Command-line front end. [`run`] parses arguments and returns the exit
//! status together with everything destined for stdout and stderr, so the
//! binary is a thin wrapper and tests can drive it in-process.
//!
//! Exit status: 0 on success, 2 when a functional is rejected, a search finds
//! nothing or a duality check fails, 1 on any input or guard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::algebra::{AlgElement, Algebra};
use crate::codes::{self, CodeOverF};
use crate::error::Error;
use crate::io::{
    reduce_all, AlgebraSpec, CodeDoc, CodeReport, DefiningSequenceDoc, ElementsDoc, FieldCodeDoc,
    FunctionalDoc, ValuesDoc,
};
use crate::limits::Limits;
use crate::trace::{self, BaseFunctional, Functional, Trace, TraceOptions, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TChoice {
    /// Coefficient of `x^{deg g - 1}`.
    Coeff,
    /// Field trace of the residue field.
    Fieldtrace,
}

#[derive(Debug, Parser)]
#[command(
    name = "fptrace",
    version,
    about = "Trace maps on finite commutative algebras over prime fields"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Seed for polynomial factorization.
    #[arg(long, env = "FPTRACE_SEED", default_value_t = 0, global = true)]
    pub seed: u64,
    /// Residue-field functional used by the local trace construction.
    #[arg(long, value_enum, default_value_t = TChoice::Coeff, global = true)]
    pub t_choice: TChoice,
    /// Multiply every enumeration guard by this factor.
    #[arg(long, value_name = "MULTIPLIER", value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub unsafe_guard: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Algebra operations.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Construct, verify or search for traces.
    #[command(subcommand)]
    Trace(TraceCmd),
    /// Dual basis of a basis with respect to a trace.
    DualBasis {
        /// Functional JSON.
        file: PathBuf,
        /// Basis as a list of coordinate arrays (default: canonical basis).
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Discriminant of a list of elements with respect to a trace.
    Discriminant {
        /// Functional JSON.
        file: PathBuf,
        /// Elements as a list of coordinate arrays (default: canonical basis).
        #[arg(long)]
        elements: Option<PathBuf>,
    },
    /// The element representing a functional through a trace.
    Represent {
        /// Functional JSON of the trace.
        file: PathBuf,
        /// Values of the functional to represent.
        #[arg(long)]
        target: PathBuf,
    },
    /// Code operations.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Checks.
    #[command(subcommand)]
    Check(CheckCmd),
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    /// Build an algebra and print its multiplication table.
    Build { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum TraceCmd {
    /// Construct a trace on a generator-presented algebra.
    Construct { file: PathBuf },
    /// Verify a functional.
    Verify { file: PathBuf },
    /// Exhaustively search for a trace.
    Search { file: PathBuf },
}

#[derive(Debug, clap::Args)]
pub struct CodeOutput {
    /// Include the full codeword list.
    #[arg(long)]
    pub codewords: bool,
}

#[derive(Debug, Subcommand)]
pub enum CodeCmd {
    /// Parameters of a code over F_p.
    Params {
        file: PathBuf,
        #[command(flatten)]
        out: CodeOutput,
    },
    /// Trace code of a code over an algebra.
    TraceCode {
        file: PathBuf,
        /// Functional JSON to use instead of the constructed trace.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        out: CodeOutput,
    },
    /// Subfield subcode of a code over an algebra.
    SubfieldSubcode {
        file: PathBuf,
        #[command(flatten)]
        out: CodeOutput,
    },
    /// Subfield code of a code over an algebra.
    SubfieldCode {
        file: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Basis as a list of coordinate arrays (default: canonical basis).
        #[arg(long)]
        basis: Option<PathBuf>,
        #[command(flatten)]
        out: CodeOutput,
    },
    /// Dual code over the algebra, by exhaustion.
    Dual { file: PathBuf },
    /// Code of a defining sequence.
    Cd {
        file: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        out: CodeOutput,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Compare the trace code of the dual with the dual of the subfield subcode.
    Duality {
        file: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(report) => {
            let mut stdout = match cli.format {
                Format::Json => report.json,
                Format::Text => report.text,
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                status: report.status,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            status: 1,
            stdout: String::new(),
            stderr: diagnostic(&e),
        },
    }
}

fn diagnostic(e: &anyhow::Error) -> String {
    let mut line = format!("error: {e:#}");
    if matches!(
        e.root_cause().downcast_ref::<Error>(),
        Some(Error::GuardExceeded { .. })
    ) {
        line.push_str(" (raise with --unsafe-guard)");
    }
    line.push('\n');
    line
}

struct Report {
    json: String,
    text: String,
    status: i32,
}

impl Report {
    fn new(value: &impl Serialize, text: String, status: i32) -> Self {
        let json = serde_json::to_string_pretty(value).expect("report serializes");
        Self { json, text, status }
    }
}

struct Ctx {
    limits: Limits,
    opts: TraceOptions,
}

fn dispatch(cli: &Cli) -> anyhow::Result<Report> {
    let ctx = Ctx {
        limits: cli
            .unsafe_guard
            .map_or_else(Limits::default, |m| Limits::scaled(u128::from(m))),
        opts: TraceOptions {
            base: match cli.t_choice {
                TChoice::Coeff => BaseFunctional::Coefficient,
                TChoice::Fieldtrace => BaseFunctional::FieldTrace,
            },
            seed: cli.seed,
        },
    };
    match &cli.command {
        Command::Algebra(AlgebraCmd::Build { file }) => algebra_build(file),
        Command::Trace(TraceCmd::Construct { file }) => trace_construct(&ctx, file),
        Command::Trace(TraceCmd::Verify { file }) => trace_verify(file),
        Command::Trace(TraceCmd::Search { file }) => trace_search(&ctx, file),
        Command::DualBasis { file, basis } => dual_basis(file, basis.as_deref()),
        Command::Discriminant { file, elements } => discriminant(file, elements.as_deref()),
        Command::Represent { file, target } => represent(file, target),
        Command::Code(cmd) => code(&ctx, cmd),
        Command::Check(CheckCmd::Duality { file, trace }) => {
            check_duality(&ctx, file, trace.as_deref())
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))
}

fn coords(e: &AlgElement) -> Vec<u32> {
    e.coords().to_vec()
}

fn fmt_list<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Serialize)]
struct AlgebraReport {
    p: u32,
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<Vec<u32>>>,
    unit: Vec<u32>,
    description: String,
}

fn algebra_build(file: &Path) -> anyhow::Result<Report> {
    let spec: AlgebraSpec = read_json(file)?;
    let a = spec.build()?;
    let mut text = format!("{a}\nbasis: {}\n", a.labels().join(", "));
    let basis = a.basis();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate().skip(i) {
            let _ = writeln!(
                text,
                "{} * {} = {}",
                a.labels()[i],
                a.labels()[j],
                a.format_element(&a.mul(x, y))
            );
        }
    }
    let report = AlgebraReport {
        p: a.field().p(),
        dim: a.dim(),
        labels: a.labels().to_vec(),
        table: a.table(),
        unit: coords(&a.one()),
        description: a.to_string(),
    };
    Ok(Report::new(&report, text, 0))
}

#[derive(Serialize)]
struct TraceReport<'a> {
    algebra: &'a AlgebraSpec,
    values: Vec<u32>,
    verified: bool,
    gram_det: u32,
}

fn trace_text(t: &Trace) -> String {
    let a = t.algebra();
    let mut text = format!("{a}\n");
    for (label, v) in a.labels().iter().zip(t.values()) {
        let _ = writeln!(text, "τ({label}) = {v}");
    }
    let _ = write!(text, "Gram determinant: {}\nverified", t.gram().det);
    text
}

fn trace_report(spec: &AlgebraSpec, t: &Trace) -> Report {
    let report = TraceReport {
        algebra: spec,
        values: t.values().to_vec(),
        verified: true,
        gram_det: t.gram().det,
    };
    Report::new(&report, trace_text(t), 0)
}

fn trace_construct(ctx: &Ctx, file: &Path) -> anyhow::Result<Report> {
    let spec: AlgebraSpec = read_json(file)?;
    let Some(gens) = spec.generators()? else {
        bail!("trace construct needs a generator presentation; use `trace search` for a table algebra");
    };
    let t = trace::multivariate_trace(&gens, &ctx.opts)?;
    Ok(trace_report(&spec, &t))
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    algebra: &'a AlgebraSpec,
    values: Vec<u32>,
    verified: bool,
    gram_det: u32,
    gram: Vec<Vec<u32>>,
    witness: Option<Vec<u32>>,
}

/// Verdict of a functional file, with the zero functional rejected through
/// the witness `1`.
fn judge(doc: &FunctionalDoc) -> anyhow::Result<(Algebra, Functional, Verdict)> {
    let (a, f) = doc.build()?;
    let verdict = match trace::verify_trace(&a, &f) {
        Err(Error::ZeroFunctional) => Verdict::Rejected {
            gram: trace::GramMatrix::of(&a, &f),
            witness: a.one(),
        },
        v => v?,
    };
    Ok((a, f, verdict))
}

fn rejection(doc: &FunctionalDoc, a: &Algebra, f: &Functional, verdict: &Verdict) -> Report {
    let witness = match verdict {
        Verdict::Rejected { witness, .. } => Some(witness),
        Verdict::Verified(_) => None,
    };
    let gram = verdict.gram();
    let report = VerifyReport {
        algebra: &doc.algebra,
        values: f.values().to_vec(),
        verified: witness.is_none(),
        gram_det: gram.det,
        gram: gram.matrix.to_rows(),
        witness: witness.map(coords),
    };
    let text = match witness {
        None => format!("Gram determinant: {}\nverified", gram.det),
        Some(w) => format!(
            "Gram determinant: {}\nrejected: witness {} {} spans an ideal in the kernel",
            gram.det,
            a.format_element(w),
            fmt_list(w.coords())
        ),
    };
    Report::new(&report, text, if witness.is_none() { 0 } else { 2 })
}

fn trace_verify(file: &Path) -> anyhow::Result<Report> {
    let doc: FunctionalDoc = read_json(file)?;
    let (a, f, verdict) = judge(&doc)?;
    Ok(rejection(&doc, &a, &f, &verdict))
}

/// A verified trace from a functional file, or the rejection report.
fn load_trace(file: &Path) -> anyhow::Result<Result<Trace, Report>> {
    let doc: FunctionalDoc = read_json(file)?;
    let (a, f, verdict) = judge(&doc)?;
    if verdict.is_verified() {
        Ok(Ok(Trace::new(a, f)?))
    } else {
        Ok(Err(rejection(&doc, &a, &f, &verdict)))
    }
}

#[derive(Serialize)]
struct SearchNone<'a> {
    algebra: &'a AlgebraSpec,
    found: bool,
}

fn trace_search(ctx: &Ctx, file: &Path) -> anyhow::Result<Report> {
    let spec: AlgebraSpec = read_json(file)?;
    let a = spec.build()?;
    match trace::search_traces(&a, &ctx.limits)? {
        Some(f) => Ok(trace_report(&spec, &Trace::new(a, f)?)),
        None => Ok(Report::new(
            &SearchNone {
                algebra: &spec,
                found: false,
            },
            "none".into(),
            2,
        )),
    }
}

fn element_list(a: &Algebra, file: Option<&Path>) -> anyhow::Result<Vec<AlgElement>> {
    match file {
        None => Ok(a.basis()),
        Some(path) => {
            let doc: ElementsDoc = read_json(path)?;
            Ok(crate::io::elements(a, doc.list())?)
        }
    }
}

#[derive(Serialize)]
struct DualBasisReport {
    basis: Vec<Vec<u32>>,
    dual: Vec<Vec<u32>>,
}

fn dual_basis(file: &Path, basis: Option<&Path>) -> anyhow::Result<Report> {
    let t = match load_trace(file)? {
        Ok(t) => t,
        Err(rejected) => return Ok(rejected),
    };
    let a = t.algebra();
    let basis = element_list(a, basis)?;
    let dual = trace::dual_basis(&t, &basis)?;
    let mut text = String::new();
    for (i, (b, d)) in basis.iter().zip(&dual).enumerate() {
        let _ = writeln!(
            text,
            "{i}: {}  ->  {}",
            a.format_element(b),
            a.format_element(d)
        );
    }
    let report = DualBasisReport {
        basis: basis.iter().map(coords).collect(),
        dual: dual.iter().map(coords).collect(),
    };
    Ok(Report::new(&report, text, 0))
}

#[derive(Serialize)]
struct DiscriminantReport {
    discriminant: u32,
    is_basis: bool,
}

fn discriminant(file: &Path, elements: Option<&Path>) -> anyhow::Result<Report> {
    let t = match load_trace(file)? {
        Ok(t) => t,
        Err(rejected) => return Ok(rejected),
    };
    let elems = element_list(t.algebra(), elements)?;
    let d = trace::discriminant(&t, &elems)?;
    let text = format!(
        "discriminant: {d}\n{}",
        if d != 0 { "basis" } else { "not a basis" }
    );
    Ok(Report::new(
        &DiscriminantReport {
            discriminant: d,
            is_basis: d != 0,
        },
        text,
        0,
    ))
}

#[derive(Serialize)]
struct RepresentReport {
    beta: Vec<u32>,
}

fn represent(file: &Path, target: &Path) -> anyhow::Result<Report> {
    let t = match load_trace(file)? {
        Ok(t) => t,
        Err(rejected) => return Ok(rejected),
    };
    let a = t.algebra();
    let doc: ValuesDoc = read_json(target)?;
    let f = Functional::on(a, reduce_all(a.field(), doc.values()))?;
    let beta = trace::represent_functional(&t, &f)?;
    let text = format!(
        "β = {} {}",
        a.format_element(&beta),
        fmt_list(beta.coords())
    );
    Ok(Report::new(
        &RepresentReport {
            beta: coords(&beta),
        },
        text,
        0,
    ))
}

/// The trace to use on `spec`: the `--trace` file if given, otherwise a
/// constructed one (generator presentation) or the first one found by search
/// (table presentation).
fn resolve_trace(
    ctx: &Ctx,
    spec: &AlgebraSpec,
    file: Option<&Path>,
) -> anyhow::Result<Result<Trace, Report>> {
    if let Some(path) = file {
        let t = match load_trace(path)? {
            Ok(t) => t,
            rejected => return Ok(rejected),
        };
        if !t.algebra().same_structure(&spec.build()?) {
            bail!(
                "trace in {} lives on a different algebra than the code",
                path.display()
            );
        }
        return Ok(Ok(t));
    }
    if let Some(gens) = spec.generators()? {
        return Ok(Ok(trace::multivariate_trace(&gens, &ctx.opts)?));
    }
    let a = spec.build()?;
    match trace::search_traces(&a, &ctx.limits)? {
        Some(f) => Ok(Ok(Trace::new(a, f)?)),
        None => Ok(Err(Report::new(
            &SearchNone {
                algebra: spec,
                found: false,
            },
            "none".into(),
            2,
        ))),
    }
}

fn code_report(code: &CodeOverF, ctx: &Ctx, with_codewords: bool) -> anyhow::Result<Report> {
    let params = code.params(&ctx.limits)?;
    let report = CodeReport::new(code, params, with_codewords);
    let mut text = format!("{params} code over F_{}", code.field().p());
    match report.quasicyclic {
        Some(l) => {
            let _ = write!(text, ", quasicyclic index {l}");
        }
        None => text.push_str(", not quasicyclic"),
    }
    let _ = write!(text, "\n{} codewords", code.size());
    if with_codewords {
        for w in code.codewords() {
            let _ = write!(text, "\n{}", fmt_list(w));
        }
    }
    Ok(Report::new(&report, text, 0))
}

#[derive(Serialize)]
struct DualCodeReport<'a> {
    algebra: &'a AlgebraSpec,
    n: usize,
    size: usize,
    rows: Vec<Vec<Vec<u32>>>,
}

fn code(ctx: &Ctx, cmd: &CodeCmd) -> anyhow::Result<Report> {
    match cmd {
        CodeCmd::Params { file, out } => {
            let doc: FieldCodeDoc = read_json(file)?;
            code_report(&doc.build()?, ctx, out.codewords)
        }
        CodeCmd::TraceCode { file, trace, out } => {
            let doc: CodeDoc = read_json(file)?;
            let t = match resolve_trace(ctx, &doc.algebra, trace.as_deref())? {
                Ok(t) => t,
                Err(r) => return Ok(r),
            };
            let c = doc.build_on(t.algebra().clone())?;
            code_report(&codes::trace_code(&t, &c, &ctx.limits)?, ctx, out.codewords)
        }
        CodeCmd::SubfieldSubcode { file, out } => {
            let doc: CodeDoc = read_json(file)?;
            code_report(
                &codes::subfield_subcode(&doc.build()?, &ctx.limits)?,
                ctx,
                out.codewords,
            )
        }
        CodeCmd::SubfieldCode {
            file,
            trace,
            basis,
            out,
        } => {
            let doc: CodeDoc = read_json(file)?;
            let t = match resolve_trace(ctx, &doc.algebra, trace.as_deref())? {
                Ok(t) => t,
                Err(r) => return Ok(r),
            };
            let c = doc.build_on(t.algebra().clone())?;
            let basis = element_list(t.algebra(), basis.as_deref())?;
            code_report(&codes::subfield_code(&c, &t, &basis)?, ctx, out.codewords)
        }
        CodeCmd::Dual { file } => {
            let doc: CodeDoc = read_json(file)?;
            let c = doc.build()?;
            let dual = codes::dual_code(&c, &ctx.limits)?;
            let a = c.algebra();
            let mut text = format!("dual over {a}: {} words of length {}", dual.len(), c.len());
            for w in &dual {
                let parts: Vec<String> = w.iter().map(|e| a.format_element(e)).collect();
                let _ = write!(text, "\n({})", parts.join(", "));
            }
            let report = DualCodeReport {
                algebra: &doc.algebra,
                n: c.len(),
                size: dual.len(),
                rows: dual
                    .iter()
                    .map(|w| w.iter().map(coords).collect())
                    .collect(),
            };
            Ok(Report::new(&report, text, 0))
        }
        CodeCmd::Cd { file, trace, out } => {
            let doc: DefiningSequenceDoc = read_json(file)?;
            let t = match resolve_trace(ctx, &doc.algebra, trace.as_deref())? {
                Ok(t) => t,
                Err(r) => return Ok(r),
            };
            let seq = doc.sequence(t.algebra())?;
            code_report(
                &codes::defining_sequence_code(&t, &seq)?,
                ctx,
                out.codewords,
            )
        }
    }
}

#[derive(Serialize)]
struct DualityReport {
    holds: bool,
    n: usize,
    trace_of_dual: usize,
    dual_of_subcode: usize,
}

fn check_duality(ctx: &Ctx, file: &Path, trace: Option<&Path>) -> anyhow::Result<Report> {
    let doc: CodeDoc = read_json(file)?;
    let t = match resolve_trace(ctx, &doc.algebra, trace)? {
        Ok(t) => t,
        Err(r) => return Ok(r),
    };
    let c = doc.build_on(t.algebra().clone())?;
    let (lhs, rhs) = codes::duality_sides(&t, &c, &ctx.limits)?;
    let holds = lhs == rhs;
    let report = DualityReport {
        holds,
        n: c.len(),
        trace_of_dual: lhs.size(),
        dual_of_subcode: rhs.size(),
    };
    let text = format!(
        "trace of dual: {} codewords\ndual of subfield subcode: {} codewords\n{}",
        lhs.size(),
        rhs.size(),
        if holds { "equal" } else { "differ" }
    );
    Ok(Report::new(&report, text, if holds { 0 } else { 2 }))
}
