//! The `kbracket` command line: `bracket`, `check` and `enumerate`.
//!
//! Exit codes: 0 success, 1 a theorem check failed with all hypotheses
//! satisfied, 2 input error, 3 a resource cap was exceeded.

use std::io::Write;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bracket::{kauffman_bracket_cached, BracketCache, BracketConfig, BracketReport, DEFAULT_MAX_CROSSINGS};
use crate::diagram::format::parse;
use crate::diagram::Diagram;
use crate::error::Error;
use crate::gen::{for_each_diagram, GenSpec, Predicate, DEFAULT_ENUMERATION_CAP};
use crate::laurent::Order;
use crate::tait::{jones_tait_verdict, lemma_bounds, non_alternating_certificate, LinkFlags, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kbracket", version, about = "Kauffman brackets of diagrams in a disk with holes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the bracket of each input diagram.
    Bracket(InputArgs),
    /// Run the breadth theorem, lemma bounds and certificates.
    Check(InputArgs),
    /// Enumerate diagrams and check each one.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    JsonLines,
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long, value_enum, default_value = "human")]
    pub format: OutputFormat,
    /// Worker threads for the state sum (0 = all cores).
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub max_crossings: Option<usize>,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Diagram files.
    #[arg(value_name = "FILE")]
    pub files: Vec<PathBuf>,
    #[arg(long = "input", value_name = "FILE")]
    pub input: Vec<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, default_value_t = 4)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0)]
    pub n_min: usize,
    #[arg(long, default_value_t = 1)]
    pub genus: usize,
    /// Comma-separated filters: connected, alternating, z2trivial,
    /// z2nontrivial, fullgenus, nonugatory, simple.
    #[arg(long, value_delimiter = ',')]
    pub predicate: Vec<Predicate>,
    /// Quotient by reflections and puncture permutations too.
    #[arg(long)]
    pub symmetric: bool,
    /// Largest number of free loops at `n = 0`.
    #[arg(long, default_value_t = 2)]
    pub max_loops: usize,
    /// Accepted for reproducibility; exhaustive enumeration is deterministic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub common: Common,
}

/// Parses arguments and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let result = match &cli.command {
        Command::Bracket(a) => cmd_bracket(a, out),
        Command::Check(a) => cmd_check(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CrossingCap { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

fn config(c: &Common) -> BracketConfig {
    BracketConfig { jobs: c.jobs, max_crossings: c.max_crossings.unwrap_or(DEFAULT_MAX_CROSSINGS), keep_states: false }
}

pub fn load(path: &Path) -> Result<Diagram, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    Ok(parse(&text)?)
}

fn inputs(a: &InputArgs) -> Result<Vec<PathBuf>, Error> {
    let files: Vec<PathBuf> = a.files.iter().chain(&a.input).cloned().collect();
    if files.is_empty() {
        return Err(Error::Io {
            path: "-".into(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no input files"),
        });
    }
    Ok(files)
}

fn order_str(o: Order) -> Option<i64> {
    match o {
        Order::Finite(v) => Some(v),
        _ => None,
    }
}

#[derive(Serialize)]
struct BracketRecord {
    record: &'static str,
    input: String,
    bracket: String,
    breadth: i64,
    ord_inf: Option<i64>,
    ord_zero: Option<i64>,
    crossings: usize,
    genus: usize,
    diagram_genus: usize,
    z2_class: String,
    z2_trivial: bool,
    complexes: usize,
}

fn bracket_record(input: String, d: &Diagram, r: &BracketReport) -> BracketRecord {
    let z2 = d.z2_class();
    BracketRecord {
        record: "bracket",
        input,
        bracket: r.bracket.to_string(),
        breadth: r.breadth,
        ord_inf: order_str(r.bracket.ord_inf()),
        ord_zero: order_str(r.bracket.ord_zero()),
        crossings: r.crossings,
        genus: r.genus,
        diagram_genus: r.diagram_genus,
        z2_class: z2.to_string(),
        z2_trivial: z2.is_zero(),
        complexes: r.complexes,
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, format: OutputFormat, record: &T, human: impl FnOnce() -> String) {
    let line = match format {
        OutputFormat::JsonLines => serde_json::to_string(record).expect("records serialize"),
        OutputFormat::Human => human(),
    };
    let _ = writeln!(out, "{line}");
}

fn fmt_order(o: Option<i64>) -> String {
    o.map_or("-".into(), |v| v.to_string())
}

pub fn cmd_bracket(a: &InputArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let cfg = config(&a.common);
    let cache = BracketCache::new();
    for path in inputs(a)? {
        let d = load(&path)?;
        let r = kauffman_bracket_cached(&d, &cfg, &cache)?;
        let rec = bracket_record(path.display().to_string(), &d, &r);
        emit(out, a.common.format, &rec, || {
            let mut s = format!(
                "{}\n  <D> = {}\n  breadth {}  ord_inf {}  ord_0 {}\n  n = {}  g = {}  g(D) = {}  Z/2 class {}",
                rec.input,
                rec.bracket,
                rec.breadth,
                fmt_order(rec.ord_inf),
                fmt_order(rec.ord_zero),
                rec.crossings,
                rec.genus,
                rec.diagram_genus,
                rec.z2_class
            );
            if !rec.z2_trivial {
                s.push_str("\n  note: Z/2-nontrivial, so the bracket vanishes");
            }
            s
        });
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckRecord {
    record: &'static str,
    input: String,
    bracket: String,
    breadth: i64,
    crossings: usize,
    diagram_genus: usize,
    theorem: crate::tait::TheoremVerdict,
    lemma: crate::tait::LemmaReport,
    lemma_consistent: bool,
    alternating: bool,
    adequate: (bool, bool),
    nugatory: Vec<u32>,
    certificate: Option<crate::tait::Certificate>,
}

fn check_one(input: String, d: &Diagram, r: &BracketReport) -> CheckRecord {
    let theorem = jones_tait_verdict(d, r);
    let lemma = lemma_bounds(d, r);
    let flags = LinkFlags::default();
    CheckRecord {
        record: "check",
        input,
        bracket: r.bracket.to_string(),
        breadth: r.breadth,
        crossings: d.crossing_count(),
        diagram_genus: d.diagram_genus(),
        lemma_consistent: lemma.consistent(),
        alternating: theorem.hypotheses.alternating,
        adequate: d.adequacy(),
        nugatory: d.simplicity().nugatory,
        certificate: non_alternating_certificate(&r.bracket, &flags, None),
        theorem,
        lemma,
    }
}

fn check_human(c: &CheckRecord) -> String {
    let h = &c.theorem.hypotheses;
    let mut s = format!(
        "{}\n  <D> = {}\n  theorem: {} (breadth {} vs 4n+4-4g(D)-4k = {}, k = {})",
        c.input, c.bracket, c.theorem.verdict, c.theorem.actual, c.theorem.expected, h.k
    );
    if c.theorem.verdict == Verdict::Inapplicable {
        let mut missing = Vec::new();
        for (ok, name) in [
            (h.connected, "disconnected"),
            (h.alternating, "not alternating"),
            (h.z2_trivial, "Z/2-nontrivial"),
            (h.full_genus, "g(D) < g"),
            (h.no_nugatory, "nugatory crossing"),
            (h.no_twice_external, "crossing meets one external face twice"),
        ] {
            if !ok {
                missing.push(name);
            }
        }
        s.push_str(&format!(" [{}]", missing.join(", ")));
    }
    let l = &c.lemma;
    s.push_str(&format!(
        "\n  lemma: {} (ineq1 {} <= {}, ineq2 {} <= {}{})",
        if !l.applicable {
            "inapplicable"
        } else if c.lemma_consistent {
            "pass"
        } else {
            "fail"
        },
        l.ineq1.breadth,
        fmt_order(l.ineq1.bound),
        l.ineq2.lhs,
        l.ineq2.rhs,
        if l.ineq2.asserted { "" } else { " not asserted" }
    ));
    s.push_str(&format!(
        "\n  alternating {}  adequate (+{}, -{})  nugatory {:?}",
        c.alternating, c.adequate.0, c.adequate.1, c.nugatory
    ));
    if let Some(cert) = &c.certificate {
        s.push_str(&format!("\n  certificate {}: {:?}", cert.kind(), cert));
    }
    s
}

fn is_counterexample(c: &CheckRecord) -> bool {
    c.theorem.verdict == Verdict::Fail || !c.lemma_consistent
}

pub fn cmd_check(a: &InputArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let cfg = config(&a.common);
    let cache = BracketCache::new();
    let mut code = EXIT_OK;
    for path in inputs(a)? {
        let d = load(&path)?;
        let r = kauffman_bracket_cached(&d, &cfg, &cache)?;
        let rec = check_one(path.display().to_string(), &d, &r);
        if is_counterexample(&rec) {
            code = EXIT_COUNTEREXAMPLE;
        }
        emit(out, a.common.format, &rec, || check_human(&rec));
    }
    Ok(code)
}

#[derive(Serialize)]
struct EnumRecord {
    record: &'static str,
    index: usize,
    crossings: usize,
    diagram: String,
    bracket: String,
    breadth: i64,
    theorem: Verdict,
    lemma_consistent: bool,
}

#[derive(Serialize, Default)]
struct Summary {
    record: &'static str,
    diagrams: usize,
    pass: usize,
    fail: usize,
    inapplicable: usize,
    lemma_failures: usize,
}

pub fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let mut spec = GenSpec::new(a.n_max, a.genus);
    spec.min_crossings = a.n_min;
    spec.predicates = a.predicate.clone();
    spec.symmetric = a.symmetric;
    spec.max_loops = a.max_loops;
    spec.cap = a.common.max_crossings.unwrap_or(DEFAULT_ENUMERATION_CAP);
    let cfg = config(&a.common);
    let cache = BracketCache::new();
    let mut summary = Summary { record: "summary", ..Default::default() };
    let mut failure = None;
    for_each_diagram(&spec, |d| {
        let r = match kauffman_bracket_cached(&d, &cfg, &cache) {
            Ok(r) => r,
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        };
        let c = check_one(String::new(), &d, &r);
        match c.theorem.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Inapplicable => summary.inapplicable += 1,
        }
        if !c.lemma_consistent {
            summary.lemma_failures += 1;
        }
        let rec = EnumRecord {
            record: "diagram",
            index: summary.diagrams,
            crossings: d.crossing_count(),
            diagram: crate::diagram::format::serialize(&d),
            bracket: c.bracket.clone(),
            breadth: c.breadth,
            theorem: c.theorem.verdict,
            lemma_consistent: c.lemma_consistent,
        };
        summary.diagrams += 1;
        emit(out, a.common.format, &rec, || {
            format!(
                "#{} n={} breadth {} theorem {} <D> = {}",
                rec.index, rec.crossings, rec.breadth, rec.theorem, rec.bracket
            )
        });
        ControlFlow::Continue(())
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    emit(out, a.common.format, &summary, || {
        format!(
            "{} diagrams: {} pass, {} fail, {} inapplicable, {} lemma failures",
            summary.diagrams, summary.pass, summary.fail, summary.inapplicable, summary.lemma_failures
        )
    });
    Ok(if summary.fail > 0 || summary.lemma_failures > 0 { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
}
