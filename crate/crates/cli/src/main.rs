use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use prook::bounds::Bounds;
use prook::diagram::binomial;
use prook::gl11::{decomposition_table, format_tensor, Gl11Tensor};
use prook::rook_algebra::matrix_unit;
use prook::scalar::parse_rational;
use prook::suites::{run_all, run_suite, Suite, SuiteOptions, DEFAULT_SEED};
use prook::uq::{validate_specialization, QuantumTensor};
use prook::{enumerate_planar, Error, RationalElement, RookDiagram, Subset, VerificationReport};

#[derive(Parser)]
#[command(name = "prook", version, about = "Exact computations with planar rook algebras and gl(1|1) tensor powers")]
struct Cli {
    /// Worker threads for the parallel checks (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// List the planar rook diagrams on n vertices
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only diagrams with exactly this many edges
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Multiply diagrams or algebra elements left to right
    Multiply {
        /// JSON documents; reads standard input when none are given or for "-"
        files: Vec<String>,
        /// Replace every diagram d by its matrix unit X_d before multiplying
        #[arg(long)]
        matrix_units: bool,
    },
    /// Multiplicities of the irreducible summands of the k-th tensor power
    Decompose {
        #[arg(long)]
        k: usize,
        /// Label summands for the quantum group
        #[arg(long)]
        quantum: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// The highest weight vector v_s (or its partner) in the k-th tensor power
    Vector {
        #[arg(long)]
        k: usize,
        /// Comma-separated members of s within 1..k-1, empty for the empty set
        #[arg(long, default_value = "")]
        subset: String,
        /// Apply the lowering operator
        #[arg(long)]
        lowered: bool,
        #[arg(long)]
        quantum: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
        #[arg(long, conflicts_with = "k")]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Specialization point for the quantum suites, as num/den
        #[arg(long, default_value = "2/1", allow_hyphen_values = true)]
        q0: String,
        /// Seed for sampled checks
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include wall-clock timings (makes output run-dependent)
        #[arg(long)]
        timings: bool,
    },
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&'static str> = Suite::ALL.iter().map(|s| s.name()).collect();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

/// Errors carrying an exit code.
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

/// Bound and parameter errors are usage errors, everything else is not.
fn classify(e: Error) -> Failure {
    match e {
        Error::BoundExceeded { .. } | Error::InvalidSpecialization { .. } => usage(e),
        other => Failure::Runtime(other.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool");
    }
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(e) | Failure::Runtime(e)) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .any(|c| c.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe))
}

fn run(command: Command, out: &mut impl Write) -> Result<bool, Failure> {
    let bounds = Bounds::from_env();
    match command {
        Command::Enumerate { n, edges, format } => enumerate(n, edges, format, &bounds, out),
        Command::Multiply { files, matrix_units } => multiply(&files, matrix_units, out),
        Command::Decompose { k, quantum, format } => decompose(k, quantum, format, out),
        Command::Vector { k, subset, lowered, quantum, format } => vector(k, &subset, lowered, quantum, format, &bounds, out),
        Command::Verify { suite, n, k, q0, seed, format, timings } => {
            let q0 = parse_rational(&q0).map_err(usage)?;
            let opts = SuiteOptions { q0, seed, bounds };
            verify(&suite, n.or(k), &opts, format, timings, out)
        }
    }
}

fn write_json(out: &mut impl Write, value: &Value) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn enumerate(n: usize, edges: Option<usize>, format: Format, bounds: &Bounds, out: &mut impl Write) -> Result<bool, Failure> {
    if n > bounds.enumerate_n {
        let count = match edges {
            Some(l) => binomial(n as u64, l as u64).pow(2),
            None => binomial(2 * n as u64, n as u64),
        };
        return Err(usage(anyhow!(
            "n = {n} exceeds the enumeration cap {} (it would produce {count} diagrams)",
            bounds.enumerate_n
        )));
    }
    let diagrams = enumerate_planar(n, edges);
    match format {
        Format::Json => {
            let list: Vec<Value> = diagrams.iter().map(|d| serde_json::to_value(d).expect("serializes")).collect();
            write_json(out, &json!({ "n": n, "count": diagrams.len(), "diagrams": list }))?;
        }
        Format::Table => {
            writeln!(out, "{:>6}  {:<16} {:<16} edges", "#", "bottom", "top").map_err(anyhow::Error::from)?;
            for (i, d) in diagrams.iter().enumerate() {
                let mut edges: Vec<String> = d.edges().iter().map(|e| format!("({},{})", e.bottom, e.top)).collect();
                if edges.is_empty() {
                    edges.push("-".into());
                }
                writeln!(out, "{:>6}  {:<16} {:<16} {}", i, d.bottoms().to_string(), d.tops().to_string(), edges.join(" "))
                    .map_err(anyhow::Error::from)?;
            }
        }
    }
    Ok(true)
}

enum Operand {
    Diagram(RookDiagram),
    Element(RationalElement),
}

/// Splits standard input into consecutive JSON documents.
fn read_documents(files: &[String]) -> anyhow::Result<Vec<(String, Value)>> {
    let mut docs = Vec::new();
    let mut stdin_read = false;
    let sources: Vec<String> = if files.is_empty() { vec!["-".into()] } else { files.to_vec() };
    for source in sources {
        if source == "-" {
            if stdin_read {
                bail!("standard input given more than once");
            }
            stdin_read = true;
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
            for (i, v) in serde_json::Deserializer::from_str(&text).into_iter::<Value>().enumerate() {
                let v = v.with_context(|| format!("standard input, document {}", i + 1))?;
                docs.push((format!("standard input, document {}", i + 1), v));
            }
        } else {
            let text = std::fs::read_to_string(&source).with_context(|| format!("reading {source}"))?;
            let v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {source}"))?;
            docs.push((source, v));
        }
    }
    Ok(docs)
}

fn parse_operand(value: &Value) -> prook::Result<Operand> {
    if value.get("edges").is_some() {
        let d: RookDiagram = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Operand::Diagram(d))
    } else {
        Ok(Operand::Element(RationalElement::from_json(value)?))
    }
}

fn to_element(op: Operand, matrix_units: bool) -> prook::Result<RationalElement> {
    let element = match op {
        Operand::Diagram(d) => RationalElement::basis(d.into_planar()?),
        Operand::Element(e) => e,
    };
    if !matrix_units {
        return Ok(element);
    }
    let mut out = RationalElement::zero(element.n());
    for (d, c) in element.terms() {
        out = out + matrix_unit::<prook::Rational>(d).scale(c);
    }
    Ok(out)
}

/// Bare diagrams compose as rook diagrams (crossings allowed) and the
/// result is a diagram; as soon as an algebra element or `--matrix-units`
/// is involved, everything is planar and the result is an element.
fn multiply(files: &[String], matrix_units: bool, out: &mut impl Write) -> Result<bool, Failure> {
    let docs = read_documents(files).map_err(usage)?;
    if docs.len() < 2 {
        return Err(usage(anyhow!("multiply needs at least two inputs, got {}", docs.len())));
    }
    let mut operands = Vec::with_capacity(docs.len());
    for (i, (name, v)) in docs.iter().enumerate() {
        let op = parse_operand(v).with_context(|| format!("input {} ({name})", i + 1))?;
        operands.push(op);
    }
    let all_diagrams = operands.iter().all(|o| matches!(o, Operand::Diagram(_)));
    if all_diagrams && !matrix_units {
        let mut diagrams = operands.into_iter().map(|o| match o {
            Operand::Diagram(d) => d,
            Operand::Element(_) => unreachable!(),
        });
        let mut acc = diagrams.next().expect("nonempty");
        for (i, d) in diagrams.enumerate() {
            acc = acc.compose(&d).with_context(|| format!("multiplying by input {}", i + 2))?;
        }
        write_json(out, &serde_json::to_value(&acc).map_err(anyhow::Error::from)?)?;
        return Ok(true);
    }
    let mut elements = Vec::with_capacity(operands.len());
    for (i, op) in operands.into_iter().enumerate() {
        elements.push(to_element(op, matrix_units).with_context(|| format!("input {} ({})", i + 1, docs[i].0))?);
    }
    let mut acc = elements[0].clone();
    for (i, e) in elements.iter().enumerate().skip(1) {
        acc = acc.product(e).with_context(|| format!("multiplying by input {}", i + 1))?;
    }
    write_json(out, &acc.to_json())?;
    Ok(true)
}

fn decompose(k: usize, quantum: bool, format: Format, out: &mut impl Write) -> Result<bool, Failure> {
    if k == 0 {
        return Err(usage(anyhow!("k must be at least 1")));
    }
    let table = decomposition_table(k);
    let label = |m: i64, n: i64| if quantum { format!("L_q[q^{m},q^{n}]") } else { format!("L[{m},{n}]") };
    match format {
        Format::Json => {
            let rows: Vec<Value> =
                table.iter().map(|(w, mult)| json!({ "label": label(w.m, w.n), "m": w.m, "n": w.n, "multiplicity": mult })).collect();
            write_json(out, &json!({ "k": k, "quantum": quantum, "summands": rows }))?;
        }
        Format::Table => {
            for (w, mult) in &table {
                writeln!(out, "{:<16} {}", label(w.m, w.n), mult).map_err(anyhow::Error::from)?;
            }
        }
    }
    Ok(true)
}

fn vector(
    k: usize,
    subset: &str,
    lowered: bool,
    quantum: bool,
    format: Format,
    bounds: &Bounds,
    out: &mut impl Write,
) -> Result<bool, Failure> {
    if k == 0 || k > bounds.highest_weight_k {
        return Err(usage(anyhow!("k must be between 1 and {}", bounds.highest_weight_k)));
    }
    let members = subset
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().with_context(|| format!("bad subset member {s:?}")))
        .collect::<anyhow::Result<Vec<_>>>()
        .map_err(usage)?;
    let s = Subset::new(k - 1, members).map_err(usage)?;
    if quantum {
        let t = QuantumTensor::new(k);
        let v = if lowered { t.lowered_vector(&s) } else { t.highest_weight_vector(&s) }.map_err(classify)?;
        match format {
            Format::Json => write_json(out, &v.to_json())?,
            Format::Table => {
                for (mask, c) in v.terms() {
                    writeln!(out, "{:<24} {}", prook::tensor::basis_word(k, mask), c).map_err(anyhow::Error::from)?;
                }
            }
        }
    } else {
        let t = Gl11Tensor::<prook::Rational>::new(k);
        let v = if lowered { t.lowered_vector(&s) } else { t.highest_weight_vector(&s) }.map_err(classify)?;
        match format {
            Format::Json => write_json(out, &v.to_json())?,
            Format::Table => writeln!(out, "{}", format_tensor(&v)).map_err(anyhow::Error::from)?,
        }
    }
    Ok(true)
}

fn print_report(report: &VerificationReport, format: Format, out: &mut impl Write) -> anyhow::Result<()> {
    match format {
        Format::Json => write_json(out, &serde_json::to_value(report)?),
        Format::Table => {
            for c in &report.claims {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                let params: Vec<String> = c.parameters.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
                writeln!(out, "{status}  {:<28} {:<32} checks={}", c.claim, params.join(" "), c.checks_run)?;
                if let Some(w) = &c.counterexample {
                    writeln!(out, "      counterexample: {w}")?;
                }
            }
            let status = if report.passed() { "PASS" } else { "FAIL" };
            write!(out, "{status}  suite {} ({} checks)", report.suite, report.checks_run)?;
            if let Some(ms) = report.elapsed_ms {
                write!(out, " in {ms} ms")?;
            }
            writeln!(out)?;
            Ok(())
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn verify(
    suite: &str,
    size: Option<usize>,
    opts: &SuiteOptions,
    format: Format,
    timings: bool,
    out: &mut impl Write,
) -> Result<bool, Failure> {
    let start = Instant::now();
    let mut report = if suite == "all" {
        if size.is_some() {
            return Err(usage(anyhow!("verify all runs every suite at its default size; drop --n/--k")));
        }
        validate_specialization(&opts.q0).map_err(usage)?;
        run_all(opts).map_err(classify)?.0
    } else {
        let s = Suite::from_name(suite).ok_or_else(|| usage(anyhow!("unknown suite {suite:?}")))?;
        let size = size.unwrap_or_else(|| s.default_size(&opts.bounds));
        run_suite(s, size, opts).map_err(classify)?
    };
    if timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    print_report(&report, format, out)?;
    Ok(report.passed())
}
