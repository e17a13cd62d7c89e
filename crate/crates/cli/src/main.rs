use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use subdivision_spectra::closed_form::MergedVariant;
use subdivision_spectra::constructions::{merged_subdivision, named_op, MergedTriple};
use subdivision_spectra::exact::{char_poly, kirchhoff_exact, spanning_tree_count};
use subdivision_spectra::invariants::{verify_invariants, InvariantForm, Quantity};
use subdivision_spectra::io::{graph_arg, poly_json, spectrum_json, write_graph, RationalJson};
use subdivision_spectra::numeric::eigenvalues_of;
use subdivision_spectra::suite::{
    builtin_suite, parse_suite, run_suite, CaseParams, Formula, FormulaValue, SuiteReport,
};
use subdivision_spectra::{Error, Graph, MatrixKind};

/// Merged subdivision graphs: constructions, spectra and invariants.
#[derive(Parser)]
#[command(name = "subspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and write it as JSON.
    Construct(ConstructArgs),
    /// Spectrum of a graph matrix or of a closed form.
    Spectrum(SpectrumArgs),
    /// Exact characteristic polynomial, ascending coefficients.
    Charpoly(CharpolyArgs),
    /// Number of spanning trees.
    Tau(InvariantArgs),
    /// Kirchhoff index.
    Kirchhoff(InvariantArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Operation name, or `merged` for an explicit (H1, H2).
    #[arg(long)]
    op: String,
    /// Base graph: a JSON file or a family spec such as `cycle:4`.
    #[arg(long)]
    g: String,
    /// Second graph for `overlay`.
    #[arg(long)]
    h: Option<String>,
    #[arg(long)]
    h1: Option<String>,
    #[arg(long)]
    h2: Option<String>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    Adjacency,
    Laplacian,
    Signless,
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> Self {
        match m {
            MatrixArg::Adjacency => MatrixKind::Adjacency,
            MatrixArg::Laplacian => MatrixKind::Laplacian,
            MatrixArg::Signless => MatrixKind::Signless,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpectrumMethod {
    Oracle,
    ClosedForm,
}

/// Formula inputs. Graphs are files or family specs.
#[derive(Args, Default)]
struct FormulaParams {
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    h: Option<String>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    t1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t3: Option<String>,
}

impl FormulaParams {
    fn to_case(&self) -> CaseParams {
        CaseParams {
            g: self.g.clone(),
            h: self.h.clone(),
            p: self.p,
            q: self.q,
            n: self.n,
            i: self.i,
            t: self.t,
            t1: self.t1.clone(),
            t2: self.t2.clone(),
            t3: self.t3.clone(),
        }
    }
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, value_enum, default_value = "adjacency")]
    matrix: MatrixArg,
    #[arg(long, value_enum, default_value = "oracle")]
    method: SpectrumMethod,
    /// Closed-form id, e.g. `merged-l:plain`.
    #[arg(long)]
    formula: Option<String>,
    /// Graph for the oracle method.
    graph: Option<String>,
    #[command(flatten)]
    params: FormulaParams,
}

#[derive(Args)]
struct CharpolyArgs {
    #[arg(long, value_enum, default_value = "adjacency")]
    matrix: MatrixArg,
    graph: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvariantMethod {
    Oracle,
    ClosedForm,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantVariant {
    Plain,
    CompleteKm,
    LineComplement,
    Star,
}

#[derive(Args)]
struct InvariantArgs {
    #[arg(long, value_enum, default_value = "oracle")]
    method: InvariantMethod,
    /// Construction for the closed form; `star` uses only `--h`.
    #[arg(long, value_enum)]
    variant: Option<InvariantVariant>,
    /// Graph for the oracle method.
    graph: Option<String>,
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    h: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct VerifyArgs {
    /// Built-in suite name or a JSON file of cases.
    #[arg(long, default_value = "paper-core")]
    suite: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Overrides every case tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    VerificationFailed,
}

fn emit<T: Serialize + ?Sized>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("output serializes"));
}

fn usage(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}

fn construct(args: &ConstructArgs) -> Result<Outcome, Error> {
    let g = graph_arg(&args.g)?;
    let built = if args.op == "merged" {
        let (Some(h1), Some(h2)) = (&args.h1, &args.h2) else {
            return Err(usage("`merged` needs --h1 and --h2"));
        };
        merged_subdivision(&MergedTriple::new(g, graph_arg(h1)?, graph_arg(h2)?)?)?
    } else {
        let h = args.h.as_deref().map(graph_arg).transpose()?;
        named_op(&args.op, &g, h.as_ref())?
    };
    match &args.output {
        Some(path) => write_graph(path, &built)?,
        None => println!("{}", built.to_json()),
    }
    Ok(Outcome::Ok)
}

fn spectrum(args: &SpectrumArgs) -> Result<Outcome, Error> {
    let values = match args.method {
        SpectrumMethod::Oracle => {
            let g = args
                .graph
                .as_deref()
                .ok_or_else(|| usage("the oracle method needs a graph"))?;
            eigenvalues_of(&graph_arg(g)?, args.matrix.into())
        }
        SpectrumMethod::ClosedForm => {
            let id = args
                .formula
                .as_deref()
                .ok_or_else(|| usage("the closed-form method needs --formula"))?;
            let formula: Formula = id.parse()?;
            match formula.evaluate(&args.params.to_case())? {
                FormulaValue::Spectrum(s) => s,
                FormulaValue::Polynomial(p) => p.real_roots()?,
                FormulaValue::Invariant(_) => {
                    return Err(usage(format!("`{id}` is not a spectral formula; use tau or kirchhoff")))
                }
            }
        }
    };
    emit(&spectrum_json(&values));
    Ok(Outcome::Ok)
}

fn charpoly(args: &CharpolyArgs) -> Result<Outcome, Error> {
    let g = graph_arg(&args.graph)?;
    let p = char_poly(&g.matrix(args.matrix.into()))?;
    emit(&poly_json(&p));
    Ok(Outcome::Ok)
}

fn invariant_form(args: &InvariantArgs) -> Result<InvariantForm, Error> {
    let variant = args
        .variant
        .ok_or_else(|| usage("closed forms need --variant"))?;
    let need = |v: &Option<String>, name: &str| -> Result<Graph, Error> {
        graph_arg(v.as_deref().ok_or_else(|| usage(format!("missing --{name}")))?)
    };
    let merged = |v: MergedVariant| -> Result<InvariantForm, Error> {
        Ok(InvariantForm::Merged {
            variant: v,
            g: need(&args.g, "g")?,
            h: need(&args.h, "h")?,
        })
    };
    match variant {
        InvariantVariant::Plain => merged(MergedVariant::Plain),
        InvariantVariant::CompleteKm => merged(MergedVariant::CompleteKm),
        InvariantVariant::LineComplement => merged(MergedVariant::LineComplement),
        InvariantVariant::Star => Ok(InvariantForm::Star { h: need(&args.h, "h")? }),
    }
}

fn invariant(args: &InvariantArgs, quantity: Quantity) -> Result<Outcome, Error> {
    if args.method == InvariantMethod::Oracle {
        let g = match args.graph.as_deref() {
            Some(s) => graph_arg(s)?,
            None => invariant_form(args)?.construct()?,
        };
        let exact = match quantity {
            Quantity::Tau => RationalJson {
                num: spanning_tree_count(&g)?.to_string(),
                den: "1".into(),
            },
            Quantity::Kirchhoff => RationalJson::from(&kirchhoff_exact(&g)?),
        };
        emit(&json!({ "exact": exact }));
        return Ok(Outcome::Ok);
    }
    let res = verify_invariants(quantity, &invariant_form(args)?)?;
    if args.method == InvariantMethod::ClosedForm {
        emit(&json!({
            "value": res.closed_form_value,
            "exact": RationalJson::from(&res.closed_form_exact),
        }));
        return Ok(Outcome::Ok);
    }
    emit(&res);
    Ok(if res.agrees {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}

fn table(report: &SuiteReport) {
    let width = report.cases.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
    println!("{:<width$}  {:<16}  {:>10}  note", "id", "status", "residual");
    for c in &report.cases {
        let status = serde_json::to_value(c.status).expect("status serializes");
        let mark = if c.ok { "" } else { " !" };
        let residual = c.max_residual.map(|r| format!("{r:.2e}")).unwrap_or_default();
        println!(
            "{:<width$}  {:<16}  {:>10}  {}{}",
            c.id,
            status.as_str().unwrap_or(""),
            residual,
            c.message.as_deref().unwrap_or(""),
            mark
        );
    }
    println!("{} passed, {} failed", report.passed, report.failed);
}

fn verify(args: &VerifyArgs) -> Result<Outcome, Error> {
    let path = std::path::Path::new(&args.suite);
    let looks_like_file = path.exists() || args.suite.ends_with(".json") || args.suite.contains('/');
    let cases = if looks_like_file {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: args.suite.clone(),
            source,
        })?;
        parse_suite(&text)?
    } else {
        builtin_suite(&args.suite)?
    };
    let report = run_suite(&cases, args.tol);
    match args.format {
        Format::Json => emit(&report),
        Format::Table => table(&report),
    }
    Ok(if report.all_passed {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Charpoly(a) => charpoly(a),
        Command::Tau(a) => invariant(a, Quantity::Tau),
        Command::Kirchhoff(a) => invariant(a, Quantity::Kirchhoff),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_io() {
                ExitCode::from(3)
            } else if matches!(e, Error::Internal(_)) {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
