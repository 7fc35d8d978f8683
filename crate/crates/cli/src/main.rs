use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kupershmidt::catalog::{self, RepChoice};
use kupershmidt::deformation::{check_deformation_pair, check_trivial_equivalence};
use kupershmidt::document::{render_json, BivectorStanza};
use kupershmidt::operators::{
    check_pre_lie, is_dual_nijenhuis_pair, is_kupershmidt, is_nijenhuis, is_nijenhuis_pair,
    is_perfect_pair, is_rota_baxter, nijenhuis_pair_semidirect_test, pre_lie_product,
};
use kupershmidt::rep::check_representation;
use kupershmidt::search::{grid_search, SearchConfig, SearchKind, DEFAULT_CAP};
use kupershmidt::structures::{
    are_compatible_kupershmidt, check_bilinear_form, check_form_compatibility,
    check_nt_kupershmidt_condition, hierarchy, is_kdn_structure, is_kn_structure, is_r_matrix,
    is_r_matrix_nijenhuis, is_rbn_structure, is_skew_endomorphism, rbn_to_rmn, rmn_to_rbn,
    Certificate, StructureVerdict,
};
use kupershmidt::{
    Bracket, CheckReport, Document, Error, Execution, LieAlgebra, OperatorSet, Rational,
    Representation, Witness,
};

/// Exact verification of Nijenhuis, Kupershmidt and r-matrix structures.
#[derive(Parser)]
#[command(name = "kupershmidt", version)]
struct Cli {
    /// Emit machine-readable JSON reports.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress reports; only the exit code is meaningful.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity and the representation axioms.
    Validate { file: PathBuf },
    /// Run one predicate on a document.
    Check { kind: CheckKind, file: PathBuf },
    /// Build T_k = N^k T for k = 0..=kmax and run every internal check.
    Hierarchy {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long)]
        sequential: bool,
    },
    /// Convert between Rota-Baxter-Nijenhuis and r-matrix-Nijenhuis data.
    Convert {
        direction: Direction,
        file: PathBuf,
        /// Write the converted document here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate operators with entries from a finite grid.
    Search {
        kind: SearchKind,
        #[arg(long)]
        algebra: String,
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, value_enum, default_value_t = RepArg::Adjoint)]
        representation: RepArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        #[arg(long)]
        sequential: bool,
    },
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    /// Print an entry as a document, optionally with one operator bundle.
    Export {
        name: String,
        #[arg(long)]
        bundle: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum CheckKind {
    Jacobi,
    Representation,
    Nijenhuis,
    RotaBaxter,
    Kupershmidt,
    NijenhuisPair,
    DualNijenhuisPair,
    PerfectPair,
    Semidirect,
    PreLie,
    Deformation,
    TrivialEquivalence,
    Kn,
    Kdn,
    Compatible,
    NtCondition,
    RMatrix,
    Rmn,
    Rbn,
    BilinearForm,
    Skew,
    FormCompatibility,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    RbnToRmn,
    RmnToRbn,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Adjoint,
    Coadjoint,
}

struct Output {
    json: bool,
    quiet: bool,
}

impl Output {
    fn emit(&self, text: impl FnOnce() -> String, json: impl FnOnce() -> serde_json::Value) {
        if self.quiet {
            return;
        }
        if self.json {
            print_stdout(&render_json(&json()));
        } else {
            print_stdout(&text());
        }
    }
}

fn write_stdout(text: &str) {
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_stdout(text: &str) {
    write_stdout(text);
    write_stdout("\n");
}

#[derive(Serialize)]
struct Verdict<'a> {
    kind: &'a str,
    verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    precondition: Option<&'a str>,
    witnesses: &'a [Witness],
    certificates: &'a BTreeMap<String, Certificate>,
}

/// Outcome of a check: either a report or a failed hypothesis.
struct Outcome {
    report: CheckReport,
    precondition: Option<String>,
    certificates: BTreeMap<String, Certificate>,
}

impl From<CheckReport> for Outcome {
    fn from(report: CheckReport) -> Self {
        Self {
            report,
            precondition: None,
            certificates: BTreeMap::new(),
        }
    }
}

impl From<StructureVerdict> for Outcome {
    fn from(v: StructureVerdict) -> Self {
        Self {
            report: v.report,
            precondition: None,
            certificates: v.certificates,
        }
    }
}

/// Turns a failed hypothesis into a failing outcome so it is reported like
/// any other verdict.
fn catch_precondition(r: kupershmidt::Result<Outcome>) -> kupershmidt::Result<Outcome> {
    let failed = |hypothesis: &str, report| {
        Ok(Outcome {
            report,
            precondition: Some(hypothesis.to_string()),
            certificates: BTreeMap::new(),
        })
    };
    match r {
        Err(Error::Precondition { hypothesis, report }) => failed(&hypothesis, report),
        Err(Error::NotLie(report)) => failed("the bracket satisfies the Jacobi identity", report),
        Err(Error::NotRepresentation(report)) => failed("rho is a representation", report),
        other => other,
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotLie(_)
        | Error::NotRepresentation(_)
        | Error::Precondition { .. }
        | Error::CatalogAssertion { .. }
        | Error::NotInvertible
        | Error::NoSolution => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output {
        json: cli.json,
        quiet: cli.quiet,
    };
    match run(cli.command, &out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(command: Command, out: &Output) -> kupershmidt::Result<bool> {
    match command {
        Command::Validate { file } => validate(&load(&file)?, out),
        Command::Check { kind, file } => check(kind, &load(&file)?, out),
        Command::Hierarchy {
            file,
            kmax,
            sequential,
        } => run_hierarchy(&load(&file)?, kmax, execution(sequential), out),
        Command::Convert {
            direction,
            file,
            output,
        } => convert(direction, &load(&file)?, output.as_deref(), out),
        Command::Search {
            kind,
            algebra,
            grid,
            representation,
            cap,
            sequential,
        } => search(
            kind,
            &algebra,
            &grid,
            representation,
            SearchConfig {
                cap,
                execution: execution(sequential),
            },
            out,
        ),
        Command::Catalog { command } => match command {
            CatalogCommand::List => catalog_list(out),
            CatalogCommand::Export {
                name,
                bundle,
                output,
            } => {
                let entry = catalog::get_entry(&name)?;
                let doc = Document::from_catalog(&entry, bundle.as_deref())?;
                write_document(&doc, output.as_deref())?;
                Ok(true)
            }
        },
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn load(path: &Path) -> kupershmidt::Result<Document> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn write_document(doc: &Document, path: Option<&Path>) -> kupershmidt::Result<()> {
    let text = doc.to_json();
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", p.display()))),
        None => {
            write_stdout(&text);
            Ok(())
        }
    }
}

fn validate(doc: &Document, out: &Output) -> kupershmidt::Result<bool> {
    let bracket = doc.bracket()?;
    let mut lines = Vec::new();
    let jacobi = bracket.check_jacobi();
    lines.push(format!("jacobi: {jacobi}"));
    let mut report = jacobi;
    if doc.representation.is_some() {
        let rho = doc.representation(&bracket)?;
        let r = check_representation(&bracket, &rho)?;
        lines.push(format!("representation: {r}"));
        report = report.merge(r);
    }
    let outcome = Outcome::from(report);
    emit_outcome(out, "validate", &outcome, Some(lines.join("\n")));
    Ok(outcome.report.passed())
}

/// The algebra with its representation, both validated.
fn context(doc: &Document) -> kupershmidt::Result<(LieAlgebra, Representation)> {
    let g = doc.algebra()?;
    let rho = doc.representation(&g)?;
    let report = check_representation(&g, &rho)?;
    if !report.passed() {
        return Err(Error::NotRepresentation(report));
    }
    Ok((g, rho))
}

fn check(kind: CheckKind, doc: &Document, out: &Output) -> kupershmidt::Result<bool> {
    let name = kind
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let op = |key: &str| doc.operator(key).cloned();
    let outcome = catch_precondition((|| -> kupershmidt::Result<Outcome> {
        use CheckKind as K;
        Ok(match kind {
            K::Jacobi => doc.bracket()?.check_jacobi().into(),
            K::Representation => {
                let g = doc.algebra()?;
                check_representation(&g, &doc.representation(&g)?)?.into()
            }
            K::Nijenhuis => is_nijenhuis(&*doc.algebra()?, &op("N")?)?.into(),
            K::RotaBaxter => is_rota_baxter(&*doc.algebra()?, &op("R")?)?.into(),
            K::RMatrix => is_r_matrix(&*doc.algebra()?, &doc.bivector()?)?.into(),
            K::Rmn => is_r_matrix_nijenhuis(&doc.algebra()?, &doc.bivector()?, &op("N")?)?.into(),
            K::Rbn => is_rbn_structure(&doc.algebra()?, &op("R")?, &op("N")?)?.into(),
            K::BilinearForm => check_bilinear_form(&*doc.algebra()?, &doc.bilinear_form()?)?.into(),
            K::Skew => {
                is_skew_endomorphism(&*doc.algebra()?, &op("R")?, &doc.bilinear_form()?)?.into()
            }
            K::FormCompatibility => {
                check_form_compatibility(&*doc.algebra()?, &doc.bilinear_form()?, &op("N")?)?.into()
            }
            _ => {
                let (g, rho) = context(doc)?;
                match kind {
                    K::Kupershmidt => is_kupershmidt(&g, &rho, &op("T")?)?.into(),
                    K::NijenhuisPair => is_nijenhuis_pair(&g, &rho, &op("N")?, &op("S")?)?.into(),
                    K::DualNijenhuisPair => {
                        is_dual_nijenhuis_pair(&g, &rho, &op("N")?, &op("S")?)?.into()
                    }
                    K::PerfectPair => is_perfect_pair(&g, &rho, &op("N")?, &op("S")?)?.into(),
                    K::Semidirect => {
                        nijenhuis_pair_semidirect_test(&g, &rho, &op("N")?, &op("S")?)?.into()
                    }
                    K::PreLie => check_pre_lie(&pre_lie_product(&rho, &op("T")?)?).into(),
                    K::Deformation => {
                        check_deformation_pair(&g, &rho, &doc.deformation(&g)?)?.into()
                    }
                    K::TrivialEquivalence => check_trivial_equivalence(
                        &g,
                        &rho,
                        &op("N")?,
                        &op("S")?,
                        &doc.deformation(&g)?,
                    )?
                    .into(),
                    K::Kn => is_kn_structure(&g, &rho, &op("T")?, &op("S")?, &op("N")?)?.into(),
                    K::Kdn => is_kdn_structure(&g, &rho, &op("T")?, &op("S")?, &op("N")?)?.into(),
                    K::Compatible => {
                        are_compatible_kupershmidt(&g, &rho, &op("T1")?, &op("T2")?)?.into()
                    }
                    K::NtCondition => {
                        check_nt_kupershmidt_condition(&g, &rho, &op("T")?, &op("N")?)?.into()
                    }
                    _ => unreachable!("handled above"),
                }
            }
        })
    })())?;
    emit_outcome(out, &name, &outcome, None);
    Ok(outcome.report.passed())
}

fn emit_outcome(out: &Output, kind: &str, o: &Outcome, text: Option<String>) {
    out.emit(
        || {
            let mut s = text.unwrap_or_else(|| match &o.precondition {
                Some(h) => format!("{kind}: FAIL (precondition: {h})\n{}", o.report),
                None => format!("{kind}: {}", o.report),
            });
            for (name, c) in &o.certificates {
                s.push_str(&format!("\n{name}: {}", show_certificate(c)));
            }
            s
        },
        || {
            serde_json::to_value(Verdict {
                kind,
                verdict: o.report.passed(),
                precondition: o.precondition.as_deref(),
                witnesses: &o.report.witnesses,
                certificates: &o.certificates,
            })
            .expect("verdict serializes")
        },
    );
}

fn show_certificate(c: &Certificate) -> String {
    match c {
        Certificate::Matrix(m) => m.to_string(),
        Certificate::Bracket(b) => show_bracket(b),
    }
}

fn show_bracket(b: &Bracket) -> String {
    let entries: Vec<String> = b
        .upper_entries()
        .filter(|(_, _, v)| !v.is_zero())
        .map(|(i, j, v)| format!("[{i},{j}] = {v}"))
        .collect();
    if entries.is_empty() {
        "0".to_string()
    } else {
        entries.join(", ")
    }
}

fn run_hierarchy(
    doc: &Document,
    kmax: usize,
    exec: Execution,
    out: &Output,
) -> kupershmidt::Result<bool> {
    let built = (|| {
        let (g, rho) = context(doc)?;
        hierarchy(
            &g,
            &rho,
            doc.operator("T")?,
            doc.operator("S")?,
            doc.operator("N")?,
            kmax,
            exec,
        )
    })();
    let h = match built {
        Ok(h) => h,
        Err(e) => {
            let outcome = catch_precondition(Err(e))?;
            emit_outcome(out, "hierarchy", &outcome, None);
            return Ok(false);
        }
    };
    out.emit(
        || {
            let mut lines = Vec::new();
            for (k, t) in h.operators.iter().enumerate() {
                let ok = if h.kupershmidt[k] { "PASS" } else { "FAIL" };
                lines.push(format!("T_{k} = {t}  kupershmidt: {ok}"));
            }
            lines.push("compatibility:".to_string());
            for row in &h.compatible {
                let cells: Vec<&str> = row.iter().map(|&c| if c { "Y" } else { "N" }).collect();
                lines.push(format!("  {}", cells.join(" ")));
            }
            lines.push(format!("hierarchy: {}", h.report));
            lines.join("\n")
        },
        || {
            serde_json::json!({
                "kind": "hierarchy",
                "verdict": h.passed(),
                "kmax": kmax,
                "operators": h.operators,
                "kupershmidt": h.kupershmidt,
                "compatible": h.compatible,
                "witnesses": h.report.witnesses,
            })
        },
    );
    Ok(h.passed())
}

fn convert(
    direction: Direction,
    doc: &Document,
    path: Option<&Path>,
    out: &Output,
) -> kupershmidt::Result<bool> {
    let g = doc.algebra()?;
    let form = doc.bilinear_form()?;
    let n = doc.operator("N")?;
    let mut converted = doc.clone();
    let (kind, verdict) = match direction {
        Direction::RbnToRmn => {
            let c = rbn_to_rmn(&g, doc.operator("R")?, n, &form)?;
            let ops = converted.operators.get_or_insert_with(OperatorSet::default);
            ops.r = None;
            ops.pi_sharp = None;
            converted.bivector = Some(BivectorStanza {
                pi_sharp: c.value.into_sharp(),
            });
            ("rbn_to_rmn", c.verdict)
        }
        Direction::RmnToRbn => {
            let c = rmn_to_rbn(&g, &doc.bivector()?, n, &form)?;
            let ops = converted.operators.get_or_insert_with(OperatorSet::default);
            ops.pi_sharp = None;
            ops.r = Some(c.value);
            converted.bivector = None;
            ("rmn_to_rbn", c.verdict)
        }
    };
    write_document(&converted, path)?;
    let outcome = Outcome::from(verdict);
    if path.is_some() {
        emit_outcome(out, kind, &outcome, None);
    } else if !out.quiet {
        eprintln!("{kind}: {}", outcome.report);
    }
    Ok(outcome.report.passed())
}

fn parse_grid(grid: &str) -> kupershmidt::Result<Vec<Rational>> {
    grid.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

fn search(
    kind: SearchKind,
    algebra: &str,
    grid: &str,
    representation: RepArg,
    config: SearchConfig,
    out: &Output,
) -> kupershmidt::Result<bool> {
    let entry = catalog::get_entry(algebra)?;
    let choice = match representation {
        RepArg::Adjoint => RepChoice::Adjoint,
        RepArg::Coadjoint => RepChoice::Coadjoint,
    };
    let grid = parse_grid(grid)?;
    let results = grid_search(
        &entry.algebra,
        entry.representation(choice),
        kind,
        &grid,
        config,
    )?;
    out.emit(
        || {
            let mut lines = vec![format!(
                "{} {kind} operators on {algebra} ({})",
                results.len(),
                choice.name()
            )];
            for (i, ops) in results.iter().enumerate() {
                let fields = serde_json::to_value(ops).expect("operators serialize");
                let parts: Vec<String> = fields
                    .as_object()
                    .expect("operator stanza is an object")
                    .iter()
                    .map(|(k, v)| format!("{k} = {}", render_rows(v)))
                    .collect();
                lines.push(format!("  #{}: {}", i + 1, parts.join(", ")));
            }
            lines.join("\n")
        },
        || {
            serde_json::json!({
                "kind": kind.name(),
                "algebra": algebra,
                "representation": choice.name(),
                "count": results.len(),
                "results": results,
            })
        },
    );
    Ok(true)
}

fn render_rows(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(render_rows).collect();
            format!("[{}]", inner.join(", "))
        }
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn catalog_list(out: &Output) -> kupershmidt::Result<bool> {
    let entries = catalog::list_catalog()
        .into_iter()
        .map(catalog::get_entry)
        .collect::<kupershmidt::Result<Vec<_>>>()?;
    out.emit(
        || {
            let mut lines = Vec::new();
            for e in &entries {
                lines.push(format!(
                    "{} (dim {}): {}",
                    e.name,
                    e.algebra.dim(),
                    e.provenance
                ));
                for b in &e.bundles {
                    let asserts: Vec<String> = b.asserts.iter().map(|a| a.to_string()).collect();
                    lines.push(format!(
                        "  {} [{}]: {}",
                        b.name,
                        b.representation.name(),
                        asserts.join(", ")
                    ));
                }
            }
            lines.join("\n")
        },
        || {
            serde_json::Value::Array(
                entries
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "name": e.name,
                            "dim": e.algebra.dim(),
                            "provenance": e.provenance,
                            "bilinear_form": e.bilinear_form.is_some(),
                            "bundles": e.bundles.iter().map(|b| serde_json::json!({
                                "name": b.name,
                                "representation": b.representation.name(),
                                "asserts": b.asserts.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                            })).collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            )
        },
    );
    Ok(true)
}
