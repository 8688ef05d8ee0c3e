//! Command-line entry point: parsing, checking, transformation, grounding,
//! and reporting over the textual formats.
//!
//! Exit codes: 0 success (or a check that came out true), 1 a check that
//! came out false (invalid proof, inequivalent formulas, non-tautology),
//! 2 usage or parse errors, 3 resource limits.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use inflogic::ground::{self, GroundError, SolveError};
use inflogic::kalmar::{self, SynthesisError};
use inflogic::library;
use inflogic::proof::check_proof;
use inflogic::semantics::{self, SemanticsError, StableModelReport};
use inflogic::transform::{self, TransformError};
use inflogic::{Signature, SystemLevel};

use inflogic_cli::goldens;
use inflogic_cli::lex::ParseError;
use inflogic_cli::parse::{
    parse_aggregate, parse_atom_list, parse_formula, parse_program, parse_proof, parse_theory,
    print_theory, ParserConfig,
};
use inflogic_cli::records::{
    self, atom_names, candidate_out, summary_out, DiagnosticOut, RunRecord, SignatureOut, TextOut,
};

#[derive(Parser)]
#[command(name = "inflogic", version, about = "Stable models, proof checking, and grounding for set-based propositional formulas")]
struct Cli {
    /// Value of the family-size parameter n in `and{ p(I) : I in 1..n }`
    #[arg(long, global = true)]
    size: Option<u64>,

    /// Cap on the atom count of the exponential enumerations (default 20;
    /// synthesize defaults to 10)
    #[arg(long, global = true)]
    max_atoms: Option<usize>,

    /// Term-depth bound for the grounding universe (default 2)
    #[arg(long, global = true)]
    depth: Option<usize>,

    /// Worker count; enumeration is sequential and results do not depend
    /// on this value
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for randomized property sweeps (reserved; every verb here is
    /// deterministic)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Emit machine-readable JSON records on stdout
    #[arg(long, global = true)]
    records: bool,

    /// Optional key=value defaults (size, max-atoms, depth, jobs, seed);
    /// flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Basic,
    BasicIlem,
    Extended,
    ClassicalExtended,
}

impl From<LevelArg> for SystemLevel {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Basic => SystemLevel::Basic,
            LevelArg::BasicIlem => SystemLevel::BasicIlem,
            LevelArg::Extended => SystemLevel::Extended,
            LevelArg::ClassicalExtended => SystemLevel::ClassicalExtended,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum ReportFormat {
    Text,
    Records,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum EmitFormat {
    Formulas,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformLevel {
    Basic,
    Extended,
}

#[derive(Subcommand)]
enum Command {
    /// Check a proof script against a system level
    CheckProof {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LevelArg::Extended)]
        level: LevelArg,
    },
    /// Enumerate the stable models of a theory file
    StableModels {
        file: PathBuf,
        #[arg(long, value_enum)]
        report_format: Option<ReportFormat>,
    },
    /// Decide strong equivalence of two formula files
    SeCheck { left: PathBuf, right: PathBuf },
    /// Reduct of a formula with respect to an interpretation
    Reduct {
        file: PathBuf,
        /// Comma-separated true atoms (empty for the empty interpretation)
        #[arg(long, default_value = "")]
        interpretation: String,
    },
    /// Ground a program over its depth-bounded universe
    Ground {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = EmitFormat::Formulas)]
        emit: EmitFormat,
    },
    /// Ground a program and enumerate its stable models
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        report_format: Option<ReportFormat>,
    },
    /// Compile one cardinality aggregate over an explicit atom domain
    TranslateAggregate {
        /// Aggregate text, e.g. "2{p(a,Y)}" or "{p(X)}0"
        aggregate: String,
        /// Comma-separated ground atoms the aggregate ranges over
        #[arg(long, default_value = "")]
        domain: String,
    },
    /// Synthesize a checkable proof of a tautology
    Synthesize { file: PathBuf },
    /// Print a theorem from the catalog (without a name: list the catalog)
    Library {
        name: Option<String>,
        /// Write the proof script here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transform a proof into a proof of its reduct sequent
    TransformReduct {
        file: PathBuf,
        #[arg(long, default_value = "")]
        interpretation: String,
        /// System of the input proof (basic stays basic; extended becomes
        /// classical-extended)
        #[arg(long, value_enum, default_value_t = TransformLevel::Basic)]
        level: TransformLevel,
    },
    /// Regenerate the golden proofs, programs, theories, and reports
    EmitGoldens { dir: PathBuf },
}

// Failures that abort the run, with their exit codes; "checked false"
// results are not failures and are handled per verb.
enum Failure {
    Usage(String),
    Limit(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Limit(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Limit(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SemanticsError> for Failure {
    fn from(e: SemanticsError) -> Self {
        match e {
            SemanticsError::SignatureTooLarge { .. } | SemanticsError::AtomLimitExceeded { .. } => {
                Failure::Limit(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<GroundError> for Failure {
    fn from(e: GroundError) -> Self {
        match e {
            GroundError::AggregateDomainTooLarge { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Ground(g) => g.into(),
            SolveError::Semantics(s) => s.into(),
        }
    }
}

impl From<library::LibraryError> for Failure {
    fn from(e: library::LibraryError) -> Self {
        match e {
            library::LibraryError::SizeOutOfRange { .. } => Failure::Limit(e.to_string()),
            library::LibraryError::UnknownTheorem(_) => Failure::Usage(e.to_string()),
        }
    }
}

struct Settings {
    parser: ParserConfig,
    max_atoms: usize,
    synth_atoms: usize,
    depth: usize,
    records: bool,
}

fn read_config(path: &Path) -> Result<BTreeMap<String, String>, Failure> {
    let text = fs::read_to_string(path)?;
    let mut out = BTreeMap::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Failure::Usage(format!(
                "{}:{}: expected key=value",
                path.display(),
                k + 1
            )));
        };
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}

fn numeric<T: std::str::FromStr>(
    config: &BTreeMap<String, String>,
    key: &str,
) -> Result<Option<T>, Failure> {
    match config.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("config {key}: bad value {raw:?}"))),
    }
}

fn settings(cli: &Cli) -> Result<Settings, Failure> {
    let config = match &cli.config {
        Some(path) => read_config(path)?,
        None => BTreeMap::new(),
    };
    let size = match cli.size {
        Some(s) => Some(s),
        None => numeric(&config, "size")?,
    };
    let max_atoms_flag = match cli.max_atoms {
        Some(m) => Some(m),
        None => numeric(&config, "max-atoms")?,
    };
    let depth = match cli.depth {
        Some(d) => Some(d),
        None => numeric(&config, "depth")?,
    };
    if let Some(jobs) = cli.jobs.or(numeric(&config, "jobs")?) {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
    }
    Ok(Settings {
        parser: ParserConfig { size },
        max_atoms: max_atoms_flag.unwrap_or(semantics::DEFAULT_ATOM_LIMIT),
        synth_atoms: max_atoms_flag.unwrap_or(kalmar::DEFAULT_SYNTHESIS_ATOM_LIMIT),
        depth: depth.unwrap_or(2),
        records: cli.records,
    })
}

fn digest(parts: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update(p);
        hasher.update([0u8]);
    }
    format!("sha256:{}", hex::encode(hasher.finalize()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    // Die silently on a closed pipe, as line-oriented unix tools do.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok((verb, digest, outcome, code)) => {
            eprintln!(
                "verb={verb} inputs={digest} outcome={outcome} elapsed={}ms",
                started.elapsed().as_millis()
            );
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

type RunResult = Result<(&'static str, String, &'static str, u8), Failure>;

fn run(cli: &Cli) -> RunResult {
    let settings = settings(cli)?;
    match &cli.command {
        Command::CheckProof { file, level } => check_proof_cmd(&settings, file, (*level).into()),
        Command::StableModels {
            file,
            report_format,
        } => stable_models_cmd(&settings, file, *report_format),
        Command::SeCheck { left, right } => se_check_cmd(&settings, left, right),
        Command::Reduct {
            file,
            interpretation,
        } => reduct_cmd(&settings, file, interpretation),
        Command::Ground { file, emit } => ground_cmd(&settings, file, *emit),
        Command::Solve {
            file,
            report_format,
        } => solve_cmd(&settings, file, *report_format),
        Command::TranslateAggregate { aggregate, domain } => {
            translate_cmd(&settings, aggregate, domain)
        }
        Command::Synthesize { file } => synthesize_cmd(&settings, file),
        Command::Library { name, out } => library_cmd(&settings, name.as_deref(), out.as_deref()),
        Command::TransformReduct {
            file,
            interpretation,
            level,
        } => transform_cmd(&settings, file, interpretation, *level),
        Command::EmitGoldens { dir } => emit_goldens_cmd(dir),
    }
}

fn check_proof_cmd(settings: &Settings, file: &Path, level: SystemLevel) -> RunResult {
    let verb = "check-proof";
    let text = read(file)?;
    let inputs = digest(&[text.as_bytes(), level.name().as_bytes()]);
    let proof = parse_proof(&text, &settings.parser)?;
    match check_proof(&proof, level) {
        Ok(()) => {
            if settings.records {
                println!("{}", records::line(&RunRecord::new(verb, &inputs, "ok")));
            } else {
                println!("ok: {} steps check in the {} system", proof.len(), level.name());
            }
            Ok((verb, inputs, "ok", 0))
        }
        Err(e) => {
            if settings.records {
                println!("{}", records::line(&RunRecord::new(verb, &inputs, "invalid")));
                println!(
                    "{}",
                    records::line(&DiagnosticOut {
                        record: "diagnostic",
                        message: &e.to_string(),
                    })
                );
            }
            eprintln!("invalid: {e}");
            Ok((verb, inputs, "invalid", 1))
        }
    }
}

fn print_report(verb: &'static str, inputs: &str, report: &StableModelReport, records_mode: bool) {
    if records_mode {
        println!("{}", records::line(&RunRecord::new(verb, inputs, "ok")));
        for c in &report.records {
            println!("{}", records::line(&candidate_out(c)));
        }
        println!("{}", records::line(&summary_out(report)));
    } else {
        for model in &report.models {
            println!("{model}");
        }
        eprintln!(
            "{} stable models among {} candidates",
            report.models.len(),
            report.candidates_examined
        );
    }
}

fn stable_models_cmd(
    settings: &Settings,
    file: &Path,
    report_format: Option<ReportFormat>,
) -> RunResult {
    let verb = "stable-models";
    let text = read(file)?;
    let inputs = digest(&[text.as_bytes()]);
    let theory = parse_theory(&text, &settings.parser)?;
    let report = semantics::stable_models(&theory, settings.max_atoms)?;
    let records_mode = settings.records || report_format == Some(ReportFormat::Records);
    print_report(verb, &inputs, &report, records_mode);
    Ok((verb, inputs, "ok", 0))
}

fn se_check_cmd(settings: &Settings, left: &Path, right: &Path) -> RunResult {
    let verb = "se-check";
    let left_text = read(left)?;
    let right_text = read(right)?;
    let inputs = digest(&[left_text.as_bytes(), right_text.as_bytes()]);
    let f = parse_formula(left_text.trim(), &settings.parser)?;
    let g = parse_formula(right_text.trim(), &settings.parser)?;
    let mut sig: Signature = f.atoms().into_iter().collect();
    sig.extend(g.atoms());
    let equivalent = semantics::strongly_equivalent(&f, &g, &sig, settings.max_atoms)?;
    let outcome = if equivalent { "equivalent" } else { "inequivalent" };
    if settings.records {
        println!("{}", records::line(&RunRecord::new(verb, &inputs, outcome)));
    } else if equivalent {
        println!("strongly equivalent");
    } else {
        println!("not strongly equivalent");
    }
    Ok((verb, inputs, outcome, if equivalent { 0 } else { 1 }))
}

fn reduct_cmd(settings: &Settings, file: &Path, interpretation: &str) -> RunResult {
    let verb = "reduct";
    let text = read(file)?;
    let inputs = digest(&[text.as_bytes(), interpretation.as_bytes()]);
    let f = parse_formula(text.trim(), &settings.parser)?;
    let atoms = parse_atom_list(interpretation)?;
    let mut sig: Signature = f.atoms().into_iter().collect();
    sig.extend(atoms.iter().cloned());
    let i = inflogic::Interpretation::new(atoms);
    let reduced = semantics::reduct(&sig, &f, &i)?;
    if settings.records {
        println!("{}", records::line(&RunRecord::new(verb, &inputs, "ok")));
        println!(
            "{}",
            records::line(&TextOut {
                record: "formula",
                text: &reduced.to_string(),
            })
        );
    } else {
        println!("{reduced}");
    }
    Ok((verb, inputs, "ok", 0))
}

fn ground_cmd(settings: &Settings, file: &Path, emit: EmitFormat) -> RunResult {
    let verb = "ground";
    let text = read(file)?;
    let inputs = digest(&[text.as_bytes(), &settings.depth.to_le_bytes()]);
    let program = parse_program(&text)?;
    let universe = ground::herbrand_universe(&program, settings.depth)?;
    let theory = ground::ground(&program, &universe)?;
    let records_mode = settings.records || emit == EmitFormat::Records;
    if records_mode {
        println!("{}", records::line(&RunRecord::new(verb, &inputs, "ok")));
        println!(
            "{}",
            records::line(&SignatureOut {
                record: "signature",
                atoms: theory
                    .signature()
                    .iter()
                    .map(|a| a.as_str().to_string())
                    .collect(),
            })
        );
        for f in theory.formulas() {
            println!(
                "{}",
                records::line(&TextOut {
                    record: "formula",
                    text: &f.to_string(),
                })
            );
        }
    } else {
        print!("{}", print_theory(&theory));
    }
    Ok((verb, inputs, "ok", 0))
}

fn solve_cmd(
    settings: &Settings,
    file: &Path,
    report_format: Option<ReportFormat>,
) -> RunResult {
    let verb = "solve";
    let text = read(file)?;
    let inputs = digest(&[text.as_bytes(), &settings.depth.to_le_bytes()]);
    let program = parse_program(&text)?;
    let report = ground::solve(&program, settings.depth, settings.max_atoms)?;
    let records_mode = settings.records || report_format == Some(ReportFormat::Records);
    print_report(verb, &inputs, &report, records_mode);
    Ok((verb, inputs, "ok", 0))
}

fn translate_cmd(settings: &Settings, aggregate: &str, domain: &str) -> RunResult {
    let verb = "translate-aggregate";
    let inputs = digest(&[aggregate.as_bytes(), domain.as_bytes()]);
    let agg = parse_aggregate(aggregate)?;
    let atoms: std::collections::BTreeSet<_> = parse_atom_list(domain)?.into_iter().collect();
    let formula = ground::translate_aggregate(agg.lower, agg.upper, &atoms)?;
    if settings.records {
        println!("{}", records::line(&RunRecord::new(verb, &inputs, "ok")));
        println!(
            "{}",
            records::line(&TextOut {
                record: "formula",
                text: &formula.to_string(),
            })
        );
    } else {
        println!("{formula}");
    }
    Ok((verb, inputs, "ok", 0))
}

fn synthesize_cmd(settings: &Settings, file: &Path) -> RunResult {
    let verb = "synthesize";
    let text = read(file)?;
    let inputs = digest(&[text.as_bytes()]);
    let f = parse_formula(text.trim(), &settings.parser)?;
    match kalmar::synthesize_tautology(&f, settings.synth_atoms) {
        Ok(proof) => {
            if settings.records {
                println!("{}", records::line(&RunRecord::new(verb, &inputs, "ok")));
                println!(
                    "{}",
                    records::line(&TextOut {
                        record: "proof",
                        text: &proof.to_string(),
                    })
                );
            } else {
                print!("{proof}");
            }
            eprintln!("{} steps, checks in the basic-ilem system", proof.len());
            Ok((verb, inputs, "ok", 0))
        }
        Err(SynthesisError::NotTautological(witness)) => {
            if settings.records {
                println!(
                    "{}",
                    records::line(&RunRecord::new(verb, &inputs, "not-tautological"))
                );
                println!(
                    "{}",
                    records::line(&SignatureOut {
                        record: "falsifying-interpretation",
                        atoms: atom_names(&witness),
                    })
                );
            }
            eprintln!("not tautological, falsified by {{{witness}}}");
            Ok((verb, inputs, "not-tautological", 1))
        }
        Err(SynthesisError::AtomLimitExceeded { atoms, limit }) => Err(Failure::Limit(format!(
            "formula mentions {atoms} atoms, synthesis limit is {limit}"
        ))),
    }
}

fn library_cmd(settings: &Settings, name: Option<&str>, out: Option<&Path>) -> RunResult {
    let verb = "library";
    match name {
        None => {
            let inputs = digest(&[b"catalog"]);
            for entry in library::CATALOG {
                let sizes = match entry.size_range {
                    Some((min, max)) => format!("sizes {min}..={max}, default {}", entry.default_size),
                    None => "fixed".to_string(),
                };
                println!(
                    "{:28} {:18} {:28} {}",
                    entry.name,
                    entry.level.name(),
                    sizes,
                    entry.summary
                );
            }
            Ok((verb, inputs, "ok", 0))
        }
        Some(name) => {
            let size = settings.parser.size.map(|s| s as usize);
            let item = library::generate(name, size)?;
            let inputs = digest(&[name.as_bytes(), format!("{size:?}").as_bytes()]);
            let script = item.proof.to_string();
            match out {
                Some(path) => {
                    fs::write(path, &script)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                }
                None => {
                    if settings.records {
                        println!("{}", records::line(&RunRecord::new(verb, &inputs, "ok")));
                        println!(
                            "{}",
                            records::line(&TextOut {
                                record: "proof",
                                text: &script,
                            })
                        );
                    } else {
                        print!("{script}");
                    }
                }
            }
            let size_note = item
                .size
                .map(|n| format!(" at size {n}"))
                .unwrap_or_default();
            eprintln!(
                "{}{}: {} steps, checks in the {} system",
                item.name,
                size_note,
                item.proof.len(),
                item.level.name()
            );
            Ok((verb, inputs, "ok", 0))
        }
    }
}

fn transform_cmd(
    settings: &Settings,
    file: &Path,
    interpretation: &str,
    level: TransformLevel,
) -> RunResult {
    let verb = "transform-reduct";
    let text = read(file)?;
    let inputs = digest(&[text.as_bytes(), interpretation.as_bytes()]);
    let proof = parse_proof(&text, &settings.parser)?;
    let i = inflogic::Interpretation::new(parse_atom_list(interpretation)?);
    let transformed = match level {
        TransformLevel::Basic => transform::reduct_transform(&proof, &i),
        TransformLevel::Extended => transform::reduct_transform_extended(&proof, &i),
    };
    match transformed {
        Ok(result) => {
            if settings.records {
                println!("{}", records::line(&RunRecord::new(verb, &inputs, "ok")));
                println!(
                    "{}",
                    records::line(&TextOut {
                        record: "proof",
                        text: &result.to_string(),
                    })
                );
            } else {
                print!("{result}");
            }
            Ok((verb, inputs, "ok", 0))
        }
        Err(TransformError::InvalidInput(e)) => {
            eprintln!("input proof does not check: {e}");
            Ok((verb, inputs, "invalid", 1))
        }
        Err(other) => Err(Failure::Usage(other.to_string())),
    }
}

fn emit_goldens_cmd(dir: &Path) -> RunResult {
    let verb = "emit-goldens";
    let written = goldens::emit_goldens(dir).map_err(|e| Failure::Usage(e.to_string()))?;
    for path in &written {
        println!("{}", path.display());
    }
    eprintln!("{} golden files", written.len());
    Ok((verb, digest(&[b"goldens"]), "ok", 0))
}
