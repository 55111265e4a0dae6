//! Command-line interface. One subcommand per checker; deterministic
//! output.
//!
//! Exit codes: 0 — check passed or command succeeded; 2 — usage or parse
//! error; 3 — check performed and negative (invalid, mismatch, not
//! equivalent, not correct, counterexample found); 4 — instance exceeds an
//! enumeration cap. Results go to the output stream, diagnostics to the
//! error stream.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::formats::{bpc, dom, manifest, ovf, FormatError};
use crate::graph::translate_logic;
use crate::logic::Logic;
use crate::ontology::{
    stronger_than, strongly_equivalent, weakly_equivalent_versions, OntologyVersion, VersionId,
};
use crate::verifier::{verify_theorem1, Coverage};
use crate::worldview::{
    correct_conceptualization, correct_ontology, correct_specification, ConceptualizationSet,
    RealDomain,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser)]
#[command(
    name = "ontoverse",
    about = "Checkers for annotated logical theories and their versions",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a version file is an ontology version about a domain.
    Validate {
        ovf: PathBuf,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Print the propositions a version asserts.
    Assert {
        ovf: PathBuf,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Check for a mismatch between annotations and theory.
    Mismatch {
        ovf: PathBuf,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Compare two versions over one domain.
    Equiv {
        #[arg(long, value_enum)]
        mode: EquivMode,
        ovf1: PathBuf,
        ovf2: PathBuf,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Check a version against the states of affairs of a real domain.
    CheckCorrect {
        ovf: PathBuf,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Check a behavioral profile against a real domain.
    CheckConc {
        #[command(flatten)]
        domain: DomainArg,
        /// Behavioral profile file.
        #[arg(long)]
        bpc: PathBuf,
    },
    /// Check that a version correctly specifies a set of conceptualizations.
    CheckSpec {
        ovf: PathBuf,
        #[command(flatten)]
        domain: DomainArg,
        /// Behavioral profile file; repeat for several profiles.
        #[arg(long, required = true)]
        bpc: Vec<PathBuf>,
    },
    /// Sample correct specifications of correct conceptualizations and
    /// check them against their real domains.
    Theorem1 {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum)]
        coverage: CoverageArg,
    },
    /// Translate a version's theory into another logic.
    Translate {
        ovf: PathBuf,
        /// Target logic tag.
        #[arg(long)]
        to: String,
        /// Output file for the translated version.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Inspect a version-network manifest.
    Graph {
        manifest: PathBuf,
        /// Print the derivation lineage of this version.
        #[arg(long)]
        lineage: Option<String>,
    },
}

#[derive(Args)]
struct DomainArg {
    /// Domain file (`.dom`).
    #[arg(long)]
    domain: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum EquivMode {
    Strong,
    Weak,
    Stronger,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverageArg {
    Full,
    Partial,
}

impl From<CoverageArg> for Coverage {
    fn from(value: CoverageArg) -> Self {
        match value {
            CoverageArg::Full => Coverage::Full,
            CoverageArg::Partial => Coverage::Partial,
        }
    }
}

enum Failure {
    Format(FormatError),
    Core(Error),
    Io(PathBuf, String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Format(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Runs the CLI on the given arguments (the first one is the program
/// name), writing results to `out` and diagnostics to `err`, and returns
/// the exit code.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                // --help and --version land here.
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Core(Error::InvalidVersion(violations))) => {
            emit(out, "not an ontology version:");
            for violation in violations {
                emit(out, format_args!("  violation: {violation}"));
            }
            EXIT_NEGATIVE
        }
        Err(Failure::Core(e)) if e.is_cap_exceeded() => {
            emit(err, format_args!("error: {e}"));
            EXIT_CAP
        }
        Err(Failure::Core(e)) => {
            emit(err, format_args!("error: {e}"));
            EXIT_USAGE
        }
        Err(Failure::Format(e)) => {
            emit(err, format_args!("error: {e}"));
            EXIT_USAGE
        }
        Err(Failure::Io(path, message)) => {
            emit(err, format_args!("error: {}: {message}", path.display()));
            EXIT_USAGE
        }
    }
}

fn emit(w: &mut dyn Write, line: impl std::fmt::Display) {
    let _ = writeln!(w, "{line}");
}

fn load_domain(path: &Path) -> Result<dom::DomainDocument, Failure> {
    Ok(dom::load(path)?)
}

fn load_version(path: &Path) -> Result<OntologyVersion, Failure> {
    Ok(ovf::load(path)?)
}

fn require_real_domain(doc: &dom::DomainDocument, path: &Path) -> Result<RealDomain, Failure> {
    doc.real_domain.clone().ok_or_else(|| {
        Failure::Io(
            path.to_path_buf(),
            "domain file declares no states of affairs".to_string(),
        )
    })
}

fn run(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Validate { ovf, domain } => {
            let version = load_version(&ovf)?;
            let doc = load_domain(&domain.domain)?;
            let report = version.validate(&doc.space);
            if report.is_valid() {
                emit(
                    out,
                    format_args!(
                        "ok: {} is an ontology version about {}",
                        version.version_id(),
                        doc.space.domain()
                    ),
                );
                Ok(EXIT_OK)
            } else {
                emit(
                    out,
                    format_args!("not an ontology version about {}:", doc.space.domain()),
                );
                for violation in report.violations() {
                    emit(out, format_args!("  violation: {violation}"));
                }
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Assert { ovf, domain } => {
            let version = load_version(&ovf)?;
            let doc = load_domain(&domain.domain)?;
            let asserted = version.asserted_propositions(&doc.space)?;
            emit(out, format_args!("P^O_A (annotations): {}", asserted.from_annotations));
            emit(out, format_args!("P^O_G (theory):      {}", asserted.from_theory));
            emit(out, format_args!("P^O   (union):       {}", asserted.union));
            Ok(EXIT_OK)
        }
        Command::Mismatch { ovf, domain } => {
            let version = load_version(&ovf)?;
            let doc = load_domain(&domain.domain)?;
            let asserted = version.asserted_propositions(&doc.space)?;
            if version.has_mismatch(&doc.space)? {
                let conflict = doc.space.violated_conflicts(&asserted.union)?[0];
                emit(out, "mismatch between annotations and logical theory:");
                emit(
                    out,
                    format_args!("  annotations assert {}", asserted.from_annotations),
                );
                emit(out, format_args!("  theory asserts      {}", asserted.from_theory));
                emit(out, format_args!("  joint conflict      {conflict}"));
                Ok(EXIT_NEGATIVE)
            } else {
                emit(out, "no mismatch");
                Ok(EXIT_OK)
            }
        }
        Command::Equiv {
            mode,
            ovf1,
            ovf2,
            domain,
        } => {
            let v1 = load_version(&ovf1)?;
            let v2 = load_version(&ovf2)?;
            let doc = load_domain(&domain.domain)?;
            match mode {
                EquivMode::Strong => {
                    if strongly_equivalent(&v1, &v2, &doc.space)? {
                        emit(out, "strongly equivalent");
                        Ok(EXIT_OK)
                    } else {
                        emit(out, "not strongly equivalent");
                        Ok(EXIT_NEGATIVE)
                    }
                }
                EquivMode::Weak => {
                    if weakly_equivalent_versions(&v1, &v2, &doc.space)? {
                        emit(out, "weakly equivalent");
                        Ok(EXIT_OK)
                    } else {
                        emit(out, "not weakly equivalent");
                        Ok(EXIT_NEGATIVE)
                    }
                }
                EquivMode::Stronger => match stronger_than(&v1, &v2, &doc.space)? {
                    Some(witness) => {
                        emit(
                            out,
                            format_args!(
                                "{} is stronger than {}: witness P' = {witness}",
                                v1.version_id(),
                                v2.version_id()
                            ),
                        );
                        Ok(EXIT_OK)
                    }
                    None => {
                        emit(
                            out,
                            format_args!(
                                "{} is not stronger than {}",
                                v1.version_id(),
                                v2.version_id()
                            ),
                        );
                        Ok(EXIT_NEGATIVE)
                    }
                },
            }
        }
        Command::CheckCorrect { ovf, domain } => {
            let version = load_version(&ovf)?;
            let doc = load_domain(&domain.domain)?;
            let real = require_real_domain(&doc, &domain.domain)?;
            let outcome = correct_ontology(&version, &real, &doc.space)?;
            emit(out, format_args!("{outcome}"));
            if outcome.holds() {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::CheckConc { domain, bpc: bpc_path } => {
            let doc = load_domain(&domain.domain)?;
            let real = require_real_domain(&doc, &domain.domain)?;
            let profile = bpc::load(&bpc_path)?;
            let outcome = correct_conceptualization(&profile, &real, &doc.space)?;
            emit(out, format_args!("{outcome}"));
            if outcome.holds() {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::CheckSpec {
            ovf,
            domain,
            bpc: bpc_paths,
        } => {
            let version = load_version(&ovf)?;
            let doc = load_domain(&domain.domain)?;
            let mut members = Vec::with_capacity(bpc_paths.len());
            for path in &bpc_paths {
                members.push(bpc::load(path)?);
            }
            let set = ConceptualizationSet::new(members)?;
            let outcome = correct_specification(&version, &set, &doc.space)?;
            emit(out, format_args!("{outcome}"));
            if outcome.holds() {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Theorem1 {
            trials,
            seed,
            coverage,
        } => {
            let report = verify_theorem1(trials, seed, coverage.into())?;
            let _ = write!(out, "{}", report.render());
            if report.counterexamples.is_empty() {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Translate { ovf, to, output } => {
            let version = load_version(&ovf)?;
            let target = Logic::from_tag(&to)
                .ok_or_else(|| Failure::Io(ovf.clone(), format!("unknown logic tag `{to}`")))?;
            let new_id = VersionId::new(format!("{}_{}", version.version_id(), target.tag()))
                .map_err(Failure::Core)?;
            let translated = translate_logic(&version, target, new_id)?;
            std::fs::write(&output, ovf::serialize(&translated))
                .map_err(|e| Failure::Io(output.clone(), e.to_string()))?;
            emit(
                out,
                format_args!(
                    "translated {} to {}: {}",
                    version.version_id(),
                    translated.version_id(),
                    output.display()
                ),
            );
            Ok(EXIT_OK)
        }
        Command::Graph {
            manifest: manifest_path,
            lineage,
        } => {
            let graph = manifest::load(&manifest_path)?;
            match lineage {
                Some(raw_id) => {
                    let version = VersionId::new(raw_id).map_err(Failure::Core)?;
                    let record = graph
                        .versions()
                        .get(&version)
                        .ok_or_else(|| Failure::Core(Error::UnknownVersion(version.clone())))?;
                    emit(
                        out,
                        format_args!("lineage of {version} (document {})", record.document),
                    );
                    for edge in graph.lineage(&version)? {
                        emit(
                            out,
                            format_args!(
                                "  {} derives from {} kind={}",
                                edge.child, edge.parent, edge.kind
                            ),
                        );
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    for document in graph.documents() {
                        let versions = graph.realizations(document)?;
                        let listed: Vec<&str> =
                            versions.iter().map(|v| v.as_str()).collect();
                        emit(out, format_args!("document {document}: {}", listed.join(" ")));
                    }
                    Ok(EXIT_OK)
                }
            }
        }
    }
}
