//! Annotated logical theories with intended interpretations.
//!
//! The library models ontologies as documents rather than as bare sets of
//! formulas: an ontology version carries a vocabulary, a logical theory, a
//! set of annotations, and an explicit interpretation map into a space of
//! propositions about a domain of interest. On top of that it provides
//!
//! - two decidable entailment systems ([`logic`]),
//! - proposition spaces with a conflict-based consistency notion,
//!   weak equivalence, and maximal consistent subsets ([`propositions`]),
//! - validation, asserted propositions, equivalence and mismatch checks for
//!   ontology versions ([`ontology`]),
//! - correctness against real domains and against behavioral profiles of
//!   conceptualizations, plus a randomized verifier for the correctness
//!   theorem connecting the two ([`worldview`], [`verifier`]),
//! - version networks of ontology documents with typed derivation edges
//!   and a logic-translation operation ([`graph`]),
//! - line-oriented file formats and a command-line interface ([`formats`],
//!   [`cli`]).
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run -p ontoverse --example entailment
//! cargo run -p ontoverse --example proposition_spaces
//! cargo run -p ontoverse --example ontology_versions
//! cargo run -p ontoverse --example worldview_checks
//! cargo run -p ontoverse --example theorem1_verifier
//! cargo run -p ontoverse --example version_network
//! cargo run -p ontoverse --example file_formats
//! ```

pub mod cli;
pub mod error;
pub mod formats;
pub mod graph;
mod ident;
pub mod logic;
pub mod ontology;
pub mod propositions;
pub mod verifier;
pub mod worldview;

pub use error::Error;
pub use logic::{ClassBoxSentence, Logic, PropFormula, Sentence, SymbolId};
pub use ontology::{
    AnnotatedTheory, Annotation, AnnotationId, AnnotationKind, AssertedPropositions, AxiomId,
    DocumentId, InterpretationMap, OntologyVersion, ValidationReport, VersionId,
};
pub use propositions::{DomainId, PropositionId, PropositionSet, PropositionSpace};
pub use worldview::{Bpc, BpcId, ConceptualizationSet, RealDomain, StateId};
