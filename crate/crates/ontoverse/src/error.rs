//! Error type shared by the semantic layers of the crate.
//!
//! Parse errors for the file formats live in [`crate::formats::FormatError`];
//! everything the checkers and constructors can reject is reported here.

use thiserror::Error;

use crate::logic::Logic;
use crate::ontology::{AnnotationId, AxiomId, Violation};
use crate::propositions::{DomainId, PropositionId};
use crate::worldview::StateId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid identifier `{0}` (expected a letter followed by letters, digits, or underscores)")]
    InvalidIdentifier(String),

    #[error("heterogeneous sentence set")]
    HeterogeneousSentences,

    #[error("entailment instance too large: {atoms} atoms exceeds cap of {cap}")]
    EntailmentTooLarge { atoms: usize, cap: usize },

    #[error("proposition outside space: {0}")]
    PropositionOutsideSpace(PropositionId),

    #[error("weak-equivalence instance too large: {props} propositions exceeds cap of {cap}")]
    WeakEquivalenceTooLarge { props: usize, cap: usize },

    #[error("enumeration instance too large: {props} propositions exceeds cap of {cap}")]
    EnumerationTooLarge { props: usize, cap: usize },

    #[error("stronger-than instance too large: {props} propositions exceeds cap of {cap}")]
    StrongerThanTooLarge { props: usize, cap: usize },

    #[error("proposition space must contain at least one proposition")]
    EmptyPropositionSpace,

    #[error("conflict set must contain at least two propositions")]
    ConflictTooSmall,

    #[error("duplicate axiom id `{0}`")]
    DuplicateAxiom(AxiomId),

    #[error("duplicate annotation id `{0}`")]
    DuplicateAnnotation(AnnotationId),

    #[error("duplicate interpretation entry for annotation `{0}`")]
    DuplicateAnnotationEntry(AnnotationId),

    #[error("duplicate interpretation entry for sentence `{0}`")]
    DuplicateSentenceEntry(String),

    #[error("axiom does not belong to {logic}")]
    WrongLogic { logic: Logic },

    #[error("not a valid ontology version ({} violation{})", .0.len(), if .0.len() == 1 { "" } else { "s" })]
    InvalidVersion(Vec<Violation>),

    #[error("versions target different domains: {0} vs {1}")]
    VersionDomainMismatch(DomainId, DomainId),

    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(DomainId, DomainId),

    #[error("real domain must contain at least one state")]
    EmptyRealDomain,

    #[error("state `{state}` is not a maximal consistent subset: {reason}")]
    NotARealDomainState { state: StateId, reason: String },

    #[error("behavioral profile must contain at least one state")]
    EmptyBpc,

    #[error("conceptualization set must contain at least one member")]
    EmptyConceptualizationSet,

    #[error("conceptualization set members target different domains: {0} vs {1}")]
    MixedConceptualizationSet(DomainId, DomainId),

    #[error("duplicate version id `{0}`")]
    DuplicateVersion(crate::ontology::VersionId),

    #[error("unknown version id `{0}`")]
    UnknownVersion(crate::ontology::VersionId),

    #[error("unknown document id `{0}`")]
    UnknownDocument(crate::ontology::DocumentId),

    #[error("derivation would create cycle: {child} derives from {parent}")]
    DerivationCycle {
        child: crate::ontology::VersionId,
        parent: crate::ontology::VersionId,
    },

    #[error("unsupported translation: {from} to {to}")]
    UnsupportedTranslation { from: Logic, to: Logic },

    #[error("trials must be at least 1")]
    ZeroTrials,
}

impl Error {
    /// True for errors raised because an instance exceeds an enumeration cap.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::EntailmentTooLarge { .. }
                | Error::WeakEquivalenceTooLarge { .. }
                | Error::EnumerationTooLarge { .. }
                | Error::StrongerThanTooLarge { .. }
        )
    }
}
