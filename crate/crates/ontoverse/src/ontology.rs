//! Annotated logical theories and ontology versions.
//!
//! An ontology version is a document version that carries an annotated
//! logical theory (vocabulary, axioms, annotations, logic) together with an
//! intended-interpretation map into a proposition space. A version is valid
//! as an ontology version about a domain exactly when the interpretation
//! covers every assertive annotation and every axiom and targets only
//! propositions of that domain's space; validation never fails hard, it
//! reports violations, because a document that fails to establish an
//! interpretation is still a document — it is just not an ontology version.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::ident::ident_type;
use crate::logic::{entails, Logic, Sentence, SymbolId};
use crate::propositions::{subsets_of, DomainId, PropositionId, PropositionSet, PropositionSpace};
use crate::propositions::STRONGER_THAN_CAP;

ident_type!(
    /// Identifier of an axiom within one version.
    AxiomId
);

ident_type!(
    /// Identifier of an annotation within one version.
    AnnotationId
);

ident_type!(
    /// Identifier of an ontology version.
    VersionId
);

ident_type!(
    /// Identifier of an ontology qua document.
    DocumentId
);

/// Whether an annotation asserts a proposition about the domain or merely
/// documents the ontology itself (labels, metadata, remarks about the
/// document).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AnnotationKind {
    Assertive,
    Nonassertive,
}

impl AnnotationKind {
    pub fn tag(self) -> &'static str {
        match self {
            AnnotationKind::Assertive => "assertive",
            AnnotationKind::Nonassertive => "nonassertive",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "assertive" => Some(AnnotationKind::Assertive),
            "nonassertive" => Some(AnnotationKind::Nonassertive),
            _ => None,
        }
    }
}

/// What an annotation documents, when it targets anything in particular.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum AnnotationTarget {
    Axiom(AxiomId),
    Symbol(SymbolId),
}

/// An annotation: free text (standing in for definitions, comments,
/// warnings, references, and other documentation material) with an optional
/// target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annotation {
    pub kind: AnnotationKind,
    pub target: Option<AnnotationTarget>,
    pub text: String,
}

impl Annotation {
    pub fn assertive(text: impl Into<String>) -> Self {
        Annotation {
            kind: AnnotationKind::Assertive,
            target: None,
            text: text.into(),
        }
    }

    pub fn nonassertive(text: impl Into<String>) -> Self {
        Annotation {
            kind: AnnotationKind::Nonassertive,
            target: None,
            text: text.into(),
        }
    }

    pub fn with_target(mut self, target: AnnotationTarget) -> Self {
        self.target = Some(target);
        self
    }
}

/// An annotated logical theory: vocabulary, axioms over it, annotations,
/// and the logic the axioms are written in.
///
/// Axiom ids and annotation ids are unique; axioms must belong to the
/// declared logic. Everything else (vocabulary coverage, interpretation
/// coverage) is checked by [`OntologyVersion::validate`], not here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedTheory {
    logic: Logic,
    vocabulary: BTreeSet<SymbolId>,
    axioms: BTreeMap<AxiomId, Sentence>,
    annotations: BTreeMap<AnnotationId, Annotation>,
}

impl AnnotatedTheory {
    pub fn new(
        logic: Logic,
        vocabulary: impl IntoIterator<Item = SymbolId>,
        axioms: impl IntoIterator<Item = (AxiomId, Sentence)>,
        annotations: impl IntoIterator<Item = (AnnotationId, Annotation)>,
    ) -> Result<Self, Error> {
        let vocabulary = vocabulary.into_iter().collect();
        let mut axiom_map = BTreeMap::new();
        for (id, sentence) in axioms {
            if !logic.admits(&sentence) {
                return Err(Error::WrongLogic { logic });
            }
            if axiom_map.insert(id.clone(), sentence).is_some() {
                return Err(Error::DuplicateAxiom(id));
            }
        }
        let mut annotation_map = BTreeMap::new();
        for (id, annotation) in annotations {
            if annotation_map.insert(id.clone(), annotation).is_some() {
                return Err(Error::DuplicateAnnotation(id));
            }
        }
        Ok(Self {
            logic,
            vocabulary,
            axioms: axiom_map,
            annotations: annotation_map,
        })
    }

    pub fn logic(&self) -> Logic {
        self.logic
    }

    pub fn vocabulary(&self) -> &BTreeSet<SymbolId> {
        &self.vocabulary
    }

    pub fn axioms(&self) -> &BTreeMap<AxiomId, Sentence> {
        &self.axioms
    }

    pub fn annotations(&self) -> &BTreeMap<AnnotationId, Annotation> {
        &self.annotations
    }

    /// The theory Θ as a set of sentences.
    pub fn sentences(&self) -> BTreeSet<Sentence> {
        self.axioms.values().cloned().collect()
    }
}

/// The intended interpretation: a finite partial map sending assertive
/// annotations and sentences to propositions about the domain.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InterpretationMap {
    annotation_entries: BTreeMap<AnnotationId, PropositionId>,
    sentence_entries: BTreeMap<Sentence, PropositionId>,
}

impl InterpretationMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn map_annotation(
        &mut self,
        id: AnnotationId,
        proposition: PropositionId,
    ) -> Result<(), Error> {
        if self.annotation_entries.contains_key(&id) {
            return Err(Error::DuplicateAnnotationEntry(id));
        }
        self.annotation_entries.insert(id, proposition);
        Ok(())
    }

    pub fn map_sentence(
        &mut self,
        sentence: Sentence,
        proposition: PropositionId,
    ) -> Result<(), Error> {
        if self.sentence_entries.contains_key(&sentence) {
            return Err(Error::DuplicateSentenceEntry(sentence.to_string()));
        }
        self.sentence_entries.insert(sentence, proposition);
        Ok(())
    }

    pub fn annotation_entries(&self) -> &BTreeMap<AnnotationId, PropositionId> {
        &self.annotation_entries
    }

    pub fn sentence_entries(&self) -> &BTreeMap<Sentence, PropositionId> {
        &self.sentence_entries
    }

    pub fn is_empty(&self) -> bool {
        self.annotation_entries.is_empty() && self.sentence_entries.is_empty()
    }
}

/// A document version carrying exactly one annotated logical theory plus an
/// interpretation map and free metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologyVersion {
    version_id: VersionId,
    document_id: DocumentId,
    domain_id: DomainId,
    theory: AnnotatedTheory,
    interpretation: InterpretationMap,
    metadata: BTreeMap<String, String>,
}

impl OntologyVersion {
    pub fn new(
        version_id: VersionId,
        document_id: DocumentId,
        domain_id: DomainId,
        theory: AnnotatedTheory,
        interpretation: InterpretationMap,
    ) -> Self {
        Self {
            version_id,
            document_id,
            domain_id,
            theory,
            interpretation,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn version_id(&self) -> &VersionId {
        &self.version_id
    }

    pub fn document_id(&self) -> &DocumentId {
        &self.document_id
    }

    pub fn domain_id(&self) -> &DomainId {
        &self.domain_id
    }

    pub fn theory(&self) -> &AnnotatedTheory {
        &self.theory
    }

    pub fn interpretation(&self) -> &InterpretationMap {
        &self.interpretation
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    /// Checks whether this document version is an ontology version about
    /// the space's domain. Violations are report entries, not failures.
    pub fn validate(&self, space: &PropositionSpace) -> ValidationReport {
        let mut violations = Vec::new();

        if self.domain_id != *space.domain() {
            violations.push(Violation::DomainMismatch {
                version: self.domain_id.clone(),
                space: space.domain().clone(),
            });
        }

        if self.theory.vocabulary.is_empty() {
            violations.push(Violation::EmptyVocabulary);
        }

        for (id, sentence) in &self.theory.axioms {
            for symbol in sentence.symbols() {
                if !self.theory.vocabulary.contains(&symbol) {
                    violations.push(Violation::AxiomOutsideVocabulary {
                        axiom: id.clone(),
                        symbol,
                    });
                }
            }
        }

        // Every assertive annotation must be mapped.
        for (id, annotation) in &self.theory.annotations {
            if annotation.kind == AnnotationKind::Assertive
                && !self.interpretation.annotation_entries.contains_key(id)
            {
                violations.push(Violation::UnmappedAssertiveAnnotation(id.clone()));
            }
        }

        // Every axiom must be mapped (the interpretation covers Θ).
        for (id, sentence) in &self.theory.axioms {
            if !self.interpretation.sentence_entries.contains_key(sentence) {
                violations.push(Violation::UnmappedAxiom(id.clone()));
            }
        }

        // Mapped annotations must exist and be assertive.
        for (id, proposition) in &self.interpretation.annotation_entries {
            match self.theory.annotations.get(id) {
                None => violations.push(Violation::UnknownAnnotation(id.clone())),
                Some(a) if a.kind == AnnotationKind::Nonassertive => {
                    violations.push(Violation::NonassertiveAnnotationMapped(id.clone()));
                }
                Some(_) => {}
            }
            if !space.props().contains(proposition) {
                violations.push(Violation::PropositionOutsideSpace(proposition.clone()));
            }
        }

        // Mapped sentences must be well-formed over the vocabulary.
        for (sentence, proposition) in &self.interpretation.sentence_entries {
            if !self.theory.logic.admits(sentence) {
                violations.push(Violation::SentenceEntryWrongLogic {
                    sentence: sentence.to_string(),
                });
            }
            for symbol in sentence.symbols() {
                if !self.theory.vocabulary.contains(&symbol) {
                    violations.push(Violation::SentenceEntryOutsideVocabulary {
                        sentence: sentence.to_string(),
                        symbol,
                    });
                }
            }
            if !space.props().contains(proposition) {
                violations.push(Violation::PropositionOutsideSpace(proposition.clone()));
            }
        }

        ValidationReport { violations }
    }

    /// The propositions asserted by this version: the interpretations of
    /// its assertive annotations and of every interpreted sentence entailed
    /// by its theory.
    pub fn asserted_propositions(
        &self,
        space: &PropositionSpace,
    ) -> Result<AssertedPropositions, Error> {
        let report = self.validate(space);
        if !report.is_valid() {
            return Err(Error::InvalidVersion(report.violations));
        }

        let from_annotations: PropositionSet = self
            .interpretation
            .annotation_entries
            .values()
            .cloned()
            .collect();

        let theta = self.theory.sentences();
        let mut from_theory = PropositionSet::new();
        for (sentence, proposition) in &self.interpretation.sentence_entries {
            if entails(&theta, sentence, self.theory.logic)? {
                from_theory.insert(proposition.clone());
            }
        }

        Ok(AssertedPropositions::new(from_annotations, from_theory))
    }

    /// A mismatch between the logical theory and the annotations: each side
    /// asserts a consistent set, but together they are inconsistent.
    pub fn has_mismatch(&self, space: &PropositionSpace) -> Result<bool, Error> {
        let asserted = self.asserted_propositions(space)?;
        Ok(space.is_consistent(&asserted.from_annotations)?
            && space.is_consistent(&asserted.from_theory)?
            && !space.is_consistent(&asserted.union)?)
    }
}

/// The asserted-proposition decomposition of a version.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertedPropositions {
    /// Interpretations of the assertive annotations.
    pub from_annotations: PropositionSet,
    /// Interpretations of interpreted sentences entailed by the theory.
    pub from_theory: PropositionSet,
    /// The union of the two.
    pub union: PropositionSet,
}

impl AssertedPropositions {
    pub fn new(from_annotations: PropositionSet, from_theory: PropositionSet) -> Self {
        let union = from_annotations.union(&from_theory);
        Self {
            from_annotations,
            from_theory,
            union,
        }
    }
}

/// One way a document version fails to be an ontology version.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DomainMismatch { version: DomainId, space: DomainId },
    EmptyVocabulary,
    AxiomOutsideVocabulary { axiom: AxiomId, symbol: SymbolId },
    UnmappedAssertiveAnnotation(AnnotationId),
    UnmappedAxiom(AxiomId),
    UnknownAnnotation(AnnotationId),
    NonassertiveAnnotationMapped(AnnotationId),
    SentenceEntryWrongLogic { sentence: String },
    SentenceEntryOutsideVocabulary { sentence: String, symbol: SymbolId },
    PropositionOutsideSpace(PropositionId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DomainMismatch { version, space } => {
                write!(f, "version targets domain {version}, space describes {space}")
            }
            Violation::EmptyVocabulary => write!(f, "vocabulary is empty"),
            Violation::AxiomOutsideVocabulary { axiom, symbol } => {
                write!(f, "axiom {axiom} uses symbol {symbol} outside the vocabulary")
            }
            Violation::UnmappedAssertiveAnnotation(id) => {
                write!(f, "assertive annotation {id} has no intended interpretation")
            }
            Violation::UnmappedAxiom(id) => {
                write!(f, "axiom {id} has no intended interpretation")
            }
            Violation::UnknownAnnotation(id) => {
                write!(f, "interpretation refers to unknown annotation {id}")
            }
            Violation::NonassertiveAnnotationMapped(id) => {
                write!(f, "interpretation maps nonassertive annotation {id}")
            }
            Violation::SentenceEntryWrongLogic { sentence } => {
                write!(f, "interpreted sentence `{sentence}` belongs to a different logic")
            }
            Violation::SentenceEntryOutsideVocabulary { sentence, symbol } => {
                write!(
                    f,
                    "interpreted sentence `{sentence}` uses symbol {symbol} outside the vocabulary"
                )
            }
            Violation::PropositionOutsideSpace(p) => {
                write!(f, "interpretation targets proposition {p} outside the space")
            }
        }
    }
}

/// Outcome of [`OntologyVersion::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

fn check_comparable(v1: &OntologyVersion, v2: &OntologyVersion) -> Result<(), Error> {
    if v1.domain_id != v2.domain_id {
        return Err(Error::VersionDomainMismatch(
            v1.domain_id.clone(),
            v2.domain_id.clone(),
        ));
    }
    Ok(())
}

/// Strong equivalence: the two versions assert exactly the same
/// propositions.
pub fn strongly_equivalent(
    v1: &OntologyVersion,
    v2: &OntologyVersion,
    space: &PropositionSpace,
) -> Result<bool, Error> {
    check_comparable(v1, v2)?;
    let a1 = v1.asserted_propositions(space)?;
    let a2 = v2.asserted_propositions(space)?;
    Ok(a1.union == a2.union)
}

/// Weak equivalence: the asserted proposition sets are weakly equivalent in
/// the space.
pub fn weakly_equivalent_versions(
    v1: &OntologyVersion,
    v2: &OntologyVersion,
    space: &PropositionSpace,
) -> Result<bool, Error> {
    check_comparable(v1, v2)?;
    let a1 = v1.asserted_propositions(space)?;
    let a2 = v2.asserted_propositions(space)?;
    space.weakly_equivalent_sets(&a1.union, &a2.union)
}

/// Whether `v1` is stronger than `v2`: some padding set `P'` makes the
/// assertions of `v2` weakly equivalent to those of `v1`. Returns the first
/// witness in deterministic order (by size, then lexicographically), or
/// `None` when no subset of the space works.
pub fn stronger_than(
    v1: &OntologyVersion,
    v2: &OntologyVersion,
    space: &PropositionSpace,
) -> Result<Option<PropositionSet>, Error> {
    check_comparable(v1, v2)?;
    if space.props().len() > STRONGER_THAN_CAP {
        return Err(Error::StrongerThanTooLarge {
            props: space.props().len(),
            cap: STRONGER_THAN_CAP,
        });
    }
    let a1 = v1.asserted_propositions(space)?;
    let a2 = v2.asserted_propositions(space)?;

    let mut candidates = subsets_of(&space.props().iter().cloned().collect::<Vec<_>>());
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for padding in candidates {
        if space.weakly_equivalent_sets(&a1.union, &a2.union.union(&padding))? {
            return Ok(Some(padding));
        }
    }
    Ok(None)
}
