//! Version networks: ontologies as documents realized by acyclic networks
//! of ontology versions with typed derives-from edges.
//!
//! The graph stores versions by reference to their files; it never embeds
//! version content. Edge kinds are recorded labels — only translation
//! edges have operational meaning here, through [`translate_logic`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::logic::{Logic, Sentence};
use crate::ontology::{
    AnnotatedTheory, DocumentId, InterpretationMap, OntologyVersion, VersionId,
};

/// How a version was derived from its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DerivationKind {
    Revision,
    Translation,
    Transformation,
}

impl DerivationKind {
    pub fn tag(self) -> &'static str {
        match self {
            DerivationKind::Revision => "revision",
            DerivationKind::Translation => "translation",
            DerivationKind::Transformation => "transformation",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "revision" => Some(DerivationKind::Revision),
            "translation" => Some(DerivationKind::Translation),
            "transformation" => Some(DerivationKind::Transformation),
            _ => None,
        }
    }
}

impl fmt::Display for DerivationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A derives-from edge: `child` was derived from `parent`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DerivationEdge {
    pub child: VersionId,
    pub parent: VersionId,
    pub kind: DerivationKind,
}

/// What the graph records about a version.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VersionRecord {
    pub document: DocumentId,
    pub file: String,
}

/// A network of document versions: documents, versions registered under
/// them, and acyclic derives-from edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VersionGraph {
    documents: BTreeSet<DocumentId>,
    versions: BTreeMap<VersionId, VersionRecord>,
    edges: BTreeSet<DerivationEdge>,
}

impl VersionGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a document. Idempotent; documents may exist without
    /// versions.
    pub fn add_document(&mut self, id: DocumentId) {
        self.documents.insert(id);
    }

    /// Registers a fresh version under its document. The document is
    /// created if it was not registered before.
    pub fn add_version(
        &mut self,
        version: VersionId,
        document: DocumentId,
        file: impl Into<String>,
    ) -> Result<(), Error> {
        if self.versions.contains_key(&version) {
            return Err(Error::DuplicateVersion(version));
        }
        self.documents.insert(document.clone());
        self.versions.insert(
            version,
            VersionRecord {
                document,
                file: file.into(),
            },
        );
        Ok(())
    }

    /// Records that `child` derives from `parent`, rejecting anything that
    /// would close a directed cycle. Multiple parents are allowed: version
    /// networks are DAGs, not trees.
    pub fn add_derivation(
        &mut self,
        child: &VersionId,
        parent: &VersionId,
        kind: DerivationKind,
    ) -> Result<(), Error> {
        if !self.versions.contains_key(child) {
            return Err(Error::UnknownVersion(child.clone()));
        }
        if !self.versions.contains_key(parent) {
            return Err(Error::UnknownVersion(parent.clone()));
        }
        if child == parent || self.derives_transitively(parent, child) {
            return Err(Error::DerivationCycle {
                child: child.clone(),
                parent: parent.clone(),
            });
        }
        self.edges.insert(DerivationEdge {
            child: child.clone(),
            parent: parent.clone(),
            kind,
        });
        Ok(())
    }

    /// True iff `from` transitively derives from `to`.
    fn derives_transitively(&self, from: &VersionId, to: &VersionId) -> bool {
        let mut stack = vec![from];
        let mut seen = BTreeSet::new();
        while let Some(current) = stack.pop() {
            if current == to {
                return true;
            }
            if !seen.insert(current) {
                continue;
            }
            for edge in &self.edges {
                if edge.child == *current {
                    stack.push(&edge.parent);
                }
            }
        }
        false
    }

    pub fn documents(&self) -> &BTreeSet<DocumentId> {
        &self.documents
    }

    pub fn versions(&self) -> &BTreeMap<VersionId, VersionRecord> {
        &self.versions
    }

    pub fn edges(&self) -> &BTreeSet<DerivationEdge> {
        &self.edges
    }

    /// All versions realizing a document, in topological order of
    /// derivation (parents first), ties broken lexicographically by
    /// version id.
    pub fn realizations(&self, document: &DocumentId) -> Result<Vec<VersionId>, Error> {
        if !self.documents.contains(document) {
            return Err(Error::UnknownDocument(document.clone()));
        }

        // Kahn's algorithm over the whole graph; the frontier is a BTreeSet
        // so equal-rank versions come out in lexicographic order.
        let mut pending_parents: BTreeMap<&VersionId, usize> =
            self.versions.keys().map(|v| (v, 0)).collect();
        let mut children: BTreeMap<&VersionId, Vec<&VersionId>> = BTreeMap::new();
        for edge in &self.edges {
            *pending_parents.get_mut(&edge.child).expect("registered") += 1;
            children.entry(&edge.parent).or_default().push(&edge.child);
        }
        let mut frontier: BTreeSet<&VersionId> = pending_parents
            .iter()
            .filter(|(_, n)| **n == 0)
            .map(|(v, _)| *v)
            .collect();
        let mut order = Vec::new();
        while let Some(&next) = frontier.iter().next() {
            frontier.remove(next);
            order.push(next);
            for child in children.get(next).into_iter().flatten() {
                let n = pending_parents.get_mut(child).expect("registered");
                *n -= 1;
                if *n == 0 {
                    frontier.insert(child);
                }
            }
        }
        debug_assert_eq!(order.len(), self.versions.len(), "graph invariant: acyclic");

        Ok(order
            .into_iter()
            .filter(|v| self.versions[*v].document == *document)
            .cloned()
            .collect())
    }

    /// The ancestry of a version: every derives-from edge reachable from
    /// it, in edge order.
    pub fn lineage(&self, version: &VersionId) -> Result<Vec<&DerivationEdge>, Error> {
        if !self.versions.contains_key(version) {
            return Err(Error::UnknownVersion(version.clone()));
        }
        let mut reachable = BTreeSet::new();
        let mut stack = vec![version];
        while let Some(current) = stack.pop() {
            for edge in &self.edges {
                if edge.child == *current && reachable.insert(edge) {
                    stack.push(&edge.parent);
                }
            }
        }
        Ok(reachable.into_iter().collect())
    }
}

/// Translates a version's theory from ClassBox into PropLogic, transporting
/// the interpretation along the translation: whenever a sentence was
/// interpreted as a proposition, its translation is interpreted as the same
/// proposition. Annotations, vocabulary, metadata, document and domain are
/// preserved. The caller is expected to pass a valid version and to
/// register the result with a translation edge.
pub fn translate_logic(
    version: &OntologyVersion,
    target: Logic,
    new_id: VersionId,
) -> Result<OntologyVersion, Error> {
    let source = version.theory().logic();
    if source != Logic::ClassBox || target != Logic::PropLogic {
        return Err(Error::UnsupportedTranslation {
            from: source,
            to: target,
        });
    }

    let translate = |sentence: &Sentence| -> Result<Sentence, Error> {
        match sentence {
            Sentence::ClassBox(c) => Ok(Sentence::Prop(c.to_prop())),
            Sentence::Prop(_) => Err(Error::HeterogeneousSentences),
        }
    };

    let axioms = version
        .theory()
        .axioms()
        .iter()
        .map(|(id, sentence)| Ok((id.clone(), translate(sentence)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let theory = AnnotatedTheory::new(
        Logic::PropLogic,
        version.theory().vocabulary().iter().cloned(),
        axioms,
        version
            .theory()
            .annotations()
            .iter()
            .map(|(id, a)| (id.clone(), a.clone())),
    )?;

    let mut interpretation = InterpretationMap::new();
    for (id, proposition) in version.interpretation().annotation_entries() {
        interpretation.map_annotation(id.clone(), proposition.clone())?;
    }
    for (sentence, proposition) in version.interpretation().sentence_entries() {
        interpretation.map_sentence(translate(sentence)?, proposition.clone())?;
    }

    let mut translated = OntologyVersion::new(
        new_id,
        version.document_id().clone(),
        version.domain_id().clone(),
        theory,
        interpretation,
    );
    for (key, value) in version.metadata() {
        translated = translated.with_metadata(key.clone(), value.clone());
    }
    Ok(translated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vid(s: &str) -> VersionId {
        VersionId::new(s).unwrap()
    }

    fn doc(s: &str) -> DocumentId {
        DocumentId::new(s).unwrap()
    }

    fn graph_with(versions: &[&str]) -> VersionGraph {
        let mut g = VersionGraph::new();
        for v in versions {
            g.add_version(vid(v), doc("GO"), format!("{v}.ovf")).unwrap();
        }
        g
    }

    #[test]
    fn versions_accumulate_under_their_document() {
        let mut g = VersionGraph::new();
        g.add_version(vid("v1"), doc("GO"), "v1.ovf").unwrap();
        assert_eq!(g.realizations(&doc("GO")).unwrap(), [vid("v1")]);
        g.add_version(vid("v2"), doc("GO"), "v2.ovf").unwrap();
        assert_eq!(
            g.realizations(&doc("GO")).unwrap(),
            [vid("v1"), vid("v2")]
        );
    }

    #[test]
    fn version_ids_must_be_fresh() {
        let mut g = graph_with(&["v1"]);
        assert_eq!(
            g.add_version(vid("v1"), doc("GO"), "again.ovf").unwrap_err(),
            Error::DuplicateVersion(vid("v1"))
        );
    }

    #[test]
    fn two_cycles_are_rejected() {
        let mut g = graph_with(&["v1", "v2"]);
        g.add_derivation(&vid("v2"), &vid("v1"), DerivationKind::Revision)
            .unwrap();
        assert_eq!(
            g.add_derivation(&vid("v1"), &vid("v2"), DerivationKind::Revision)
                .unwrap_err(),
            Error::DerivationCycle {
                child: vid("v1"),
                parent: vid("v2"),
            }
        );
    }

    #[test]
    fn self_derivation_is_rejected() {
        let mut g = graph_with(&["v1"]);
        assert!(matches!(
            g.add_derivation(&vid("v1"), &vid("v1"), DerivationKind::Revision),
            Err(Error::DerivationCycle { .. })
        ));
    }

    #[test]
    fn multiple_parents_are_allowed() {
        let mut g = graph_with(&["v1", "v2", "v3"]);
        g.add_derivation(&vid("v3"), &vid("v1"), DerivationKind::Translation)
            .unwrap();
        g.add_derivation(&vid("v3"), &vid("v2"), DerivationKind::Revision)
            .unwrap();
        assert_eq!(g.edges().len(), 2);
    }

    #[test]
    fn unknown_versions_are_rejected() {
        let mut g = graph_with(&["v1"]);
        assert_eq!(
            g.add_derivation(&vid("v1"), &vid("ghost"), DerivationKind::Revision)
                .unwrap_err(),
            Error::UnknownVersion(vid("ghost"))
        );
    }

    #[test]
    fn realizations_follow_chain_order() {
        let mut g = graph_with(&["v1", "v2", "v3"]);
        g.add_derivation(&vid("v2"), &vid("v1"), DerivationKind::Revision)
            .unwrap();
        g.add_derivation(&vid("v3"), &vid("v2"), DerivationKind::Revision)
            .unwrap();
        assert_eq!(
            g.realizations(&doc("GO")).unwrap(),
            [vid("v1"), vid("v2"), vid("v3")]
        );
    }

    #[test]
    fn diamond_breaks_ties_lexicographically() {
        let mut g = graph_with(&["v1", "v2", "v3", "v4"]);
        g.add_derivation(&vid("v2"), &vid("v1"), DerivationKind::Revision)
            .unwrap();
        g.add_derivation(&vid("v3"), &vid("v1"), DerivationKind::Revision)
            .unwrap();
        g.add_derivation(&vid("v4"), &vid("v2"), DerivationKind::Revision)
            .unwrap();
        g.add_derivation(&vid("v4"), &vid("v3"), DerivationKind::Revision)
            .unwrap();
        assert_eq!(
            g.realizations(&doc("GO")).unwrap(),
            [vid("v1"), vid("v2"), vid("v3"), vid("v4")]
        );
    }

    #[test]
    fn empty_documents_have_no_realizations() {
        let mut g = VersionGraph::new();
        g.add_document(doc("empty"));
        assert_eq!(g.realizations(&doc("empty")).unwrap(), Vec::<VersionId>::new());
        assert_eq!(
            g.realizations(&doc("ghost")).unwrap_err(),
            Error::UnknownDocument(doc("ghost"))
        );
    }

    #[test]
    fn lineage_collects_reachable_edges() {
        let mut g = graph_with(&["v1", "v2", "v3", "solo"]);
        g.add_derivation(&vid("v2"), &vid("v1"), DerivationKind::Revision)
            .unwrap();
        g.add_derivation(&vid("v3"), &vid("v2"), DerivationKind::Translation)
            .unwrap();
        let lineage = g.lineage(&vid("v3")).unwrap();
        assert_eq!(lineage.len(), 2);
        assert!(g.lineage(&vid("solo")).unwrap().is_empty());
    }
}
