//! Seeded random instance generators for the integration suites. Every
//! generator draws from a caller-provided ChaCha stream so runs are
//! reproducible.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ontoverse::graph::{DerivationKind, VersionGraph};
use ontoverse::logic::{ClassBoxSentence, Logic, PropFormula, Sentence, SymbolId};
use ontoverse::ontology::{
    AnnotatedTheory, Annotation, AnnotationId, AnnotationKind, AnnotationTarget, AxiomId,
    DocumentId, InterpretationMap, OntologyVersion, VersionId,
};
use ontoverse::propositions::{DomainId, PropositionId, PropositionSet, PropositionSpace};
use ontoverse::worldview::{Bpc, BpcId, RealDomain, StateId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sym(name: &str) -> SymbolId {
    SymbolId::new(name).unwrap()
}

pub fn prop(name: &str) -> PropositionId {
    PropositionId::new(name).unwrap()
}

fn ident(rng: &mut ChaCha8Rng, prefix: &str, max: usize) -> String {
    format!("{prefix}{}", rng.random_range(0..max))
}

fn free_text(rng: &mut ChaCha8Rng) -> String {
    const WORDS: &[&str] = &[
        "warning:", "see", "also", "class", "label", "(draft)", "is", "a", "kind", "of", "#3",
        "comment,", "breed",
    ];
    let count = rng.random_range(0..5usize);
    (0..count)
        .map(|_| WORDS[rng.random_range(0..WORDS.len())])
        .collect::<Vec<_>>()
        .join(" ")
}

/// A random space: 1-8 propositions, a few conflicts of size >= 2.
pub fn space(rng: &mut ChaCha8Rng, domain: &str) -> PropositionSpace {
    let n = rng.random_range(1..=8usize);
    let props: Vec<PropositionId> = (0..n).map(|i| prop(&format!("p{i}"))).collect();
    let conflict_count = if n >= 2 { rng.random_range(0..=3usize) } else { 0 };
    let mut conflicts = Vec::new();
    for _ in 0..conflict_count {
        let size = rng.random_range(2..=n.min(3));
        let mut members = BTreeSet::new();
        while members.len() < size {
            members.insert(props[rng.random_range(0..n)].clone());
        }
        conflicts.push(members.into_iter().collect::<PropositionSet>());
    }
    PropositionSpace::new(DomainId::new(domain).unwrap(), props, conflicts).unwrap()
}

/// A random real domain over `space`: a non-empty selection of its maximal
/// consistent subsets.
pub fn real_domain(rng: &mut ChaCha8Rng, space: &PropositionSpace) -> RealDomain {
    let all: Vec<PropositionSet> = space
        .maximal_consistent_subsets(&space.all_props())
        .unwrap()
        .into_iter()
        .collect();
    let mut picked: Vec<usize> = (0..all.len()).filter(|_| rng.random_bool(0.6)).collect();
    if picked.is_empty() {
        picked.push(rng.random_range(0..all.len()));
    }
    RealDomain::new(
        space,
        picked.into_iter().map(|i| {
            (
                StateId::new(format!("s{i}")).unwrap(),
                all[i].clone(),
            )
        }),
    )
    .unwrap()
}

/// A random behavioral profile over `space` (not necessarily correct for
/// any real domain).
pub fn bpc(rng: &mut ChaCha8Rng, space: &PropositionSpace, id: &str) -> Bpc {
    let state_count = rng.random_range(1..=3usize);
    let props: Vec<&PropositionId> = space.props().iter().collect();
    let states = (0..state_count).map(|i| {
        let mut valuation = BTreeMap::new();
        for p in &props {
            match rng.random_range(0..3u8) {
                0 => {
                    valuation.insert((*p).clone(), true);
                }
                1 => {
                    valuation.insert((*p).clone(), false);
                }
                _ => {}
            }
        }
        (StateId::new(format!("s{i}")).unwrap(), valuation)
    });
    Bpc::new(
        BpcId::new(id).unwrap(),
        space.domain().clone(),
        states.collect::<Vec<_>>(),
    )
    .unwrap()
}

fn random_class_sentence(rng: &mut ChaCha8Rng, classes: &[SymbolId]) -> ClassBoxSentence {
    let a = classes[rng.random_range(0..classes.len())].clone();
    let b = classes[rng.random_range(0..classes.len())].clone();
    if rng.random_bool(0.5) {
        ClassBoxSentence::SubClassOf(a, b)
    } else {
        ClassBoxSentence::DisjointWith(a, b)
    }
}

/// A random PropLogic formula over the given atoms.
pub fn formula(rng: &mut ChaCha8Rng, atoms: &[SymbolId], depth: usize) -> PropFormula {
    if depth == 0 || rng.random_bool(0.3) {
        return match rng.random_range(0..6u8) {
            0 => PropFormula::True,
            1 => PropFormula::False,
            _ => PropFormula::Atom(atoms[rng.random_range(0..atoms.len())].clone()),
        };
    }
    let lhs = formula(rng, atoms, depth - 1);
    match rng.random_range(0..5u8) {
        0 => PropFormula::not(lhs),
        1 => PropFormula::and(lhs, formula(rng, atoms, depth - 1)),
        2 => PropFormula::or(lhs, formula(rng, atoms, depth - 1)),
        3 => PropFormula::implies(lhs, formula(rng, atoms, depth - 1)),
        _ => PropFormula::iff(lhs, formula(rng, atoms, depth - 1)),
    }
}

/// A random valid ClassBox version over `space`: every axiom and assertive
/// annotation interpreted, signatures inside the vocabulary.
pub fn classbox_version(rng: &mut ChaCha8Rng, space: &PropositionSpace, id: &str) -> OntologyVersion {
    let class_count = rng.random_range(2..=5usize);
    let classes: Vec<SymbolId> = (0..class_count).map(|i| sym(&format!("C{i}"))).collect();
    let space_props: Vec<&PropositionId> = space.props().iter().collect();
    let pick_prop = |rng: &mut ChaCha8Rng| space_props[rng.random_range(0..space_props.len())].clone();

    // Distinct sentences, some of which become axioms; the rest stay as
    // extra interpreted sentences.
    let mut sentences = BTreeSet::new();
    for _ in 0..rng.random_range(0..=5usize) {
        sentences.insert(random_class_sentence(rng, &classes));
    }
    let sentences: Vec<ClassBoxSentence> = sentences.into_iter().collect();
    let axiom_count = rng.random_range(0..=sentences.len());

    let mut interp = InterpretationMap::new();
    let mut axioms = Vec::new();
    for (i, sentence) in sentences.iter().enumerate() {
        let sentence = Sentence::ClassBox(sentence.clone());
        if i < axiom_count {
            axioms.push((AxiomId::new(format!("ax{i}")).unwrap(), sentence.clone()));
        }
        interp.map_sentence(sentence, pick_prop(rng)).unwrap();
    }

    let mut annotations = Vec::new();
    for i in 0..rng.random_range(0..=3usize) {
        let aid = AnnotationId::new(format!("an{i}")).unwrap();
        let kind = if rng.random_bool(0.5) {
            AnnotationKind::Assertive
        } else {
            AnnotationKind::Nonassertive
        };
        let target = match rng.random_range(0..3u8) {
            0 if !axioms.is_empty() => Some(AnnotationTarget::Axiom(
                AxiomId::new(format!("ax{}", rng.random_range(0..axioms.len()))).unwrap(),
            )),
            1 => Some(AnnotationTarget::Symbol(
                classes[rng.random_range(0..classes.len())].clone(),
            )),
            _ => None,
        };
        let annotation = Annotation {
            kind,
            target,
            text: free_text(rng),
        };
        if kind == AnnotationKind::Assertive {
            interp.map_annotation(aid.clone(), pick_prop(rng)).unwrap();
        }
        annotations.push((aid, annotation));
    }

    let theory = AnnotatedTheory::new(Logic::ClassBox, classes, axioms, annotations).unwrap();
    let mut version = OntologyVersion::new(
        VersionId::new(id).unwrap(),
        DocumentId::new("doc").unwrap(),
        space.domain().clone(),
        theory,
        interp,
    );
    if rng.random_bool(0.5) {
        version = version.with_metadata("creator", free_text(rng));
    }
    version
}

/// A random version of either logic, structurally well-formed but not
/// necessarily a valid ontology version; exercises the full `.ovf`
/// surface for round-trip checks.
pub fn any_version(rng: &mut ChaCha8Rng, id: &str) -> OntologyVersion {
    let domain = DomainId::new(ident(rng, "dom", 4)).unwrap();
    let logic = if rng.random_bool(0.5) {
        Logic::ClassBox
    } else {
        Logic::PropLogic
    };
    let symbols: Vec<SymbolId> = (0..rng.random_range(1..=5usize))
        .map(|i| sym(&format!("S{i}")))
        .collect();

    let mut sentences = BTreeSet::new();
    for _ in 0..rng.random_range(0..=4usize) {
        let sentence = match logic {
            Logic::ClassBox => Sentence::ClassBox(random_class_sentence(rng, &symbols)),
            Logic::PropLogic => Sentence::Prop(formula(rng, &symbols, 3)),
        };
        sentences.insert(sentence);
    }
    let sentences: Vec<Sentence> = sentences.into_iter().collect();
    let axiom_count = rng.random_range(0..=sentences.len());

    let mut interp = InterpretationMap::new();
    let mut axioms = Vec::new();
    for (i, sentence) in sentences.iter().enumerate() {
        if i < axiom_count {
            axioms.push((AxiomId::new(format!("ax{i}")).unwrap(), sentence.clone()));
        }
        if rng.random_bool(0.7) {
            interp
                .map_sentence(sentence.clone(), prop(&ident(rng, "q", 6)))
                .unwrap();
        }
    }

    let mut annotations = Vec::new();
    for i in 0..rng.random_range(0..=3usize) {
        let aid = AnnotationId::new(format!("an{i}")).unwrap();
        let kind = if rng.random_bool(0.5) {
            AnnotationKind::Assertive
        } else {
            AnnotationKind::Nonassertive
        };
        let target = if rng.random_bool(0.3) {
            Some(AnnotationTarget::Symbol(
                symbols[rng.random_range(0..symbols.len())].clone(),
            ))
        } else {
            None
        };
        if rng.random_bool(0.5) {
            interp
                .map_annotation(aid.clone(), prop(&ident(rng, "q", 6)))
                .unwrap();
        }
        annotations.push((
            aid,
            Annotation {
                kind,
                target,
                text: free_text(rng),
            },
        ));
    }

    let theory = AnnotatedTheory::new(logic, symbols, axioms, annotations).unwrap();
    let mut version = OntologyVersion::new(
        VersionId::new(id).unwrap(),
        DocumentId::new(ident(rng, "doc", 3)).unwrap(),
        domain,
        theory,
        interp,
    );
    for key in ["creator", "intends-to-specify", "source"] {
        if rng.random_bool(0.3) {
            version = version.with_metadata(key, free_text(rng));
        }
    }
    version
}

/// A random DAG of documents and versions.
pub fn graph(rng: &mut ChaCha8Rng) -> VersionGraph {
    let mut g = VersionGraph::new();
    let doc_count = rng.random_range(1..=3usize);
    for d in 0..doc_count {
        g.add_document(DocumentId::new(format!("doc{d}")).unwrap());
    }
    let version_count = rng.random_range(0..=6usize);
    for v in 0..version_count {
        let d = rng.random_range(0..doc_count);
        g.add_version(
            VersionId::new(format!("v{v}")).unwrap(),
            DocumentId::new(format!("doc{d}")).unwrap(),
            format!("files/v{v}.ovf"),
        )
        .unwrap();
    }
    let kinds = [
        DerivationKind::Revision,
        DerivationKind::Translation,
        DerivationKind::Transformation,
    ];
    for _ in 0..rng.random_range(0..=8usize) {
        if version_count < 2 {
            break;
        }
        let child = VersionId::new(format!("v{}", rng.random_range(0..version_count))).unwrap();
        let parent = VersionId::new(format!("v{}", rng.random_range(0..version_count))).unwrap();
        let kind = kinds[rng.random_range(0..kinds.len())];
        // Cycles and duplicates are rejected; that is part of the point.
        let _ = g.add_derivation(&child, &parent, kind);
    }
    g
}
