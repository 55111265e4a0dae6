//! Randomized verifier for the correctness theorem: a correct specification
//! of a set of correct conceptualizations of a real domain is a correct
//! ontology version of that domain.
//!
//! Each trial samples a proposition space, a real domain over it, one to
//! three correct conceptualizations, and an ontology version that is a
//! correct specification of them by construction — then checks correctness
//! against the real domain and records any counterexample.
//!
//! Two coverage modes exist because the theorem's status depends on how
//! much of the domain the witnessing conceptualizations see:
//!
//! - [`Coverage::Full`] forces every sampled profile to consider all states
//!   of the real domain. Under this reading the implication is forced and
//!   the verifier finds no counterexamples.
//! - [`Coverage::Partial`] lets profiles consider proper subsets of the
//!   domain's states. A proposition can then be vouched true by a profile
//!   that never looks at a state where it fails, and the verifier exhibits
//!   counterexamples.
//!
//! Reports are deterministic: a report is a pure function of
//! `(trials, seed, coverage)`. Every trial draws from its own seeded
//! stream, so trials are independent and could be evaluated in any order;
//! the report lists them in trial order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::ontology::{
    AnnotatedTheory, Annotation, AnnotationId, AxiomId, DocumentId, InterpretationMap,
    OntologyVersion, VersionId,
};
use crate::logic::{Logic, PropFormula, Sentence, SymbolId};
use crate::propositions::{DomainId, PropositionId, PropositionSet, PropositionSpace};
use crate::worldview::{
    consistent_with, correct_conceptualization, correct_ontology, correct_specification, Bpc,
    BpcId, ConceptualizationSet, OntologyCorrectness, RealDomain, StateId,
};

/// How much of the real domain each sampled conceptualization considers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Full,
    Partial,
}

impl Coverage {
    pub fn tag(self) -> &'static str {
        match self {
            Coverage::Full => "full",
            Coverage::Partial => "partial",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "full" => Some(Coverage::Full),
            "partial" => Some(Coverage::Partial),
            _ => None,
        }
    }
}

impl fmt::Display for Coverage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A sampled instance that violated the theorem's conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: u64,
    /// One-line serialization of the full instance.
    pub instance: String,
}

/// Aggregated result of a verifier run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub trials: u64,
    pub seed: u64,
    pub coverage: Coverage,
    pub counterexamples: Vec<Counterexample>,
}

impl Theorem1Report {
    /// Deterministic plain-text rendering: a summary plus one line per
    /// counterexample.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "theorem1: coverage={} trials={} seed={}\n",
            self.coverage, self.trials, self.seed
        ));
        out.push_str(&format!(
            "{} counterexamples / {} trials\n",
            self.counterexamples.len(),
            self.trials
        ));
        for c in &self.counterexamples {
            out.push_str(&format!("trial {}: {}\n", c.trial, c.instance));
        }
        out
    }
}

/// Runs `trials` sampled instances and reports every counterexample found.
pub fn verify_theorem1(trials: u64, seed: u64, coverage: Coverage) -> Result<Theorem1Report, Error> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mut counterexamples = Vec::new();
    for trial in 0..trials {
        // One independent, deterministic stream per trial.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        if let Some(instance) = run_trial(&mut rng, coverage)? {
            counterexamples.push(Counterexample { trial, instance });
        }
    }
    Ok(Theorem1Report {
        trials,
        seed,
        coverage,
        counterexamples,
    })
}

fn run_trial(rng: &mut ChaCha8Rng, coverage: Coverage) -> Result<Option<String>, Error> {
    let instance = sample_instance(rng, coverage)?;

    // Sampler soundness: a sampler bug must fail loudly, never silently
    // skew the run.
    let report = instance.version.validate(&instance.space);
    assert!(
        report.is_valid(),
        "sampler produced an invalid version: {:?}",
        report.violations()
    );
    for bpc in instance.conceptualizations.members() {
        assert!(
            correct_conceptualization(bpc, &instance.domain, &instance.space)?.holds(),
            "sampler produced an incorrect conceptualization"
        );
        assert!(
            consistent_with(&instance.version, bpc, &instance.space)?,
            "sampler produced a version inconsistent with a conceptualization"
        );
    }
    assert!(
        correct_specification(&instance.version, &instance.conceptualizations, &instance.space)?
            .holds(),
        "sampler produced an incorrect specification"
    );

    match correct_ontology(&instance.version, &instance.domain, &instance.space)? {
        OntologyCorrectness::Correct => Ok(None),
        OntologyCorrectness::Violated { state, proposition } => {
            Ok(Some(instance.serialize(&state, &proposition)))
        }
    }
}

struct Instance {
    space: PropositionSpace,
    domain: RealDomain,
    conceptualizations: ConceptualizationSet,
    version: OntologyVersion,
    asserted: PropositionSet,
}

impl Instance {
    fn serialize(&self, state: &StateId, proposition: &PropositionId) -> String {
        let mut out = String::new();
        out.push_str(&format!("props={}", self.space.all_props()));
        out.push_str(" conflicts=[");
        for (i, c) in self.space.conflicts().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&c.to_string());
        }
        out.push_str("] domain=[");
        for (i, (id, s)) in self.domain.states().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{id}={s}"));
        }
        out.push_str("] bpcs=[");
        for (i, bpc) in self.conceptualizations.members().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{}:", bpc.id()));
            for (j, (sid, valuation)) in bpc.states().iter().enumerate() {
                if j > 0 {
                    out.push(';');
                }
                out.push_str(&format!("{sid}{{"));
                for (k, (p, v)) in valuation.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    out.push_str(&format!("{p}={}", if *v { "t" } else { "f" }));
                }
                out.push('}');
            }
        }
        out.push_str(&format!(
            "] asserted={} violation={proposition} not in {state}",
            self.asserted
        ));
        out
    }
}

fn sample_instance(rng: &mut ChaCha8Rng, coverage: Coverage) -> Result<Instance, Error> {
    let domain_id = DomainId::new("dom").expect("static identifier");

    // Space: 3-8 propositions, conflict pairs drawn independently.
    let n = rng.random_range(3..=8usize);
    let props: Vec<PropositionId> = (0..n)
        .map(|i| PropositionId::new(format!("p{i}")).expect("static identifier"))
        .collect();
    let mut conflicts = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(0.25) {
                conflicts.push(PropositionSet::from_iter([
                    props[i].clone(),
                    props[j].clone(),
                ]));
            }
        }
    }
    let space = PropositionSpace::new(domain_id.clone(), props.clone(), conflicts)?;

    // Real domain: a non-empty subset of the maximal consistent subsets of
    // the whole space. States are named in enumeration order so that equal
    // instances serialize identically.
    let all_maximal: Vec<PropositionSet> = space
        .maximal_consistent_subsets(&space.all_props())?
        .into_iter()
        .collect();
    let mut chosen: Vec<usize> = (0..all_maximal.len())
        .filter(|_| rng.random_bool(0.5))
        .collect();
    if chosen.is_empty() {
        chosen.push(rng.random_range(0..all_maximal.len()));
    }
    let states: Vec<(StateId, PropositionSet)> = chosen
        .iter()
        .map(|&i| {
            (
                StateId::new(format!("s{i}")).expect("static identifier"),
                all_maximal[i].clone(),
            )
        })
        .collect();
    let domain = RealDomain::new(&space, states.clone())?;

    // Conceptualizations: correct by construction — every defined valuation
    // reports the state's actual membership.
    let bpc_count = rng.random_range(1..=3usize);
    let mut bpcs = Vec::with_capacity(bpc_count);
    for b in 0..bpc_count {
        let mut considered: Vec<&(StateId, PropositionSet)> = match coverage {
            Coverage::Full => states.iter().collect(),
            Coverage::Partial => states.iter().filter(|_| rng.random_bool(0.5)).collect(),
        };
        if considered.is_empty() {
            considered.push(&states[rng.random_range(0..states.len())]);
        }
        let mut bpc_states = BTreeMap::new();
        for (sid, members) in considered {
            let mut valuation = BTreeMap::new();
            for p in &props {
                if rng.random_bool(0.5) {
                    valuation.insert(p.clone(), members.contains(p));
                }
            }
            bpc_states.insert(sid.clone(), valuation);
        }
        bpcs.push(Bpc::new(
            BpcId::new(format!("c{b}")).expect("static identifier"),
            domain_id.clone(),
            bpc_states,
        )?);
    }
    let conceptualizations = ConceptualizationSet::new(bpcs)?;

    // Asserted propositions satisfying the correct-specification clauses by
    // construction: vouched true in all states of some member, valued false
    // by none.
    let vouched: BTreeSet<&PropositionId> = props
        .iter()
        .filter(|p| {
            conceptualizations.members().iter().any(|bpc| {
                bpc.states()
                    .values()
                    .all(|valuation| valuation.get(*p) == Some(&true))
            })
        })
        .collect();
    let falsified: BTreeSet<&PropositionId> = props
        .iter()
        .filter(|p| {
            conceptualizations
                .members()
                .iter()
                .any(|bpc| bpc.states().values().any(|v| v.get(*p) == Some(&false)))
        })
        .collect();
    let asserted: PropositionSet = vouched
        .difference(&falsified)
        .filter(|_| rng.random_bool(0.75))
        .map(|p| (*p).clone())
        .collect();

    // Version asserting exactly `asserted`: each proposition enters either
    // through an assertive annotation or through an interpreted atomic
    // axiom.
    let mut vocabulary = BTreeSet::new();
    let mut axioms = Vec::new();
    let mut annotations = Vec::new();
    let mut interp = InterpretationMap::new();
    for p in &asserted {
        if rng.random_bool(0.5) {
            let id = AnnotationId::new(format!("note_{p}")).expect("static identifier");
            annotations.push((id.clone(), Annotation::assertive(format!("asserts {p}"))));
            interp.map_annotation(id, p.clone())?;
        } else {
            let symbol = SymbolId::new(format!("x_{p}")).expect("static identifier");
            vocabulary.insert(symbol.clone());
            let axiom = Sentence::Prop(PropFormula::atom(symbol));
            axioms.push((
                AxiomId::new(format!("ax_{p}")).expect("static identifier"),
                axiom.clone(),
            ));
            interp.map_sentence(axiom, p.clone())?;
        }
    }
    if vocabulary.is_empty() {
        vocabulary.insert(SymbolId::new("x0").expect("static identifier"));
    }
    let theory = AnnotatedTheory::new(Logic::PropLogic, vocabulary, axioms, annotations)?;
    let version = OntologyVersion::new(
        VersionId::new("sampled").expect("static identifier"),
        DocumentId::new("doc").expect("static identifier"),
        domain_id,
        theory,
        interp,
    );

    Ok(Instance {
        space,
        domain,
        conceptualizations,
        version,
        asserted,
    })
}
