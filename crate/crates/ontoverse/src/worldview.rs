//! Realist and conceptualist correctness checks.
//!
//! A real domain is modelled as a set of named states of affairs, each a
//! maximal consistent subset of the domain's propositions. A
//! conceptualization is represented only by its behavioral profile (BPC): a
//! non-empty set of states of affairs with a partial true/false valuation
//! of propositions per state. The checks in this module connect ontology
//! versions to both pictures: correctness against a real domain, and
//! correct specification of a set of conceptualizations.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::ident::ident_type;
use crate::ontology::OntologyVersion;
use crate::propositions::{DomainId, PropositionId, PropositionSet, PropositionSpace};
use crate::propositions::ENUMERATION_CAP;

ident_type!(
    /// Name of a state of affairs.
    StateId
);

ident_type!(
    /// Identifier of a behavioral profile of a conceptualization.
    BpcId
);

/// A real domain: named states of affairs, each a maximal consistent
/// subset of the space's propositions. Checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealDomain {
    domain: DomainId,
    states: BTreeMap<StateId, PropositionSet>,
}

impl RealDomain {
    pub fn new(
        space: &PropositionSpace,
        states: impl IntoIterator<Item = (StateId, PropositionSet)>,
    ) -> Result<Self, Error> {
        let states: BTreeMap<StateId, PropositionSet> = states.into_iter().collect();
        if states.is_empty() {
            return Err(Error::EmptyRealDomain);
        }
        let check = is_real_domain(&states, space)?;
        for (state, diagnosis) in &check.states {
            if let Some(reason) = diagnosis.problem() {
                return Err(Error::NotARealDomainState {
                    state: state.clone(),
                    reason,
                });
            }
        }
        Ok(Self {
            domain: space.domain().clone(),
            states,
        })
    }

    pub fn domain(&self) -> &DomainId {
        &self.domain
    }

    pub fn states(&self) -> &BTreeMap<StateId, PropositionSet> {
        &self.states
    }
}

/// Per-state outcome of [`is_real_domain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateDiagnosis {
    MaximalConsistent,
    /// The state contains this conflict set.
    Inconsistent { conflict: PropositionSet },
    /// The state stays consistent when this proposition is added.
    NotMaximal { missing: PropositionId },
}

impl StateDiagnosis {
    pub fn is_ok(&self) -> bool {
        matches!(self, StateDiagnosis::MaximalConsistent)
    }

    fn problem(&self) -> Option<String> {
        match self {
            StateDiagnosis::MaximalConsistent => None,
            StateDiagnosis::Inconsistent { conflict } => {
                Some(format!("contains conflict {conflict}"))
            }
            StateDiagnosis::NotMaximal { missing } => {
                Some(format!("can be extended by {missing}"))
            }
        }
    }
}

/// Outcome of [`is_real_domain`]: a diagnosis per state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealDomainCheck {
    pub states: BTreeMap<StateId, StateDiagnosis>,
}

impl RealDomainCheck {
    pub fn holds(&self) -> bool {
        self.states.values().all(StateDiagnosis::is_ok)
    }
}

/// Checks that every state is a maximal consistent subset of the space's
/// propositions: consistent, and inconsistent under every single-element
/// extension (single elements suffice because consistency is downward
/// closed).
pub fn is_real_domain(
    states: &BTreeMap<StateId, PropositionSet>,
    space: &PropositionSpace,
) -> Result<RealDomainCheck, Error> {
    if space.props().len() > ENUMERATION_CAP {
        return Err(Error::EnumerationTooLarge {
            props: space.props().len(),
            cap: ENUMERATION_CAP,
        });
    }
    let mut out = BTreeMap::new();
    for (id, state) in states {
        let diagnosis = if !space.is_consistent(state)? {
            let conflict = space.violated_conflicts(state)?[0].clone();
            StateDiagnosis::Inconsistent { conflict }
        } else {
            let mut diagnosis = StateDiagnosis::MaximalConsistent;
            for p in space.props() {
                if !state.contains(p) && space.is_consistent(&state.with(p.clone()))? {
                    diagnosis = StateDiagnosis::NotMaximal { missing: p.clone() };
                    break;
                }
            }
            diagnosis
        };
        out.insert(id.clone(), diagnosis);
    }
    Ok(RealDomainCheck { states: out })
}

/// A behavioral profile of a conceptualization: named states of affairs
/// and, per state, a partial valuation of propositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bpc {
    id: BpcId,
    domain: DomainId,
    states: BTreeMap<StateId, BTreeMap<PropositionId, bool>>,
}

impl Bpc {
    pub fn new(
        id: BpcId,
        domain: DomainId,
        states: impl IntoIterator<Item = (StateId, BTreeMap<PropositionId, bool>)>,
    ) -> Result<Self, Error> {
        let states: BTreeMap<_, _> = states.into_iter().collect();
        if states.is_empty() {
            return Err(Error::EmptyBpc);
        }
        Ok(Self { id, domain, states })
    }

    pub fn id(&self) -> &BpcId {
        &self.id
    }

    pub fn domain(&self) -> &DomainId {
        &self.domain
    }

    pub fn states(&self) -> &BTreeMap<StateId, BTreeMap<PropositionId, bool>> {
        &self.states
    }

    /// The valuation of `p` in `state`, if defined.
    pub fn value(&self, state: &StateId, p: &PropositionId) -> Option<bool> {
        self.states.get(state).and_then(|val| val.get(p).copied())
    }

    fn check_within(&self, space: &PropositionSpace) -> Result<(), Error> {
        for valuation in self.states.values() {
            for p in valuation.keys() {
                if !space.props().contains(p) {
                    return Err(Error::PropositionOutsideSpace(p.clone()));
                }
            }
        }
        Ok(())
    }
}

/// A non-empty set of conceptualizations (as BPCs) sharing one domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConceptualizationSet {
    members: Vec<Bpc>,
}

impl ConceptualizationSet {
    pub fn new(members: impl IntoIterator<Item = Bpc>) -> Result<Self, Error> {
        let members: Vec<Bpc> = members.into_iter().collect();
        let first = match members.first() {
            Some(first) => first.domain().clone(),
            None => return Err(Error::EmptyConceptualizationSet),
        };
        for member in &members {
            if *member.domain() != first {
                return Err(Error::MixedConceptualizationSet(
                    first,
                    member.domain().clone(),
                ));
            }
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[Bpc] {
        &self.members
    }

    pub fn domain(&self) -> &DomainId {
        self.members[0].domain()
    }
}

fn check_domains(lhs: &DomainId, rhs: &DomainId) -> Result<(), Error> {
    if lhs != rhs {
        return Err(Error::DomainMismatch(lhs.clone(), rhs.clone()));
    }
    Ok(())
}

/// Outcome of [`correct_ontology`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OntologyCorrectness {
    Correct,
    /// This state fails to contain this asserted proposition.
    Violated {
        state: StateId,
        proposition: PropositionId,
    },
}

impl OntologyCorrectness {
    pub fn holds(&self) -> bool {
        matches!(self, OntologyCorrectness::Correct)
    }
}

impl fmt::Display for OntologyCorrectness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OntologyCorrectness::Correct => {
                write!(f, "asserted propositions hold in every state of affairs")
            }
            OntologyCorrectness::Violated { state, proposition } => {
                write!(f, "proposition {proposition} does not hold in state {state}")
            }
        }
    }
}

/// Correctness against a real domain: every asserted proposition is a
/// member of every state of affairs.
pub fn correct_ontology(
    version: &OntologyVersion,
    domain: &RealDomain,
    space: &PropositionSpace,
) -> Result<OntologyCorrectness, Error> {
    check_domains(version.domain_id(), domain.domain())?;
    let asserted = version.asserted_propositions(space)?;
    for (state_id, state) in domain.states() {
        for p in &asserted.union {
            if !state.contains(p) {
                return Ok(OntologyCorrectness::Violated {
                    state: state_id.clone(),
                    proposition: p.clone(),
                });
            }
        }
    }
    Ok(OntologyCorrectness::Correct)
}

/// Consistency with one conceptualization: no state of the BPC values any
/// asserted proposition false. Undefined valuations are permitted — the
/// profile of an incomplete conceptualization is partial.
pub fn consistent_with(
    version: &OntologyVersion,
    bpc: &Bpc,
    space: &PropositionSpace,
) -> Result<bool, Error> {
    check_domains(version.domain_id(), bpc.domain())?;
    bpc.check_within(space)?;
    let asserted = version.asserted_propositions(space)?;
    for state in bpc.states().keys() {
        for p in &asserted.union {
            if bpc.value(state, p) == Some(false) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of [`correct_specification`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecificationCheck {
    /// Correct; for each asserted proposition, the first member valuing it
    /// true in all of its states.
    Correct {
        witnesses: BTreeMap<PropositionId, BpcId>,
    },
    /// Some member values an asserted proposition false in some state.
    InconsistentWith {
        bpc: BpcId,
        state: StateId,
        proposition: PropositionId,
    },
    /// No member vouches for this asserted proposition.
    Unvouched { proposition: PropositionId },
}

impl SpecificationCheck {
    pub fn holds(&self) -> bool {
        matches!(self, SpecificationCheck::Correct { .. })
    }
}

impl fmt::Display for SpecificationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecificationCheck::Correct { witnesses } => {
                write!(f, "correct specification")?;
                for (p, bpc) in witnesses {
                    write!(f, "; {p} vouched by {bpc}")?;
                }
                Ok(())
            }
            SpecificationCheck::InconsistentWith {
                bpc,
                state,
                proposition,
            } => write!(
                f,
                "inconsistent with {bpc}: state {state} values {proposition} false"
            ),
            SpecificationCheck::Unvouched { proposition } => write!(
                f,
                "no conceptualization values {proposition} true in all of its states"
            ),
        }
    }
}

/// Correct specification of a set of conceptualizations: the version is
/// consistent with every member, and every asserted proposition is valued
/// true in all states of at least one member.
pub fn correct_specification(
    version: &OntologyVersion,
    conceptualizations: &ConceptualizationSet,
    space: &PropositionSpace,
) -> Result<SpecificationCheck, Error> {
    check_domains(version.domain_id(), conceptualizations.domain())?;
    let asserted = version.asserted_propositions(space)?;

    for bpc in conceptualizations.members() {
        bpc.check_within(space)?;
        for (state, valuation) in bpc.states() {
            for p in &asserted.union {
                if valuation.get(p) == Some(&false) {
                    return Ok(SpecificationCheck::InconsistentWith {
                        bpc: bpc.id().clone(),
                        state: state.clone(),
                        proposition: p.clone(),
                    });
                }
            }
        }
    }

    let mut witnesses = BTreeMap::new();
    for p in &asserted.union {
        let vouching = conceptualizations.members().iter().find(|bpc| {
            bpc.states()
                .values()
                .all(|valuation| valuation.get(p) == Some(&true))
        });
        match vouching {
            Some(bpc) => {
                witnesses.insert(p.clone(), bpc.id().clone());
            }
            None => {
                return Ok(SpecificationCheck::Unvouched {
                    proposition: p.clone(),
                })
            }
        }
    }
    Ok(SpecificationCheck::Correct { witnesses })
}

/// Outcome of [`correct_conceptualization`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConceptualizationCheck {
    Correct,
    /// The BPC considers a state of affairs the real domain does not have.
    UnknownState { state: StateId },
    /// Valued true but absent from the state.
    TrueOutsideState {
        state: StateId,
        proposition: PropositionId,
    },
    /// Valued false but present in the state.
    FalseInsideState {
        state: StateId,
        proposition: PropositionId,
    },
}

impl ConceptualizationCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ConceptualizationCheck::Correct)
    }
}

impl fmt::Display for ConceptualizationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConceptualizationCheck::Correct => write!(f, "correct conceptualization"),
            ConceptualizationCheck::UnknownState { state } => {
                write!(f, "state {state} is not a state of the real domain")
            }
            ConceptualizationCheck::TrueOutsideState { state, proposition } => {
                write!(f, "{proposition} is valued true but absent from state {state}")
            }
            ConceptualizationCheck::FalseInsideState { state, proposition } => {
                write!(f, "{proposition} is valued false but present in state {state}")
            }
        }
    }
}

/// Correctness of a conceptualization against a real domain: the BPC's
/// states all belong to the domain (state identity is by name), and every
/// defined valuation agrees with state membership.
pub fn correct_conceptualization(
    bpc: &Bpc,
    domain: &RealDomain,
    space: &PropositionSpace,
) -> Result<ConceptualizationCheck, Error> {
    check_domains(bpc.domain(), domain.domain())?;
    bpc.check_within(space)?;
    for (state_id, valuation) in bpc.states() {
        let Some(state) = domain.states().get(state_id) else {
            return Ok(ConceptualizationCheck::UnknownState {
                state: state_id.clone(),
            });
        };
        for (p, value) in valuation {
            match value {
                true if !state.contains(p) => {
                    return Ok(ConceptualizationCheck::TrueOutsideState {
                        state: state_id.clone(),
                        proposition: p.clone(),
                    })
                }
                false if state.contains(p) => {
                    return Ok(ConceptualizationCheck::FalseInsideState {
                        state: state_id.clone(),
                        proposition: p.clone(),
                    })
                }
                _ => {}
            }
        }
    }
    Ok(ConceptualizationCheck::Correct)
}
