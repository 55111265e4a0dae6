//! Proposition spaces: finite sets of propositions about a domain of
//! interest, with a conflict-based consistency notion.
//!
//! Propositions are treated as black boxes; the only structure a space
//! carries is a family of conflict sets. A set of propositions is
//! inconsistent exactly when it contains some conflict set, which makes
//! consistency downward closed: every subset of a consistent set is
//! consistent. All decision procedures in this module are exhaustive
//! enumerations guarded by hard caps; this module doubles as the oracle for
//! everything built on top of it, so correctness beats speed throughout.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::ident::ident_type;

ident_type!(
    /// A proposition identifier, unique within its space.
    PropositionId
);

ident_type!(
    /// Identifier of a domain of interest.
    DomainId
);

/// Cap on exhaustive subset enumeration (weak equivalence, maximal
/// consistent subsets, real-domain checks).
pub const ENUMERATION_CAP: usize = 16;

/// Cap on the nested enumeration performed by the stronger-than check.
pub const STRONGER_THAN_CAP: usize = 12;

/// A set of propositions, ordered and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropositionSet(BTreeSet<PropositionId>);

impl PropositionSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: PropositionId) {
        self.0.insert(p);
    }

    pub fn contains(&self, p: &PropositionId) -> bool {
        self.0.contains(p)
    }

    pub fn is_subset(&self, other: &PropositionSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &PropositionSet) -> PropositionSet {
        PropositionSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn with(&self, p: PropositionId) -> PropositionSet {
        let mut out = self.clone();
        out.insert(p);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = &PropositionId> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<PropositionId> for PropositionSet {
    fn from_iter<T: IntoIterator<Item = PropositionId>>(iter: T) -> Self {
        PropositionSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a PropositionSet {
    type Item = &'a PropositionId;
    type IntoIter = std::collections::btree_set::Iter<'a, PropositionId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for PropositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// A finite proposition space: the propositions about one domain of
/// interest plus the conflict sets defining inconsistency.
///
/// Conflict sets are kept in normalized form: each has at least two
/// members, all members belong to the space, and no conflict set contains
/// another (supersets are dropped on construction, since any set containing
/// the larger conflict already contains the smaller one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionSpace {
    domain: DomainId,
    props: BTreeSet<PropositionId>,
    conflicts: BTreeSet<PropositionSet>,
}

impl PropositionSpace {
    pub fn new(
        domain: DomainId,
        props: impl IntoIterator<Item = PropositionId>,
        conflicts: impl IntoIterator<Item = PropositionSet>,
    ) -> Result<Self, Error> {
        let props: BTreeSet<PropositionId> = props.into_iter().collect();
        if props.is_empty() {
            return Err(Error::EmptyPropositionSpace);
        }
        let mut normalized: BTreeSet<PropositionSet> = BTreeSet::new();
        for conflict in conflicts {
            if conflict.len() < 2 {
                return Err(Error::ConflictTooSmall);
            }
            if let Some(outside) = conflict.iter().find(|p| !props.contains(p)) {
                return Err(Error::PropositionOutsideSpace(outside.clone()));
            }
            normalized.insert(conflict);
        }
        // Keep only inclusion-minimal conflict sets.
        let conflicts = normalized
            .iter()
            .filter(|c| !normalized.iter().any(|other| other != *c && other.is_subset(c)))
            .cloned()
            .collect();
        Ok(Self {
            domain,
            props,
            conflicts,
        })
    }

    pub fn domain(&self) -> &DomainId {
        &self.domain
    }

    pub fn props(&self) -> &BTreeSet<PropositionId> {
        &self.props
    }

    pub fn conflicts(&self) -> &BTreeSet<PropositionSet> {
        &self.conflicts
    }

    /// The whole space as a proposition set.
    pub fn all_props(&self) -> PropositionSet {
        self.props.iter().cloned().collect()
    }

    fn check_within(&self, set: &PropositionSet) -> Result<(), Error> {
        match set.iter().find(|p| !self.props.contains(p)) {
            Some(outside) => Err(Error::PropositionOutsideSpace(outside.clone())),
            None => Ok(()),
        }
    }

    /// True iff no conflict set of the space is contained in `set`.
    pub fn is_consistent(&self, set: &PropositionSet) -> Result<bool, Error> {
        self.check_within(set)?;
        Ok(!self.conflicts.iter().any(|c| c.is_subset(set)))
    }

    /// The conflict sets contained in `set`, for diagnostics.
    pub fn violated_conflicts(&self, set: &PropositionSet) -> Result<Vec<&PropositionSet>, Error> {
        self.check_within(set)?;
        Ok(self.conflicts.iter().filter(|c| c.is_subset(set)).collect())
    }

    /// All subsets of the space's propositions, in mask order.
    pub(crate) fn subsets(&self) -> Vec<PropositionSet> {
        subsets_of(&self.props.iter().cloned().collect::<Vec<_>>())
    }

    /// Weak equivalence of two proposition sets: no third set `p3` within
    /// the space distinguishes them, i.e. `p1 ∪ p3` and `p2 ∪ p3` are
    /// always equi-consistent. Decided by enumerating all `2^n` subsets.
    pub fn weakly_equivalent_sets(
        &self,
        p1: &PropositionSet,
        p2: &PropositionSet,
    ) -> Result<bool, Error> {
        if self.props.len() > ENUMERATION_CAP {
            return Err(Error::WeakEquivalenceTooLarge {
                props: self.props.len(),
                cap: ENUMERATION_CAP,
            });
        }
        self.check_within(p1)?;
        self.check_within(p2)?;
        for p3 in self.subsets() {
            let c1 = self.is_consistent(&p1.union(&p3))?;
            let c2 = self.is_consistent(&p2.union(&p3))?;
            if c1 != c2 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The maximal consistent subsets of `p_dagger`: consistent sets that
    /// cannot be extended by any element of `p_dagger` without becoming
    /// inconsistent. Because consistency is downward closed, checking
    /// single-element extensions suffices for maximality.
    pub fn maximal_consistent_subsets(
        &self,
        p_dagger: &PropositionSet,
    ) -> Result<BTreeSet<PropositionSet>, Error> {
        if p_dagger.len() > ENUMERATION_CAP {
            return Err(Error::EnumerationTooLarge {
                props: p_dagger.len(),
                cap: ENUMERATION_CAP,
            });
        }
        self.check_within(p_dagger)?;
        let items: Vec<PropositionId> = p_dagger.iter().cloned().collect();
        let mut out = BTreeSet::new();
        'candidate: for candidate in subsets_of(&items) {
            if !self.is_consistent(&candidate)? {
                continue;
            }
            for p in &items {
                if !candidate.contains(p) && self.is_consistent(&candidate.with(p.clone()))? {
                    continue 'candidate;
                }
            }
            out.insert(candidate);
        }
        Ok(out)
    }
}

/// All subsets of `items`, one per bitmask.
pub(crate) fn subsets_of(items: &[PropositionId]) -> Vec<PropositionSet> {
    assert!(items.len() < 64, "subset enumeration beyond mask width");
    let mut out = Vec::with_capacity(1 << items.len());
    for mask in 0u64..(1u64 << items.len()) {
        out.push(
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, p)| p.clone())
                .collect(),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prop(s: &str) -> PropositionId {
        PropositionId::new(s).unwrap()
    }

    fn set(names: &[&str]) -> PropositionSet {
        names.iter().map(|s| prop(s)).collect()
    }

    /// Space {p1, p2, p3} with the single conflict {p1, p2}.
    fn three_prop_space() -> PropositionSpace {
        PropositionSpace::new(
            DomainId::new("d").unwrap(),
            [prop("p1"), prop("p2"), prop("p3")],
            [set(&["p1", "p2"])],
        )
        .unwrap()
    }

    #[test]
    fn empty_set_is_consistent() {
        let space = three_prop_space();
        assert!(space.is_consistent(&set(&[])).unwrap());
    }

    #[test]
    fn consistency_is_conflict_containment() {
        let space = three_prop_space();
        assert!(space.is_consistent(&set(&["p1", "p3"])).unwrap());
        assert!(!space.is_consistent(&set(&["p1", "p2", "p3"])).unwrap());
    }

    #[test]
    fn membership_is_enforced() {
        let space = three_prop_space();
        assert_eq!(
            space.is_consistent(&set(&["p9"])).unwrap_err(),
            Error::PropositionOutsideSpace(prop("p9"))
        );
    }

    #[test]
    fn conflict_normalization_drops_supersets() {
        let space = PropositionSpace::new(
            DomainId::new("d").unwrap(),
            [prop("p1"), prop("p2"), prop("p3")],
            [set(&["p1", "p2"]), set(&["p1", "p2", "p3"])],
        )
        .unwrap();
        assert_eq!(space.conflicts().len(), 1);
        assert!(space.conflicts().contains(&set(&["p1", "p2"])));
    }

    #[test]
    fn conflicts_must_have_two_members() {
        let err = PropositionSpace::new(
            DomainId::new("d").unwrap(),
            [prop("p1")],
            [set(&["p1"])],
        )
        .unwrap_err();
        assert_eq!(err, Error::ConflictTooSmall);
    }

    #[test]
    fn spaces_must_be_nonempty() {
        let err = PropositionSpace::new(DomainId::new("d").unwrap(), [], []).unwrap_err();
        assert_eq!(err, Error::EmptyPropositionSpace);
    }

    #[test]
    fn weak_equivalence_of_identical_sets() {
        let space = three_prop_space();
        let p = set(&["p1", "p3"]);
        assert!(space.weakly_equivalent_sets(&p, &p).unwrap());
        // Set equality is order-insensitive by construction.
        assert_eq!(set(&["p1", "p2"]), set(&["p2", "p1"]));
    }

    #[test]
    fn weak_equivalence_distinguishes_conflicting_singletons() {
        // P3 = {p1} makes {p2} ∪ P3 inconsistent while {p1} ∪ P3 remains
        // consistent.
        let space = PropositionSpace::new(
            DomainId::new("d").unwrap(),
            [prop("p1"), prop("p2")],
            [set(&["p1", "p2"])],
        )
        .unwrap();
        assert!(!space
            .weakly_equivalent_sets(&set(&["p1"]), &set(&["p2"]))
            .unwrap());
    }

    #[test]
    fn weak_equivalence_cap() {
        let props: Vec<PropositionId> = (0..17).map(|i| prop(&format!("p{i}"))).collect();
        let space =
            PropositionSpace::new(DomainId::new("d").unwrap(), props.clone(), []).unwrap();
        let err = space
            .weakly_equivalent_sets(&set(&[]), &set(&[]))
            .unwrap_err();
        assert_eq!(
            err,
            Error::WeakEquivalenceTooLarge {
                props: 17,
                cap: ENUMERATION_CAP
            }
        );
    }

    #[test]
    fn maximal_consistent_subsets_of_empty_set() {
        let space = three_prop_space();
        let mcs = space.maximal_consistent_subsets(&set(&[])).unwrap();
        assert_eq!(mcs, BTreeSet::from([set(&[])]));
    }

    #[test]
    fn maximal_consistent_subsets_split_on_conflict() {
        let space = three_prop_space();
        let mcs = space
            .maximal_consistent_subsets(&set(&["p1", "p2", "p3"]))
            .unwrap();
        assert_eq!(
            mcs,
            BTreeSet::from([set(&["p1", "p3"]), set(&["p2", "p3"])])
        );
    }

    #[test]
    fn conflict_free_set_is_its_own_maximum() {
        let space = PropositionSpace::new(
            DomainId::new("d").unwrap(),
            [prop("p1"), prop("p2")],
            [],
        )
        .unwrap();
        let mcs = space
            .maximal_consistent_subsets(&set(&["p1", "p2"]))
            .unwrap();
        assert_eq!(mcs, BTreeSet::from([set(&["p1", "p2"])]));
    }
}
