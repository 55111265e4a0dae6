//! Entailment systems: an abstract interface fixed to two decidable logics.
//!
//! A logic here is a set of symbols, a set of sentences, a signature
//! function, and a decidable entailment relation. Two instances are
//! provided:
//!
//! - [`Logic::PropLogic`]: classical propositional logic over named atoms,
//!   decided by exhaustive truth-assignment enumeration.
//! - [`Logic::ClassBox`]: a two-sentence class-axiom language
//!   (`SubClassOf(A,B)`, `DisjointWith(A,B)`) whose semantics is defined by
//!   a translation into propositional logic — both sentence forms are
//!   universally quantified monadic constraints over one individual
//!   variable, so matrix-level propositional entailment is sound and
//!   complete for them. Classes may be empty (no existential import).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::ident::ident_type;

ident_type!(
    /// A symbol of a logic's vocabulary: a propositional atom or a class name.
    SymbolId
);

/// Hard cap on the joint signature accepted by [`entails`]. Exhaustive
/// assignment enumeration is exponential in this number.
pub const ENTAILMENT_ATOM_CAP: usize = 20;

/// The concrete logics understood by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Logic {
    PropLogic,
    ClassBox,
}

impl Logic {
    /// The tag used in file formats.
    pub fn tag(self) -> &'static str {
        match self {
            Logic::PropLogic => "proplogic",
            Logic::ClassBox => "classbox",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Logic> {
        match tag {
            "proplogic" => Some(Logic::PropLogic),
            "classbox" => Some(Logic::ClassBox),
            _ => None,
        }
    }

    /// Well-formedness of a sentence relative to this logic: the sentence
    /// belongs to the logic's sentence set.
    pub fn admits(self, sentence: &Sentence) -> bool {
        sentence.logic() == self
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Propositional formula over named atoms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropFormula {
    True,
    False,
    Atom(SymbolId),
    Not(Box<PropFormula>),
    And(Box<PropFormula>, Box<PropFormula>),
    Or(Box<PropFormula>, Box<PropFormula>),
    Implies(Box<PropFormula>, Box<PropFormula>),
    Iff(Box<PropFormula>, Box<PropFormula>),
}

impl PropFormula {
    pub fn atom(symbol: SymbolId) -> Self {
        PropFormula::Atom(symbol)
    }

    pub fn not(inner: PropFormula) -> Self {
        PropFormula::Not(Box::new(inner))
    }

    pub fn and(lhs: PropFormula, rhs: PropFormula) -> Self {
        PropFormula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: PropFormula, rhs: PropFormula) -> Self {
        PropFormula::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn implies(lhs: PropFormula, rhs: PropFormula) -> Self {
        PropFormula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn iff(lhs: PropFormula, rhs: PropFormula) -> Self {
        PropFormula::Iff(Box::new(lhs), Box::new(rhs))
    }

    fn collect_symbols(&self, out: &mut BTreeSet<SymbolId>) {
        match self {
            PropFormula::True | PropFormula::False => {}
            PropFormula::Atom(s) => {
                out.insert(s.clone());
            }
            PropFormula::Not(inner) => inner.collect_symbols(out),
            PropFormula::And(a, b)
            | PropFormula::Or(a, b)
            | PropFormula::Implies(a, b)
            | PropFormula::Iff(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }

    /// Evaluates the formula under a total assignment of the atoms.
    pub fn eval(&self, assignment: &dyn Fn(&SymbolId) -> bool) -> bool {
        match self {
            PropFormula::True => true,
            PropFormula::False => false,
            PropFormula::Atom(s) => assignment(s),
            PropFormula::Not(inner) => !inner.eval(assignment),
            PropFormula::And(a, b) => a.eval(assignment) && b.eval(assignment),
            PropFormula::Or(a, b) => a.eval(assignment) || b.eval(assignment),
            PropFormula::Implies(a, b) => !a.eval(assignment) || b.eval(assignment),
            PropFormula::Iff(a, b) => a.eval(assignment) == b.eval(assignment),
        }
    }
}

/// Class-axiom sentence: exactly one of the two supported axiom forms over
/// two (possibly equal) class names.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassBoxSentence {
    SubClassOf(SymbolId, SymbolId),
    DisjointWith(SymbolId, SymbolId),
}

impl ClassBoxSentence {
    /// The propositional translation defining ClassBox semantics:
    /// `SubClassOf(A,B)` becomes `A -> B` and `DisjointWith(A,B)` becomes
    /// `~(A & B)`, reading each class name as "the individual is in the
    /// class".
    pub fn to_prop(&self) -> PropFormula {
        match self {
            ClassBoxSentence::SubClassOf(a, b) => {
                PropFormula::implies(PropFormula::atom(a.clone()), PropFormula::atom(b.clone()))
            }
            ClassBoxSentence::DisjointWith(a, b) => PropFormula::not(PropFormula::and(
                PropFormula::atom(a.clone()),
                PropFormula::atom(b.clone()),
            )),
        }
    }

    fn collect_symbols(&self, out: &mut BTreeSet<SymbolId>) {
        match self {
            ClassBoxSentence::SubClassOf(a, b) | ClassBoxSentence::DisjointWith(a, b) => {
                out.insert(a.clone());
                out.insert(b.clone());
            }
        }
    }
}

/// A sentence of one of the two logics.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sentence {
    Prop(PropFormula),
    ClassBox(ClassBoxSentence),
}

impl Sentence {
    /// The logic this sentence belongs to.
    pub fn logic(&self) -> Logic {
        match self {
            Sentence::Prop(_) => Logic::PropLogic,
            Sentence::ClassBox(_) => Logic::ClassBox,
        }
    }

    /// The symbols occurring in the sentence.
    pub fn symbols(&self) -> BTreeSet<SymbolId> {
        let mut out = BTreeSet::new();
        match self {
            Sentence::Prop(f) => f.collect_symbols(&mut out),
            Sentence::ClassBox(c) => c.collect_symbols(&mut out),
        }
        out
    }

    /// The propositional form of the sentence (identity for PropLogic).
    pub fn to_prop(&self) -> PropFormula {
        match self {
            Sentence::Prop(f) => f.clone(),
            Sentence::ClassBox(c) => c.to_prop(),
        }
    }
}

/// The signature of a set of sentences: exactly the symbols occurring in
/// them. Monotone in its argument, and empty on the empty set.
///
/// Errors with [`Error::HeterogeneousSentences`] if the sentences do not all
/// belong to one logic.
pub fn signature<'a, I>(sentences: I) -> Result<BTreeSet<SymbolId>, Error>
where
    I: IntoIterator<Item = &'a Sentence>,
{
    let mut logic = None;
    let mut out = BTreeSet::new();
    for sentence in sentences {
        match logic {
            None => logic = Some(sentence.logic()),
            Some(l) if l == sentence.logic() => {}
            Some(_) => return Err(Error::HeterogeneousSentences),
        }
        out.append(&mut sentence.symbols());
    }
    Ok(out)
}

/// Decides whether `gamma` entails `phi` in the given logic.
///
/// PropLogic sentences are decided by exhaustive enumeration of truth
/// assignments over the joint signature; ClassBox sentences are first
/// translated by [`ClassBoxSentence::to_prop`]. Instances whose joint
/// signature exceeds [`ENTAILMENT_ATOM_CAP`] are rejected.
pub fn entails(gamma: &BTreeSet<Sentence>, phi: &Sentence, logic: Logic) -> Result<bool, Error> {
    if !logic.admits(phi) || gamma.iter().any(|s| !logic.admits(s)) {
        return Err(Error::HeterogeneousSentences);
    }

    let mut atoms = BTreeSet::new();
    let mut premises = Vec::with_capacity(gamma.len());
    for sentence in gamma {
        let formula = sentence.to_prop();
        formula.collect_symbols(&mut atoms);
        premises.push(formula);
    }
    let goal = phi.to_prop();
    goal.collect_symbols(&mut atoms);

    if atoms.len() > ENTAILMENT_ATOM_CAP {
        return Err(Error::EntailmentTooLarge {
            atoms: atoms.len(),
            cap: ENTAILMENT_ATOM_CAP,
        });
    }

    let index: BTreeMap<&SymbolId, usize> = atoms.iter().zip(0..).collect();
    for mask in 0u64..(1u64 << atoms.len()) {
        let assignment = |s: &SymbolId| -> bool {
            // Atoms of the joint signature only; anything else is absent
            // from both premises and goal.
            index.get(s).is_some_and(|&i| mask & (1 << i) != 0)
        };
        if premises.iter().all(|p| p.eval(&assignment)) && !goal.eval(&assignment) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `theta` is a theory over `vocab` in `logic`, i.e. all sentences
/// belong to the logic and their signature is contained in `vocab`.
pub fn is_theory_over(
    theta: &BTreeSet<Sentence>,
    vocab: &BTreeSet<SymbolId>,
    logic: Logic,
) -> Result<bool, Error> {
    if theta.iter().any(|s| !logic.admits(s)) {
        return Err(Error::HeterogeneousSentences);
    }
    Ok(signature(theta)?.is_subset(vocab))
}

// ---------------------------------------------------------------------------
// Concrete syntax (printer). The matching parser lives in formats::sentence.
// ---------------------------------------------------------------------------

// Binding strength, loosest to tightest: <-> (1), -> (2), | (3), & (4), ~ (5).
// -> and <-> are right-associative, & and | left-associative.
fn fmt_prop(f: &mut fmt::Formatter<'_>, formula: &PropFormula, min_prec: u8) -> fmt::Result {
    let prec = match formula {
        PropFormula::Iff(_, _) => 1,
        PropFormula::Implies(_, _) => 2,
        PropFormula::Or(_, _) => 3,
        PropFormula::And(_, _) => 4,
        PropFormula::Not(_) => 5,
        _ => 6,
    };
    if prec < min_prec {
        f.write_str("(")?;
        fmt_prop(f, formula, 0)?;
        return f.write_str(")");
    }
    match formula {
        PropFormula::True => f.write_str("true"),
        PropFormula::False => f.write_str("false"),
        PropFormula::Atom(s) => write!(f, "{s}"),
        PropFormula::Not(inner) => {
            f.write_str("~")?;
            fmt_prop(f, inner, 5)
        }
        PropFormula::And(a, b) => {
            fmt_prop(f, a, 4)?;
            f.write_str(" & ")?;
            fmt_prop(f, b, 5)
        }
        PropFormula::Or(a, b) => {
            fmt_prop(f, a, 3)?;
            f.write_str(" | ")?;
            fmt_prop(f, b, 4)
        }
        PropFormula::Implies(a, b) => {
            fmt_prop(f, a, 3)?;
            f.write_str(" -> ")?;
            fmt_prop(f, b, 2)
        }
        PropFormula::Iff(a, b) => {
            fmt_prop(f, a, 2)?;
            f.write_str(" <-> ")?;
            fmt_prop(f, b, 1)
        }
    }
}

impl fmt::Display for PropFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prop(f, self, 0)
    }
}

impl fmt::Display for ClassBoxSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassBoxSentence::SubClassOf(a, b) => write!(f, "SubClassOf({a}, {b})"),
            ClassBoxSentence::DisjointWith(a, b) => write!(f, "DisjointWith({a}, {b})"),
        }
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sentence::Prop(p) => write!(f, "{p}"),
            Sentence::ClassBox(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> SymbolId {
        SymbolId::new(s).unwrap()
    }

    fn atom(s: &str) -> PropFormula {
        PropFormula::atom(sym(s))
    }

    fn disjoint(a: &str, b: &str) -> Sentence {
        Sentence::ClassBox(ClassBoxSentence::DisjointWith(sym(a), sym(b)))
    }

    fn subclass(a: &str, b: &str) -> Sentence {
        Sentence::ClassBox(ClassBoxSentence::SubClassOf(sym(a), sym(b)))
    }

    #[test]
    fn signature_of_empty_set_is_empty() {
        assert!(signature([].into_iter()).unwrap().is_empty());
    }

    #[test]
    fn signature_of_classbox_axiom() {
        let s = disjoint("Dog", "GermanShepherd");
        let sig = signature([&s]).unwrap();
        assert_eq!(sig, [sym("Dog"), sym("GermanShepherd")].into());
    }

    #[test]
    fn signature_collects_atoms_recursively() {
        let s1 = Sentence::Prop(PropFormula::and(atom("p"), atom("q")));
        let s2 = Sentence::Prop(PropFormula::not(atom("p")));
        let sig = signature([&s1, &s2]).unwrap();
        assert_eq!(sig, [sym("p"), sym("q")].into());
    }

    #[test]
    fn signature_rejects_mixed_logics() {
        let s1 = Sentence::Prop(atom("p"));
        let s2 = disjoint("A", "B");
        assert_eq!(
            signature([&s1, &s2]).unwrap_err(),
            Error::HeterogeneousSentences
        );
    }

    #[test]
    fn entailment_is_reflexive() {
        let phi = Sentence::Prop(PropFormula::or(atom("p"), atom("q")));
        let gamma = BTreeSet::from([phi.clone()]);
        assert!(entails(&gamma, &phi, Logic::PropLogic).unwrap());
    }

    #[test]
    fn subclass_composes_with_disjointness() {
        // {GermanShepherd ⊑ Dog, Dog disjoint Cat} ⊢ GermanShepherd disjoint Cat
        let gamma = BTreeSet::from([subclass("GermanShepherd", "Dog"), disjoint("Dog", "Cat")]);
        let phi = disjoint("GermanShepherd", "Cat");
        assert!(entails(&gamma, &phi, Logic::ClassBox).unwrap());
    }

    #[test]
    fn disjointness_does_not_entail_subclass() {
        // Countermodel: Biology=true, Chemistry=false.
        let gamma = BTreeSet::from([disjoint("Biology", "Chemistry")]);
        let phi = subclass("Biology", "Chemistry");
        assert!(!entails(&gamma, &phi, Logic::ClassBox).unwrap());
    }

    #[test]
    fn disjointness_is_symmetric() {
        let gamma = BTreeSet::from([disjoint("Dog", "GermanShepherd")]);
        let phi = disjoint("GermanShepherd", "Dog");
        assert!(entails(&gamma, &phi, Logic::ClassBox).unwrap());
    }

    #[test]
    fn self_disjointness_is_satisfiable() {
        // Empty classes are permitted, so DisjointWith(Dog, Dog) has a model.
        let gamma = BTreeSet::from([disjoint("Dog", "Dog")]);
        let bottom = Sentence::ClassBox(ClassBoxSentence::SubClassOf(sym("Dog"), sym("Dog")));
        // Dog ⊑ Dog is a tautology, so this checks nothing was made trivial…
        assert!(entails(&gamma, &bottom, Logic::ClassBox).unwrap());
        // …whereas an unrelated disjointness is not entailed: the premise set
        // is satisfiable rather than explosive.
        assert!(!entails(&gamma, &disjoint("Cat", "Mouse"), Logic::ClassBox).unwrap());
    }

    #[test]
    fn entailment_respects_atom_cap() {
        let mut gamma = BTreeSet::new();
        for i in 0..21 {
            gamma.insert(Sentence::Prop(atom(&format!("a{i}"))));
        }
        let err = entails(&gamma, &Sentence::Prop(atom("a0")), Logic::PropLogic).unwrap_err();
        assert_eq!(
            err,
            Error::EntailmentTooLarge {
                atoms: 21,
                cap: ENTAILMENT_ATOM_CAP
            }
        );
    }

    #[test]
    fn entails_rejects_wrong_logic() {
        let gamma = BTreeSet::from([disjoint("A", "B")]);
        let phi = Sentence::Prop(atom("p"));
        assert_eq!(
            entails(&gamma, &phi, Logic::ClassBox).unwrap_err(),
            Error::HeterogeneousSentences
        );
    }

    #[test]
    fn theory_over_checks_signature_inclusion() {
        let vocab_full = [sym("Dog"), sym("GermanShepherd")].into();
        let vocab_small = [sym("Dog")].into();
        let theta = BTreeSet::from([disjoint("Dog", "GermanShepherd")]);
        assert!(is_theory_over(&theta, &vocab_full, Logic::ClassBox).unwrap());
        assert!(!is_theory_over(&theta, &vocab_small, Logic::ClassBox).unwrap());
        assert!(is_theory_over(&BTreeSet::new(), &vocab_small, Logic::ClassBox).unwrap());
    }

    #[test]
    fn printer_uses_minimal_parentheses() {
        let f = PropFormula::implies(
            PropFormula::or(atom("p"), PropFormula::and(atom("q"), atom("r"))),
            PropFormula::implies(atom("s"), atom("t")),
        );
        assert_eq!(f.to_string(), "p | q & r -> s -> t");

        let g = PropFormula::and(
            PropFormula::not(PropFormula::or(atom("p"), atom("q"))),
            PropFormula::iff(atom("r"), atom("r")),
        );
        assert_eq!(g.to_string(), "~(p | q) & (r <-> r)");

        let left_nested = PropFormula::implies(PropFormula::implies(atom("p"), atom("q")), atom("r"));
        assert_eq!(left_nested.to_string(), "(p -> q) -> r");
    }
}
