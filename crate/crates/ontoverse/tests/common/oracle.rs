//! Brute-force oracles, deliberately independent of the library's data
//! structures and algorithms: sets are bitmasks, formulas are a separate
//! AST over atom indices, and maximality is checked by the literal
//! all-strict-supersets definition rather than single-element extensions.

/// A proposition space over `n` bit-indexed propositions.
pub struct MaskSpace {
    pub n: usize,
    pub conflicts: Vec<u32>,
}

impl MaskSpace {
    pub fn universe(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn consistent(&self, set: u32) -> bool {
        self.conflicts.iter().all(|&c| c & set != c)
    }

    /// Maximal consistent subsets of `universe`: consistent subsets with no
    /// consistent strict superset within `universe`.
    pub fn maximal_consistent_subsets(&self, universe: u32) -> Vec<u32> {
        let candidates = submasks(universe);
        candidates
            .iter()
            .copied()
            .filter(|&p| {
                self.consistent(p)
                    && !candidates
                        .iter()
                        .any(|&q| q != p && q & p == p && self.consistent(q))
            })
            .collect()
    }

    /// Weak equivalence by quantifying over every subset of the space.
    pub fn weakly_equivalent(&self, p1: u32, p2: u32) -> bool {
        (0..=self.universe()).all(|p3| self.consistent(p1 | p3) == self.consistent(p2 | p3))
    }
}

/// All submasks of `universe`, in increasing numeric order.
pub fn submasks(universe: u32) -> Vec<u32> {
    (0..=universe).filter(|m| m & universe == *m).collect()
}

/// Independent propositional formulas over atom indices.
#[derive(Debug, Clone)]
pub enum Form {
    T,
    F,
    Var(usize),
    Not(Box<Form>),
    And(Box<Form>, Box<Form>),
    Or(Box<Form>, Box<Form>),
    Imp(Box<Form>, Box<Form>),
    Iff(Box<Form>, Box<Form>),
}

pub fn eval(form: &Form, assignment: u32) -> bool {
    match form {
        Form::T => true,
        Form::F => false,
        Form::Var(i) => assignment & (1 << i) != 0,
        Form::Not(f) => !eval(f, assignment),
        Form::And(a, b) => eval(a, assignment) && eval(b, assignment),
        Form::Or(a, b) => eval(a, assignment) || eval(b, assignment),
        Form::Imp(a, b) => !eval(a, assignment) || eval(b, assignment),
        Form::Iff(a, b) => eval(a, assignment) == eval(b, assignment),
    }
}

/// Truth-table entailment over `n_atoms` atoms.
pub fn entails(premises: &[Form], goal: &Form, n_atoms: usize) -> bool {
    (0..(1u32 << n_atoms)).all(|assignment| {
        !premises.iter().all(|p| eval(p, assignment)) || eval(goal, assignment)
    })
}

/// A class axiom over atom indices, translated by the oracle itself.
#[derive(Debug, Clone, Copy)]
pub struct ClassAxiom {
    pub subclass: bool,
    pub left: usize,
    pub right: usize,
}

pub fn class_axiom_form(axiom: ClassAxiom) -> Form {
    let left = Box::new(Form::Var(axiom.left));
    let right = Box::new(Form::Var(axiom.right));
    if axiom.subclass {
        Form::Imp(left, right)
    } else {
        Form::Not(Box::new(Form::And(left, right)))
    }
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn oracle_consistency_is_conflict_containment() {
        let space = MaskSpace {
            n: 3,
            conflicts: vec![0b011],
        };
        assert!(space.consistent(0b101));
        assert!(!space.consistent(0b111));
        assert!(space.consistent(0b000));
    }

    #[test]
    fn oracle_maximal_consistent_subsets() {
        let space = MaskSpace {
            n: 3,
            conflicts: vec![0b011],
        };
        let mut mcs = space.maximal_consistent_subsets(0b111);
        mcs.sort_unstable();
        assert_eq!(mcs, vec![0b101, 0b110]);
    }

    #[test]
    fn oracle_entailment_modus_ponens() {
        let premises = [Form::Var(0), Form::Imp(Box::new(Form::Var(0)), Box::new(Form::Var(1)))];
        assert!(entails(&premises, &Form::Var(1), 2));
        assert!(!entails(&premises[..1], &Form::Var(1), 2));
    }
}
