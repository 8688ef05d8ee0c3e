//! Truth-table-driven proof synthesis for tautologies.
//!
//! For every interpretation of the formula's atoms, a proof of the formula
//! (or of its negation) is derived under the matching conjunction of
//! literals; a case split over the atom family then discharges the literal
//! conjunctions, yielding a proof with no assumptions.  The output checks
//! in the basic system extended with the case-split schema.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::atom::Atom;
use crate::builder::ProofBuilder;
use crate::formula::Formula;
use crate::proof::{Proof, Schema};
use crate::semantics::Interpretation;

/// Default cap on the number of distinct atoms a synthesized proof may
/// case-split over (the proof grows with `2^atoms`).
pub const DEFAULT_SYNTHESIS_ATOM_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SynthesisError {
    /// The formula is falsified by the reported interpretation.
    NotTautological(Interpretation),
    AtomLimitExceeded { atoms: usize, limit: usize },
}

impl fmt::Display for SynthesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SynthesisError::NotTautological(i) => {
                write!(f, "not tautological, falsified by {{{i}}}")
            }
            SynthesisError::AtomLimitExceeded { atoms, limit } => {
                write!(f, "formula mentions {atoms} atoms, synthesis limit is {limit}")
            }
        }
    }
}

impl core::error::Error for SynthesisError {}

/// Synthesize a proof of `⊢ f` for a tautological `f`.
pub fn synthesize_tautology(f: &Formula, max_atoms: usize) -> Result<Proof, SynthesisError> {
    let atoms: Vec<Atom> = f.atoms().into_iter().collect();
    let limit = max_atoms.min(16);
    if atoms.len() > limit {
        return Err(SynthesisError::AtomLimitExceeded {
            atoms: atoms.len(),
            limit,
        });
    }
    for mask in 0..(1u64 << atoms.len()) {
        let i = interpretation_of(&atoms, mask);
        if !i.eval(f) {
            return Err(SynthesisError::NotTautological(i));
        }
    }

    let mut b = ProofBuilder::new();
    if atoms.is_empty() {
        // Single interpretation; the literal conjunction degenerates to top.
        let top = Formula::top();
        let under = derive_literal(&mut b, &Interpretation::empty(), &top, f);
        let imp = b.impl_intro(under, top);
        let unit = b.conj_intro(BTreeSet::new(), &[]);
        let id = b.impl_elim(unit, imp);
        return Ok(b.finish(id));
    }

    let family: Vec<Formula> = atoms.iter().cloned().map(Formula::atom).collect();
    let major = b.schema(Schema::Ilem(family));
    let target = f.clone();
    let mut cases = Vec::new();
    for mask in 0..(1u64 << atoms.len()) {
        let i = interpretation_of(&atoms, mask);
        let inside = Formula::conj(
            atoms
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1u64 << k) != 0)
                .map(|(_, a)| Formula::atom(a.clone())),
        );
        let outside = Formula::conj(
            atoms
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1u64 << k) == 0)
                .map(|(_, a)| Formula::neg(Formula::atom(a.clone()))),
        );
        let disjunct = Formula::conj([inside.clone(), outside.clone()]);
        let literals = literal_conjunction(&atoms, mask);

        // Rebuild the flat literal conjunction from the case disjunct.
        let case_axiom = b.axiom(disjunct.clone());
        let positive = b.conj_elim(case_axiom, &inside);
        let negative = b.conj_elim(case_axiom, &outside);
        let mut literal_ids = Vec::new();
        for (k, a) in atoms.iter().enumerate() {
            let id = if mask & (1u64 << k) != 0 {
                b.conj_elim(positive, &Formula::atom(a.clone()))
            } else {
                b.conj_elim(negative, &Formula::neg(Formula::atom(a.clone())))
            };
            literal_ids.push(id);
        }
        let gamma: BTreeSet<Formula> = [disjunct].into_iter().collect();
        let literal_proof = b.conj_intro(gamma, &literal_ids);

        let under = derive_literal(&mut b, &i, &literals, f);
        let imp = b.impl_intro(under, literals);
        cases.push(b.impl_elim(literal_proof, imp));
    }
    let id = b.disj_elim(major, &cases, BTreeSet::new(), target);
    Ok(b.finish(id))
}

fn interpretation_of(atoms: &[Atom], mask: u64) -> Interpretation {
    Interpretation::new(
        atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) != 0)
            .map(|(_, a)| a.clone()),
    )
}

/// The conjunction of literals describing `mask` over `atoms`.
fn literal_conjunction(atoms: &[Atom], mask: u64) -> Formula {
    Formula::conj(atoms.iter().enumerate().map(|(k, a)| {
        if mask & (1u64 << k) != 0 {
            Formula::atom(a.clone())
        } else {
            Formula::neg(Formula::atom(a.clone()))
        }
    }))
}

// Under assumption `lit` (the literal conjunction of interpretation `i`),
// derive `{lit} ⊢ g` when `i ⊨ g` and `{lit} ⊢ not g` otherwise, by
// structural induction on `g`.
fn derive_literal(
    b: &mut ProofBuilder,
    i: &Interpretation,
    lit: &Formula,
    g: &Formula,
) -> usize {
    let gamma: BTreeSet<Formula> = [lit.clone()].into_iter().collect();
    if i.eval(g) {
        match g {
            Formula::Atom(_) => {
                let ax = b.axiom(lit.clone());
                b.conj_elim(ax, g)
            }
            Formula::Conj(children) => {
                let ids: Vec<usize> = children
                    .iter()
                    .map(|c| derive_literal(b, i, lit, c))
                    .collect();
                b.conj_intro(gamma, &ids)
            }
            Formula::Disj(children) => {
                let witness = children
                    .iter()
                    .find(|c| i.eval(c))
                    .expect("satisfied disjunction has a satisfied child");
                let sub = derive_literal(b, i, lit, witness);
                b.disj_intro(sub, g.clone())
            }
            Formula::Impl(antecedent, consequent) => {
                let id = if i.eval(antecedent) {
                    let sub = derive_literal(b, i, lit, consequent);
                    b.impl_intro(sub, (**antecedent).clone())
                } else {
                    let refuted = derive_literal(b, i, lit, antecedent);
                    let assumed = b.axiom((**antecedent).clone());
                    let falsum = b.impl_elim(assumed, refuted);
                    let anything = b.ex_falso(falsum, (**consequent).clone(), BTreeSet::new());
                    b.impl_intro(anything, (**antecedent).clone())
                };
                b.weaken_to(id, gamma)
            }
        }
    } else {
        match g {
            Formula::Atom(_) => {
                let ax = b.axiom(lit.clone());
                b.conj_elim(ax, &Formula::neg(g.clone()))
            }
            Formula::Conj(children) => {
                let witness = children
                    .iter()
                    .find(|c| !i.eval(c))
                    .expect("unsatisfied conjunction has an unsatisfied child");
                let refuted = derive_literal(b, i, lit, witness);
                let assumed = b.axiom(g.clone());
                let member = b.conj_elim(assumed, witness);
                let falsum = b.impl_elim(member, refuted);
                let id = b.impl_intro(falsum, g.clone());
                b.weaken_to(id, gamma)
            }
            Formula::Disj(children) => {
                let assumed = b.axiom(g.clone());
                let mut cases = Vec::new();
                for c in children {
                    let refuted = derive_literal(b, i, lit, c);
                    let member = b.axiom(c.clone());
                    cases.push(b.impl_elim(member, refuted));
                }
                let falsum = b.disj_elim(assumed, &cases, gamma.clone(), Formula::bot());
                let id = b.impl_intro(falsum, g.clone());
                b.weaken_to(id, gamma)
            }
            Formula::Impl(antecedent, consequent) => {
                let holds = derive_literal(b, i, lit, antecedent);
                let refuted = derive_literal(b, i, lit, consequent);
                let assumed = b.axiom(g.clone());
                let concluded = b.impl_elim(holds, assumed);
                let falsum = b.impl_elim(concluded, refuted);
                let id = b.impl_intro(falsum, g.clone());
                b.weaken_to(id, gamma)
            }
        }
    }
}
