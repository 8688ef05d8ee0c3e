//! Incremental construction of proof objects.
//!
//! The builder memoizes on sequents, so repeated sub-derivations are shared
//! rather than duplicated; [`ProofBuilder::finish`] prunes steps the final
//! sequent does not depend on.  Builder methods panic on shape violations:
//! they are programming errors in a generator, and every generated proof is
//! re-validated by the kernel in tests.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::formula::Formula;
use crate::proof::{Proof, Rule, Schema, Sequent, Step};

#[derive(Default)]
pub struct ProofBuilder {
    steps: Vec<Step>,
    seen: BTreeMap<Sequent, usize>,
}

impl ProofBuilder {
    pub fn new() -> Self {
        ProofBuilder::default()
    }

    pub fn sequent(&self, id: usize) -> &Sequent {
        &self.steps[id].sequent
    }

    fn push(&mut self, sequent: Sequent, rule: Rule, premises: Vec<usize>) -> usize {
        if let Some(&id) = self.seen.get(&sequent) {
            return id;
        }
        let id = self.steps.len();
        self.seen.insert(sequent.clone(), id);
        self.steps.push(Step {
            sequent,
            rule,
            premises,
        });
        id
    }

    /// `F ⊢ F`
    pub fn axiom(&mut self, f: Formula) -> usize {
        self.push(Sequent::new([f.clone()], f), Rule::Axiom, Vec::new())
    }

    /// Weaken `id` to exactly `assumptions` (a superset of its own).
    pub fn weaken_to(&mut self, id: usize, assumptions: BTreeSet<Formula>) -> usize {
        let premise = self.sequent(id);
        if premise.assumptions == assumptions {
            return id;
        }
        assert!(
            premise.assumptions.is_subset(&assumptions),
            "weaken_to: target must be a superset"
        );
        let sequent = Sequent {
            assumptions,
            conclusion: premise.conclusion.clone(),
        };
        self.push(sequent, Rule::Weaken, alloc::vec![id])
    }

    /// Conjunction of the premises' conclusions; `gamma` must equal every
    /// premise's assumption set (and fixes the assumptions when `children`
    /// is empty).
    pub fn conj_intro(&mut self, gamma: BTreeSet<Formula>, children: &[usize]) -> usize {
        let mut members = BTreeSet::new();
        for &c in children {
            let premise = self.sequent(c);
            assert!(
                premise.assumptions == gamma,
                "conj_intro: premise context differs from gamma"
            );
            members.insert(premise.conclusion.clone());
        }
        let sequent = Sequent {
            assumptions: gamma,
            conclusion: Formula::Conj(members),
        };
        self.push(sequent, Rule::ConjIntro, children.to_vec())
    }

    /// From a premise concluding a conjunction, conclude one member.
    pub fn conj_elim(&mut self, id: usize, member: &Formula) -> usize {
        let premise = self.sequent(id);
        let Formula::Conj(children) = &premise.conclusion else {
            panic!("conj_elim: premise does not conclude a conjunction");
        };
        assert!(children.contains(member), "conj_elim: not a member");
        let sequent = Sequent {
            assumptions: premise.assumptions.clone(),
            conclusion: member.clone(),
        };
        self.push(sequent, Rule::ConjElim, alloc::vec![id])
    }

    /// From a premise concluding a member, conclude `disjunction`.
    pub fn disj_intro(&mut self, id: usize, disjunction: Formula) -> usize {
        let premise = self.sequent(id);
        let Formula::Disj(children) = &disjunction else {
            panic!("disj_intro: target is not a disjunction");
        };
        assert!(
            children.contains(&premise.conclusion),
            "disj_intro: premise conclusion is not a member of the target"
        );
        let sequent = Sequent {
            assumptions: premise.assumptions.clone(),
            conclusion: disjunction,
        };
        self.push(sequent, Rule::DisjIntro, alloc::vec![id])
    }

    /// Case analysis on a premise concluding a disjunction: one case proof
    /// per member, each of the form `delta, member ⊢ conclusion`.
    pub fn disj_elim(
        &mut self,
        major: usize,
        cases: &[usize],
        delta: BTreeSet<Formula>,
        conclusion: Formula,
    ) -> usize {
        let major_seq = self.sequent(major);
        let Formula::Disj(children) = &major_seq.conclusion else {
            panic!("disj_elim: major premise does not conclude a disjunction");
        };
        for child in children {
            let mut expected = delta.clone();
            expected.insert(child.clone());
            assert!(
                cases.iter().any(|&c| {
                    let s = self.sequent(c);
                    s.conclusion == conclusion && s.assumptions == expected
                }),
                "disj_elim: no case premise for a member of the disjunction"
            );
        }
        let assumptions: BTreeSet<Formula> =
            major_seq.assumptions.union(&delta).cloned().collect();
        let mut premises = alloc::vec![major];
        premises.extend_from_slice(cases);
        let sequent = Sequent {
            assumptions,
            conclusion,
        };
        self.push(sequent, Rule::DisjElim, premises)
    }

    /// From a premise concluding `bot`, conclude anything (disjunction
    /// elimination over the empty disjunction), with `extra` assumptions
    /// joined in.
    pub fn ex_falso(&mut self, id: usize, conclusion: Formula, extra: BTreeSet<Formula>) -> usize {
        let premise = self.sequent(id);
        assert!(premise.conclusion.is_bot(), "ex_falso: premise must conclude bot");
        let assumptions: BTreeSet<Formula> =
            premise.assumptions.union(&extra).cloned().collect();
        let sequent = Sequent {
            assumptions,
            conclusion,
        };
        self.push(sequent, Rule::DisjElim, alloc::vec![id])
    }

    /// Discharge `antecedent` from the premise (weakening it in first when
    /// it is not among the premise's assumptions).
    pub fn impl_intro(&mut self, id: usize, antecedent: Formula) -> usize {
        let premise = self.sequent(id);
        let id = if premise.assumptions.contains(&antecedent) {
            id
        } else {
            let mut wider = premise.assumptions.clone();
            wider.insert(antecedent.clone());
            self.weaken_to(id, wider)
        };
        let premise = self.sequent(id);
        let mut assumptions = premise.assumptions.clone();
        assumptions.remove(&antecedent);
        let conclusion = Formula::imp(antecedent, premise.conclusion.clone());
        self.push(
            Sequent {
                assumptions,
                conclusion,
            },
            Rule::ImplIntro,
            alloc::vec![id],
        )
    }

    /// From `Γ ⊢ F` and `Δ ⊢ F -> G`, conclude `Γ, Δ ⊢ G`.
    pub fn impl_elim(&mut self, argument: usize, implication: usize) -> usize {
        let arg = self.sequent(argument);
        let imp = self.sequent(implication);
        let Formula::Impl(a, b) = &imp.conclusion else {
            panic!("impl_elim: second premise does not conclude an implication");
        };
        assert!(**a == arg.conclusion, "impl_elim: antecedent mismatch");
        let sequent = Sequent {
            assumptions: arg.assumptions.union(&imp.assumptions).cloned().collect(),
            conclusion: (**b).clone(),
        };
        self.push(sequent, Rule::ImplElim, alloc::vec![argument, implication])
    }

    /// An axiom-schema step, concluded under no assumptions.
    pub fn schema(&mut self, schema: Schema) -> usize {
        let instance = schema
            .instantiate()
            .expect("schema: invalid parameters in a generator");
        self.push(
            Sequent::theorem(instance),
            Rule::Schema(schema),
            Vec::new(),
        )
    }

    /// Extract the proof ending at `root`, dropping unreachable steps.
    pub fn finish(self, root: usize) -> Proof {
        let mut keep = alloc::vec![false; self.steps.len()];
        let mut stack = alloc::vec![root];
        while let Some(k) = stack.pop() {
            if keep[k] {
                continue;
            }
            keep[k] = true;
            stack.extend_from_slice(&self.steps[k].premises);
        }
        let mut remap = alloc::vec![usize::MAX; self.steps.len()];
        let mut steps = Vec::new();
        for (k, step) in self.steps.into_iter().enumerate() {
            if !keep[k] {
                continue;
            }
            remap[k] = steps.len();
            let premises = step.premises.iter().map(|&p| remap[p]).collect();
            steps.push(Step {
                sequent: step.sequent,
                rule: step.rule,
                premises,
            });
        }
        Proof::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::Atom;
    use crate::proof::{check_proof, SystemLevel};

    fn at(name: &str) -> Formula {
        Formula::atom(Atom::new(name).unwrap())
    }

    #[test]
    fn modus_ponens_composition() {
        let mut b = ProofBuilder::new();
        let imp = Formula::imp(at("p"), at("q"));
        let arg = b.axiom(at("p"));
        let fun = b.axiom(imp.clone());
        let app = b.impl_elim(arg, fun);
        let proof = b.finish(app);
        assert_eq!(
            proof.final_sequent().unwrap(),
            &Sequent::new([at("p"), imp], at("q"))
        );
        assert_eq!(check_proof(&proof, SystemLevel::Basic), Ok(()));
    }

    #[test]
    fn memoization_shares_sequents() {
        let mut b = ProofBuilder::new();
        let a1 = b.axiom(at("p"));
        let a2 = b.axiom(at("p"));
        assert_eq!(a1, a2);
    }

    #[test]
    fn vacuous_discharge_weakens_first() {
        let mut b = ProofBuilder::new();
        let q = b.axiom(at("q"));
        let imp = b.impl_intro(q, at("p"));
        let proof = b.finish(imp);
        assert_eq!(
            proof.final_sequent().unwrap(),
            &Sequent::new([at("q")], Formula::imp(at("p"), at("q")))
        );
        assert_eq!(check_proof(&proof, SystemLevel::Basic), Ok(()));
    }

    #[test]
    fn finish_prunes_unused_steps() {
        let mut b = ProofBuilder::new();
        let _unused = b.axiom(at("r"));
        let p = b.axiom(at("p"));
        let proof = b.finish(p);
        assert_eq!(proof.len(), 1);
        assert_eq!(check_proof(&proof, SystemLevel::Basic), Ok(()));
    }
}
