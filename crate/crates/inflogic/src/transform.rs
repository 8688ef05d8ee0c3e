//! Constructive proof transformers.
//!
//! * [`reduct_refutation`] builds, for a formula its interpretation does not
//!   satisfy, a basic-system proof that the reduct entails `bot`.
//! * [`reduct_transform`] maps a basic proof of `Γ ⊢ F` to a basic proof of
//!   `Γ^I ⊢ F^I`, step by step.
//! * [`reduct_transform_extended`] does the same for extended proofs,
//!   producing a classical-extended proof: `ht` steps are re-derived from
//!   `lem`, converse De Morgan steps are re-derived by a case split, and
//!   distributivity steps re-instantiate the same schema over the reduced
//!   families.
//! * [`substitute_proof`] applies a substitution to every sequent and every
//!   schema parameter; checkability at the same level is preserved.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::builder::ProofBuilder;
use crate::formula::Formula;
use crate::proof::{
    check_proof, find_disj_elim_delta, CheckError, Proof, Rule, Schema, Sequent, Step,
    SystemLevel,
};
use crate::semantics::{reduct_unchecked, Interpretation};
use crate::subst::Substitution;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransformError {
    /// A refutation was requested for a formula the interpretation satisfies.
    FormulaSatisfied,
    /// The input proof does not check at the required level.
    InvalidInput(CheckError),
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::FormulaSatisfied => {
                f.write_str("formula is satisfied by the interpretation")
            }
            TransformError::InvalidInput(e) => write!(f, "input proof does not check: {e}"),
        }
    }
}

impl core::error::Error for TransformError {}

/// Basic-system proof of `F^I ⊢ bot`, for `I ⊭ F`, by induction on the
/// construction of `F`.
pub fn reduct_refutation(f: &Formula, i: &Interpretation) -> Result<Proof, TransformError> {
    if i.eval(f) {
        return Err(TransformError::FormulaSatisfied);
    }
    let mut b = ProofBuilder::new();
    let id = refute(&mut b, f, i);
    Ok(b.finish(id))
}

// Proves { reduct(f, i) } ⊢ bot; caller guarantees i does not satisfy f.
fn refute(b: &mut ProofBuilder, f: &Formula, i: &Interpretation) -> usize {
    debug_assert!(!i.eval(f));
    match f {
        // An unsatisfied atom or implication reduces to bot itself.
        Formula::Atom(_) | Formula::Impl(..) => b.axiom(Formula::bot()),
        Formula::Disj(children) => {
            if children.is_empty() {
                return b.axiom(Formula::bot());
            }
            let reduced = reduct_unchecked(f, i);
            let major = b.axiom(reduced);
            let cases: Vec<usize> = children.iter().map(|c| refute(b, c, i)).collect();
            b.disj_elim(major, &cases, BTreeSet::new(), Formula::bot())
        }
        Formula::Conj(children) => {
            let witness = children
                .iter()
                .find(|c| !i.eval(c))
                .expect("an unsatisfied conjunction has an unsatisfied child");
            let reduced_witness = reduct_unchecked(witness, i);
            let whole = b.axiom(reduct_unchecked(f, i));
            let extracted = b.conj_elim(whole, &reduced_witness);
            let sub = refute(b, witness, i);
            let imp = b.impl_intro(sub, reduced_witness);
            b.impl_elim(extracted, imp)
        }
    }
}

/// Map a basic proof of its final sequent to a basic proof of the reduct
/// sequent under `i`.
pub fn reduct_transform(proof: &Proof, i: &Interpretation) -> Result<Proof, TransformError> {
    check_proof(proof, SystemLevel::Basic).map_err(TransformError::InvalidInput)?;
    Ok(transform(proof, i))
}

/// Map an extended proof of its final sequent to a classical-extended proof
/// of the reduct sequent under `i`.
pub fn reduct_transform_extended(
    proof: &Proof,
    i: &Interpretation,
) -> Result<Proof, TransformError> {
    check_proof(proof, SystemLevel::Extended).map_err(TransformError::InvalidInput)?;
    Ok(transform(proof, i))
}

fn reduct_set(set: &BTreeSet<Formula>, i: &Interpretation) -> BTreeSet<Formula> {
    set.iter().map(|f| reduct_unchecked(f, i)).collect()
}

fn transform(proof: &Proof, i: &Interpretation) -> Proof {
    if proof.is_empty() {
        return Proof::default();
    }
    let mut b = ProofBuilder::new();
    let mut map: Vec<usize> = Vec::with_capacity(proof.len());
    for step in proof.steps() {
        let id = transform_step(&mut b, proof, &map, step, i);
        // Every mapped step concludes exactly the reduct sequent.
        debug_assert_eq!(
            b.sequent(id),
            &Sequent {
                assumptions: reduct_set(&step.sequent.assumptions, i),
                conclusion: reduct_unchecked(&step.sequent.conclusion, i),
            }
        );
        map.push(id);
    }
    b.finish(*map.last().unwrap())
}

fn transform_step(
    b: &mut ProofBuilder,
    proof: &Proof,
    map: &[usize],
    step: &Step,
    i: &Interpretation,
) -> usize {
    let sequent = &step.sequent;
    let original = |p: usize| -> &Sequent { &proof.steps()[p].sequent };
    let target_assumptions = || reduct_set(&sequent.assumptions, i);
    match &step.rule {
        Rule::Axiom => b.axiom(reduct_unchecked(&sequent.conclusion, i)),

        Rule::ConjIntro => {
            let gamma = target_assumptions();
            let premises: Vec<usize> = step.premises.iter().map(|&p| map[p]).collect();
            b.conj_intro(gamma, &premises)
        }

        Rule::ConjElim => {
            let member = reduct_unchecked(&sequent.conclusion, i);
            b.conj_elim(map[step.premises[0]], &member)
        }

        Rule::DisjIntro => {
            let disjunction = reduct_unchecked(&sequent.conclusion, i);
            b.disj_intro(map[step.premises[0]], disjunction)
        }

        Rule::DisjElim => {
            let major = step.premises[0];
            let minors: Vec<&Sequent> = step.premises[1..].iter().map(|&p| original(p)).collect();
            let delta = find_disj_elim_delta(original(major), &minors, sequent)
                .expect("checked proof has a consistent case context");
            let cases: Vec<usize> = step.premises[1..].iter().map(|&p| map[p]).collect();
            b.disj_elim(
                map[major],
                &cases,
                reduct_set(&delta, i),
                reduct_unchecked(&sequent.conclusion, i),
            )
        }

        Rule::ImplIntro => {
            let Formula::Impl(antecedent, _) = &sequent.conclusion else {
                unreachable!("checked proof");
            };
            if i.eval(&sequent.conclusion) {
                let id = b.impl_intro(map[step.premises[0]], reduct_unchecked(antecedent, i));
                b.weaken_to(id, target_assumptions())
            } else {
                // The implication reduces to bot; some assumption must be
                // unsatisfied, and refuting its reduct closes the sequent.
                let unsat = sequent
                    .assumptions
                    .iter()
                    .find(|h| !i.eval(h))
                    .expect("theorem with a false conclusion has a false assumption");
                let refuted = refute(b, unsat, i);
                b.weaken_to(refuted, target_assumptions())
            }
        }

        Rule::ImplElim => {
            let [p1, p2] = step.premises.as_slice() else {
                unreachable!("checked proof");
            };
            let fits = |arg: &Sequent, imp: &Sequent| -> bool {
                matches!(&imp.conclusion, Formula::Impl(a, c)
                    if **a == arg.conclusion && **c == sequent.conclusion)
                    && arg
                        .assumptions
                        .union(&imp.assumptions)
                        .cloned()
                        .collect::<BTreeSet<_>>()
                        == sequent.assumptions
            };
            let (arg, imp) = if fits(original(*p1), original(*p2)) {
                (*p1, *p2)
            } else {
                (*p2, *p1)
            };
            if i.eval(&original(imp).conclusion) {
                b.impl_elim(map[arg], map[imp])
            } else {
                // The implication premise reduces to bot.
                let extra = reduct_set(&original(arg).assumptions, i);
                b.ex_falso(map[imp], reduct_unchecked(&sequent.conclusion, i), extra)
            }
        }

        Rule::Weaken => b.weaken_to(map[step.premises[0]], target_assumptions()),

        Rule::Schema(schema) => transform_schema(b, schema, i),
    }
}

fn transform_schema(b: &mut ProofBuilder, schema: &Schema, i: &Interpretation) -> usize {
    let instance = schema.instantiate().expect("checked proof has valid schemas");
    let reduced_instance = reduct_unchecked(&instance, i);
    match schema {
        Schema::Ht(f, g) => {
            let rf = reduct_unchecked(f, i);
            if i.eval(g) {
                // Derive from excluded middle on f's reduct: in the f case
                // inject it, in the not-f case derive f^I -> g^I vacuously.
                let rg = reduct_unchecked(g, i);
                let lem = b.schema(Schema::Lem(rf.clone()));
                let direct = {
                    let a = b.axiom(rf.clone());
                    b.disj_intro(a, reduced_instance.clone())
                };
                let vacuous = {
                    let not_rf = Formula::neg(rf.clone());
                    let a_f = b.axiom(rf.clone());
                    let a_n = b.axiom(not_rf);
                    let falsum = b.impl_elim(a_f, a_n);
                    let anything = b.ex_falso(falsum, rg, BTreeSet::new());
                    let imp = b.impl_intro(anything, rf.clone());
                    b.disj_intro(imp, reduced_instance.clone())
                };
                b.disj_elim(lem, &[direct, vacuous], BTreeSet::new(), reduced_instance)
            } else {
                // not g holds, and its reduct g^I -> bot is derivable because
                // the reduct of the unsatisfied g entails bot.
                let refuted = refute(b, g, i);
                let neg = b.impl_intro(refuted, reduct_unchecked(g, i));
                b.disj_intro(neg, reduced_instance)
            }
        }

        Schema::DeMorganConv(family) => {
            let Formula::Impl(antecedent, consequent) = &reduced_instance else {
                unreachable!("a valid De Morgan instance is an implication");
            };
            let conjunction = Formula::conj(family.iter().cloned());
            if i.eval(&conjunction) {
                // The negated conjunction reduces to bot.
                let falsum = b.axiom(Formula::bot());
                let anything =
                    b.ex_falso(falsum, (**consequent).clone(), BTreeSet::new());
                b.impl_intro(anything, (**antecedent).clone())
            } else {
                let unsat = family
                    .iter()
                    .find(|h| !i.eval(h))
                    .expect("unsatisfied conjunction has an unsatisfied member");
                let refuted = refute(b, unsat, i);
                let neg = b.impl_intro(refuted, reduct_unchecked(unsat, i));
                let injected = b.disj_intro(neg, (**consequent).clone());
                b.impl_intro(injected, (**antecedent).clone())
            }
        }

        Schema::DistConjOverDisj(families) => {
            let reduced = families.iter().map(|h| reduct_set(h, i)).collect();
            b.schema(Schema::DistConjOverDisj(reduced))
        }

        Schema::DistDisjOverConj(families) => {
            let reduced = families.iter().map(|h| reduct_set(h, i)).collect();
            b.schema(Schema::DistDisjOverConj(reduced))
        }

        Schema::Lem(_) | Schema::Ilem(_) => {
            unreachable!("not admitted in basic or extended proofs")
        }
    }
}

/// Apply a substitution to every formula of every sequent and every schema
/// parameter of a proof that checks at `level`; rule applications and
/// premise indices are untouched.
pub fn substitute_proof(
    subst: &Substitution,
    proof: &Proof,
    level: SystemLevel,
) -> Result<Proof, TransformError> {
    check_proof(proof, level).map_err(TransformError::InvalidInput)?;
    let steps = proof
        .steps()
        .iter()
        .map(|step| Step {
            sequent: Sequent {
                assumptions: step
                    .sequent
                    .assumptions
                    .iter()
                    .map(|f| subst.apply(f))
                    .collect(),
                conclusion: subst.apply(&step.sequent.conclusion),
            },
            rule: match &step.rule {
                Rule::Schema(s) => Rule::Schema(substitute_schema(subst, s)),
                other => other.clone(),
            },
            premises: step.premises.clone(),
        })
        .collect();
    Ok(Proof::new(steps))
}

fn substitute_schema(subst: &Substitution, schema: &Schema) -> Schema {
    let map_set =
        |h: &BTreeSet<Formula>| -> BTreeSet<Formula> { h.iter().map(|f| subst.apply(f)).collect() };
    match schema {
        Schema::Lem(f) => Schema::Lem(subst.apply(f)),
        Schema::Ht(f, g) => Schema::Ht(subst.apply(f), subst.apply(g)),
        Schema::Ilem(family) => Schema::Ilem(family.iter().map(|f| subst.apply(f)).collect()),
        Schema::DeMorganConv(family) => Schema::DeMorganConv(map_set(family)),
        Schema::DistConjOverDisj(families) => {
            Schema::DistConjOverDisj(families.iter().map(map_set).collect())
        }
        Schema::DistDisjOverConj(families) => {
            Schema::DistDisjOverConj(families.iter().map(map_set).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::Atom;
    use crate::builder::ProofBuilder;
    use crate::proof::Rule;

    fn at(name: &str) -> Formula {
        Formula::atom(Atom::new(name).unwrap())
    }

    fn interp(names: &[&str]) -> Interpretation {
        Interpretation::new(names.iter().map(|n| Atom::new(*n).unwrap()))
    }

    #[test]
    fn refutation_of_a_false_atom_is_one_axiom() {
        let proof = reduct_refutation(&at("p"), &interp(&[])).unwrap();
        assert_eq!(proof.len(), 1);
        assert_eq!(
            proof.final_sequent().unwrap(),
            &Sequent::new([Formula::bot()], Formula::bot())
        );
        assert_eq!(check_proof(&proof, SystemLevel::Basic), Ok(()));
    }

    #[test]
    fn refutation_of_a_false_disjunction() {
        let f = Formula::disj([at("p"), at("q")]);
        let proof = reduct_refutation(&f, &interp(&[])).unwrap();
        assert_eq!(check_proof(&proof, SystemLevel::Basic), Ok(()));
        // both children reduce to bot, which collapse into or{bot}
        assert_eq!(
            proof.final_sequent().unwrap(),
            &Sequent::new([Formula::disj([Formula::bot()])], Formula::bot())
        );
    }

    #[test]
    fn refutation_of_a_false_implication_is_one_axiom() {
        let proof =
            reduct_refutation(&Formula::imp(at("p"), at("q")), &interp(&["p"])).unwrap();
        assert_eq!(proof.len(), 1);
        assert_eq!(check_proof(&proof, SystemLevel::Basic), Ok(()));
    }

    #[test]
    fn refutation_requires_a_false_formula() {
        assert_eq!(
            reduct_refutation(&at("p"), &interp(&["p"])),
            Err(TransformError::FormulaSatisfied)
        );
    }

    #[test]
    fn refutation_of_nested_conjunction() {
        let f = Formula::conj([at("p"), Formula::disj([at("q"), at("r")])]);
        for names in [&[][..], &["p"][..], &["q"][..]] {
            let i = interp(names);
            if i.eval(&f) {
                continue;
            }
            let proof = reduct_refutation(&f, &i).unwrap();
            assert_eq!(check_proof(&proof, SystemLevel::Basic), Ok(()), "{names:?}");
        }
    }

    #[test]
    fn transform_of_identity_implication() {
        let mut b = ProofBuilder::new();
        let ax = b.axiom(at("p"));
        let id = b.impl_intro(ax, at("p"));
        let proof = b.finish(id);
        for names in [&[][..], &["p"][..]] {
            let i = interp(names);
            let out = reduct_transform(&proof, &i).unwrap();
            assert_eq!(check_proof(&out, SystemLevel::Basic), Ok(()));
            let expected = reduct_unchecked(&Formula::imp(at("p"), at("p")), &i);
            assert_eq!(out.final_sequent().unwrap(), &Sequent::theorem(expected));
        }
    }

    #[test]
    fn transform_of_contradictory_conjunction() {
        // p & not p ⊢ bot, via two eliminations and one application
        let conj = Formula::conj([at("p"), Formula::neg(at("p"))]);
        let mut b = ProofBuilder::new();
        let ax = b.axiom(conj.clone());
        let left = b.conj_elim(ax, &at("p"));
        let right = b.conj_elim(ax, &Formula::neg(at("p")));
        let falsum = b.impl_elim(left, right);
        let proof = b.finish(falsum);
        assert_eq!(check_proof(&proof, SystemLevel::Basic), Ok(()));

        let out = reduct_transform(&proof, &interp(&[])).unwrap();
        assert_eq!(check_proof(&out, SystemLevel::Basic), Ok(()));
        let reduced_assumption = Formula::conj([
            Formula::bot(),
            Formula::imp(Formula::bot(), Formula::bot()),
        ]);
        assert_eq!(
            out.final_sequent().unwrap(),
            &Sequent::new([reduced_assumption], Formula::bot())
        );
    }

    #[test]
    fn transform_rejects_unchecked_input() {
        let bogus = Proof::new(alloc::vec![Step {
            sequent: Sequent::theorem(at("p")),
            rule: Rule::Axiom,
            premises: alloc::vec![],
        }]);
        assert!(matches!(
            reduct_transform(&bogus, &interp(&[])),
            Err(TransformError::InvalidInput(_))
        ));
    }

    #[test]
    fn extended_transform_of_a_single_ht_step() {
        let mut b = ProofBuilder::new();
        let id = b.schema(Schema::Ht(at("p"), at("q")));
        let proof = b.finish(id);
        for names in [&[][..], &["p"][..], &["q"][..], &["p", "q"][..]] {
            let i = interp(names);
            let out = reduct_transform_extended(&proof, &i).unwrap();
            assert_eq!(
                check_proof(&out, SystemLevel::ClassicalExtended),
                Ok(()),
                "{names:?}"
            );
            let instance = Schema::Ht(at("p"), at("q")).instantiate().unwrap();
            assert_eq!(
                out.final_sequent().unwrap(),
                &Sequent::theorem(reduct_unchecked(&instance, &i))
            );
        }
    }

    #[test]
    fn extended_transform_of_singleton_distributivity() {
        let families = alloc::vec![
            [at("p")].into_iter().collect::<BTreeSet<_>>(),
            [at("q")].into_iter().collect(),
        ];
        let mut b = ProofBuilder::new();
        let id = b.schema(Schema::DistConjOverDisj(families));
        let proof = b.finish(id);
        for names in [&[][..], &["p", "q"][..]] {
            let out = reduct_transform_extended(&proof, &interp(names)).unwrap();
            assert_eq!(check_proof(&out, SystemLevel::ClassicalExtended), Ok(()));
            assert_eq!(out.len(), 1, "re-instantiation stays a single step");
        }
    }

    #[test]
    fn extended_transform_of_demorgan_schema() {
        let family: BTreeSet<Formula> = [at("p"), at("q")].into_iter().collect();
        let mut b = ProofBuilder::new();
        let id = b.schema(Schema::DeMorganConv(family));
        let proof = b.finish(id);
        for names in [&[][..], &["p"][..], &["p", "q"][..]] {
            let i = interp(names);
            let out = reduct_transform_extended(&proof, &i).unwrap();
            assert_eq!(check_proof(&out, SystemLevel::ClassicalExtended), Ok(()), "{names:?}");
        }
    }

    #[test]
    fn substitution_maps_a_checked_proof() {
        // not (p v q) <-> not p & not q, instantiated at p := F, q := G
        let base = crate::library::generate("neg_disj_pair", None).unwrap();
        let f_img = Formula::conj([at("a"), at("b")]);
        let g_img = Formula::neg(at("c"));
        let subst = Substitution::new([
            (Atom::new("p").unwrap(), f_img.clone()),
            (Atom::new("q").unwrap(), g_img.clone()),
        ]);
        let mapped = substitute_proof(&subst, &base.proof, SystemLevel::Basic).unwrap();
        assert_eq!(check_proof(&mapped, SystemLevel::Basic), Ok(()));
        let expected = Formula::iff(
            Formula::neg(Formula::disj([f_img.clone(), g_img.clone()])),
            Formula::conj([Formula::neg(f_img), Formula::neg(g_img)]),
        );
        assert_eq!(mapped.final_sequent().unwrap(), &Sequent::theorem(expected));
    }

    #[test]
    fn substitution_collapsing_two_atoms_still_checks() {
        let base = crate::library::generate("neg_disj_pair", None).unwrap();
        let subst = Substitution::new([
            (Atom::new("p").unwrap(), at("r")),
            (Atom::new("q").unwrap(), at("r")),
        ]);
        let mapped = substitute_proof(&subst, &base.proof, SystemLevel::Basic).unwrap();
        assert_eq!(check_proof(&mapped, SystemLevel::Basic), Ok(()));
    }
}
