//! Sequents, derivation rules, and the checking kernel.
//!
//! A proof is a topologically ordered list of steps; each step carries its
//! sequent, the rule that justifies it, and the indices of earlier steps it
//! uses.  The kernel stores only core rules: the contradiction rule is the
//! special case of disjunction elimination with an empty disjunction, and
//! biconditionals are plain two-implication conjunctions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::atom::Atom;
use crate::formula::Formula;

/// `Γ ⊢ F`: a conclusion under a finite set of assumptions.  A sequent with
/// no assumptions is identified with its conclusion formula.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Sequent {
    pub assumptions: BTreeSet<Formula>,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(assumptions: impl IntoIterator<Item = Formula>, conclusion: Formula) -> Self {
        Sequent {
            assumptions: assumptions.into_iter().collect(),
            conclusion,
        }
    }

    /// A sequent with no assumptions.
    pub fn theorem(conclusion: Formula) -> Self {
        Sequent::new([], conclusion)
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = self.conclusion.atoms();
        for f in &self.assumptions {
            f.collect_atoms(&mut out);
        }
        out
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.assumptions.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        if !self.assumptions.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "|- {}", self.conclusion)
    }
}

/// Axiom schemas admitted beyond the basic rules.  Parameters fully
/// determine the axiom instance; the checker recomputes it and compares.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Schema {
    /// `F v not F`
    Lem(Formula),
    /// Case split over a family: for every subset J of the (indexed) family,
    /// one disjunct conjoining the members in J and the negated members
    /// outside J.  Empty inner conjunctions stay explicit as `and{}`.
    Ilem(Vec<Formula>),
    /// `F v (F -> G) v not G`
    Ht(Formula, Formula),
    /// `not and{H} -> or{not F : F in H}`
    DeMorganConv(BTreeSet<Formula>),
    /// `and{or{H_i}} -> or{and{F_i} : selectors}`, the disjunction ranging
    /// over the Cartesian product of the families.
    DistConjOverDisj(Vec<BTreeSet<Formula>>),
    /// `and{or{F_i} : selectors} -> or{and{H_i}}`
    DistDisjOverConj(Vec<BTreeSet<Formula>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemaError {
    EmptyFamily,
    FamilyTooLarge { size: usize, limit: usize },
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemaError::EmptyFamily => f.write_str("schema family must be non-empty"),
            SchemaError::FamilyTooLarge { size, limit } => {
                write!(f, "schema instance would have {size} parts, limit is {limit}")
            }
        }
    }
}

impl core::error::Error for SchemaError {}

const ILEM_FAMILY_LIMIT: usize = 16;
const SELECTOR_LIMIT: usize = 1 << 16;

fn selectors(families: &[BTreeSet<Formula>]) -> Result<Vec<BTreeSet<Formula>>, SchemaError> {
    let mut size: usize = 1;
    for fam in families {
        size = size.saturating_mul(fam.len());
        if size > SELECTOR_LIMIT {
            return Err(SchemaError::FamilyTooLarge {
                size,
                limit: SELECTOR_LIMIT,
            });
        }
    }
    let mut out: Vec<Vec<Formula>> = alloc::vec![Vec::new()];
    for fam in families {
        let mut next = Vec::with_capacity(out.len() * fam.len());
        for partial in &out {
            for choice in fam {
                let mut v = partial.clone();
                v.push(choice.clone());
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|v| v.into_iter().collect()).collect())
}

fn check_dist_families(families: &[BTreeSet<Formula>]) -> Result<(), SchemaError> {
    if families.is_empty() || families.iter().all(|h| h.is_empty()) {
        return Err(SchemaError::EmptyFamily);
    }
    Ok(())
}

impl Schema {
    pub fn name(&self) -> &'static str {
        match self {
            Schema::Lem(_) => "lem",
            Schema::Ilem(_) => "ilem",
            Schema::Ht(..) => "ht",
            Schema::DeMorganConv(_) => "demorgan_conv",
            Schema::DistConjOverDisj(_) => "dist_conj_over_disj",
            Schema::DistDisjOverConj(_) => "dist_disj_over_conj",
        }
    }

    /// The exact axiom instance for these parameters.
    pub fn instantiate(&self) -> Result<Formula, SchemaError> {
        match self {
            Schema::Lem(f) => Ok(Formula::disj([f.clone(), Formula::neg(f.clone())])),
            Schema::Ilem(family) => {
                if family.is_empty() {
                    return Err(SchemaError::EmptyFamily);
                }
                if family.len() > ILEM_FAMILY_LIMIT {
                    return Err(SchemaError::FamilyTooLarge {
                        size: family.len(),
                        limit: ILEM_FAMILY_LIMIT,
                    });
                }
                let n = family.len();
                let mut disjuncts = BTreeSet::new();
                for mask in 0u64..(1u64 << n) {
                    let inside = Formula::conj(
                        family
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| mask & (1u64 << k) != 0)
                            .map(|(_, f)| f.clone()),
                    );
                    let outside = Formula::conj(
                        family
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| mask & (1u64 << k) == 0)
                            .map(|(_, f)| Formula::neg(f.clone())),
                    );
                    disjuncts.insert(Formula::conj([inside, outside]));
                }
                Ok(Formula::Disj(disjuncts))
            }
            Schema::Ht(f, g) => Ok(Formula::disj([
                f.clone(),
                Formula::imp(f.clone(), g.clone()),
                Formula::neg(g.clone()),
            ])),
            Schema::DeMorganConv(h) => Ok(Formula::imp(
                Formula::neg(Formula::conj(h.iter().cloned())),
                Formula::disj(h.iter().cloned().map(Formula::neg)),
            )),
            Schema::DistConjOverDisj(families) => {
                check_dist_families(families)?;
                let antecedent =
                    Formula::conj(families.iter().map(|h| Formula::disj(h.iter().cloned())));
                let consequent =
                    Formula::disj(selectors(families)?.into_iter().map(Formula::Conj));
                Ok(Formula::imp(antecedent, consequent))
            }
            Schema::DistDisjOverConj(families) => {
                check_dist_families(families)?;
                let antecedent =
                    Formula::conj(selectors(families)?.into_iter().map(Formula::Disj));
                let consequent =
                    Formula::disj(families.iter().map(|h| Formula::conj(h.iter().cloned())));
                Ok(Formula::imp(antecedent, consequent))
            }
        }
    }
}

/// Justification of a single step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Rule {
    /// `F ⊢ F`
    Axiom,
    /// One premise `Γ ⊢ H` per child of the concluded conjunction, all with
    /// the same assumption set as the conclusion.
    ConjIntro,
    /// From `Γ ⊢ and{H}` conclude `Γ ⊢ H` for a member of the set.
    ConjElim,
    /// From `Γ ⊢ H` conclude `Γ ⊢ or{...}` for a disjunction containing it.
    DisjIntro,
    /// First premise `Γ ⊢ or{H}`; one premise `Δ, H ⊢ F` per member with a
    /// shared `Δ`; conclusion `Γ, Δ ⊢ F`.  With an empty disjunction this is
    /// the contradiction rule.
    DisjElim,
    /// From `Γ, F ⊢ G` conclude `Γ ⊢ F -> G`.
    ImplIntro,
    /// From `Γ ⊢ F` and `Δ ⊢ F -> G` conclude `Γ, Δ ⊢ G`.
    ImplElim,
    /// Add assumptions (possibly none).
    Weaken,
    /// An axiom schema instance, concluded under no assumptions.
    Schema(Schema),
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Axiom => "axiom",
            Rule::ConjIntro => "conj_intro",
            Rule::ConjElim => "conj_elim",
            Rule::DisjIntro => "disj_intro",
            Rule::DisjElim => "disj_elim",
            Rule::ImplIntro => "impl_intro",
            Rule::ImplElim => "impl_elim",
            Rule::Weaken => "weaken",
            Rule::Schema(s) => s.name(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    pub sequent: Sequent,
    pub rule: Rule,
    pub premises: Vec<usize>,
}

/// A checkable proof object: steps in topological order, premises referring
/// to earlier indices.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Proof {
    steps: Vec<Step>,
}

impl Proof {
    pub fn new(steps: Vec<Step>) -> Self {
        Proof { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn final_sequent(&self) -> Option<&Sequent> {
        self.steps.last().map(|s| &s.sequent)
    }

    /// Atoms occurring anywhere in the proof's sequents.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for step in &self.steps {
            step.sequent.conclusion.collect_atoms(&mut out);
            for f in &step.sequent.assumptions {
                f.collect_atoms(&mut out);
            }
        }
        out
    }
}

/// Which axiom schemas a proof may use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SystemLevel {
    /// Axiom plus the introduction/elimination/weakening rules.
    Basic,
    /// Basic plus the case-split schema (`ilem`).
    BasicIlem,
    /// Basic plus `ht`, `demorgan_conv`, and both distributivity schemas.
    Extended,
    /// Extended with `ht` replaced by `lem`.
    ClassicalExtended,
}

impl SystemLevel {
    pub fn admits(&self, rule: &Rule) -> bool {
        let Rule::Schema(schema) = rule else {
            return true;
        };
        matches!(
            (self, schema),
            (SystemLevel::BasicIlem, Schema::Ilem(_))
                | (
                    SystemLevel::Extended,
                    Schema::Ht(..)
                        | Schema::DeMorganConv(_)
                        | Schema::DistConjOverDisj(_)
                        | Schema::DistDisjOverConj(_),
                )
                | (
                    SystemLevel::ClassicalExtended,
                    Schema::Lem(_)
                        | Schema::DeMorganConv(_)
                        | Schema::DistConjOverDisj(_)
                        | Schema::DistDisjOverConj(_),
                )
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            SystemLevel::Basic => "basic",
            SystemLevel::BasicIlem => "basic-ilem",
            SystemLevel::Extended => "extended",
            SystemLevel::ClassicalExtended => "classical-extended",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckErrorKind {
    BadPremiseIndex(usize),
    RuleMismatch { expected: String, found: String },
    SchemaInstanceMismatch,
    AssumptionSetMismatch,
    RuleNotAdmitted { rule: &'static str, level: &'static str },
    InvalidSchema(SchemaError),
}

/// Why a step was rejected; `step` is the zero-based index into the proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckError {
    pub step: usize,
    pub kind: CheckErrorKind,
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: ", self.step + 1)?;
        match &self.kind {
            CheckErrorKind::BadPremiseIndex(i) => {
                write!(f, "premise index {} is not an earlier step", i + 1)
            }
            CheckErrorKind::RuleMismatch { expected, found } => {
                write!(f, "rule mismatch: expected {expected}, found {found}")
            }
            CheckErrorKind::SchemaInstanceMismatch => {
                f.write_str("conclusion is not the instance determined by the schema parameters")
            }
            CheckErrorKind::AssumptionSetMismatch => {
                f.write_str("assumption sets do not fit the rule")
            }
            CheckErrorKind::RuleNotAdmitted { rule, level } => {
                write!(f, "rule {rule} is not admitted in the {level} system")
            }
            CheckErrorKind::InvalidSchema(e) => write!(f, "invalid schema parameters: {e}"),
        }
    }
}

impl core::error::Error for CheckError {}

/// Validate every step of the proof against the given system level,
/// reporting the first failure.
pub fn check_proof(proof: &Proof, level: SystemLevel) -> Result<(), CheckError> {
    for (index, _) in proof.steps.iter().enumerate() {
        check_step(proof.steps(), index, level).map_err(|kind| CheckError { step: index, kind })?;
    }
    Ok(())
}

fn mismatch(expected: impl Into<String>, found: impl Into<String>) -> CheckErrorKind {
    CheckErrorKind::RuleMismatch {
        expected: expected.into(),
        found: found.into(),
    }
}

fn check_step(steps: &[Step], index: usize, level: SystemLevel) -> Result<(), CheckErrorKind> {
    let step = &steps[index];
    if !level.admits(&step.rule) {
        return Err(CheckErrorKind::RuleNotAdmitted {
            rule: step.rule.name(),
            level: level.name(),
        });
    }
    let mut premises: Vec<&Sequent> = Vec::with_capacity(step.premises.len());
    for &p in &step.premises {
        if p >= index {
            return Err(CheckErrorKind::BadPremiseIndex(p));
        }
        premises.push(&steps[p].sequent);
    }
    let sequent = &step.sequent;

    match &step.rule {
        Rule::Axiom => {
            if !premises.is_empty() {
                return Err(mismatch("no premises", format!("{} premises", premises.len())));
            }
            let expected: BTreeSet<Formula> = [sequent.conclusion.clone()].into_iter().collect();
            if sequent.assumptions != expected {
                return Err(CheckErrorKind::AssumptionSetMismatch);
            }
            Ok(())
        }

        Rule::ConjIntro => {
            let Formula::Conj(children) = &sequent.conclusion else {
                return Err(mismatch("a conjunction", sequent.conclusion.to_string()));
            };
            if let Some(p) = premises.iter().find(|p| p.assumptions != sequent.assumptions) {
                let _ = p;
                return Err(CheckErrorKind::AssumptionSetMismatch);
            }
            let proved: BTreeSet<Formula> =
                premises.iter().map(|p| p.conclusion.clone()).collect();
            if &proved != children {
                return Err(mismatch(
                    "one premise per conjunct",
                    format!("{} premises covering {} conclusions", premises.len(), proved.len()),
                ));
            }
            Ok(())
        }

        Rule::ConjElim => {
            let [premise] = premises.as_slice() else {
                return Err(mismatch("one premise", format!("{} premises", premises.len())));
            };
            let Formula::Conj(children) = &premise.conclusion else {
                return Err(mismatch("premise concluding a conjunction", premise.conclusion.to_string()));
            };
            if !children.contains(&sequent.conclusion) {
                return Err(mismatch(
                    "a member of the premise conjunction",
                    sequent.conclusion.to_string(),
                ));
            }
            if premise.assumptions != sequent.assumptions {
                return Err(CheckErrorKind::AssumptionSetMismatch);
            }
            Ok(())
        }

        Rule::DisjIntro => {
            let [premise] = premises.as_slice() else {
                return Err(mismatch("one premise", format!("{} premises", premises.len())));
            };
            let Formula::Disj(children) = &sequent.conclusion else {
                return Err(mismatch("a disjunction", sequent.conclusion.to_string()));
            };
            if !children.contains(&premise.conclusion) {
                return Err(mismatch(
                    "premise concluding a member of the disjunction",
                    premise.conclusion.to_string(),
                ));
            }
            if premise.assumptions != sequent.assumptions {
                return Err(CheckErrorKind::AssumptionSetMismatch);
            }
            Ok(())
        }

        Rule::DisjElim => {
            let Some((major, minors)) = premises.split_first() else {
                return Err(mismatch("a major premise", "no premises"));
            };
            let Formula::Disj(children) = &major.conclusion else {
                return Err(mismatch("major premise concluding a disjunction", major.conclusion.to_string()));
            };
            if !major.assumptions.is_subset(&sequent.assumptions) {
                return Err(CheckErrorKind::AssumptionSetMismatch);
            }
            if children.is_empty() {
                // Contradiction: anything follows under any extra assumptions.
                if !minors.is_empty() {
                    return Err(mismatch("no case premises for an empty disjunction", format!("{} case premises", minors.len())));
                }
                return Ok(());
            }
            if let Some(bad) = minors.iter().find(|m| m.conclusion != sequent.conclusion) {
                return Err(mismatch(
                    format!("case premises concluding {}", sequent.conclusion),
                    bad.conclusion.to_string(),
                ));
            }
            if find_disj_elim_delta(major, minors, sequent).is_some() {
                Ok(())
            } else {
                Err(CheckErrorKind::AssumptionSetMismatch)
            }
        }

        Rule::ImplIntro => {
            let [premise] = premises.as_slice() else {
                return Err(mismatch("one premise", format!("{} premises", premises.len())));
            };
            let Formula::Impl(antecedent, consequent) = &sequent.conclusion else {
                return Err(mismatch("an implication", sequent.conclusion.to_string()));
            };
            if premise.conclusion != **consequent {
                return Err(mismatch(
                    format!("premise concluding {consequent}"),
                    premise.conclusion.to_string(),
                ));
            }
            let mut expected = sequent.assumptions.clone();
            expected.insert((**antecedent).clone());
            if premise.assumptions != expected {
                return Err(mismatch(
                    "premise assuming the discharged antecedent",
                    format!("{premise}"),
                ));
            }
            Ok(())
        }

        Rule::ImplElim => {
            let [p1, p2] = premises.as_slice() else {
                return Err(mismatch("two premises", format!("{} premises", premises.len())));
            };
            let fits = |arg: &Sequent, imp: &Sequent| -> bool {
                let Formula::Impl(a, b) = &imp.conclusion else {
                    return false;
                };
                **a == arg.conclusion
                    && **b == sequent.conclusion
                    && arg
                        .assumptions
                        .union(&imp.assumptions)
                        .cloned()
                        .collect::<BTreeSet<_>>()
                        == sequent.assumptions
            };
            if fits(p1, p2) || fits(p2, p1) {
                Ok(())
            } else {
                Err(mismatch(
                    "an argument premise and a matching implication premise",
                    format!("{p1} and {p2}"),
                ))
            }
        }

        Rule::Weaken => {
            let [premise] = premises.as_slice() else {
                return Err(mismatch("one premise", format!("{} premises", premises.len())));
            };
            if premise.conclusion != sequent.conclusion {
                return Err(mismatch(
                    format!("premise concluding {}", sequent.conclusion),
                    premise.conclusion.to_string(),
                ));
            }
            if !premise.assumptions.is_subset(&sequent.assumptions) {
                return Err(CheckErrorKind::AssumptionSetMismatch);
            }
            Ok(())
        }

        Rule::Schema(schema) => {
            if !premises.is_empty() {
                return Err(mismatch("no premises", format!("{} premises", premises.len())));
            }
            if !sequent.assumptions.is_empty() {
                return Err(CheckErrorKind::AssumptionSetMismatch);
            }
            let instance = schema.instantiate().map_err(CheckErrorKind::InvalidSchema)?;
            if instance != sequent.conclusion {
                return Err(CheckErrorKind::SchemaInstanceMismatch);
            }
            Ok(())
        }
    }
}

// The shared set of extra assumptions of a disjunction elimination cannot
// be read off a single case sequent (a case formula may itself belong to
// it), so collect the candidates consistent with some case and try each.
// Returns a delta such that the step assumes `Γ ∪ delta` and every case of
// the major disjunction has a premise assuming exactly `delta ∪ {case}`.
pub(crate) fn find_disj_elim_delta(
    major: &Sequent,
    minors: &[&Sequent],
    step: &Sequent,
) -> Option<BTreeSet<Formula>> {
    let Formula::Disj(children) = &major.conclusion else {
        return None;
    };
    let residue: BTreeSet<Formula> = step
        .assumptions
        .difference(&major.assumptions)
        .cloned()
        .collect();
    if children.is_empty() {
        return minors.is_empty().then_some(residue);
    }
    let mut candidates: BTreeSet<BTreeSet<Formula>> = BTreeSet::new();
    candidates.insert(residue);
    for minor in minors {
        candidates.insert(minor.assumptions.clone());
        for case in children.iter().filter(|c| minor.assumptions.contains(c)) {
            let mut without = minor.assumptions.clone();
            without.remove(case);
            candidates.insert(without);
        }
    }
    candidates.into_iter().find(|delta| {
        let union: BTreeSet<Formula> = major.assumptions.union(delta).cloned().collect();
        if union != step.assumptions {
            return false;
        }
        let with_case = |case: &Formula| -> BTreeSet<Formula> {
            let mut a = delta.clone();
            a.insert(case.clone());
            a
        };
        children
            .iter()
            .all(|case| minors.iter().any(|m| m.assumptions == with_case(case)))
            && minors
                .iter()
                .all(|m| children.iter().any(|case| m.assumptions == with_case(case)))
    })
}

// Proof script rendering: one line per step,
// `step N <sequent> by <rule> [from i,j,...] [with <params>]`, 1-based.
impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, step) in self.steps.iter().enumerate() {
            write!(f, "step {} {} by {}", k + 1, step.sequent, step.rule.name())?;
            if !step.premises.is_empty() {
                f.write_str(" from ")?;
                for (j, p) in step.premises.iter().enumerate() {
                    if j > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", p + 1)?;
                }
            }
            if let Rule::Schema(s) = &step.rule {
                f.write_str(" with ")?;
                fmt_schema_params(f, s)?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

fn fmt_family<'a>(
    f: &mut fmt::Formatter<'_>,
    members: impl Iterator<Item = &'a Formula>,
) -> fmt::Result {
    f.write_str("{")?;
    for (k, m) in members.enumerate() {
        if k > 0 {
            f.write_str("; ")?;
        }
        write!(f, "{m}")?;
    }
    f.write_str("}")
}

fn fmt_schema_params(f: &mut fmt::Formatter<'_>, schema: &Schema) -> fmt::Result {
    match schema {
        Schema::Lem(x) => write!(f, "{x}"),
        Schema::Ht(x, y) => write!(f, "{x}, {y}"),
        Schema::Ilem(family) => fmt_family(f, family.iter()),
        Schema::DeMorganConv(family) => fmt_family(f, family.iter()),
        Schema::DistConjOverDisj(families) | Schema::DistDisjOverConj(families) => {
            for (k, fam) in families.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                fmt_family(f, fam.iter())?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn at(name: &str) -> Formula {
        Formula::atom(Atom::new(name).unwrap())
    }

    fn step(sequent: Sequent, rule: Rule, premises: Vec<usize>) -> Step {
        Step {
            sequent,
            rule,
            premises,
        }
    }

    #[test]
    fn single_axiom_checks() {
        let p = Proof::new(vec![step(
            Sequent::new([at("p")], at("p")),
            Rule::Axiom,
            vec![],
        )]);
        assert_eq!(check_proof(&p, SystemLevel::Basic), Ok(()));
    }

    #[test]
    fn impl_intro_requires_discharged_assumption() {
        // claiming G |- F -> G from G |- G without assuming F first
        let p = Proof::new(vec![
            step(Sequent::new([at("q")], at("q")), Rule::Axiom, vec![]),
            step(
                Sequent::new([at("q")], Formula::imp(at("p"), at("q"))),
                Rule::ImplIntro,
                vec![0],
            ),
        ]);
        let err = check_proof(&p, SystemLevel::Basic).unwrap_err();
        assert_eq!(err.step, 1);
        assert!(matches!(err.kind, CheckErrorKind::RuleMismatch { .. }));
    }

    #[test]
    fn weakened_impl_intro_checks() {
        let p = Proof::new(vec![
            step(Sequent::new([at("q")], at("q")), Rule::Axiom, vec![]),
            step(Sequent::new([at("q"), at("p")], at("q")), Rule::Weaken, vec![0]),
            step(
                Sequent::new([at("q")], Formula::imp(at("p"), at("q"))),
                Rule::ImplIntro,
                vec![1],
            ),
        ]);
        assert_eq!(check_proof(&p, SystemLevel::Basic), Ok(()));
    }

    #[test]
    fn forward_premise_is_rejected() {
        let p = Proof::new(vec![step(
            Sequent::new([at("p")], at("p")),
            Rule::Weaken,
            vec![0],
        )]);
        let err = check_proof(&p, SystemLevel::Basic).unwrap_err();
        assert_eq!(err.kind, CheckErrorKind::BadPremiseIndex(0));
    }

    #[test]
    fn contradiction_is_empty_disj_elim() {
        let p = Proof::new(vec![
            step(Sequent::new([Formula::bot()], Formula::bot()), Rule::Axiom, vec![]),
            step(
                Sequent::new([Formula::bot(), at("q")], at("p")),
                Rule::DisjElim,
                vec![0],
            ),
        ]);
        assert_eq!(check_proof(&p, SystemLevel::Basic), Ok(()));
    }

    #[test]
    fn schema_gating_by_level() {
        let lem = Schema::Lem(at("p"));
        let proof = Proof::new(vec![step(
            Sequent::theorem(lem.instantiate().unwrap()),
            Rule::Schema(lem),
            vec![],
        )]);
        assert!(check_proof(&proof, SystemLevel::ClassicalExtended).is_ok());
        for level in [SystemLevel::Basic, SystemLevel::BasicIlem, SystemLevel::Extended] {
            let err = check_proof(&proof, level).unwrap_err();
            assert!(matches!(err.kind, CheckErrorKind::RuleNotAdmitted { .. }));
        }
    }

    #[test]
    fn schema_instance_is_recomputed() {
        let ht = Schema::Ht(at("p"), at("q"));
        let wrong = Proof::new(vec![step(
            Sequent::theorem(Formula::disj([at("p"), at("q")])),
            Rule::Schema(ht),
            vec![],
        )]);
        let err = check_proof(&wrong, SystemLevel::Extended).unwrap_err();
        assert_eq!(err.kind, CheckErrorKind::SchemaInstanceMismatch);
    }

    #[test]
    fn ilem_instance_keeps_empty_conjunctions() {
        let inst = Schema::Ilem(vec![at("p")]).instantiate().unwrap();
        let expected = Formula::disj([
            Formula::conj([Formula::top(), Formula::conj([Formula::neg(at("p"))])]),
            Formula::conj([Formula::conj([at("p")]), Formula::top()]),
        ]);
        assert_eq!(inst, expected);
        assert!(Schema::Ilem(vec![]).instantiate().is_err());
    }

    #[test]
    fn ht_instance_renders_in_paper_shape() {
        use alloc::string::ToString;
        let inst = Schema::Ht(at("p"), at("q")).instantiate().unwrap();
        assert_eq!(inst.to_string(), "or{p; p -> q; not q}");
    }

    #[test]
    fn singleton_distributivity_instance() {
        use alloc::string::ToString;
        let fams = vec![
            [at("p")].into_iter().collect::<BTreeSet<_>>(),
            [at("q")].into_iter().collect(),
        ];
        let inst = Schema::DistConjOverDisj(fams).instantiate().unwrap();
        assert_eq!(inst.to_string(), "and{or{p}; or{q}} -> or{and{p; q}}");
    }

    #[test]
    fn duplicated_families_multiply_selectors() {
        let fam: BTreeSet<Formula> = [at("p"), at("q")].into_iter().collect();
        let inst = Schema::DistConjOverDisj(vec![fam.clone(), fam]).instantiate().unwrap();
        let Formula::Impl(_, consequent) = inst else { panic!() };
        let Formula::Disj(sel) = *consequent else { panic!() };
        // {p,p} {p,q} {q,q} as sets: three distinct selector conjunctions
        assert_eq!(sel.len(), 3);
    }

    #[test]
    fn conj_intro_of_empty_set_needs_no_premises() {
        let p = Proof::new(vec![step(
            Sequent::new([at("p")], Formula::top()),
            Rule::ConjIntro,
            vec![],
        )]);
        assert_eq!(check_proof(&p, SystemLevel::Basic), Ok(()));
    }

    #[test]
    fn conj_intro_gamma_must_match() {
        let p = Proof::new(vec![
            step(Sequent::new([at("p")], at("p")), Rule::Axiom, vec![]),
            step(Sequent::new([at("q")], at("q")), Rule::Axiom, vec![]),
            step(
                Sequent::new([at("p"), at("q")], Formula::conj([at("p"), at("q")])),
                Rule::ConjIntro,
                vec![0, 1],
            ),
        ]);
        let err = check_proof(&p, SystemLevel::Basic).unwrap_err();
        assert_eq!(err.kind, CheckErrorKind::AssumptionSetMismatch);
    }

    #[test]
    fn disj_elim_requires_a_shared_case_context() {
        // cases carrying different extra assumptions are not an instance
        // of the rule; weakening must align them first
        let disj = Formula::disj([at("p"), at("q")]);
        let p = Proof::new(vec![
            step(Sequent::new([disj.clone()], disj.clone()), Rule::Axiom, vec![]),
            step(Sequent::new([at("f")], at("f")), Rule::Axiom, vec![]),
            step(
                Sequent::new([at("f"), at("r"), at("p")], at("f")),
                Rule::Weaken,
                vec![1],
            ),
            step(
                Sequent::new([at("f"), at("s"), at("q")], at("f")),
                Rule::Weaken,
                vec![1],
            ),
            step(
                Sequent::new([disj, at("f"), at("r"), at("s")], at("f")),
                Rule::DisjElim,
                vec![0, 2, 3],
            ),
        ]);
        let err = check_proof(&p, SystemLevel::Basic).unwrap_err();
        assert_eq!(err.step, 4);
        assert_eq!(err.kind, CheckErrorKind::AssumptionSetMismatch);
    }

    #[test]
    fn conj_intro_premises_must_cover_every_child() {
        let p = Proof::new(vec![
            step(Sequent::new([at("p")], at("p")), Rule::Axiom, vec![]),
            step(
                Sequent::new([at("p")], Formula::conj([at("p"), at("q")])),
                Rule::ConjIntro,
                vec![0],
            ),
        ]);
        let err = check_proof(&p, SystemLevel::Basic).unwrap_err();
        assert!(matches!(err.kind, CheckErrorKind::RuleMismatch { .. }));
    }

    #[test]
    fn disj_elim_with_shared_context() {
        // or{p; q}, p -> r, q -> r |- r  (cases carry the implications)
        let disj = Formula::disj([at("p"), at("q")]);
        let ctx = Formula::conj([
            Formula::imp(at("p"), at("r")),
            Formula::imp(at("q"), at("r")),
        ]);
        let mut steps = vec![
            step(Sequent::new([disj.clone()], disj.clone()), Rule::Axiom, vec![]),
            step(Sequent::new([ctx.clone()], ctx.clone()), Rule::Axiom, vec![]),
        ];
        for (k, a) in [at("p"), at("q")].into_iter().enumerate() {
            let imp = Formula::imp(a.clone(), at("r"));
            steps.push(step(Sequent::new([a.clone()], a.clone()), Rule::Axiom, vec![]));
            steps.push(step(Sequent::new([ctx.clone()], imp.clone()), Rule::ConjElim, vec![1]));
            steps.push(step(
                Sequent::new([ctx.clone(), a], at("r")),
                Rule::ImplElim,
                vec![2 + 3 * k, 3 + 3 * k],
            ));
        }
        steps.push(step(
            Sequent::new([disj, ctx], at("r")),
            Rule::DisjElim,
            vec![0, 4, 7],
        ));
        let p = Proof::new(steps);
        assert_eq!(check_proof(&p, SystemLevel::Basic), Ok(()));
    }
}
