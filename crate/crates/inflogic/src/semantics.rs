//! Satisfaction, reducts, stable models, and strong equivalence.
//!
//! Everything here is brute force over finite signatures: stable models
//! enumerate every candidate interpretation and every proper subset of it,
//! the tautology check walks the full truth table, and the strong
//! equivalence oracle decides `∀I ∀J ⊆ I: J ⊨ F^I ⟺ J ⊨ G^I`.  These
//! enumerations are the semantic ground truth the proof kernel and the
//! grounder are tested against.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::atom::{Atom, Signature};
use crate::formula::Formula;

/// Default cap on signature size for the exponential enumerations.
pub const DEFAULT_ATOM_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemanticsError {
    /// A formula or interpretation mentions an atom outside the signature.
    UnknownAtom(Atom),
    SignatureTooLarge { atoms: usize, limit: usize },
    AtomLimitExceeded { atoms: usize, limit: usize },
    /// Two theories were expected to share a signature.
    SignatureMismatch,
}

impl fmt::Display for SemanticsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemanticsError::UnknownAtom(a) => write!(f, "unknown atom {a}"),
            SemanticsError::SignatureTooLarge { atoms, limit } => {
                write!(f, "signature has {atoms} atoms, limit is {limit}")
            }
            SemanticsError::AtomLimitExceeded { atoms, limit } => {
                write!(f, "formula mentions {atoms} atoms, limit is {limit}")
            }
            SemanticsError::SignatureMismatch => f.write_str("theories have different signatures"),
        }
    }
}

impl core::error::Error for SemanticsError {}

/// A set of true atoms.  Atoms not in the set are false; the checked
/// operations verify the set against a signature first.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Interpretation {
    atoms: BTreeSet<Atom>,
}

impl Interpretation {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
        Interpretation {
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        Interpretation::default()
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.atoms.contains(atom)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Atom> {
        self.atoms.iter()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.atoms.is_subset(&other.atoms)
    }

    /// Membership evaluation of a formula: a conjunction holds when every
    /// child does, a disjunction when some child does, an implication when
    /// the antecedent fails or the consequent holds.
    pub fn eval(&self, f: &Formula) -> bool {
        match f {
            Formula::Atom(a) => self.contains(a),
            Formula::Conj(h) => h.iter().all(|g| self.eval(g)),
            Formula::Disj(h) => h.iter().any(|g| self.eval(g)),
            Formula::Impl(a, b) => !self.eval(a) || self.eval(b),
        }
    }
}

impl FromIterator<Atom> for Interpretation {
    fn from_iter<T: IntoIterator<Item = Atom>>(iter: T) -> Self {
        Interpretation::new(iter)
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.atoms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(a.as_str())?;
        }
        Ok(())
    }
}

fn check_interpretation(sig: &Signature, i: &Interpretation) -> Result<(), SemanticsError> {
    match i.iter().find(|a| !sig.contains(a)) {
        Some(a) => Err(SemanticsError::UnknownAtom(a.clone())),
        None => Ok(()),
    }
}

fn check_formula(sig: &Signature, f: &Formula) -> Result<(), SemanticsError> {
    match f.first_atom_outside(sig) {
        Some(a) => Err(SemanticsError::UnknownAtom(a)),
        None => Ok(()),
    }
}

/// Checked satisfaction: `f` and `i` must both be over `sig`.
pub fn satisfies(sig: &Signature, i: &Interpretation, f: &Formula) -> Result<bool, SemanticsError> {
    check_interpretation(sig, i)?;
    check_formula(sig, f)?;
    Ok(i.eval(f))
}

/// Reduct of `f` with respect to `i`, without signature checks.
///
/// Unsatisfied atoms and unsatisfied implications become `bot`; satisfied
/// implications reduce both sides; conjunctions and disjunctions reduce
/// pointwise (children that coincide after reduction collapse).
pub(crate) fn reduct_unchecked(f: &Formula, i: &Interpretation) -> Formula {
    match f {
        Formula::Atom(a) => {
            if i.contains(a) {
                f.clone()
            } else {
                Formula::bot()
            }
        }
        Formula::Conj(h) => Formula::conj(h.iter().map(|g| reduct_unchecked(g, i))),
        Formula::Disj(h) => Formula::disj(h.iter().map(|g| reduct_unchecked(g, i))),
        Formula::Impl(a, b) => {
            if i.eval(f) {
                Formula::imp(reduct_unchecked(a, i), reduct_unchecked(b, i))
            } else {
                Formula::bot()
            }
        }
    }
}

/// Checked reduct: `f` and `i` must both be over `sig`.
pub fn reduct(sig: &Signature, f: &Formula, i: &Interpretation) -> Result<Formula, SemanticsError> {
    check_interpretation(sig, i)?;
    check_formula(sig, f)?;
    Ok(reduct_unchecked(f, i))
}

/// A finite set of formulas over a shared signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theory {
    formulas: BTreeSet<Formula>,
    signature: Signature,
}

impl Theory {
    pub fn new(
        signature: Signature,
        formulas: impl IntoIterator<Item = Formula>,
    ) -> Result<Self, SemanticsError> {
        let formulas: BTreeSet<Formula> = formulas.into_iter().collect();
        for f in &formulas {
            check_formula(&signature, f)?;
        }
        Ok(Theory {
            formulas,
            signature,
        })
    }

    pub fn formulas(&self) -> &BTreeSet<Formula> {
        &self.formulas
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// The theory extended with one formula; the signature grows to cover it.
    pub fn with_formula(&self, f: Formula) -> Theory {
        let mut signature = self.signature.clone();
        signature.extend(f.atoms());
        let mut formulas = self.formulas.clone();
        formulas.insert(f);
        Theory {
            formulas,
            signature,
        }
    }

    /// Pointwise reduct of the theory; same signature.
    pub fn reduct(&self, i: &Interpretation) -> Result<Theory, SemanticsError> {
        check_interpretation(&self.signature, i)?;
        Ok(Theory {
            formulas: self
                .formulas
                .iter()
                .map(|f| reduct_unchecked(f, i))
                .collect(),
            signature: self.signature.clone(),
        })
    }

    /// Whether `i` satisfies every formula of the theory.
    pub fn satisfied_by(&self, i: &Interpretation) -> bool {
        self.formulas.iter().all(|f| i.eval(f))
    }
}

/// Outcome of one candidate interpretation during stable-model search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateRecord {
    pub atoms: Interpretation,
    /// Whether the candidate satisfies the reduct of the theory under itself.
    pub satisfies_reduct: bool,
    /// Whether it is minimal among the satisfiers of that reduct.
    pub minimal: bool,
    /// The smallest satisfying proper subset, when one exists.
    pub witness: Option<Interpretation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableModelReport {
    pub models: BTreeSet<Interpretation>,
    pub candidates_examined: usize,
    /// One record per candidate, in candidate order (cardinality, then
    /// lexicographic on the atom list).
    pub records: Vec<CandidateRecord>,
}

// Candidate order: fewer atoms first; among equal cardinalities the subset
// whose atom list is lexicographically smaller comes first.  With atoms
// indexed in sorted order that is: the mask containing the lowest
// differing bit wins.
fn candidate_order(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        if a == b {
            return Ordering::Equal;
        }
        let low = (a ^ b).trailing_zeros();
        if a & (1u64 << low) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

// Compact formula representation for mask-based enumeration.
mod compiled {
    use super::*;
    use alloc::boxed::Box;

    pub(super) struct AtomIndex {
        atoms: Vec<Atom>,
    }

    impl AtomIndex {
        pub(super) fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
            AtomIndex {
                atoms: atoms.into_iter().collect(),
            }
        }

        pub(super) fn len(&self) -> usize {
            self.atoms.len()
        }

        fn position(&self, atom: &Atom) -> u32 {
            self.atoms
                .binary_search(atom)
                .expect("atom must be in the index") as u32
        }

        pub(super) fn mask_of(&self, i: &Interpretation) -> u64 {
            i.iter().fold(0, |m, a| m | 1u64 << self.position(a))
        }

        pub(super) fn interpretation_of(&self, mask: u64) -> Interpretation {
            Interpretation::new(
                self.atoms
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1u64 << k) != 0)
                    .map(|(_, a)| a.clone()),
            )
        }
    }

    pub(super) enum Node {
        Atom(u32),
        Conj(Vec<Node>),
        Disj(Vec<Node>),
        Impl(Box<Node>, Box<Node>),
    }

    pub(super) fn compile(f: &Formula, idx: &AtomIndex) -> Node {
        match f {
            Formula::Atom(a) => Node::Atom(idx.position(a)),
            Formula::Conj(h) => Node::Conj(h.iter().map(|g| compile(g, idx)).collect()),
            Formula::Disj(h) => Node::Disj(h.iter().map(|g| compile(g, idx)).collect()),
            Formula::Impl(a, b) => {
                Node::Impl(Box::new(compile(a, idx)), Box::new(compile(b, idx)))
            }
        }
    }

    pub(super) fn eval(n: &Node, mask: u64) -> bool {
        match n {
            Node::Atom(k) => mask & (1u64 << k) != 0,
            Node::Conj(h) => h.iter().all(|g| eval(g, mask)),
            Node::Disj(h) => h.iter().any(|g| eval(g, mask)),
            Node::Impl(a, b) => !eval(a, mask) || eval(b, mask),
        }
    }

    pub(super) fn reduct(n: &Node, mask: u64) -> Node {
        match n {
            Node::Atom(k) => {
                if mask & (1u64 << k) != 0 {
                    Node::Atom(*k)
                } else {
                    Node::Disj(Vec::new())
                }
            }
            Node::Conj(h) => Node::Conj(h.iter().map(|g| reduct(g, mask)).collect()),
            Node::Disj(h) => Node::Disj(h.iter().map(|g| reduct(g, mask)).collect()),
            Node::Impl(a, b) => {
                if eval(n, mask) {
                    Node::Impl(Box::new(reduct(a, mask)), Box::new(reduct(b, mask)))
                } else {
                    Node::Disj(Vec::new())
                }
            }
        }
    }
}

use compiled::{compile, eval, AtomIndex, Node};

/// Whether `i` is a stable model of `t`: it satisfies the reduct of `t`
/// under `i`, and no proper subset of `i` does.
pub fn is_stable(t: &Theory, i: &Interpretation) -> Result<bool, SemanticsError> {
    check_interpretation(t.signature(), i)?;
    let width = t.signature().len();
    if width > 64 {
        return Err(SemanticsError::SignatureTooLarge {
            atoms: width,
            limit: 64,
        });
    }
    let idx = AtomIndex::new(t.signature().iter().cloned());
    let nodes: Vec<Node> = t.formulas.iter().map(|f| compile(f, &idx)).collect();
    let i_mask = idx.mask_of(i);
    Ok(stability_witness(&nodes, i_mask).is_some_and(|w| w.is_none()))
}

// None: candidate fails its reduct.  Some(None): stable.  Some(Some(j)):
// satisfies the reduct but the proper subset j does too.
fn stability_witness(nodes: &[Node], i_mask: u64) -> Option<Option<u64>> {
    let reducts: Vec<Node> = nodes.iter().map(|n| compiled::reduct(n, i_mask)).collect();
    if !reducts.iter().all(|r| eval(r, i_mask)) {
        return None;
    }
    let mut witness: Option<u64> = None;
    if i_mask != 0 {
        let mut sub = (i_mask - 1) & i_mask;
        loop {
            if reducts.iter().all(|r| eval(r, sub))
                && witness.is_none_or(|w| candidate_order(sub, w) == Ordering::Less)
            {
                witness = Some(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & i_mask;
        }
    }
    Some(witness)
}

/// Enumerate every subset of the signature and test it for stability.
/// Candidates are visited in candidate order; the report is deterministic.
pub fn stable_models(t: &Theory, max_atoms: usize) -> Result<StableModelReport, SemanticsError> {
    let n = t.signature().len();
    if n > max_atoms || n > 63 {
        return Err(SemanticsError::SignatureTooLarge {
            atoms: n,
            limit: max_atoms.min(63),
        });
    }
    let idx = AtomIndex::new(t.signature().iter().cloned());
    let nodes: Vec<Node> = t.formulas.iter().map(|f| compile(f, &idx)).collect();

    let mut masks: Vec<u64> = (0..(1u64 << n)).collect();
    masks.sort_by(|a, b| candidate_order(*a, *b));

    let mut models = BTreeSet::new();
    let mut records = Vec::with_capacity(masks.len());
    for i_mask in masks {
        let atoms = idx.interpretation_of(i_mask);
        let record = match stability_witness(&nodes, i_mask) {
            None => CandidateRecord {
                atoms,
                satisfies_reduct: false,
                minimal: false,
                witness: None,
            },
            Some(None) => {
                models.insert(atoms.clone());
                CandidateRecord {
                    atoms,
                    satisfies_reduct: true,
                    minimal: true,
                    witness: None,
                }
            }
            Some(Some(w)) => CandidateRecord {
                atoms,
                satisfies_reduct: true,
                minimal: false,
                witness: Some(idx.interpretation_of(w)),
            },
        };
        records.push(record);
    }
    Ok(StableModelReport {
        models,
        candidates_examined: records.len(),
        records,
    })
}

/// Whether two theories over the same signature have the same stable models.
pub fn same_stable_models(
    t1: &Theory,
    t2: &Theory,
    max_atoms: usize,
) -> Result<bool, SemanticsError> {
    if t1.signature() != t2.signature() {
        return Err(SemanticsError::SignatureMismatch);
    }
    Ok(stable_models(t1, max_atoms)?.models == stable_models(t2, max_atoms)?.models)
}

/// Whether `f` is satisfied by every interpretation of its own atoms
/// (sufficient: satisfaction only examines occurring atoms).
pub fn is_tautological(f: &Formula, max_atoms: usize) -> Result<bool, SemanticsError> {
    let atoms = f.atoms();
    if atoms.len() > max_atoms || atoms.len() > 63 {
        return Err(SemanticsError::AtomLimitExceeded {
            atoms: atoms.len(),
            limit: max_atoms.min(63),
        });
    }
    let idx = AtomIndex::new(atoms);
    let node = compile(f, &idx);
    Ok((0..(1u64 << idx.len())).all(|mask| eval(&node, mask)))
}

/// Strong-equivalence oracle over a finite signature: true iff for every
/// `I ⊆ sig` and every `J ⊆ I`, `J ⊨ F^I ⟺ J ⊨ G^I`.  Over a finite
/// signature this is the SE-model criterion for interchangeability inside
/// arbitrary theories.
///
/// Satisfaction of a reduct only examines atoms occurring in the two
/// formulas, so the enumeration restricts to those.  When both sides are
/// conjunctions, conjuncts with disjoint atom support evaluate
/// independently; the pair count of each support component is computed by
/// brute force and the components are combined exactly:
/// `#mismatch = #{J ⊨ F^I} + #{J ⊨ G^I} − 2·#{J ⊨ both}`, which is zero
/// iff the two sides agree on every pair.
pub fn strongly_equivalent(
    f: &Formula,
    g: &Formula,
    sig: &Signature,
    max_atoms: usize,
) -> Result<bool, SemanticsError> {
    check_formula(sig, f)?;
    check_formula(sig, g)?;
    if sig.len() > max_atoms || sig.len() > 63 {
        return Err(SemanticsError::SignatureTooLarge {
            atoms: sig.len(),
            limit: max_atoms.min(63),
        });
    }

    let mut occurring = f.atoms();
    occurring.extend(g.atoms());
    let atom_list: Vec<Atom> = occurring.iter().cloned().collect();
    let atom_pos = |a: &Atom| atom_list.binary_search(a).expect("occurring atom");

    let conjuncts = |h: &Formula| -> Vec<Formula> {
        match h {
            Formula::Conj(children) => children.iter().cloned().collect(),
            other => alloc::vec![other.clone()],
        }
    };
    let f_parts = conjuncts(f);
    let g_parts = conjuncts(g);

    // Union-find over occurring atoms; each conjunct's atom set is a clique.
    let mut parent: Vec<usize> = (0..atom_list.len()).collect();
    fn root(parent: &mut [usize], mut k: usize) -> usize {
        while parent[k] != k {
            parent[k] = parent[parent[k]];
            k = parent[k];
        }
        k
    }
    for part in f_parts.iter().chain(&g_parts) {
        let mut prev: Option<usize> = None;
        for a in part.atoms() {
            let k = root(&mut parent, atom_pos(&a));
            if let Some(p) = prev {
                parent[k] = p;
            }
            prev = Some(root(&mut parent, k));
        }
    }

    let mut component_ids: Vec<usize> = (0..atom_list.len())
        .map(|k| root(&mut parent, k))
        .collect();
    let mut roots: Vec<usize> = component_ids.clone();
    roots.sort_unstable();
    roots.dedup();
    for id in &mut component_ids {
        *id = roots.binary_search(id).unwrap();
    }
    // Atomless conjuncts form one extra constant component.
    let component_count = roots.len() + 1;

    let mut f_groups: Vec<Vec<Formula>> = alloc::vec![Vec::new(); component_count];
    let mut g_groups: Vec<Vec<Formula>> = alloc::vec![Vec::new(); component_count];
    let mut group_atoms: Vec<Vec<Atom>> = alloc::vec![Vec::new(); component_count];
    for (k, atom) in atom_list.iter().enumerate() {
        group_atoms[component_ids[k]].push(atom.clone());
    }
    let group_of = |part: &Formula| -> usize {
        match part.atoms().first() {
            Some(a) => component_ids[atom_pos(a)],
            None => component_count - 1,
        }
    };
    for part in f_parts {
        let k = group_of(&part);
        f_groups[k].push(part);
    }
    for part in g_parts {
        let k = group_of(&part);
        g_groups[k].push(part);
    }

    let mut pairs_f: u128 = 1;
    let mut pairs_g: u128 = 1;
    let mut pairs_both: u128 = 1;
    for k in 0..component_count {
        let (a, b, c) = count_se_pairs(
            &Formula::conj(f_groups[k].iter().cloned()),
            &Formula::conj(g_groups[k].iter().cloned()),
            &group_atoms[k],
        );
        pairs_f *= a as u128;
        pairs_g *= b as u128;
        pairs_both *= c as u128;
    }
    Ok(pairs_f + pairs_g == 2 * pairs_both)
}

// Counts over all pairs (I, J ⊆ I) of subsets of `atoms`:
// how many satisfy J ⊨ F^I, J ⊨ G^I, and both.
fn count_se_pairs(f: &Formula, g: &Formula, atoms: &[Atom]) -> (u64, u64, u64) {
    let idx = AtomIndex::new(atoms.iter().cloned());
    let nf = compile(f, &idx);
    let ng = compile(g, &idx);
    let (mut af, mut ag, mut both) = (0u64, 0u64, 0u64);
    for i_mask in 0..(1u64 << atoms.len()) {
        let rf = compiled::reduct(&nf, i_mask);
        let rg = compiled::reduct(&ng, i_mask);
        let mut sub = i_mask;
        loop {
            let sf = eval(&rf, sub);
            let sg = eval(&rg, sub);
            af += sf as u64;
            ag += sg as u64;
            both += (sf && sg) as u64;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & i_mask;
        }
    }
    (af, ag, both)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn at(name: &str) -> Atom {
        Atom::new(name).unwrap()
    }

    fn var(name: &str) -> Formula {
        Formula::atom(at(name))
    }

    fn interp(names: &[&str]) -> Interpretation {
        Interpretation::new(names.iter().map(|n| at(n)))
    }

    fn sig(names: &[&str]) -> Signature {
        Signature::new(names.iter().map(|n| at(n)))
    }

    fn theory(sig_names: &[&str], formulas: Vec<Formula>) -> Theory {
        Theory::new(sig(sig_names), formulas).unwrap()
    }

    #[test]
    fn satisfaction_clauses() {
        let s = sig(&["p", "q"]);
        assert!(satisfies(&s, &interp(&["p"]), &var("p")).unwrap());
        assert!(!satisfies(&s, &interp(&[]), &Formula::bot()).unwrap());
        assert!(!satisfies(&s, &interp(&["p", "q"]), &Formula::bot()).unwrap());
        assert!(satisfies(&s, &interp(&[]), &Formula::imp(var("p"), var("q"))).unwrap());
        assert!(satisfies(&s, &interp(&[]), &Formula::top()).unwrap());
        assert_eq!(
            satisfies(&s, &interp(&[]), &var("zz")),
            Err(SemanticsError::UnknownAtom(at("zz")))
        );
    }

    #[test]
    fn reduct_clauses() {
        let s = sig(&["p", "q"]);
        assert_eq!(reduct(&s, &var("p"), &interp(&[])).unwrap(), Formula::bot());
        assert_eq!(
            reduct(&s, &Formula::imp(var("p"), var("q")), &interp(&["p"])).unwrap(),
            Formula::bot()
        );
        let c = Formula::conj([var("p"), var("q")]);
        assert_eq!(reduct(&s, &c, &interp(&["p", "q"])).unwrap(), c);
        // children merging after reduction
        assert_eq!(
            reduct(&s, &Formula::disj([var("p"), var("q")]), &interp(&[])).unwrap(),
            Formula::disj([Formula::bot()])
        );
    }

    #[test]
    fn theory_reduct_pointwise() {
        let t = theory(&["p", "q"], vec![var("p"), Formula::imp(var("p"), var("q"))]);
        let r = t.reduct(&interp(&["p"])).unwrap();
        let expected: BTreeSet<Formula> = [var("p"), Formula::bot()].into_iter().collect();
        assert_eq!(r.formulas(), &expected);
        let full = t.reduct(&interp(&["p", "q"])).unwrap();
        assert_eq!(full.formulas(), t.formulas());
        let empty = theory(&["p"], vec![]);
        assert!(empty.reduct(&interp(&[])).unwrap().formulas().is_empty());
    }

    #[test]
    fn stability_examples() {
        let t = theory(&["p"], vec![var("p")]);
        assert!(is_stable(&t, &interp(&["p"])).unwrap());

        let t = theory(&["p", "q"], vec![Formula::imp(var("p"), var("q")), var("p")]);
        assert!(is_stable(&t, &interp(&["p", "q"])).unwrap());

        // q -> q supports nothing: the empty set satisfies the reduct.
        let t = theory(&["q"], vec![Formula::imp(var("q"), var("q"))]);
        assert!(!is_stable(&t, &interp(&["q"])).unwrap());
    }

    #[test]
    fn stable_models_of_empty_theory() {
        let t = theory(&["p"], vec![]);
        let report = stable_models(&t, DEFAULT_ATOM_LIMIT).unwrap();
        assert_eq!(report.candidates_examined, 2);
        let expected: BTreeSet<Interpretation> = [Interpretation::empty()].into_iter().collect();
        assert_eq!(report.models, expected);
    }

    #[test]
    fn stable_models_of_excluded_middle_instance() {
        // or{p; not p} admits both the empty model and {p}: computed from
        // the definition (see stability_examples for the pattern).
        let t = theory(&["p"], vec![Formula::disj([var("p"), Formula::neg(var("p"))])]);
        let report = stable_models(&t, DEFAULT_ATOM_LIMIT).unwrap();
        let expected: BTreeSet<Interpretation> =
            [Interpretation::empty(), interp(&["p"])].into_iter().collect();
        assert_eq!(report.models, expected);
    }

    #[test]
    fn candidate_records_are_ordered_and_witnessed() {
        let t = theory(&["p", "q"], vec![Formula::imp(var("q"), var("q"))]);
        let report = stable_models(&t, DEFAULT_ATOM_LIMIT).unwrap();
        let listed: Vec<Interpretation> =
            report.records.iter().map(|r| r.atoms.clone()).collect();
        assert_eq!(
            listed,
            vec![interp(&[]), interp(&["p"]), interp(&["q"]), interp(&["p", "q"])]
        );
        // {q} satisfies the reduct of q -> q but the empty set is smaller.
        let rec = &report.records[2];
        assert!(rec.satisfies_reduct && !rec.minimal);
        assert_eq!(rec.witness, Some(Interpretation::empty()));
    }

    #[test]
    fn tautology_examples() {
        assert!(is_tautological(&Formula::imp(var("p"), var("p")), 20).unwrap());
        assert!(!is_tautological(&Formula::disj([var("p"), var("q")]), 20).unwrap());
        // three-term De Morgan instance
        let ps: Vec<Formula> = (1..=3).map(|k| var(&alloc::format!("p{k}"))).collect();
        let conj_neg = Formula::conj(ps.iter().cloned().map(Formula::neg));
        let neg_disj = Formula::neg(Formula::disj(ps.clone()));
        assert!(is_tautological(&Formula::iff(conj_neg, neg_disj), 20).unwrap());
    }

    #[test]
    fn strong_equivalence_examples() {
        let s = sig(&["p"]);
        assert!(strongly_equivalent(&var("p"), &var("p"), &s, 20).unwrap());
        // classically equivalent, but the reducts under {p} differ at J = {}
        assert!(!strongly_equivalent(
            &var("p"),
            &Formula::neg(Formula::neg(var("p"))),
            &s,
            20
        )
        .unwrap());
    }

    #[test]
    fn strong_equivalence_of_chained_implications() {
        // p0 & and{pi -> pi+1} vs and{p0..p3}
        let p: Vec<Formula> = (0..=3).map(|k| var(&alloc::format!("p{k}"))).collect();
        let chain = Formula::conj([
            p[0].clone(),
            Formula::conj((0..3).map(|k| Formula::imp(p[k].clone(), p[k + 1].clone()))),
        ]);
        let all = Formula::conj(p.iter().cloned());
        let s = sig(&["p0", "p1", "p2", "p3"]);
        assert!(strongly_equivalent(&chain, &all, &s, 20).unwrap());
    }

    #[test]
    fn same_stable_models_examples() {
        let t = theory(&["p", "q"], vec![var("p")]);
        assert!(same_stable_models(&t, &t, 20).unwrap());
        let t1 = theory(&["p", "q"], vec![var("p")]);
        let t2 = theory(&["p", "q"], vec![var("q")]);
        assert!(!same_stable_models(&t1, &t2, 20).unwrap());
        let with_taut = t1.with_formula(Formula::imp(var("p"), var("p")));
        assert!(same_stable_models(&t1, &with_taut, 20).unwrap());
    }

    #[test]
    fn limits_are_enforced() {
        let wide: Vec<Formula> = (0..6).map(|k| var(&alloc::format!("p{k}"))).collect();
        let t = Theory::new(
            Signature::new(wide.iter().flat_map(|f| f.atoms())),
            wide.clone(),
        )
        .unwrap();
        assert!(matches!(
            stable_models(&t, 3),
            Err(SemanticsError::SignatureTooLarge { atoms: 6, limit: 3 })
        ));
        assert!(matches!(
            is_tautological(&Formula::conj(wide), 3),
            Err(SemanticsError::AtomLimitExceeded { atoms: 6, limit: 3 })
        ));
    }

    #[test]
    fn interpretation_display_is_space_joined() {
        assert_eq!(interp(&["q", "p"]).to_string(), "p q");
        assert_eq!(interp(&[]).to_string(), "");
    }
}
