//! Generators for a catalog of theorem schemas, instantiated at a size.
//!
//! Every generator returns a proof object that checks at the declared
//! system level; nothing here is trusted, the kernel re-validates all of
//! it in the test suites.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::atom::Atom;
use crate::builder::ProofBuilder;
use crate::formula::Formula;
use crate::proof::{Proof, Schema, SystemLevel};
use crate::subst::Substitution;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LibraryError {
    UnknownTheorem(String),
    SizeOutOfRange {
        name: &'static str,
        given: usize,
        min: usize,
        max: usize,
    },
}

impl fmt::Display for LibraryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LibraryError::UnknownTheorem(n) => write!(f, "unknown theorem {n:?}"),
            LibraryError::SizeOutOfRange {
                name,
                given,
                min,
                max,
            } => write!(f, "{name}: size {given} out of range {min}..={max}"),
        }
    }
}

impl core::error::Error for LibraryError {}

/// Catalog entry: a named theorem generator and the sizes it accepts.
#[derive(Clone, Copy, Debug)]
pub struct TheoremEntry {
    pub name: &'static str,
    pub level: SystemLevel,
    /// Accepted instantiation sizes, `None` for fixed instances.
    pub size_range: Option<(usize, usize)>,
    pub default_size: usize,
    pub summary: &'static str,
}

/// A generated proof together with its catalog metadata.
#[derive(Clone, Debug)]
pub struct LibraryProof {
    pub name: &'static str,
    pub size: Option<usize>,
    pub level: SystemLevel,
    pub proof: Proof,
}

pub const CATALOG: &[TheoremEntry] = &[
    TheoremEntry {
        name: "induction_chain",
        level: SystemLevel::Basic,
        size_range: Some((1, 6)),
        default_size: 3,
        summary: "p0 & and{pk -> pk+1} <-> and{p0..pn}",
    },
    TheoremEntry {
        name: "split_antecedent",
        level: SystemLevel::Basic,
        size_range: Some((1, 6)),
        default_size: 3,
        summary: "(or{p1..pn} -> q) <-> and{pk -> q}",
    },
    TheoremEntry {
        name: "demorgan_half",
        level: SystemLevel::Basic,
        size_range: Some((1, 6)),
        default_size: 3,
        summary: "or{not pk} -> not and{p1..pn}",
    },
    TheoremEntry {
        name: "demorgan",
        level: SystemLevel::Basic,
        size_range: Some((1, 6)),
        default_size: 3,
        summary: "and{not pk} <-> not or{p1..pn}",
    },
    TheoremEntry {
        name: "dist_conj_over_disj_conv",
        level: SystemLevel::Basic,
        size_range: Some((1, 3)),
        default_size: 2,
        summary: "or over selector conjunctions -> and{or{Hi}}",
    },
    TheoremEntry {
        name: "dist_disj_over_conj_conv",
        level: SystemLevel::Basic,
        size_range: Some((1, 3)),
        default_size: 2,
        summary: "or{and{Hi}} -> and over selector disjunctions",
    },
    TheoremEntry {
        name: "selfneg_replacement",
        level: SystemLevel::Basic,
        size_range: Some((1, 6)),
        default_size: 3,
        summary: "(and{pk -> not pk} -> p0) <-> (and{not pk} -> p0)",
    },
    TheoremEntry {
        name: "weak_excluded_middle",
        level: SystemLevel::Extended,
        size_range: Some((1, 4)),
        default_size: 2,
        summary: "case split over not/not-not of a family",
    },
    TheoremEntry {
        name: "impl_over_disj",
        level: SystemLevel::Extended,
        size_range: Some((1, 4)),
        default_size: 2,
        summary: "(p -> or{qi}) -> or{p -> qi}",
    },
    TheoremEntry {
        name: "atmost_zero_fwd",
        level: SystemLevel::Basic,
        size_range: Some((1, 4)),
        default_size: 2,
        summary: "and{not p(a)} -> at-most-zero translation",
    },
    TheoremEntry {
        name: "atmost_zero_conv",
        level: SystemLevel::Extended,
        size_range: Some((1, 4)),
        default_size: 2,
        summary: "at-most-zero translation -> and{not p(a)}",
    },
    TheoremEntry {
        name: "neg_disj_pair",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "not (p v q) <-> not p & not q",
    },
    TheoremEntry {
        name: "int_id",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "p -> p",
    },
    TheoremEntry {
        name: "int_const",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "p -> (q -> p)",
    },
    TheoremEntry {
        name: "int_chain",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "(p -> q -> r) -> (p -> q) -> p -> r",
    },
    TheoremEntry {
        name: "int_imp_conj",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "(p -> q) & (p -> r) -> (p -> q & r)",
    },
    TheoremEntry {
        name: "int_conj_elim",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "p & q -> p",
    },
    TheoremEntry {
        name: "int_disj_intro",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "p -> p v q",
    },
    TheoremEntry {
        name: "int_disj_merge",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "or{p} -> p",
    },
    TheoremEntry {
        name: "int_neg_conj_half",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "not p v not q -> not (p & q)",
    },
    TheoremEntry {
        name: "int_double_neg",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "p -> not not p",
    },
    TheoremEntry {
        name: "int_contrapose",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "(p -> q) -> (not q -> not p)",
    },
    TheoremEntry {
        name: "int_conj_distrib",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "p & (q v r) -> (p & q) v (p & r)",
    },
    TheoremEntry {
        name: "int_disj_collect",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "(p & q) v (p & r) -> p & (q v r)",
    },
    TheoremEntry {
        name: "int_curry_disj",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "((p v q) -> r) <-> (p -> r) & (q -> r)",
    },
    TheoremEntry {
        name: "int_ex_falso",
        level: SystemLevel::Basic,
        size_range: None,
        default_size: 0,
        summary: "bot -> p",
    },
];

pub fn entry(name: &str) -> Option<&'static TheoremEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

fn at(name: &str) -> Atom {
    Atom::new(name).expect("library atom names are valid")
}

fn var(name: &str) -> Formula {
    Formula::atom(at(name))
}

fn numbered(prefix: &str, k: usize) -> Formula {
    var(&format!("{prefix}{k}"))
}

fn gamma1(f: &Formula) -> BTreeSet<Formula> {
    [f.clone()].into_iter().collect()
}

/// Generate the named theorem at the given size (default when `None`).
pub fn generate(name: &str, size: Option<usize>) -> Result<LibraryProof, LibraryError> {
    let entry = entry(name).ok_or_else(|| LibraryError::UnknownTheorem(name.to_string()))?;
    let size = match entry.size_range {
        None => None,
        Some((min, max)) => {
            let n = size.unwrap_or(entry.default_size);
            if n < min || n > max {
                return Err(LibraryError::SizeOutOfRange {
                    name: entry.name,
                    given: n,
                    min,
                    max,
                });
            }
            Some(n)
        }
    };
    let n = size.unwrap_or(0);
    let proof = match entry.name {
        "induction_chain" => induction_chain(n),
        "split_antecedent" => split_antecedent(n),
        "demorgan_half" => {
            demorgan_half_proof(&(1..=n).map(|k| numbered("p", k)).collect::<Vec<_>>())
        }
        "demorgan" => demorgan_proof(&(1..=n).map(|k| numbered("p", k)).collect::<Vec<_>>()),
        "dist_conj_over_disj_conv" => dist_conj_over_disj_conv(n),
        "dist_disj_over_conj_conv" => dist_disj_over_conj_conv(n),
        "selfneg_replacement" => selfneg_replacement(n),
        "weak_excluded_middle" => {
            let family: Vec<Formula> = (1..=n).map(|k| numbered("p", k)).collect();
            let mut b = ProofBuilder::new();
            let id = weak_excluded_middle_into(&mut b, &family);
            b.finish(id)
        }
        "impl_over_disj" => impl_over_disj(n),
        "atmost_zero_fwd" => atmost_zero_fwd(n),
        "atmost_zero_conv" => atmost_zero_conv(n),
        "neg_disj_pair" => {
            // same two-implication set, oriented as not(p v q) <-> not p & not q
            demorgan_proof(&[var("p"), var("q")])
        }
        "int_id" => int_id(),
        "int_const" => int_const(),
        "int_chain" => int_chain(),
        "int_imp_conj" => int_imp_conj(),
        "int_conj_elim" => int_conj_elim(),
        "int_disj_intro" => int_disj_intro(),
        "int_disj_merge" => int_disj_merge(),
        "int_neg_conj_half" => demorgan_half_proof(&[var("p"), var("q")]),
        "int_double_neg" => int_double_neg(),
        "int_contrapose" => int_contrapose(),
        "int_conj_distrib" => int_conj_distrib(),
        "int_disj_collect" => int_disj_collect(),
        "int_curry_disj" => int_curry_disj(),
        "int_ex_falso" => int_ex_falso(),
        _ => unreachable!("catalog covers all names"),
    };
    Ok(LibraryProof {
        name: entry.name,
        size,
        level: entry.level,
        proof,
    })
}

// p0 & and{pk -> pk+1 : k < n}  <->  and{p0..pn}
fn induction_chain(n: usize) -> Proof {
    let p: Vec<Formula> = (0..=n).map(|k| numbered("p", k)).collect();
    let impls = Formula::conj((0..n).map(|k| Formula::imp(p[k].clone(), p[k + 1].clone())));
    let lhs = Formula::conj([p[0].clone(), impls.clone()]);
    let rhs = Formula::conj(p.iter().cloned());

    let mut b = ProofBuilder::new();
    let ax = b.axiom(lhs.clone());
    let mut proved = Vec::new();
    let mut current = b.conj_elim(ax, &p[0]);
    proved.push(current);
    let impl_part = b.conj_elim(ax, &impls);
    for k in 0..n {
        let step_impl = b.conj_elim(impl_part, &Formula::imp(p[k].clone(), p[k + 1].clone()));
        current = b.impl_elim(current, step_impl);
        proved.push(current);
    }
    let all = b.conj_intro(gamma1(&lhs), &proved);
    let forward = b.impl_intro(all, lhs.clone());

    let ax = b.axiom(rhs.clone());
    let first = b.conj_elim(ax, &p[0]);
    let mut impl_ids = Vec::new();
    for k in 0..n {
        let next = b.conj_elim(ax, &p[k + 1]);
        impl_ids.push(b.impl_intro(next, p[k].clone()));
    }
    let impls_id = b.conj_intro(gamma1(&rhs), &impl_ids);
    let lhs_id = b.conj_intro(gamma1(&rhs), &[first, impls_id]);
    let backward = b.impl_intro(lhs_id, rhs);

    let id = b.conj_intro(BTreeSet::new(), &[forward, backward]);
    b.finish(id)
}

// (or{p1..pn} -> q)  <->  and{pk -> q}
fn split_antecedent(n: usize) -> Proof {
    let ps: Vec<Formula> = (1..=n).map(|k| numbered("p", k)).collect();
    let q = var("q");
    let disj = Formula::disj(ps.iter().cloned());
    let lhs = Formula::imp(disj.clone(), q.clone());
    let rhs = Formula::conj(ps.iter().map(|p| Formula::imp(p.clone(), q.clone())));

    let mut b = ProofBuilder::new();
    let ax_lhs = b.axiom(lhs.clone());
    let mut parts = Vec::new();
    for p in &ps {
        let ax_p = b.axiom(p.clone());
        let injected = b.disj_intro(ax_p, disj.clone());
        let concluded = b.impl_elim(injected, ax_lhs);
        parts.push(b.impl_intro(concluded, p.clone()));
    }
    let all = b.conj_intro(gamma1(&lhs), &parts);
    let forward = b.impl_intro(all, lhs.clone());

    let ax_rhs = b.axiom(rhs.clone());
    let major = b.axiom(disj.clone());
    let mut cases = Vec::new();
    for p in &ps {
        let ax_p = b.axiom(p.clone());
        let member = b.conj_elim(ax_rhs, &Formula::imp(p.clone(), q.clone()));
        cases.push(b.impl_elim(ax_p, member));
    }
    let concluded = b.disj_elim(major, &cases, gamma1(&rhs), q);
    let inner = b.impl_intro(concluded, disj);
    let backward = b.impl_intro(inner, rhs);

    let id = b.conj_intro(BTreeSet::new(), &[forward, backward]);
    b.finish(id)
}

// or{not f : f}  ->  not and{f}
fn demorgan_half_proof(members: &[Formula]) -> Proof {
    let conj = Formula::conj(members.iter().cloned());
    let neg_disj = Formula::disj(members.iter().cloned().map(Formula::neg));
    let target = Formula::neg(conj.clone());

    let mut b = ProofBuilder::new();
    let major = b.axiom(neg_disj.clone());
    let mut cases = Vec::new();
    for m in members {
        let ax_conj = b.axiom(conj.clone());
        let member = b.conj_elim(ax_conj, m);
        let ax_neg = b.axiom(Formula::neg(m.clone()));
        let falsum = b.impl_elim(member, ax_neg);
        cases.push(b.impl_intro(falsum, conj.clone()));
    }
    let concluded = b.disj_elim(major, &cases, BTreeSet::new(), target);
    let id = b.impl_intro(concluded, neg_disj);
    b.finish(id)
}

// and{not f : f}  <->  not or{f}
fn demorgan_proof(members: &[Formula]) -> Proof {
    let disj = Formula::disj(members.iter().cloned());
    let conj_neg = Formula::conj(members.iter().cloned().map(Formula::neg));
    let neg_disj = Formula::neg(disj.clone());

    let mut b = ProofBuilder::new();
    let ax_cn = b.axiom(conj_neg.clone());
    let major = b.axiom(disj.clone());
    let mut cases = Vec::new();
    for m in members {
        let ax_m = b.axiom(m.clone());
        let neg_m = b.conj_elim(ax_cn, &Formula::neg(m.clone()));
        cases.push(b.impl_elim(ax_m, neg_m));
    }
    let falsum = b.disj_elim(major, &cases, gamma1(&conj_neg), Formula::bot());
    let negated = b.impl_intro(falsum, disj.clone());
    let forward = b.impl_intro(negated, conj_neg.clone());

    let ax_nd = b.axiom(neg_disj.clone());
    let mut negs = Vec::new();
    for m in members {
        let ax_m = b.axiom(m.clone());
        let injected = b.disj_intro(ax_m, disj.clone());
        let falsum = b.impl_elim(injected, ax_nd);
        negs.push(b.impl_intro(falsum, m.clone()));
    }
    let collected = b.conj_intro(gamma1(&neg_disj), &negs);
    let backward = b.impl_intro(collected, neg_disj);

    let id = b.conj_intro(BTreeSet::new(), &[forward, backward]);
    b.finish(id)
}

fn dist_families(n: usize) -> Vec<BTreeSet<Formula>> {
    (1..=n)
        .map(|i| (1..=n).map(|j| var(&format!("p{i}_{j}"))).collect())
        .collect()
}

fn cartesian(families: &[BTreeSet<Formula>]) -> Vec<Vec<Formula>> {
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
    out
}

// or{and{selector}}  ->  and{or{Hi}}
fn dist_conj_over_disj_conv(n: usize) -> Proof {
    let families = dist_families(n);
    let selections = cartesian(&families);
    let lhs = Formula::disj(selections.iter().map(|s| Formula::conj(s.iter().cloned())));
    let rhs = Formula::conj(families.iter().map(|h| Formula::disj(h.iter().cloned())));

    let mut b = ProofBuilder::new();
    let major = b.axiom(lhs.clone());
    let mut cases = Vec::new();
    for selection in &selections {
        let flat = Formula::conj(selection.iter().cloned());
        let ax = b.axiom(flat.clone());
        let mut parts = Vec::new();
        for (i, family) in families.iter().enumerate() {
            let picked = b.conj_elim(ax, &selection[i]);
            parts.push(b.disj_intro(picked, Formula::disj(family.iter().cloned())));
        }
        cases.push(b.conj_intro(gamma1(&flat), &parts));
    }
    let concluded = b.disj_elim(major, &cases, BTreeSet::new(), rhs);
    let id = b.impl_intro(concluded, lhs);
    b.finish(id)
}

// or{and{Hi}}  ->  and{or{selector}}
fn dist_disj_over_conj_conv(n: usize) -> Proof {
    let families = dist_families(n);
    let selections = cartesian(&families);
    let lhs = Formula::disj(families.iter().map(|h| Formula::conj(h.iter().cloned())));
    let rhs = Formula::conj(
        selections
            .iter()
            .map(|s| Formula::disj(s.iter().cloned())),
    );

    let mut b = ProofBuilder::new();
    let major = b.axiom(lhs.clone());
    let mut cases = Vec::new();
    for (i, family) in families.iter().enumerate() {
        let flat = Formula::conj(family.iter().cloned());
        let ax = b.axiom(flat.clone());
        let mut parts = Vec::new();
        for selection in &selections {
            let picked = b.conj_elim(ax, &selection[i]);
            parts.push(b.disj_intro(picked, Formula::disj(selection.iter().cloned())));
        }
        cases.push(b.conj_intro(gamma1(&flat), &parts));
    }
    let concluded = b.disj_elim(major, &cases, BTreeSet::new(), rhs);
    let id = b.impl_intro(concluded, lhs);
    b.finish(id)
}

// ∅ ⊢ (pk -> not pk) <-> not pk
fn selfneg_iff_into(b: &mut ProofBuilder, p: &Formula) -> usize {
    let np = Formula::neg(p.clone());
    let selfneg = Formula::imp(p.clone(), np.clone());

    let ax_s = b.axiom(selfneg.clone());
    let ax_p = b.axiom(p.clone());
    let derived = b.impl_elim(ax_p, ax_s);
    let falsum = b.impl_elim(ax_p, derived);
    let neg = b.impl_intro(falsum, p.clone());
    let forward = b.impl_intro(neg, selfneg.clone());

    let ax_n = b.axiom(np.clone());
    let vacuous = b.impl_intro(ax_n, p.clone());
    let backward = b.impl_intro(vacuous, np);

    b.conj_intro(BTreeSet::new(), &[forward, backward])
}

// (and{pk -> not pk} -> p0)  <->  (and{not pk} -> p0), by replacement
fn selfneg_replacement(n: usize) -> Proof {
    let phi = Substitution::new((1..=n).map(|k| {
        let p = numbered("p", k);
        (at(&format!("q{k}")), Formula::imp(p.clone(), Formula::neg(p)))
    }));
    let psi = Substitution::new(
        (1..=n).map(|k| (at(&format!("q{k}")), Formula::neg(numbered("p", k)))),
    );
    let template = Formula::imp(
        Formula::conj((1..=n).map(|k| numbered("q", k))),
        numbered("p", 0),
    );

    let mut b = ProofBuilder::new();
    let (premise, replacement) = replacement_into(&mut b, &phi, &psi, &template);
    let iffs: Vec<usize> = (1..=n)
        .map(|k| selfneg_iff_into(&mut b, &numbered("p", k)))
        .collect();
    let premise_id = b.conj_intro(BTreeSet::new(), &iffs);
    debug_assert_eq!(b.sequent(premise_id).conclusion, premise);
    let id = b.impl_elim(premise_id, replacement);
    b.finish(id)
}

// ∅ ⊢ or over subsets J of {not or{out-of-J}; not not and{in-J}}
pub(crate) fn weak_excluded_middle_into(b: &mut ProofBuilder, family: &[Formula]) -> usize {
    assert!(!family.is_empty(), "family must be non-empty");
    let n = family.len();
    let target = weak_excluded_middle_formula(family);

    // Per member: a not/not-not split derived from the ht schema.
    let mut splits = Vec::new();
    for f in family {
        let nf = Formula::neg(f.clone());
        let nnf = Formula::neg(nf.clone());
        let split = Formula::disj([nf.clone(), nnf.clone()]);
        let ht = b.schema(Schema::Ht(f.clone(), nf.clone()));

        let ax_f = b.axiom(f.clone());
        let ax_nf = b.axiom(nf.clone());
        let falsum = b.impl_elim(ax_f, ax_nf);
        let nn = b.impl_intro(falsum, nf.clone());
        let case_direct = b.disj_intro(nn, split.clone());

        let selfneg = Formula::imp(f.clone(), nf.clone());
        let ax_s = b.axiom(selfneg.clone());
        let derived = b.impl_elim(ax_f, ax_s);
        let falsum = b.impl_elim(ax_f, derived);
        let case_selfneg = {
            let neg = b.impl_intro(falsum, f.clone());
            b.disj_intro(neg, split.clone())
        };

        let ax_nn = b.axiom(nnf.clone());
        let case_nn = b.disj_intro(ax_nn, split.clone());

        splits.push(b.disj_elim(
            ht,
            &[case_direct, case_selfneg, case_nn],
            BTreeSet::new(),
            split,
        ));
    }
    let all_splits = b.conj_intro(BTreeSet::new(), &splits);

    let split_families: Vec<BTreeSet<Formula>> = family
        .iter()
        .map(|f| {
            let nf = Formula::neg(f.clone());
            [nf.clone(), Formula::neg(nf)].into_iter().collect()
        })
        .collect();
    let dist = b.schema(Schema::DistConjOverDisj(split_families));
    let selected = b.impl_elim(all_splits, dist);

    // One case per selector: rebuild the subset-shaped disjunct.
    let mut cases = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let chosen: Vec<Formula> = family
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let nf = Formula::neg(f.clone());
                if mask & (1u64 << k) != 0 {
                    Formula::neg(nf)
                } else {
                    nf
                }
            })
            .collect();
        let flat = Formula::conj(chosen.iter().cloned());
        let ax_flat = b.axiom(flat.clone());

        let outs: Vec<Formula> = family
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) == 0)
            .map(|(_, f)| f.clone())
            .collect();
        let ins: Vec<Formula> = family
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) != 0)
            .map(|(_, f)| f.clone())
            .collect();

        // not or{outs}
        let out_disj = Formula::disj(outs.iter().cloned());
        let ax_d = b.axiom(out_disj.clone());
        let mut refutations = Vec::new();
        for f in &outs {
            let ax_f = b.axiom(f.clone());
            let nf = b.conj_elim(ax_flat, &Formula::neg(f.clone()));
            refutations.push(b.impl_elim(ax_f, nf));
        }
        let falsum = b.disj_elim(ax_d, &refutations, gamma1(&flat), Formula::bot());
        let part_out = b.impl_intro(falsum, out_disj);

        // not not and{ins}
        let in_conj = Formula::conj(ins.iter().cloned());
        let neg_in = Formula::neg(in_conj.clone());
        let mut full: BTreeSet<Formula> = [flat.clone(), neg_in.clone()].into_iter().collect();
        full.extend(ins.iter().cloned());
        let member_ids: Vec<usize> = ins
            .iter()
            .map(|f| {
                let ax = b.axiom(f.clone());
                b.weaken_to(ax, full.clone())
            })
            .collect();
        let rebuilt = b.conj_intro(full.clone(), &member_ids);
        let ax_neg_in = b.axiom(neg_in.clone());
        let mut falsum = b.impl_elim(rebuilt, ax_neg_in);
        for f in ins.iter().rev() {
            let discharged = b.impl_intro(falsum, f.clone());
            let nn = b.conj_elim(ax_flat, &Formula::neg(Formula::neg(f.clone())));
            falsum = b.impl_elim(discharged, nn);
        }
        let part_in = b.impl_intro(falsum, neg_in);

        let disjunct = b.conj_intro(gamma1(&flat), &[part_out, part_in]);
        cases.push(b.disj_intro(disjunct, target.clone()));
    }
    b.disj_elim(selected, &cases, BTreeSet::new(), target)
}

/// The case-split disjunction `weak_excluded_middle_into` concludes.
pub fn weak_excluded_middle_formula(family: &[Formula]) -> Formula {
    let n = family.len();
    Formula::disj((0u64..(1u64 << n)).map(|mask| {
        let outs = family
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) == 0)
            .map(|(_, f)| f.clone());
        let ins = family
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) != 0)
            .map(|(_, f)| f.clone());
        Formula::conj([
            Formula::neg(Formula::disj(outs)),
            Formula::neg(Formula::neg(Formula::conj(ins))),
        ])
    }))
}

// (p -> or{q1..qn})  ->  or{p -> qi}
fn impl_over_disj(n: usize) -> Proof {
    let p = var("p");
    let qs: Vec<Formula> = (1..=n).map(|k| numbered("q", k)).collect();
    let q_disj = Formula::disj(qs.iter().cloned());
    let antecedent = Formula::imp(p.clone(), q_disj.clone());
    let consequent = Formula::disj(qs.iter().map(|q| Formula::imp(p.clone(), q.clone())));
    let target = Formula::imp(antecedent.clone(), consequent.clone());

    let mut b = ProofBuilder::new();
    let ht_ids: Vec<usize> = qs
        .iter()
        .map(|q| b.schema(Schema::Ht(p.clone(), q.clone())))
        .collect();
    let all = b.conj_intro(BTreeSet::new(), &ht_ids);
    let families: Vec<BTreeSet<Formula>> = qs
        .iter()
        .map(|q| {
            [
                p.clone(),
                Formula::imp(p.clone(), q.clone()),
                Formula::neg(q.clone()),
            ]
            .into_iter()
            .collect()
        })
        .collect();
    let dist = b.schema(Schema::DistConjOverDisj(families));
    let selected = b.impl_elim(all, dist);

    #[derive(Clone, Copy, PartialEq)]
    enum Choice {
        Itself,
        Implies,
        Refutes,
    }
    let choices = [Choice::Itself, Choice::Implies, Choice::Refutes];
    let mut assignments: Vec<Vec<Choice>> = alloc::vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for partial in &assignments {
            for c in choices {
                let mut v = partial.clone();
                v.push(c);
                next.push(v);
            }
        }
        assignments = next;
    }

    let mut cases = Vec::new();
    for assignment in &assignments {
        let picks: Vec<Formula> = assignment
            .iter()
            .zip(&qs)
            .map(|(c, q)| match c {
                Choice::Itself => p.clone(),
                Choice::Implies => Formula::imp(p.clone(), q.clone()),
                Choice::Refutes => Formula::neg(q.clone()),
            })
            .collect();
        let flat = Formula::conj(picks.iter().cloned());
        let ax_flat = b.axiom(flat.clone());

        let minor = if assignment.contains(&Choice::Itself) {
            let ax_a = b.axiom(antecedent.clone());
            let p_id = b.conj_elim(ax_flat, &p);
            let q_any = b.impl_elim(p_id, ax_a);
            let mut inner_cases = Vec::new();
            for q in &qs {
                let ax_q = b.axiom(q.clone());
                let imp = b.impl_intro(ax_q, p.clone());
                inner_cases.push(b.disj_intro(imp, consequent.clone()));
            }
            let concluded = b.disj_elim(q_any, &inner_cases, BTreeSet::new(), consequent.clone());
            b.impl_intro(concluded, antecedent.clone())
        } else if let Some(k) = assignment.iter().position(|c| *c == Choice::Implies) {
            let picked = b.conj_elim(ax_flat, &Formula::imp(p.clone(), qs[k].clone()));
            let injected = b.disj_intro(picked, consequent.clone());
            b.impl_intro(injected, antecedent.clone())
        } else {
            // every pick refutes its member, so p is refutable
            let ax_a = b.axiom(antecedent.clone());
            let ax_p = b.axiom(p.clone());
            let q_any = b.impl_elim(ax_p, ax_a);
            let mut refutations = Vec::new();
            for q in &qs {
                let ax_q = b.axiom(q.clone());
                let nq = b.conj_elim(ax_flat, &Formula::neg(q.clone()));
                refutations.push(b.impl_elim(ax_q, nq));
            }
            let falsum = b.disj_elim(q_any, &refutations, gamma1(&flat), Formula::bot());
            let np = b.impl_intro(falsum, p.clone());
            let ax_p2 = b.axiom(p.clone());
            let falsum2 = b.impl_elim(ax_p2, np);
            let anything = b.ex_falso(falsum2, qs[0].clone(), BTreeSet::new());
            let imp = b.impl_intro(anything, p.clone());
            let injected = b.disj_intro(imp, consequent.clone());
            b.impl_intro(injected, antecedent.clone())
        };
        debug_assert_eq!(b.sequent(minor).conclusion, target);
        cases.push(minor);
    }
    let id = b.disj_elim(selected, &cases, BTreeSet::new(), target);
    b.finish(id)
}

const UNIVERSE_NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn domain_atoms(c: usize) -> Vec<Formula> {
    UNIVERSE_NAMES[..c]
        .iter()
        .map(|n| var(&format!("p({n})")))
        .collect()
}

/// The at-most-zero translation over `members`: for every non-empty subset,
/// the conjunction of its members implies the disjunction of the rest.
pub fn atmost_zero_formula(members: &[Formula]) -> Formula {
    let n = members.len();
    Formula::conj((1u64..(1u64 << n)).map(|mask| {
        let ins = members
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) != 0)
            .map(|(_, f)| f.clone());
        let outs = members
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) == 0)
            .map(|(_, f)| f.clone());
        Formula::imp(Formula::conj(ins), Formula::disj(outs))
    }))
}

// and{not p(a)}  ->  at-most-zero translation
fn atmost_zero_fwd(c: usize) -> Proof {
    let members = domain_atoms(c);
    let all_neg = Formula::conj(members.iter().cloned().map(Formula::neg));
    let translation = atmost_zero_formula(&members);

    let mut b = ProofBuilder::new();
    let ax_neg = b.axiom(all_neg.clone());
    let mut parts = Vec::new();
    for mask in 1u64..(1u64 << c) {
        let ins: Vec<Formula> = members
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) != 0)
            .map(|(_, f)| f.clone())
            .collect();
        let outs = members
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) == 0)
            .map(|(_, f)| f.clone());
        let in_conj = Formula::conj(ins.iter().cloned());
        let out_disj = Formula::disj(outs);
        let ax_in = b.axiom(in_conj.clone());
        let witness = &ins[0];
        let w_id = b.conj_elim(ax_in, witness);
        let nw = b.conj_elim(ax_neg, &Formula::neg(witness.clone()));
        let falsum = b.impl_elim(w_id, nw);
        let anything = b.ex_falso(falsum, out_disj, BTreeSet::new());
        parts.push(b.impl_intro(anything, in_conj));
    }
    let collected = b.conj_intro(gamma1(&all_neg), &parts);
    debug_assert_eq!(b.sequent(collected).conclusion, translation);
    let id = b.impl_intro(collected, all_neg);
    b.finish(id)
}

// at-most-zero translation  ->  and{not p(a)}
fn atmost_zero_conv(c: usize) -> Proof {
    let members = domain_atoms(c);
    let all_neg = Formula::conj(members.iter().cloned().map(Formula::neg));
    let translation = atmost_zero_formula(&members);

    let mut b = ProofBuilder::new();
    let split = weak_excluded_middle_into(&mut b, &members);
    let delta = gamma1(&translation);

    let mut cases = Vec::new();
    for mask in 0u64..(1u64 << c) {
        let outs: Vec<Formula> = members
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) == 0)
            .map(|(_, f)| f.clone())
            .collect();
        let ins: Vec<Formula> = members
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) != 0)
            .map(|(_, f)| f.clone())
            .collect();
        let out_disj = Formula::disj(outs.iter().cloned());
        let in_conj = Formula::conj(ins.iter().cloned());
        let disjunct = Formula::conj([
            Formula::neg(out_disj.clone()),
            Formula::neg(Formula::neg(in_conj.clone())),
        ]);
        let ax_d = b.axiom(disjunct.clone());

        let case = if mask == 0 {
            // all members are ruled out by the first conjunct
            let not_any = b.conj_elim(ax_d, &Formula::neg(out_disj.clone()));
            let mut negs = Vec::new();
            for f in &members {
                let ax_f = b.axiom(f.clone());
                let injected = b.disj_intro(ax_f, out_disj.clone());
                let falsum = b.impl_elim(injected, not_any);
                negs.push(b.impl_intro(falsum, f.clone()));
            }
            let collected = b.conj_intro(gamma1(&disjunct), &negs);
            let mut wider = delta.clone();
            wider.insert(disjunct.clone());
            b.weaken_to(collected, wider)
        } else {
            let ax_t = b.axiom(translation.clone());
            let branch = b.conj_elim(ax_t, &Formula::imp(in_conj.clone(), out_disj.clone()));
            let ax_in = b.axiom(in_conj.clone());
            let some_out = b.impl_elim(ax_in, branch);
            let not_out = b.conj_elim(ax_d, &Formula::neg(out_disj));
            let falsum = b.impl_elim(some_out, not_out);
            let refuted_in = b.impl_intro(falsum, in_conj.clone());
            let nn_in = b.conj_elim(ax_d, &Formula::neg(Formula::neg(in_conj)));
            let falsum = b.impl_elim(refuted_in, nn_in);
            b.ex_falso(falsum, all_neg.clone(), BTreeSet::new())
        };
        cases.push(case);
    }
    let concluded = b.disj_elim(split, &cases, delta, all_neg);
    let id = b.impl_intro(concluded, translation);
    b.finish(id)
}

/// Proof of `⊢ and{images <-> images} -> (phi F <-> psi F)` for two
/// substitutions over the same index set, by induction on `f`.  Returns an
/// error when the index sets differ.
pub fn replacement_proof(
    phi: &Substitution,
    psi: &Substitution,
    f: &Formula,
) -> Result<Proof, ReplacementError> {
    if phi.index_atoms() != psi.index_atoms() {
        return Err(ReplacementError);
    }
    let mut b = ProofBuilder::new();
    let (_, id) = replacement_into(&mut b, phi, psi, f);
    Ok(b.finish(id))
}

/// The index sets of the two substitutions differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReplacementError;

impl fmt::Display for ReplacementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("substitutions have different index sets")
    }
}

impl core::error::Error for ReplacementError {}

// Builds ∅ ⊢ premise -> (phi f <-> psi f) and returns (premise, step id).
fn replacement_into(
    b: &mut ProofBuilder,
    phi: &Substitution,
    psi: &Substitution,
    f: &Formula,
) -> (Formula, usize) {
    let premise = Formula::conj(phi.iter().map(|(p, image)| {
        Formula::iff(
            image.clone(),
            psi.get(p).expect("same index set").clone(),
        )
    }));
    let iff_id = replacement_iff(b, phi, psi, &premise, f);
    let id = b.impl_intro(iff_id, premise.clone());
    (premise, id)
}

// {premise} ⊢ phi f <-> psi f
fn replacement_iff(
    b: &mut ProofBuilder,
    phi: &Substitution,
    psi: &Substitution,
    premise: &Formula,
    f: &Formula,
) -> usize {
    let gamma = gamma1(premise);
    match f {
        Formula::Atom(a) => match (phi.get(a), psi.get(a)) {
            (Some(phi_img), Some(psi_img)) => {
                let ax = b.axiom(premise.clone());
                b.conj_elim(ax, &Formula::iff(phi_img.clone(), psi_img.clone()))
            }
            _ => {
                // base atom: f <-> f
                let ax = b.axiom(f.clone());
                let refl = b.impl_intro(ax, f.clone());
                let iff = b.conj_intro(BTreeSet::new(), &[refl]);
                b.weaken_to(iff, gamma)
            }
        },
        Formula::Conj(children) => {
            let phi_f = phi.apply(f);
            let psi_f = psi.apply(f);
            let child_iffs: Vec<(Formula, Formula, usize)> = children
                .iter()
                .map(|c| {
                    let id = replacement_iff(b, phi, psi, premise, c);
                    (phi.apply(c), psi.apply(c), id)
                })
                .collect();
            let half = |b: &mut ProofBuilder, forward: bool| -> usize {
                let from = if forward { &phi_f } else { &psi_f };
                let ax_from = b.axiom(from.clone());
                let mut gamma_in = gamma.clone();
                gamma_in.insert(from.clone());
                let mut parts = Vec::new();
                for (phi_c, psi_c, iff_id) in &child_iffs {
                    let (src, dst) = if forward { (phi_c, psi_c) } else { (psi_c, phi_c) };
                    let member = b.conj_elim(ax_from, src);
                    let imp = b.conj_elim(*iff_id, &Formula::imp(src.clone(), dst.clone()));
                    let out = b.impl_elim(member, imp);
                    parts.push(b.weaken_to(out, gamma_in.clone()));
                }
                let collected = b.conj_intro(gamma_in, &parts);
                let id = b.impl_intro(collected, from.clone());
                b.weaken_to(id, gamma.clone())
            };
            let fwd = half(b, true);
            let bwd = half(b, false);
            b.conj_intro(gamma, &[fwd, bwd])
        }
        Formula::Disj(children) => {
            let phi_f = phi.apply(f);
            let psi_f = psi.apply(f);
            let child_iffs: Vec<(Formula, Formula, usize)> = children
                .iter()
                .map(|c| {
                    let id = replacement_iff(b, phi, psi, premise, c);
                    (phi.apply(c), psi.apply(c), id)
                })
                .collect();
            let half = |b: &mut ProofBuilder, forward: bool| -> usize {
                let (from, to) = if forward {
                    (&phi_f, &psi_f)
                } else {
                    (&psi_f, &phi_f)
                };
                let major = b.axiom(from.clone());
                let mut cases = Vec::new();
                for (phi_c, psi_c, iff_id) in &child_iffs {
                    let (src, dst) = if forward { (phi_c, psi_c) } else { (psi_c, phi_c) };
                    let ax = b.axiom(src.clone());
                    let imp = b.conj_elim(*iff_id, &Formula::imp(src.clone(), dst.clone()));
                    let out = b.impl_elim(ax, imp);
                    cases.push(b.disj_intro(out, to.clone()));
                }
                let concluded = b.disj_elim(major, &cases, gamma.clone(), to.clone());
                let id = b.impl_intro(concluded, from.clone());
                b.weaken_to(id, gamma.clone())
            };
            let fwd = half(b, true);
            let bwd = half(b, false);
            b.conj_intro(gamma, &[fwd, bwd])
        }
        Formula::Impl(x, y) => {
            let iff_x = replacement_iff(b, phi, psi, premise, x);
            let iff_y = replacement_iff(b, phi, psi, premise, y);
            let (phi_x, psi_x) = (phi.apply(x), psi.apply(x));
            let (phi_y, psi_y) = (phi.apply(y), psi.apply(y));
            let phi_f = Formula::imp(phi_x.clone(), phi_y.clone());
            let psi_f = Formula::imp(psi_x.clone(), psi_y.clone());
            let half = |b: &mut ProofBuilder, forward: bool| -> usize {
                let (from, to_x, to_y, from_x) = if forward {
                    (&phi_f, &psi_x, &psi_y, &phi_x)
                } else {
                    (&psi_f, &phi_x, &phi_y, &psi_x)
                };
                let from_y = if forward { &phi_y } else { &psi_y };
                let ax_from = b.axiom(from.clone());
                let ax_tox = b.axiom(to_x.clone());
                let back_x = b.conj_elim(iff_x, &Formula::imp(to_x.clone(), from_x.clone()));
                let got_x = b.impl_elim(ax_tox, back_x);
                let got_y = b.impl_elim(got_x, ax_from);
                let fwd_y = b.conj_elim(iff_y, &Formula::imp(from_y.clone(), to_y.clone()));
                let got_to_y = b.impl_elim(got_y, fwd_y);
                let inner = b.impl_intro(got_to_y, to_x.clone());
                let mut outer_gamma = gamma.clone();
                outer_gamma.insert(from.clone());
                let inner = b.weaken_to(inner, outer_gamma);
                let id = b.impl_intro(inner, from.clone());
                b.weaken_to(id, gamma.clone())
            };
            let fwd = half(b, true);
            let bwd = half(b, false);
            b.conj_intro(gamma, &[fwd, bwd])
        }
    }
}

fn int_id() -> Proof {
    let mut b = ProofBuilder::new();
    let ax = b.axiom(var("p"));
    let id = b.impl_intro(ax, var("p"));
    b.finish(id)
}

fn int_const() -> Proof {
    let mut b = ProofBuilder::new();
    let ax = b.axiom(var("p"));
    let inner = b.impl_intro(ax, var("q"));
    let id = b.impl_intro(inner, var("p"));
    b.finish(id)
}

fn int_chain() -> Proof {
    let (p, q, r) = (var("p"), var("q"), var("r"));
    let a = Formula::imp(p.clone(), Formula::imp(q.clone(), r.clone()));
    let c = Formula::imp(p.clone(), q.clone());
    let mut b = ProofBuilder::new();
    let ax_a = b.axiom(a.clone());
    let ax_c = b.axiom(c.clone());
    let ax_p = b.axiom(p.clone());
    let got_q = b.impl_elim(ax_p, ax_c);
    let got_qr = b.impl_elim(ax_p, ax_a);
    let got_r = b.impl_elim(got_q, got_qr);
    let s1 = b.impl_intro(got_r, p.clone());
    let s2 = b.impl_intro(s1, c);
    let id = b.impl_intro(s2, a);
    b.finish(id)
}

fn int_imp_conj() -> Proof {
    let (p, q, r) = (var("p"), var("q"), var("r"));
    let pq = Formula::imp(p.clone(), q.clone());
    let pr = Formula::imp(p.clone(), r.clone());
    let both = Formula::conj([pq.clone(), pr.clone()]);
    let mut b = ProofBuilder::new();
    let ax = b.axiom(both.clone());
    let ax_p = b.axiom(p.clone());
    let e1 = b.conj_elim(ax, &pq);
    let e2 = b.conj_elim(ax, &pr);
    let got_q = b.impl_elim(ax_p, e1);
    let got_r = b.impl_elim(ax_p, e2);
    let gamma: BTreeSet<Formula> = [both.clone(), p.clone()].into_iter().collect();
    let got_q = b.weaken_to(got_q, gamma.clone());
    let got_r = b.weaken_to(got_r, gamma.clone());
    let pair = b.conj_intro(gamma, &[got_q, got_r]);
    let inner = b.impl_intro(pair, p);
    let id = b.impl_intro(inner, both);
    b.finish(id)
}

fn int_conj_elim() -> Proof {
    let c = Formula::conj([var("p"), var("q")]);
    let mut b = ProofBuilder::new();
    let ax = b.axiom(c.clone());
    let first = b.conj_elim(ax, &var("p"));
    let id = b.impl_intro(first, c);
    b.finish(id)
}

fn int_disj_intro() -> Proof {
    let d = Formula::disj([var("p"), var("q")]);
    let mut b = ProofBuilder::new();
    let ax = b.axiom(var("p"));
    let injected = b.disj_intro(ax, d);
    let id = b.impl_intro(injected, var("p"));
    b.finish(id)
}

fn int_disj_merge() -> Proof {
    let d = Formula::disj([var("p")]);
    let mut b = ProofBuilder::new();
    let major = b.axiom(d.clone());
    let case = b.axiom(var("p"));
    let merged = b.disj_elim(major, &[case], BTreeSet::new(), var("p"));
    let id = b.impl_intro(merged, d);
    b.finish(id)
}

fn int_double_neg() -> Proof {
    let p = var("p");
    let np = Formula::neg(p.clone());
    let mut b = ProofBuilder::new();
    let ax_p = b.axiom(p.clone());
    let ax_np = b.axiom(np.clone());
    let falsum = b.impl_elim(ax_p, ax_np);
    let nn = b.impl_intro(falsum, np);
    let id = b.impl_intro(nn, p);
    b.finish(id)
}

fn int_contrapose() -> Proof {
    let (p, q) = (var("p"), var("q"));
    let pq = Formula::imp(p.clone(), q.clone());
    let nq = Formula::neg(q.clone());
    let mut b = ProofBuilder::new();
    let ax_pq = b.axiom(pq.clone());
    let ax_nq = b.axiom(nq.clone());
    let ax_p = b.axiom(p.clone());
    let got_q = b.impl_elim(ax_p, ax_pq);
    let falsum = b.impl_elim(got_q, ax_nq);
    let np = b.impl_intro(falsum, p);
    let inner = b.impl_intro(np, nq);
    let id = b.impl_intro(inner, pq);
    b.finish(id)
}

fn int_conj_distrib() -> Proof {
    let (p, q, r) = (var("p"), var("q"), var("r"));
    let qr = Formula::disj([q.clone(), r.clone()]);
    let lhs = Formula::conj([p.clone(), qr.clone()]);
    let rhs = Formula::disj([
        Formula::conj([p.clone(), q.clone()]),
        Formula::conj([p.clone(), r.clone()]),
    ]);
    let mut b = ProofBuilder::new();
    let ax = b.axiom(lhs.clone());
    let p_id = b.conj_elim(ax, &p);
    let major = b.conj_elim(ax, &qr);
    let mut cases = Vec::new();
    for w in [q, r] {
        let ax_w = b.axiom(w.clone());
        let gamma: BTreeSet<Formula> = [lhs.clone(), w.clone()].into_iter().collect();
        let p_in = b.weaken_to(p_id, gamma.clone());
        let w_in = b.weaken_to(ax_w, gamma.clone());
        let pair = b.conj_intro(gamma, &[p_in, w_in]);
        cases.push(b.disj_intro(pair, rhs.clone()));
    }
    let concluded = b.disj_elim(major, &cases, gamma1(&lhs), rhs);
    let id = b.impl_intro(concluded, lhs);
    b.finish(id)
}

fn int_disj_collect() -> Proof {
    let (p, q, r) = (var("p"), var("q"), var("r"));
    let qr = Formula::disj([q.clone(), r.clone()]);
    let lhs = Formula::disj([
        Formula::conj([p.clone(), q.clone()]),
        Formula::conj([p.clone(), r.clone()]),
    ]);
    let rhs = Formula::conj([p.clone(), qr.clone()]);
    let mut b = ProofBuilder::new();
    let major = b.axiom(lhs.clone());
    let mut cases = Vec::new();
    for w in [q, r] {
        let cw = Formula::conj([p.clone(), w.clone()]);
        let ax = b.axiom(cw.clone());
        let p_id = b.conj_elim(ax, &p);
        let w_id = b.conj_elim(ax, &w);
        let injected = b.disj_intro(w_id, qr.clone());
        let pair = b.conj_intro(gamma1(&cw), &[p_id, injected]);
        cases.push(pair);
    }
    let concluded = b.disj_elim(major, &cases, BTreeSet::new(), rhs);
    let id = b.impl_intro(concluded, lhs);
    b.finish(id)
}

fn int_curry_disj() -> Proof {
    // shares the shape of split_antecedent at two members, with r as target
    let (p, q, r) = (var("p"), var("q"), var("r"));
    let disj = Formula::disj([p.clone(), q.clone()]);
    let lhs = Formula::imp(disj.clone(), r.clone());
    let rhs = Formula::conj([
        Formula::imp(p.clone(), r.clone()),
        Formula::imp(q.clone(), r.clone()),
    ]);
    let mut b = ProofBuilder::new();
    let ax_lhs = b.axiom(lhs.clone());
    let mut parts = Vec::new();
    for w in [&p, &q] {
        let ax_w = b.axiom((*w).clone());
        let injected = b.disj_intro(ax_w, disj.clone());
        let concluded = b.impl_elim(injected, ax_lhs);
        parts.push(b.impl_intro(concluded, (*w).clone()));
    }
    let collected = b.conj_intro(gamma1(&lhs), &parts);
    let forward = b.impl_intro(collected, lhs.clone());

    let ax_rhs = b.axiom(rhs.clone());
    let major = b.axiom(disj.clone());
    let mut cases = Vec::new();
    for w in [&p, &q] {
        let ax_w = b.axiom((*w).clone());
        let member = b.conj_elim(ax_rhs, &Formula::imp((*w).clone(), r.clone()));
        cases.push(b.impl_elim(ax_w, member));
    }
    let concluded = b.disj_elim(major, &cases, gamma1(&rhs), r);
    let inner = b.impl_intro(concluded, disj);
    let backward = b.impl_intro(inner, rhs);
    let id = b.conj_intro(BTreeSet::new(), &[forward, backward]);
    b.finish(id)
}

fn int_ex_falso() -> Proof {
    let mut b = ProofBuilder::new();
    let ax = b.axiom(Formula::bot());
    let anything = b.ex_falso(ax, var("p"), BTreeSet::new());
    let id = b.impl_intro(anything, Formula::bot());
    b.finish(id)
}
