//! Formulas with set-valued conjunction and disjunction.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::atom::{Atom, Signature};

/// A propositional formula whose n-ary connectives hold a *set* of children:
/// deduplicated under structural equality, with no stored order.  The
/// canonical child order used for printing and hashing is the derived
/// structural order; no semantic operation depends on it.
///
/// Derived forms are represented, not stored:
/// `bot` is `or{}`, `top` is `and{}`, `not f` is `f -> bot`, and `f <-> g`
/// is `and{f -> g; g -> f}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Formula {
    Atom(Atom),
    Conj(BTreeSet<Formula>),
    Disj(BTreeSet<Formula>),
    Impl(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(atom: Atom) -> Self {
        Formula::Atom(atom)
    }

    /// Conjunction of a set of children; duplicates collapse.
    pub fn conj(children: impl IntoIterator<Item = Formula>) -> Self {
        Formula::Conj(children.into_iter().collect())
    }

    /// Disjunction of a set of children; `disj([])` is `bot`.
    pub fn disj(children: impl IntoIterator<Item = Formula>) -> Self {
        Formula::Disj(children.into_iter().collect())
    }

    pub fn imp(antecedent: Formula, consequent: Formula) -> Self {
        Formula::Impl(Box::new(antecedent), Box::new(consequent))
    }

    pub fn top() -> Self {
        Formula::Conj(BTreeSet::new())
    }

    pub fn bot() -> Self {
        Formula::Disj(BTreeSet::new())
    }

    // associated constructor, not a receiver method; no Neg impl intended
    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::imp(f, Formula::bot())
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::conj([Formula::imp(a.clone(), b.clone()), Formula::imp(b, a)])
    }

    pub fn is_bot(&self) -> bool {
        matches!(self, Formula::Disj(h) if h.is_empty())
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Formula::Conj(h) if h.is_empty())
    }

    /// The operand of a negation, if the formula has the shape `f -> bot`.
    pub fn as_neg(&self) -> Option<&Formula> {
        match self {
            Formula::Impl(f, b) if b.is_bot() => Some(f),
            _ => None,
        }
    }

    /// The two sides of a biconditional, if the formula is a two-element
    /// conjunction `{a -> b, b -> a}`.  Orientation follows the structural
    /// order of the set, so it is deterministic.
    pub fn as_iff(&self) -> Option<(&Formula, &Formula)> {
        let Formula::Conj(h) = self else { return None };
        if h.len() != 2 {
            return None;
        }
        let mut it = h.iter();
        let (Formula::Impl(a, b), Formula::Impl(c, d)) = (it.next()?, it.next()?) else {
            return None;
        };
        (a == d && b == c).then_some((a.as_ref(), b.as_ref()))
    }

    /// Least level of the construction hierarchy containing the formula:
    /// atoms have rank 0, every connective is one above the maximum of its
    /// children (an empty child set counts as maximum 0, so `and{}` and
    /// `or{}` have rank 1).
    pub fn rank(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Conj(h) | Formula::Disj(h) => {
                1 + h.iter().map(Formula::rank).max().unwrap_or(0)
            }
            Formula::Impl(a, b) => 1 + a.rank().max(b.rank()),
        }
    }

    /// The set of atoms occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, into: &mut BTreeSet<Atom>) {
        match self {
            Formula::Atom(a) => {
                into.insert(a.clone());
            }
            Formula::Conj(h) | Formula::Disj(h) => {
                for f in h {
                    f.collect_atoms(into);
                }
            }
            Formula::Impl(a, b) => {
                a.collect_atoms(into);
                b.collect_atoms(into);
            }
        }
    }

    /// First atom (in structural order) not covered by `sig`, if any.
    pub fn first_atom_outside(&self, sig: &Signature) -> Option<Atom> {
        self.atoms().into_iter().find(|a| !sig.contains(a))
    }
}

// Precedence levels for printing: 0 = `<->`, 1 = `->`, 2 = `not`;
// atoms and braced connectives are self-delimiting.
impl Formula {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        if self.is_bot() {
            return f.write_str("bot");
        }
        if self.is_top() {
            return f.write_str("top");
        }
        if let Some(g) = self.as_neg() {
            f.write_str("not ")?;
            return g.fmt_prec(f, 2);
        }
        if let Some((a, b)) = self.as_iff() {
            if prec > 0 {
                f.write_str("(")?;
            }
            a.fmt_prec(f, 1)?;
            f.write_str(" <-> ")?;
            b.fmt_prec(f, 0)?;
            if prec > 0 {
                f.write_str(")")?;
            }
            return Ok(());
        }
        match self {
            Formula::Atom(a) => f.write_str(a.as_str()),
            Formula::Conj(h) => fmt_children(f, "and", h),
            Formula::Disj(h) => fmt_children(f, "or", h),
            Formula::Impl(a, b) => {
                if prec > 1 {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 2)?;
                f.write_str(" -> ")?;
                b.fmt_prec(f, 1)?;
                if prec > 1 {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

fn fmt_children(f: &mut fmt::Formatter<'_>, tag: &str, children: &BTreeSet<Formula>) -> fmt::Result {
    f.write_str(tag)?;
    f.write_str("{")?;
    for (k, child) in children.iter().enumerate() {
        if k > 0 {
            f.write_str("; ")?;
        }
        child.fmt_prec(f, 0)?;
    }
    f.write_str("}")
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Deterministic formula pool: closes `seeds` under binary/unary/empty
/// conjunction and disjunction and implication, `rounds` times, returning
/// the result in structural order.  One round over `{p, q, bot}` yields 25
/// formulas of rank at most 2; two rounds yield about 1300 of rank at most
/// 3.  Exhaustive semantic sweeps iterate over this pool.
pub fn bounded_pool(seeds: &[Formula], rounds: usize) -> Vec<Formula> {
    let mut pool: BTreeSet<Formula> = seeds.iter().cloned().collect();
    for _ in 0..rounds {
        let current: Vec<Formula> = pool.iter().cloned().collect();
        let mut fresh = BTreeSet::new();
        fresh.insert(Formula::top());
        fresh.insert(Formula::bot());
        for (i, a) in current.iter().enumerate() {
            fresh.insert(Formula::conj([a.clone()]));
            fresh.insert(Formula::disj([a.clone()]));
            for b in &current[i + 1..] {
                fresh.insert(Formula::conj([a.clone(), b.clone()]));
                fresh.insert(Formula::disj([a.clone(), b.clone()]));
            }
            for b in &current {
                fresh.insert(Formula::imp(a.clone(), b.clone()));
            }
        }
        pool.extend(fresh);
    }
    pool.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn at(name: &str) -> Formula {
        Formula::atom(Atom::new(name).unwrap())
    }

    #[test]
    fn children_deduplicate() {
        assert_eq!(Formula::conj([at("p"), at("p")]), Formula::conj([at("p")]));
    }

    #[test]
    fn empty_disjunction_is_bot() {
        assert!(Formula::disj([]).is_bot());
        assert_eq!(Formula::disj([]), Formula::bot());
    }

    #[test]
    fn child_order_is_irrelevant() {
        assert_eq!(
            Formula::conj([at("p"), at("q")]),
            Formula::conj([at("q"), at("p")])
        );
    }

    #[test]
    fn rebuilding_from_children_is_identity() {
        let c = Formula::conj([at("p"), at("q"), Formula::neg(at("r"))]);
        let Formula::Conj(h) = &c else { unreachable!() };
        assert_eq!(Formula::conj(h.clone()), c);
        let d = Formula::disj([at("p"), Formula::bot()]);
        let Formula::Disj(h) = &d else { unreachable!() };
        assert_eq!(Formula::disj(h.clone()), d);
    }

    #[test]
    fn ranks() {
        assert_eq!(at("p").rank(), 0);
        assert_eq!(Formula::conj([at("p"), at("q")]).rank(), 1);
        assert_eq!(Formula::imp(Formula::conj([at("p"), at("q")]), at("r")).rank(), 2);
        assert_eq!(Formula::top().rank(), 1);
        assert_eq!(Formula::bot().rank(), 1);
    }

    #[test]
    fn atom_sets() {
        assert!(Formula::bot().atoms().is_empty());
        let f = Formula::imp(at("p"), Formula::conj([at("q"), at("p")]));
        let occurring = f.atoms();
        let names: Vec<&str> = occurring.iter().map(|a| a.as_str()).collect();
        assert_eq!(names, ["p", "q"]);
    }

    #[test]
    fn display_uses_sugar_and_precedence() {
        assert_eq!(Formula::bot().to_string(), "bot");
        assert_eq!(Formula::top().to_string(), "top");
        assert_eq!(Formula::neg(at("p")).to_string(), "not p");
        assert_eq!(Formula::neg(Formula::neg(at("p"))).to_string(), "not not p");
        assert_eq!(
            Formula::neg(Formula::imp(at("p"), at("q"))).to_string(),
            "not (p -> q)"
        );
        assert_eq!(
            Formula::imp(at("p"), Formula::imp(at("q"), at("r"))).to_string(),
            "p -> q -> r"
        );
        assert_eq!(
            Formula::imp(Formula::imp(at("p"), at("q")), at("r")).to_string(),
            "(p -> q) -> r"
        );
        assert_eq!(Formula::iff(at("p"), at("q")).to_string(), "p <-> q");
        assert_eq!(
            Formula::conj([at("q"), Formula::bot()]).to_string(),
            "and{q; bot}"
        );
    }

    #[test]
    fn iff_with_equal_sides_collapses_to_singleton() {
        let f = Formula::iff(at("p"), at("p"));
        assert_eq!(f, Formula::conj([Formula::imp(at("p"), at("p"))]));
        assert!(f.as_iff().is_none());
        assert_eq!(f.to_string(), "and{p -> p}");
    }

    #[test]
    fn bounded_pool_is_deterministic_and_rank_bounded() {
        let seeds = [at("p"), at("q"), Formula::bot()];
        let pool = bounded_pool(&seeds, 2);
        assert!(pool.len() >= 500, "pool has {} formulas", pool.len());
        assert!(pool.iter().all(|f| f.rank() <= 3));
        assert_eq!(pool, bounded_pool(&seeds, 2));
    }
}
