//! Substitution of formulas for designated index atoms.

use alloc::collections::{BTreeMap, BTreeSet};
use core::fmt;

use crate::atom::{Atom, Signature};
use crate::formula::Formula;

/// A total map from a set of index atoms to replacement formulas.
///
/// The index atoms play the role of an auxiliary signature, disjoint from
/// the base signature the replacement formulas are written over.  Atoms
/// outside the index set are left untouched by [`Substitution::apply`];
/// the checked entry point [`substitute`] additionally verifies the
/// disjointness and coverage conditions against an explicit base signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<Atom, Formula>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubstitutionError {
    /// A formula mentions an atom that is neither in the base signature nor
    /// an index atom.
    UnknownAtom(Atom),
    /// An index atom also occurs in the base signature.
    OverlappingIndex(Atom),
    /// A replacement formula mentions an atom outside the base signature.
    CodomainOutsideBase(Atom),
}

impl fmt::Display for SubstitutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubstitutionError::UnknownAtom(a) => write!(f, "unknown atom {a}"),
            SubstitutionError::OverlappingIndex(a) => {
                write!(f, "index atom {a} also occurs in the base signature")
            }
            SubstitutionError::CodomainOutsideBase(a) => {
                write!(f, "replacement formula mentions {a} outside the base signature")
            }
        }
    }
}

impl core::error::Error for SubstitutionError {}

impl Substitution {
    pub fn new(map: impl IntoIterator<Item = (Atom, Formula)>) -> Self {
        Substitution {
            map: map.into_iter().collect(),
        }
    }

    /// The index atoms (the domain of the map).
    pub fn index_atoms(&self) -> BTreeSet<Atom> {
        self.map.keys().cloned().collect()
    }

    pub fn get(&self, atom: &Atom) -> Option<&Formula> {
        self.map.get(atom)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, &Formula)> {
        self.map.iter()
    }

    /// Structural replacement: index atoms are replaced by their image,
    /// all other atoms are kept, connectives map over their children.
    /// Child sets are rebuilt, so images that coincide collapse.
    pub fn apply(&self, f: &Formula) -> Formula {
        match f {
            Formula::Atom(a) => match self.map.get(a) {
                Some(image) => image.clone(),
                None => f.clone(),
            },
            Formula::Conj(h) => Formula::conj(h.iter().map(|g| self.apply(g))),
            Formula::Disj(h) => Formula::disj(h.iter().map(|g| self.apply(g))),
            Formula::Impl(a, b) => Formula::imp(self.apply(a), self.apply(b)),
        }
    }
}

/// Checked substitution: `f` must be a formula over `base ∪ index`, the
/// index must be disjoint from `base`, and every replacement formula must be
/// over `base`.  The result is then a formula over `base`.
pub fn substitute(
    base: &Signature,
    subst: &Substitution,
    f: &Formula,
) -> Result<Formula, SubstitutionError> {
    for (index_atom, image) in subst.iter() {
        if base.contains(index_atom) {
            return Err(SubstitutionError::OverlappingIndex(index_atom.clone()));
        }
        if let Some(out) = image.first_atom_outside(base) {
            return Err(SubstitutionError::CodomainOutsideBase(out));
        }
    }
    if let Some(stray) = f
        .atoms()
        .into_iter()
        .find(|a| !base.contains(a) && subst.get(a).is_none())
    {
        return Err(SubstitutionError::UnknownAtom(stray));
    }
    Ok(subst.apply(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(name: &str) -> Atom {
        Atom::new(name).unwrap()
    }

    fn var(name: &str) -> Formula {
        Formula::atom(at(name))
    }

    #[test]
    fn replaces_index_atoms_through_connectives() {
        // not (p v q) <-> not p & not q, with p := F and q := G
        let f_img = Formula::conj([var("a"), var("b")]);
        let g_img = Formula::neg(var("c"));
        let subst = Substitution::new([(at("p"), f_img.clone()), (at("q"), g_img.clone())]);
        let template = Formula::iff(
            Formula::neg(Formula::disj([var("p"), var("q")])),
            Formula::conj([Formula::neg(var("p")), Formula::neg(var("q"))]),
        );
        let expected = Formula::iff(
            Formula::neg(Formula::disj([f_img.clone(), g_img.clone()])),
            Formula::conj([Formula::neg(f_img), Formula::neg(g_img)]),
        );
        assert_eq!(subst.apply(&template), expected);
    }

    #[test]
    fn renaming_into_base_signature() {
        let base = Signature::new([at("p2")]);
        let subst = Substitution::new([(at("p"), var("p2"))]);
        let out = substitute(&base, &subst, &Formula::imp(var("p"), var("p"))).unwrap();
        assert_eq!(out, Formula::imp(var("p2"), var("p2")));
    }

    #[test]
    fn images_are_checked_against_base() {
        let base = Signature::new([at("a")]);
        let subst = Substitution::new([(at("p"), var("b"))]);
        let err = substitute(&base, &subst, &var("p")).unwrap_err();
        assert_eq!(err, SubstitutionError::CodomainOutsideBase(at("b")));
    }

    #[test]
    fn stray_atoms_are_reported() {
        let base = Signature::new([at("a")]);
        let subst = Substitution::new([(at("p"), var("a"))]);
        let err = substitute(&base, &subst, &Formula::disj([var("p"), var("z")])).unwrap_err();
        assert_eq!(err, SubstitutionError::UnknownAtom(at("z")));
    }

    #[test]
    fn negated_family_over_conjunction() {
        // and{q1..q3} -> p0, with each qk := not pk
        let template = Formula::imp(
            Formula::conj((1..=3).map(|k| var(&alloc::format!("q{k}")))),
            var("p0"),
        );
        let subst = Substitution::new(
            (1..=3).map(|k| (at(&alloc::format!("q{k}")), Formula::neg(var(&alloc::format!("p{k}"))))),
        );
        let out = subst.apply(&template);
        let expected = Formula::imp(
            Formula::conj((1..=3).map(|k| Formula::neg(var(&alloc::format!("p{k}"))))),
            var("p0"),
        );
        assert_eq!(out, expected);
    }

    #[test]
    fn merging_images_collapse_children() {
        let subst = Substitution::new([(at("p"), var("r")), (at("q"), var("r"))]);
        let out = subst.apply(&Formula::conj([var("p"), var("q")]));
        assert_eq!(out, Formula::conj([var("r")]));
    }
}
