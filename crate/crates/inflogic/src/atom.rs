//! Atoms and signatures.

use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

/// A propositional atom, identified by its name.
///
/// Names follow `[a-z][a-zA-Z0-9_]*`, optionally applied to a parenthesized
/// list of ground terms (the rendering the grounder produces, e.g.
/// `p(f(a),b)`).  Equality is plain string equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Atom(String);

/// Rejected atom name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidAtomName(pub String);

impl fmt::Display for InvalidAtomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid atom name: {:?}", self.0)
    }
}

impl core::error::Error for InvalidAtomName {}

impl Atom {
    pub fn new(name: impl Into<String>) -> Result<Self, InvalidAtomName> {
        let name = name.into();
        if is_valid_atom_name(&name) {
            Ok(Atom(name))
        } else {
            Err(InvalidAtomName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Atom {
    type Err = InvalidAtomName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Atom::new(s)
    }
}

fn scan_ident(b: &[u8], i: usize) -> Option<usize> {
    if i >= b.len() || !b[i].is_ascii_lowercase() {
        return None;
    }
    let mut j = i + 1;
    while j < b.len() && (b[j].is_ascii_alphanumeric() || b[j] == b'_') {
        j += 1;
    }
    Some(j)
}

fn scan_nat(b: &[u8], i: usize) -> Option<usize> {
    if i >= b.len() || !b[i].is_ascii_digit() {
        return None;
    }
    let mut j = i + 1;
    while j < b.len() && b[j].is_ascii_digit() {
        j += 1;
    }
    Some(j)
}

// term = ident [ "(" term ("," term)* ")" ] | nat
fn scan_term(b: &[u8], i: usize) -> Option<usize> {
    if let Some(j) = scan_ident(b, i) {
        scan_args(b, j)
    } else {
        scan_nat(b, i)
    }
}

fn scan_args(b: &[u8], i: usize) -> Option<usize> {
    if i >= b.len() || b[i] != b'(' {
        return Some(i);
    }
    let mut j = scan_term(b, i + 1)?;
    while j < b.len() && b[j] == b',' {
        j = scan_term(b, j + 1)?;
    }
    if j < b.len() && b[j] == b')' {
        Some(j + 1)
    } else {
        None
    }
}

pub(crate) fn is_valid_atom_name(s: &str) -> bool {
    let b = s.as_bytes();
    match scan_ident(b, 0).and_then(|j| scan_args(b, j)) {
        Some(end) => end == b.len(),
        None => false,
    }
}

/// A finite, explicitly enumerated set of atoms.
///
/// Every formula handed to the checked semantic operations must mention
/// only atoms of the signature it is evaluated against.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Signature {
    atoms: BTreeSet<Atom>,
}

impl Signature {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
        Signature {
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.atoms.contains(atom)
    }

    pub fn insert(&mut self, atom: Atom) {
        self.atoms.insert(atom);
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

    pub fn union(&self, other: &Signature) -> Signature {
        Signature {
            atoms: self.atoms.union(&other.atoms).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &Signature) -> bool {
        self.atoms.is_subset(&other.atoms)
    }
}

impl FromIterator<Atom> for Signature {
    fn from_iter<T: IntoIterator<Item = Atom>>(iter: T) -> Self {
        Signature::new(iter)
    }
}

impl Extend<Atom> for Signature {
    fn extend<T: IntoIterator<Item = Atom>>(&mut self, iter: T) {
        self.atoms.extend(iter);
    }
}

impl<'a> IntoIterator for &'a Signature {
    type Item = &'a Atom;
    type IntoIter = alloc::collections::btree_set::Iter<'a, Atom>;

    fn into_iter(self) -> Self::IntoIter {
        self.atoms.iter()
    }
}
