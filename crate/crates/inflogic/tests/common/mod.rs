//! Shared helpers for the property suites.
#![allow(dead_code)] // not every test target uses every helper

use inflogic::{Atom, Formula, Interpretation, Signature};

pub fn atom(name: &str) -> Atom {
    Atom::new(name).unwrap()
}

pub fn var(name: &str) -> Formula {
    Formula::atom(atom(name))
}

pub fn sig(names: &[&str]) -> Signature {
    Signature::new(names.iter().map(|n| atom(n)))
}

/// Every subset of the given atoms, in mask order.
pub fn all_interpretations(atoms: &[Atom]) -> Vec<Interpretation> {
    (0u64..(1u64 << atoms.len()))
        .map(|mask| {
            Interpretation::new(
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1u64 << k) != 0)
                    .map(|(_, a)| a.clone()),
            )
        })
        .collect()
}

/// Small deterministic generator (xorshift) for randomized sweeps; tests
/// fix the seed so failures reproduce.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// A random formula over the given atoms with bounded nesting depth.
pub fn random_formula(rng: &mut Rng, atoms: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.below(4) == 0 {
        return match rng.below(atoms.len() + 2) {
            k if k < atoms.len() => var(atoms[k]),
            k if k == atoms.len() => Formula::bot(),
            _ => Formula::top(),
        };
    }
    match rng.below(4) {
        0 => Formula::conj((0..rng.below(3)).map(|_| random_formula(rng, atoms, depth - 1))),
        1 => Formula::disj((0..rng.below(3)).map(|_| random_formula(rng, atoms, depth - 1))),
        2 => Formula::imp(
            random_formula(rng, atoms, depth - 1),
            random_formula(rng, atoms, depth - 1),
        ),
        _ => Formula::neg(random_formula(rng, atoms, depth - 1)),
    }
}
