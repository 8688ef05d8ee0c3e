//! Seeded random object generators shared by the round-trip and
//! acceptance targets.
#![allow(dead_code)]

use std::collections::BTreeSet;

use inflogic::ground::{AtomSchema, BodyElem, CardinalityAggregate, Program, ProgramRule, Term};
use inflogic::{Atom, Formula, Proof, Rule, Schema, Sequent, Step};

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

pub const ATOMS: [&str; 5] = ["p", "q", "r0", "s(a)", "s(f(a),2)"];

pub fn formula(rng: &mut Rng, depth: usize) -> Formula {
    if depth == 0 || rng.below(3) == 0 {
        return match rng.below(ATOMS.len() + 2) {
            k if k < ATOMS.len() => Formula::atom(Atom::new(ATOMS[k]).unwrap()),
            k if k == ATOMS.len() => Formula::bot(),
            _ => Formula::top(),
        };
    }
    match rng.below(5) {
        0 => Formula::conj((0..rng.below(4)).map(|_| formula(rng, depth - 1))),
        1 => Formula::disj((0..rng.below(4)).map(|_| formula(rng, depth - 1))),
        2 => Formula::imp(formula(rng, depth - 1), formula(rng, depth - 1)),
        3 => Formula::neg(formula(rng, depth - 1)),
        _ => Formula::iff(formula(rng, depth - 1), formula(rng, depth - 1)),
    }
}

pub fn pattern_term(rng: &mut Rng, depth: usize) -> Term {
    match rng.below(4) {
        0 => Term::Var(["X", "Y", "Z1"][rng.below(3)].into()),
        1 if depth > 0 => Term::Fun(
            "f".into(),
            vec![pattern_term(rng, depth - 1)],
        ),
        2 => Term::constant(rng.below(9).to_string()),
        _ => Term::constant(["a", "b", "c"][rng.below(3)]),
    }
}

pub fn atom_schema(rng: &mut Rng) -> AtomSchema {
    let predicate = ["p", "q", "edge"][rng.below(3)].to_string();
    let args = (0..rng.below(3)).map(|_| pattern_term(rng, 1)).collect();
    AtomSchema { predicate, args }
}

pub fn program(rng: &mut Rng) -> Program {
    let mut rules = Vec::new();
    for _ in 0..(1 + rng.below(4)) {
        let head = if rng.below(5) == 0 {
            None
        } else {
            Some(atom_schema(rng))
        };
        let body = (0..rng.below(3))
            .map(|_| match rng.below(4) {
                0 => BodyElem::Pos(atom_schema(rng)),
                1 => BodyElem::Neg(atom_schema(rng)),
                2 => BodyElem::Neq("X".into(), "Y".into()),
                _ => {
                    let lower = if rng.below(2) == 0 {
                        Some(rng.below(3) as u64)
                    } else {
                        None
                    };
                    let upper = if lower.is_none() || rng.below(2) == 0 {
                        Some(lower.unwrap_or(0) + rng.below(3) as u64)
                    } else {
                        None
                    };
                    let guards = if rng.below(3) == 0 {
                        vec![("Y1".to_string(), "Y2".to_string())]
                    } else {
                        vec![]
                    };
                    BodyElem::Agg(CardinalityAggregate {
                        lower,
                        upper,
                        schema: atom_schema(rng),
                        guards,
                    })
                }
            })
            .collect();
        rules.push(ProgramRule { head, body });
    }
    Program { rules }
}

pub fn schema(rng: &mut Rng) -> Schema {
    let family = |rng: &mut Rng| -> BTreeSet<Formula> {
        (0..1 + rng.below(2)).map(|_| formula(rng, 1)).collect()
    };
    match rng.below(6) {
        0 => Schema::Lem(formula(rng, 1)),
        1 => Schema::Ht(formula(rng, 1), formula(rng, 1)),
        2 => Schema::Ilem((0..1 + rng.below(2)).map(|_| formula(rng, 1)).collect()),
        3 => Schema::DeMorganConv(family(rng)),
        4 => Schema::DistConjOverDisj((0..1 + rng.below(2)).map(|_| family(rng)).collect()),
        _ => Schema::DistDisjOverConj((0..1 + rng.below(2)).map(|_| family(rng)).collect()),
    }
}

// Structurally arbitrary proofs: round-tripping does not require validity.
pub fn proof(rng: &mut Rng) -> Proof {
    let steps = (0..1 + rng.below(5))
        .map(|k| {
            let rule = match rng.below(9) {
                0 => Rule::Axiom,
                1 => Rule::ConjIntro,
                2 => Rule::ConjElim,
                3 => Rule::DisjIntro,
                4 => Rule::DisjElim,
                5 => Rule::ImplIntro,
                6 => Rule::ImplElim,
                7 => Rule::Weaken,
                _ => Rule::Schema(schema(rng)),
            };
            let premises = if k == 0 {
                vec![]
            } else {
                let count = rng.below(3);
                (0..count).map(|_| rng.below(k)).collect()
            };
            let assumption_count = rng.below(3);
            let assumptions: Vec<Formula> =
                (0..assumption_count).map(|_| formula(rng, 2)).collect();
            let conclusion = formula(rng, 2);
            Step {
                sequent: Sequent::new(assumptions, conclusion),
                rule,
                premises,
            }
        })
        .collect();
    Proof::new(steps)
}

