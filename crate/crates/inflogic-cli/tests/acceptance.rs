//! Acceptance suite: one test per criterion, printing a pass line with the
//! measured time.  Run with `cargo test -p inflogic-cli --test acceptance
//! -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use inflogic::formula::bounded_pool;
use inflogic::ground::{self, GroundTerm, GroundUniverse};
use inflogic::kalmar::{synthesize_tautology, SynthesisError, DEFAULT_SYNTHESIS_ATOM_LIMIT};
use inflogic::library::{self, atmost_zero_formula};
use inflogic::proof::check_proof;
use inflogic::semantics::{
    is_tautological, reduct, same_stable_models, satisfies, strongly_equivalent,
    DEFAULT_ATOM_LIMIT,
};
use inflogic::transform::{reduct_transform, reduct_transform_extended};
use inflogic::{
    Atom, Formula, Interpretation, Proof, Sequent, Signature, SystemLevel, Theory,
};
use inflogic_cli::goldens::{acceptance_instances, INTRO_PROGRAM};
use inflogic_cli::parse::{parse_formula, parse_program, parse_proof, ParserConfig};

fn pass(criterion: usize, label: &str, started: Instant) {
    println!(
        "criterion {criterion} ({label}): PASS in {:.2?}",
        started.elapsed()
    );
}

fn atom(name: &str) -> Atom {
    Atom::new(name).unwrap()
}

fn var(name: &str) -> Formula {
    Formula::atom(atom(name))
}

fn all_interpretations(atoms: &[Atom]) -> Vec<Interpretation> {
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

// Criterion-2 instances, regenerated through the script format: printed,
// re-parsed, and paired with their declared level.
fn checked_instances() -> Vec<(String, SystemLevel, Proof)> {
    let cfg = ParserConfig::default();
    acceptance_instances()
        .into_iter()
        .map(|(name, size)| {
            let item = library::generate(name, size).unwrap();
            let script = item.proof.to_string();
            let reparsed = parse_proof(&script, &cfg).unwrap();
            assert_eq!(reparsed, item.proof, "{name} script round-trip");
            (format!("{name}{size:?}"), item.level, reparsed)
        })
        .collect()
}

#[test]
fn criterion_01_intro_program_golden_model() {
    let started = Instant::now();
    let program = parse_program(INTRO_PROGRAM).unwrap();
    let expected: BTreeSet<Interpretation> =
        [Interpretation::new([atom("p(f(a))"), atom("q")])].into_iter().collect();
    for depth in [2, 3, 4] {
        let report = ground::solve(&program, depth, DEFAULT_ATOM_LIMIT).unwrap();
        assert_eq!(report.models, expected, "depth {depth}");
    }
    pass(1, "intro program golden model", started);
}

#[test]
fn criterion_02_proof_library_checks() {
    let started = Instant::now();
    let instances = checked_instances();
    assert!(instances.len() >= 31);
    for (name, level, proof) in &instances {
        assert_eq!(check_proof(proof, *level), Ok(()), "{name}");
    }
    pass(2, "proof library checks at declared levels", started);
}

#[test]
fn criterion_03_soundness_sweep() {
    let started = Instant::now();
    for (name, _, proof) in &checked_instances() {
        for step in proof.steps() {
            let f = Formula::imp(
                Formula::conj(step.sequent.assumptions.iter().cloned()),
                step.sequent.conclusion.clone(),
            );
            assert!(
                is_tautological(&f, DEFAULT_ATOM_LIMIT).unwrap(),
                "{name}: step not classically valid: {}",
                step.sequent
            );
        }
    }
    pass(3, "accepted sequents are classically valid", started);
}

#[test]
fn criterion_04_basic_reduct_closure() {
    let started = Instant::now();
    for (name, level, proof) in &checked_instances() {
        if *level != SystemLevel::Basic {
            continue;
        }
        let atoms: Vec<Atom> = proof.atoms().into_iter().collect();
        let sig: Signature = atoms.iter().cloned().collect();
        for i in all_interpretations(&atoms) {
            let out = reduct_transform(proof, &i).unwrap();
            assert_eq!(check_proof(&out, SystemLevel::Basic), Ok(()), "{name} {{{i}}}");
            let original = proof.final_sequent().unwrap();
            let expected = Sequent::new(
                original
                    .assumptions
                    .iter()
                    .map(|f| reduct(&sig, f, &i).unwrap()),
                reduct(&sig, &original.conclusion, &i).unwrap(),
            );
            assert_eq!(out.final_sequent().unwrap(), &expected, "{name} {{{i}}}");
        }
    }
    pass(4, "basic proofs close under reducts", started);
}

#[test]
fn criterion_05_extended_reduct_closure() {
    let started = Instant::now();
    for (name, level, proof) in &checked_instances() {
        if *level != SystemLevel::Extended {
            continue;
        }
        let atoms: Vec<Atom> = proof.atoms().into_iter().collect();
        let sig: Signature = atoms.iter().cloned().collect();
        for i in all_interpretations(&atoms) {
            let out = reduct_transform_extended(proof, &i).unwrap();
            assert_eq!(
                check_proof(&out, SystemLevel::ClassicalExtended),
                Ok(()),
                "{name} {{{i}}}"
            );
            let original = proof.final_sequent().unwrap();
            assert_eq!(
                out.final_sequent().unwrap().conclusion,
                reduct(&sig, &original.conclusion, &i).unwrap(),
                "{name} {{{i}}}"
            );
        }
    }
    pass(5, "extended proofs close into the classical system", started);
}

#[test]
fn criterion_06_synthesis_matches_tautology() {
    let started = Instant::now();
    let pool = bounded_pool(&[var("p"), var("q"), Formula::bot()], 2);
    assert!(pool.len() >= 500, "enumeration has {} formulas", pool.len());
    assert!(pool.iter().all(|f| f.rank() <= 3));
    let mut synthesized = 0usize;
    for f in &pool {
        let taut = is_tautological(f, DEFAULT_ATOM_LIMIT).unwrap();
        match synthesize_tautology(f, DEFAULT_SYNTHESIS_ATOM_LIMIT) {
            Ok(proof) => {
                assert!(taut, "synthesized a non-tautology: {f}");
                assert_eq!(check_proof(&proof, SystemLevel::BasicIlem), Ok(()), "{f}");
                assert_eq!(proof.final_sequent().unwrap(), &Sequent::theorem(f.clone()));
                synthesized += 1;
            }
            Err(SynthesisError::NotTautological(witness)) => {
                assert!(!taut, "refused a tautology: {f}");
                assert!(!witness.eval(f), "bad witness for {f}");
            }
            Err(other) => panic!("unexpected error {other} for {f}"),
        }
    }
    assert!(synthesized >= 100, "only {synthesized} tautologies in the pool");
    pass(6, "synthesis decides the rank-3 pool", started);
}

fn universe(size: usize) -> GroundUniverse {
    GroundUniverse::new(
        ["a", "b", "c", "d"][..size]
            .iter()
            .map(|n| GroundTerm::constant(*n)),
        1,
    )
}

fn grounding_conjunction(text: &str, size: usize) -> (Formula, Signature) {
    let program = parse_program(text).unwrap();
    let theory = ground::ground(&program, &universe(size)).unwrap();
    (
        Formula::conj(theory.formulas().iter().cloned()),
        theory.signature().clone(),
    )
}

#[test]
fn criterion_07_oracle_confirms_the_equivalences() {
    let started = Instant::now();

    // at-least-one aggregate versus the plain rule, universe sizes 1..=4
    for size in 1..=4 {
        let (f, sig) = grounding_conjunction("q(X) :- 1{p(X,Y)}.\n", size);
        let (g, sig_g) = grounding_conjunction("q(X) :- p(X,Y).\n", size);
        assert_eq!(sig, sig_g);
        assert!(
            strongly_equivalent(&f, &g, &sig, DEFAULT_ATOM_LIMIT).unwrap(),
            "at-least-one, size {size}"
        );
    }

    // at-least-two aggregate versus the paired rule, sizes 1..=3
    for size in 1..=3 {
        let (f, sig) = grounding_conjunction("q(X) :- 2{p(X,Y)}.\n", size);
        let (g, sig_g) =
            grounding_conjunction("q(X) :- p(X,Y1), p(X,Y2), Y1 != Y2.\n", size);
        assert_eq!(sig, sig_g);
        assert!(
            strongly_equivalent(&f, &g, &sig, DEFAULT_ATOM_LIMIT).unwrap(),
            "at-least-two, size {size}"
        );
    }

    // at-most-zero translation versus the negated instances, sizes 1..=3
    for size in 1..=3 {
        let domain: BTreeSet<Atom> = ["a", "b", "c"][..size]
            .iter()
            .map(|n| atom(&format!("p({n})")))
            .collect();
        let translated = ground::translate_aggregate(None, Some(0), &domain).unwrap();
        let members: Vec<Formula> = domain.iter().cloned().map(Formula::atom).collect();
        assert_eq!(translated, atmost_zero_formula(&members));
        let negated = Formula::conj(members.iter().cloned().map(Formula::neg));
        let sig: Signature = domain.iter().cloned().collect();
        assert!(
            strongly_equivalent(&translated, &negated, &sig, DEFAULT_ATOM_LIMIT).unwrap(),
            "at-most-zero, size {size}"
        );
    }

    // library biconditional instances
    for (name, size) in [("induction_chain", 3), ("split_antecedent", 3)] {
        let item = library::generate(name, Some(size)).unwrap();
        let conclusion = &item.proof.final_sequent().unwrap().conclusion;
        let (lhs, rhs) = conclusion.as_iff().unwrap();
        let sig: Signature = conclusion.atoms().into_iter().collect();
        assert!(
            strongly_equivalent(lhs, rhs, &sig, DEFAULT_ATOM_LIMIT).unwrap(),
            "{name}"
        );
    }

    // negative control
    let sig: Signature = [atom("p")].into_iter().collect();
    assert!(!strongly_equivalent(
        &var("p"),
        &Formula::neg(Formula::neg(var("p"))),
        &sig,
        DEFAULT_ATOM_LIMIT
    )
    .unwrap());

    pass(7, "oracle agrees on the aggregate equivalences", started);
}

fn theory_pool() -> Vec<Vec<Formula>> {
    let cfg = ParserConfig::default();
    let texts: [&[&str]; 30] = [
        &[],
        &["p"],
        &["q"],
        &["p", "q"],
        &["p -> q"],
        &["q -> p"],
        &["not p -> q"],
        &["not q -> p"],
        &["p -> q", "q -> r"],
        &["or{p; q}"],
        &["or{p; q; r}"],
        &["and{p; q} -> r"],
        &["not p"],
        &["not not p -> p"],
        &["p -> bot"],
        &["r", "r -> p"],
        &["not s -> p", "not p -> s"],
        &["p -> or{q; r}"],
        &["or{p; not p}"],
        &["s"],
        &["s -> q", "q -> s"],
        &["not (p -> q) -> r"],
        &["and{p -> q; q -> r; r -> s}"],
        &["or{and{p; q}; and{r; s}}"],
        &["top -> p", "p -> q"],
        &["not q"],
        &["q -> and{r; s}"],
        &["or{p; q} -> s"],
        &["not r -> not q"],
        &["p -> p"],
    ];
    texts
        .iter()
        .map(|lines| {
            lines
                .iter()
                .map(|t| parse_formula(t, &cfg).unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn criterion_08_theorems_leave_stable_models_alone() {
    let started = Instant::now();
    let pool = theory_pool();
    assert_eq!(pool.len(), 30);
    let pool_sig: Signature = ["p", "q", "r", "s"].iter().map(|n| atom(n)).collect();

    let mut theorems_checked = 0usize;
    for (name, _, proof) in &checked_instances() {
        let conclusion = &proof.final_sequent().unwrap().conclusion;
        if conclusion.atoms().len() > 4 {
            continue;
        }
        theorems_checked += 1;
        let mut sig = pool_sig.clone();
        sig.extend(conclusion.atoms());
        for theory in &pool {
            let base = Theory::new(sig.clone(), theory.iter().cloned()).unwrap();
            let with_theorem =
                Theory::new(sig.clone(), theory.iter().cloned().chain([conclusion.clone()]))
                    .unwrap();
            assert!(
                same_stable_models(&base, &with_theorem, DEFAULT_ATOM_LIMIT).unwrap(),
                "{name} changes stable models"
            );
            if let Some((lhs, rhs)) = conclusion.as_iff() {
                let with_lhs =
                    Theory::new(sig.clone(), theory.iter().cloned().chain([lhs.clone()]))
                        .unwrap();
                let with_rhs =
                    Theory::new(sig.clone(), theory.iter().cloned().chain([rhs.clone()]))
                        .unwrap();
                assert!(
                    same_stable_models(&with_lhs, &with_rhs, DEFAULT_ATOM_LIMIT).unwrap(),
                    "{name}: sides diverge"
                );
            }
        }
    }
    assert!(theorems_checked >= 25, "only {theorems_checked} theorems in range");
    pass(8, "library theorems preserve stable models", started);
}

#[test]
fn criterion_09_reduct_fixpoint_and_persistence() {
    let started = Instant::now();
    let pool = bounded_pool(&[var("p"), var("q"), Formula::bot()], 2);
    assert!(pool.len() >= 500);
    let sig: Signature = [atom("p"), atom("q")].into_iter().collect();
    let atoms: Vec<Atom> = sig.iter().cloned().collect();
    for f in &pool {
        for i in all_interpretations(&atoms) {
            let reduced = reduct(&sig, f, &i).unwrap();
            assert_eq!(
                satisfies(&sig, &i, &reduced).unwrap(),
                satisfies(&sig, &i, f).unwrap(),
                "fixpoint: {f} under {{{i}}}"
            );
            for j in all_interpretations(&atoms) {
                if j.is_subset(&i) && satisfies(&sig, &j, &reduced).unwrap() {
                    assert!(
                        satisfies(&sig, &i, f).unwrap(),
                        "persistence: {f}, J={{{j}}}, I={{{i}}}"
                    );
                }
            }
        }
    }
    pass(9, "reduct fixpoint and persistence, exhaustively", started);
}

#[test]
fn criterion_10_print_parse_round_trips() {
    let started = Instant::now();
    let cfg = ParserConfig::default();
    let mut rng = common::Rng::new(0xacce97);
    for case in 0..1000 {
        let f = common::formula(&mut rng, 4);
        assert_eq!(parse_formula(&f.to_string(), &cfg).unwrap(), f, "case {case}");
        let p = common::program(&mut rng);
        assert_eq!(parse_program(&p.to_string()).unwrap(), p, "case {case}");
        let proof = common::proof(&mut rng);
        assert_eq!(parse_proof(&proof.to_string(), &cfg).unwrap(), proof, "case {case}");
    }
    pass(10, "1000 seeded round trips per format", started);
}
