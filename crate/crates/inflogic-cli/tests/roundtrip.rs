//! Print-parse round trips over seeded random objects.

mod common;

use common::{formula, program, proof, Rng};
use inflogic_cli::parse::{parse_formula, parse_program, parse_proof, ParserConfig};

#[test]
fn formulas_round_trip() {
    let cfg = ParserConfig::default();
    let mut rng = Rng::new(0xf0551);
    for k in 0..1000 {
        let f = formula(&mut rng, 4);
        let text = f.to_string();
        let back = parse_formula(&text, &cfg)
            .unwrap_or_else(|e| panic!("case {k}: {text}\n{e}"));
        assert_eq!(back, f, "case {k}: {text}");
    }
}

#[test]
fn programs_round_trip() {
    let mut rng = Rng::new(0xf0552);
    for k in 0..1000 {
        let p = program(&mut rng);
        let text = p.to_string();
        let back = parse_program(&text).unwrap_or_else(|e| panic!("case {k}:\n{text}\n{e}"));
        assert_eq!(back, p, "case {k}:\n{text}");
    }
}

#[test]
fn accepted_random_proofs_are_sound() {
    // Structurally random proofs almost always fail the checker; the ones
    // it does accept must still be classically valid at every step.
    use inflogic::proof::check_proof;
    use inflogic::semantics::{is_tautological, DEFAULT_ATOM_LIMIT};
    use inflogic::{Formula, SystemLevel};

    let mut rng = Rng::new(0xf0554);
    let mut accepted = 0usize;
    for _ in 0..3000 {
        let p = proof(&mut rng);
        for level in [
            SystemLevel::Basic,
            SystemLevel::BasicIlem,
            SystemLevel::Extended,
            SystemLevel::ClassicalExtended,
        ] {
            if check_proof(&p, level).is_err() {
                continue;
            }
            accepted += 1;
            for step in p.steps() {
                let f = Formula::imp(
                    Formula::conj(step.sequent.assumptions.iter().cloned()),
                    step.sequent.conclusion.clone(),
                );
                assert!(
                    is_tautological(&f, DEFAULT_ATOM_LIMIT).unwrap(),
                    "accepted unsound step at {level:?}: {}",
                    step.sequent
                );
            }
        }
    }
    assert!(accepted > 0, "the sweep never accepted a proof");
}

#[test]
fn proofs_round_trip() {
    let cfg = ParserConfig::default();
    let mut rng = Rng::new(0xf0553);
    for k in 0..1000 {
        let p = proof(&mut rng);
        let text = p.to_string();
        let back = parse_proof(&text, &cfg)
            .unwrap_or_else(|e| panic!("case {k}:\n{text}\n{e}"));
        assert_eq!(back, p, "case {k}:\n{text}");
    }
}
