//! Golden artifacts: the proof scripts, example programs, theories, and
//! expected reports the acceptance suite runs against.  Regeneration is
//! byte-identical because every printer involved is deterministic.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use inflogic::ground::{ground, herbrand_universe};
use inflogic::library;

use crate::parse::{parse_program, print_theory};

/// The instantiation sizes the acceptance suite pins for each sized
/// catalog entry (fixed entries are listed with no size).
pub fn acceptance_instances() -> Vec<(&'static str, Option<usize>)> {
    let mut out = vec![
        ("induction_chain", Some(2)),
        ("induction_chain", Some(3)),
        ("induction_chain", Some(4)),
        ("split_antecedent", Some(1)),
        ("split_antecedent", Some(2)),
        ("split_antecedent", Some(3)),
        ("demorgan_half", Some(3)),
        ("demorgan", Some(3)),
        ("dist_conj_over_disj_conv", Some(2)),
        ("dist_disj_over_conj_conv", Some(2)),
        ("selfneg_replacement", Some(3)),
        ("weak_excluded_middle", Some(1)),
        ("weak_excluded_middle", Some(2)),
        ("impl_over_disj", Some(2)),
        ("atmost_zero_fwd", Some(2)),
        ("atmost_zero_conv", Some(2)),
    ];
    for entry in library::CATALOG.iter().filter(|e| e.size_range.is_none()) {
        out.push((entry.name, None));
    }
    out
}

pub fn proof_file_name(name: &str, size: Option<usize>) -> String {
    match size {
        Some(n) => format!("{name}_n{n}.proof"),
        None => format!("{name}.proof"),
    }
}

pub const INTRO_PROGRAM: &str = "p(f(a)).\nq :- 1{p(X)}.\n";
pub const INTRO_EXPECTED: &str = "p(f(a)) q\n";

/// Write every golden under `dir`, returning the paths written.
pub fn emit_goldens(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    let mut write = |path: PathBuf, contents: String| -> Result<()> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)
                .with_context(|| format!("creating {}", parent.display()))?;
        }
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
        written.push(path);
        Ok(())
    };

    for (name, size) in acceptance_instances() {
        let item = library::generate(name, size)?;
        write(
            dir.join("proofs").join(proof_file_name(name, size)),
            item.proof.to_string(),
        )?;
    }

    write(dir.join("intro.lp"), INTRO_PROGRAM.to_string())?;
    write(dir.join("intro.lp.expected"), INTRO_EXPECTED.to_string())?;

    let program = parse_program(INTRO_PROGRAM).expect("intro program parses");
    for depth in [2, 3] {
        let universe = herbrand_universe(&program, depth).expect("intro universe");
        let theory = ground(&program, &universe).expect("intro grounding");
        write(
            dir.join("theories").join(format!("intro_depth{depth}.thy")),
            print_theory(&theory),
        )?;
    }

    // Matching formula pair for the equivalence checker.
    let item = library::generate("split_antecedent", Some(3))?;
    let conclusion = &item.proof.final_sequent().expect("non-empty").conclusion;
    let (lhs, rhs) = conclusion.as_iff().expect("a biconditional");
    write(
        dir.join("formulas").join("split_antecedent_n3_lhs.fml"),
        format!("{lhs}\n"),
    )?;
    write(
        dir.join("formulas").join("split_antecedent_n3_rhs.fml"),
        format!("{rhs}\n"),
    )?;

    Ok(written)
}
