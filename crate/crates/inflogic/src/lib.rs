//! Set-based propositional formulas, stable models, and checkable proofs.
//!
//! The crate revolves around [`Formula`], whose conjunction and disjunction
//! nodes hold a *set* of children (no order, no repetition).  On top of it:
//!
//! * [`semantics`] — satisfaction, reducts, brute-force stable-model
//!   enumeration, tautology checking, and a strong-equivalence oracle;
//! * [`proof`] — sequents and a small checking kernel for four natural
//!   deduction systems (basic, basic + case-split axiom, extended,
//!   classical extended);
//! * [`transform`] — constructive proof transformers that map a proof of a
//!   sequent to a proof of its reduct;
//! * [`kalmar`] — truth-table-driven synthesis of proofs for tautologies;
//! * [`library`] — generators for a catalog of theorem schemas,
//!   instantiated at a chosen size;
//! * [`ground`] — a mini rule language with cardinality aggregates and
//!   function symbols, grounded over a depth-bounded term universe.
//!
//! The crate is `no_std` (with `alloc`); all IO, parsing, and the command
//! line live in the companion `inflogic-cli` crate.
//!
//! ```
//! use inflogic::semantics::{stable_models, DEFAULT_ATOM_LIMIT};
//! use inflogic::{Atom, Formula, Signature, Theory};
//!
//! let p = Formula::atom(Atom::new("p")?);
//! let q = Formula::atom(Atom::new("q")?);
//! // p holds unless q does: q -> bot -> ... rendered as `not q -> p`
//! let theory = Theory::new(
//!     Signature::new([Atom::new("p")?, Atom::new("q")?]),
//!     [Formula::imp(Formula::neg(q), p)],
//! )?;
//! let report = stable_models(&theory, DEFAULT_ATOM_LIMIT)?;
//! let models: Vec<String> = report.models.iter().map(|m| m.to_string()).collect();
//! assert_eq!(models, ["p"]);
//! # Ok::<(), Box<dyn core::error::Error>>(())
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod atom;
pub mod builder;
pub mod formula;
pub mod ground;
pub mod kalmar;
pub mod library;
pub mod proof;
pub mod semantics;
pub mod subst;
pub mod transform;

pub use atom::{Atom, Signature};
pub use formula::Formula;
pub use proof::{Proof, Rule, Schema, Sequent, Step, SystemLevel};
pub use semantics::{Interpretation, StableModelReport, Theory};
pub use subst::Substitution;
