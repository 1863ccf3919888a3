//! A finite-lattice engine for the approximation semantics of disjunctive
//! logic programs.
//!
//! The crate parses propositional disjunctive programs, evaluates formulas
//! in Belnap's four-valued logic, builds non-deterministic consequence
//! operators and their approximations, and computes every fixpoint-style
//! semantics those operators induce: plain and Kripke-Kleene fixpoints,
//! Kripke-Kleene states, stable fixpoints (three-valued stable models),
//! well-founded states, and the well-founded semantics with disjunction.
//! Convex sets of interpretations are kept in antichain-canonical form so
//! states stay small even when they denote exponentially many members.
//!
//! Every semantic claim the engine makes is cross-checked against
//! definition-level brute-force oracles in [`oracle`]; see the `examples/`
//! directory for runnable entry points into each capability.

pub mod error;
pub mod fixpoint;
pub mod fixtures;
pub mod four;
pub mod json;
pub mod lattice;
pub mod operators;
pub mod oracle;
pub mod semantics;
pub mod syntax;

pub use error::{Error, Result};
pub use four::TruthValue;
pub use lattice::{
    ai_leq, family_leq, pair_leq, si_leq, ApproxPair, Element, ElementFamily, FamilyOrder,
    FiniteLattice, PairOrder, PrecisionOrdering, State,
};
pub use syntax::{Formula, Program, Rule};
