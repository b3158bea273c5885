//! The blueprint technique for H3: words over the base, the homotopy cycle
//! of the longest element, the elementary rewriting rules, the blueprint
//! computation and the identities and ring structure derived from it.

mod algebra;
mod identities;
mod maps;
mod rules;
mod run;
mod structure;
mod validate;
mod word;

pub use algebra::{dag_size, eval_term, Node, SAlgebra, Term, TermAlgebra};
pub use identities::{check_identities_1_35, identity_sides, identity_specs, IdentitySpec};
pub use maps::{CommutationMaps, Psi, StandardMaps, Uninterpreted, F, G, H1, H2, Q};
pub use rules::{apply_move, apply_rule, rule_values, BlueprintState, PatternMismatch, RuleId};
pub use run::{cycle_moves, leading_difference, poly_initial, run_blueprint, run_polynomial, run_terms, BlueprintRun, IdentityRecord, RunError};
pub use structure::verify_ring_structure;
pub use validate::{blueprint_invariant, generic_block, letter_root, validate_rule_in_model, RuleValidation};
pub use word::{
    braid_word, coxeter_exponent, find_move, parse, render, validate_cycle, CycleEntry, CycleReport, H3Context, HomotopyCycle, Letters,
    Move, HOMOTOPY_CYCLE,
};
