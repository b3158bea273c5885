//! Matrix models of the Chevalley groups of types A4, D6 and E8 over
//! pluggable commutative rings, their foldings onto H2, H3 and H4, and the
//! extraction of commutation maps and parity maps.

mod commaps;
mod e8;
mod grading;
mod matrix;
mod model;
mod report;
mod standard;
mod twist;

pub use commaps::{
    abcd_args, abcd_ring, check_reference_formulas, extract_commutation_map, parse_monomial, reference_value, resolve_name,
    CommRow, FormulaCheck, FormulaSpec, REFERENCE_FORMULAS,
};
pub use e8::StructureConstants;
pub use grading::{
    chevalley_commutator_signs, commutator_containment, expected_square_action, extremal_order, folded_weyl_failures, gh_relations, h2_pairs,
    is_weyl, nonproportional_pairs, positive_product_injective, refinement, square_action_classify, square_actions, verify_grading,
    weyl_conjugation, weyl_pair_checks, Coverage, GradingOptions, SquareAction, SquareActionReport,
};
pub use matrix::SparseMatrix;
pub use model::{ChevalleyModel, ModelError, Word};
pub use report::Check;
pub use standard::standard_model;
pub use twist::{conjugation_sign, d6_twist_candidates, h3_restriction_mismatches, parity_mismatches, search_e8_twist, Gf2System, TwistSearch};
