//! Steinberg presentations of type H3 and H4: commutation maps for all
//! root pairs transported from the reference formulas, the relation list
//! and its image in the folded matrix models, Weyl elements over Z/5, and
//! the unfolding of a folded grading back to the source root system.

mod presentation;
mod transport;
mod unfold;
mod weyl;

pub use presentation::{steinberg_relations, verify_in_model, Relation, SteinbergPresentation};
pub use transport::{
    source_formulas, CommutationTable, Conflict, Formula, Independence, Monomial, SourceFormula, TransportError, Transported, Transporter,
};
pub use unfold::{
    commutator_signs, hall_witt, opposite_commute, refold, unfold_and_verify, unfolded_weyl_elements, weyl_compatibility, UnfoldOptions,
    UnfoldedGrading,
};
pub use weyl::{is_folded_weyl_mod, weyl_param_checks, weyl_param_injectivity, Surjectivity, WeylParamReport};
