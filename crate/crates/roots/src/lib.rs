//! Root systems A4, D6, E8, H2, H3, H4 and their golden versions GH2, GH3,
//! GH4; Weyl groups, root intervals, parity maps and the foldings
//! `A4 -> H2`, `D6 -> H3`, `E8 -> H4`.

pub mod data;
mod fold;
mod interval;
mod kind;
mod parity;
mod system;
mod weyl;

pub use fold::{base_image, weyl_pair, CompatibilityReport, FiberEntry, FoldError, FoldingMap};
pub use interval::{Position, SubsystemType};
pub use kind::{Kind, UnknownKind};
pub use parity::{
    braid_word, check_parity_properties, coxeter_order, ParityReport, ParityTable, ParityTableError,
    ParityViolation, SignedWord,
};
pub use system::{reflect, render_coord, Basis, RootError, RootSystem, RootVec};
pub use weyl::WeylGroup;
