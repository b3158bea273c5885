//! Reference tables for positive roots, kept verbatim as strings so that
//! they can serve as independent oracles for the computed tables.

mod tables;

pub use tables::{D6_FIBERS, E8_FIBERS, H3_PARITY, H4_PARITY};
