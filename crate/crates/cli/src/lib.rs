//! Library side of the `hfold` command: verification suites, table
//! emission and reports.

pub mod report;
pub mod suites;
pub mod tables;

pub use report::{CheckEntry, Report};
pub use suites::{run, RingSel, Selection, Suite, DEFAULT_SEED};
pub use tables::{build, Format, Table, TableKind};

/// Exit codes of the command.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAILED_CHECK: i32 = 1;
    pub const INVALID_SELECTOR: i32 = 2;
    pub const IO: i32 = 3;
}
