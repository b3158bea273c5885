use std::fmt;

/// One named check with its outcome and, on failure, a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    /// The statement the check certifies, named by role.
    pub anchor: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, passed: bool, witness: Option<String>) -> Self {
        Check { id: id.into(), anchor: anchor.into(), passed, witness }
    }

    /// A check that passes iff `failures` is empty; the first few failures
    /// become the witness.
    pub fn from_failures<T: fmt::Debug>(id: impl Into<String>, anchor: impl Into<String>, total: usize, failures: &[T]) -> Self {
        let witness = if failures.is_empty() {
            Some(format!("{total} instances"))
        } else {
            let shown: Vec<String> = failures.iter().take(3).map(|f| format!("{f:?}")).collect();
            Some(format!("{} of {total} failed, e.g. {}", failures.len(), shown.join("; ")))
        };
        Check::new(id, anchor, failures.is_empty(), witness)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "[{status}] {} ({})", self.id, self.anchor)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}
