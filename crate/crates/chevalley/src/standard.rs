use std::sync::OnceLock;

use hfold_roots::Kind;

use crate::model::{ChevalleyModel, ModelError};
use crate::twist::{d6_twist_candidates, search_e8_twist};

static A4: OnceLock<ChevalleyModel> = OnceLock::new();
static D6: OnceLock<ChevalleyModel> = OnceLock::new();
static E8: OnceLock<ChevalleyModel> = OnceLock::new();

/// The model whose folding carries the reference sign data: A4 untwisted,
/// D6 twisted by the unique simple-root subset found by
/// [`d6_twist_candidates`], E8 twisted by the solution of
/// [`search_e8_twist`]. Built once per process.
pub fn standard_model(kind: Kind) -> Result<&'static ChevalleyModel, ModelError> {
    let cell = match kind {
        Kind::A4 => &A4,
        Kind::D6 => &D6,
        Kind::E8 => &E8,
        k => return Err(ModelError::NoModel(k)),
    };
    if let Some(m) = cell.get() {
        return Ok(m);
    }
    let naive = ChevalleyModel::new(kind)?;
    let model = match kind {
        Kind::D6 => {
            let c = d6_twist_candidates(&naive)?;
            let t = c.first().ok_or_else(|| ModelError::Factorisation("no D6 twist reproduces the reference data".into()))?;
            naive.with_twist(t)
        }
        Kind::E8 => {
            let s = search_e8_twist(&naive)?;
            let t = s.twist.ok_or_else(|| ModelError::Factorisation("no E8 twist reproduces the reference data".into()))?;
            naive.with_twist(&t)
        }
        _ => naive,
    };
    Ok(cell.get_or_init(|| model))
}
