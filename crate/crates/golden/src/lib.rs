//! Exact arithmetic in the ring `Z[tau]` and its fraction field `Q(tau)`,
//! where `tau = (1 + sqrt 5) / 2` satisfies `tau^2 = tau + 1`.
//!
//! No floating point is used for any decision; [`GoldenInt::sign`] is an
//! integer certificate. Integers are arbitrary precision.

mod int;
mod parse;
mod rat;

pub use int::GoldenInt;
pub use parse::ParseGoldenError;
pub use rat::GoldenRat;
