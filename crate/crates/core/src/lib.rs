//! Exact arithmetic in quadratic integer rings `Z[ω]` and a verifier that
//! walks through the classical solution of `x² + 7 = 2ⁿ`, step by step,
//! recording every check in a replayable certificate.
//!
//! The order `Z[ω]` with `ω² = ω − 2` is the ring of integers of `Q(√−7)`;
//! it is used directly as the ambient ring, so integrality never needs to be
//! tracked separately.

pub mod binomial;
pub mod cli;
mod decimal;
pub mod engine;
pub mod error;
pub mod invariants;
pub mod padic;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{QuadInt, RingParams};
