//! Calibrations of `Cl(7)` and `Cl(15)`.
//!
//! The 3-forms `theta64` and `Theta`, the 7-form `Phi` with its octonion and
//! P4 parts, the 8-form dual `Phi*`, and the commutative sharp algebras built
//! from dual terms.

pub mod fixtures;
pub mod identities;
pub mod named;
pub mod quintets;
pub mod sharp;

pub use identities::{all_identities, cube_law, verify_identity, CubeLaw, IdentityId, Report};
pub use named::{build, NamedForm};
pub use quintets::{idempotent_quintets, QuintetCounts};
pub use sharp::{pair_swap_profile, sharp_algebra, ClosureReport, Family, SharpAlgebra, SwapProfile};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalibrationError {
    #[error("unknown form `{0}`")]
    UnknownForm(String),
    #[error("subalgebra index {0} is outside 1..=15")]
    BadIndex(u8),
    #[error("no sharp algebra for N = {0}")]
    UnsupportedDimension(u8),
    #[error("fixture: {0}")]
    Fixture(String),
}
