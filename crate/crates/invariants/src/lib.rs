//! Invariants of the sedenion calibration under quadruple quarter turns.
//!
//! Each dual term `e_{mu1..mu8}` yields three cyclic and four mixed pairings
//! of its indices into 2-blades. Signed versions whose rotor fixes `Phi` are
//! the invariants; the stabiliser condition on `Theta` singles out a copy of
//! G2.

pub mod candidate;
pub mod closure;
pub mod cl7;
pub mod decomposition;
pub mod fixtures;
pub mod g2;
pub mod invariance;
pub mod profiles;

pub use candidate::{cyclic_invariants, mixed_invariants, primaries, signed_candidates, Candidate, InvFamily, Pairing, Primary};
pub use decomposition::{alpha_beta_delta, stabilizer_check, QuadDecomposition, RelationReport};
pub use invariance::{invariance, is_invariant, map_filter, sign_search, Invariance};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{0} is not a term of the dual calibration")]
    NotADualTerm(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("row {1} of the {0} table matches no generated primary")]
    Unmatched(String, usize),
}
