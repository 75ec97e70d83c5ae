//! Cayley-Dickson algebras A(n) in graded notation.
//!
//! Basis element `o_S` is the mask of its generator set: `o1 = 1`, `o2 = 2`,
//! `o12 = 3`, `o3 = 4`, ... so mask order is the graded order and the product
//! index is always the XOR of the factors.

pub mod basis;
pub mod census;
pub mod classify;
pub mod element;
pub mod fixtures;
pub mod table;
pub mod zero_divisors;

pub use basis::{cd_mul, cd_sign, CdBasis, DoublingRule};
pub use census::{census, generate_loop, loops, stacking_counts, triad_class, Census, StackingCounts, Triad, TriadClass, TriadTag};
pub use classify::{octonion_like_classify, AlgebraClass, AlgebraTag, ClassifyError};
pub use element::CdElement;
pub use table::MulTable;
pub use zero_divisors::{zero_divisor_pairs, ZeroDivisorPair};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CdError {
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u8, u8),
    #[error("triad ({0}, {1}, {2}) is not three distinct pure elements in ascending order")]
    InvalidTriad(String, String, String),
    #[error("triad ({0}, {1}, {2}) closes on a quaternion subalgebra")]
    Quaternionic(String, String, String),
    #[error("set is not a closed 7-element subalgebra")]
    NotALoop,
}
