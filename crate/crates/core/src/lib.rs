//! Exact multivector arithmetic for Euclidean Clifford algebras Cl(n), n <= 16.
//!
//! Basis blades are bitmasks (generator `k` is bit `k-1`), coefficients are
//! arbitrary precision rationals, and every product is exact.

pub mod blade;
pub mod error;
pub mod form;
pub mod multivector;
pub mod rational;
pub mod rotor;
pub mod span;

pub use blade::Blade;
pub use error::AlgebraError;
pub use form::{format_form, parse_form, FormParseError};
pub use multivector::Multivector;
pub use rational::Rational;
pub use rotor::Rotor;
pub use span::Span;

/// Largest supported dimension; masks fit in 16 bits.
pub const MAX_DIM: u8 = 16;
