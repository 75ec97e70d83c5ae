//! Fano plane and Fano volume diagrams.
//!
//! Output is schematic: fixed coordinates, no force layout. Vertex `k` is
//! placed by reading `k` as a vector over Z2, so every quaternion triple
//! `{a, b, a^b}` sits on a line or circle of the picture.

pub mod incidence;
pub mod layout;
pub mod render;

pub use incidence::{fano_volume, FanoPlane, FanoVolume, Line, PlaneRecord};
pub use render::{plane_dot, plane_svg, volume_dot, volume_json, volume_svg};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanoError {
    #[error("expected 7 terms, found {0}")]
    TermCount(usize),
    #[error("term {0} is not a 3-blade")]
    BadTerm(String),
    #[error("expected 7 vertices, found {0}")]
    VertexCount(usize),
    #[error("vertices e{0:X} and e{1:X} share {2} lines")]
    Incidence(u8, u8, usize),
    #[error("no layout places these lines on the Fano plane")]
    NoLayout,
    #[error("subalgebra {0} is not a term of the calibration")]
    NotInCalibration(u8),
}
