use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u8, u8),
    #[error("dimension {0} exceeds the supported maximum of 16")]
    DimensionTooLarge(u8),
    #[error("blade {blade} lies outside Cl({dim})")]
    OutOfRange { blade: String, dim: u8 },
    #[error("rotor factors {0} and {1} share an index")]
    OverlappingFactors(String, String),
    #[error("rotor factor {0} is not a 2-blade")]
    NotBivector(String),
}
