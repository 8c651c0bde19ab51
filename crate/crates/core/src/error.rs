use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no valid genus: 2g = {twice_genus} has no non-negative integer solution")]
    NoValidGenus { twice_genus: i64 },

    #[error("degree {degree} exceeds the brute-force oracle cap {cap}")]
    OracleScope { degree: usize, cap: usize },

    #[error("non-hyperbolic: the sphere minus {0} points carries no hyperbolic structure (need n >= 3)")]
    NonHyperbolic(usize),

    #[error("genus {0} is outside the supported range (need g >= 1)")]
    GenusOutOfRange(u32),

    #[error("no realizable simple datum found for degree 2..={0}")]
    NotFound(usize),
}
