use thiserror::Error;

/// A violated Kunz inequality for an ideal of a numerical semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KunzViolation {
    /// The coordinate vector does not have `m - 1` entries.
    Length { expected: usize, found: usize },
    /// `x_i > k_i`: the candidate would not contain the ambient semigroup.
    AboveAmbient {
        index: usize,
        value: u32,
        bound: u32,
    },
    /// `x_i + k_j + floor((i + j) / m) < x_{(i + j) mod m}`: not closed under
    /// translation by the Apéry element `w_j` of the ambient semigroup.
    NotClosed { i: usize, j: usize },
}

impl std::fmt::Display for KunzViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KunzViolation::Length { expected, found } => {
                write!(f, "expected {expected} coordinates, found {found}")
            }
            KunzViolation::AboveAmbient {
                index,
                value,
                bound,
            } => {
                write!(f, "x_{index} = {value} exceeds k_{index} = {bound}")
            }
            KunzViolation::NotClosed { i, j } => {
                write!(
                    f,
                    "x_{i} + k_{j} + floor(({i}+{j})/m) < x_(({i}+{j}) mod m)"
                )
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator list is empty")]
    NoGenerators,
    #[error("generators must be positive")]
    NonPositiveGenerator,
    #[error("generators have gcd {gcd}, the generated monoid is not co-finite")]
    NotCoFinite { gcd: u64 },
    #[error("{value} is not a minimal generator")]
    NotMinimalGenerator { value: i64 },
    #[error("invalid Kunz coordinates: {0}")]
    KunzViolation(KunzViolation),
    #[error("ideals belong to different numerical semigroups")]
    AmbientMismatch,
    #[error("the ideal is the whole of N")]
    IsFullIdeal,
    #[error("the set is not an ideal of the target semigroup")]
    NotAnIdeal,
    #[error("the order is not a lattice")]
    NotALattice,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
