use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Seifert data: {0}")]
    InvalidSeifert(String),

    #[error("orbifold Euler number e = {e} is not negative; the intersection form is not negative definite")]
    NotNegativeDefinite { e: String },

    #[error("star-shaped graph needs at least 3 legs, got {0}")]
    TooFewLegs(usize),

    #[error("integers {0:?} are not pairwise coprime")]
    NotCoprime(Vec<i64>),

    #[error("cycle has {found} coefficients, graph has {expected} vertices")]
    IndexMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    NoSuchVertex { vertex: usize, count: usize },

    #[error("cycle is not in the dual lattice L'")]
    NotInDualLattice,

    #[error("computation sequence exceeded the step budget of {0}")]
    StepBudgetExceeded(u64),

    #[error("the link is rational: the module contains all non-negative integers and has no positive Frobenius number")]
    RationalLink,

    #[error("b0 >= d: the semigroup is all of N")]
    TrivialSemigroup,

    #[error("the graph is not numerically Gorenstein")]
    NotNumericallyGorenstein,

    #[error("augmentation parameter n = {n} too small: need e + 1/n < 0")]
    AugmentTooSmall { n: i64 },

    #[error("Brieskorn-Hamm exponents {0:?} do not give a rational homology sphere")]
    NotQhs(Vec<i64>),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
