use thiserror::Error;

use crate::report::Witness;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        actual: usize,
    },

    #[error("zero-dimensional {0} is not allowed")]
    ZeroDimension(&'static str),

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("scalars from different fields were combined")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("bialgebra has no antipode: {0}")]
    NoAntipode(String),

    #[error("antipode is not bijective")]
    NonBijectiveAntipode,

    #[error("the structures are defined over different Hopf algebras")]
    HopfMismatch,

    #[error("not a Galois object: {0}")]
    NotGalois(String),

    #[error("coinvariants have dimension {0}, expected 1")]
    CoinvariantsTooLarge(usize),

    #[error("identity {label} failed at {witness}")]
    IdentityFailure {
        label: String,
        witness: Box<Witness>,
    },

    #[error("internal consistency failure: {0}")]
    ImplementationFault(String),

    #[error("construction requires characteristic different from {0}")]
    BadCharacteristic(u64),

    #[error("no primitive {n}-th root of unity in F_{p}")]
    NoRootOfUnity { n: usize, p: u64 },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid 2-cocycle: {0}")]
    InvalidCocycle(String),

    #[error("{0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
