use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("group action is not transitive")]
    NotTransitive,

    #[error("invalid constellation: {0}")]
    InvalidConstellation(String),

    #[error("invalid branching datum: {0}")]
    InvalidDatum(String),

    #[error("Riemann-Hurwitz gives a non-integer genus (2-2g = {euler})")]
    NonIntegerGenus { euler: i64 },

    #[error("Riemann-Hurwitz gives a negative genus (2-2g = {euler})")]
    NegativeGenus { euler: i64 },

    #[error("point labels cannot be aligned: {0}")]
    LabelMismatch(String),

    #[error("order {order} does not divide {p} - 1")]
    NonDivisor { order: u64, p: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("group degree {0} is not a prime in the supported range")]
    NotPrimeDegree(usize),

    #[error("group is not solvable")]
    NotSolvable,

    #[error("unrealizable exemplar parameter: {0}")]
    UnrealizableParam(String),

    #[error("base covering has genus {genus}; at least 1 is required")]
    GenusTooSmall { genus: u64 },

    #[error("no surjection onto Z/{d}: puncture-killing homomorphisms reach a subgroup of order {image_order}")]
    NoSurjection { d: u64, image_order: u64 },

    #[error("division by zero on every branch")]
    DivisionByZero,

    #[error("branch enumeration would visit {count} assignments (limit {limit})")]
    TooManyBranches { count: u128, limit: u128 },

    #[error("leading coefficient vanishes")]
    DegenerateLeading,

    #[error("expected a polynomial of degree {expected}, found {found}")]
    InvalidDegree { expected: usize, found: usize },

    #[error("conic is not singular")]
    NotSingular,

    #[error("degenerate quartic: {0}")]
    DegenerateQuartic(String),

    #[error("derivative vanishes identically")]
    DerivativeDegenerate,

    #[error("polynomial is decomposable")]
    NotIndecomposable,

    #[error("numeric root finding did not converge")]
    NoConvergence,

    #[error("cannot parse number: {0}")]
    InvalidNumber(String),
}

impl Error {
    /// Stable machine-readable name, used in error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotTransitive => "NotTransitive",
            Error::InvalidConstellation(_) => "InvalidConstellation",
            Error::InvalidDatum(_) => "InvalidDatum",
            Error::NonIntegerGenus { .. } => "NonIntegerGenus",
            Error::NegativeGenus { .. } => "NegativeGenus",
            Error::LabelMismatch(_) => "LabelMismatch",
            Error::NonDivisor { .. } => "NonDivisor",
            Error::NotPrime(_) => "NotPrime",
            Error::NotPrimeDegree(_) => "NotPrimeDegree",
            Error::NotSolvable => "NotSolvable",
            Error::UnrealizableParam(_) => "UnrealizableParam",
            Error::GenusTooSmall { .. } => "GenusTooSmall",
            Error::NoSurjection { .. } => "NoSurjection",
            Error::DivisionByZero => "DivisionByZero",
            Error::TooManyBranches { .. } => "TooManyBranches",
            Error::DegenerateLeading => "DegenerateLeading",
            Error::InvalidDegree { .. } => "InvalidDegree",
            Error::NotSingular => "NotSingular",
            Error::DegenerateQuartic(_) => "DegenerateQuartic",
            Error::DerivativeDegenerate => "DerivativeDegenerate",
            Error::NotIndecomposable => "NotIndecomposable",
            Error::NoConvergence => "NoConvergence",
            Error::InvalidNumber(_) => "InvalidNumber",
        }
    }
}
