use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ordering requested for a non-real algebraic number")]
    NotReal,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial {0} does not vanish at the origin")]
    NotVanishingAtOrigin(String),
    #[error("polynomial {0} is not x-regular")]
    NotRegular(String),
    #[error("the arc is a root of the polynomial")]
    ArcIsRoot,
    #[error("the two arcs coincide")]
    IdenticalArcs,
    #[error("order of g along the arc is zero")]
    DegenerateArc,
    #[error("inputs share the common factor {0}; divide it out first")]
    CommonFactor(String),
    #[error("the zero set of f is not contained in the zero set of g")]
    InclusionViolated,
    #[error("internal cross-check failed: {0}")]
    Mismatch(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("invalid sample plan: {0}")]
    InvalidPlan(String),
    #[error("no usable sample points")]
    NoSamples,
}

pub type Result<T> = std::result::Result<T, Error>;
