//! Exact arithmetic: big rationals, univariate polynomials, complex algebraic
//! numbers and the number fields they generate.

pub mod algebraic;
pub mod field;
pub mod interval;
pub mod isolate;
pub mod poly;

pub use algebraic::AlgebraicNumber;
pub use field::{roots_with_multiplicity, FieldElem, NumberField};
pub use poly::{Field, Poly, QPoly};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
