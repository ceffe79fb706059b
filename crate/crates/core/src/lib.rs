//! Exact Łojasiewicz exponents and limits of quotients for bivariate
//! polynomials over the rationals that vanish at the origin.
//!
//! ```
//! use lojex_core::expr::parse_poly;
//! use lojex_core::exponent::lojasiewicz_exponent;
//!
//! let f = parse_poly("x^2").unwrap();
//! let g = parse_poly("x*(x^2 + y^2)").unwrap();
//! let r = lojasiewicz_exponent(&f, &g).unwrap();
//! assert_eq!(r.value.unwrap().to_string(), "2");
//! ```

pub mod error;
pub mod exactnum;
pub mod exponent;
pub mod expr;
pub mod limits;
pub mod oracle;
pub mod polyring;
pub mod puiseux;

pub use error::{Error, Result};
pub use exactnum::{AlgebraicNumber, Rat};
pub use polyring::BiPoly;
pub use puiseux::{GenericArc, TruncatedPuiseux};
