//! Fixed inputs for the benchmarks.

use lojex_core::expr::parse_poly;
use lojex_core::BiPoly;

/// Named `(f, g)` pairs with a defined exponent, roughly increasing in cost.
pub const PAIRS: &[(&str, &str, &str)] = &[
    ("circle", "x^2 + y^2", "x"),
    ("common root", "x^2", "x*(x^2 + y^2)"),
    ("cusp", "(x^2 - y^3)^2 + y^7", "x^2 - y^3"),
    ("close branches", "(x - y^2)*(x - y^2 - y^3)", "(x - y^2)*(x - y^2 - y^3)*(x^2 + y^5)"),
    ("sextic", "x^6 + x^2*y^4 + y^6 + x^3*y^3", "x^3 - y^2 + x*y"),
];

/// Polynomials for root tree construction.
pub const CURVES: &[(&str, &str)] = &[
    ("cusp", "x^2 - y^3"),
    ("conjugate triple", "x^3 + y^4 - 2*x*y^3"),
    ("repeated", "(x - y^2)^3 * (x + y)"),
    ("sextic", "(x^2 - y^3)^3 + x*y^8 + y^10"),
];

pub fn poly(text: &str) -> BiPoly {
    parse_poly(text).expect("fixture parses")
}
