//! Bivariate polynomials: order, regularity, shears, reflection, gcd and
//! arc substitution.

pub mod bipoly;
pub mod gcd;
pub mod regular;

pub use bipoly::{BiPoly, Monomial};
pub use gcd::{div_exact, gcd, have_common_factor, is_constant, squarefree_part};
pub use regular::{make_regular, RegularizationReport};

use crate::exactnum::FieldElem;
use crate::puiseux::TruncatedPuiseux;

/// `f(X + phi(Y), Y)`, with coefficients in the field generated by the
/// coefficients of `phi`.
pub fn substitute_arc(f: &BiPoly, phi: &TruncatedPuiseux) -> BiPoly<FieldElem> {
    f.to_field().shift_x(&phi.field_terms())
}
