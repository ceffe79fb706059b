use num_traits::ToPrimitive;

use super::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::exactnum::Rat;

/// Outcome of the shear search `(x, y) -> (x, y + c x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularizationReport {
    pub shear_c: i64,
    pub transformed_f: BiPoly,
    pub transformed_g: BiPoly,
    pub order_f: u32,
    pub order_g: u32,
}

/// Shear candidates in the order 0, 1, -1, 2, -2, ...
pub fn shear_candidates() -> impl Iterator<Item = i64> {
    (0i64..).map(|j| if j % 2 == 0 { -(j / 2) } else { j / 2 + 1 })
}

/// Finds the first shear making both polynomials x-regular.
pub fn make_regular(f: &BiPoly, g: &BiPoly) -> Result<RegularizationReport> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for c in shear_candidates() {
        let cr = Rat::from_integer(c.into());
        let (tf, tg) = if c == 0 {
            (f.clone(), g.clone())
        } else {
            (f.shear(&cr), g.shear(&cr))
        };
        if let (Some(mf), Some(mg)) = (tf.x_regular_order(), tg.x_regular_order()) {
            return Ok(RegularizationReport {
                shear_c: c,
                transformed_f: tf,
                transformed_g: tg,
                order_f: mf,
                order_g: mg,
            });
        }
    }
    unreachable!()
}

/// Order of a nonzero polynomial with integer exponents.
pub fn int_order(f: &BiPoly) -> Result<u32> {
    Ok(f.order()?.to_integer().to_u32().expect("order fits in u32"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    #[test]
    fn already_regular() {
        let f = p(&[(1, 3, 0), (-1, 0, 5), (1, 0, 6)]);
        let r = make_regular(&f, &p(&[(1, 1, 0)])).unwrap();
        assert_eq!(r.shear_c, 0);
        assert_eq!(r.transformed_f, f);
        assert_eq!((r.order_f, r.order_g), (3, 1));
    }

    #[test]
    fn pure_y_needs_shear() {
        let r = make_regular(&p(&[(1, 0, 2)]), &p(&[(1, 0, 1)])).unwrap();
        assert_eq!(r.shear_c, 1);
        assert_eq!(r.transformed_f, p(&[(1, 0, 2), (2, 1, 1), (1, 2, 0)]));
        assert_eq!(r.order_f, 2);
        let r = make_regular(&p(&[(1, 0, 1)]), &p(&[(1, 1, 0)])).unwrap();
        assert_eq!(r.shear_c, 1);
    }

    #[test]
    fn orders_preserved() {
        let f = p(&[(1, 1, 1), (1, 0, 5)]);
        let g = p(&[(1, 0, 3), (2, 2, 2)]);
        let r = make_regular(&f, &g).unwrap();
        assert_eq!(r.order_f, int_order(&f).unwrap());
        assert_eq!(r.order_g, int_order(&g).unwrap());
        assert!(r.transformed_f.is_x_regular() && r.transformed_g.is_x_regular());
    }
}
