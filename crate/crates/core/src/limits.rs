//! Existence and value of `lim g/f` at the origin.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::exponent::{lojasiewicz_exponent, Direction};
use crate::polyring::{div_exact, gcd, have_common_factor, make_regular, BiPoly};
use crate::puiseux::{joint_root_tree, root_tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitKind {
    ExistsEqual,
    DoesNotExist,
}

/// What happens to `g/f` along one arc or curve.
#[derive(Clone, Debug, PartialEq)]
pub enum Behaviour {
    Tends(Rat),
    Unbounded,
    /// `g/f` stays away from the given value for generic members of the family.
    AvoidsValue(Rat),
    /// `f` vanishes on a real curve through the origin where `g` does not.
    ZeroCurve,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evidence {
    pub arc: String,
    pub behaviour: Behaviour,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitVerdict {
    pub kind: LimitKind,
    pub value: Option<Rat>,
    pub evidence: Vec<Evidence>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shortcut {
    LimitZero,
    NoLimit,
    Inconclusive,
}

impl fmt::Display for LimitVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.value) {
            (LimitKind::ExistsEqual, Some(v)) => write!(f, "exists and equals {v}"),
            _ => write!(f, "does not exist"),
        }
    }
}

impl fmt::Display for Behaviour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Behaviour::Tends(v) => write!(f, "tends to {v}"),
            Behaviour::Unbounded => write!(f, "unbounded"),
            Behaviour::AvoidsValue(v) => write!(f, "stays away from {v}"),
            Behaviour::ZeroCurve => write!(f, "denominator vanishes on a real curve"),
        }
    }
}

fn regular_oriented(f: &BiPoly, g: &BiPoly) -> Result<(i64, [(Direction, BiPoly, BiPoly); 2])> {
    let reg = make_regular(f, g)?;
    let (f, g) = (reg.transformed_f, reg.transformed_g);
    Ok((
        reg.shear_c,
        [
            (Direction::Positive, f.clone(), g.clone()),
            (Direction::Negative, f.bar(), g.bar()),
        ],
    ))
}

/// True when the only real zero of `f` near the origin is the origin.
pub fn has_isolated_real_zero(f: &BiPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.vanishes_at_origin() {
        return Err(Error::NotVanishingAtOrigin(f.to_string()));
    }
    let (_, dirs) = regular_oriented(f, f)?;
    for (_, f, _) in dirs {
        if root_tree(&f)?.iter().any(|b| b.is_real) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn zero_test(g: &BiPoly, f: &BiPoly) -> Result<Option<Evidence>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if have_common_factor(g, f) {
        return Err(Error::CommonFactor(gcd(g, f).to_string()));
    }
    let zero = Rat::zero();
    if !f.vanishes_at_origin() {
        let v = g.constant_term() / f.constant_term();
        return Ok((v != zero).then(|| Evidence {
            arc: "origin".into(),
            behaviour: Behaviour::Tends(v),
        }));
    }
    if !g.vanishes_at_origin() {
        return Ok(Some(Evidence {
            arc: "any arc to the origin".into(),
            behaviour: Behaviour::Unbounded,
        }));
    }
    let (c, dirs) = regular_oriented(f, g)?;
    for (dir, f, g) in dirs {
        let tree = joint_root_tree(&f, &g)?;
        for b in tree.branches().iter().filter(|b| b.mult_f > 0) {
            if b.is_real {
                return Ok(Some(Evidence {
                    arc: format!("x = {} ({dir}, shear {c})", b.truncation),
                    behaviour: Behaviour::ZeroCurve,
                }));
            }
            let a = tree.real_approximation(b).expect("non-real branch");
            let (of, og) = (&a.orders[0], &a.orders[1]);
            if og <= of {
                return Ok(Some(Evidence {
                    arc: format!("x = {} ({dir}, shear {c})", a.arc),
                    behaviour: if og < of {
                        Behaviour::Unbounded
                    } else {
                        Behaviour::AvoidsValue(zero.clone())
                    },
                }));
            }
        }
    }
    Ok(None)
}

/// Whether `g/f -> 0` at the origin, for coprime `g` and `f`.
pub fn limit_is_zero(g: &BiPoly, f: &BiPoly) -> Result<bool> {
    Ok(zero_test(g, f)?.is_none())
}

/// Sufficient conditions read off `L_g(f)`: below one the limit is zero,
/// above one it does not exist.
pub fn exponent_shortcut(g: &BiPoly, f: &BiPoly) -> Result<Shortcut> {
    let r = lojasiewicz_exponent(f, g)?;
    let one = Rat::from_integer(1.into());
    Ok(match r.value {
        Some(v) if v < one => Shortcut::LimitZero,
        Some(v) if v > one => Shortcut::NoLimit,
        _ => Shortcut::Inconclusive,
    })
}

fn exists(value: Rat, arc: String) -> LimitVerdict {
    LimitVerdict {
        kind: LimitKind::ExistsEqual,
        evidence: vec![Evidence {
            arc,
            behaviour: Behaviour::Tends(value.clone()),
        }],
        value: Some(value),
    }
}

/// `lim g/f` at the origin.
pub fn limit(g: &BiPoly, f: &BiPoly) -> Result<LimitVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.is_zero() {
        return Ok(exists(Rat::zero(), "everywhere".into()));
    }
    let d = gcd(g, f);
    let g = div_exact(g, &d).expect("gcd divides");
    let f = div_exact(f, &d).expect("gcd divides");
    if !f.vanishes_at_origin() {
        return Ok(exists(g.constant_term() / f.constant_term(), "origin".into()));
    }
    let reg = make_regular(&f, &g)?;
    let c = reg.shear_c;
    let ray = match c {
        0 => "x = t, y = 0".to_string(),
        1 => "x = t, y = t".to_string(),
        -1 => "x = t, y = -t".to_string(),
        _ => format!("x = t, y = {c}*t"),
    };
    let (tf, tg) = (&reg.transformed_f, &reg.transformed_g);
    let (pf, pg) = (tf.x_axis_poly(), tg.x_axis_poly());
    let m = reg.order_f as usize;
    let ord_g = pg.coeffs().iter().position(|a| !a.is_zero());
    let l = match ord_g {
        Some(k) if k < m => {
            return Ok(LimitVerdict {
                kind: LimitKind::DoesNotExist,
                value: None,
                evidence: vec![Evidence {
                    arc: ray,
                    behaviour: Behaviour::Unbounded,
                }],
            })
        }
        Some(k) if k == m => pg.coeff(m) / pf.coeff(m),
        _ => Rat::zero(),
    };
    let rest = g.sub(&f.scale(&l));
    if rest.is_zero() {
        return Ok(exists(l, "everywhere".into()));
    }
    let d = gcd(&rest, &f);
    let rest = div_exact(&rest, &d).expect("gcd divides");
    let f = div_exact(&f, &d).expect("gcd divides");
    match zero_test(&rest, &f)? {
        None => Ok(exists(l, ray)),
        Some(ev) => {
            let behaviour = match ev.behaviour {
                Behaviour::AvoidsValue(_) => Behaviour::AvoidsValue(l.clone()),
                other => other,
            };
            Ok(LimitVerdict {
                kind: LimitKind::DoesNotExist,
                value: None,
                evidence: vec![
                    Evidence {
                        arc: ray,
                        behaviour: Behaviour::Tends(l),
                    },
                    Evidence { arc: ev.arc, behaviour },
                ],
            })
        }
    }
}
