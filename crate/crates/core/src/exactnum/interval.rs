//! Rational interval arithmetic with outward rounding to a dyadic grid, used
//! to enclose values of algebraic expressions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::QPoly;
use super::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

fn round_down(x: &Rat, prec: u32) -> Rat {
    if x.denom().bits() <= prec as u64 {
        return x.clone();
    }
    let scaled = x.numer() << prec;
    let q = scaled.div_floor(x.denom());
    Rat::new(q, BigInt::one() << prec)
}

fn round_up(x: &Rat, prec: u32) -> Rat {
    if x.denom().bits() <= prec as u64 {
        return x.clone();
    }
    let scaled = x.numer() << prec;
    let q = scaled.div_ceil(x.denom());
    Rat::new(q, BigInt::one() << prec)
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Self::point(Rat::zero())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }

    /// Point dividing the interval in ratio `t : 1 - t`.
    pub fn at(&self, t: &Rat) -> Rat {
        &self.lo + self.width() * t
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersect(&self, o: &Interval) -> Option<Interval> {
        let lo = (&self.lo).max(&o.lo).clone();
        let hi = (&self.hi).min(&o.hi).clone();
        (lo <= hi).then(|| Interval { lo, hi })
    }

    pub fn round(self, prec: u32) -> Self {
        Interval {
            lo: round_down(&self.lo, prec),
            hi: round_up(&self.hi, prec),
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        if self.is_point() && o.is_point() {
            return Interval::point(&self.lo * &o.lo);
        }
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, r: &Rat) -> Interval {
        let (a, b) = (&self.lo * r, &self.hi * r);
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn to_f64_mid(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.mid().to_f64().unwrap_or(f64::NAN)
    }
}

/// Axis-aligned complex box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CInterval {
    pub re: Interval,
    pub im: Interval,
}

impl CInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        CInterval { re, im }
    }

    pub fn from_rat(x: &Rat) -> Self {
        CInterval {
            re: Interval::point(x.clone()),
            im: Interval::zero(),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn intersects(&self, o: &CInterval) -> bool {
        self.re.intersect(&o.re).is_some() && self.im.intersect(&o.im).is_some()
    }

    pub fn intersect(&self, o: &CInterval) -> Option<CInterval> {
        Some(CInterval {
            re: self.re.intersect(&o.re)?,
            im: self.im.intersect(&o.im)?,
        })
    }

    pub fn width(&self) -> Rat {
        self.re.width().max(self.im.width())
    }

    pub fn round(self, prec: u32) -> Self {
        CInterval {
            re: self.re.round(prec),
            im: self.im.round(prec),
        }
    }

    pub fn add(&self, o: &CInterval) -> CInterval {
        CInterval {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &CInterval) -> CInterval {
        CInterval {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn neg(&self) -> CInterval {
        CInterval {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, o: &CInterval) -> CInterval {
        if self.im.is_point() && self.im.lo.is_zero() && o.im.is_point() && o.im.lo.is_zero() {
            return CInterval {
                re: self.re.mul(&o.re),
                im: Interval::zero(),
            };
        }
        CInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    /// Encloses `1 / self`; `None` if the box may contain zero.
    pub fn recip(&self) -> Option<CInterval> {
        if self.contains_zero() {
            return None;
        }
        // 1/z = conj(z) / |z|^2 with |z|^2 bounded away from zero
        let n = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let n = Interval::new(n.lo.clone().max(Rat::zero()), n.hi);
        if !n.lo.is_positive() {
            return None;
        }
        let inv = Interval::new(Rat::one() / &n.hi, Rat::one() / &n.lo);
        Some(CInterval {
            re: self.re.mul(&inv),
            im: self.im.neg().mul(&inv),
        })
    }

    pub fn mid_f64(&self) -> (f64, f64) {
        (self.re.to_f64_mid(), self.im.to_f64_mid())
    }
}

/// Horner evaluation of a rational polynomial on a box, rounded outward at
/// every step.
pub fn eval_qpoly(p: &QPoly, z: &CInterval, prec: u32) -> CInterval {
    let mut acc = CInterval::from_rat(&Rat::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).add(&CInterval::from_rat(c)).round(prec);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn rounding_is_outward() {
        let i = Interval::new(r(1, 3), r(2, 3)).round(8);
        assert!(i.lo <= r(1, 3) && i.hi >= r(2, 3));
        assert!(i.lo.denom().bits() <= 9);
    }

    #[test]
    fn complex_product_encloses() {
        // (1 + i)^2 = 2i
        let z = CInterval::new(Interval::point(r(1, 1)), Interval::point(r(1, 1)));
        let w = z.mul(&z);
        assert!(w.re.contains(&Rat::zero()));
        assert!(w.im.contains(&r(2, 1)));
    }

    #[test]
    fn reciprocal_encloses() {
        let z = CInterval::new(Interval::new(r(1, 1), r(2, 1)), Interval::zero());
        let w = z.recip().unwrap();
        assert!(w.re.contains(&r(1, 2)) && w.re.contains(&r(1, 1)));
    }
}
