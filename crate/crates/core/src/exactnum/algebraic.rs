//! Exact complex algebraic numbers: an irreducible integer polynomial plus a
//! rational box isolating one of its roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::{eval_qpoly, CInterval, Interval};
use super::isolate::{count_in_box, isolate_nonreal, isolate_real, refine_complex, refine_real};
use super::poly::{norm_polynomial, q_to_z, z_to_q, zfactor, zsign_at, QPoly, ZPoly};
use super::Rat;
use crate::error::{Error, Result};

/// A complex algebraic number.
///
/// The minimal polynomial is irreducible over the integers, primitive, with
/// positive leading coefficient. Rationals have degree one and a point box;
/// other real numbers carry an open isolating interval with `im = [0, 0]`;
/// non-real numbers carry a box strictly inside one half-plane.
#[derive(Clone)]
pub struct AlgebraicNumber {
    minpoly: ZPoly,
    re: Interval,
    im: Interval,
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn pow2_inv(k: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << k)
}

impl AlgebraicNumber {
    pub fn from_rat(r: Rat) -> Self {
        AlgebraicNumber {
            minpoly: vec![-r.numer().clone(), r.denom().clone()],
            re: Interval::point(r),
            im: Interval::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        roots_of_irreducible(&vec![BigInt::one(), BigInt::zero(), BigInt::one()])
            .into_iter()
            .next()
            .unwrap()
    }

    pub(crate) fn from_parts(minpoly: ZPoly, re: Interval, im: Interval) -> Self {
        AlgebraicNumber { minpoly, re, im }
    }

    pub fn minpoly(&self) -> &ZPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn to_rat(&self) -> Option<Rat> {
        (self.degree() == 1).then(|| self.re.lo.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn is_zero(&self) -> bool {
        self.degree() == 1 && self.minpoly[0].is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_point() && self.im.lo.is_zero()
    }

    /// Current enclosing box.
    pub fn enclosure(&self) -> CInterval {
        CInterval::new(self.re.clone(), self.im.clone())
    }

    pub fn conjugate(&self) -> Self {
        if self.is_real() {
            return self.clone();
        }
        AlgebraicNumber {
            minpoly: self.minpoly.clone(),
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> Self {
        let minpoly: ZPoly = self
            .minpoly
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        let minpoly = if minpoly.last().unwrap().is_negative() {
            minpoly.into_iter().map(|c| -c).collect()
        } else {
            minpoly
        };
        AlgebraicNumber {
            minpoly,
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    fn refine_once(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        if self.is_real() {
            let re = refine_real(&self.minpoly, &self.re);
            AlgebraicNumber {
                minpoly: self.minpoly.clone(),
                re,
                im: self.im.clone(),
            }
        } else {
            let b = refine_complex(&self.minpoly, &self.enclosure());
            AlgebraicNumber {
                minpoly: self.minpoly.clone(),
                re: b.re,
                im: b.im,
            }
        }
    }

    /// A copy whose box is narrower than `eps` in both directions.
    pub fn refined(&self, eps: &Rat) -> Self {
        let mut a = self.clone();
        while &a.enclosure().width() >= eps {
            a = a.refine_once();
        }
        a
    }

    /// Approximation `(re, im)` accurate to about `1e-15`.
    pub fn to_f64(&self) -> (f64, f64) {
        if self.is_real() {
            return self.refined(&pow2_inv(56)).enclosure().mid_f64();
        }
        let Some(coeffs) = self.minpoly.iter().map(|c| c.to_f64().filter(|v| v.is_finite())).collect::<Option<Vec<f64>>>()
        else {
            return self.refined(&pow2_inv(56)).enclosure().mid_f64();
        };
        // Bisecting a complex box costs a root count per bit, so polish the
        // centre with Newton's method and keep the result once it lands
        // inside the isolating box.
        let mut a = self.clone();
        loop {
            let b = a.enclosure();
            let (lo_re, hi_re) = (b.re.lo.to_f64().unwrap(), b.re.hi.to_f64().unwrap());
            let (lo_im, hi_im) = (b.im.lo.to_f64().unwrap(), b.im.hi.to_f64().unwrap());
            if let Some((x, y)) = newton_f64(&coeffs, b.mid_f64()) {
                let tol = 1e-12 * (1.0 + x.abs() + y.abs());
                if lo_re - tol <= x && x <= hi_re + tol && lo_im - tol <= y && y <= hi_im + tol {
                    return (x, y);
                }
            }
            if b.width() < pow2_inv(56) {
                return b.mid_f64();
            }
            a = a.refine_once();
        }
    }

    /// Decides whether two numbers are equal.
    pub fn same_root(&self, other: &Self) -> bool {
        if self.minpoly != other.minpoly || self.is_real() != other.is_real() {
            return false;
        }
        if self.is_rational() {
            return self.re == other.re;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            let Some(bx) = a.enclosure().intersect(&b.enclosure()) else {
                return false;
            };
            if a.is_real() {
                // the intersection lies inside both isolating intervals
                if bx.re.is_point() {
                    return false;
                }
                let sl = zsign_at(&a.minpoly, &bx.re.lo);
                let sh = zsign_at(&a.minpoly, &bx.re.hi);
                return sl != sh;
            }
            match count_in_box(&a.minpoly, &bx.re, &bx.im) {
                Some(n) => return n == 1,
                None => {
                    a = a.refine_once();
                    b = b.refine_once();
                }
            }
        }
    }

    /// Total order on real numbers.
    pub fn cmp_real(&self, other: &Self) -> Result<Ordering> {
        if !self.is_real() || !other.is_real() {
            return Err(Error::NotReal);
        }
        if let (Some(x), Some(y)) = (self.to_rat(), other.to_rat()) {
            return Ok(x.cmp(&y));
        }
        if self.same_root(other) {
            return Ok(Ordering::Equal);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.re.hi < b.re.lo {
                return Ok(Ordering::Less);
            }
            if b.re.hi < a.re.lo {
                return Ok(Ordering::Greater);
            }
            a = a.refine_once();
            b = b.refine_once();
        }
    }

    /// Sign of a real number.
    pub fn signum_real(&self) -> Result<i32> {
        Ok(match self.cmp_real(&Self::zero())? {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        binary(self, other, Op::Add).expect("addition cannot fail")
    }

    pub fn sub(&self, other: &Self) -> Self {
        binary(self, other, Op::Sub).expect("subtraction cannot fail")
    }

    pub fn mul(&self, other: &Self) -> Self {
        binary(self, other, Op::Mul).expect("multiplication cannot fail")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        binary(self, other, Op::Div)
    }

    /// Ordering key used to sort roots canonically: real part, then
    /// imaginary part, compared on approximations rounded to a fixed grid.
    pub fn sort_key(&self) -> (Rat, Rat) {
        if let Some(r) = self.to_rat() {
            return (r, Rat::zero());
        }
        let (re, im) = self.to_f64();
        let grid = |x: f64| {
            let s = (1u64 << 32) as f64;
            Rat::new(BigInt::from((x * s).round() as i64), BigInt::one() << 32u32)
        };
        (grid(re), grid(im))
    }
}

/// Complex Newton iteration on a polynomial given by its coefficients,
/// lowest degree first. `None` if it fails to settle.
fn newton_f64(coeffs: &[f64], start: (f64, f64)) -> Option<(f64, f64)> {
    let (mut x, mut y) = start;
    for _ in 0..200 {
        let (mut pr, mut pi, mut dr, mut di) = (0.0, 0.0, 0.0, 0.0);
        for &c in coeffs.iter().rev() {
            let t = dr * x - di * y + pr;
            di = dr * y + di * x + pi;
            dr = t;
            let t = pr * x - pi * y + c;
            pi = pr * y + pi * x;
            pr = t;
        }
        let d = dr * dr + di * di;
        if d == 0.0 || !d.is_finite() {
            return None;
        }
        let (sr, si) = ((pr * dr + pi * di) / d, (pi * dr - pr * di) / d);
        x -= sr;
        y -= si;
        if !(x.is_finite() && y.is_finite()) {
            return None;
        }
        if sr.abs() + si.abs() <= 4.0 * f64::EPSILON * (x.abs() + y.abs()).max(f64::MIN_POSITIVE) {
            return Some((x, y));
        }
    }
    None
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.same_root(other)
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rat() {
            return write!(f, "{r}");
        }
        // Rounding to zero avoids printing "-0.000000".
        let tidy = |v: f64| if v.abs() < 5e-7 { 0.0 } else { v };
        let (re, im) = self.to_f64();
        let (re, im) = (tidy(re), tidy(im));
        if self.is_real() {
            write!(f, "≈{re:.6}")?;
        } else {
            let sign = if im < 0.0 { '-' } else { '+' };
            write!(f, "≈{re:.6}{sign}{:.6}i", im.abs())?;
        }
        write!(f, " (root of {})", format_zpoly(&self.minpoly, "z"))
    }
}

pub fn format_zpoly(p: &[BigInt], var: &str) -> String {
    let mut s = String::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = !a.is_one() || k == 0;
        if show_coeff {
            s.push_str(&a.to_string());
        }
        if k >= 1 {
            if show_coeff {
                s.push('*');
            }
            s.push_str(var);
            if k > 1 {
                s.push_str(&format!("^{k}"));
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// All roots of an irreducible integer polynomial: real roots in increasing
/// order, then each upper half-plane root followed by its conjugate.
pub fn roots_of_irreducible(q: &ZPoly) -> Vec<AlgebraicNumber> {
    if q.len() == 2 {
        return vec![AlgebraicNumber::from_rat(Rat::new(
            -q[0].clone(),
            q[1].clone(),
        ))];
    }
    let mut out: Vec<AlgebraicNumber> = isolate_real(q)
        .into_iter()
        .map(|re| AlgebraicNumber::from_parts(q.clone(), re, Interval::zero()))
        .collect();
    out.extend(
        isolate_nonreal(q)
            .into_iter()
            .map(|b| AlgebraicNumber::from_parts(q.clone(), b.re, b.im)),
    );
    out
}

/// Distinct roots of a nonzero integer polynomial with multiplicities.
pub fn integer_poly_roots(p: &ZPoly) -> Vec<(AlgebraicNumber, usize)> {
    let mut out = Vec::new();
    for (q, k) in zfactor(p) {
        for r in roots_of_irreducible(&q) {
            out.push((r, k));
        }
    }
    out
}

/// Picks the unique root among the irreducible `factors` that lies in every
/// enclosure produced by `approx(round)`; enclosures must shrink to the
/// target as `round` grows.
pub(crate) fn select_root(
    factors: Vec<ZPoly>,
    mut approx: impl FnMut(u32) -> CInterval,
) -> AlgebraicNumber {
    let mut factors = factors;
    let mut round = 0u32;
    // cheap filter on whole factors first
    while factors.len() > 1 && round < 6 {
        let enc = approx(round);
        let prec = 32 + 16 * round;
        factors.retain(|q| eval_qpoly(&z_to_q(q), &enc, prec).contains_zero());
        round += 1;
    }
    assert!(!factors.is_empty(), "no factor vanishes at the target");
    if factors.len() == 1 && factors[0].len() == 2 {
        return roots_of_irreducible(&factors[0]).pop().unwrap();
    }
    let mut cands: Vec<AlgebraicNumber> = factors.iter().flat_map(roots_of_irreducible).collect();
    loop {
        let enc = approx(round);
        cands.retain(|c| c.enclosure().intersects(&enc));
        assert!(!cands.is_empty(), "root selection lost the target");
        if cands.len() == 1 {
            return cands.pop().unwrap();
        }
        let w = enc.width() / rat(4);
        cands = cands.into_iter().map(|c| c.refined(&w.clone().max(pow2_inv(400)))).collect();
        round += 1;
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

fn binary(a: &AlgebraicNumber, b: &AlgebraicNumber, op: Op) -> Result<AlgebraicNumber> {
    if op == Op::Div && b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if let (Some(x), Some(y)) = (a.to_rat(), b.to_rat()) {
        let r = match op {
            Op::Add => x + y,
            Op::Sub => x - y,
            Op::Mul => x * y,
            Op::Div => x / y,
        };
        return Ok(AlgebraicNumber::from_rat(r));
    }
    if a.is_zero() {
        return Ok(match op {
            Op::Add => b.clone(),
            Op::Sub => b.neg(),
            Op::Mul | Op::Div => AlgebraicNumber::zero(),
        });
    }
    if b.is_zero() {
        return Ok(match op {
            Op::Add | Op::Sub => a.clone(),
            _ => AlgebraicNumber::zero(),
        });
    }
    let ma = z_to_q(&a.minpoly);
    let mb = z_to_q(&b.minpoly);
    let (da, db) = (a.degree(), b.degree());
    let norm = match op {
        Op::Add => norm_polynomial(&ma, da * db, |z0| {
            mb.compose(&QPoly::new(vec![z0.clone(), -Rat::one()]))
        }),
        Op::Sub => norm_polynomial(&ma, da * db, |z0| {
            mb.compose(&QPoly::new(vec![-z0.clone(), Rat::one()]))
        }),
        Op::Mul => norm_polynomial(&ma, da * db, |z0| {
            let c: Vec<Rat> = (0..=db)
                .map(|k| {
                    let ck = mb.coeff(db - k);
                    let mut zp = Rat::one();
                    for _ in 0..(db - k) {
                        zp *= z0;
                    }
                    ck * zp
                })
                .collect();
            QPoly::new(c)
        }),
        Op::Div => norm_polynomial(&mb, da * db, |z0| {
            ma.compose(&QPoly::new(vec![Rat::zero(), z0.clone()]))
        }),
    };
    let factors: Vec<ZPoly> = zfactor(&q_to_z(&norm)).into_iter().map(|(q, _)| q).collect();
    let (mut ra, mut rb) = (a.clone(), b.clone());
    let res = select_root(factors, |round| {
        let eps = pow2_inv(8 + 8 * round);
        ra = ra.refined(&eps);
        rb = rb.refined(&eps);
        let (x, y) = (ra.enclosure(), rb.enclosure());
        let prec = 32 + 16 * round;
        match op {
            Op::Add => x.add(&y),
            Op::Sub => x.sub(&y),
            Op::Mul => x.mul(&y).round(prec),
            Op::Div => match y.recip() {
                Some(inv) => x.mul(&inv.round(prec)).round(prec),
                None => CInterval::new(
                    Interval::new(-rat(1) / eps.clone(), rat(1) / eps.clone()),
                    Interval::new(-rat(1) / eps.clone(), rat(1) / eps),
                ),
            },
        }
    });
    Ok(canonical(res))
}

/// Ensures real results carry a zero-width imaginary part.
fn canonical(a: AlgebraicNumber) -> AlgebraicNumber {
    if a.is_rational() {
        return AlgebraicNumber::from_rat(a.re.lo.clone());
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sqrt2() -> AlgebraicNumber {
        roots_of_irreducible(&vec![BigInt::from(-2), BigInt::zero(), BigInt::one()])
            .pop()
            .unwrap()
    }

    #[test]
    fn approximations_of_nonreal_roots() {
        // z^6 + z^3 + z^2 + 1 has no real roots
        let p: ZPoly = [1, 0, 1, 1, 0, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let rs = roots_of_irreducible(&p);
        assert_eq!(rs.len(), 6);
        for r in &rs {
            let (x, y) = r.to_f64();
            let exact = r.refined(&pow2_inv(30)).enclosure();
            assert!((x - exact.re.mid().to_f64().unwrap()).abs() < 1e-8);
            assert!((y - exact.im.mid().to_f64().unwrap()).abs() < 1e-8);
            assert_eq!(r.conjugate().to_f64(), (x, -y));
        }
        let mut keys: Vec<_> = rs.iter().map(|r| r.sort_key()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 6);
    }

    fn omega() -> AlgebraicNumber {
        roots_of_irreducible(&vec![BigInt::one(), BigInt::one(), BigInt::one()])
            .into_iter()
            .next()
            .unwrap()
    }

    #[test]
    fn conjugate_sum_is_zero() {
        let s = sqrt2();
        let z = s.add(&s.neg());
        assert!(z.is_zero());
        assert_eq!(z.minpoly(), &vec![BigInt::zero(), BigInt::one()]);
    }

    #[test]
    fn square_of_square_root() {
        let s = sqrt2();
        let p = s.mul(&s);
        assert_eq!(p.to_rat(), Some(rat(2)));
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn i_squared() {
        let i = AlgebraicNumber::i();
        assert_eq!(i.mul(&i).to_rat(), Some(rat(-1)));
        assert!(!i.is_real());
        assert_eq!(i.conjugate(), i.neg());
    }

    #[test]
    fn zero_tests() {
        assert!(AlgebraicNumber::zero().is_zero());
        let c = roots_of_irreducible(&vec![BigInt::from(-2), BigInt::zero(), BigInt::zero(), BigInt::one()]);
        assert_eq!(c.len(), 3);
        assert!(c[0].is_real() && !c[0].is_zero());
    }

    #[test]
    fn realness() {
        assert!(sqrt2().is_real());
        assert!(!omega().is_real());
    }

    #[test]
    fn comparisons() {
        let h = AlgebraicNumber::from_rat(Rat::new(3.into(), 2.into()));
        assert_eq!(sqrt2().cmp_real(&h).unwrap(), Ordering::Less);
        assert_eq!(AlgebraicNumber::one().cmp_real(&AlgebraicNumber::one()).unwrap(), Ordering::Equal);
        assert_eq!(omega().cmp_real(&h), Err(Error::NotReal));
        // sqrt2 * sqrt2 / 2 == 1 exactly
        let one = sqrt2().mul(&sqrt2()).div(&AlgebraicNumber::from_int(2)).unwrap();
        assert_eq!(one, AlgebraicNumber::one());
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(sqrt2().div(&AlgebraicNumber::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn nested_radicals() {
        // (sqrt2 + i)(sqrt2 - i) = 3
        let s = sqrt2();
        let i = AlgebraicNumber::i();
        let a = s.add(&i);
        let b = s.sub(&i);
        assert_eq!(a.degree(), 4);
        assert_eq!(a.mul(&b).to_rat(), Some(rat(3)));
        assert_eq!(a.conjugate(), b);
        // omega^3 = 1, omega + conj omega = -1
        let w = omega();
        assert_eq!(w.mul(&w).mul(&w).to_rat(), Some(rat(1)));
        assert_eq!(w.add(&w.conjugate()).to_rat(), Some(rat(-1)));
        assert_eq!(a.div(&a).unwrap().to_rat(), Some(rat(1)));
    }

    #[test]
    fn refinement_reaches_requested_width() {
        let eps = Rat::new(1.into(), 1_000_000_000i64.into());
        assert!(sqrt2().refined(&eps).enclosure().width() < eps);
        assert!(omega().refined(&eps).enclosure().width() < eps);
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rational_arithmetic_agrees(x in small_rat(), y in small_rat()) {
            let (a, b) = (AlgebraicNumber::from_rat(x.clone()), AlgebraicNumber::from_rat(y.clone()));
            prop_assert_eq!(a.add(&b).to_rat(), Some(&x + &y));
            prop_assert_eq!(a.sub(&b).to_rat(), Some(&x - &y));
            prop_assert_eq!(a.mul(&b).to_rat(), Some(&x * &y));
            if !y.is_zero() {
                prop_assert_eq!(a.div(&b).unwrap().to_rat(), Some(&x / &y));
            }
        }

        #[test]
        fn conjugate_sum_and_product_are_real(p in 1i64..6, q in -4i64..4) {
            // root of z^2 + q z + p with a possibly complex pair
            let poly = vec![BigInt::from(p), BigInt::from(q), BigInt::one()];
            for (a, _) in integer_poly_roots(&poly) {
                let s = a.add(&a.conjugate());
                prop_assert!(s.is_real());
                let m = a.mul(&a.conjugate());
                prop_assert!(m.is_real());
                prop_assert!(m.signum_real().unwrap() >= 0);
            }
        }
    }
}
