use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Field, FieldElem, QPoly, Rat};

/// Exponent pair `x^x * y^y`; the `y` exponent may be fractional after an
/// arc substitution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: Rat,
}

impl Monomial {
    pub fn new(x: u32, y: Rat) -> Self {
        Monomial { x, y }
    }

    pub fn total(&self) -> Rat {
        Rat::from_integer(self.x.into()) + &self.y
    }
}

/// Sparse bivariate polynomial with nonnegative rational `y` exponents.
#[derive(Clone, PartialEq)]
pub struct BiPoly<C = Rat> {
    terms: BTreeMap<Monomial, C>,
}

fn int_rat(n: u32) -> Rat {
    Rat::from_integer(n.into())
}

impl<C: Field> BiPoly<C> {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, Rat::zero())
    }

    pub fn one() -> Self {
        Self::constant(C::one_elem())
    }

    pub fn monomial(c: C, x: u32, y: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(x, y), c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(C::one_elem(), 1, Rat::zero())
    }

    pub fn y() -> Self {
        Self::monomial(C::one_elem(), 0, Rat::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        assert!(!m.y.is_negative(), "negative y exponent");
        if c.is_zero_elem() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.plus(&c);
                if s.is_zero_elem() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: u32, y: &Rat) -> C {
        self.terms
            .get(&Monomial::new(x, y.clone()))
            .cloned()
            .unwrap_or_else(C::zero_elem)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0, &Rat::zero())
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero_elem()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.negated());
        }
        p
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero_elem() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.times(k))))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut p = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                p.add_term(Monomial::new(m1.x + m2.x, &m1.y + &m2.y), c1.times(c2));
            }
        }
        p
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> BiPoly<D> {
        BiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Lowest total degree of a term.
    pub fn order(&self) -> Result<Rat> {
        self.terms
            .keys()
            .map(Monomial::total)
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: &Rat) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| &m.total() == k)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|m| m.x).max().unwrap_or(0)
    }

    /// Smallest `N` such that every `y` exponent lies in `(1/N) Z`.
    pub fn ramification(&self) -> u64 {
        self.terms
            .keys()
            .fold(BigInt::one(), |l, m| l.lcm(m.y.denom()))
            .to_u64()
            .expect("ramification fits in u64")
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|m| m.y.is_integer())
    }

    /// `Some(m)` when the lowest homogeneous part has degree `m` and contains
    /// `x^m`.
    pub fn x_regular_order(&self) -> Option<u32> {
        let m = self.order().ok()?;
        let mi = m.to_integer().to_u32()?;
        (m.is_integer() && !self.coeff(mi, &Rat::zero()).is_zero_elem()).then_some(mi)
    }

    pub fn is_x_regular(&self) -> bool {
        self.x_regular_order().is_some()
    }

    /// `f(x, -y)`.
    pub fn bar(&self) -> Self {
        assert!(self.has_integer_exponents(), "bar needs integer exponents");
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let odd = m.y.to_integer().is_odd();
            (m.clone(), if odd { c.negated() } else { c.clone() })
        }))
    }

    /// `f(x, y + c x)`.
    pub fn shear(&self, c: &Rat) -> Self {
        assert!(self.has_integer_exponents(), "shear needs integer exponents");
        let lin = Self::y().add(&Self::x().scale(&C::from_rat(c)));
        let mut out = Self::zero();
        for (m, k) in &self.terms {
            let e = m.y.to_integer().to_u32().unwrap();
            let t = Self::monomial(k.clone(), m.x, Rat::zero()).mul(&lin.pow(e));
            out = out.add(&t);
        }
        out
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.x > 0).map(|(m, c)| {
            (
                Monomial::new(m.x - 1, m.y.clone()),
                c.times(&C::from_rat(&int_rat(m.x))),
            )
        }))
    }

    /// Coefficients of `x^i` as polynomials in `y` (as `BiPoly` with no `x`).
    pub fn x_coefficients(&self) -> Vec<Self> {
        let mut out = vec![Self::zero(); self.degree_x() as usize + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            out[m.x as usize].add_term(Monomial::new(0, m.y.clone()), c.clone());
        }
        out
    }

    /// `f(X + phi(Y), Y)` where `phi = sum c_k Y^{e_k}`.
    pub fn shift_x(&self, phi: &[(Rat, C)]) -> Self {
        if phi.is_empty() {
            return self.clone();
        }
        let lin = Self::from_terms(
            std::iter::once((Monomial::new(1, Rat::zero()), C::one_elem()))
                .chain(phi.iter().map(|(e, c)| (Monomial::new(0, e.clone()), c.clone()))),
        );
        let mut acc = Self::zero();
        for a in self.x_coefficients().iter().rev() {
            acc = acc.mul(&lin).add(a);
        }
        acc
    }

    /// Univariate `f(t, 0)`.
    pub fn on_x_axis(&self) -> Poly1<C> {
        let mut v = vec![C::zero_elem(); self.degree_x() as usize + 1];
        for (m, c) in &self.terms {
            if m.y.is_zero() {
                v[m.x as usize] = c.clone();
            }
        }
        Poly1::new(v)
    }
}

pub type Poly1<C> = crate::exactnum::Poly<C>;

impl BiPoly<Rat> {
    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(c, x, y)| (Monomial::new(x, int_rat(y)), Rat::from_integer(c.into()))),
        )
    }

    pub fn to_field(&self) -> BiPoly<FieldElem> {
        self.map(|c| FieldElem::rational(c.clone()))
    }

    /// Rescales to integer coefficients with content one and positive
    /// leading coefficient (largest monomial in the term order).
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = nums.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if self.terms.values().next_back().unwrap().is_negative() {
            g = -g;
        }
        let k = Rat::new(den, g);
        self.scale(&k)
    }

    /// Exact evaluation at a rational point (integer exponents only).
    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let e = m.y.to_integer().to_i32().unwrap();
            acc += c * num_traits::pow(x.clone(), m.x as usize) * num_traits::pow(y.clone(), e as usize);
        }
        acc
    }

    /// `f(t, 0)` as a rational polynomial.
    pub fn x_axis_poly(&self) -> QPoly {
        self.on_x_axis()
    }
}

impl<C: Field> fmt::Debug for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| ((m.x, m.y.to_string()), c))).finish()
    }
}

pub(crate) fn fmt_y_exponent(y: &Rat) -> String {
    if y.is_integer() {
        format!("^{y}")
    } else {
        format!("^({y})")
    }
}

pub(crate) fn fmt_monomial(x: u32, y: &Rat) -> String {
    let mut parts = Vec::new();
    if x == 1 {
        parts.push("x".to_string());
    } else if x > 1 {
        parts.push(format!("x^{x}"));
    }
    if y.is_one() {
        parts.push("y".to_string());
    } else if !y.is_zero() {
        parts.push(format!("y{}", fmt_y_exponent(y)));
    }
    parts.join("*")
}

impl fmt::Display for BiPoly<Rat> {
    /// Terms ordered by total degree, then by decreasing power of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.total().cmp(&b.total()).then(b.x.cmp(&a.x)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(m.x, &m.y);
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn ex21() -> BiPoly {
        BiPoly::from_int_terms(&[(1, 3, 0), (-1, 0, 5), (1, 0, 6)])
    }

    #[test]
    fn orders() {
        assert_eq!(ex21().order().unwrap(), rat(3));
        assert_eq!(BiPoly::<Rat>::x().order().unwrap(), rat(1));
        assert_eq!(BiPoly::from_int_terms(&[(1, 2, 1), (1, 0, 4)]).order().unwrap(), rat(3));
        assert_eq!(BiPoly::<Rat>::zero().order(), Err(Error::ZeroPolynomial));
        assert_eq!(ex21().homogeneous_part(&rat(3)), BiPoly::from_int_terms(&[(1, 3, 0)]));
    }

    #[test]
    fn regularity() {
        assert_eq!(ex21().x_regular_order(), Some(3));
        assert!(!BiPoly::from_int_terms(&[(1, 0, 2)]).is_x_regular());
        assert!(BiPoly::from_int_terms(&[(1, 2, 0), (1, 0, 2)]).is_x_regular());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(ex21().bar(), BiPoly::from_int_terms(&[(1, 3, 0), (1, 0, 5), (1, 0, 6)]));
        let x2 = BiPoly::from_int_terms(&[(1, 2, 0)]);
        assert_eq!(x2.bar(), x2);
        assert_eq!(BiPoly::from_int_terms(&[(1, 1, 1)]).bar(), BiPoly::from_int_terms(&[(-1, 1, 1)]));
    }

    #[test]
    fn shear_of_y_squared() {
        let f = BiPoly::from_int_terms(&[(1, 0, 2)]);
        let s = f.shear(&rat(1));
        assert_eq!(s, BiPoly::from_int_terms(&[(1, 0, 2), (2, 1, 1), (1, 2, 0)]));
        assert_eq!(s.x_regular_order(), Some(2));
    }

    #[test]
    fn shift_by_fractional_arc() {
        let phi = vec![(ratio(5, 3), rat(1))];
        let f = ex21().shift_x(&phi);
        let expect = BiPoly::from_terms(vec![
            (Monomial::new(3, rat(0)), rat(1)),
            (Monomial::new(2, ratio(5, 3)), rat(3)),
            (Monomial::new(1, ratio(10, 3)), rat(3)),
            (Monomial::new(0, rat(6)), rat(1)),
        ]);
        assert_eq!(f, expect);
        assert_eq!(f.ramification(), 3);
    }

    #[test]
    fn display() {
        assert_eq!(ex21().to_string(), "x^3 - y^5 + y^6");
        let f = BiPoly::from_terms(vec![(Monomial::new(1, ratio(3, 2)), ratio(-1, 2))]);
        assert_eq!(f.to_string(), "-1/2*x*y^(3/2)");
    }

    #[test]
    fn normalization() {
        let f = BiPoly::from_terms(vec![
            (Monomial::new(1, rat(0)), ratio(-1, 2)),
            (Monomial::new(0, rat(2)), ratio(1, 3)),
        ]);
        let n = f.normalized();
        assert_eq!(n, BiPoly::from_int_terms(&[(3, 1, 0), (-2, 0, 2)]));
    }
}
