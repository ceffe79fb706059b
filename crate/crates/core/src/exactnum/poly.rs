//! Dense univariate polynomials over an exact field, plus the integer
//! polynomial helpers used by root isolation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Exact field operations. Method names avoid clashing with `std::ops`.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn recip(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    fn is_one_elem(&self) -> bool {
        self.minus(&Self::one_elem()).is_zero_elem()
    }
}

impl Field for Rat {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        assert!(!Zero::is_zero(self), "reciprocal of zero");
        num_traits::Inv::inv(self)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
}

/// Dense polynomial, little-endian coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

pub type QPoly = Poly<Rat>;

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one_elem())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * z^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero_elem(); k];
        v.push(c);
        Self::new(v)
    }

    /// The polynomial `z`.
    pub fn var() -> Self {
        Self::monomial(F::one_elem(), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero_elem)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero_elem)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k).plus(&rhs.coeff(k))).collect();
        Self::new(v)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k).minus(&rhs.coeff(k))).collect();
        Self::new(v)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(F::negated).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero_elem() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero_elem(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].plus(&a.times(b));
            }
        }
        Self::new(v)
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

    /// Euclidean division. Panics if `d` is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero_elem(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k].times(&inv);
            if c.is_zero_elem() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].minus(&c.times(dj));
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s)` with `g = gcd(self, m)` monic and `s * self ≡ g (mod m)`.
    pub fn gcd_cofactor(&self, m: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (self.clone(), m.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.is_zero() {
            return (r0, s0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.times(&F::from_rat(&Rat::from_integer(BigInt::from(k)))))
            .collect();
        Self::new(v)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero_elem();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// Evaluation at a polynomial argument.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Yun's algorithm: `self = lc * prod_k f_k^k` with each `f_k` monic and
    /// squarefree, pairwise coprime. Returns the nonconstant `(f_k, k)`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = d.div_exact(&a0).expect("gcd divides derivative");
        let mut k = 1;
        loop {
            let dd = c.sub(&b.derivative());
            if b.deg() == 0 {
                break;
            }
            let a = b.gcd(&dd);
            if a.deg() > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = dd.div_exact(&a).expect("gcd divides");
            k += 1;
        }
        out
    }

    /// Monic squarefree part.
    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// Resultant `lc(a)^deg(b) * prod_{a(r)=0} b(r)` via the Euclidean remainder
/// sequence.
pub fn resultant<F: Field>(a: &Poly<F>, b: &Poly<F>) -> F {
    if a.is_zero() || b.is_zero() {
        return F::zero_elem();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = F::one_elem();
    loop {
        let (da, db) = (a.deg(), b.deg());
        if db == 0 {
            return acc.times(&pow_field(&b.lc(), da));
        }
        if da == 0 {
            return acc.times(&pow_field(&a.lc(), db));
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return F::zero_elem();
        }
        let dr = r.deg();
        if (da * db) % 2 == 1 {
            acc = acc.negated();
        }
        acc = acc.times(&pow_field(&b.lc(), da - dr));
        a = b;
        b = r;
    }
}

pub(crate) fn pow_field<F: Field>(x: &F, e: usize) -> F {
    let mut acc = F::one_elem();
    for _ in 0..e {
        acc = acc.times(x);
    }
    acc
}

/// `prod_i e_i(theta_i)` over the roots `theta_i` of `m`, i.e. the norm of an
/// element represented by `e` in `Q[t]/(m)`.
pub fn norm_value(m: &QPoly, e: &QPoly) -> Rat {
    if e.is_zero() {
        return Rat::zero();
    }
    let r = resultant(m, e);
    r / pow_field(&m.lc(), e.deg())
}

/// Interpolates the polynomial `N(z) = prod_i E(theta_i, z)` of degree at most
/// `deg_bound`, where `specialize(z0)` returns `E(t, z0)` as a polynomial in `t`.
pub fn norm_polynomial(
    m: &QPoly,
    deg_bound: usize,
    specialize: impl Fn(&Rat) -> QPoly,
) -> QPoly {
    let points: Vec<Rat> = (0..=deg_bound)
        .map(|k| Rat::from_integer(BigInt::from(k as i64) - BigInt::from((deg_bound / 2) as i64)))
        .collect();
    let values: Vec<Rat> = points.iter().map(|z| norm_value(m, &specialize(z))).collect();
    interpolate(&points, &values)
}

/// Newton interpolation through distinct points.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> QPoly {
    let n = xs.len();
    let mut dd: Vec<Rat> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = QPoly::zero();
    for i in (0..n).rev() {
        acc = acc
            .mul(&QPoly::new(vec![-xs[i].clone(), Rat::one()]))
            .add(&QPoly::constant(dd[i].clone()));
    }
    acc
}

// ---------------------------------------------------------------------------
// Integer polynomials

pub type ZPoly = Vec<BigInt>;

pub fn ztrim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn zcontent(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub fn zprimitive(p: &[BigInt]) -> ZPoly {
    let p = ztrim(p.to_vec());
    if p.is_empty() {
        return p;
    }
    let mut g = zcontent(&p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Primitive part keeping the sign of the input (positive rescaling only).
pub fn zprimitive_signed(p: &[BigInt]) -> ZPoly {
    let p = ztrim(p.to_vec());
    if p.is_empty() {
        return p;
    }
    let g = zcontent(&p);
    p.into_iter().map(|c| c / &g).collect()
}

/// Clears denominators by a positive factor and removes the content.
pub fn q_to_z(p: &QPoly) -> ZPoly {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let v: ZPoly = p
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
        .collect();
    zprimitive_signed(&v)
}

pub fn z_to_q(p: &[BigInt]) -> QPoly {
    QPoly::new(p.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

pub fn zeval_rat(p: &[BigInt], x: &Rat) -> Rat {
    // Homogenised Horner keeps everything in integers.
    let (n, d) = (x.numer(), x.denom());
    let deg = p.len().saturating_sub(1);
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    let mut den = BigInt::one();
    for _ in 0..deg {
        den *= d;
    }
    Rat::new(acc, den)
}

/// Sign of `p(x)` as -1, 0 or 1.
pub fn zsign_at(p: &[BigInt], x: &Rat) -> i32 {
    let (n, d) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    // denominator d^deg is positive
    sign_of(&acc)
}

pub fn sign_of(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn zderivative(p: &[BigInt]) -> ZPoly {
    ztrim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
pub fn zprem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return ztrim(r);
    }
    let lb = b[db].clone();
    let mut steps = r.len() - db;
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k - db + j] -= &c * bj;
        }
        r.pop();
        r = ztrim(r);
        steps -= 1;
    }
    for _ in 0..steps {
        for x in r.iter_mut() {
            *x *= &lb;
        }
    }
    ztrim(r)
}

/// Signed remainder sequence `f0 = a, f1 = b, f_{k+1} = -rem(f_{k-1}, f_k)`,
/// each term rescaled by a positive constant.
pub fn signed_remainder_sequence(a: &[BigInt], b: &[BigInt]) -> Vec<ZPoly> {
    let mut seq = vec![zprimitive_signed(a)];
    let b = zprimitive_signed(b);
    if b.is_empty() {
        return seq;
    }
    seq.push(b);
    loop {
        let n = seq.len();
        let (p, q) = (&seq[n - 2], &seq[n - 1]);
        if q.len() <= 1 {
            break;
        }
        // prem = lc(q)^e * rem with e = 0 when deg p < deg q
        let e = if p.len() < q.len() { 0 } else { p.len() - q.len() + 1 };
        let r = zprem(p, q);
        if r.is_empty() {
            break;
        }
        let lc_power_negative = q.last().unwrap().is_negative() && e % 2 == 1;
        let r: ZPoly = if lc_power_negative { r } else { r.into_iter().map(|c| -c).collect() };
        seq.push(zprimitive_signed(&r));
    }
    seq
}

pub fn sign_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

pub fn variations_at(seq: &[ZPoly], x: &Rat) -> usize {
    sign_variations(seq.iter().map(|p| zsign_at(p, x)))
}

/// Sign variations at `+inf` (`positive = true`) or `-inf`.
pub fn variations_at_infinity(seq: &[ZPoly], positive: bool) -> usize {
    sign_variations(seq.iter().map(|p| {
        let s = sign_of(p.last().unwrap());
        if positive || (p.len() - 1) % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Distinct irreducible factors (primitive, positive leading coefficient)
/// with their multiplicities; constants dropped.
pub fn zfactor(p: &[BigInt]) -> Vec<(ZPoly, usize)> {
    use algebraics::polynomial::Polynomial;
    let p = zprimitive(p);
    if p.len() <= 1 {
        return Vec::new();
    }
    if p.len() == 2 {
        return vec![(p, 1)];
    }
    let poly: Polynomial<BigInt> = p.into_iter().collect();
    let factors = poly.factor();
    factors
        .polynomial_factors
        .into_iter()
        .map(|f| (zprimitive(&f.polynomial.into_coefficients()), f.power))
        .filter(|(f, _)| f.len() > 1)
        .collect()
}

/// Cauchy bound: every complex root has modulus strictly below the result,
/// which is a power of two.
pub fn cauchy_bound(p: &[BigInt]) -> Rat {
    let lc = p.last().unwrap().abs();
    let max = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound = Rat::one() + Rat::new(max, lc);
    let mut r = Rat::one();
    while r <= bound {
        r *= Rat::from_integer(BigInt::from(2));
    }
    r
}
