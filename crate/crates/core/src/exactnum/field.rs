//! Simple algebraic extensions `Q(theta)` with a fixed complex embedding.
//!
//! Puiseux coefficients are kept as polynomials in a primitive element so
//! that substitutions run on plain rational polynomial arithmetic; they are
//! turned into [`AlgebraicNumber`]s only when a predicate or output needs it.

use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::algebraic::{roots_of_irreducible, select_root, AlgebraicNumber};
use super::interval::{eval_qpoly, CInterval};
use super::poly::{norm_polynomial, q_to_z, z_to_q, zfactor, Field, Poly, QPoly};
use super::Rat;
use crate::error::{Error, Result};

fn pow2_inv(k: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << k)
}

pub struct NumberField {
    modulus: QPoly,
    generator: AlgebraicNumber,
    refined: Mutex<AlgebraicNumber>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({})", self.generator)
    }
}

impl NumberField {
    /// The field generated by an irrational algebraic number.
    pub fn new(generator: AlgebraicNumber) -> Arc<Self> {
        assert!(generator.degree() >= 2, "generator must be irrational");
        Arc::new(NumberField {
            modulus: z_to_q(generator.minpoly()).monic(),
            refined: Mutex::new(generator.clone()),
            generator,
        })
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn generator(&self) -> &AlgebraicNumber {
        &self.generator
    }

    /// Box around the generator narrower than `eps`.
    pub fn generator_box(&self, eps: &Rat) -> CInterval {
        let mut g = self.refined.lock().unwrap_or_else(|e| e.into_inner());
        if &g.enclosure().width() >= eps {
            *g = g.refined(eps);
        }
        g.enclosure()
    }
}

/// Element of `Q` (no field) or of a [`NumberField`], stored as a reduced
/// polynomial in the generator.
#[derive(Clone)]
pub struct FieldElem {
    field: Option<Arc<NumberField>>,
    poly: QPoly,
}

pub type FieldRef = Option<Arc<NumberField>>;

fn same_field(a: &FieldRef, b: &FieldRef) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => Arc::ptr_eq(x, y),
        (None, None) => true,
        _ => false,
    }
}

impl FieldElem {
    pub fn rational(r: Rat) -> Self {
        FieldElem {
            field: None,
            poly: QPoly::constant(r),
        }
    }

    pub fn from_poly(field: &FieldRef, poly: QPoly) -> Self {
        match field {
            None => {
                assert!(poly.deg() == 0, "non-constant element without a field");
                FieldElem { field: None, poly }
            }
            Some(k) => {
                let poly = if poly.deg() >= k.degree() {
                    poly.rem(&k.modulus)
                } else {
                    poly
                };
                FieldElem {
                    field: Some(k.clone()),
                    poly,
                }
            }
        }
    }

    pub fn generator(field: &Arc<NumberField>) -> Self {
        FieldElem {
            field: Some(field.clone()),
            poly: QPoly::var(),
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn to_rat(&self) -> Option<Rat> {
        (self.poly.deg() == 0).then(|| self.poly.coeff(0))
    }

    fn join(&self, rhs: &Self) -> FieldRef {
        match (&self.field, &rhs.field) {
            (Some(a), Some(b)) => {
                assert!(Arc::ptr_eq(a, b), "elements from different number fields");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    /// Enclosure of the complex value, shrinking with `round`.
    pub fn enclosure(&self, round: u32) -> CInterval {
        match (&self.field, self.to_rat()) {
            (_, Some(r)) => CInterval::from_rat(&r),
            (Some(k), None) => {
                let b = k.generator_box(&pow2_inv(8 + 8 * round));
                eval_qpoly(&self.poly, &b, 32 + 16 * round)
            }
            (None, None) => unreachable!(),
        }
    }

    /// The exact complex value.
    pub fn to_algebraic(&self) -> AlgebraicNumber {
        if let Some(r) = self.to_rat() {
            return AlgebraicNumber::from_rat(r);
        }
        let k = self.field.as_ref().unwrap();
        if self.poly == QPoly::var() {
            return k.generator.clone();
        }
        // minimal polynomial divides prod_i (z - a(theta_i))
        let a = self.poly.clone();
        let norm = norm_polynomial(&k.modulus, k.degree(), |z0| {
            QPoly::constant(z0.clone()).sub(&a)
        });
        let factors = zfactor(&q_to_z(&norm)).into_iter().map(|(q, _)| q).collect();
        select_root(factors, |round| self.enclosure(round))
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        if self.poly.deg() == 0 && other.poly.deg() == 0 {
            return self.poly == other.poly;
        }
        same_field(&self.field, &other.field) && self.poly == other.poly
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rat() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{:?} in {:?}", self.poly, self.field.as_ref().unwrap()),
        }
    }
}

impl Field for FieldElem {
    fn zero_elem() -> Self {
        FieldElem::rational(Rat::zero())
    }
    fn one_elem() -> Self {
        FieldElem::rational(Rat::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.poly.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let field = self.join(rhs);
        FieldElem {
            field,
            poly: self.poly.add(&rhs.poly),
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        let field = self.join(rhs);
        FieldElem {
            field,
            poly: self.poly.sub(&rhs.poly),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        if let Some(r) = rhs.to_rat() {
            return FieldElem {
                field: self.join(rhs),
                poly: self.poly.scale(&r),
            };
        }
        if let Some(r) = self.to_rat() {
            return FieldElem {
                field: self.join(rhs),
                poly: rhs.poly.scale(&r),
            };
        }
        let field = self.join(rhs);
        let p = self.poly.mul(&rhs.poly);
        FieldElem::from_poly(&field, p)
    }
    fn negated(&self) -> Self {
        FieldElem {
            field: self.field.clone(),
            poly: self.poly.neg(),
        }
    }
    fn recip(&self) -> Self {
        assert!(!self.is_zero_elem(), "reciprocal of zero");
        match (&self.field, self.to_rat()) {
            (_, Some(r)) => FieldElem {
                field: self.field.clone(),
                poly: QPoly::constant(Field::recip(&r)),
            },
            (Some(k), None) => {
                let (g, s) = self.poly.gcd_cofactor(&k.modulus);
                debug_assert!(g.deg() == 0);
                FieldElem::from_poly(&self.field, s)
            }
            (None, None) => unreachable!(),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        FieldElem::rational(r.clone())
    }
}

/// Field homomorphism `from -> to` fixing `Q`, given by the image of the
/// generator of `from`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub from: FieldRef,
    pub to: FieldRef,
    image: Option<QPoly>,
}

impl Embedding {
    pub fn identity(field: &FieldRef) -> Self {
        Embedding {
            from: field.clone(),
            to: field.clone(),
            image: None,
        }
    }

    pub fn apply(&self, a: &FieldElem) -> FieldElem {
        if let Some(r) = a.to_rat() {
            return FieldElem::rational(r);
        }
        assert!(same_field(&a.field, &self.from), "element outside the embedded field");
        match &self.image {
            None => a.clone(),
            Some(img) => {
                let to = self.to.as_ref().unwrap();
                let mut acc = QPoly::zero();
                for c in a.poly.coeffs().iter().rev() {
                    acc = acc.mul(img).rem(&to.modulus).add(&QPoly::constant(c.clone()));
                }
                FieldElem::from_poly(&self.to, acc)
            }
        }
    }

    pub fn apply_poly(&self, p: &Poly<FieldElem>) -> Poly<FieldElem> {
        p.map(|c| self.apply(c))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Embedding) -> Embedding {
        match (&self.image, &next.image) {
            (_, None) => Embedding {
                from: self.from.clone(),
                to: next.to.clone(),
                image: self.image.clone(),
            },
            (None, Some(_)) if self.from.is_none() => Embedding {
                from: None,
                to: next.to.clone(),
                image: None,
            },
            (None, Some(img)) => Embedding {
                from: self.from.clone(),
                to: next.to.clone(),
                image: Some(img.clone()),
            },
            (Some(img), Some(_)) => {
                let mid = FieldElem::from_poly(&self.to, img.clone());
                Embedding {
                    from: self.from.clone(),
                    to: next.to.clone(),
                    image: Some(next.apply(&mid).poly),
                }
            }
        }
    }
}

/// One root of a polynomial over `K`, living in an extension `L` of `K`.
#[derive(Clone, Debug)]
pub struct FieldRoot {
    /// Embedding of `K` into `L`.
    pub embedding: Embedding,
    /// The root, as an element of `L`.
    pub root: FieldElem,
    pub multiplicity: usize,
}

pub fn common_field<'a>(elems: impl IntoIterator<Item = &'a FieldElem>) -> FieldRef {
    elems
        .into_iter()
        .find_map(|e| if e.to_rat().is_none() { e.field.clone() } else { None })
}

/// All complex roots of a nonzero polynomial whose coefficients share one
/// field, with multiplicities.
pub fn field_roots(e: &Poly<FieldElem>) -> Vec<FieldRoot> {
    let k = common_field(e.coeffs());
    let mut out = Vec::new();
    for (s, mult) in e.squarefree_decomposition() {
        match &k {
            None => {
                let sq = s.map(|c| c.to_rat().unwrap());
                for (q, _) in zfactor(&q_to_z(&sq)) {
                    for beta in roots_of_irreducible(&q) {
                        out.push(rational_root(beta, mult));
                    }
                }
            }
            Some(kf) => roots_over_field(kf, &s, mult, &mut out),
        }
    }
    out
}

/// Like [`field_roots`], with embeddings starting at `field`, which must
/// contain every coefficient of `e`.
pub fn field_roots_over(field: &FieldRef, e: &Poly<FieldElem>) -> Vec<FieldRoot> {
    let Some(kf) = field else {
        return field_roots(e);
    };
    assert!(
        e.coeffs().iter().all(|c| c.to_rat().is_some() || same_field(&c.field, field)),
        "coefficient outside the base field"
    );
    let mut out = Vec::new();
    for (s, mult) in e.squarefree_decomposition() {
        roots_over_field(kf, &s, mult, &mut out);
    }
    out
}

fn rational_root(beta: AlgebraicNumber, mult: usize) -> FieldRoot {
    match beta.to_rat() {
        Some(r) => FieldRoot {
            embedding: Embedding::identity(&None),
            root: FieldElem::rational(r),
            multiplicity: mult,
        },
        None => {
            let l = NumberField::new(beta);
            FieldRoot {
                embedding: Embedding {
                    from: None,
                    to: Some(l.clone()),
                    image: None,
                },
                root: FieldElem::generator(&l),
                multiplicity: mult,
            }
        }
    }
}

/// `S(t, z0 - k t) mod m(t)`, where `S(t, z)` is `s` with the generator
/// replaced by `t`.
fn shifted_specialization(kf: &NumberField, s: &Poly<FieldElem>, k: &Rat, z0: &Rat) -> QPoly {
    let lin = QPoly::new(vec![z0.clone(), -k.clone()]);
    let mut acc = QPoly::zero();
    for c in s.coeffs().iter().rev() {
        acc = acc.mul(&lin).rem(&kf.modulus).add(&c.poly);
    }
    acc
}

fn shift_sequence() -> impl Iterator<Item = Rat> {
    (0i64..).map(|j| Rat::from_integer(BigInt::from(if j % 2 == 0 { -(j / 2) } else { j / 2 + 1 })))
}

fn roots_over_field(kf: &Arc<NumberField>, s: &Poly<FieldElem>, mult: usize, out: &mut Vec<FieldRoot>) {
    let kref = Some(kf.clone());
    let s = s.monic();
    if s.deg() == 1 {
        out.push(FieldRoot {
            embedding: Embedding::identity(&kref),
            root: s.coeff(0).negated(),
            multiplicity: mult,
        });
        return;
    }
    let n = kf.degree() * s.deg();
    // norm of s(z - k theta) must be squarefree
    let (shift, norm) = shift_sequence()
        .map(|sh| {
            let norm = norm_polynomial(&kf.modulus, n, |z0| shifted_specialization(kf, &s, &sh, z0));
            (sh, norm)
        })
        .find(|(_, norm)| norm.gcd(&norm.derivative()).deg() == 0)
        .unwrap();
    let theta = FieldElem::generator(kf);
    let shift_e = FieldElem::rational(shift.clone());
    // z + k theta
    let lin = Poly::new(vec![shift_e.times(&theta), FieldElem::one_elem()]);
    for (q, _) in zfactor(&q_to_z(&norm)) {
        let qk: Poly<FieldElem> = z_to_q(&q).map(|c| FieldElem::rational(c.clone())).compose(&lin);
        let sq = s.gcd(&qk);
        let d = sq.deg();
        if d == 0 {
            continue;
        }
        if d == 1 {
            out.push(FieldRoot {
                embedding: Embedding::identity(&kref),
                root: sq.coeff(0).negated(),
                multiplicity: mult,
            });
            continue;
        }
        let betas = roots_of_irreducible(&q);
        // theta as a polynomial in beta: gcd over Q(beta) of m(t) and S(t, beta - k t)
        let l0 = NumberField::new(betas[0].clone());
        let theta_img = theta_in_extension(kf, &s, &shift, &l0);
        let mut cands: Vec<(Arc<NumberField>, FieldElem)> = betas
            .into_iter()
            .map(|b| {
                let l = NumberField::new(b);
                let img = FieldElem::from_poly(&Some(l.clone()), theta_img.clone());
                (l, img)
            })
            .collect();
        let mut round = 0;
        while cands.len() > d {
            let tb = theta.enclosure(round);
            cands.retain(|(_, img)| img.enclosure(round).intersects(&tb));
            round += 1;
        }
        assert_eq!(cands.len(), d, "embedding selection lost a root");
        for (l, img) in cands {
            let lref = Some(l.clone());
            let beta = FieldElem::generator(&l);
            let root = beta.minus(&FieldElem::rational(shift.clone()).times(&img));
            out.push(FieldRoot {
                embedding: Embedding {
                    from: kref.clone(),
                    to: lref,
                    image: Some(img.poly.clone()),
                },
                root,
                multiplicity: mult,
            });
        }
    }
}

fn theta_in_extension(kf: &NumberField, s: &Poly<FieldElem>, shift: &Rat, l: &Arc<NumberField>) -> QPoly {
    let lift = |p: &QPoly| -> Poly<FieldElem> { p.map(|c| FieldElem::rational(c.clone())) };
    let m = lift(&kf.modulus);
    // beta - k t as a polynomial in t over L
    let lin = Poly::new(vec![
        FieldElem::generator(l),
        FieldElem::rational(-shift.clone()),
    ]);
    let mut acc: Poly<FieldElem> = Poly::zero();
    for c in s.coeffs().iter().rev() {
        acc = acc.mul(&lin).add(&lift(&c.poly));
    }
    let g = m.gcd(&acc);
    assert_eq!(g.deg(), 1, "primitive element construction failed");
    g.coeff(0).negated().poly().clone()
}

/// Extends `field` so that it contains `a`; returns the embedding of the old
/// field and `a` as an element of the new one.
pub fn adjoin(field: &FieldRef, a: &AlgebraicNumber) -> (Embedding, FieldElem) {
    if let Some(r) = a.to_rat() {
        return (Embedding::identity(field), FieldElem::rational(r));
    }
    if let Some(k) = field {
        if k.generator.same_root(a) {
            return (Embedding::identity(field), FieldElem::generator(k));
        }
    }
    let m: Poly<FieldElem> = z_to_q(a.minpoly()).map(|c| FieldElem::rational(c.clone()));
    let roots = match field {
        None => field_roots(&m),
        Some(k) => {
            let mut out = Vec::new();
            roots_over_field(k, &m, 1, &mut out);
            out
        }
    };
    for r in roots {
        if r.root.to_algebraic().same_root(a) {
            return (r.embedding, r.root);
        }
    }
    unreachable!("number not found among the roots of its minimal polynomial")
}

/// Builds one field containing all the given numbers.
pub fn common_extension(nums: &[AlgebraicNumber]) -> (FieldRef, Vec<FieldElem>) {
    let mut field: FieldRef = None;
    let mut elems: Vec<FieldElem> = Vec::new();
    for a in nums {
        let (emb, e) = adjoin(&field, a);
        elems = elems.iter().map(|x| emb.apply(x)).collect();
        elems.push(e);
        field = emb.to.clone();
    }
    (field, elems)
}

/// Distinct complex roots of `sum_k coeffs[k] z^k` with multiplicities,
/// sorted by real part then imaginary part.
pub fn roots_with_multiplicity(coeffs: &[AlgebraicNumber]) -> Result<Vec<(AlgebraicNumber, usize)>> {
    let (_, elems) = common_extension(coeffs);
    let p = Poly::new(elems);
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out: Vec<(AlgebraicNumber, usize)> = field_roots(&p)
        .into_iter()
        .map(|r| (r.root.to_algebraic(), r.multiplicity))
        .collect();
    out.sort_by_cached_key(|(a, _)| a.sort_key());
    Ok(out)
}
