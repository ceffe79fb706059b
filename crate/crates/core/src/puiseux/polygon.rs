//! Newton polygons relative to an arc.

use std::fmt;

use super::series::{GenericArc, TruncatedPuiseux};
use crate::error::{Error, Result};
use crate::exactnum::field::field_roots_over;
use crate::exactnum::{Field, FieldElem, Poly, Rat};
use crate::polyring::{substitute_arc, BiPoly};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slope {
    Finite(Rat),
    Infinite,
}

/// Order of a polynomial along an arc; `Infinite` when the arc is a root.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(Rat),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(r) => write!(f, "{r}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) => write!(f, "{r}"),
            Slope::Infinite => write!(f, "inf"),
        }
    }
}

/// Newton dot `(i, q)`: the term `X^i Y^q` of `f(X + phi(Y), Y)`.
pub type Dot = (u32, Rat);

#[derive(Clone, Debug)]
pub struct Edge<C: Field = FieldElem> {
    pub slope: Slope,
    pub left: Dot,
    pub right: Dot,
    /// `sum c z^i` over the dots on the edge; zero for the vertical edge.
    pub assoc: Poly<C>,
}

impl<C: Field> Edge<C> {
    /// The associated polynomial divided by `z^{i_left}`; its roots are the
    /// nonzero roots of `assoc`.
    pub fn reduced_assoc(&self) -> Poly<C> {
        let k = self.left.0 as usize;
        Poly::new(self.assoc.coeffs().get(k..).unwrap_or(&[]).to_vec())
    }
}

/// Lower-left hull of the support of `f(X + phi(Y), Y)`. Compact edges are
/// listed from the `X = 0` side with strictly decreasing slopes; when `phi`
/// is a root the list starts with the vertical edge.
#[derive(Clone, Debug)]
pub struct NewtonPolygon<C: Field = FieldElem> {
    pub dots: Vec<Dot>,
    pub edges: Vec<Edge<C>>,
}

impl<C: Field> NewtonPolygon<C> {
    /// Polygon of an already substituted polynomial.
    pub fn of(f: &BiPoly<C>) -> Self {
        let dots: Vec<Dot> = f.terms().map(|(m, _)| (m.x, m.y.clone())).collect();
        let mut edges = Vec::new();
        if dots.is_empty() {
            return NewtonPolygon { dots, edges };
        }
        let a = dots.iter().min_by(|p, q| p.0.cmp(&q.0).then(p.1.cmp(&q.1))).unwrap().clone();
        let b = dots.iter().min_by(|p, q| p.1.cmp(&q.1).then(p.0.cmp(&q.0))).unwrap().clone();
        if a.0 > 0 {
            edges.push(Edge {
                slope: Slope::Infinite,
                left: a.clone(),
                right: a.clone(),
                assoc: Poly::zero(),
            });
        }
        let mut cur = a;
        while cur != b {
            // steepest descent from the current vertex, farthest on ties
            let mut best: Option<(Rat, &Dot)> = None;
            for d in dots.iter().filter(|d| d.0 > cur.0 && d.0 <= b.0) {
                let s = (&cur.1 - &d.1) / Rat::from_integer((d.0 - cur.0).into());
                match &best {
                    Some((bs, bd)) if s < *bs || (s == *bs && d.0 < bd.0) => {}
                    _ => best = Some((s, d)),
                }
            }
            let (s, next) = best.expect("hull walk stalled");
            let next = next.clone();
            let level = &cur.1 + &s * Rat::from_integer(cur.0.into());
            let mut coeffs = vec![C::zero_elem(); next.0 as usize + 1];
            for (m, c) in f.terms() {
                if m.x >= cur.0 && m.x <= next.0 && &m.y + &s * Rat::from_integer(m.x.into()) == level {
                    coeffs[m.x as usize] = c.clone();
                }
            }
            edges.push(Edge {
                slope: Slope::Finite(s),
                left: cur.clone(),
                right: next.clone(),
                assoc: Poly::new(coeffs),
            });
            cur = next;
        }
        NewtonPolygon { dots, edges }
    }

    /// Compact edges only.
    pub fn compact_edges(&self) -> impl Iterator<Item = (&Rat, &Edge<C>)> {
        self.edges.iter().filter_map(|e| match &e.slope {
            Slope::Finite(s) => Some((s, e)),
            Slope::Infinite => None,
        })
    }

    pub fn slopes(&self) -> Vec<Rat> {
        self.compact_edges().map(|(s, _)| s.clone()).collect()
    }

    /// `h0` for the lowest dot `(0, h0)`, or infinite.
    pub fn ord_along(&self) -> Order {
        self.dots
            .iter()
            .filter(|d| d.0 == 0)
            .map(|d| d.1.clone())
            .min()
            .map_or(Order::Infinite, Order::Finite)
    }

    /// `min (i rho + q)` over all dots.
    pub fn weighted_min(&self, rho: &Rat) -> Rat {
        self.dots
            .iter()
            .map(|(i, q)| rho * Rat::from_integer((*i).into()) + q)
            .min()
            .expect("empty polygon")
    }

    pub fn is_root(&self) -> bool {
        matches!(self.ord_along(), Order::Infinite)
    }
}

pub fn newton_polygon(f: &BiPoly, phi: &TruncatedPuiseux) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(NewtonPolygon::of(&substitute_arc(f, phi)))
}

pub fn ord_along(f: &BiPoly, phi: &TruncatedPuiseux) -> Result<Order> {
    Ok(newton_polygon(f, phi)?.ord_along())
}

/// Order of `f` along `prefix + c y^rho` for generic `c`, without choosing `c`.
pub fn ord_generic(f: &BiPoly, arc: &GenericArc) -> Result<Rat> {
    Ok(newton_polygon(f, &arc.prefix)?.weighted_min(&arc.tail_exponent))
}

/// Children `phi + c y^{s}` for every nonzero root `c` of the associated
/// polynomial of the highest edge, with multiplicities, sorted by `c`.
pub fn sliding_step(f: &BiPoly, phi: &TruncatedPuiseux) -> Result<Vec<(TruncatedPuiseux, usize)>> {
    let poly = newton_polygon(f, phi)?;
    let Some(edge) = poly.edges.first() else {
        return Err(Error::ZeroPolynomial);
    };
    let Slope::Finite(s) = &edge.slope else {
        return Err(Error::ArcIsRoot);
    };
    let mut out: Vec<(TruncatedPuiseux, usize, (Rat, Rat))> = field_roots_over(phi.field(), &edge.reduced_assoc())
        .into_iter()
        .map(|r| {
            let alg = r.root.to_algebraic();
            let key = alg.sort_key();
            let child = phi.extended(&r.embedding, s.clone(), r.root, alg);
            (child, r.multiplicity, key)
        })
        .collect();
    out.sort_by(|a, b| a.2.cmp(&b.2));
    Ok(out.into_iter().map(|(c, m, _)| (c, m)).collect())
}

/// Order of `F(c Y^s, Y)` for a substituted polynomial `F`, computed term by
/// term; `c` must live in a field containing the coefficients of `F`.
pub fn ord_on_monomial_arc(f: &BiPoly<FieldElem>, c: &FieldElem, s: &Rat, map: impl Fn(&FieldElem) -> FieldElem) -> Order {
    let mut sums: std::collections::BTreeMap<Rat, FieldElem> = std::collections::BTreeMap::new();
    for (m, a) in f.terms() {
        let mut v = map(a);
        for _ in 0..m.x {
            v = v.times(c);
        }
        let e = s * Rat::from_integer(m.x.into()) + &m.y;
        let entry = sums.entry(e).or_insert_with(FieldElem::zero_elem);
        *entry = entry.plus(&v);
    }
    sums.into_iter()
        .find(|(_, v)| !v.is_zero_elem())
        .map_or(Order::Infinite, |(e, _)| Order::Finite(e))
}
