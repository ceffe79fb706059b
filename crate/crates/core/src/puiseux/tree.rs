//! The Newton–Puiseux root tree of one or two polynomials.
//!
//! The tree is expanded for the squarefree part `G` of the product of the
//! tracked polynomials. A node holds a prefix `phi_N` together with
//! `G(X + phi_N, Y)` and every tracked `H(X + phi_N, Y)`, so orders along
//! arcs with that prefix and multiplicities are read off its dots.

use num_traits::{ToPrimitive, Zero};

use super::polygon::{ord_on_monomial_arc, NewtonPolygon, Order, Slope};
use super::series::{GenericArc, TruncatedPuiseux};
use crate::error::{Error, Result};
use crate::exactnum::field::{field_roots_over, Embedding};
use crate::exactnum::{AlgebraicNumber, Field, FieldElem, Poly, Rat};
use crate::polyring::{squarefree_part, substitute_arc, BiPoly};

/// One distinct Newton–Puiseux root, truncated at its contact order.
#[derive(Clone, Debug)]
pub struct RootBranch {
    pub truncation: TruncatedPuiseux,
    pub contact_order: Rat,
    pub mult_f: usize,
    pub mult_g: usize,
    pub is_real: bool,
    /// Node ids from the root to the deepest node on the branch.
    pub(crate) path: Vec<usize>,
}

/// A generic arc together with the generic orders of the tracked
/// polynomials along it.
#[derive(Clone, Debug)]
pub struct ApproxArc {
    pub arc: GenericArc,
    pub orders: Vec<Rat>,
}

struct Node {
    prefix: TruncatedPuiseux,
    e: Rat,
    weight: usize,
    path: Vec<usize>,
    g: BiPoly<FieldElem>,
    hs: Vec<BiPoly<FieldElem>>,
    /// Exit slopes of everything leaving this node; `None` when the prefix
    /// itself is a root.
    exits: Vec<Option<Rat>>,
}

struct LeafExit {
    s: Rat,
    emb: Embedding,
    c: FieldElem,
    alg: AlgebraicNumber,
}

struct Leaf {
    node: usize,
    exit: Option<LeafExit>,
}

pub struct RootTree {
    nodes: Vec<Node>,
    branches: Vec<RootBranch>,
}

fn weighted_min(h: &BiPoly<FieldElem>, rho: &Rat) -> Rat {
    h.terms()
        .map(|(m, _)| rho * Rat::from_integer(m.x.into()) + &m.y)
        .min()
        .expect("zero polynomial")
}

/// Initial form of `h` for the weight `i rho + q`, as a polynomial in `z`.
fn weighted_initial(h: &BiPoly<FieldElem>, rho: &Rat) -> Poly<FieldElem> {
    let w = weighted_min(h, rho);
    let mut coeffs = vec![FieldElem::zero_elem(); h.degree_x() as usize + 1];
    for (m, c) in h.terms() {
        if rho * Rat::from_integer(m.x.into()) + &m.y == w {
            coeffs[m.x as usize] = c.clone();
        }
    }
    Poly::new(coeffs)
}

fn root_multiplicity(p: &Poly<FieldElem>, c: &FieldElem) -> usize {
    let lin = Poly::new(vec![c.negated(), FieldElem::one_elem()]);
    let mut p = p.clone();
    let mut k = 0;
    loop {
        let (q, r) = p.divrem(&lin);
        if !r.is_zero() {
            return k;
        }
        k += 1;
        p = q;
    }
}

fn x_axis_order(h: &BiPoly<FieldElem>) -> Order {
    h.terms()
        .filter(|(m, _)| m.x == 0)
        .map(|(m, _)| m.y.clone())
        .min()
        .map_or(Order::Infinite, Order::Finite)
}

fn ord_diff(a: &Option<Rat>, b: &Option<Rat>) -> Rat {
    match (a, b) {
        (Some(s), None) | (None, Some(s)) => s.clone(),
        (Some(s), Some(t)) => s.min(t).clone(),
        (None, None) => unreachable!("two roots equal to the same prefix"),
    }
}

fn truncation_key(t: &TruncatedPuiseux) -> Vec<(Rat, (Rat, Rat))> {
    t.terms().iter().map(|(e, c)| (e.clone(), c.sort_key())).collect()
}

impl RootTree {
    /// Builds the tree for one polynomial `[f]` or a pair `[f, g]`. Every
    /// polynomial must be x-regular and vanish at the origin.
    pub fn new(polys: &[BiPoly]) -> Result<Self> {
        assert!(!polys.is_empty() && polys.len() <= 2, "track one or two polynomials");
        let mut product = BiPoly::one();
        for p in polys {
            if p.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            match p.x_regular_order() {
                None => return Err(Error::NotRegular(p.to_string())),
                Some(0) => return Err(Error::NotVanishingAtOrigin(p.to_string())),
                Some(_) => {}
            }
            product = product.mul(p);
        }
        let g = squarefree_part(&product);
        let m = g.x_regular_order().expect("factor of a regular polynomial") as usize;
        let root = Node {
            prefix: TruncatedPuiseux::zero(),
            e: Rat::zero(),
            weight: m,
            path: vec![0],
            g: g.to_field(),
            hs: polys.iter().map(BiPoly::to_field).collect(),
            exits: Vec::new(),
        };
        let mut tree = RootTree {
            nodes: vec![root],
            branches: Vec::new(),
        };
        let mut leaves = Vec::new();
        let mut next = 0;
        while next < tree.nodes.len() {
            leaves.extend(tree.expand(next));
            next += 1;
        }
        tree.branches = leaves.iter().map(|l| tree.finish(l, &leaves)).collect();
        tree.branches
            .sort_by_cached_key(|b| truncation_key(&b.truncation));
        Ok(tree)
    }

    pub fn branches(&self) -> &[RootBranch] {
        &self.branches
    }

    pub fn into_branches(self) -> Vec<RootBranch> {
        self.branches
    }

    fn expand(&mut self, n: usize) -> Vec<Leaf> {
        let node = &self.nodes[n];
        let poly = NewtonPolygon::of(&node.g);
        let i0 = poly.dots.iter().map(|d| d.0).min().expect("empty polygon");
        let mut leaves = Vec::new();
        let mut exits = Vec::new();
        let mut children = Vec::new();
        if i0 >= 1 {
            assert_eq!(i0, 1, "squarefree polynomial with a repeated root");
            leaves.push(Leaf { node: n, exit: None });
            exits.push(None);
        }
        let h0 = match poly.ord_along() {
            Order::Finite(h) => Some(h),
            Order::Infinite => None,
        };
        let mut count = i0 as usize;
        for (k, edge) in poly.edges.iter().enumerate() {
            let Slope::Finite(s) = &edge.slope else { continue };
            if s <= &node.e {
                break;
            }
            count = edge.right.0 as usize;
            let highest = k == 0 && i0 == 0;
            let mut roots: Vec<_> = field_roots_over(node.prefix.field(), &edge.reduced_assoc())
                .into_iter()
                .map(|r| {
                    let alg = r.root.to_algebraic();
                    (alg.sort_key(), alg, r)
                })
                .collect();
            roots.sort_by(|a, b| a.0.cmp(&b.0));
            for (_, alg, r) in roots {
                exits.push(Some(s.clone()));
                if r.multiplicity == 1 {
                    if let (true, Some(h0)) = (highest, &h0) {
                        let ord = ord_on_monomial_arc(&node.g, &r.root, s, |a| r.embedding.apply(a));
                        assert!(ord > Order::Finite(h0.clone()), "sliding did not raise the order");
                    }
                    leaves.push(Leaf {
                        node: n,
                        exit: Some(LeafExit {
                            s: s.clone(),
                            emb: r.embedding,
                            c: r.root,
                            alg,
                        }),
                    });
                    continue;
                }
                let shift = [(s.clone(), r.root.clone())];
                let emb = &r.embedding;
                let g = node.g.map(|c| emb.apply(c)).shift_x(&shift);
                if let (true, Some(h0)) = (highest, &h0) {
                    assert!(x_axis_order(&g) > Order::Finite(h0.clone()), "sliding did not raise the order");
                }
                let hs = node.hs.iter().map(|h| h.map(|c| emb.apply(c)).shift_x(&shift)).collect();
                let mut path = node.path.clone();
                path.push(usize::MAX);
                children.push(Node {
                    prefix: node.prefix.extended(emb, s.clone(), r.root, alg),
                    e: s.clone(),
                    weight: r.multiplicity,
                    path,
                    g,
                    hs,
                    exits: Vec::new(),
                });
            }
        }
        assert_eq!(count, node.weight, "root count does not match the node weight");
        self.nodes[n].exits = exits;
        for mut child in children {
            let id = self.nodes.len();
            *child.path.last_mut().unwrap() = id;
            self.nodes.push(child);
        }
        leaves
    }

    /// Exit slope of a leaf at the given depth of its path.
    fn exit_at(&self, leaf: &Leaf, depth: usize) -> Option<Rat> {
        let path = &self.nodes[leaf.node].path;
        if depth + 1 < path.len() {
            Some(self.nodes[path[depth + 1]].e.clone())
        } else {
            leaf.exit.as_ref().map(|x| x.s.clone())
        }
    }

    fn divergence(&self, a: &Leaf, b: &Leaf) -> Rat {
        let pa = &self.nodes[a.node].path;
        let pb = &self.nodes[b.node].path;
        let common = pa.iter().zip(pb).take_while(|(x, y)| x == y).count();
        ord_diff(&self.exit_at(a, common - 1), &self.exit_at(b, common - 1))
    }

    fn finish(&self, leaf: &Leaf, all: &[Leaf]) -> RootBranch {
        let node = &self.nodes[leaf.node];
        let rho = all
            .iter()
            .filter(|o| !std::ptr::eq(*o, leaf))
            .map(|o| self.divergence(leaf, o))
            .max()
            // a lone root: its separation exponent, or 1 when it is the empty prefix
            .unwrap_or_else(|| leaf.exit.as_ref().map_or(Rat::from_integer(1.into()), |x| x.s.clone()));
        let tail = leaf.exit.as_ref().filter(|x| x.s == rho);
        let truncation = match tail {
            Some(x) => node.prefix.extended(&x.emb, x.s.clone(), x.c.clone(), x.alg.clone()),
            None => node.prefix.clone(),
        };
        let mults: Vec<usize> = node
            .hs
            .iter()
            .map(|h| match tail {
                Some(x) => {
                    let ini = x.emb.apply_poly(&weighted_initial(h, &rho));
                    root_multiplicity(&ini, &x.c)
                }
                None => {
                    let ini = weighted_initial(h, &rho);
                    ini.coeffs().iter().position(|c| !c.is_zero_elem()).unwrap()
                }
            })
            .collect();
        RootBranch {
            is_real: truncation.is_real(),
            truncation,
            contact_order: rho,
            mult_f: mults[0],
            mult_g: mults.get(1).copied().unwrap_or(0),
            path: node.path.clone(),
        }
    }

    fn approx_at(&self, node: usize, rho: Rat) -> ApproxArc {
        let n = &self.nodes[node];
        ApproxArc {
            arc: GenericArc::new(n.prefix.clone(), rho.clone()).expect("real prefix below the tail"),
            orders: n.hs.iter().map(|h| weighted_min(h, &rho)).collect(),
        }
    }

    /// Real approximation of a branch of this tree, or `None` for a real branch.
    pub fn real_approximation(&self, b: &RootBranch) -> Option<ApproxArc> {
        let j = b.truncation.terms().iter().position(|(_, c)| !c.is_real())?;
        let alpha = b.truncation.terms()[j].0.clone();
        Some(self.approx_at(b.path[j], alpha))
    }

    /// Approximations `(phi, ord(phi1 - phi2))` for every pair of distinct
    /// roots whose common head `phi` is real, without repetitions.
    pub fn pair_approximations(&self) -> Vec<ApproxArc> {
        let mut out = Vec::new();
        for (id, n) in self.nodes.iter().enumerate() {
            if !n.prefix.is_real() {
                continue;
            }
            let mut rhos: Vec<Rat> = Vec::new();
            for (i, a) in n.exits.iter().enumerate() {
                for b in &n.exits[i + 1..] {
                    let r = ord_diff(a, b);
                    if !rhos.contains(&r) {
                        rhos.push(r);
                    }
                }
            }
            rhos.sort();
            out.extend(rhos.into_iter().map(|r| self.approx_at(id, r)));
        }
        out
    }
}

/// Truncated roots of `f` with contact orders and multiplicities.
pub fn root_tree(f: &BiPoly) -> Result<Vec<RootBranch>> {
    Ok(RootTree::new(std::slice::from_ref(f))?.into_branches())
}

/// Root tree of `f g`, with `mult_f` and `mult_g` filled in on every branch.
pub fn joint_root_tree(f: &BiPoly, g: &BiPoly) -> Result<RootTree> {
    RootTree::new(&[f.clone(), g.clone()])
}

/// Multiplicity of a branch as a root of `f`, from the dots of
/// `f(X + truncation, Y)` on the line of generic weight.
pub fn multiplicity(f: &BiPoly, b: &RootBranch) -> Result<usize> {
    let rho = &b.contact_order;
    let below = NewtonPolygon::of(&substitute_arc(f, &b.truncation.below(rho)));
    if below.dots.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let w = below.weighted_min(rho);
    let at = substitute_arc(f, &b.truncation);
    let i = at
        .terms()
        .filter(|(m, _)| rho * Rat::from_integer(m.x.into()) + &m.y == w)
        .map(|(m, _)| m.x)
        .min()
        .expect("initial form survives the substitution");
    Ok(i.to_usize().unwrap())
}

/// `prefix + c y^alpha` where `alpha` is the first exponent with a non-real
/// coefficient; `None` for a real branch.
pub fn real_approximation(b: &RootBranch) -> Option<GenericArc> {
    let t = &b.truncation;
    let j = t.terms().iter().position(|(_, c)| !c.is_real())?;
    Some(GenericArc::new(t.head(j), t.terms()[j].0.clone()).expect("real head"))
}

/// The `rho`-approximation of `a` with `rho = ord(a - b)`; `None` when the
/// common head below `rho` is not real.
pub fn pair_approximation(a: &TruncatedPuiseux, b: &TruncatedPuiseux) -> Result<Option<GenericArc>> {
    let rho = a.divergence_order(b).ok_or(Error::IdenticalArcs)?;
    let head = a.below(&rho);
    if !head.is_real() {
        return Ok(None);
    }
    GenericArc::new(head, rho).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};
    use crate::puiseux::polygon::ord_generic;

    fn p(t: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    fn ex21() -> BiPoly {
        p(&[(1, 3, 0), (-1, 0, 5), (1, 0, 6)])
    }

    fn series(terms: &[(Rat, i64)]) -> TruncatedPuiseux {
        TruncatedPuiseux::from_rational(terms.iter().map(|(e, c)| (e.clone(), rat(*c))).collect()).unwrap()
    }

    #[test]
    fn three_conjugate_branches() {
        let bs = root_tree(&ex21()).unwrap();
        assert_eq!(bs.len(), 3);
        assert_eq!(bs.iter().filter(|b| b.is_real).count(), 1);
        for b in &bs {
            assert_eq!(b.contact_order, ratio(5, 3));
            assert_eq!(b.mult_f, 1);
            assert_eq!(b.truncation.len(), 1);
            let c = &b.truncation.terms()[0].1;
            assert_eq!(c.mul(c).mul(c).to_rat(), Some(rat(1)));
        }
        let real = bs.iter().find(|b| b.is_real).unwrap();
        assert_eq!(real.truncation, series(&[(ratio(5, 3), 1)]));
    }

    #[test]
    fn close_real_branches() {
        let f = p(&[(1, 1, 0), (-1, 0, 2)]).mul(&p(&[(1, 1, 0), (-1, 0, 2), (-1, 0, 3)]));
        let bs = root_tree(&f).unwrap();
        assert_eq!(bs.len(), 2);
        for b in &bs {
            assert!(b.is_real);
            assert_eq!(b.contact_order, rat(3));
        }
        assert_eq!(bs[0].truncation, series(&[(rat(2), 1)]));
        assert_eq!(bs[1].truncation, series(&[(rat(2), 1), (rat(3), 1)]));
    }

    #[test]
    fn imaginary_pair() {
        let bs = root_tree(&p(&[(1, 2, 0), (1, 0, 2)])).unwrap();
        assert_eq!(bs.len(), 2);
        for b in &bs {
            assert!(!b.is_real);
            assert_eq!(b.contact_order, rat(1));
            let c = &b.truncation.terms()[0].1;
            assert_eq!(c.mul(c).to_rat(), Some(rat(-1)));
        }
        assert_eq!(bs[0].truncation.terms()[0].1, bs[1].truncation.terms()[0].1.conjugate());
    }

    #[test]
    fn multiplicities() {
        let f = p(&[(1, 1, 0), (-1, 0, 2)]).pow(3).mul(&p(&[(1, 1, 0), (1, 0, 1)]));
        let bs = root_tree(&f).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(bs.iter().map(|b| b.mult_f).sum::<usize>(), 4);
        // the branch of y^2 is truncated to the empty series at contact order 1
        let b = bs.iter().find(|b| b.truncation.is_empty()).unwrap();
        assert_eq!(b.mult_f, 3);
        assert_eq!(multiplicity(&f, b).unwrap(), 3);
        let f = p(&[(1, 2, 0), (-1, 0, 3)]);
        let bs = root_tree(&f).unwrap();
        let b = bs.iter().find(|b| b.truncation.terms()[0].1.to_rat() == Some(rat(1))).unwrap();
        assert_eq!(b.truncation, series(&[(ratio(3, 2), 1)]));
        assert_eq!(multiplicity(&f, b).unwrap(), 1);
        let bs = root_tree(&p(&[(1, 2, 0)])).unwrap();
        assert_eq!(bs.len(), 1);
        assert!(bs[0].truncation.is_empty());
        assert_eq!(bs[0].mult_f, 2);
        assert_eq!(multiplicity(&p(&[(1, 2, 0)]), &bs[0]).unwrap(), 2);
    }

    #[test]
    fn double_root_node() {
        // (x - y)^2 (x - y - y^2) has a node of weight 3 at prefix y
        let a = p(&[(1, 1, 0), (-1, 0, 1)]);
        let b = p(&[(1, 1, 0), (-1, 0, 1), (-1, 0, 2)]);
        let f = a.pow(2).mul(&b);
        let bs = root_tree(&f).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].truncation, series(&[(rat(1), 1)]));
        assert_eq!(bs[0].mult_f, 2);
        assert_eq!(bs[1].truncation, series(&[(rat(1), 1), (rat(2), 1)]));
        assert_eq!(bs[1].mult_f, 1);
        for b in &bs {
            assert_eq!(multiplicity(&f, b).unwrap(), b.mult_f);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(root_tree(&p(&[(1, 0, 1)])), Err(Error::NotRegular(_))));
        assert!(matches!(root_tree(&p(&[(1, 0, 0), (1, 1, 0)])), Err(Error::NotVanishingAtOrigin(_))));
    }

    #[test]
    fn real_approximations() {
        let bs = root_tree(&p(&[(1, 2, 0), (1, 0, 2)])).unwrap();
        let arc = real_approximation(&bs[0]).unwrap();
        assert!(arc.prefix.is_empty());
        assert_eq!(arc.tail_exponent, rat(1));
        let bs = root_tree(&ex21()).unwrap();
        for b in &bs {
            match real_approximation(b) {
                None => assert!(b.is_real),
                Some(a) => {
                    assert!(a.prefix.is_empty());
                    assert_eq!(a.tail_exponent, ratio(5, 3));
                }
            }
        }
        // (x - y^2)^2 + y^6 has roots y^2 +- i y^3
        let f = p(&[(1, 1, 0), (-1, 0, 2)]).pow(2).add(&p(&[(1, 0, 6)]));
        let tree = RootTree::new(&[f.clone()]).unwrap();
        for b in tree.branches() {
            let arc = real_approximation(b).unwrap();
            assert_eq!(arc.prefix, series(&[(rat(2), 1)]));
            assert_eq!(arc.tail_exponent, rat(3));
            let fast = tree.real_approximation(b).unwrap();
            assert_eq!(fast.arc, arc);
            assert_eq!(fast.orders[0], ord_generic(&f, &arc).unwrap());
            assert_eq!(fast.orders[0], rat(6));
        }
    }

    #[test]
    fn pair_examples() {
        let a = pair_approximation(&series(&[(rat(2), 1)]), &series(&[(rat(2), 1), (rat(3), 1)]))
            .unwrap()
            .unwrap();
        assert_eq!(a.prefix, series(&[(rat(2), 1)]));
        assert_eq!(a.tail_exponent, rat(3));
        let a = pair_approximation(&series(&[(rat(1), 1)]), &series(&[(rat(1), -1)]))
            .unwrap()
            .unwrap();
        assert!(a.prefix.is_empty());
        assert_eq!(a.tail_exponent, rat(1));
        let a = pair_approximation(&series(&[(ratio(3, 2), 1)]), &series(&[(rat(2), 1)]))
            .unwrap()
            .unwrap();
        assert!(a.prefix.is_empty());
        assert_eq!(a.tail_exponent, ratio(3, 2));
        let s = series(&[(rat(1), 1)]);
        assert_eq!(pair_approximation(&s, &s).unwrap_err(), Error::IdenticalArcs);
    }

    #[test]
    fn tree_pairs_match_branch_pairs() {
        let f = p(&[(1, 2, 0)]);
        let g = p(&[(1, 3, 0), (1, 1, 2)]);
        let tree = joint_root_tree(&f, &g).unwrap();
        let arcs = tree.pair_approximations();
        assert_eq!(arcs.len(), 1);
        assert!(arcs[0].arc.prefix.is_empty());
        assert_eq!(arcs[0].arc.tail_exponent, rat(1));
        assert_eq!(arcs[0].orders, vec![rat(2), rat(3)]);
        let bs = tree.branches();
        let common = bs.iter().find(|b| b.is_real).unwrap();
        assert_eq!((common.mult_f, common.mult_g), (2, 1));
        for (i, a) in bs.iter().enumerate() {
            for b in &bs[i + 1..] {
                if let Some(arc) = pair_approximation(&a.truncation, &b.truncation).unwrap() {
                    assert!(arcs.iter().any(|x| x.arc == arc));
                }
            }
        }
    }
}
