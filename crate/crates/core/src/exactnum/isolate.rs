//! Exact root isolation for squarefree integer polynomials: Sturm sequences
//! on the real line, winding numbers (via Cauchy indices) on rectangles.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::interval::{CInterval, Interval};
use super::poly::{
    cauchy_bound, q_to_z, signed_remainder_sequence, variations_at, variations_at_infinity,
    zderivative, zsign_at, QPoly, ZPoly,
};
use super::Rat;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn sturm_sequence(p: &ZPoly) -> Vec<ZPoly> {
    signed_remainder_sequence(p, &zderivative(p))
}

/// Number of distinct real roots of a squarefree `p`.
pub fn count_real_roots(p: &ZPoly) -> usize {
    let seq = sturm_sequence(p);
    variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true)
}

/// Number of roots in the half-open interval `(a, b]`.
pub fn count_real_roots_in(seq: &[ZPoly], a: &Rat, b: &Rat) -> usize {
    variations_at(seq, a) - variations_at(seq, b)
}

/// Isolating intervals for the real roots of an irreducible polynomial, in
/// increasing order. Degree one gives a point interval; otherwise each open
/// interval `(lo, hi)` has rational (hence non-root) endpoints with opposite
/// signs of `p`.
pub fn isolate_real(p: &ZPoly) -> Vec<Interval> {
    if p.len() == 2 {
        return vec![Interval::point(Rat::new(-p[0].clone(), p[1].clone()))];
    }
    let seq = sturm_sequence(p);
    let r = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-r.clone(), r)];
    while let Some((a, b)) = stack.pop() {
        let n = count_real_roots_in(&seq, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(Interval::new(a, b));
            continue;
        }
        let m = (&a + &b) / rat(2, 1);
        stack.push((a, m.clone()));
        stack.push((m, b));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Halves an isolating interval of an irreducible polynomial of degree >= 2.
pub fn refine_real(p: &ZPoly, iv: &Interval) -> Interval {
    let m = iv.mid();
    let sm = zsign_at(p, &m);
    let sh = zsign_at(p, &iv.hi);
    debug_assert!(sm != 0 && sh != 0);
    if sm == sh {
        Interval::new(iv.lo.clone(), m)
    } else {
        Interval::new(m, iv.hi.clone())
    }
}

fn eval_complex_rat(p: &ZPoly, x: &Rat, y: &Rat) -> (Rat, Rat) {
    let (mut ar, mut ai) = (Rat::zero(), Rat::zero());
    for c in p.iter().rev() {
        let nr = &ar * x - &ai * y + Rat::from_integer(c.clone());
        let ni = &ar * y + &ai * x;
        ar = nr;
        ai = ni;
    }
    (ar, ai)
}

/// `P(z0 + d t)` split into real and imaginary parts as polynomials in `t`.
fn edge_polys(p: &ZPoly, x0: &Rat, dx: &Rat, y0: &Rat, dy: &Rat) -> (QPoly, QPoly) {
    let xt = QPoly::new(vec![x0.clone(), dx.clone()]);
    let yt = QPoly::new(vec![y0.clone(), dy.clone()]);
    let (mut ar, mut ai) = (QPoly::zero(), QPoly::zero());
    for c in p.iter().rev() {
        let nr = ar
            .mul(&xt)
            .sub(&ai.mul(&yt))
            .add(&QPoly::constant(Rat::from_integer(c.clone())));
        let ni = ar.mul(&yt).add(&ai.mul(&xt));
        ar = nr;
        ai = ni;
    }
    (ar, ai)
}

fn has_root_in_unit_interval(g: &QPoly) -> bool {
    if g.deg() == 0 {
        return false;
    }
    let sf = q_to_z(&g.squarefree_part());
    let seq = sturm_sequence(&sf);
    zsign_at(&sf, &Rat::zero()) == 0 || count_real_roots_in(&seq, &Rat::zero(), &Rat::one()) > 0
}

/// Number of roots of `p` inside the closed box, or `None` if a root lies on
/// its boundary.
pub fn count_in_box(p: &ZPoly, re: &Interval, im: &Interval) -> Option<usize> {
    let corners = [
        (re.lo.clone(), im.lo.clone()),
        (re.hi.clone(), im.lo.clone()),
        (re.hi.clone(), im.hi.clone()),
        (re.lo.clone(), im.hi.clone()),
    ];
    let vals: Vec<(Rat, Rat)> = corners
        .iter()
        .map(|(x, y)| eval_complex_rat(p, x, y))
        .collect();
    if vals.iter().any(|(a, b)| a.is_zero() && b.is_zero()) {
        return None;
    }
    // rotate by u = 1 + k i so that Re(u P) is nonzero at every corner
    let k = (0i64..)
        .map(|j| if j % 2 == 0 { -(j / 2) } else { j / 2 + 1 })
        .map(|k| Rat::from_integer(BigInt::from(k)))
        .find(|k| vals.iter().all(|(a, b)| !(a - k * b).is_zero()))
        .unwrap();
    let mut total: i64 = 0;
    for e in 0..4 {
        let (x0, y0) = &corners[e];
        let (x1, y1) = &corners[(e + 1) % 4];
        let (a, b) = edge_polys(p, x0, &(x1 - x0), y0, &(y1 - y0));
        let ka = a.scale(&k);
        let kb = b.scale(&k);
        let a2 = a.sub(&kb);
        let b2 = ka.add(&b);
        if has_root_in_unit_interval(&a2.gcd(&b2)) {
            return None;
        }
        if b2.is_zero() {
            continue;
        }
        let seq = signed_remainder_sequence(&q_to_z(&a2), &q_to_z(&b2));
        let v0 = variations_at(&seq, &Rat::zero()) as i64;
        let v1 = variations_at(&seq, &Rat::one()) as i64;
        total += v0 - v1;
    }
    assert!(total <= 0 && total % 2 == 0, "inconsistent winding count");
    Some((-total / 2) as usize)
}

const SPLITS: [(i64, i64); 11] = [
    (1, 2),
    (7, 16),
    (9, 16),
    (3, 8),
    (5, 8),
    (5, 16),
    (11, 16),
    (13, 32),
    (19, 32),
    (1, 4),
    (3, 4),
];

/// Splits the box along its longer side; returns the two halves and the
/// root count of the first, avoiding split lines through roots.
fn split_box(p: &ZPoly, b: &CInterval) -> (CInterval, CInterval, usize) {
    let horizontal = b.re.width() >= b.im.width();
    for (n, d) in SPLITS {
        let t = rat(n, d);
        let (h1, h2) = if horizontal {
            let m = b.re.at(&t);
            (
                CInterval::new(Interval::new(b.re.lo.clone(), m.clone()), b.im.clone()),
                CInterval::new(Interval::new(m, b.re.hi.clone()), b.im.clone()),
            )
        } else {
            let m = b.im.at(&t);
            (
                CInterval::new(b.re.clone(), Interval::new(b.im.lo.clone(), m.clone())),
                CInterval::new(b.re.clone(), Interval::new(m, b.im.hi.clone())),
            )
        };
        if let Some(c) = count_in_box(p, &h1.re, &h1.im) {
            return (h1, h2, c);
        }
    }
    unreachable!("every split line meets a root")
}

/// Shrinks a box isolating a single non-real root.
pub fn refine_complex(p: &ZPoly, b: &CInterval) -> CInterval {
    let (h1, h2, c) = split_box(p, b);
    if c == 1 {
        h1
    } else {
        h2
    }
}

/// Isolating boxes for the non-real roots of a squarefree polynomial: each
/// root in the upper half-plane followed by its conjugate. Boxes never meet
/// the real axis.
pub fn isolate_nonreal(p: &ZPoly) -> Vec<CInterval> {
    let n = p.len() - 1;
    let nreal = count_real_roots(p);
    let nup = (n - nreal) / 2;
    if nup == 0 {
        return Vec::new();
    }
    let r = cauchy_bound(p);
    let mut delta = r.clone() / rat(2, 1);
    let start = loop {
        let re = Interval::new(-r.clone(), r.clone());
        let im = Interval::new(delta.clone(), r.clone());
        if count_in_box(p, &re, &im) == Some(nup) {
            break CInterval::new(re, im);
        }
        delta /= rat(2, 1);
    };
    let mut out = Vec::new();
    let mut stack = vec![(start, nup)];
    while let Some((b, c)) = stack.pop() {
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push(b);
            continue;
        }
        let (h1, h2, c1) = split_box(p, &b);
        stack.push((h1, c1));
        stack.push((h2, c - c1));
    }
    out.sort_by(|a, b| {
        a.re.lo
            .cmp(&b.re.lo)
            .then_with(|| a.im.lo.cmp(&b.im.lo))
    });
    let mut res = Vec::with_capacity(2 * out.len());
    for b in out {
        let conj = CInterval::new(b.re.clone(), b.im.neg());
        res.push(b);
        res.push(conj);
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn winding_of_identity_on_unit_square() {
        let re = Interval::new(rat(-1, 1), rat(1, 1));
        assert_eq!(count_in_box(&z(&[0, 1]), &re, &re), Some(1));
        assert_eq!(count_in_box(&z(&[1, 0, 1]), &re, &Interval::new(rat(1, 2), rat(2, 1))), Some(1));
        assert_eq!(count_in_box(&z(&[1, 0, 1]), &re, &Interval::new(rat(-2, 1), rat(2, 1))), Some(2));
        assert_eq!(count_in_box(&z(&[1, 0, 1]), &re, &Interval::new(rat(1, 1), rat(2, 1))), None);
    }

    #[test]
    fn isolates_real_roots_of_sqrt2() {
        let iv = isolate_real(&z(&[-2, 0, 1]));
        assert_eq!(iv.len(), 2);
        assert!(iv[0].hi <= rat(-1, 1) || iv[0].lo < rat(-1, 1));
        let mut i = iv[1].clone();
        for _ in 0..20 {
            i = refine_real(&z(&[-2, 0, 1]), &i);
        }
        assert!(i.lo < rat(14143, 10000) && i.hi > rat(14142, 10000));
    }

    #[test]
    fn isolates_cube_roots_of_unity() {
        let p = z(&[1, 1, 1]);
        let boxes = isolate_nonreal(&p);
        assert_eq!(boxes.len(), 2);
        assert!(boxes[0].im.lo.is_positive());
        assert!(boxes[1].im.hi.is_negative());
        let mut b = boxes[0].clone();
        for _ in 0..30 {
            b = refine_complex(&p, &b);
        }
        assert!(b.re.contains(&rat(-1, 2)));
        assert!(b.width() < rat(1, 1000));
    }

    #[test]
    fn degree_five_counts() {
        // x^5 - x - 1: one real root, two conjugate pairs
        let p = z(&[-1, -1, 0, 0, 0, 1]);
        assert_eq!(count_real_roots(&p), 1);
        assert_eq!(isolate_nonreal(&p).len(), 4);
    }
}
