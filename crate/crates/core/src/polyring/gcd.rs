//! Gcd and exact division in `Q[x, y]`, viewing polynomials as elements of
//! `Q[y][x]`.

use num_traits::{ToPrimitive, Zero};

use super::bipoly::{BiPoly, Monomial};
use crate::exactnum::{QPoly, Rat};

type Xy = Vec<QPoly>;

fn to_xy(f: &BiPoly) -> Xy {
    assert!(f.has_integer_exponents(), "integer exponents required");
    let mut v = vec![QPoly::zero(); f.degree_x() as usize + 1];
    if f.is_zero() {
        return Vec::new();
    }
    for (m, c) in f.terms() {
        let e = m.y.to_integer().to_usize().unwrap();
        v[m.x as usize] = v[m.x as usize].add(&QPoly::monomial(c.clone(), e));
    }
    trim(v)
}

fn from_xy(v: &Xy) -> BiPoly {
    let mut f = BiPoly::zero();
    for (i, p) in v.iter().enumerate() {
        for (j, c) in p.coeffs().iter().enumerate() {
            f.add_term(Monomial::new(i as u32, Rat::from_integer(j.into())), c.clone());
        }
    }
    f
}

fn trim(mut v: Xy) -> Xy {
    while v.last().is_some_and(|p| p.is_zero()) {
        v.pop();
    }
    v
}

fn content(v: &Xy) -> QPoly {
    v.iter().fold(QPoly::zero(), |g, p| g.gcd(p))
}

fn div_coeffs(v: &Xy, d: &QPoly) -> Xy {
    v.iter()
        .map(|p| p.div_exact(d).expect("inexact coefficient division"))
        .collect()
}

fn mul_coeffs(v: &Xy, d: &QPoly) -> Xy {
    trim(v.iter().map(|p| p.mul(d)).collect())
}

fn primitive(v: &Xy) -> Xy {
    let c = content(v);
    if c.is_zero() {
        return v.clone();
    }
    div_coeffs(v, &c)
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` in `Q[y][x]`.
fn prem(a: &Xy, b: &Xy) -> Xy {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    if r.len() <= db {
        return r;
    }
    let mut steps = r.len() - db;
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k].clone();
        for p in r.iter_mut() {
            *p = p.mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[k - db + j] = r[k - db + j].sub(&c.mul(bj));
        }
        r = trim(r);
        steps -= 1;
    }
    for _ in 0..steps {
        r = mul_coeffs(&r, lb);
    }
    r
}

/// Subresultant remainder sequence gcd over `Q[y]`.
fn xy_gcd(a: &Xy, b: &Xy) -> Xy {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let (mut a, mut b) = if a.len() >= b.len() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let d = content(&a).gcd(&content(&b));
    a = primitive(&a);
    b = primitive(&b);
    let mut g = QPoly::one();
    let mut h = QPoly::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            b = vec![QPoly::one()];
            break;
        }
        a = b;
        b = div_coeffs(&r, &g.mul(&h.pow(delta)));
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division")
        };
    }
    mul_coeffs(&primitive(&b), &d)
}

/// Gcd in `Q[x, y]`, normalized to integer coefficients with content one and
/// positive leading coefficient.
pub fn gcd(f: &BiPoly, g: &BiPoly) -> BiPoly {
    from_xy(&xy_gcd(&to_xy(f), &to_xy(g))).normalized()
}

/// `f / d` when `d` divides `f` exactly in `Q[x, y]`.
pub fn div_exact(f: &BiPoly, d: &BiPoly) -> Option<BiPoly> {
    assert!(!d.is_zero(), "division by zero polynomial");
    let mut r = to_xy(f);
    let dv = to_xy(d);
    let dd = dv.len() - 1;
    let ld = &dv[dd];
    if r.len() < dv.len() {
        return r.is_empty().then(BiPoly::zero);
    }
    let mut q = vec![QPoly::zero(); r.len() - dd];
    while r.len() > dd {
        let k = r.len() - 1;
        let c = r[k].div_exact(ld)?;
        for (j, dj) in dv.iter().enumerate() {
            r[k - dd + j] = r[k - dd + j].sub(&c.mul(dj));
        }
        q[k - dd] = c;
        r = trim(r);
    }
    r.is_empty().then(|| from_xy(&trim(q)))
}

/// `f / gcd(f, df/dx)`: removes repeated factors that involve `x`.
pub fn squarefree_part(f: &BiPoly) -> BiPoly {
    if f.degree_x() == 0 {
        return f.normalized();
    }
    let g = gcd(f, &f.derivative_x());
    div_exact(f, &g).expect("gcd divides").normalized()
}

/// True when `h` is a nonzero rational constant.
pub fn is_constant(h: &BiPoly) -> bool {
    h.num_terms() == 1 && !h.constant_term().is_zero()
}

/// True when `f` and `g` share a factor of positive degree.
pub fn have_common_factor(f: &BiPoly, g: &BiPoly) -> bool {
    !is_constant(&gcd(f, g))
}
