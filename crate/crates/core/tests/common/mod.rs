//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use lojex_core::exactnum::rat;
use lojex_core::polyring::Monomial;
use lojex_core::BiPoly;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeff(r: &mut TestRng) -> i64 {
    loop {
        let c = r.gen_range(-5..=5);
        if c != 0 {
            return c;
        }
    }
}

/// Up to `terms` random terms of total degree in `lo..=hi`.
pub fn poly(r: &mut TestRng, lo: u32, hi: u32, terms: usize) -> BiPoly {
    loop {
        let mut p = BiPoly::zero();
        for _ in 0..r.gen_range(1..=terms) {
            let d = r.gen_range(lo..=hi);
            let i = r.gen_range(0..=d);
            p.add_term(Monomial::new(i, rat((d - i) as i64)), rat(coeff(r)));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn total_degree(p: &BiPoly) -> u32 {
    p.terms().map(|(m, _)| m.x + m.y.to_integer().to_string().parse::<u32>().unwrap()).max().unwrap_or(0)
}

/// Pairs `(f, g)` of degree at most 6 vanishing at the origin. Most have
/// `g = f u` or share a factor with `f`; the rest are independent.
pub fn pair(r: &mut TestRng) -> (BiPoly, BiPoly) {
    loop {
        let (f, g) = match r.gen_range(0..4) {
            0 => {
                let f = poly(r, 1, 3, 3);
                (f.clone(), f.mul(&poly(r, 0, 3, 3)))
            }
            1 => {
                let h = poly(r, 1, 2, 3);
                (h.mul(&poly(r, 0, 3, 3)), h.mul(&poly(r, 0, 3, 3)))
            }
            2 => {
                let h = poly(r, 1, 2, 2);
                let (a, b) = (r.gen_range(1..=3), r.gen_range(1..=3));
                (h.pow(a).mul(&poly(r, 0, 1, 2)), h.pow(b).mul(&poly(r, 0, 1, 2)))
            }
            _ => (poly(r, 1, 6, 4), poly(r, 1, 6, 4)),
        };
        if f.vanishes_at_origin()
            && g.vanishes_at_origin()
            && !f.is_zero()
            && !g.is_zero()
            && total_degree(&f) <= 6
            && total_degree(&g) <= 6
        {
            return (f, g);
        }
    }
}

/// A random x-regular polynomial of order `m`.
pub fn regular(r: &mut TestRng, m: u32) -> BiPoly {
    loop {
        let mut p = poly(r, m, m + 3, 4);
        p = p.add(&BiPoly::from_int_terms(&[(coeff(r), m, 0)]));
        if p.x_regular_order() == Some(m) && total_degree(&p) <= 8 {
            return p;
        }
    }
}
