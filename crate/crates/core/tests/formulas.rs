mod common;

use lojex_core::exactnum::rat;
use lojex_core::exponent::{lojasiewicz_exponent, lojasiewicz_exponent_with, zero_set_inclusion, ExponentOptions};
use lojex_core::limits::{exponent_shortcut, limit, LimitKind, Shortcut};

#[test]
fn root_and_pair_formulas_agree() {
    let mut r = common::rng(101);
    for _ in 0..40 {
        let (f, g) = common::pair(&mut r);
        let res = lojasiewicz_exponent_with(&f, &g, ExponentOptions { validate: true })
            .unwrap_or_else(|e| panic!("f = {f}, g = {g}: {e}"));
        assert_eq!(res.defined, res.value.is_some());
        if res.defined {
            assert_eq!(res.value, res.pairs_value, "f = {f}, g = {g}");
        }
    }
}

#[test]
fn definedness_is_inclusion() {
    let mut r = common::rng(102);
    for _ in 0..30 {
        let (f, g) = common::pair(&mut r);
        let res = lojasiewicz_exponent(&f, &g).unwrap();
        assert_eq!(res.defined, zero_set_inclusion(&f, &g).unwrap(), "f = {f}, g = {g}");
        assert_eq!(res.defined, res.violation.is_none());
    }
}

#[test]
fn shortcut_matches_limit() {
    let mut r = common::rng(103);
    for _ in 0..30 {
        let (f, g) = common::pair(&mut r);
        if lojex_core::polyring::have_common_factor(&f, &g) {
            continue;
        }
        let v = limit(&g, &f).unwrap();
        match exponent_shortcut(&g, &f).unwrap() {
            Shortcut::LimitZero => assert_eq!(v.value, Some(rat(0)), "{g} / {f}"),
            Shortcut::NoLimit => assert_eq!(v.kind, LimitKind::DoesNotExist, "{g} / {f}"),
            Shortcut::Inconclusive => {}
        }
    }
}
