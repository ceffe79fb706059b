//! Acceptance checks, one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lojex_core::exactnum::{rat, ratio};
use lojex_core::exponent::{lojasiewicz_exponent, lojasiewicz_exponent_with, ExponentOptions, WitnessSource};
use lojex_core::limits::{limit, LimitKind};
use lojex_core::oracle::{estimate_exponent, estimate_limit, SamplePlan};
use lojex_core::puiseux::{
    newton_polygon, ord_along, ord_generic, root_tree, sliding_step, GenericArc, Order, TruncatedPuiseux,
};
use lojex_core::{BiPoly, Error, Rat};
use rand::Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(t: &[(i64, u32, u32)]) -> BiPoly {
    BiPoly::from_int_terms(t)
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    check(e < limit, || format!("{what} took {e:?}, limit {limit:?}"))
}

fn example_polygon() -> Outcome {
    let t = Instant::now();
    let f = p(&[(1, 3, 0), (-1, 0, 5), (1, 0, 6)]);
    let arc = TruncatedPuiseux::from_rational(vec![(ratio(5, 3), rat(1))]).unwrap();
    let poly = newton_polygon(&f, &arc).map_err(|e| e.to_string())?;
    let mut dots = poly.dots.clone();
    dots.sort();
    let want = vec![(0, rat(6)), (1, ratio(10, 3)), (2, ratio(5, 3)), (3, rat(0))];
    check(dots == want, || format!("dots {dots:?}"))?;
    let slopes = poly.slopes();
    check(slopes == vec![ratio(8, 3), ratio(5, 3)], || format!("slopes {slopes:?}"))?;
    within(t, Duration::from_secs(1), "polygon")?;
    Ok(format!("dots and slopes 8/3, 5/3 in {:?}", t.elapsed()))
}

fn common_root_example() -> Outcome {
    let f = p(&[(1, 2, 0)]);
    let g = p(&[(1, 3, 0), (1, 1, 2)]);
    let r = lojasiewicz_exponent(&f, &g).map_err(|e| e.to_string())?;
    check(r.value == Some(rat(2)), || format!("value {:?}", r.value))?;
    let w = r.witness.ok_or("no witness")?;
    check(
        matches!(w.source, WitnessSource::CommonRoot { m: 2, n: 1, .. }),
        || format!("witness {w}"),
    )?;
    let est = estimate_exponent(&f, &g, &SamplePlan::default()).map_err(|e| e.to_string())?;
    check((1.85..=2.0).contains(&est), || format!("oracle estimate {est}"))?;
    Ok(format!("L = 2, witness m=2 n=1, oracle {est:.4}"))
}

struct Instance {
    f: BiPoly,
    g: BiPoly,
    value: Option<Rat>,
}

fn formula_agreement(out: &mut Vec<Instance>) -> Outcome {
    let t = Instant::now();
    let mut r = common::rng(7);
    for k in 0..200 {
        let (f, g) = common::pair(&mut r);
        let res = lojasiewicz_exponent_with(&f, &g, ExponentOptions { validate: true })
            .map_err(|e| format!("instance {k}: f = {f}, g = {g}: {e}"))?;
        if res.defined {
            check(res.pairs_value == res.value, || format!("instance {k}: values differ"))?;
        }
        out.push(Instance { f, g, value: res.value });
    }
    within(t, Duration::from_secs(600), "suite")?;
    let defined = out.iter().filter(|i| i.value.is_some()).count();
    Ok(format!("200 pairs, {defined} defined, all agree, {:?}", t.elapsed()))
}

fn exponent_of(f: &BiPoly, g: &BiPoly) -> Result<Option<Rat>, String> {
    lojasiewicz_exponent(f, g)
        .map(|r| r.value)
        .map_err(|e| format!("f = {f}, g = {g}: {e}"))
}

fn properties() -> Outcome {
    let mut r = common::rng(11);
    let mut n = 0;
    let mut tried = 0;
    while n < 50 {
        tried += 1;
        check(tried < 1000, || "too few defined instances".into())?;
        let (f, g) = common::pair(&mut r);
        if common::total_degree(&f) > 4 || common::total_degree(&g) > 4 {
            continue;
        }
        let Some(v) = exponent_of(&f, &g)? else { continue };
        n += 1;
        let ctx = || format!("f = {f}, g = {g}, L = {v}");
        check(exponent_of(&f, &f)? == Some(rat(1)), || format!("L_f(f) for {}", ctx()))?;
        for k in [2u32, 3] {
            let kr = rat(k as i64);
            check(exponent_of(&f.pow(k), &g)? == Some(&v * &kr), || format!("f^{k}: {}", ctx()))?;
            check(exponent_of(&f, &g.pow(k))? == Some(&v / &kr), || format!("g^{k}: {}", ctx()))?;
        }
        for c in [1, -1, 2] {
            let c = rat(c);
            check(exponent_of(&f.shear(&c), &g.shear(&c))? == Some(v.clone()), || format!("shear {c}: {}", ctx()))?;
        }
        check(exponent_of(&f.bar(), &g.bar())? == Some(v.clone()), || format!("bar: {}", ctx()))?;
    }
    Ok("reflexivity, power laws k=2,3, shears 1,-1,2 and bar on 50 instances".into())
}

fn slide_walk(f: &BiPoly, phi: &TruncatedPuiseux, depth: usize) -> Result<(), String> {
    let here = ord_along(f, phi).map_err(|e| e.to_string())?;
    if here == Order::Infinite || depth == 0 {
        return Ok(());
    }
    for (child, mult) in sliding_step(f, phi).map_err(|e| e.to_string())? {
        let there = ord_along(f, &child).map_err(|e| e.to_string())?;
        check(there > here, || format!("{f} at {phi}: sliding to {child} gives {there} <= {here}"))?;
        if mult > 1 {
            slide_walk(f, &child, depth - 1)?;
        }
    }
    Ok(())
}

fn root_tree_invariants() -> Outcome {
    let mut r = common::rng(13);
    for _ in 0..100 {
        let m = r.gen_range(1..=6);
        let f = common::regular(&mut r, m);
        let bs = root_tree(&f).map_err(|e| format!("{f}: {e}"))?;
        let total: usize = bs.iter().map(|b| b.mult_f).sum();
        check(total == m as usize, || format!("{f}: multiplicities sum to {total}, order {m}"))?;
        for b in bs.iter().filter(|b| !b.is_real) {
            let conj: Vec<_> = b.truncation.terms().iter().map(|(e, c)| (e.clone(), c.conjugate())).collect();
            let conj = TruncatedPuiseux::from_algebraic(conj).unwrap();
            check(
                bs.iter().any(|o| o.truncation == conj && o.mult_f == b.mult_f),
                || format!("{f}: no conjugate for {}", b.truncation),
            )?;
        }
        slide_walk(&f, &TruncatedPuiseux::zero(), 6)?;
    }
    Ok("100 regular polynomials: multiplicities, sliding, conjugate pairs".into())
}

fn random_rat(r: &mut common::TestRng) -> Rat {
    loop {
        let n: i64 = r.gen_range(-1000..=1000);
        if n != 0 {
            return ratio(n, r.gen_range(1..=1000));
        }
    }
}

fn generic_orders() -> Outcome {
    let mut r = common::rng(17);
    let exps = [ratio(1, 2), rat(1), ratio(3, 2), rat(2), ratio(5, 2), rat(3)];
    for _ in 0..100 {
        let f = common::poly(&mut r, 1, 6, 5);
        let mut prefix = Vec::new();
        for e in &exps {
            if r.gen_bool(0.3) {
                prefix.push((e.clone(), ratio(r.gen_range(-5..=5), r.gen_range(1..=3))));
            }
        }
        let head = TruncatedPuiseux::from_rational(prefix.clone()).unwrap();
        let last = head.last_exponent().cloned().unwrap_or(rat(0));
        let rho = last + ratio(r.gen_range(1..=6), r.gen_range(1..=3));
        let arc = GenericArc::new(head, rho.clone()).unwrap();
        let generic = ord_generic(&f, &arc).map_err(|e| e.to_string())?;
        let mut orders = Vec::new();
        for _ in 0..50 {
            let mut terms = prefix.clone();
            terms.push((rho.clone(), random_rat(&mut r)));
            let phi = TruncatedPuiseux::from_rational(terms).unwrap();
            orders.push(ord_along(&f, &phi).map_err(|e| e.to_string())?);
        }
        let max = orders.iter().max().unwrap();
        let min = orders.iter().min().unwrap();
        check(*max == Order::Finite(generic.clone()) && *min == *max, || {
            format!("{f} along {arc}: generic {generic}, sampled {min}..{max}")
        })?;
    }
    Ok("100 (f, arc) pairs, 50 tails each".into())
}

fn limit_suite() -> Outcome {
    let t = Instant::now();
    let plan = SamplePlan::default();
    let circle = p(&[(1, 2, 0), (1, 0, 2)]);
    let cases: [(BiPoly, BiPoly, Option<Rat>); 3] = [
        (p(&[(1, 1, 2)]), p(&[(1, 2, 0), (1, 0, 4)]), None),
        (p(&[(1, 3, 1)]), circle.clone(), Some(rat(0))),
        (circle.clone(), circle, Some(rat(1))),
    ];
    for (g, f, want) in cases {
        let v = limit(&g, &f).map_err(|e| e.to_string())?;
        let est = estimate_limit(&g, &f, &plan).map_err(|e| e.to_string())?;
        match want {
            None => {
                check(v.kind == LimitKind::DoesNotExist, || format!("{g} / {f}: {v}"))?;
                check(est.spread >= 0.1, || format!("{g} / {f}: sampled spread {}", est.spread))?;
            }
            Some(w) => {
                check(v.value.as_ref() == Some(&w), || format!("{g} / {f}: {v}"))?;
                let wf = w.to_string().parse::<f64>().unwrap();
                check(est.spread < 0.1 && (est.value - wf).abs() < 0.1, || {
                    format!("{g} / {f}: sampled {est:?}")
                })?;
            }
        }
    }
    within(t, Duration::from_secs(60), "limit suite")?;
    Ok(format!("three verdicts corroborated in {:?}", t.elapsed()))
}

fn oracle_consistency(instances: &[Instance]) -> Outcome {
    check(!instances.is_empty(), || "criterion 3 produced no instances".into())?;
    let plan = SamplePlan::default();
    check(plan.size() >= 10_000 && *plan.radii.last().unwrap() <= 1e-4, || "plan too small".into())?;
    let mut worst = f64::NEG_INFINITY;
    let mut n = 0;
    for inst in instances {
        let Some(v) = &inst.value else { continue };
        let exact: f64 = v.to_string().split('/').map(|s| s.parse::<f64>().unwrap()).reduce(|a, b| a / b).unwrap();
        let est = match estimate_exponent(&inst.f, &inst.g, &plan) {
            Ok(e) => e,
            Err(Error::NoSamples) => continue,
            Err(e) => return Err(e.to_string()),
        };
        n += 1;
        worst = worst.max(est - exact);
        check(est <= exact + 0.1, || format!("f = {}, g = {}: estimate {est}, exact {v}", inst.f, inst.g))?;
    }
    Ok(format!("{n} instances, largest excess {worst:.4}"))
}

fn run(n: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match res {
        Ok(msg) => {
            println!("criterion {n} ({name}): PASS - {msg}");
            true
        }
        Err(msg) => {
            println!("criterion {n} ({name}): FAIL - {msg}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut instances = Vec::new();
    let results = [
        run(1, "example polygon", example_polygon),
        run(2, "common root example", common_root_example),
        run(3, "formula agreement", || formula_agreement(&mut instances)),
        run(4, "exponent properties", properties),
        run(5, "root tree invariants", root_tree_invariants),
        run(6, "generic orders", generic_orders),
        run(7, "limits", limit_suite),
        run(8, "oracle consistency", || oracle_consistency(&instances)),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
