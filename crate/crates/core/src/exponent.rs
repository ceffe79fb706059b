//! Zero-set inclusion and the exact Łojasiewicz exponent `L_g(f)`, the least
//! `a` with `|f| >= C |g|^a` near the origin.
//!
//! Two independent formulas are implemented on the joint root tree of `f g`:
//! one maximizes over real approximations of the non-real roots of `f`, the
//! other over the approximations of all pairs of distinct roots of `f g`.
//! Both add the ratios `m/n` of multiplicities of the common real roots.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::polyring::{gcd, make_regular, BiPoly, RegularizationReport};
use crate::puiseux::{joint_root_tree, ord_generic, root_tree, GenericArc, RootTree, TruncatedPuiseux};

/// Half-plane of the original coordinates a witness lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Positive,
    Negative,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Positive => "y > 0",
            Direction::Negative => "y < 0",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum WitnessSource {
    /// `ord f / ord g` along a generic arc.
    Arc(GenericArc),
    /// `m / n` for a real root of multiplicity `m` in `f` and `n` in `g`.
    CommonRoot {
        root: TruncatedPuiseux,
        m: usize,
        n: usize,
    },
}

/// The source of the maximum, in the regularized coordinates; for
/// `Negative` the arc refers to `f(x, -y)` and `g(x, -y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub source: WitnessSource,
    pub direction: Direction,
    pub value: Rat,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            WitnessSource::Arc(a) => write!(f, "generic arc x = {a} ({})", self.direction),
            WitnessSource::CommonRoot { root, m, n } => write!(
                f,
                "common root x = {root} with multiplicities {m} in f and {n} in g ({})",
                self.direction
            ),
        }
    }
}

/// A real root of `f` that `g` does not vanish on.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub branch: TruncatedPuiseux,
    pub direction: Direction,
}

#[derive(Clone, Debug)]
pub struct ExponentResult {
    pub defined: bool,
    pub value: Option<Rat>,
    pub witness: Option<Witness>,
    pub violation: Option<Violation>,
    pub regularization: RegularizationReport,
    /// Value of the pair formula, filled in by validation.
    pub pairs_value: Option<Rat>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ExponentOptions {
    /// Also evaluate the pair formula and fail on disagreement.
    pub validate: bool,
}

/// `ord f / ord g` along a generic arc.
pub fn ell(f: &BiPoly, g: &BiPoly, arc: &GenericArc) -> Result<Rat> {
    let og = ord_generic(g, arc)?;
    if og <= Rat::from_integer(0.into()) {
        return Err(Error::DegenerateArc);
    }
    Ok(ord_generic(f, arc)? / og)
}

fn check_regular(p: &BiPoly) -> Result<()> {
    match p.x_regular_order() {
        None => Err(Error::NotRegular(p.to_string())),
        Some(0) => Err(Error::NotVanishingAtOrigin(p.to_string())),
        Some(_) => Ok(()),
    }
}

fn count_real_roots(p: &BiPoly) -> Result<usize> {
    if p.x_regular_order().unwrap_or(0) == 0 {
        return Ok(0);
    }
    Ok(root_tree(p)?.iter().filter(|b| b.is_real).count())
}

/// First real root of `f` (for `y > 0`) that is not a root of `g`, checked
/// against the count of real roots of `gcd(f, g)`.
fn violation_on(tree: &RootTree, f: &BiPoly, g: &BiPoly) -> Result<Option<TruncatedPuiseux>> {
    let bad = tree
        .branches()
        .iter()
        .find(|b| b.is_real && b.mult_f > 0 && b.mult_g == 0)
        .map(|b| b.truncation.clone());
    let by_count = count_real_roots(f)? > count_real_roots(&gcd(f, g))?;
    if by_count != bad.is_some() {
        return Err(Error::Mismatch(format!(
            "inclusion by branches and by root count disagree for f = {f}, g = {g}"
        )));
    }
    Ok(bad)
}

fn root_ratios(tree: &RootTree) -> Vec<(Rat, WitnessSource)> {
    tree.branches()
        .iter()
        .filter(|b| b.is_real && b.mult_f > 0)
        .map(|b| {
            let (m, n) = (b.mult_f, b.mult_g);
            (
                Rat::new((m as i64).into(), (n as i64).into()),
                WitnessSource::CommonRoot {
                    root: b.truncation.clone(),
                    m,
                    n,
                },
            )
        })
        .collect()
}

fn arc_value(orders: &[Rat]) -> Rat {
    &orders[0] / &orders[1]
}

fn roots_candidates(tree: &RootTree) -> Vec<(Rat, WitnessSource)> {
    let mut out: Vec<_> = tree
        .branches()
        .iter()
        .filter(|b| !b.is_real && b.mult_f > 0)
        .filter_map(|b| tree.real_approximation(b))
        .map(|a| (arc_value(&a.orders), WitnessSource::Arc(a.arc)))
        .collect();
    out.extend(root_ratios(tree));
    out
}

fn pairs_candidates(tree: &RootTree) -> Vec<(Rat, WitnessSource)> {
    let mut out: Vec<_> = tree
        .pair_approximations()
        .into_iter()
        .map(|a| (arc_value(&a.orders), WitnessSource::Arc(a.arc)))
        .collect();
    out.extend(root_ratios(tree));
    out
}

fn best(cands: Vec<(Rat, WitnessSource)>) -> (Rat, WitnessSource) {
    let mut it = cands.into_iter();
    let first = it.next().expect("a root of f always contributes");
    it.fold(first, |acc, c| if c.0 > acc.0 { c } else { acc })
}

fn one_direction(
    f: &BiPoly,
    g: &BiPoly,
    cands: fn(&RootTree) -> Vec<(Rat, WitnessSource)>,
) -> Result<(Rat, WitnessSource)> {
    check_regular(f)?;
    check_regular(g)?;
    let tree = joint_root_tree(f, g)?;
    if violation_on(&tree, f, g)?.is_some() {
        return Err(Error::InclusionViolated);
    }
    Ok(best(cands(&tree)))
}

/// `L` restricted to `y > 0`, from real approximations of the non-real
/// roots of `f` and the common real roots. Needs x-regular inputs.
pub fn l_plus_roots(f: &BiPoly, g: &BiPoly) -> Result<Rat> {
    Ok(one_direction(f, g, roots_candidates)?.0)
}

/// `L` restricted to `y > 0`, from approximations of pairs of roots of
/// `f g` and the common real roots. Needs x-regular inputs.
pub fn l_plus_pairs(f: &BiPoly, g: &BiPoly) -> Result<Rat> {
    Ok(one_direction(f, g, pairs_candidates)?.0)
}

fn check_input(f: &BiPoly, g: &BiPoly) -> Result<()> {
    for p in [f, g] {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.vanishes_at_origin() {
            return Err(Error::NotVanishingAtOrigin(p.to_string()));
        }
    }
    Ok(())
}

fn directions(reg: &RegularizationReport) -> [(Direction, BiPoly, BiPoly); 2] {
    let (f, g) = (&reg.transformed_f, &reg.transformed_g);
    [
        (Direction::Positive, f.clone(), g.clone()),
        (Direction::Negative, f.bar(), g.bar()),
    ]
}

/// Whether `{f = 0}` is contained in `{g = 0}` near the origin.
pub fn zero_set_inclusion(f: &BiPoly, g: &BiPoly) -> Result<bool> {
    check_input(f, g)?;
    let reg = make_regular(f, g)?;
    for (_, f, g) in directions(&reg) {
        if violation_on(&joint_root_tree(&f, &g)?, &f, &g)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn lojasiewicz_exponent(f: &BiPoly, g: &BiPoly) -> Result<ExponentResult> {
    lojasiewicz_exponent_with(f, g, ExponentOptions::default())
}

pub fn lojasiewicz_exponent_with(f: &BiPoly, g: &BiPoly, opts: ExponentOptions) -> Result<ExponentResult> {
    check_input(f, g)?;
    let reg = make_regular(f, g)?;
    let mut trees = Vec::new();
    for (dir, f, g) in directions(&reg) {
        let tree = joint_root_tree(&f, &g)?;
        if let Some(branch) = violation_on(&tree, &f, &g)? {
            return Ok(ExponentResult {
                defined: false,
                value: None,
                witness: None,
                violation: Some(Violation {
                    branch,
                    direction: dir,
                }),
                regularization: reg,
                pairs_value: None,
            });
        }
        trees.push((dir, tree));
    }
    let mut witness: Option<Witness> = None;
    let mut pairs_value: Option<Rat> = None;
    for (dir, tree) in &trees {
        let (v, source) = best(roots_candidates(tree));
        if opts.validate {
            let (p, _) = best(pairs_candidates(tree));
            if p != v {
                return Err(Error::Mismatch(format!(
                    "root formula gives {v}, pair formula gives {p} ({dir})"
                )));
            }
            pairs_value = Some(pairs_value.map_or(p.clone(), |q| q.max(p)));
        }
        if witness.as_ref().is_none_or(|w| v > w.value) {
            witness = Some(Witness {
                source,
                direction: *dir,
                value: v,
            });
        }
    }
    let witness = witness.unwrap();
    Ok(ExponentResult {
        defined: true,
        value: Some(witness.value.clone()),
        witness: Some(witness),
        violation: None,
        regularization: reg,
        pairs_value,
    })
}
