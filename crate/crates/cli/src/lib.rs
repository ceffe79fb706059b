//! Argument handling and output formatting for the `lojex` binary.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use lojex_core::exactnum::{FieldElem, Poly};
use lojex_core::exponent::{lojasiewicz_exponent_with, Direction, ExponentOptions, ExponentResult};
use lojex_core::expr::{parse_arc, parse_poly};
use lojex_core::limits::{limit, LimitKind};
use lojex_core::oracle::{estimate_exponent, SamplePlan};
use lojex_core::polyring::make_regular;
use lojex_core::puiseux::{newton_polygon, root_tree, Slope};
use lojex_core::{BiPoly, Rat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNDEFINED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lojex", version, about = "Exact Łojasiewicz exponents and limits of quotients at the origin")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide {f=0} ⊂ {g=0} and compute the least a with |f| >= C|g|^a near 0
    Exponent {
        #[arg(short = 'f', long = "f")]
        f: String,
        #[arg(short = 'g', long = "g")]
        g: String,
        #[arg(long)]
        json: bool,
        /// Cross-check with the pair formula and the sampling oracle
        #[arg(long)]
        validate: bool,
        /// Seed for the sampling oracle
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decide whether lim g/f exists at the origin
    Limit {
        /// Numerator g
        #[arg(short = 'n', long = "numerator")]
        numerator: String,
        /// Denominator f
        #[arg(short = 'd', long = "denominator")]
        denominator: String,
        #[arg(long)]
        json: bool,
    },
    /// Newton-Puiseux roots x = phi(y) truncated at their contact orders
    Roots {
        #[arg(short = 'f', long = "f")]
        f: String,
        #[arg(long)]
        json: bool,
    },
    /// Newton polygon of f(X + phi(Y), Y)
    Polygon {
        #[arg(short = 'f', long = "f")]
        f: String,
        /// Arc phi(y), e.g. "y^(5/3) - y^2"
        #[arg(long)]
        arc: String,
        #[arg(long)]
        json: bool,
    },
}

/// Exit code and the text for stdout and stderr.
#[derive(Debug, Default, PartialEq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Fraction {
    num: serde_json::Value,
    den: serde_json::Value,
}

fn big(n: &num_bigint::BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => v.into(),
        None => n.to_string().into(),
    }
}

fn fraction(r: &Rat) -> Fraction {
    Fraction {
        num: big(r.numer()),
        den: big(r.denom()),
    }
}

fn decimal(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn direction_key(d: Direction) -> &'static str {
    match d {
        Direction::Positive => "positive",
        Direction::Negative => "negative",
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn shear_text(c: i64) -> String {
    match c {
        1 => "y -> y + x".into(),
        -1 => "y -> y - x".into(),
        c if c < 0 => format!("y -> y - {}*x", -c),
        c => format!("y -> y + {c}*x"),
    }
}

fn poly_arg(name: &str, text: &str) -> Result<BiPoly, String> {
    parse_poly(text).map_err(|e| format!("{name}: {e}"))
}

/// Runs the tool on `argv`, including the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_INPUT, stderr: text, ..Default::default() }
            } else {
                Output { code: EXIT_OK, stdout: text, ..Default::default() }
            };
        }
    };
    let res = match cli.cmd {
        Cmd::Exponent { f, g, json, validate, seed } => exponent(&f, &g, json, validate, seed),
        Cmd::Limit { numerator, denominator, json } => limit_cmd(&numerator, &denominator, json),
        Cmd::Roots { f, json } => roots(&f, json),
        Cmd::Polygon { f, arc, json } => polygon(&f, &arc, json),
    };
    match res {
        Ok((code, stdout)) => Output { code, stdout, stderr: String::new() },
        Err(msg) => Output {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

#[derive(Serialize)]
struct ExponentJson {
    defined: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponent: Option<Fraction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decimal: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violating_branch: Option<String>,
    shear_c: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    direction: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    validation: Option<ValidationJson>,
}

#[derive(Serialize)]
struct ValidationJson {
    pair_formula: Option<Fraction>,
    oracle_estimate: Option<f64>,
}

fn exponent(f: &str, g: &str, json: bool, validate: bool, seed: Option<u64>) -> Result<(i32, String), String> {
    let f = poly_arg("f", f)?;
    let g = poly_arg("g", g)?;
    let r = lojasiewicz_exponent_with(&f, &g, ExponentOptions { validate }).map_err(|e| e.to_string())?;
    let estimate = match (&r.value, validate) {
        (Some(_), true) => {
            let plan = seed.map_or_else(SamplePlan::default, |s| SamplePlan::default().with_seed(s));
            Some(estimate_exponent(&f, &g, &plan).map_err(|e| e.to_string())?)
        }
        _ => None,
    };
    let code = if r.defined { EXIT_OK } else { EXIT_UNDEFINED };
    let out = if json {
        json_line(&exponent_json(&r, validate, estimate))
    } else {
        exponent_text(&f, &g, &r, validate, estimate)
    };
    Ok((code, out))
}

fn exponent_json(r: &ExponentResult, validate: bool, estimate: Option<f64>) -> ExponentJson {
    let w = r.witness.as_ref();
    let v = r.violation.as_ref();
    ExponentJson {
        defined: r.defined,
        exponent: r.value.as_ref().map(fraction),
        decimal: r.value.as_ref().map(decimal),
        witness: w.map(|w| w.to_string()),
        reason: (!r.defined).then_some("inclusion_fails"),
        violating_branch: v.map(|v| format!("x = {}", v.branch)),
        shear_c: r.regularization.shear_c,
        direction: w.map(|w| w.direction).or(v.map(|v| v.direction)).map(direction_key),
        validation: (validate && r.defined).then(|| ValidationJson {
            pair_formula: r.pairs_value.as_ref().map(fraction),
            oracle_estimate: estimate,
        }),
    }
}

fn exponent_text(f: &BiPoly, g: &BiPoly, r: &ExponentResult, validate: bool, estimate: Option<f64>) -> String {
    let mut s = String::new();
    let c = r.regularization.shear_c;
    writeln!(s, "f = {f}").unwrap();
    writeln!(s, "g = {g}").unwrap();
    if c != 0 {
        writeln!(s, "coordinates: {} makes f and g regular in x", shear_text(c)).unwrap();
    }
    match (&r.value, &r.violation) {
        (Some(v), _) => {
            writeln!(s, "{{f=0}} ⊂ {{g=0}} holds near the origin").unwrap();
            writeln!(s, "defined; L = {v} (= {}/{})", v.numer(), v.denom()).unwrap();
            writeln!(s, "decimal: {:.6}", decimal(v)).unwrap();
            if let Some(w) = &r.witness {
                writeln!(s, "witness: {w}").unwrap();
            }
            if validate {
                if let Some(p) = &r.pairs_value {
                    writeln!(s, "pair formula: {p} (agrees)").unwrap();
                }
                if let Some(e) = estimate {
                    writeln!(s, "sampled estimate: {e:.4}").unwrap();
                }
            }
        }
        (None, viol) => {
            writeln!(s, "{{f=0}} ⊄ {{g=0}}: the exponent is undefined").unwrap();
            if let Some(v) = viol {
                writeln!(s, "violating branch: x = {} ({})", v.branch, v.direction).unwrap();
            }
        }
    }
    s
}

#[derive(Serialize)]
struct LimitJson {
    exists: bool,
    value: Option<Fraction>,
    evidence: Vec<EvidenceJson>,
}

#[derive(Serialize)]
struct EvidenceJson {
    arc: String,
    behaviour: String,
}

fn limit_cmd(g: &str, f: &str, json: bool) -> Result<(i32, String), String> {
    let g = poly_arg("numerator", g)?;
    let f = poly_arg("denominator", f)?;
    let v = limit(&g, &f).map_err(|e| e.to_string())?;
    if json {
        let j = LimitJson {
            exists: v.kind == LimitKind::ExistsEqual,
            value: v.value.as_ref().map(fraction),
            evidence: v
                .evidence
                .iter()
                .map(|e| EvidenceJson { arc: e.arc.clone(), behaviour: e.behaviour.to_string() })
                .collect(),
        };
        return Ok((EXIT_OK, json_line(&j)));
    }
    let mut s = String::new();
    match (&v.kind, &v.value) {
        (LimitKind::ExistsEqual, Some(l)) => writeln!(s, "limit exists and equals {l}").unwrap(),
        _ => writeln!(s, "does not exist").unwrap(),
    }
    for e in &v.evidence {
        writeln!(s, "  along {}: {}", e.arc, e.behaviour).unwrap();
    }
    Ok((EXIT_OK, s))
}

#[derive(Serialize)]
struct RootsJson {
    shear_c: i64,
    roots: Vec<RootJson>,
}

#[derive(Serialize)]
struct RootJson {
    truncation: String,
    contact_order: Fraction,
    real: bool,
    multiplicity: usize,
}

fn roots(f: &str, json: bool) -> Result<(i32, String), String> {
    let f = poly_arg("f", f)?;
    let reg = make_regular(&f, &f).map_err(|e| e.to_string())?;
    let bs = root_tree(&reg.transformed_f).map_err(|e| e.to_string())?;
    if json {
        let j = RootsJson {
            shear_c: reg.shear_c,
            roots: bs
                .iter()
                .map(|b| RootJson {
                    truncation: b.truncation.to_string(),
                    contact_order: fraction(&b.contact_order),
                    real: b.is_real,
                    multiplicity: b.mult_f,
                })
                .collect(),
        };
        return Ok((EXIT_OK, json_line(&j)));
    }
    let mut s = String::new();
    if reg.shear_c != 0 {
        writeln!(s, "coordinates: {} makes f regular in x", shear_text(reg.shear_c)).unwrap();
    }
    writeln!(s, "{} distinct roots, order {} in x", bs.len(), reg.order_f).unwrap();
    for b in &bs {
        writeln!(
            s,
            "x = {}  contact {}  {}  multiplicity {}",
            b.truncation,
            b.contact_order,
            if b.is_real { "real" } else { "complex" },
            b.mult_f
        )
        .unwrap();
    }
    Ok((EXIT_OK, s))
}

fn coeff_text(c: &FieldElem) -> String {
    match c.to_rat() {
        Some(r) => r.to_string(),
        None => format!("[{}]", c.to_algebraic()),
    }
}

/// Prints a polynomial in `z` with the highest power first.
fn assoc_text(p: &Poly<FieldElem>) -> String {
    let mut s = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.to_rat().is_some_and(|r| r == Rat::from_integer(0.into())) {
            continue;
        }
        let (neg, body) = match c.to_rat() {
            Some(r) => (r.is_negative(), r.abs().to_string()),
            None => (false, coeff_text(c)),
        };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "z".into(),
            _ => format!("z^{k}"),
        };
        match (body.as_str(), mono.is_empty()) {
            (b, true) => s.push_str(b),
            ("1", false) => s.push_str(&mono),
            (b, false) => write!(s, "{b}*{mono}").unwrap(),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[derive(Serialize)]
struct PolygonJson {
    dots: Vec<(u32, Fraction)>,
    edges: Vec<EdgeJson>,
    slopes: Vec<Fraction>,
    order: Option<Fraction>,
}

#[derive(Serialize)]
struct EdgeJson {
    slope: Option<Fraction>,
    left: (u32, Fraction),
    right: (u32, Fraction),
    associated: String,
}

fn polygon(f: &str, arc: &str, json: bool) -> Result<(i32, String), String> {
    let f = poly_arg("f", f)?;
    let phi = parse_arc(arc).map_err(|e| format!("arc: {e}"))?;
    let poly = newton_polygon(&f, &phi).map_err(|e| e.to_string())?;
    let mut dots = poly.dots.clone();
    dots.sort();
    let order = match poly.ord_along() {
        lojex_core::puiseux::Order::Finite(r) => Some(r),
        lojex_core::puiseux::Order::Infinite => None,
    };
    if json {
        let j = PolygonJson {
            dots: dots.iter().map(|(i, q)| (*i, fraction(q))).collect(),
            edges: poly
                .edges
                .iter()
                .map(|e| EdgeJson {
                    slope: match &e.slope {
                        Slope::Finite(r) => Some(fraction(r)),
                        Slope::Infinite => None,
                    },
                    left: (e.left.0, fraction(&e.left.1)),
                    right: (e.right.0, fraction(&e.right.1)),
                    associated: assoc_text(&e.assoc),
                })
                .collect(),
            slopes: poly.slopes().iter().map(fraction).collect(),
            order: order.as_ref().map(fraction),
        };
        return Ok((EXIT_OK, json_line(&j)));
    }
    let mut s = String::new();
    let dot_list: Vec<String> = dots.iter().map(|(i, q)| format!("({i}, {q})")).collect();
    writeln!(s, "dots: {}", dot_list.join(" ")).unwrap();
    for e in &poly.edges {
        let (l, r) = (&e.left, &e.right);
        write!(s, "edge slope {}: ({}, {}) -- ({}, {})", e.slope, l.0, l.1, r.0, r.1).unwrap();
        if e.slope != Slope::Infinite {
            write!(s, "  associated {}", assoc_text(&e.assoc)).unwrap();
        }
        s.push('\n');
    }
    let slopes: Vec<String> = poly.slopes().iter().map(|r| r.to_string()).collect();
    writeln!(s, "slopes: {}", slopes.join(", ")).unwrap();
    match order {
        Some(o) => writeln!(s, "order along the arc: {o}").unwrap(),
        None => writeln!(s, "the arc is a root").unwrap(),
    }
    Ok((EXIT_OK, s))
}
