//! Floating-point sampling near the origin, used to cross-check exact
//! results. Values are handled as `(sign, ln|v|)` so arcs like `x = y^64`
//! stay representable.
//!
//! Exponents are estimated from slopes `d ln|f| / d ln|g|` between
//! consecutive radii along each sampled family of arcs. A family only
//! contributes once its slopes have settled, which removes the bias that
//! constant factors put on a single ratio `ln|f| / ln|g|`.

use std::f64::consts::PI;

use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyring::BiPoly;

/// `x = sum c t^k`, `y = sign * t` (or with `x` and `y` exchanged).
#[derive(Clone, Debug, PartialEq)]
pub struct SampleArc {
    pub terms: Vec<(f64, f64)>,
    pub swap: bool,
    pub negative: bool,
}

impl SampleArc {
    pub fn monomial(c: f64, k: f64, swap: bool, negative: bool) -> Self {
        SampleArc {
            terms: vec![(c, k)],
            swap,
            negative,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SamplePlan {
    /// Strictly decreasing positive radii.
    pub radii: Vec<f64>,
    /// Number of rays, sampled at every radius.
    pub points_per_radius: usize,
    pub arcs: Vec<SampleArc>,
    pub seed: u64,
}

const DEFAULT_SEED: u64 = 0x5eed_1e55;

impl Default for SamplePlan {
    /// Radii `10^-1 ... 10^-4` in half-decade steps, 2000 rays and monomial
    /// arcs `x = c |y|^k` and `y = c |x|^k` for a spread of `c` and `k`.
    fn default() -> Self {
        let radii = (2..=8).map(|h| 10f64.powf(-(h as f64) / 2.0)).collect();
        let cs = [1.0, -1.0, 2.0, -2.0, 0.5, -0.5, 3.0, -3.0];
        let ks = [
            1.0 / 3.0,
            0.5,
            2.0 / 3.0,
            1.0,
            1.5,
            2.0,
            2.5,
            3.0,
            4.0,
            5.0,
            6.0,
            8.0,
            12.0,
            16.0,
            24.0,
            32.0,
            48.0,
            64.0,
        ];
        let mut arcs = Vec::new();
        for swap in [false, true] {
            for negative in [false, true] {
                for &k in &ks {
                    for &c in &cs {
                        arcs.push(SampleArc::monomial(c, k, swap, negative));
                    }
                }
            }
        }
        SamplePlan {
            radii,
            points_per_radius: 2000,
            arcs,
            seed: DEFAULT_SEED,
        }
    }
}

impl SamplePlan {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn check(&self) -> Result<()> {
        if self.radii.len() < 4 {
            return Err(Error::InvalidPlan("at least four radii are needed".into()));
        }
        if self.radii.iter().any(|r| !(*r > 0.0)) || self.radii.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::InvalidPlan("radii must be positive and decreasing".into()));
        }
        if self.points_per_radius < 100 {
            return Err(Error::InvalidPlan("at least 100 points per radius".into()));
        }
        Ok(())
    }

    /// Total number of sample points.
    pub fn size(&self) -> usize {
        self.radii.len() * (self.points_per_radius + self.arcs.len())
    }

    fn families(&self) -> Vec<Family> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let n = self.points_per_radius;
        let mut out: Vec<Family> = (0..n)
            .map(|j| Family::Ray(2.0 * PI * (j as f64 + rng.gen::<f64>()) / n as f64))
            .collect();
        out.extend(self.arcs.iter().cloned().map(Family::Arc));
        out
    }
}

enum Family {
    Ray(f64),
    Arc(SampleArc),
}

/// A real number as `(sign, ln|v|)`; sign 0 means exactly zero.
#[derive(Clone, Copy, Debug)]
struct LogNum {
    sign: f64,
    ln: f64,
}

impl LogNum {
    fn from_f64(v: f64) -> Self {
        LogNum {
            sign: v.signum() * (v != 0.0) as i32 as f64,
            ln: v.abs().ln(),
        }
    }
}

fn log_sum(parts: &[(f64, f64)]) -> Option<LogNum> {
    let m = parts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return Some(LogNum { sign: 0.0, ln: m });
    }
    let (mut s, mut a) = (0.0, 0.0);
    for (sg, l) in parts {
        let e = (l - m).exp();
        s += sg * e;
        a += e;
    }
    // too much cancellation to trust the sign or size
    if s.abs() < 1e-9 * a {
        return None;
    }
    Some(LogNum {
        sign: s.signum(),
        ln: s.abs().ln() + m,
    })
}

struct LogPoly {
    terms: Vec<(f64, f64, i32, i32)>,
}

impl LogPoly {
    fn new(p: &BiPoly) -> Self {
        LogPoly {
            terms: p
                .terms()
                .map(|(m, c)| {
                    let v = c.to_f64().unwrap();
                    let j = m.y.to_integer().to_i32().unwrap();
                    (if c.is_negative() { -1.0 } else { 1.0 }, v.abs().ln(), m.x as i32, j)
                })
                .collect(),
        }
    }

    fn eval(&self, x: LogNum, y: LogNum) -> Option<LogNum> {
        let parts: Vec<(f64, f64)> = self
            .terms
            .iter()
            .filter(|(_, _, i, j)| (x.sign != 0.0 || *i == 0) && (y.sign != 0.0 || *j == 0))
            .map(|&(s, l, i, j)| {
                let sign = s * x.sign.powi(i) * y.sign.powi(j);
                let ln = l + if i > 0 { i as f64 * x.ln } else { 0.0 } + if j > 0 { j as f64 * y.ln } else { 0.0 };
                (sign, ln)
            })
            .collect();
        log_sum(&parts)
    }
}

fn point(fam: &Family, t: f64) -> Option<(LogNum, LogNum)> {
    match fam {
        Family::Ray(a) => Some((LogNum::from_f64(t * a.cos()), LogNum::from_f64(t * a.sin()))),
        Family::Arc(arc) => {
            let lt = t.ln();
            let parts: Vec<(f64, f64)> = arc
                .terms
                .iter()
                .map(|(c, k)| (c.signum(), c.abs().ln() + k * lt))
                .collect();
            let u = log_sum(&parts)?;
            let v = LogNum {
                sign: if arc.negative { -1.0 } else { 1.0 },
                ln: lt,
            };
            Some(if arc.swap { (v, u) } else { (u, v) })
        }
    }
}

const SETTLE: f64 = 0.02;

/// Settled slope of `ln|f|` against `ln|g|` along one family.
fn family_slope(f: &LogPoly, g: &LogPoly, fam: &Family, radii: &[f64]) -> Option<f64> {
    let mut logs = Vec::new();
    for &t in radii {
        let (x, y) = point(fam, t)?;
        let (fv, gv) = (f.eval(x, y)?, g.eval(x, y)?);
        if fv.sign == 0.0 || gv.sign == 0.0 || fv.ln >= 0.0 || gv.ln >= 0.0 {
            return None;
        }
        logs.push((fv.ln, gv.ln));
    }
    let slopes: Vec<f64> = logs
        .windows(2)
        .map(|w| {
            let dg = w[0].1 - w[1].1;
            if dg > 1e-9 {
                (w[0].0 - w[1].0) / dg
            } else {
                f64::NAN
            }
        })
        .collect();
    let k = slopes.len();
    let last = &slopes[k - 3..];
    if last.iter().any(|s| !s.is_finite()) {
        return None;
    }
    let scale = last[2].abs().max(1.0);
    let settled = (last[2] - last[1]).abs() <= SETTLE * scale && (last[1] - last[0]).abs() <= 2.0 * SETTLE * scale;
    settled.then_some(last[2])
}

/// Estimate of the exponent `L` in `|f| >= C |g|^L`, from below.
pub fn estimate_exponent(f: &BiPoly, g: &BiPoly, plan: &SamplePlan) -> Result<f64> {
    plan.check()?;
    let (lf, lg) = (LogPoly::new(f), LogPoly::new(g));
    plan.families()
        .iter()
        .filter_map(|fam| family_slope(&lf, &lg, fam, &plan.radii))
        .reduce(f64::max)
        .ok_or(Error::NoSamples)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitEstimate {
    /// Mean of `g/f` over all families at the innermost radius.
    pub value: f64,
    /// Largest difference between two of those values.
    pub spread: f64,
}

/// Values of `g/f` at the innermost radius along every family.
pub fn estimate_limit(g: &BiPoly, f: &BiPoly, plan: &SamplePlan) -> Result<LimitEstimate> {
    plan.check()?;
    let (lf, lg) = (LogPoly::new(f), LogPoly::new(g));
    let t = *plan.radii.last().unwrap();
    let values: Vec<f64> = plan
        .families()
        .iter()
        .filter_map(|fam| {
            let (x, y) = point(fam, t)?;
            let fv = lf.eval(x, y)?;
            if fv.sign == 0.0 {
                return None;
            }
            let gv = lg.eval(x, y)?;
            Some(if gv.sign == 0.0 { 0.0 } else { gv.sign * fv.sign * (gv.ln - fv.ln).exp() })
        })
        .collect();
    if values.is_empty() {
        return Err(Error::NoSamples);
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(LimitEstimate {
        value: values.iter().sum::<f64>() / values.len() as f64,
        spread: hi - lo,
    })
}
