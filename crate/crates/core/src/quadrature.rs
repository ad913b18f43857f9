//! Numerical integration: Gauss–Hermite rules for the Gaussian weight
//! `exp(-a t^2)` and adaptive Gauss–Kronrod on finite intervals.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest Gauss–Hermite rule we build.
pub const MAX_HERMITE_NODES: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadratureScheme {
    /// Fixed-node Gauss–Hermite with the weight absorbed into the rule.
    GaussHermite,
    /// Adaptive Gauss–Kronrod (7/15) on a truncated interval.
    AdaptiveInterval,
}

/// How integrals against the Gaussian weight are evaluated.
///
/// For the Gauss–Hermite scheme `node_count` is the starting rule size; it
/// is doubled until two successive rules agree to `rel_tol`. For the
/// adaptive scheme the integration range for weight `exp(-a t^2)` is
/// `|t| <= truncation_radius / sqrt(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub scheme: QuadratureScheme,
    pub node_count: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub truncation_radius: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            scheme: QuadratureScheme::GaussHermite,
            node_count: 128,
            abs_tol: 1e-14,
            rel_tol: 1e-8,
            truncation_radius: 9.0,
        }
    }
}

impl QuadratureSpec {
    pub fn gauss_hermite(node_count: usize) -> Self {
        Self {
            node_count,
            ..Self::default()
        }
    }

    pub fn adaptive(truncation_radius: f64) -> Self {
        Self {
            scheme: QuadratureScheme::AdaptiveInterval,
            truncation_radius,
            abs_tol: 1e-13,
            rel_tol: 1e-11,
            ..Self::default()
        }
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.node_count < 16 {
            return Err(Error::InvalidParams(format!(
                "node_count must be at least 16, got {}",
                self.node_count
            )));
        }
        if self.node_count > MAX_HERMITE_NODES {
            return Err(Error::InvalidParams(format!(
                "node_count must not exceed {MAX_HERMITE_NODES}, got {}",
                self.node_count
            )));
        }
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::InvalidParams("tolerances must be positive".into()));
        }
        if !(self.truncation_radius > 0.0 && self.truncation_radius.is_finite()) {
            return Err(Error::InvalidParams(
                "truncation_radius must be positive and finite".into(),
            ));
        }
        Ok(())
    }
}

/// Gauss–Hermite rule for `∫ f(x) exp(-x^2) dx`, nodes ascending.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussHermite {
    /// Builds the `n`-point rule. Nodes are the eigenvalues of the Jacobi
    /// matrix, polished by Newton steps on the orthonormal recurrence, which
    /// also yields the weights.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_HERMITE_NODES {
            return Err(Error::InvalidParams(format!(
                "Gauss-Hermite rule size must be in 1..={MAX_HERMITE_NODES}, got {n}"
            )));
        }
        let jacobi = DMatrix::from_fn(n, n, |i, j| {
            if i.abs_diff(j) == 1 {
                (i.max(j) as f64 / 2.0).sqrt()
            } else {
                0.0
            }
        });
        let mut x: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
        x.sort_by(f64::total_cmp);
        let mut w = vec![0.0; n];
        let half = n.div_ceil(2);
        // Work on the nonnegative half and mirror, so the rule is exactly
        // symmetric.
        for i in 0..half {
            let mut z = x[n - 1 - i].abs();
            let mut pp = recurrence(n, z).1;
            for _ in 0..3 {
                let (p, d) = recurrence(n, z);
                if !(d.is_finite() && d != 0.0) {
                    break;
                }
                let step = p / d;
                if step.abs() > 1e-6 * z.max(1.0) {
                    break;
                }
                z -= step;
                pp = recurrence(n, z).1;
            }
            if n % 2 == 1 && i == half - 1 {
                z = 0.0;
                pp = recurrence(n, 0.0).1;
            }
            x[n - 1 - i] = z;
            x[i] = -z;
            let wi = if pp.is_finite() { 2.0 / (pp * pp) } else { 0.0 };
            w[i] = wi;
            w[n - 1 - i] = wi;
        }
        if x.windows(2).any(|p| !(p[0] < p[1])) {
            return Err(Error::QuadratureFailure(format!(
                "Gauss-Hermite nodes for n = {n} are not distinct"
            )));
        }
        Ok(Self {
            nodes: x,
            weights: w,
        })
    }

    /// Shared rule of size `n`, built once per process.
    pub fn cached(n: usize) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussHermite>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rule) = cache.lock().expect("rule cache poisoned").get(&n) {
            return Ok(Arc::clone(rule));
        }
        let rule = Arc::new(Self::new(n)?);
        cache
            .lock()
            .expect("rule cache poisoned")
            .insert(n, Arc::clone(&rule));
        Ok(rule)
    }

    /// Nodes and weights for `∫ f(t) exp(-a t^2) dt`.
    pub fn for_weight(&self, a: f64) -> (Vec<f64>, Vec<f64>) {
        let s = a.sqrt();
        (
            self.nodes.iter().map(|x| x / s).collect(),
            self.weights.iter().map(|w| w / s).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Orthonormal Hermite value `p_n(z)` and `√(2n) p_{n-1}(z)`, which is
/// `p_n'(z)` at a root.
fn recurrence(n: usize, z: f64) -> (f64, f64) {
    const PI_M4: f64 = 0.751_125_544_464_942_5; // pi^(-1/4)
    let mut p1 = PI_M4;
    let mut p2 = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
    }
    (p1, (2.0 * n as f64).sqrt() * p2)
}

/// `∫ f(t) exp(-a t^2) dt` over the real line according to `spec`.
pub fn integrate_gaussian_weight<F>(spec: &QuadratureSpec, a: f64, f: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    match spec.scheme {
        QuadratureScheme::GaussHermite => {
            let rule_sum = |n: usize| -> Result<f64> {
                let (t, w) = GaussHermite::cached(n)?.for_weight(a);
                Ok(t.iter().zip(&w).map(|(&t, &w)| w * f(t)).sum())
            };
            refine_by_doubling(spec, rule_sum)
        }
        QuadratureScheme::AdaptiveInterval => {
            let r = spec.truncation_radius / a.sqrt();
            adaptive_gauss_kronrod(
                |t| f(t) * (-a * t * t).exp(),
                -r,
                r,
                spec.abs_tol,
                spec.rel_tol,
            )
        }
    }
}

/// Evaluates `rule(n)` for n = node_count, 2·node_count, … until two
/// successive values agree to `rel_tol` (or `abs_tol`), returning the finer.
pub fn refine_by_doubling<F>(spec: &QuadratureSpec, mut rule: F) -> Result<f64>
where
    F: FnMut(usize) -> Result<f64>,
{
    let mut n = spec.node_count;
    let mut prev = rule(n)?;
    while 2 * n <= MAX_HERMITE_NODES {
        n *= 2;
        let cur = rule(n)?;
        let diff = (cur - prev).abs();
        if diff <= spec.abs_tol || diff <= spec.rel_tol * cur.abs() {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureFailure(format!(
        "successive Gauss-Hermite rules disagree beyond rel_tol {} at {} nodes",
        spec.rel_tol, n
    )))
}

const GK_XK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const GK_WK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_0,
];
const G_WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let fc = f(c);
    let mut kron = fc * GK_WK[7];
    let mut gauss = fc * G_WG[3];
    for j in 0..7 {
        let dx = h * GK_XK[j];
        let s = f(c - dx) + f(c + dx);
        kron += GK_WK[j] * s;
        if j % 2 == 1 {
            gauss += G_WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

/// Globally adaptive 15-point Gauss–Kronrod integration on `[lo, hi]`.
pub fn adaptive_gauss_kronrod<F>(f: F, lo: f64, hi: f64, abs_tol: f64, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    const MAX_INTERVALS: usize = 4000;
    if lo == hi {
        return Ok(0.0);
    }
    let (v, e) = gk15(&f, lo, hi);
    let mut pieces = vec![(lo, hi, v, e)];
    let mut total = v;
    let mut err = e;
    while err > abs_tol.max(rel_tol * total.abs()) {
        if pieces.len() >= MAX_INTERVALS || !total.is_finite() {
            return Err(Error::QuadratureFailure(format!(
                "adaptive Gauss-Kronrod: error estimate {err:.3e} after {} intervals",
                pieces.len()
            )));
        }
        // bisect the interval with the largest error estimate
        let (idx, _) = pieces
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, p)| {
                if p.3 > best.1 {
                    (i, p.3)
                } else {
                    best
                }
            });
        let (a, b, pv, pe) = pieces.swap_remove(idx);
        let m = 0.5 * (a + b);
        let (lv, le) = gk15(&f, a, m);
        let (rv, re) = gk15(&f, m, b);
        total += lv + rv - pv;
        err += le + re - pe;
        pieces.push((a, m, lv, le));
        pieces.push((m, b, rv, re));
    }
    // resum in interval order so the result does not depend on bisection history
    pieces.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(pieces.iter().map(|p| p.2).sum())
}
