//! Scaled residuals and the test statistic `Z_{n,a}`.
//!
//! The statistic is the weighted L² distance
//! `n ∫ |n⁻¹ Σ (iY_j + t) exp(itY_j)|² exp(-a t²) dt`
//! between the two sides of the characteristic-function equation
//! `φ'(t) = -t φ(t)` that singles out the standard normal law.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{integrate_gaussian_weight, QuadratureSpec};

/// Raw observations. At least two finite values, not all equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        if values.len() < 2 {
            return Err(Error::TooFewObservations {
                min: 2,
                got: values.len(),
            });
        }
        let first = values[0];
        if values.iter().all(|&v| v == first) {
            return Err(Error::DegenerateSample);
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Mean and standard deviation with the `1/n` divisor.
    pub fn mean_and_sd(&self) -> (f64, f64) {
        let n = self.values.len() as f64;
        let mean = self.values.iter().sum::<f64>() / n;
        let var = self.values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
        (mean, var.sqrt())
    }
}

impl TryFrom<Vec<f64>> for Sample {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl TryFrom<&[f64]> for Sample {
    type Error = Error;

    fn try_from(values: &[f64]) -> Result<Self> {
        Self::new(values.to_vec())
    }
}

/// `Y_j = (x_j - x̄) / S_n` with `S_n² = n⁻¹ Σ (x_j - x̄)²`, so that
/// `Σ Y_j = 0` and `Σ Y_j² = n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledResiduals {
    y: Vec<f64>,
}

impl ScaledResiduals {
    pub fn values(&self) -> &[f64] {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    /// Residuals sorted ascending (order statistics `Y_(1) ≤ … ≤ Y_(n)`).
    pub fn sorted(&self) -> Vec<f64> {
        let mut s = self.y.clone();
        s.sort_by(f64::total_cmp);
        s
    }
}

/// Tuning parameter `a > 0` of the weight `w_a(t) = exp(-a t²)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct TuningParam(f64);

impl TuningParam {
    pub fn new(a: f64) -> Result<Self> {
        if a > 0.0 && a.is_finite() {
            Ok(Self(a))
        } else {
            Err(Error::InvalidTuning(format!("a must be positive and finite, got {a}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn weight(self, t: f64) -> f64 {
        (-self.0 * t * t).exp()
    }
}

impl TryFrom<f64> for TuningParam {
    type Error = Error;

    fn try_from(a: f64) -> Result<Self> {
        Self::new(a)
    }
}

impl From<TuningParam> for f64 {
    fn from(a: TuningParam) -> f64 {
        a.0
    }
}

pub fn scale_residuals(sample: &Sample) -> Result<ScaledResiduals> {
    scale_residuals_with(sample, VarianceDivisor::N)
}

/// Divisor of the sum of squares in the standard deviation that scales the
/// residuals. `Z_{n,a}` is defined with `n`; `n - 1` is offered for
/// comparison with software that standardises by the sample standard
/// deviation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarianceDivisor {
    #[default]
    #[serde(rename = "n")]
    N,
    #[serde(rename = "n-1")]
    NMinusOne,
}

impl VarianceDivisor {
    pub fn is_default(&self) -> bool {
        *self == VarianceDivisor::N
    }
}

pub fn scale_residuals_with(sample: &Sample, divisor: VarianceDivisor) -> Result<ScaledResiduals> {
    let (mean, mut sd) = sample.mean_and_sd();
    if divisor == VarianceDivisor::NMinusOne {
        let n = sample.len() as f64;
        sd *= (n / (n - 1.0)).sqrt();
    }
    if sd <= 0.0 || !sd.is_finite() {
        return Err(Error::DegenerateSample);
    }
    Ok(ScaledResiduals {
        y: sample.values().iter().map(|x| (x - mean) / sd).collect(),
    })
}

/// Closed form of `Z_{n,a}`.
///
/// Sums the `n` diagonal terms and twice the `j < k` terms in index order,
/// so the result is deterministic for a given input ordering. For large `a`
/// the terms cancel to order `a^{-5/2}`, and the rearrangement in
/// [`z_large_a`] is used instead.
pub fn z_statistic(res: &ScaledResiduals, a: TuningParam) -> f64 {
    let y = res.values();
    let (lo, hi) = y
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
    if (hi - lo).powi(2) <= a.get() {
        z_large_a(y, a.get())
    } else {
        z_direct(y, a.get())
    }
}

fn z_direct(y: &[f64], a: f64) -> f64 {
    let n = y.len();
    let inv_4a = 0.25 / a;
    let inv_4a2 = 0.25 / (a * a);
    let inv_2a = 0.5 / a;

    let diag: f64 = y.iter().map(|&v| inv_2a + v * v).sum();
    let mut off = 0.0;
    for j in 0..n {
        let yj = y[j];
        let mut row = 0.0;
        for &yk in &y[j + 1..] {
            let d2 = (yj - yk) * (yj - yk);
            row += ((2.0 * a - d2) * inv_4a2 - d2 * inv_2a + yj * yk) * (-d2 * inv_4a).exp();
        }
        off += row;
    }
    (PI / a).sqrt() * (diag + 2.0 * off) / n as f64
}

/// `e^t - Σ_{k<r} t^k/k!`, for `|t| ≤ 1`.
fn exp_tail(t: f64, r: u32) -> f64 {
    let mut term = (1..=r).fold(1.0f64, |acc, k| acc * t / k as f64);
    let mut sum = 0.0f64;
    let mut k = r;
    while term.abs() > 1e-17 * sum.abs() && k < r + 40 {
        sum += term;
        k += 1;
        term *= t / k as f64;
    }
    sum
}

/// `Z_{n,a}` for `max_{j,k} (Y_j - Y_k)² ≤ a`.
///
/// With `u = 1/(4a)`, `p = Y_jY_k` and `t = -u(Y_j - Y_k)²`, each summand
/// expands in powers of `u`. Because `ΣY_j = 0` and `ΣY_j² = n`, the `u⁰`
/// and `u¹` parts sum to zero and the `u²` parts sum to `3(ΣY_j³)²`. What
/// remains is `p e₃(t) + u(2 - 2d²) e₂(t) + 4ut e₁(t)` per pair, with
/// `e_r` the exponential series from order `r` on.
fn z_large_a(y: &[f64], a: f64) -> f64 {
    let n = y.len();
    let u = 0.25 / a;
    let s3: f64 = y.iter().map(|v| v * v * v).sum();
    let mut off = 0.0;
    for j in 0..n {
        let yj = y[j];
        let mut row = 0.0;
        for &yk in &y[j + 1..] {
            let d2 = (yj - yk) * (yj - yk);
            let t = -u * d2;
            row += yj * yk * exp_tail(t, 3)
                + u * (2.0 - 2.0 * d2) * exp_tail(t, 2)
                + 4.0 * u * t * exp_tail(t, 1);
        }
        off += row;
    }
    (PI / a).sqrt() * (3.0 * u * u * s3 * s3 + 2.0 * off) / n as f64
}

/// `Z_{n,a}` evaluated from its integral definition; used as an oracle for
/// [`z_statistic`].
pub fn z_statistic_integral(
    res: &ScaledResiduals,
    a: TuningParam,
    quad: &QuadratureSpec,
) -> Result<f64> {
    let y = res.values();
    let n = y.len() as f64;
    let integrand = |t: f64| {
        let (mut re, mut im) = (0.0, 0.0);
        for &v in y {
            let (s, c) = (t * v).sin_cos();
            // (i v + t)(cos + i sin)
            re += t * c - v * s;
            im += v * c + t * s;
        }
        (re * re + im * im) / n
    };
    integrate_gaussian_weight(quad, a.get(), integrand)
}

/// `16 a^{5/2} / (3 n √π) · Z_{n,a}`, which tends to the squared sample
/// skewness `(n⁻¹ Σ Y_j³)²` as `a → ∞`.
pub fn skewness_limit_diagnostic(res: &ScaledResiduals, a: TuningParam) -> f64 {
    let av = a.get();
    let n = res.len() as f64;
    16.0 * av.powf(2.5) / (3.0 * n * PI.sqrt()) * z_statistic(res, a)
}

/// `(n⁻¹ Σ Y_j³)²`.
pub fn squared_skewness(res: &ScaledResiduals) -> f64 {
    let n = res.len() as f64;
    let m3 = res.values().iter().map(|y| y.powi(3)).sum::<f64>() / n;
    m3 * m3
}
