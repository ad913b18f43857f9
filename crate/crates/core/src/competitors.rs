//! Competing tests of normality.
//!
//! HV, BE and BHEP are functions of the scaled residuals; BCMR, AD, SW and
//! JB are computed from the raw sample. All are affine invariant for
//! positive scale factors.

use std::collections::HashMap;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use libm::erfc;
use statrs::function::erf::erfc_inv;

use crate::error::{Error, Result};
use crate::quadrature::adaptive_gauss_kronrod;
use crate::statistic::{
    scale_residuals, scale_residuals_with, z_statistic, Sample, ScaledResiduals, TuningParam,
    VarianceDivisor,
};

/// Standard normal density.
pub fn norm_pdf(z: f64) -> f64 {
    (-0.5 * z * z).exp() / (2.0 * PI).sqrt()
}

/// Standard normal distribution function.
pub fn norm_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / SQRT_2)
}

/// Standard normal quantile; `±∞` at 0 and 1.
pub fn norm_quantile(p: f64) -> f64 {
    if p <= 0.0 {
        f64::NEG_INFINITY
    } else if p >= 1.0 {
        f64::INFINITY
    } else {
        -SQRT_2 * erfc_inv(2.0 * p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "kebab-case")]
pub enum CompetitorId {
    /// Anderson–Darling.
    Ad,
    /// Shapiro–Wilk.
    Sw,
    /// Jarque–Bera.
    Jb,
    /// Henze–Visagie with `gamma > 2`.
    Hv { gamma: f64 },
    /// Betsch–Ebner with fixed `a > 0`.
    Be { a: f64 },
    /// Baringhaus–Henze–Epps–Pulley with `beta > 0`.
    Bhep { beta: f64 },
    /// del Barrio–Cuesta-Albertos–Matrán–Rodríguez-Rodríguez.
    Bcmr,
}

impl CompetitorId {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CompetitorId::Hv { gamma } if !(gamma > 2.0 && gamma.is_finite()) => Err(
                Error::InvalidTuning(format!("HV needs gamma > 2, got {gamma}")),
            ),
            CompetitorId::Be { a } if !(a > 0.0 && a.is_finite()) => {
                Err(Error::InvalidTuning(format!("BE needs a > 0, got {a}")))
            }
            CompetitorId::Bhep { beta } if !(beta > 0.0 && beta.is_finite()) => Err(
                Error::InvalidTuning(format!("BHEP needs beta > 0, got {beta}")),
            ),
            _ => Ok(()),
        }
    }

    /// SW rejects for small values; every other statistic for large ones.
    pub fn rejects_large(&self) -> bool {
        !matches!(self, CompetitorId::Sw)
    }

    pub fn compute(&self, sample: &Sample) -> Result<f64> {
        self.validate()?;
        match *self {
            CompetitorId::Ad => anderson_darling(sample),
            CompetitorId::Sw => shapiro_wilk(sample),
            CompetitorId::Jb => jarque_bera(sample),
            CompetitorId::Hv { gamma } => hv_statistic(&scale_residuals(sample)?, gamma),
            CompetitorId::Be { a } => be_statistic(&scale_residuals(sample)?, a),
            CompetitorId::Bhep { beta } => bhep_statistic(&scale_residuals(sample)?, beta),
            CompetitorId::Bcmr => bcmr_statistic(sample),
        }
    }
}

impl fmt::Display for CompetitorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CompetitorId::Ad => write!(f, "AD"),
            CompetitorId::Sw => write!(f, "SW"),
            CompetitorId::Jb => write!(f, "JB"),
            CompetitorId::Hv { gamma } => write!(f, "HV({gamma})"),
            CompetitorId::Be { a } => write!(f, "BE({a})"),
            CompetitorId::Bhep { beta } => write!(f, "BHEP({beta})"),
            CompetitorId::Bcmr => write!(f, "BCMR"),
        }
    }
}

/// `Z_{n,a}` or one of the competitors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "statistic", rename_all = "kebab-case")]
pub enum StatisticId {
    Z {
        a: TuningParam,
        #[serde(default, skip_serializing_if = "VarianceDivisor::is_default")]
        divisor: VarianceDivisor,
    },
    Competitor { test: CompetitorId },
}

impl StatisticId {
    pub fn z(a: f64) -> Result<Self> {
        Ok(StatisticId::Z {
            a: TuningParam::new(a)?,
            divisor: VarianceDivisor::N,
        })
    }

    pub fn rejects_large(&self) -> bool {
        match self {
            StatisticId::Z { .. } => true,
            StatisticId::Competitor { test } => test.rejects_large(),
        }
    }

    pub fn compute(&self, sample: &Sample) -> Result<f64> {
        match self {
            StatisticId::Z { a, divisor } => {
                Ok(z_statistic(&scale_residuals_with(sample, *divisor)?, *a))
            }
            StatisticId::Competitor { test } => test.compute(sample),
        }
    }
}

impl From<CompetitorId> for StatisticId {
    fn from(test: CompetitorId) -> Self {
        StatisticId::Competitor { test }
    }
}

impl fmt::Display for StatisticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatisticId::Z { a, divisor: VarianceDivisor::N } => write!(f, "Z({})", a.get()),
            StatisticId::Z { a, divisor: VarianceDivisor::NMinusOne } => {
                write!(f, "Z({},n-1)", a.get())
            }
            StatisticId::Competitor { test } => test.fmt(f),
        }
    }
}

impl FromStr for StatisticId {
    type Err = Error;

    /// `Z(1)` (or `Z(1,n-1)` for residuals scaled by the sample standard
    /// deviation), `AD`, `SW`, `JB`, `HV(2.5)`, `BE(1)`, `BHEP(1)` (or `BHEP`
    /// for β = 1), `BCMR`; case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("unknown statistic {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        let (name, arg, divisor) = match t.find('(') {
            Some(i) => {
                let inner = t[i + 1..].strip_suffix(')').ok_or_else(bad)?;
                let (inner, divisor) = match inner.strip_suffix(",n-1") {
                    Some(rest) => (rest, VarianceDivisor::NMinusOne),
                    None => (inner, VarianceDivisor::N),
                };
                (&t[..i], Some(inner.parse::<f64>().map_err(|_| bad())?), divisor)
            }
            None => (t.as_str(), None, VarianceDivisor::N),
        };
        if name != "z" && divisor != VarianceDivisor::N {
            return Err(bad());
        }
        let id = match (name, arg) {
            ("z", Some(a)) => {
                return Ok(StatisticId::Z {
                    a: TuningParam::new(a)?,
                    divisor,
                })
            }
            ("ad", None) => CompetitorId::Ad,
            ("sw", None) => CompetitorId::Sw,
            ("jb", None) => CompetitorId::Jb,
            ("bcmr", None) => CompetitorId::Bcmr,
            ("hv", Some(gamma)) => CompetitorId::Hv { gamma },
            ("be", Some(a)) => CompetitorId::Be { a },
            ("bhep", beta) => CompetitorId::Bhep {
                beta: beta.unwrap_or(1.0),
            },
            _ => return Err(bad()),
        };
        id.validate()?;
        Ok(id.into())
    }
}

/// Henze–Visagie `HV_γ`, `γ > 2`:
/// `√(π/γ) n⁻¹ Σ_{j,k} exp((Y_j+Y_k)²/(4γ)) [Y_jY_k + (Y_j+Y_k)²(1/(4γ²) - 1/(2γ)) + 1/(2γ)]`.
pub fn hv_statistic(res: &ScaledResiduals, gamma: f64) -> Result<f64> {
    CompetitorId::Hv { gamma }.validate()?;
    let y = res.values();
    let n = y.len();
    let c = 0.25 / (gamma * gamma) - 0.5 / gamma;
    let term = |yj: f64, yk: f64| {
        let s2 = (yj + yk) * (yj + yk);
        (s2 / (4.0 * gamma)).exp() * (yj * yk + s2 * c + 0.5 / gamma)
    };
    let mut diag = 0.0;
    let mut off = 0.0;
    for j in 0..n {
        diag += term(y[j], y[j]);
        for k in j + 1..n {
            off += term(y[j], y[k]);
        }
    }
    Ok((PI / gamma).sqrt() * (diag + 2.0 * off) / n as f64)
}

/// Betsch–Ebner statistic with fixed tuning parameter `a > 0`; the pair sum
/// runs over order statistics.
pub fn be_statistic(res: &ScaledResiduals, a: f64) -> Result<f64> {
    CompetitorId::Be { a }.validate()?;
    let y = res.sorted();
    let n = y.len();
    let sa = a.sqrt();
    // a/√(2πa)
    let c = (a / (2.0 * PI)).sqrt();
    let tail: Vec<f64> = y.iter().map(|&v| norm_cdf(-v / sa)).collect();
    let dens: Vec<f64> = y.iter().map(|&v| c * (-v * v / (2.0 * a)).exp()).collect();

    let mut pairs = 0.0;
    for k in 1..n {
        let yk = y[k];
        let mut row = 0.0;
        for &yj in &y[..k] {
            row += tail[k] * ((yj * yj - 1.0) * (yk * yk - 1.0) + a * yj * yk)
                + dens[k] * (-yj * yj * yk + yk + yj);
        }
        pairs += row;
    }
    let single: f64 = (0..n)
        .map(|j| {
            let v = y[j];
            let v2 = v * v;
            tail[j] * (v2 * v2 + (a - 2.0) * v2 + 1.0) + dens[j] * (2.0 * v - v2 * v)
        })
        .sum();
    let nf = n as f64;
    Ok(2.0 / nf * pairs + single / nf)
}

/// BHEP statistic with `β > 0`:
/// `n⁻¹ Σ_{j,k} e^{-β²(Y_j-Y_k)²/2} - 2(1+β²)^{-1/2} Σ_j e^{-β²Y_j²/(2(1+β²))} + n(1+2β²)^{-1/2}`.
pub fn bhep_statistic(res: &ScaledResiduals, beta: f64) -> Result<f64> {
    CompetitorId::Bhep { beta }.validate()?;
    let y = res.values();
    let n = y.len();
    let b2 = beta * beta;
    let mut off = 0.0;
    for j in 0..n {
        for k in j + 1..n {
            off += (-0.5 * b2 * (y[j] - y[k]).powi(2)).exp();
        }
    }
    let nf = n as f64;
    let double = (nf + 2.0 * off) / nf;
    let single: f64 = y.iter().map(|v| (-b2 * v * v / (2.0 * (1.0 + b2))).exp()).sum();
    Ok(double - 2.0 / (1.0 + b2).sqrt() * single + nf / (1.0 + 2.0 * b2).sqrt())
}

/// `∫_{1/(n+1)}^{n/(n+1)} t(1-t)/φ(Φ⁻¹(t))² dt`, computed as
/// `∫ Φ(z)(1-Φ(z))/φ(z) dz` between the corresponding normal quantiles.
fn bcmr_correction(n: usize) -> Result<f64> {
    static CACHE: OnceLock<Mutex<HashMap<usize, f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().expect("cache poisoned").get(&n) {
        return Ok(v);
    }
    let nf = n as f64;
    let hi = norm_quantile(nf / (nf + 1.0));
    // symmetric integrand
    let half = adaptive_gauss_kronrod(
        |z| norm_cdf(z) * norm_cdf(-z) / norm_pdf(z),
        0.0,
        hi,
        1e-14,
        1e-12,
    )?;
    let v = 2.0 * half;
    cache.lock().expect("cache poisoned").insert(n, v);
    Ok(v)
}

/// BCMR statistic
/// `n(1 - (Σ_k X_(k) ∫_{(k-1)/n}^{k/n} Φ⁻¹)² / S_n²) - ∫_{1/(n+1)}^{n/(n+1)} t(1-t)/φ(Φ⁻¹(t))² dt`
/// with `S_n²` the variance using divisor `n`.
pub fn bcmr_statistic(sample: &Sample) -> Result<f64> {
    let n = sample.len();
    if n < 3 {
        return Err(Error::TooFewObservations { min: 3, got: n });
    }
    let mut x = sample.values().to_vec();
    x.sort_by(f64::total_cmp);
    let (mean, sd) = sample.mean_and_sd();
    if !(sd > 0.0) {
        return Err(Error::DegenerateSample);
    }
    let nf = n as f64;
    // ∫_{(k-1)/n}^{k/n} Φ⁻¹ = φ(Φ⁻¹((k-1)/n)) - φ(Φ⁻¹(k/n)), with φ(±∞) = 0.
    let phi_q: Vec<f64> = (0..=n)
        .map(|k| {
            if k == 0 || k == n {
                0.0
            } else {
                norm_pdf(norm_quantile(k as f64 / nf))
            }
        })
        .collect();
    // Centring first leaves the sum unchanged (the weights sum to zero) but
    // avoids cancellation.
    let cross: f64 = (1..=n)
        .map(|k| (x[k - 1] - mean) / sd * (phi_q[k - 1] - phi_q[k]))
        .sum();
    Ok(nf * (1.0 - cross * cross) - bcmr_correction(n)?)
}

fn check_classical_size(n: usize, max: usize) -> Result<()> {
    if n < 3 || n > max {
        Err(Error::UnsupportedSampleSize { n, min: 3, max })
    } else {
        Ok(())
    }
}

/// Anderson–Darling `A²` with estimated mean and standard deviation
/// (divisor `n - 1`).
pub fn anderson_darling(sample: &Sample) -> Result<f64> {
    let n = sample.len();
    check_classical_size(n, usize::MAX)?;
    let nf = n as f64;
    let mut x = sample.values().to_vec();
    x.sort_by(f64::total_cmp);
    let mean = x.iter().sum::<f64>() / nf;
    let sd = (x.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (nf - 1.0)).sqrt();
    let z: Vec<f64> = x.iter().map(|v| (v - mean) / sd).collect();
    let log_cdf = |z: f64| norm_cdf(z).ln();
    let h: f64 = (0..n)
        .map(|i| (2.0 * i as f64 + 1.0) * (log_cdf(z[i]) + log_cdf(-z[n - 1 - i])))
        .sum();
    Ok(-nf - h / nf)
}

const SW_C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056];
const SW_C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];

fn poly(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

/// Shapiro–Wilk coefficients `a_1 ≥ … ≥ a_{⌊n/2⌋} > 0` from Royston's
/// approximation, normalised so that the full antisymmetric vector has unit
/// length.
pub fn shapiro_wilk_coefficients(n: usize) -> Result<Vec<f64>> {
    check_classical_size(n, 5000)?;
    let half = n / 2;
    if n == 3 {
        return Ok(vec![0.5f64.sqrt()]);
    }
    let nf = n as f64;
    let m: Vec<f64> = (1..=half)
        .map(|i| norm_quantile((i as f64 - 0.375) / (nf + 0.25)))
        .collect();
    let summ2 = 2.0 * m.iter().map(|v| v * v).sum::<f64>();
    let ssumm2 = summ2.sqrt();
    let rsn = 1.0 / nf.sqrt();
    let a1 = poly(&SW_C1, rsn) - m[0] / ssumm2;
    let mut a = vec![0.0; half];
    a[0] = a1;
    let (first, fac) = if n > 5 {
        let a2 = -m[1] / ssumm2 + poly(&SW_C2, rsn);
        a[1] = a2;
        let fac = ((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1])
            / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2))
            .sqrt();
        (2, fac)
    } else {
        let fac = ((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1)).sqrt();
        (1, fac)
    };
    for i in first..half {
        a[i] = -m[i] / fac;
    }
    Ok(a)
}

/// Shapiro–Wilk `W = (Σ a_i (x_(n+1-i) - x_(i)))² / Σ (x_i - x̄)²`,
/// `3 ≤ n ≤ 5000`.
pub fn shapiro_wilk(sample: &Sample) -> Result<f64> {
    let n = sample.len();
    let a = shapiro_wilk_coefficients(n)?;
    let mut x = sample.values().to_vec();
    x.sort_by(f64::total_cmp);
    let mean = x.iter().sum::<f64>() / n as f64;
    let ss: f64 = x.iter().map(|v| (v - mean).powi(2)).sum();
    if !(ss > 0.0) {
        return Err(Error::DegenerateSample);
    }
    let num: f64 = a
        .iter()
        .enumerate()
        .map(|(i, ai)| ai * (x[n - 1 - i] - x[i]))
        .sum();
    Ok((num * num / ss).min(1.0))
}

/// Jarque–Bera `n(b₁/6 + (b₂-3)²/24)` with moment estimators using
/// divisor `n`.
pub fn jarque_bera(sample: &Sample) -> Result<f64> {
    let n = sample.len();
    check_classical_size(n, usize::MAX)?;
    let nf = n as f64;
    let x = sample.values();
    let mean = x.iter().sum::<f64>() / nf;
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for v in x {
        let d = v - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= nf;
    m3 /= nf;
    m4 /= nf;
    let b1 = m3 * m3 / (m2 * m2 * m2);
    let b2 = m4 / (m2 * m2);
    Ok(nf * (b1 / 6.0 + (b2 - 3.0).powi(2) / 24.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(v: &[f64]) -> ScaledResiduals {
        scale_residuals(&Sample::new(v.to_vec()).unwrap()).unwrap()
    }

    fn sample(v: &[f64]) -> Sample {
        Sample::new(v.to_vec()).unwrap()
    }

    #[test]
    fn normal_helpers() {
        assert!((norm_cdf(1.0) - 0.841_344_746_068_542_9).abs() < 1e-15);
        assert!((norm_quantile(0.975) - 1.959_963_984_540_054).abs() < 1e-12);
        assert!((norm_quantile(0.001) + 3.090_232_306_167_813_5).abs() < 1e-11);
    }

    #[test]
    fn hv_two_point() {
        let e = (0.4f64).exp();
        let expected = 0.5 * (PI / 2.5).sqrt() * (2.0 * 0.56 * e - 1.6);
        let v = hv_statistic(&res(&[-1.0, 1.0]), 2.5).unwrap();
        assert!((v - expected).abs() < 1e-14);
        assert!((v - 0.03971).abs() < 5e-6, "{v}");
        assert!(matches!(hv_statistic(&res(&[-1.0, 1.0]), 2.0), Err(Error::InvalidTuning(_))));
    }

    #[test]
    fn be_two_point() {
        // Direct substitution with Y = (-1, 1), a = 1.
        let p1 = 0.841_344_746_068_542_9; // Φ(1)
        let c = (1.0 / (2.0 * PI)).sqrt();
        let e = (-0.5f64).exp();
        // pair j = -1, k = 1: (1-Φ(1))(0 - 1) + c e^{-1/2}(-1 + 1 - 1)
        let pair = (1.0 - p1) * (-1.0) + c * e * (-1.0);
        // singles: (1-Φ(∓1))(1 - 1 + 1) + c e^{-1/2}(±(2 - 1))
        let single = p1 + c * e * (-1.0) + (1.0 - p1) + c * e;
        let expected = 2.0 / 2.0 * pair + single / 2.0;
        let v = be_statistic(&res(&[-1.0, 1.0]), 1.0).unwrap();
        assert!((v - expected).abs() < 1e-14, "{v} vs {expected}");
    }

    #[test]
    fn bhep_two_point() {
        let expected = 0.5 * (2.0 + 2.0 * (-2.0f64).exp())
            - 2.0 * 2f64.sqrt() * (-0.25f64).exp()
            + 2.0 / 3f64.sqrt();
        let v = bhep_statistic(&res(&[-1.0, 1.0]), 1.0).unwrap();
        assert!((v - expected).abs() < 1e-14);
        assert!((v - 0.087254).abs() < 1e-6, "{v}");
    }

    #[test]
    fn bhep_matches_l2_integral() {
        // n ∫ |φ_n(t) - e^{-t²/2}|² φ_β(t) dt with the N(0, β²) density as weight.
        let y = res(&[0.3, -1.2, 2.5, 0.9, -0.4, 1.7, -0.1]);
        let v = y.values();
        let n = v.len() as f64;
        let beta: f64 = 1.0;
        let f = |t: f64| {
            let (mut re, mut im) = (0.0, 0.0);
            for &x in v {
                re += (t * x).cos();
                im += (t * x).sin();
            }
            let re = re / n - (-0.5 * t * t).exp();
            let im = im / n;
            (re * re + im * im) * (-0.5 * t * t / (beta * beta)).exp() / (beta * (2.0 * PI).sqrt())
        };
        let integral = n * (-20..20)
            .map(|k| adaptive_gauss_kronrod(f, k as f64, k as f64 + 1.0, 1e-17, 1e-12).unwrap())
            .sum::<f64>();
        let closed = bhep_statistic(&y, beta).unwrap();
        assert!((integral - closed).abs() < 1e-9 * closed, "{integral} vs {closed}");
    }

    #[test]
    fn bcmr_three_points() {
        let q1 = norm_pdf(norm_quantile(1.0 / 3.0));
        let q2 = norm_pdf(norm_quantile(2.0 / 3.0));
        // X = (-1, 0, 1), S_n² = 2/3.
        let cross = (-1.0 * (0.0 - q1) + 0.0 + 1.0 * (q2 - 0.0)) / (2.0f64 / 3.0).sqrt();
        // Correction integral by quadrature in t.
        let corr = adaptive_gauss_kronrod(
            |t| t * (1.0 - t) / norm_pdf(norm_quantile(t)).powi(2),
            0.25,
            0.75,
            1e-15,
            1e-12,
        )
        .unwrap();
        let expected = 3.0 * (1.0 - cross * cross) - corr;
        let v = bcmr_statistic(&sample(&[-1.0, 0.0, 1.0])).unwrap();
        assert!((v - expected).abs() < 1e-10, "{v} vs {expected}");
    }

    #[test]
    fn sw_three_points() {
        let w = shapiro_wilk(&sample(&[-1.0, 0.0, 1.0])).unwrap();
        assert!((w - 1.0).abs() < 1e-15);
        // a₁ = 1/√2: (x₃ - x₁)²/2 / SS
        let x = [0.0, 1.0, 5.0];
        let w = shapiro_wilk(&sample(&x)).unwrap();
        let ss = 0.0f64 + [0.0, 1.0, 5.0].iter().map(|v: &f64| (v - 2.0).powi(2)).sum::<f64>();
        assert!((w - 25.0 / 2.0 / ss).abs() < 1e-14);
    }

    #[test]
    fn sw_coefficients_are_normalised() {
        for n in [3, 4, 5, 6, 11, 20, 50, 100, 1000] {
            let a = shapiro_wilk_coefficients(n).unwrap();
            let ss: f64 = 2.0 * a.iter().map(|v| v * v).sum::<f64>();
            assert!((ss - 1.0).abs() < 1e-12, "n = {n}: {ss}");
            assert!(a.windows(2).all(|p| p[0] > p[1]), "n = {n}");
        }
    }

    #[test]
    fn sw_reference_n20() {
        // Royston's approximation at n = 20 reproduces the exact tabulated
        // leading coefficient 0.4734 to about three decimals.
        let a = shapiro_wilk_coefficients(20).unwrap();
        assert!((a[0] - 0.4734).abs() < 2e-3, "{}", a[0]);
    }

    #[test]
    fn sw_size_limits() {
        assert!(matches!(
            shapiro_wilk(&Sample::new((0..5001).map(|i| i as f64).collect()).unwrap()),
            Err(Error::UnsupportedSampleSize { .. })
        ));
        assert!(matches!(
            shapiro_wilk(&sample(&[1.0, 2.0])),
            Err(Error::UnsupportedSampleSize { .. })
        ));
    }

    #[test]
    fn jb_symmetric_sample() {
        let s = sample(&[-2.0, -1.0, 0.0, 1.0, 2.0]);
        // b₂ = (2·16 + 2)/5 / 2² = 1.7
        let v = jarque_bera(&s).unwrap();
        assert!((v - 5.0 * (1.7f64 - 3.0).powi(2) / 24.0).abs() < 1e-14);
    }

    #[test]
    fn ad_reference() {
        // Hand-checked against the textbook formula for a small sample.
        let x = [-1.5, -0.4, 0.1, 0.7, 2.2];
        let n = 5.0;
        let mean = x.iter().sum::<f64>() / n;
        let sd = (x.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt();
        let p: Vec<f64> = x.iter().map(|v| norm_cdf((v - mean) / sd)).collect();
        let mut s = 0.0;
        for i in 0..5 {
            s += (2.0 * i as f64 + 1.0) * (p[i].ln() + (1.0 - p[4 - i]).ln());
        }
        let expected = -n - s / n;
        assert!((anderson_darling(&sample(&x)).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn statistic_names() {
        for s in ["Z(1)", "AD", "SW", "JB", "HV(2.5)", "BE(1)", "BHEP(1)", "BCMR"] {
            let id: StatisticId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert_eq!("bhep".parse::<StatisticId>().unwrap().to_string(), "BHEP(1)");
        assert!("HV(1.5)".parse::<StatisticId>().is_err());
        assert!("foo".parse::<StatisticId>().is_err());
    }

    #[test]
    fn rejection_directions() {
        assert!(!StatisticId::from(CompetitorId::Sw).rejects_large());
        assert!(StatisticId::from(CompetitorId::Bcmr).rejects_large());
        assert!(StatisticId::z(1.0).unwrap().rejects_large());
    }
}
