//! Limiting null distribution of `Z_{n,a}`.
//!
//! Under normality `Z_{n,a}` converges to `‖W‖²` for a centred Gaussian
//! process `W` with covariance kernel [`kernel_kz`]. Its cumulants are
//! `κ_m = 2^{m-1}(m-1)! ∫ h_m(t,t) w_a(t) dt`, where `h_m` is the m-fold
//! iterated kernel. This module evaluates them in closed form and, as an
//! independent check, as traces of powers of the discretised operator.

pub mod closed_form;
pub mod delta;

pub use delta::{delta_discrepancy, DeltaMethod, DeltaResult};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{refine_by_doubling, GaussHermite, QuadratureScheme, QuadratureSpec};
use crate::statistic::TuningParam;

/// Covariance kernel of the limiting Gaussian process.
pub fn kernel_kz(s: f64, t: f64) -> f64 {
    (s * t + 1.0) * (-(s - t).powi(2) / 2.0).exp()
        - (2.0 * s * t + 1.0) * (-(s * s + t * t) / 2.0).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CumulantSource {
    ClosedForm,
    QuadratureOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CumulantSet {
    pub a: f64,
    pub kappa: [f64; 4],
    pub source: CumulantSource,
}

impl CumulantSet {
    pub fn closed_form(a: TuningParam) -> Self {
        let av = a.get();
        Self {
            a: av,
            kappa: [
                closed_form::kappa1(av),
                closed_form::kappa2(av),
                closed_form::kappa3(av),
                closed_form::kappa4(av),
            ],
            source: CumulantSource::ClosedForm,
        }
    }

    pub fn oracle(a: TuningParam, quad: &QuadratureSpec) -> Result<Self> {
        let mut kappa = [0.0; 4];
        for (m, k) in kappa.iter_mut().enumerate() {
            *k = cumulant_oracle(a, m + 1, quad)?;
        }
        Ok(Self {
            a: a.get(),
            kappa,
            source: CumulantSource::QuadratureOracle,
        })
    }

    pub fn moment_summary(&self) -> Result<MomentSummary> {
        let [k1, k2, k3, k4] = self.kappa;
        MomentSummary::new(k1, k2, k3 / k2.powf(1.5), 3.0 + k4 / (k2 * k2))
    }
}

/// Mean, variance, skewness `√β₁` and kurtosis `β₂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentSummary {
    pub mean: f64,
    pub variance: f64,
    pub sqrt_beta1: f64,
    pub beta2: f64,
}

impl MomentSummary {
    pub fn new(mean: f64, variance: f64, sqrt_beta1: f64, beta2: f64) -> Result<Self> {
        if !(variance > 0.0) || !variance.is_finite() || !mean.is_finite() {
            return Err(Error::InvalidParams(format!(
                "variance must be positive and finite, got {variance}"
            )));
        }
        let bound = 1.0 + sqrt_beta1 * sqrt_beta1;
        if !(beta2 > bound) {
            return Err(Error::InfeasibleMoments { beta2, bound });
        }
        Ok(Self {
            mean,
            variance,
            sqrt_beta1,
            beta2,
        })
    }

    pub fn beta1(&self) -> f64 {
        self.sqrt_beta1 * self.sqrt_beta1
    }
}

/// `κ_m(a)` from the closed-form expressions, `m ∈ 1..=4`.
pub fn cumulant_closed_form(a: TuningParam, m: usize) -> Result<f64> {
    let av = a.get();
    match m {
        1 => Ok(closed_form::kappa1(av)),
        2 => Ok(closed_form::kappa2(av)),
        3 => Ok(closed_form::kappa3(av)),
        4 => Ok(closed_form::kappa4(av)),
        _ => Err(Error::InvalidParams(format!("cumulant order must be 1..=4, got {m}"))),
    }
}

/// `K_Z` sampled on an `n`-point Gauss–Hermite grid for weight `w_a`, with
/// the square roots of the weights folded in symmetrically, so that the
/// eigenvalues approximate those of the integral operator.
pub fn weighted_kernel_matrix(a: TuningParam, n: usize) -> Result<DMatrix<f64>> {
    let (t, w) = GaussHermite::cached(n)?.for_weight(a.get());
    let sw: Vec<f64> = w.iter().map(|w| w.sqrt()).collect();
    Ok(DMatrix::from_fn(n, n, |i, j| sw[i] * kernel_kz(t[i], t[j]) * sw[j]))
}

/// `tr(M^m)` for `m = 1..=4`.
fn matrix_power_traces(m: &DMatrix<f64>) -> [f64; 4] {
    let m2 = m * m;
    [
        m.trace(),
        m.iter().map(|v| v * v).sum(),
        m2.iter().zip(m.iter()).map(|(x, y)| x * y).sum(),
        m2.iter().map(|v| v * v).sum(),
    ]
}

fn cumulant_scale(m: usize) -> f64 {
    // 2^{m-1} (m-1)!
    let fact: f64 = (1..m).map(|k| k as f64).product();
    2f64.powi(m as i32 - 1) * fact
}

/// `κ_m(a)` via the trace of the m-th power of the Nyström discretisation
/// of the covariance operator; node counts are doubled until two successive
/// rules agree to `quad.rel_tol`.
pub fn cumulant_oracle(a: TuningParam, m: usize, quad: &QuadratureSpec) -> Result<f64> {
    if !(1..=4).contains(&m) {
        return Err(Error::InvalidParams(format!("cumulant order must be 1..=4, got {m}")));
    }
    quad.validate()?;
    if quad.scheme != QuadratureScheme::GaussHermite {
        return Err(Error::InvalidParams(
            "the operator discretisation needs a fixed-node Gauss-Hermite rule".into(),
        ));
    }
    let scale = cumulant_scale(m);
    refine_by_doubling(quad, |n| {
        let mat = weighted_kernel_matrix(a, n)?;
        Ok(scale * matrix_power_traces(&mat)[m - 1])
    })
}

pub fn moment_summary(a: TuningParam) -> Result<MomentSummary> {
    CumulantSet::closed_form(a).moment_summary()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_gaussian_weight;

    fn tp(a: f64) -> TuningParam {
        TuningParam::new(a).unwrap()
    }

    #[test]
    fn kernel_values() {
        assert_eq!(kernel_kz(0.0, 0.0), 0.0);
        let v = kernel_kz(1.0, 1.0);
        assert!((v - (2.0 - 3.0 * (-1.0f64).exp())).abs() < 1e-15);
        assert!((v - 0.896362).abs() < 1e-6);
    }

    #[test]
    fn kernel_diagonal_nonnegative() {
        for i in 0..=2000 {
            let t = -10.0 + 0.01 * i as f64;
            assert!(kernel_kz(t, t) >= 0.0, "K(t,t) < 0 at {t}");
        }
    }

    #[test]
    fn kernel_matrix_is_psd() {
        for a in [0.25, 1.0, 3.0] {
            let m = weighted_kernel_matrix(tp(a), 96).unwrap();
            let eig = m.symmetric_eigenvalues();
            let min = eig.iter().cloned().fold(f64::INFINITY, f64::min);
            assert!(min >= -1e-8, "a = {a}: min eigenvalue {min}");
        }
    }

    #[test]
    fn kappa1_equals_trace_integral() {
        for a in [0.25, 0.5, 1.0, 3.0, 10.0] {
            let q = QuadratureSpec::adaptive(10.0);
            let direct = integrate_gaussian_weight(&q, a, |t| kernel_kz(t, t)).unwrap();
            let closed = cumulant_closed_form(tp(a), 1).unwrap();
            assert!((direct - closed).abs() / closed < 1e-8, "a = {a}");
        }
    }

    #[test]
    fn closed_form_matches_oracle() {
        let q = QuadratureSpec::default();
        for a in [0.25, 0.5, 1.0, 3.0] {
            for m in 1..=4 {
                let c = cumulant_closed_form(tp(a), m).unwrap();
                let o = cumulant_oracle(tp(a), m, &q).unwrap();
                assert!((c - o).abs() / c < 1e-8, "a = {a}, m = {m}: {c} vs {o}");
            }
        }
    }

    #[test]
    fn kappa2_equals_double_integral() {
        // 2 ∫∫ K(s,t)² w(s) w(t) ds dt by a tensor adaptive rule.
        let a = 0.5;
        let q = QuadratureSpec::adaptive(10.0);
        let double = integrate_gaussian_weight(&q, a, |s| {
            integrate_gaussian_weight(&q, a, |t| kernel_kz(s, t).powi(2)).unwrap()
        })
        .unwrap();
        let closed = cumulant_closed_form(tp(a), 2).unwrap();
        assert!((2.0 * double - closed).abs() / closed < 1e-7, "{} vs {closed}", 2.0 * double);
    }

    #[test]
    fn table_one_row_a1() {
        let s = moment_summary(tp(1.0)).unwrap();
        let round4 = |x: f64| (x * 1e4).round() / 1e4;
        assert_eq!(round4(s.mean), 0.7787);
        assert_eq!(round4(s.variance), 0.5430);
        assert_eq!(round4(s.sqrt_beta1), 2.1780);
        assert_eq!(round4(s.beta2), 10.4822);
    }

    #[test]
    fn cumulants_positive() {
        for a in [0.05, 0.1, 0.3, 1.0, 2.0, 7.0, 20.0] {
            let c = CumulantSet::closed_form(tp(a));
            assert!(c.kappa.iter().all(|&k| k > 0.0), "a = {a}: {:?}", c.kappa);
        }
    }

    #[test]
    fn order_out_of_range() {
        assert!(cumulant_closed_form(tp(1.0), 5).is_err());
        assert!(cumulant_oracle(tp(1.0), 0, &QuadratureSpec::default()).is_err());
        assert!(cumulant_oracle(tp(1.0), 2, &QuadratureSpec::adaptive(9.0)).is_err());
    }

    #[test]
    fn infeasible_moment_summary() {
        assert!(matches!(
            MomentSummary::new(0.0, 1.0, 1.0, 1.5),
            Err(Error::InfeasibleMoments { .. })
        ));
    }
}
