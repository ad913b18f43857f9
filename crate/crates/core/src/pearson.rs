//! Pearson-system approximation of a distribution given its first four
//! moments.
//!
//! A Pearson density solves `f'(x)/f(x) = -(x + c1)/(c0 + c1 x + c2 x²)`
//! with `x` measured from the mean. The criterion
//! `κ = β₁(β₂+3)² / (4(4β₂-3β₁)(2β₂-3β₁-6))` picks the family: `κ < 0` is
//! type I (beta), `0 < κ < 1` type IV, `κ = 1` type V (inverse gamma),
//! `κ > 1` type VI (beta prime); `2β₂ - 3β₁ - 6 = 0` is type III (gamma);
//! symmetric laws are type II (`β₂ < 3`), VII (`β₂ > 3`) or normal.
//!
//! Fits are carried out for the standardised variable with nonnegative
//! skewness; negative skewness is handled by reflection.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use serde::{Deserialize, Serialize};
use statrs::function::beta::{beta_reg, ln_beta};
use libm::erfc;
use statrs::function::gamma::{gamma_lr, gamma_ur, ln_gamma};

use crate::error::{Error, Result};
use crate::null::MomentSummary;
use crate::quadrature::adaptive_gauss_kronrod;

/// Below this, `β₁` and `β₂ - 3` are treated as zero.
const BOUNDARY_TOL: f64 = 1e-10;
/// Relative tolerance for the type IV normalising integral.
const NORMALISATION_REL_TOL: f64 = 1e-10;
/// Quantiles at or below this level sit where the fit is least reliable.
pub const LOWER_TAIL_UNRELIABLE: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PearsonFamily {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    #[serde(rename = "normal")]
    Normal,
}

/// Standardised law `W`; the fitted variable is `mean + sign·σ·W`.
///
/// Every variant carries an affine map `W = loc + scale·Y` from its
/// canonical variate `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PearsonParams {
    /// `Y ~ Beta(a, b)` on `[0, 1]`.
    Beta { a: f64, b: f64, loc: f64, scale: f64 },
    /// `Y ~ Gamma(shape, 1)`.
    Gamma { shape: f64, loc: f64, scale: f64 },
    /// `Y ~ InvGamma(shape, 1)`.
    InverseGamma { shape: f64, loc: f64, scale: f64 },
    /// `Y ~ BetaPrime(p, q)`, density `∝ y^{p-1}(1+y)^{-p-q}`.
    BetaPrime { p: f64, q: f64, loc: f64, scale: f64 },
    /// Density `∝ (1+y²)^{-m} exp(-nu·atan y)`; `log_norm` is the log of
    /// its integral over the real line.
    TypeIV { m: f64, nu: f64, loc: f64, scale: f64, log_norm: f64 },
    /// `Y ~ t_nu`.
    StudentT { nu: f64, loc: f64, scale: f64 },
    /// `Y ~ N(0, 1)`.
    Normal { loc: f64, scale: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PearsonFit {
    pub family: PearsonFamily,
    pub params: PearsonParams,
    pub moments: MomentSummary,
    /// `-1` when the fit was made to the reflected law.
    pub sign: f64,
}

/// The Pearson criterion `κ`.
pub fn pearson_criterion(beta1: f64, beta2: f64) -> f64 {
    beta1 * (beta2 + 3.0).powi(2) / (4.0 * (4.0 * beta2 - 3.0 * beta1) * (2.0 * beta2 - 3.0 * beta1 - 6.0))
}

pub fn pearson_fit(moments: MomentSummary) -> Result<PearsonFit> {
    let b1 = moments.beta1();
    let b2 = moments.beta2;
    if !(b2 > b1 + 1.0) {
        return Err(Error::InfeasibleMoments {
            beta2: b2,
            bound: b1 + 1.0,
        });
    }
    let sign = if moments.sqrt_beta1 < 0.0 { -1.0 } else { 1.0 };
    let s = moments.sqrt_beta1.abs();

    let (family, params) = if b1 < BOUNDARY_TOL {
        if (b2 - 3.0).abs() < BOUNDARY_TOL {
            (PearsonFamily::Normal, PearsonParams::Normal { loc: 0.0, scale: 1.0 })
        } else if b2 < 3.0 {
            (PearsonFamily::II, fit_beta(0.0, b2))
        } else {
            let nu = 4.0 + 6.0 / (b2 - 3.0);
            (
                PearsonFamily::VII,
                PearsonParams::StudentT {
                    nu,
                    loc: 0.0,
                    scale: ((nu - 2.0) / nu).sqrt(),
                },
            )
        }
    } else {
        let d3 = 2.0 * b2 - 3.0 * b1 - 6.0;
        if d3.abs() < BOUNDARY_TOL * b2 {
            let shape = 4.0 / b1;
            let scale = s / 2.0;
            (
                PearsonFamily::III,
                PearsonParams::Gamma {
                    shape,
                    loc: -shape * scale,
                    scale,
                },
            )
        } else {
            let k = pearson_criterion(b1, b2);
            if k < 0.0 {
                (PearsonFamily::I, fit_beta(s, b2))
            } else if (k - 1.0).abs() < BOUNDARY_TOL {
                (PearsonFamily::V, fit_inverse_gamma(s, b2)?)
            } else if k < 1.0 {
                (PearsonFamily::IV, fit_type_iv(s, b2)?)
            } else {
                (PearsonFamily::VI, fit_beta_prime(s, b2)?)
            }
        }
    };
    Ok(PearsonFit {
        family,
        params,
        moments,
        sign,
    })
}

/// Coefficients `(c0, c1, c2)` of the Pearson equation for unit variance.
fn equation_coefficients(s: f64, b2: f64) -> (f64, f64, f64) {
    let b1 = s * s;
    let d = 10.0 * b2 - 12.0 * b1 - 18.0;
    (
        (4.0 * b2 - 3.0 * b1) / d,
        s * (b2 + 3.0) / d,
        (2.0 * b2 - 3.0 * b1 - 6.0) / d,
    )
}

/// Types I and II from the moment formulas for the beta shapes, which stay
/// finite where the Pearson equation's denominator vanishes.
fn fit_beta(s: f64, b2: f64) -> PearsonParams {
    let b1 = s * s;
    let r = 6.0 * (b2 - b1 - 1.0) / (6.0 + 3.0 * b1 - 2.0 * b2);
    let root = ((r + 2.0).powi(2) * b1 + 16.0 * (r + 1.0)).sqrt();
    let a = 0.5 * r * (1.0 - (r + 2.0) * s / root);
    let b = 0.5 * r * (1.0 + (r + 2.0) * s / root);
    let width = 0.5 * root;
    PearsonParams::Beta {
        a,
        b,
        loc: -width * a / (a + b),
        scale: width,
    }
}

fn fit_inverse_gamma(s: f64, b2: f64) -> Result<PearsonParams> {
    let (_, c1, c2) = equation_coefficients(s, b2);
    let r = -c1 / (2.0 * c2);
    // f ∝ y^{-1/c2} exp((r + c1)/(c2 y)) with y = w - r > 0.
    let shape = 1.0 / c2 - 1.0;
    let scale = -(r + c1) / c2;
    if !(shape > 0.0 && scale > 0.0) {
        return Err(Error::InvalidParams(format!(
            "type V parameters out of range: shape {shape}, scale {scale}"
        )));
    }
    Ok(PearsonParams::InverseGamma {
        shape,
        loc: r,
        scale,
    })
}

fn fit_beta_prime(s: f64, b2: f64) -> Result<PearsonParams> {
    let (c0, c1, c2) = equation_coefficients(s, b2);
    let disc = (c1 * c1 - 4.0 * c0 * c2).sqrt();
    let (mut r1, mut r2) = ((-c1 - disc) / (2.0 * c2), (-c1 + disc) / (2.0 * c2));
    if r1 > r2 {
        std::mem::swap(&mut r1, &mut r2);
    }
    // f ∝ (w - r1)^A (w - r2)^B on w > r2.
    let a_exp = -(c1 + r1) / (c2 * (r1 - r2));
    let b_exp = -(c1 + r2) / (c2 * (r2 - r1));
    let p = b_exp + 1.0;
    let q = -a_exp - b_exp - 1.0;
    if !(p > 0.0 && q > 0.0) {
        return Err(Error::InvalidParams(format!(
            "type VI parameters out of range: p {p}, q {q}"
        )));
    }
    Ok(PearsonParams::BetaPrime {
        p,
        q,
        loc: r2,
        scale: r2 - r1,
    })
}

fn fit_type_iv(s: f64, b2: f64) -> Result<PearsonParams> {
    let (c0, c1, c2) = equation_coefficients(s, b2);
    let alpha = (c0 / c2 - c1 * c1 / (4.0 * c2 * c2)).sqrt();
    let m = 1.0 / (2.0 * c2);
    let nu = c1 * (1.0 - 1.0 / (2.0 * c2)) / (c2 * alpha);
    if !(alpha > 0.0 && m > 0.5) {
        return Err(Error::InvalidParams(format!(
            "type IV parameters out of range: m {m}, alpha {alpha}"
        )));
    }
    // ∫ (1+y²)^{-m} e^{-ν atan y} dy = ∫_{-π/2}^{π/2} cos^{2m-2}θ e^{-νθ} dθ.
    let norm = adaptive_gauss_kronrod(
        |th| type_iv_theta_density(m, nu, th),
        -FRAC_PI_2,
        FRAC_PI_2,
        0.0,
        NORMALISATION_REL_TOL,
    )?;
    Ok(PearsonParams::TypeIV {
        m,
        nu,
        loc: -c1 / (2.0 * c2),
        scale: alpha,
        log_norm: norm.ln(),
    })
}

fn type_iv_theta_density(m: f64, nu: f64, th: f64) -> f64 {
    let c = th.cos();
    if c <= 0.0 {
        0.0
    } else {
        ((2.0 * m - 2.0) * c.ln() - nu * th).exp()
    }
}

fn normal_sf(z: f64) -> f64 {
    0.5 * erfc(z / SQRT_2)
}

impl PearsonParams {
    fn loc_scale(&self) -> (f64, f64) {
        use PearsonParams::*;
        match *self {
            Beta { loc, scale, .. }
            | Gamma { loc, scale, .. }
            | InverseGamma { loc, scale, .. }
            | BetaPrime { loc, scale, .. }
            | TypeIV { loc, scale, .. }
            | StudentT { loc, scale, .. }
            | Normal { loc, scale } => (loc, scale),
        }
    }

    /// Support of the canonical variate `Y`.
    fn canonical_support(&self) -> (f64, f64) {
        use PearsonParams::*;
        match self {
            Beta { .. } => (0.0, 1.0),
            Gamma { .. } | InverseGamma { .. } | BetaPrime { .. } => (0.0, f64::INFINITY),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    fn canonical_pdf(&self, y: f64) -> f64 {
        use PearsonParams::*;
        let (lo, hi) = self.canonical_support();
        if y <= lo || y >= hi {
            return 0.0;
        }
        match *self {
            Beta { a, b, .. } => ((a - 1.0) * y.ln() + (b - 1.0) * (-y).ln_1p() - ln_beta(a, b)).exp(),
            Gamma { shape, .. } => ((shape - 1.0) * y.ln() - y - ln_gamma(shape)).exp(),
            InverseGamma { shape, .. } => {
                (-(shape + 1.0) * y.ln() - 1.0 / y - ln_gamma(shape)).exp()
            }
            BetaPrime { p, q, .. } => {
                ((p - 1.0) * y.ln() - (p + q) * y.ln_1p() - ln_beta(p, q)).exp()
            }
            TypeIV { m, nu, log_norm, .. } => {
                (-m * (y * y).ln_1p() - nu * y.atan() - log_norm).exp()
            }
            StudentT { nu, .. } => (ln_gamma(0.5 * (nu + 1.0))
                - ln_gamma(0.5 * nu)
                - 0.5 * (nu * PI).ln()
                - 0.5 * (nu + 1.0) * (y * y / nu).ln_1p())
            .exp(),
            Normal { .. } => (-0.5 * y * y).exp() / (2.0 * PI).sqrt(),
        }
    }

    /// `(P(Y ≤ y), P(Y > y))`, each computed directly so that neither tail
    /// loses precision to cancellation.
    fn canonical_cdf_sf(&self, y: f64) -> (f64, f64) {
        use PearsonParams::*;
        let (lo, hi) = self.canonical_support();
        if y <= lo {
            return (0.0, 1.0);
        }
        if y >= hi {
            return (1.0, 0.0);
        }
        match *self {
            Beta { a, b, .. } => (beta_reg(a, b, y), beta_reg(b, a, 1.0 - y)),
            Gamma { shape, .. } => (gamma_lr(shape, y), gamma_ur(shape, y)),
            InverseGamma { shape, .. } => (gamma_ur(shape, 1.0 / y), gamma_lr(shape, 1.0 / y)),
            BetaPrime { p, q, .. } => {
                let x = y / (1.0 + y);
                (beta_reg(p, q, x), beta_reg(q, p, 1.0 / (1.0 + y)))
            }
            TypeIV { m, nu, log_norm, .. } => {
                let th = y.atan();
                let f = |t: f64| type_iv_theta_density(m, nu, t);
                let norm = log_norm.exp();
                // Integrate over the shorter side.
                if th <= 0.0 {
                    let c = adaptive_gauss_kronrod(f, -FRAC_PI_2, th, 0.0, 1e-12).unwrap_or(f64::NAN) / norm;
                    (c, 1.0 - c)
                } else {
                    let s = adaptive_gauss_kronrod(f, th, FRAC_PI_2, 0.0, 1e-12).unwrap_or(f64::NAN) / norm;
                    (1.0 - s, s)
                }
            }
            StudentT { nu, .. } => {
                let tail = 0.5 * beta_reg(0.5 * nu, 0.5, nu / (nu + y * y));
                if y < 0.0 {
                    (tail, 1.0 - tail)
                } else {
                    (1.0 - tail, tail)
                }
            }
            Normal { .. } => (normal_sf(-y), normal_sf(y)),
        }
    }
}

impl PearsonFit {
    fn sigma(&self) -> f64 {
        self.moments.variance.sqrt()
    }

    /// Maps `x` to the canonical variate of the standardised, skew-corrected
    /// law, returning it with the Jacobian `|dy/dx|`.
    fn to_canonical(&self, x: f64) -> (f64, f64) {
        let (loc, scale) = self.params.loc_scale();
        let w = self.sign * (x - self.moments.mean) / self.sigma();
        ((w - loc) / scale, 1.0 / (self.sigma() * scale))
    }

    fn from_canonical(&self, y: f64) -> f64 {
        let (loc, scale) = self.params.loc_scale();
        self.moments.mean + self.sign * self.sigma() * (loc + scale * y)
    }

    pub fn pdf(&self, x: f64) -> f64 {
        let (y, jac) = self.to_canonical(x);
        self.params.canonical_pdf(y) * jac
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let (y, _) = self.to_canonical(x);
        let (c, s) = self.params.canonical_cdf_sf(y);
        if self.sign > 0.0 {
            c
        } else {
            s
        }
    }

    /// `P(X > x)`.
    pub fn sf(&self, x: f64) -> f64 {
        let (y, _) = self.to_canonical(x);
        let (c, s) = self.params.canonical_cdf_sf(y);
        if self.sign > 0.0 {
            s
        } else {
            c
        }
    }

    /// Closure of the support of the fitted law.
    pub fn support(&self) -> (f64, f64) {
        let (lo, hi) = self.params.canonical_support();
        let (a, b) = (self.from_canonical(lo), self.from_canonical(hi));
        (a.min(b), a.max(b))
    }

    /// `x` with `cdf(x) = q`, by bracketing and bisection.
    pub fn quantile(&self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidParams(format!("quantile level must lie in (0,1), got {q}")));
        }
        let (lo_s, hi_s) = self.support();
        let sd = self.sigma();
        let centre = self.moments.mean;
        // Compare in whichever tail is more precise.
        let below = |x: f64| -> bool {
            if q <= 0.5 {
                self.cdf(x) < q
            } else {
                self.sf(x) > 1.0 - q
            }
        };
        let mut lo = if lo_s.is_finite() { lo_s } else { centre - sd };
        let mut step = sd;
        while !lo_s.is_finite() && !below(lo) {
            step *= 2.0;
            lo = centre - step;
        }
        let mut hi = if hi_s.is_finite() { hi_s } else { centre + sd };
        step = sd;
        while !hi_s.is_finite() && below(hi) {
            step *= 2.0;
            hi = centre + step;
            if !hi.is_finite() {
                return Err(Error::QuadratureFailure(format!("no upper bracket for q = {q}")));
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if below(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Whether the fitted quantile at level `q` lies in the lower tail,
    /// where it can differ markedly from the law being approximated.
    pub fn lower_tail_unreliable(q: f64) -> bool {
        q <= LOWER_TAIL_UNRELIABLE
    }

    /// Upper-tail p-value `P(X ≥ statistic)`, clamped to `[0, 1]`.
    pub fn pvalue(&self, statistic: f64) -> f64 {
        self.sf(statistic).clamp(0.0, 1.0)
    }
}

pub fn pearson_quantile(fit: &PearsonFit, q: f64) -> Result<f64> {
    fit.quantile(q)
}

pub fn pearson_pvalue(fit: &PearsonFit, statistic: f64) -> f64 {
    fit.pvalue(statistic)
}
