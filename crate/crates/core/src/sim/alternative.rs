//! Sampling distributions used in the power study.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Gamma as GammaDist, Open01, StandardNormal};
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

use super::rng::SeedSpec;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum AlternativeSpec {
    Normal { mu: f64, sigma2: f64 },
    /// `N(0,1)` with probability `1 - p`, `N(mu, sigma2)` with probability `p`.
    #[serde(rename = "nmix")]
    NMix { p: f64, mu: f64, sigma2: f64 },
    StudentT { nu: f64 },
    Uniform { lo: f64, hi: f64 },
    ChiSq { nu: f64 },
    Beta { alpha: f64, beta: f64 },
    Gamma { shape: f64, rate: f64 },
    Weibull { scale: f64, shape: f64 },
    /// Maximum convention: `F(x) = exp(-exp(-(x - loc)/scale))`.
    Gumbel { loc: f64, scale: f64 },
    LogNormal { mu: f64, sigma: f64 },
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} must be positive, got {v}")))
    }
}

fn finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} must be finite, got {v}")))
    }
}

impl AlternativeSpec {
    pub fn standard_normal() -> Self {
        Self::Normal { mu: 0.0, sigma2: 1.0 }
    }

    /// `U(-√3, √3)`, the uniform law with mean 0 and variance 1.
    pub fn standard_uniform() -> Self {
        let r = 3f64.sqrt();
        Self::Uniform { lo: -r, hi: r }
    }

    pub fn validate(&self) -> Result<()> {
        use AlternativeSpec::*;
        match *self {
            Normal { mu, sigma2 } => {
                finite("mu", mu)?;
                positive("sigma2", sigma2)
            }
            NMix { p, mu, sigma2 } => {
                if !(p > 0.0 && p < 1.0) {
                    return Err(Error::InvalidParams(format!("p must lie in (0,1), got {p}")));
                }
                finite("mu", mu)?;
                positive("sigma2", sigma2)
            }
            StudentT { nu } => positive("nu", nu),
            Uniform { lo, hi } => {
                finite("lo", lo)?;
                finite("hi", hi)?;
                if lo < hi {
                    Ok(())
                } else {
                    Err(Error::InvalidParams(format!("need lo < hi, got {lo} >= {hi}")))
                }
            }
            ChiSq { nu } => positive("nu", nu),
            Beta { alpha, beta } => {
                positive("alpha", alpha)?;
                positive("beta", beta)
            }
            Gamma { shape, rate } => {
                positive("shape", shape)?;
                positive("rate", rate)
            }
            Weibull { scale, shape } => {
                positive("scale", scale)?;
                positive("shape", shape)
            }
            Gumbel { loc, scale } => {
                finite("loc", loc)?;
                positive("scale", scale)
            }
            LogNormal { mu, sigma } => {
                finite("mu", mu)?;
                positive("sigma", sigma)
            }
        }
    }

    /// Mean and variance, or `None` when the variance is infinite.
    pub fn mean_variance(&self) -> Option<(f64, f64)> {
        use AlternativeSpec::*;
        Some(match *self {
            Normal { mu, sigma2 } => (mu, sigma2),
            NMix { p, mu, sigma2 } => {
                let m = p * mu;
                (m, (1.0 - p) + p * (sigma2 + mu * mu) - m * m)
            }
            StudentT { nu } => {
                if nu <= 2.0 {
                    return None;
                }
                (0.0, nu / (nu - 2.0))
            }
            Uniform { lo, hi } => (0.5 * (lo + hi), (hi - lo).powi(2) / 12.0),
            ChiSq { nu } => (nu, 2.0 * nu),
            Beta { alpha, beta } => {
                let s = alpha + beta;
                (alpha / s, alpha * beta / (s * s * (s + 1.0)))
            }
            Gamma { shape, rate } => (shape / rate, shape / (rate * rate)),
            Weibull { scale, shape } => {
                let g1 = gamma(1.0 + 1.0 / shape);
                let g2 = gamma(1.0 + 2.0 / shape);
                (scale * g1, scale * scale * (g2 - g1 * g1))
            }
            Gumbel { loc, scale } => (loc + EULER_GAMMA * scale, PI * PI * scale * scale / 6.0),
            LogNormal { mu, sigma } => {
                let s2 = sigma * sigma;
                ((mu + 0.5 * s2).exp(), s2.exp_m1() * (2.0 * mu + s2).exp())
            }
        })
    }

    /// Characteristic function `g` of the standardised variable and the sum
    /// `g'(t) + t g(t)`, for families where both are elementary.
    pub(crate) fn standardized_cf(&self, t: f64) -> Option<(Complex64, Complex64)> {
        use AlternativeSpec::*;
        let i = Complex64::i();
        match *self {
            Normal { .. } => {
                let g = Complex64::from((-0.5 * t * t).exp());
                Some((g, Complex64::from(0.0)))
            }
            Uniform { .. } => {
                // X = √3 (2U - 1): g(t) = sin(√3 t)/(√3 t).
                let r = 3f64.sqrt();
                let u = r * t;
                let (g, dg) = if u.abs() < 1e-4 {
                    let u2 = u * u;
                    (1.0 - u2 / 6.0 + u2 * u2 / 120.0, r * (-u / 3.0 + u2 * u / 30.0))
                } else {
                    let (s, c) = u.sin_cos();
                    (s / u, r * (u * c - s) / (u * u))
                };
                Some((Complex64::from(g), Complex64::from(dg + t * g)))
            }
            Gamma { .. } | ChiSq { .. } => {
                let k = match *self {
                    ChiSq { nu } => 0.5 * nu,
                    Gamma { shape, .. } => shape,
                    _ => unreachable!(),
                };
                // (X - k)/√k with X ~ Gamma(k, 1).
                let s = k.sqrt();
                let z = Complex64::new(1.0, -t / s);
                let g = (-i * t * s).exp() * z.powf(-k);
                let sum = t * g * (-i * t / s) / z;
                Some((g, sum))
            }
            NMix { p, mu, sigma2 } => {
                let (m, v) = self.mean_variance()?;
                let sd = v.sqrt();
                let u = t / sd;
                let c0 = Complex64::from((-0.5 * u * u).exp());
                let c1 = (i * mu * u - 0.5 * sigma2 * u * u).exp();
                let d0 = -u * c0;
                let d1 = (i * mu - sigma2 * u) * c1;
                let shift = (-i * m * u).exp();
                let h = (1.0 - p) * c0 + p * c1;
                let dh = (1.0 - p) * d0 + p * d1;
                let g = shift * h;
                let dg = shift * ((-i * m) * h + dh) / sd;
                Some((g, dg + t * g))
            }
            _ => None,
        }
    }

    /// `n` iid draws using the replication-0 stream of `seed`.
    pub fn sample(&self, n: usize, seed: SeedSpec) -> Result<Vec<f64>> {
        self.validate()?;
        let mut rng = seed.rng(0);
        Ok(self.draw(&mut rng, n))
    }

    /// `n` iid draws from `rng`. The parameters must already be valid.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<f64> {
        use AlternativeSpec::*;
        let mut out = Vec::with_capacity(n);
        let normal = |rng: &mut R| -> f64 { StandardNormal.sample(rng) };
        let open01 = |rng: &mut R| -> f64 { Open01.sample(rng) };
        match *self {
            Normal { mu, sigma2 } => {
                let sd = sigma2.sqrt();
                out.extend((0..n).map(|_| mu + sd * normal(rng)));
            }
            NMix { p, mu, sigma2 } => {
                let sd = sigma2.sqrt();
                for _ in 0..n {
                    let u: f64 = rng.random();
                    let z = normal(rng);
                    out.push(if u < p { mu + sd * z } else { z });
                }
            }
            StudentT { nu } => {
                let chi = GammaDist::new(0.5 * nu, 2.0).expect("validated");
                for _ in 0..n {
                    let z = normal(rng);
                    let c: f64 = chi.sample(rng);
                    out.push(z / (c / nu).sqrt());
                }
            }
            Uniform { lo, hi } => {
                out.extend((0..n).map(|_| lo + (hi - lo) * rng.random::<f64>()));
            }
            ChiSq { nu } => {
                let g = GammaDist::new(0.5 * nu, 2.0).expect("validated");
                out.extend((0..n).map(|_| g.sample(rng)));
            }
            Beta { alpha, beta } => {
                let ga = GammaDist::new(alpha, 1.0).expect("validated");
                let gb = GammaDist::new(beta, 1.0).expect("validated");
                for _ in 0..n {
                    let x: f64 = ga.sample(rng);
                    let y: f64 = gb.sample(rng);
                    out.push(x / (x + y));
                }
            }
            Gamma { shape, rate } => {
                let g = GammaDist::new(shape, 1.0 / rate).expect("validated");
                out.extend((0..n).map(|_| g.sample(rng)));
            }
            Weibull { scale, shape } => {
                out.extend((0..n).map(|_| scale * (-open01(rng).ln()).powf(1.0 / shape)));
            }
            Gumbel { loc, scale } => {
                out.extend((0..n).map(|_| loc - scale * (-open01(rng).ln()).ln()));
            }
            LogNormal { mu, sigma } => {
                out.extend((0..n).map(|_| (mu + sigma * normal(rng)).exp()));
            }
        }
        out
    }
}

fn fmt_num(v: f64) -> String {
    let r = 3f64.sqrt();
    if v == r {
        "sqrt3".into()
    } else if v == -r {
        "-sqrt3".into()
    } else {
        format!("{v}")
    }
}

impl fmt::Display for AlternativeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AlternativeSpec::*;
        let n = fmt_num;
        match *self {
            Normal { mu, sigma2 } => write!(f, "N({},{})", n(mu), n(sigma2)),
            NMix { p, mu, sigma2 } => write!(f, "NMix({},{},{})", n(p), n(mu), n(sigma2)),
            StudentT { nu } => write!(f, "t{}", n(nu)),
            Uniform { lo, hi } => write!(f, "U({},{})", n(lo), n(hi)),
            ChiSq { nu } => write!(f, "chi2_{}", n(nu)),
            Beta { alpha, beta } => write!(f, "B({},{})", n(alpha), n(beta)),
            Gamma { shape, rate } => write!(f, "Gamma({},{})", n(shape), n(rate)),
            Weibull { scale, shape } => write!(f, "W({},{})", n(scale), n(shape)),
            Gumbel { loc, scale } => write!(f, "Gum({},{})", n(loc), n(scale)),
            LogNormal { mu, sigma } => write!(f, "LN({},{})", n(mu), n(sigma)),
        }
    }
}

fn parse_num(tok: &str) -> Option<f64> {
    let t = tok.trim().replace('√', "sqrt");
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.as_str()),
    };
    let v = match body.strip_prefix("sqrt") {
        Some(arg) => arg.trim_matches(|c| c == '(' || c == ')').parse::<f64>().ok()?.sqrt(),
        None => body.parse::<f64>().ok()?,
    };
    Some(if neg { -v } else { v })
}

/// Splits `name(args)` or `name<digits>` / `name_<digits>` into the family
/// name and its numeric arguments.
fn split_name(s: &str) -> Option<(String, Vec<f64>)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(open) = s.find('(') {
        let inner = s[open + 1..].strip_suffix(')')?;
        let mut args = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    args.push(parse_num(&inner[start..i])?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        if !inner.is_empty() {
            args.push(parse_num(&inner[start..])?);
        }
        return Some((s[..open].to_lowercase(), args));
    }
    let lower = s.to_lowercase();
    let split = lower
        .char_indices()
        .find(|&(i, c)| c.is_ascii_digit() && !lower[..i].ends_with("chi"))
        .map(|(i, _)| i);
    match split {
        Some(i) => {
            let name = lower[..i].trim_end_matches('_').to_string();
            Some((name, vec![lower[i..].parse().ok()?]))
        }
        None => Some((lower, Vec::new())),
    }
}

impl FromStr for AlternativeSpec {
    type Err = Error;

    /// Accepts the names used in the power tables, e.g. `N(0,1)`,
    /// `NMix(0.5,1,4)`, `t3`, `U(-sqrt3,sqrt3)`, `chi2_5`, `B(1,4)`,
    /// `Gamma(1,5)`, `W(1,0.5)`, `Gum(1,2)`, `LN(0,1)`.
    fn from_str(s: &str) -> Result<Self> {
        use AlternativeSpec::*;
        let unknown = || Error::UnknownAlternativeName(s.to_string());
        let (name, args) = split_name(s).ok_or_else(unknown)?;
        let spec = match (name.as_str(), args.as_slice()) {
            ("n" | "normal", []) => Self::standard_normal(),
            ("n" | "normal", &[mu, sigma2]) => Normal { mu, sigma2 },
            ("nmix", &[p, mu, sigma2]) => NMix { p, mu, sigma2 },
            ("t" | "student" | "studentt", &[nu]) => StudentT { nu },
            ("u" | "uniform", []) => Self::standard_uniform(),
            ("u" | "uniform", &[lo, hi]) => Uniform { lo, hi },
            ("chi2" | "chisq" | "chi", &[nu]) => ChiSq { nu },
            ("b" | "beta", &[alpha, beta]) => Beta { alpha, beta },
            ("gamma" | "g", &[shape, rate]) => Gamma { shape, rate },
            ("w" | "weibull", &[scale, shape]) => Weibull { scale, shape },
            ("gum" | "gumbel", &[loc, scale]) => Gumbel { loc, scale },
            ("ln" | "lognormal", &[mu, sigma]) => LogNormal { mu, sigma },
            _ => return Err(unknown()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// `n` iid draws from `spec`, deterministic in `seed`.
pub fn sample_alternative(spec: &AlternativeSpec, n: usize, seed: SeedSpec) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::TooFewObservations { min: 1, got: 0 });
    }
    spec.sample(n, seed)
}
