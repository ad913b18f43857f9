//! Empirical rejection rates.

use serde::{Deserialize, Serialize};

use crate::competitors::StatisticId;
use crate::error::{Error, Result};
use crate::null::moment_summary;
use crate::pearson::{pearson_fit, PearsonFit};
use crate::sim::critical::{simulate_statistics, QuantileTable};
use crate::sim::{AlternativeSpec, SeedSpec};
use crate::statistic::TuningParam;

/// Where the critical value of a power study comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum CriticalSource {
    Simulated(QuantileTable),
    /// Pearson approximation of the limit law of `Z_{n,a}`.
    Pearson { a: TuningParam, fit: PearsonFit },
}

impl CriticalSource {
    pub fn pearson(a: TuningParam) -> Result<Self> {
        Ok(CriticalSource::Pearson {
            a,
            fit: pearson_fit(moment_summary(a)?)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerEntry {
    pub alternative: AlternativeSpec,
    pub n: usize,
    pub statistic: StatisticId,
    pub alpha: f64,
    pub replications: usize,
    pub critical_value: f64,
    pub rejection_rate: f64,
    pub mc_std_error: f64,
}

/// Critical value of `statistic` at level `alpha` for samples of size `n`.
pub fn critical_value(
    critical: &CriticalSource,
    statistic: &StatisticId,
    n: usize,
    alpha: f64,
) -> Result<f64> {
    match critical {
        CriticalSource::Simulated(t) => {
            if t.statistic != *statistic || t.n != n {
                return Err(Error::MissingCriticalValue(format!(
                    "table is for {} at n = {}, not {statistic} at n = {n}",
                    t.statistic, t.n
                )));
            }
            t.critical_value(alpha)
        }
        CriticalSource::Pearson { a, fit } => match statistic {
            StatisticId::Z { a: za, .. } if za == a => fit.quantile(1.0 - alpha),
            _ => Err(Error::MissingCriticalValue(format!(
                "the Pearson fit does not approximate {statistic}"
            ))),
        },
    }
}

/// Fraction of `replications` samples from `alt` on which `statistic` falls
/// strictly beyond the level-`alpha` critical value, in the statistic's
/// rejection direction.
pub fn power_study(
    alt: &AlternativeSpec,
    n: usize,
    statistic: &StatisticId,
    alpha: f64,
    replications: usize,
    seed: SeedSpec,
    critical: &CriticalSource,
) -> Result<PowerEntry> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParams(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    if replications == 0 {
        return Err(Error::InvalidParams("replications must be positive".into()));
    }
    let crit = critical_value(critical, statistic, n, alpha)?;
    let stats = simulate_statistics(alt, statistic, n, replications, seed)?;
    let large = statistic.rejects_large();
    let rejected = stats
        .iter()
        .filter(|&&s| if large { s > crit } else { s < crit })
        .count();
    let r = rejected as f64 / replications as f64;
    Ok(PowerEntry {
        alternative: *alt,
        n,
        statistic: *statistic,
        alpha,
        replications,
        critical_value: crit,
        rejection_rate: r,
        mc_std_error: (r * (1.0 - r) / replications as f64).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::critical::simulate_quantile_table;

    #[test]
    fn mismatched_table_is_missing() {
        let t = simulate_quantile_table(&"Z(1)".parse().unwrap(), 20, &[0.95], 1000, SeedSpec::default())
            .unwrap();
        let src = CriticalSource::Simulated(t);
        let alt = AlternativeSpec::standard_normal();
        for (n, stat) in [(30, "Z(1)"), (20, "Z(2)"), (20, "AD")] {
            let r = power_study(&alt, n, &stat.parse().unwrap(), 0.05, 100, SeedSpec::default(), &src);
            assert!(matches!(r, Err(Error::MissingCriticalValue(_))), "{n} {stat}");
        }
        let r = power_study(&alt, 20, &"Z(1)".parse().unwrap(), 0.1, 100, SeedSpec::default(), &src);
        assert!(matches!(r, Err(Error::MissingCriticalValue(_))));
    }

    #[test]
    fn pearson_source_only_for_its_own_a() {
        let a = TuningParam::new(1.0).unwrap();
        let src = CriticalSource::pearson(a).unwrap();
        let z1 = StatisticId::Z {
            a,
            divisor: Default::default(),
        };
        let c = critical_value(&src, &z1, 50, 0.05).unwrap();
        assert!((c - 2.23934).abs() < 0.01 * 2.23934);
        assert!(critical_value(&src, &"Z(3)".parse().unwrap(), 50, 0.05).is_err());
        assert!(critical_value(&src, &"AD".parse().unwrap(), 50, 0.05).is_err());
    }

    #[test]
    fn std_error_formula() {
        let stat: StatisticId = "JB".parse().unwrap();
        let t = simulate_quantile_table(&stat, 30, &[0.95], 2000, SeedSpec::new(1, 1)).unwrap();
        let e = power_study(
            &"t3".parse().unwrap(),
            30,
            &stat,
            0.05,
            500,
            SeedSpec::new(1, 2),
            &CriticalSource::Simulated(t),
        )
        .unwrap();
        let r = e.rejection_rate;
        assert!((0.0..=1.0).contains(&r));
        assert_eq!(e.mc_std_error, (r * (1.0 - r) / 500.0).sqrt());
    }
}
