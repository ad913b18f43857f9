//! Null distributions by simulation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::competitors::StatisticId;
use crate::error::{Error, Result};
use crate::sim::{AlternativeSpec, SeedSpec};
use crate::statistic::{Sample, TuningParam};

pub const MIN_CRITICAL_REPLICATIONS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantilePoint {
    pub level: f64,
    pub value: f64,
    /// Half the distance between the quantiles at `level ± √(level(1-level)/R)`.
    pub std_error: f64,
}

/// Empirical null quantiles of one statistic at one sample size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantileTable {
    pub statistic: StatisticId,
    pub n: usize,
    /// Tuning parameter when the statistic is `Z_{n,a}`.
    pub a: Option<f64>,
    pub replications: usize,
    /// Sorted by level.
    pub quantiles: Vec<QuantilePoint>,
    pub seed: SeedSpec,
}

impl QuantileTable {
    /// The quantile at `level`, matched to within `1e-12`.
    pub fn get(&self, level: f64) -> Option<f64> {
        self.quantiles
            .iter()
            .find(|p| (p.level - level).abs() < 1e-12)
            .map(|p| p.value)
    }

    /// Critical value for a level-`alpha` test in the statistic's
    /// rejection direction.
    pub fn critical_value(&self, alpha: f64) -> Result<f64> {
        let level = if self.statistic.rejects_large() {
            1.0 - alpha
        } else {
            alpha
        };
        self.get(level).ok_or_else(|| {
            Error::MissingCriticalValue(format!(
                "{} at n = {} has no quantile at level {level}",
                self.statistic, self.n
            ))
        })
    }
}

/// Sample quantile with linear interpolation between order statistics
/// (`x_(⌊h⌋) + (h - ⌊h⌋)(x_(⌊h⌋+1) - x_(⌊h⌋))`, `h = (R - 1) p`, zero-based).
pub fn empirical_quantile(sorted: &[f64], p: f64) -> f64 {
    let r = sorted.len();
    let h = (r - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(r - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Standard error of [`empirical_quantile`] from the spread of the order
/// statistics one binomial standard deviation either side of `p`.
pub fn quantile_std_error(sorted: &[f64], p: f64) -> f64 {
    let s = (p * (1.0 - p) / sorted.len() as f64).sqrt();
    0.5 * (empirical_quantile(sorted, p + s) - empirical_quantile(sorted, p - s))
}

/// Values of `statistic` on `replications` independent N(0,1) samples of
/// size `n`. Replication `r` draws from `seed.rng(r)`, so the output does
/// not depend on the thread count.
pub fn simulate_null_statistics(
    statistic: &StatisticId,
    n: usize,
    replications: usize,
    seed: SeedSpec,
) -> Result<Vec<f64>> {
    simulate_statistics(&AlternativeSpec::standard_normal(), statistic, n, replications, seed)
}

pub(crate) fn simulate_statistics(
    alt: &AlternativeSpec,
    statistic: &StatisticId,
    n: usize,
    replications: usize,
    seed: SeedSpec,
) -> Result<Vec<f64>> {
    alt.validate()?;
    (0..replications as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = seed.rng(r);
            statistic.compute(&Sample::new(alt.draw(&mut rng, n))?)
        })
        .collect()
}

/// Empirical quantiles of the null distribution of any statistic.
pub fn simulate_quantile_table(
    statistic: &StatisticId,
    n: usize,
    levels: &[f64],
    replications: usize,
    seed: SeedSpec,
) -> Result<QuantileTable> {
    if replications < MIN_CRITICAL_REPLICATIONS {
        return Err(Error::InvalidParams(format!(
            "need at least {MIN_CRITICAL_REPLICATIONS} replications, got {replications}"
        )));
    }
    if let Some(p) = levels.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
        return Err(Error::InvalidParams(format!("quantile level {p} outside (0, 1)")));
    }
    let mut stats = simulate_null_statistics(statistic, n, replications, seed)?;
    stats.sort_by(f64::total_cmp);
    let mut levels = levels.to_vec();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    Ok(QuantileTable {
        statistic: *statistic,
        n,
        a: match statistic {
            StatisticId::Z { a, .. } => Some(a.get()),
            StatisticId::Competitor { .. } => None,
        },
        replications,
        quantiles: levels
            .into_iter()
            .map(|level| QuantilePoint {
                level,
                value: empirical_quantile(&stats, level),
                std_error: quantile_std_error(&stats, level),
            })
            .collect(),
        seed,
    })
}

/// Empirical null quantiles of `Z_{n,a}`.
pub fn simulate_critical_values(
    n: usize,
    a: TuningParam,
    levels: &[f64],
    replications: usize,
    seed: SeedSpec,
) -> Result<QuantileTable> {
    simulate_quantile_table(
        &StatisticId::Z {
            a,
            divisor: Default::default(),
        },
        n, levels, replications, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolated_quantiles() {
        let x = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(empirical_quantile(&x, 0.0), 1.0);
        assert_eq!(empirical_quantile(&x, 1.0), 5.0);
        assert_eq!(empirical_quantile(&x, 0.5), 3.0);
        assert!((empirical_quantile(&x, 0.9) - 4.6).abs() < 1e-12);
    }

    #[test]
    fn monotone_in_level() {
        let t = simulate_critical_values(
            20,
            TuningParam::new(1.0).unwrap(),
            &[0.99, 0.9, 0.95],
            2000,
            SeedSpec::default(),
        )
        .unwrap();
        let v: Vec<f64> = t.quantiles.iter().map(|p| p.value).collect();
        assert_eq!(t.quantiles[0].level, 0.9);
        assert!(v[0] < v[1] && v[1] < v[2], "{v:?}");
        assert_eq!(t.a, Some(1.0));
    }

    #[test]
    fn deterministic_under_thread_count() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| {
                    simulate_null_statistics(&"BHEP".parse().unwrap(), 15, 300, SeedSpec::new(9, 2))
                        .unwrap()
                })
        };
        assert_eq!(run(1), run(3));
    }

    #[test]
    fn too_few_replications() {
        let r = simulate_critical_values(
            20,
            TuningParam::new(1.0).unwrap(),
            &[0.95],
            999,
            SeedSpec::default(),
        );
        assert!(matches!(r, Err(Error::InvalidParams(_))));
    }

    #[test]
    fn rejection_direction_picks_level() {
        let sw = simulate_quantile_table(&"SW".parse().unwrap(), 20, &[0.05, 0.95], 1000, SeedSpec::default())
            .unwrap();
        assert_eq!(sw.critical_value(0.05).unwrap(), sw.get(0.05).unwrap());
        assert!(matches!(sw.critical_value(0.01), Err(Error::MissingCriticalValue(_))));
    }
}
