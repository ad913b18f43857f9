//! A goodness-of-fit test for normality based on the zero-bias
//! characterisation `E[X f(X)] = E[f'(X)]`, expressed through the
//! characteristic-function identity `φ'(t) = -t φ(t)`.
//!
//! * [`statistic`]: scaled residuals and `Z_{n,a}`.
//! * [`null`]: cumulants of the limiting null law and the population
//!   discrepancy `Δ` under alternatives.
//! * [`pearson`]: Pearson-system approximation of the null law.
//! * [`competitors`]: other normality tests used for comparison.
//! * [`sim`]: seeded sampling, critical values and power studies.

pub mod competitors;
pub mod error;
pub mod null;
pub mod pearson;
pub mod quadrature;
pub mod sim;
pub mod statistic;

pub use competitors::{CompetitorId, StatisticId};
pub use error::{Error, Result};
pub use null::{
    cumulant_closed_form, cumulant_oracle, delta_discrepancy, kernel_kz, moment_summary,
    CumulantSet, DeltaMethod, DeltaResult, MomentSummary,
};
pub use pearson::{pearson_fit, pearson_pvalue, pearson_quantile, PearsonFamily, PearsonFit};
pub use quadrature::{QuadratureScheme, QuadratureSpec};
pub use sim::{
    power_study, reproduce_table, sample_alternative, simulate_critical_values, AlternativeSpec,
    CriticalSource, PowerEntry, QuantileTable, ReplicationBudget, Report, SeedSpec, TableId,
};
pub use statistic::{
    scale_residuals, scale_residuals_with, z_statistic, z_statistic_integral, Sample, ScaledResiduals,
    TuningParam, VarianceDivisor,
};
