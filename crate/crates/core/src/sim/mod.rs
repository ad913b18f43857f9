//! Sampling, simulated critical values, power studies and table
//! reproduction.

mod alternative;
pub mod critical;
pub mod power;
pub mod reproduce;
mod rng;

pub use alternative::{sample_alternative, AlternativeSpec};
pub use critical::{
    simulate_critical_values, simulate_null_statistics, simulate_quantile_table, QuantilePoint,
    QuantileTable,
};
pub use power::{power_study, CriticalSource, PowerEntry};
pub use reproduce::{reproduce_table, ReplicationBudget, Report, ReportCell, TableId};
pub use rng::SeedSpec;
