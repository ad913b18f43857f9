//! Batch driver that recomputes published reference tables and compares
//! them cell by cell.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::competitors::StatisticId;
use crate::error::{Error, Result};
use crate::null::moment_summary;
use crate::pearson::pearson_fit;
use crate::sim::critical::{simulate_quantile_table, QuantileTable};
use crate::sim::power::{power_study, CriticalSource};
use crate::sim::{AlternativeSpec, SeedSpec};
use crate::statistic::{TuningParam, VarianceDivisor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    /// Moments of the limit null law.
    Table1,
    /// Null quantiles, asymptotic and simulated.
    Table2,
    /// A fixed subset of the power table.
    Table3Subset,
}

impl std::str::FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table1" => Ok(TableId::Table1),
            "table2" => Ok(TableId::Table2),
            "table3" | "table3-subset" => Ok(TableId::Table3Subset),
            _ => Err(Error::InvalidParams(format!("unknown table {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplicationBudget {
    /// Null replications per quantile table (table 2) and power
    /// replications per cell (table 3).
    pub replications: usize,
    /// Null replications behind each critical value used in table 3.
    pub critical_replications: usize,
}

impl Default for ReplicationBudget {
    fn default() -> Self {
        Self {
            replications: 10_000,
            critical_replications: 100_000,
        }
    }
}

pub const MIN_TABLE2_REPLICATIONS: usize = 20_000;
pub const MIN_TABLE3_REPLICATIONS: usize = 2_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ToleranceKind {
    Absolute,
    Relative,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportCell {
    pub cell_id: String,
    pub paper_value: f64,
    pub reproduced_value: Option<f64>,
    pub std_error: Option<f64>,
    pub tolerance: f64,
    pub tolerance_kind: ToleranceKind,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ReportCell {
    fn new(
        cell_id: String,
        paper_value: f64,
        reproduced: Result<(f64, f64)>,
        tolerance: f64,
        tolerance_kind: ToleranceKind,
    ) -> Self {
        match reproduced {
            Ok((value, se)) => {
                let diff = (value - paper_value).abs();
                let pass = match tolerance_kind {
                    ToleranceKind::Absolute => diff <= tolerance,
                    ToleranceKind::Relative => diff <= tolerance * paper_value.abs(),
                };
                Self {
                    cell_id,
                    paper_value,
                    reproduced_value: Some(value),
                    std_error: Some(se),
                    tolerance,
                    tolerance_kind,
                    pass,
                    error: None,
                }
            }
            Err(e) => Self {
                cell_id,
                paper_value,
                reproduced_value: None,
                std_error: None,
                tolerance,
                tolerance_kind,
                pass: false,
                error: Some(e.to_string()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub table: TableId,
    pub budget: ReplicationBudget,
    pub seed: SeedSpec,
    pub notes: Vec<String>,
    pub cells: Vec<ReportCell>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.cells.iter().filter(|c| c.pass).count()
    }

    pub fn cell(&self, id: &str) -> Option<&ReportCell> {
        self.cells.iter().find(|c| c.cell_id == id)
    }
}

pub const TABLE_A: [f64; 8] = [0.1, 0.25, 0.5, 0.75, 1.0, 3.0, 5.0, 10.0];

/// Mean, variance, skewness and kurtosis of the limit null law, per `a`.
pub const TABLE1: [[f64; 4]; 8] = [
    [30.4036, 304.1938, 1.4542, 6.4513],
    [7.7811, 31.2928, 1.7549, 7.8821],
    [2.6013, 4.7153, 1.9576, 8.9907],
    [1.3056, 1.3821, 2.0799, 9.7885],
    [0.7787, 0.5430, 2.1780, 10.4822],
    [0.0861, 0.0094, 2.5812, 13.3852],
    [0.0277, 0.0011, 2.7053, 14.2265],
    [0.0055, 0.0001, 2.7885, 14.7597],
];

pub const TABLE2_LEVELS: [f64; 3] = [0.9, 0.95, 0.99];

/// Upper null quantiles at [`TABLE2_LEVELS`]; rows follow [`TABLE_A`].
pub const TABLE2_ASYMPTOTIC: [[f64; 3]; 8] = [
    [53.39952, 63.92766, 87.89731],
    [15.10009, 18.73029, 27.15089],
    [5.41750, 6.89193, 10.35260],
    [2.81741, 3.63395, 5.57065],
    [1.71902, 2.23934, 3.48445],
    [0.20558, 0.27903, 0.45910],
    [0.06843, 0.09441, 0.15828],
    [0.01414, 0.01980, 0.03371],
];

pub const TABLE2_N: [usize; 3] = [20, 50, 100];

/// Simulated upper null quantiles, indexed `[n][a][level]`.
pub const TABLE2_EMPIRICAL: [[[f64; 3]; 8]; 3] = [
    [
        [53.02253, 62.95695, 84.99265],
        [15.17277, 18.74151, 26.51209],
        [5.43755, 6.81869, 9.96010],
        [2.75949, 3.53893, 5.41328],
        [1.63633, 2.14516, 3.40884],
        [0.17785, 0.25076, 0.44301],
        [0.05674, 0.08146, 0.14904],
        [0.01116, 0.01631, 0.03051],
    ],
    [
        [53.05553, 63.40399, 86.79261],
        [15.05561, 18.79428, 26.90751],
        [5.40910, 6.89826, 10.24374],
        [2.79329, 3.59782, 5.50480],
        [1.69165, 2.20391, 3.46662],
        [0.19527, 0.27076, 0.46805],
        [0.06399, 0.09031, 0.16034],
        [0.01292, 0.01859, 0.03359],
    ],
    [
        [53.26156, 63.85351, 87.88282],
        [15.13173, 18.81316, 27.23384],
        [5.43381, 6.88596, 10.38987],
        [2.80970, 3.63695, 5.56701],
        [1.70456, 2.23136, 3.47844],
        [0.20069, 0.27509, 0.45774],
        [0.06636, 0.09233, 0.15819],
        [0.01354, 0.01923, 0.03358],
    ],
];

/// One power-table cell: the published labels, the specification actually
/// simulated, and the published rate in percent at level 0.05.
#[derive(Debug, Clone, Copy)]
pub struct PowerCell {
    pub alternative: &'static str,
    pub n: usize,
    pub statistic: &'static str,
    pub simulated_alternative: &'static str,
    pub simulated_statistic: &'static str,
    pub percent: f64,
}

const fn cell(
    alternative: &'static str,
    n: usize,
    statistic: &'static str,
    simulated_alternative: &'static str,
    simulated_statistic: &'static str,
    percent: f64,
) -> PowerCell {
    PowerCell {
        alternative,
        n,
        statistic,
        simulated_alternative,
        simulated_statistic,
        percent,
    }
}

/// The published power figures for `Z` match residuals scaled by the
/// sample standard deviation (divisor `n - 1`), and the mixture figures
/// match a third parameter that is a standard deviation rather than a
/// variance; the simulated specifications follow that reading.
pub const TABLE3_SUBSET: [PowerCell; 12] = [
    cell("N(0,1)", 50, "Z(1)", "N(0,1)", "Z(1,n-1)", 5.0),
    cell("t3", 50, "Z(0.5)", "t3", "Z(0.5,n-1)", 61.0),
    cell("U(-sqrt3,sqrt3)", 100, "Z(3)", "U(-sqrt3,sqrt3)", "Z(3,n-1)", 8.0),
    cell("chi2_5", 20, "Z(1)", "chi2_5", "Z(1,n-1)", 41.0),
    cell("LN(0,1)", 20, "Z(0.1)", "LN(0,1)", "Z(0.1,n-1)", 76.0),
    cell("NMix(0.5,1,4)", 50, "Z(0.25)", "NMix(0.5,1,16)", "Z(0.25,n-1)", 85.0),
    cell("t3", 50, "HV(2.5)", "t3", "HV(2.5)", 66.0),
    cell("chi2_5", 50, "BHEP", "chi2_5", "BHEP(1)", 83.0),
    cell("t3", 50, "Z(1)", "t3", "Z(1,n-1)", 65.0),
    cell("t5", 100, "Z(1)", "t5", "Z(1,n-1)", 54.0),
    cell("t3", 50, "SW", "t3", "SW", 64.0),
    cell("NMix(0.3,1,0.25)", 50, "AD", "NMix(0.3,1,0.0625)", "AD", 68.0),
];

pub const TABLE1_TOLERANCE: f64 = 5e-5;
pub const TABLE2_ASYMPTOTIC_TOLERANCE: f64 = 0.01;
pub const TABLE2_EMPIRICAL_TOLERANCE: f64 = 0.02;
pub const TABLE3_TOLERANCE: f64 = 0.03;
pub const POWER_ALPHA: f64 = 0.05;

fn tp(a: f64) -> TuningParam {
    TuningParam::new(a).expect("table tuning parameters are positive")
}

pub fn table3_cell_id(alt: &str, n: usize, stat: &str) -> String {
    format!("table3/{alt}/n={n}/{stat}")
}

pub fn table2_cell_id(n: Option<usize>, a: f64, level: f64) -> String {
    match n {
        Some(n) => format!("table2/n={n}/a={a}/q={level}"),
        None => format!("table2/n=inf/a={a}/q={level}"),
    }
}

/// Recomputes `table` and compares every cell with the published value.
///
/// Simulated tables run on consecutive streams starting at
/// `seed.stream_index`, in the order the cells are listed. Failures in a
/// cell are recorded in that cell and do not abort the report.
pub fn reproduce_table(table: TableId, budget: ReplicationBudget, seed: SeedSpec) -> Result<Report> {
    let mut notes = Vec::new();
    let cells = match table {
        TableId::Table1 => table1_cells(),
        TableId::Table2 => {
            if budget.replications < MIN_TABLE2_REPLICATIONS {
                return Err(Error::InvalidParams(format!(
                    "table2 needs at least {MIN_TABLE2_REPLICATIONS} replications"
                )));
            }
            notes.push("n=inf rows from the Pearson approximation of the limit law".into());
            table2_cells(budget, seed)
        }
        TableId::Table3Subset => {
            if budget.replications < MIN_TABLE3_REPLICATIONS {
                return Err(Error::InvalidParams(format!(
                    "table3 needs at least {MIN_TABLE3_REPLICATIONS} replications per cell"
                )));
            }
            notes.push(format!(
                "critical values simulated under N(0,1) per (statistic, n) with {} replications",
                budget.critical_replications
            ));
            notes.push("rates are fractions; tolerance is absolute".into());
            notes.push(
                "Z cells use residuals scaled with divisor n-1; mixture cells read the third \
                 parameter as a standard deviation"
                    .into(),
            );
            table3_cells(budget, seed)
        }
    };
    Ok(Report {
        table,
        budget,
        seed,
        notes,
        cells,
    })
}

fn table1_cells() -> Vec<ReportCell> {
    const COLUMNS: [&str; 4] = ["mean", "variance", "sqrt_beta1", "beta2"];
    let mut cells = Vec::new();
    for (a, row) in TABLE_A.iter().zip(TABLE1) {
        let m = moment_summary(tp(*a));
        for (k, (col, reference)) in COLUMNS.iter().zip(row).enumerate() {
            let value = m.as_ref().map_err(Clone::clone).map(|m| {
                let v = [m.mean, m.variance, m.sqrt_beta1, m.beta2][k];
                (v, 0.0)
            });
            cells.push(ReportCell::new(
                format!("table1/a={a}/{col}"),
                reference,
                value,
                TABLE1_TOLERANCE,
                ToleranceKind::Absolute,
            ));
        }
    }
    cells
}

fn table2_cells(budget: ReplicationBudget, seed: SeedSpec) -> Vec<ReportCell> {
    let mut cells = Vec::new();
    for (a, row) in TABLE_A.iter().zip(TABLE2_ASYMPTOTIC) {
        let fit = moment_summary(tp(*a)).and_then(pearson_fit);
        for (level, reference) in TABLE2_LEVELS.iter().zip(row) {
            let q = fit
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|f| f.quantile(*level))
                .map(|q| (q, 0.0));
            cells.push(ReportCell::new(
                table2_cell_id(None, *a, *level),
                reference,
                q,
                TABLE2_ASYMPTOTIC_TOLERANCE,
                ToleranceKind::Relative,
            ));
        }
    }
    let mut stream = seed.stream_index;
    for (n, block) in TABLE2_N.iter().zip(TABLE2_EMPIRICAL) {
        for (a, row) in TABLE_A.iter().zip(block) {
            let table = simulate_quantile_table(
                &StatisticId::Z {
                    a: tp(*a),
                    divisor: VarianceDivisor::N,
                },
                *n,
                &TABLE2_LEVELS,
                budget.replications,
                seed.with_stream(stream),
            );
            stream = stream.wrapping_add(1);
            for (k, (level, reference)) in TABLE2_LEVELS.iter().zip(row).enumerate() {
                let q = table
                    .as_ref()
                    .map_err(Clone::clone)
                    .map(|t| (t.quantiles[k].value, t.quantiles[k].std_error));
                cells.push(ReportCell::new(
                    table2_cell_id(Some(*n), *a, *level),
                    reference,
                    q,
                    TABLE2_EMPIRICAL_TOLERANCE,
                    ToleranceKind::Relative,
                ));
            }
        }
    }
    cells
}

fn table3_cells(budget: ReplicationBudget, seed: SeedSpec) -> Vec<ReportCell> {
    let mut stream = seed.stream_index;
    let mut next_seed = || {
        let s = seed.with_stream(stream);
        stream = stream.wrapping_add(1);
        s
    };
    let mut tables: HashMap<(String, usize), Result<QuantileTable>> = HashMap::new();
    let mut cells = Vec::new();
    for c in TABLE3_SUBSET {
        let n = c.n;
        let rate = (|| {
            let alt: AlternativeSpec = c.simulated_alternative.parse()?;
            let stat: StatisticId = c.simulated_statistic.parse()?;
            let key = (stat.to_string(), n);
            if !tables.contains_key(&key) {
                let level = if stat.rejects_large() { 1.0 - POWER_ALPHA } else { POWER_ALPHA };
                let t = simulate_quantile_table(&stat, n, &[level], budget.critical_replications, next_seed());
                tables.insert(key.clone(), t);
            }
            let table = tables[&key].clone()?;
            let e = power_study(
                &alt,
                n,
                &stat,
                POWER_ALPHA,
                budget.replications,
                next_seed(),
                &CriticalSource::Simulated(table),
            )?;
            Ok((e.rejection_rate, e.mc_std_error))
        })();
        cells.push(ReportCell::new(
            table3_cell_id(c.alternative, n, c.statistic),
            c.percent / 100.0,
            rate,
            TABLE3_TOLERANCE,
            ToleranceKind::Absolute,
        ));
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_all_cells_pass() {
        let r = reproduce_table(TableId::Table1, ReplicationBudget::default(), SeedSpec::default()).unwrap();
        assert_eq!(r.cells.len(), 32);
        for c in &r.cells {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn budget_minimums() {
        let small = ReplicationBudget {
            replications: 1000,
            critical_replications: 1000,
        };
        assert!(reproduce_table(TableId::Table2, small, SeedSpec::default()).is_err());
        assert!(reproduce_table(TableId::Table3Subset, small, SeedSpec::default()).is_err());
    }

    #[test]
    fn failed_cell_is_marked() {
        let c = ReportCell::new(
            "x".into(),
            1.0,
            Err(Error::MissingCriticalValue("none".into())),
            0.1,
            ToleranceKind::Absolute,
        );
        assert!(!c.pass && c.reproduced_value.is_none() && c.error.is_some());
    }

    #[test]
    fn subset_names_parse() {
        for c in TABLE3_SUBSET {
            for s in [c.alternative, c.simulated_alternative] {
                s.parse::<AlternativeSpec>().unwrap();
            }
            for s in [c.statistic, c.simulated_statistic] {
                s.parse::<StatisticId>().unwrap();
            }
        }
    }

    #[test]
    fn table_ids_parse() {
        assert_eq!("table3-subset".parse::<TableId>().unwrap(), TableId::Table3Subset);
        assert_eq!(
            serde_json::to_string(&TableId::Table3Subset).unwrap(),
            "\"table3-subset\""
        );
        assert!("table4".parse::<TableId>().is_err());
    }
}
