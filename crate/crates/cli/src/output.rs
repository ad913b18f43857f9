//! Command results and their rendering.
//!
//! Every command produces one [`Output`]. JSON mode serialises it as is;
//! human mode prints the same fields with numbers rounded to a fixed
//! number of decimals.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use zbgof::null::CumulantSource;
use zbgof::sim::reproduce::ToleranceKind;
use zbgof::{
    AlternativeSpec, DeltaResult, MomentSummary, PearsonFamily, PowerEntry, Report, SeedSpec,
    StatisticId,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Pearson fit to the limiting null law.
    Pearson,
    /// Simulated null distribution at the sample size.
    #[value(alias = "monte-carlo")]
    Montecarlo,
}

/// How a critical value or p-value was obtained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum Provenance {
    Pearson {
        a: f64,
        family: PearsonFamily,
    },
    MonteCarlo {
        n: usize,
        replications: usize,
        seed: SeedSpec,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestOutcome {
    pub input: String,
    pub n: usize,
    pub statistic: StatisticId,
    pub value: f64,
    pub alpha: f64,
    pub method: Method,
    pub p_value: f64,
    pub critical_value: f64,
    pub reject: bool,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CumulantsOutput {
    pub a: f64,
    pub source: CumulantSource,
    pub kappa: [f64; 4],
    pub moments: MomentSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantileValue {
    pub level: f64,
    pub value: f64,
    /// Monte Carlo standard error; absent for Pearson quantiles.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub std_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantileRow {
    pub a: f64,
    pub quantiles: Vec<QuantileValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantilesOutput {
    pub provenance: Vec<Provenance>,
    pub rows: Vec<QuantileRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerOutput {
    pub power: PowerEntry,
    pub provenance: Provenance,
    pub seed: SeedSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaOutput {
    pub alternative: AlternativeSpec,
    pub a: f64,
    pub result: DeltaResult,
    /// Draws used when the Monte Carlo path was taken.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mc_budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<SeedSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Output {
    Test(TestOutcome),
    Cumulants(CumulantsOutput),
    Quantiles(QuantilesOutput),
    Power(PowerOutput),
    Delta(DeltaOutput),
    Reproduce(Report),
}

pub fn to_json(out: &Output) -> String {
    let mut s = serde_json::to_string_pretty(out).expect("outputs serialise");
    s.push('\n');
    s
}

/// `x` with `digits` decimals, switching to scientific notation where
/// that would hide all significant digits or be unwieldy.
pub fn fmt_num(x: f64, digits: usize) -> String {
    let ax = x.abs();
    if x == 0.0 || !x.is_finite() || (ax >= 0.5 * 10f64.powi(-(digits as i32)) && ax < 1e9) {
        format!("{x:.digits$}")
    } else {
        format!("{x:.prec$e}", prec = digits.saturating_sub(1))
    }
}

fn seed_str(s: &SeedSpec) -> String {
    format!("{}/{}", s.master_seed, s.stream_index)
}

fn provenance_str(p: &Provenance, d: usize) -> String {
    match p {
        Provenance::Pearson { a, family } => format!(
            "Pearson type {family:?} fit to the limiting null law at a = {}",
            fmt_num(*a, d)
        ),
        Provenance::MonteCarlo {
            n,
            replications,
            seed,
        } => format!(
            "{replications} simulated N(0,1) samples of size {n}, seed {}",
            seed_str(seed)
        ),
    }
}

pub fn to_human(out: &Output, d: usize) -> String {
    let f = |x: f64| fmt_num(x, d);
    let mut s = String::new();
    match out {
        Output::Test(t) => {
            writeln!(s, "input           {}", t.input).unwrap();
            writeln!(s, "n               {}", t.n).unwrap();
            writeln!(s, "statistic       {} = {}", t.statistic, f(t.value)).unwrap();
            writeln!(s, "p-value         {}", f(t.p_value)).unwrap();
            writeln!(s, "critical value  {} (alpha = {})", f(t.critical_value), f(t.alpha)).unwrap();
            writeln!(s, "reject          {}", t.reject).unwrap();
            writeln!(s, "method          {}", method_str(t.method)).unwrap();
            writeln!(s, "provenance      {}", provenance_str(&t.provenance, d)).unwrap();
        }
        Output::Cumulants(c) => {
            writeln!(s, "a            {}", f(c.a)).unwrap();
            writeln!(s, "source       {}", match c.source {
                CumulantSource::ClosedForm => "closed form",
                CumulantSource::QuadratureOracle => "quadrature oracle",
            })
            .unwrap();
            for (i, k) in c.kappa.iter().enumerate() {
                writeln!(s, "kappa{}       {}", i + 1, f(*k)).unwrap();
            }
            writeln!(s, "mean         {}", f(c.moments.mean)).unwrap();
            writeln!(s, "variance     {}", f(c.moments.variance)).unwrap();
            writeln!(s, "sqrt(beta1)  {}", f(c.moments.sqrt_beta1)).unwrap();
            writeln!(s, "beta2        {}", f(c.moments.beta2)).unwrap();
        }
        Output::Quantiles(q) => {
            for p in &q.provenance {
                writeln!(s, "# {}", provenance_str(p, d)).unwrap();
            }
            let levels: Vec<f64> = q
                .rows
                .first()
                .map(|r| r.quantiles.iter().map(|p| p.level).collect())
                .unwrap_or_default();
            write!(s, "{:>10}", "a").unwrap();
            for l in &levels {
                write!(s, "  {:>18}", format!("q={}", f(*l))).unwrap();
            }
            s.push('\n');
            for r in &q.rows {
                write!(s, "{:>10}", f(r.a)).unwrap();
                for p in &r.quantiles {
                    let cell = match p.std_error {
                        Some(se) => format!("{} ({})", f(p.value), f(se)),
                        None => f(p.value),
                    };
                    write!(s, "  {cell:>18}").unwrap();
                }
                s.push('\n');
            }
        }
        Output::Power(p) => {
            let e = &p.power;
            writeln!(s, "alternative     {}", e.alternative).unwrap();
            writeln!(s, "n               {}", e.n).unwrap();
            writeln!(s, "statistic       {}", e.statistic).unwrap();
            writeln!(s, "alpha           {}", f(e.alpha)).unwrap();
            writeln!(s, "replications    {}", e.replications).unwrap();
            writeln!(s, "critical value  {}", f(e.critical_value)).unwrap();
            writeln!(s, "rejection rate  {} (SE {})", f(e.rejection_rate), f(e.mc_std_error)).unwrap();
            writeln!(s, "provenance      {}", provenance_str(&p.provenance, d)).unwrap();
            writeln!(s, "seed            {}", seed_str(&p.seed)).unwrap();
        }
        Output::Delta(o) => {
            writeln!(s, "alternative  {}", o.alternative).unwrap();
            writeln!(s, "a            {}", f(o.a)).unwrap();
            writeln!(s, "delta        {}", f(o.result.delta)).unwrap();
            writeln!(s, "std error    {}", f(o.result.std_error)).unwrap();
            writeln!(s, "method       {}", serde_json::to_value(o.result.method).unwrap().as_str().unwrap()).unwrap();
            if let Some(b) = o.mc_budget {
                writeln!(s, "mc budget    {b}").unwrap();
            }
            if let Some(seed) = &o.seed {
                writeln!(s, "seed         {}", seed_str(seed)).unwrap();
            }
        }
        Output::Reproduce(r) => {
            writeln!(
                s,
                "# {} reproduction, {} replications ({} for critical values), seed {}",
                serde_json::to_value(r.table).unwrap().as_str().unwrap(),
                r.budget.replications,
                r.budget.critical_replications,
                seed_str(&r.seed)
            )
            .unwrap();
            for note in &r.notes {
                writeln!(s, "# {note}").unwrap();
            }
            let width = r.cells.iter().map(|c| c.cell_id.len()).max().unwrap_or(4);
            writeln!(s, "{:<width$}  {:>12}  {:>12}  {:>12}  {:>12}  result", "cell", "reference", "reproduced", "std error", "tolerance").unwrap();
            for c in &r.cells {
                let tol = match c.tolerance_kind {
                    ToleranceKind::Absolute => f(c.tolerance),
                    ToleranceKind::Relative => format!("{}rel", f(c.tolerance)),
                };
                let opt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), f);
                write!(
                    s,
                    "{:<width$}  {:>12}  {:>12}  {:>12}  {:>12}  {}",
                    c.cell_id,
                    f(c.paper_value),
                    opt(c.reproduced_value),
                    opt(c.std_error),
                    tol,
                    if c.pass { "pass" } else { "FAIL" }
                )
                .unwrap();
                if let Some(e) = &c.error {
                    write!(s, " ({e})").unwrap();
                }
                s.push('\n');
            }
            writeln!(s, "# {} of {} cells within tolerance", r.passed(), r.cells.len()).unwrap();
        }
    }
    s
}

fn method_str(m: Method) -> &'static str {
    match m {
        Method::Pearson => "pearson",
        Method::Montecarlo => "montecarlo",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.778687, 4), "0.7787");
        assert_eq!(fmt_num(2.0, 4), "2.0000");
        assert_eq!(fmt_num(0.0, 4), "0.0000");
        assert_eq!(fmt_num(1.234e-7, 4), "1.234e-7");
        assert_eq!(fmt_num(-0.00004, 4), "-4.000e-5");
    }
}
