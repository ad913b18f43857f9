//! `zbgof`: test data for normality and run null-distribution and power
//! studies from the command line.

mod input;
mod output;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zbgof::sim::critical::{empirical_quantile, quantile_std_error, simulate_null_statistics, MIN_CRITICAL_REPLICATIONS};
use zbgof::{
    delta_discrepancy, moment_summary, pearson_fit, pearson_pvalue, pearson_quantile, power_study,
    reproduce_table, scale_residuals_with, z_statistic, AlternativeSpec, CriticalSource, CumulantSet,
    DeltaMethod, Error, QuadratureSpec, ReplicationBudget, Sample, SeedSpec, StatisticId, TableId,
    TuningParam, VarianceDivisor,
};

use output::{
    CumulantsOutput, DeltaOutput, Method, Output, PowerOutput, Provenance, QuantileRow, QuantileValue,
    QuantilesOutput, TestOutcome,
};

const THREADS_VAR: &str = "ZBGOF_THREADS";

#[derive(Parser, Debug)]
#[command(name = "zbgof", version, about = "Zero-bias normality test and simulation studies")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    output: Format,
    /// Master seed for every simulated quantity.
    #[arg(long, global = true, default_value_t = SeedSpec::default().master_seed)]
    seed: u64,
    /// Decimals shown in human output.
    #[arg(long, global = true, default_value_t = 4)]
    digits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Divisor {
    /// Residuals scaled by the 1/n standard deviation.
    N,
    /// Residuals scaled by the 1/(n-1) standard deviation.
    #[value(name = "n-1")]
    NMinusOne,
}

impl From<Divisor> for VarianceDivisor {
    fn from(d: Divisor) -> Self {
        match d {
            Divisor::N => VarianceDivisor::N,
            Divisor::NMinusOne => VarianceDivisor::NMinusOne,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test the observations in a file for normality.
    Test(TestArgs),
    /// Cumulants and moments of the limiting null law.
    Cumulants(CumulantsArgs),
    /// Null quantiles, from the Pearson fit or by simulation.
    Quantiles(QuantilesArgs),
    /// Rejection rate under a named alternative.
    Power(PowerArgs),
    /// Population discrepancy of a named alternative.
    Delta(DeltaArgs),
    /// Rerun a reference table and compare cell by cell.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug)]
struct TestArgs {
    /// One value per line, or a single-column CSV; `-` reads stdin.
    input: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = Method::Pearson)]
    method: Method,
    /// Null replications for `--method montecarlo`.
    #[arg(long, default_value_t = 20_000)]
    reps: usize,
    #[arg(long, value_enum, default_value_t = Divisor::N)]
    divisor: Divisor,
}

#[derive(Args, Debug)]
struct CumulantsArgs {
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Use the quadrature oracle instead of the closed forms.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct QuantilesArgs {
    /// One or more tuning parameters, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    a: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0.9,0.95,0.99")]
    levels: Vec<f64>,
    /// Quantiles of the Pearson fit to the limit law (the default without `--n`).
    #[arg(long, conflicts_with = "n")]
    asymptotic: bool,
    /// Simulate the null distribution at this sample size.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 20_000)]
    reps: usize,
    #[arg(long, value_enum, default_value_t = Divisor::N)]
    divisor: Divisor,
}

#[derive(Args, Debug)]
struct PowerArgs {
    /// Alternative, e.g. `t3`, `LN(0,1)`, `NMix(0.5,1,4)`.
    #[arg(long)]
    alt: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Statistic to use instead of `Z(a)`, e.g. `AD`, `SW`, `HV(2.5)`.
    #[arg(long)]
    stat: Option<String>,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Critical value source; Pearson is available for `Z` only.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Samples drawn from the alternative.
    #[arg(long, default_value_t = 20_000)]
    reps: usize,
    /// Null replications behind a simulated critical value.
    #[arg(long, default_value_t = 20_000)]
    crit_reps: usize,
    #[arg(long, value_enum, default_value_t = Divisor::N)]
    divisor: Divisor,
}

#[derive(Args, Debug)]
struct DeltaArgs {
    #[arg(long)]
    alt: String,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Monte Carlo draws when the characteristic function is not elementary.
    #[arg(long, default_value_t = 1_000_000)]
    reps: usize,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    /// `table1`, `table2` or `table3`.
    #[arg(long)]
    table: String,
    #[arg(long, default_value_t = ReplicationBudget::default().replications)]
    reps: usize,
    #[arg(long, default_value_t = ReplicationBudget::default().critical_replications)]
    crit_reps: usize,
}

/// Failure category, mapped to the exit code.
enum Failure {
    /// Bad data or configuration: exit 2.
    Input(String),
    /// The computation itself failed: exit 1.
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooFewObservations { .. }
            | Error::DegenerateSample
            | Error::NonFinite(_)
            | Error::InvalidTuning(_)
            | Error::InvalidParams(_)
            | Error::UnknownAlternativeName(_)
            | Error::UnsupportedAlternative(_)
            | Error::UnsupportedSampleSize { .. }
            | Error::MissingCriticalValue(_) => Failure::Input(e.to_string()),
            Error::QuadratureFailure(_) | Error::InfeasibleMoments { .. } => Failure::Run(e.to_string()),
        }
    }
}

fn input_err(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn check_alpha(alpha: f64) -> Result<(), Failure> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(input_err(format!("alpha must lie in (0, 1), got {alpha}")))
    }
}

fn check_reps(reps: usize) -> Result<(), Failure> {
    if reps < MIN_CRITICAL_REPLICATIONS {
        Err(input_err(format!(
            "need at least {MIN_CRITICAL_REPLICATIONS} replications, got {reps}"
        )))
    } else {
        Ok(())
    }
}

fn read_input(path: &PathBuf) -> Result<Vec<f64>, Failure> {
    let parsed = if path.as_os_str() == "-" {
        input::parse_observations(io::stdin().lock())
    } else {
        let file = File::open(path).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
        input::parse_observations(file)
    };
    parsed.map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn run_test(args: &TestArgs, seed: SeedSpec) -> Result<Output, Failure> {
    let a = TuningParam::new(args.a)?;
    check_alpha(args.alpha)?;
    if args.method == Method::Montecarlo {
        check_reps(args.reps)?;
    }
    let values = read_input(&args.input)?;
    let sample = Sample::new(values)?;
    let divisor = VarianceDivisor::from(args.divisor);
    let statistic = StatisticId::Z { a, divisor };
    let value = z_statistic(&scale_residuals_with(&sample, divisor)?, a);
    let n = sample.len();
    let (p_value, critical_value, reject, provenance) = match args.method {
        Method::Pearson => {
            let fit = pearson_fit(moment_summary(a)?)?;
            let crit = pearson_quantile(&fit, 1.0 - args.alpha)?;
            let p = pearson_pvalue(&fit, value);
            (p, crit, value > crit, Provenance::Pearson { a: args.a, family: fit.family })
        }
        Method::Montecarlo => {
            let mut null = simulate_null_statistics(&statistic, n, args.reps, seed)?;
            null.sort_by(f64::total_cmp);
            let exceed = null.len() - null.partition_point(|&v| v < value);
            let p = (exceed + 1) as f64 / (args.reps + 1) as f64;
            let crit = empirical_quantile(&null, 1.0 - args.alpha);
            let provenance = Provenance::MonteCarlo {
                n,
                replications: args.reps,
                seed,
            };
            (p, crit, p <= args.alpha, provenance)
        }
    };
    Ok(Output::Test(TestOutcome {
        input: args.input.display().to_string(),
        n,
        statistic,
        value,
        alpha: args.alpha,
        method: args.method,
        p_value,
        critical_value,
        reject,
        provenance,
    }))
}

fn run_cumulants(args: &CumulantsArgs) -> Result<Output, Failure> {
    let a = TuningParam::new(args.a)?;
    let set = if args.oracle {
        CumulantSet::oracle(a, &QuadratureSpec::default())?
    } else {
        CumulantSet::closed_form(a)
    };
    Ok(Output::Cumulants(CumulantsOutput {
        a: args.a,
        source: set.source,
        kappa: set.kappa,
        moments: set.moment_summary()?,
    }))
}

fn run_quantiles(args: &QuantilesArgs, seed: SeedSpec) -> Result<Output, Failure> {
    let mut levels = args.levels.clone();
    if let Some(p) = levels.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
        return Err(input_err(format!("quantile level {p} outside (0, 1)")));
    }
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let mut rows = Vec::new();
    let mut provenance = Vec::new();
    for (i, &av) in args.a.iter().enumerate() {
        let a = TuningParam::new(av)?;
        let quantiles = match args.n {
            None => {
                let fit = pearson_fit(moment_summary(a)?)?;
                provenance.push(Provenance::Pearson { a: av, family: fit.family });
                levels
                    .iter()
                    .map(|&level| {
                        Ok(QuantileValue {
                            level,
                            value: pearson_quantile(&fit, level)?,
                            std_error: None,
                        })
                    })
                    .collect::<Result<Vec<_>, Error>>()?
            }
            Some(n) => {
                check_reps(args.reps)?;
                let statistic = StatisticId::Z {
                    a,
                    divisor: args.divisor.into(),
                };
                let stream = seed.with_stream(seed.stream_index + i as u64);
                let mut null = simulate_null_statistics(&statistic, n, args.reps, stream)?;
                null.sort_by(f64::total_cmp);
                provenance.push(Provenance::MonteCarlo {
                    n,
                    replications: args.reps,
                    seed: stream,
                });
                levels
                    .iter()
                    .map(|&level| QuantileValue {
                        level,
                        value: empirical_quantile(&null, level),
                        std_error: Some(quantile_std_error(&null, level)),
                    })
                    .collect()
            }
        };
        rows.push(QuantileRow { a: av, quantiles });
    }
    Ok(Output::Quantiles(QuantilesOutput { provenance, rows }))
}

fn run_power(args: &PowerArgs, seed: SeedSpec) -> Result<Output, Failure> {
    let a = TuningParam::new(args.a)?;
    check_alpha(args.alpha)?;
    if args.reps == 0 {
        return Err(input_err("replications must be positive"));
    }
    let alt: AlternativeSpec = args.alt.parse()?;
    let statistic = match &args.stat {
        Some(s) => s.parse()?,
        None => StatisticId::Z {
            a,
            divisor: args.divisor.into(),
        },
    };
    let is_z = matches!(statistic, StatisticId::Z { .. });
    let method = args
        .method
        .unwrap_or(if is_z { Method::Pearson } else { Method::Montecarlo });
    let (critical, provenance) = match method {
        Method::Pearson => {
            let StatisticId::Z { a, .. } = statistic else {
                return Err(input_err(format!(
                    "Pearson critical values exist for Z only, not {statistic}; use --method montecarlo"
                )));
            };
            let source = CriticalSource::pearson(a)?;
            let CriticalSource::Pearson { fit, .. } = &source else { unreachable!() };
            let prov = Provenance::Pearson { a: a.get(), family: fit.family };
            (source, prov)
        }
        Method::Montecarlo => {
            check_reps(args.crit_reps)?;
            let level = if statistic.rejects_large() { 1.0 - args.alpha } else { args.alpha };
            let table = zbgof::sim::simulate_quantile_table(&statistic, args.n, &[level], args.crit_reps, seed)?;
            let prov = Provenance::MonteCarlo {
                n: args.n,
                replications: args.crit_reps,
                seed,
            };
            (CriticalSource::Simulated(table), prov)
        }
    };
    let power_seed = seed.with_stream(seed.stream_index + 1);
    let power = power_study(&alt, args.n, &statistic, args.alpha, args.reps, power_seed, &critical)?;
    Ok(Output::Power(PowerOutput {
        power,
        provenance,
        seed: power_seed,
    }))
}

fn run_delta(args: &DeltaArgs, seed: SeedSpec) -> Result<Output, Failure> {
    let a = TuningParam::new(args.a)?;
    let alt: AlternativeSpec = args.alt.parse()?;
    let result = delta_discrepancy(&alt, a, &QuadratureSpec::default(), args.reps, seed)?;
    let mc = result.method == DeltaMethod::MonteCarloCf;
    Ok(Output::Delta(DeltaOutput {
        alternative: alt,
        a: args.a,
        result,
        mc_budget: mc.then_some(args.reps),
        seed: mc.then_some(seed),
    }))
}

fn run_reproduce(args: &ReproduceArgs, seed: SeedSpec) -> Result<Output, Failure> {
    let table: TableId = args.table.parse()?;
    let budget = ReplicationBudget {
        replications: args.reps,
        critical_replications: args.crit_reps,
    };
    Ok(Output::Reproduce(reproduce_table(table, budget, seed)?))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| input_err(format!("{THREADS_VAR} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Run(e.to_string()))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    configure_threads()?;
    let seed = SeedSpec::new(cli.seed, 0);
    match &cli.command {
        Command::Test(a) => run_test(a, seed),
        Command::Cumulants(a) => run_cumulants(a),
        Command::Quantiles(a) => run_quantiles(a, seed),
        Command::Power(a) => run_power(a, seed),
        Command::Delta(a) => run_delta(a, seed),
        Command::Reproduce(a) => run_reproduce(a, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = match cli.output {
                Format::Human => output::to_human(&out, cli.digits),
                Format::Json => output::to_json(&out),
            };
            // A closed pipe is not worth a panic.
            let _ = io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trips_through_the_typed_output() {
        let cli = Cli::parse_from(["zbgof", "cumulants", "--a", "0.5"]);
        let out = run(&cli).ok().unwrap();
        let json = output::to_json(&out);
        let back: Output = serde_json::from_str(&json).unwrap();
        assert_eq!(back, out);
        assert_eq!(output::to_json(&back), json);
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
