//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each and exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::Rng;
use zbgof::competitors::CompetitorId;
use zbgof::null::delta::{delta_analytic, delta_monte_carlo};
use zbgof::sim::reproduce::{table3_cell_id, TABLE1, TABLE2_ASYMPTOTIC, TABLE2_LEVELS, TABLE_A};
use zbgof::statistic::{skewness_limit_diagnostic, squared_skewness};
use zbgof::*;

type Outcome = std::result::Result<String, String>;

fn tp(a: f64) -> TuningParam {
    TuningParam::new(a).unwrap()
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs()
}

fn within_time(label: &str, t: Duration, limit: Duration) -> std::result::Result<(), String> {
    if t <= limit {
        Ok(())
    } else {
        Err(format!("{label} took {t:.2?}, limit {limit:.0?}"))
    }
}

fn table1() -> Outcome {
    let start = Instant::now();
    let round4 = |x: f64| (x * 1e4).round() / 1e4;
    let mut bad = Vec::new();
    for (a, row) in TABLE_A.iter().zip(TABLE1) {
        let m = moment_summary(tp(*a)).map_err(|e| e.to_string())?;
        let got = [m.mean, m.variance, m.sqrt_beta1, m.beta2];
        for (g, p) in got.iter().zip(row) {
            if round4(*g) != p {
                bad.push(format!("a={a}: {g:.6} vs {p}"));
            }
        }
    }
    within_time("table 1", start.elapsed(), Duration::from_secs(1))?;
    if bad.is_empty() {
        Ok(format!("32/32 cells to 4 decimals in {:.2?}", start.elapsed()))
    } else {
        Err(bad.join("; "))
    }
}

fn oracle() -> Outcome {
    let start = Instant::now();
    let q = QuadratureSpec::default();
    let mut worst: f64 = 0.0;
    for a in [0.25, 0.5, 1.0, 3.0] {
        for m in 1..=4 {
            let c = cumulant_closed_form(tp(a), m).map_err(|e| e.to_string())?;
            let o = cumulant_oracle(tp(a), m, &q).map_err(|e| e.to_string())?;
            worst = worst.max(rel(c, o));
        }
    }
    within_time("oracle", start.elapsed(), Duration::from_secs(30))?;
    if worst <= 1e-6 {
        Ok(format!("max relative difference {worst:.1e} in {:.2?}", start.elapsed()))
    } else {
        Err(format!("max relative difference {worst:.1e}"))
    }
}

fn asymptotic_quantiles() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (a, row) in TABLE_A.iter().zip(TABLE2_ASYMPTOTIC) {
        let fit = pearson_fit(moment_summary(tp(*a)).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        for (level, reference) in TABLE2_LEVELS.iter().zip(row) {
            let q = pearson_quantile(&fit, *level).map_err(|e| e.to_string())?;
            worst = worst.max(rel(q, reference));
        }
    }
    within_time("asymptotic quantiles", start.elapsed(), Duration::from_secs(10))?;
    if worst <= 0.01 {
        Ok(format!("24 cells, max relative error {worst:.1e} in {:.2?}", start.elapsed()))
    } else {
        Err(format!("max relative error {worst:.1e}"))
    }
}

fn empirical_quantiles() -> Outcome {
    const REFERENCE: [(usize, f64, f64); 9] = [
        (20, 0.5, 6.81869),
        (20, 1.0, 2.14516),
        (20, 3.0, 0.25076),
        (50, 0.5, 6.89826),
        (50, 1.0, 2.20391),
        (50, 3.0, 0.27076),
        (100, 0.5, 6.88596),
        (100, 1.0, 2.23136),
        (100, 3.0, 0.27509),
    ];
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut ok = true;
    for (reps, tol, stream) in [(100_000, 0.02, 0u64), (20_000, 0.04, 100)] {
        let mut worst: f64 = 0.0;
        for (k, (n, a, reference)) in REFERENCE.iter().enumerate() {
            let t = simulate_critical_values(
                *n,
                tp(*a),
                &[0.95],
                reps,
                SeedSpec::default().with_stream(stream + k as u64),
            )
            .map_err(|e| e.to_string())?;
            worst = worst.max(rel(t.quantiles[0].value, *reference));
        }
        ok &= worst <= tol;
        lines.push(format!("{reps} reps: max relative error {worst:.4} (tol {tol})"));
    }
    let msg = format!("{} in {:.1?}", lines.join(", "), start.elapsed());
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn power_subset() -> Outcome {
    const CELLS: [(&str, usize, &str); 8] = [
        ("N(0,1)", 50, "Z(1)"),
        ("t3", 50, "Z(0.5)"),
        ("U(-sqrt3,sqrt3)", 100, "Z(3)"),
        ("chi2_5", 20, "Z(1)"),
        ("LN(0,1)", 20, "Z(0.1)"),
        ("NMix(0.5,1,4)", 50, "Z(0.25)"),
        ("t3", 50, "HV(2.5)"),
        ("chi2_5", 50, "BHEP"),
    ];
    let start = Instant::now();
    let report = reproduce_table(
        TableId::Table3Subset,
        ReplicationBudget {
            replications: 10_000,
            critical_replications: 100_000,
        },
        SeedSpec::default(),
    )
    .map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    let mut ok = true;
    for (alt, n, stat) in CELLS {
        let id = table3_cell_id(alt, n, stat);
        let c = report.cell(&id).ok_or_else(|| format!("missing cell {id}"))?;
        ok &= c.pass && c.tolerance == 0.03;
        parts.push(format!(
            "{alt}/{n}/{stat} {:.1}% (reference {:.0})",
            100.0 * c.reproduced_value.unwrap_or(f64::NAN),
            100.0 * c.paper_value
        ));
    }
    let msg = format!("{} in {:.1?}", parts.join(", "), start.elapsed());
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn random_samples(count: usize, n_range: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Sample> {
    let alts = ["N(0,1)", "t5", "chi2_5", "U", "LN(0,1)", "NMix(0.3,1,0.25)", "Gum(1,2)"];
    let mut rng = SeedSpec::new(seed, 0).rng(0);
    (0..count)
        .map(|k| {
            let n = rng.random_range(n_range.clone());
            let alt: AlternativeSpec = alts[k % alts.len()].parse().unwrap();
            Sample::new(alt.draw(&mut rng, n)).unwrap()
        })
        .collect()
}

fn statistic_oracle() -> Outcome {
    let quad = QuadratureSpec::adaptive(10.0);
    let mut worst: f64 = 0.0;
    for s in random_samples(100, 3..=50, 6) {
        let res = scale_residuals(&s).map_err(|e| e.to_string())?;
        for a in [0.25, 1.0, 5.0] {
            let c = z_statistic(&res, tp(a));
            let i = z_statistic_integral(&res, tp(a), &quad).map_err(|e| e.to_string())?;
            worst = worst.max(rel(c, i));
        }
    }
    if worst <= 1e-8 {
        Ok(format!("300 evaluations, max relative difference {worst:.1e}"))
    } else {
        Err(format!("max relative difference {worst:.1e}"))
    }
}

fn invariance() -> Outcome {
    let stats: Vec<StatisticId> = [
        "Z(0.1)", "Z(1)", "Z(10)", "HV(2.5)", "HV(10)", "BE(1)", "BHEP(1)", "BCMR", "AD", "SW", "JB",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    let symmetric = |s: &StatisticId| {
        !matches!(
            s,
            StatisticId::Competitor {
                test: CompetitorId::Sw | CompetitorId::Be { .. } | CompetitorId::Bcmr
            }
        )
    };
    let mut rng = SeedSpec::new(7, 7).rng(0);
    let mut checks = 0;
    for s in random_samples(50, 5..=60, 7) {
        let x = s.values();
        let c: f64 = rng.random_range(0.01..100.0);
        let d: f64 = rng.random_range(-100.0..100.0);
        let pos = Sample::new(x.iter().map(|v| c * v + d).collect()).unwrap();
        let neg = Sample::new(x.iter().map(|v| -c * v + d).collect()).unwrap();
        let mut perm = x.to_vec();
        perm.reverse();
        perm.rotate_left(x.len() / 3);
        let perm = Sample::new(perm).unwrap();
        for st in &stats {
            let base = st.compute(&s).map_err(|e| e.to_string())?;
            let mut cases = vec![("positive scale", &pos, 1e-8), ("permutation", &perm, 1e-10)];
            if symmetric(st) {
                cases.push(("negative scale", &neg, 1e-8));
            }
            for (label, other, tol) in cases {
                let v = st.compute(other).map_err(|e| e.to_string())?;
                if (v - base).abs() > tol * base.abs().max(1e-6) {
                    return Err(format!("{st} not invariant under {label}: {base} vs {v}"));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} checks over Z and all competitors"))
}

fn skewness_limit() -> Outcome {
    let a = tp(1e6);
    let mut worst: f64 = 0.0;
    for s in random_samples(20, 10..=60, 8) {
        let res = scale_residuals(&s).map_err(|e| e.to_string())?;
        let d = skewness_limit_diagnostic(&res, a);
        worst = worst.max(rel(d, squared_skewness(&res)));
    }
    if worst <= 1e-3 {
        Ok(format!("20 samples, max relative deviation {worst:.1e}"))
    } else {
        Err(format!("max relative deviation {worst:.1e}"))
    }
}

fn delta_consistency() -> Outcome {
    let quad = QuadratureSpec::default();
    let one = tp(1.0);
    let normal = delta_discrepancy(&AlternativeSpec::standard_normal(), one, &quad, 1000, SeedSpec::default())
        .map_err(|e| e.to_string())?;
    if normal.delta != 0.0 {
        return Err(format!("Delta(N(0,1)) = {}", normal.delta));
    }
    let u = AlternativeSpec::standard_uniform();
    let exact = delta_analytic(&u, one, &quad)
        .map_err(|e| e.to_string())?
        .ok_or("no analytic path for the uniform law")?
        .delta;
    let n = 100_000;
    let mc = delta_monte_carlo(&u, one, &quad, n, SeedSpec::default().with_stream(9)).map_err(|e| e.to_string())?;
    let x = sample_alternative(&u, n, SeedSpec::default().with_stream(10)).map_err(|e| e.to_string())?;
    let res = scale_residuals(&Sample::new(x).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let zn = z_statistic_integral(&res, one, &quad).map_err(|e| e.to_string())? / n as f64;
    let z_mc = (mc.delta - exact) / mc.std_error;
    let z_zn = (zn - exact) / mc.std_error;
    let msg = format!(
        "Delta(N)=0; U: analytic {exact:.6}, MC {:.6} ({z_mc:+.2} SE), Z_n/n {zn:.6} ({z_zn:+.2} SE), SE {:.1e}",
        mc.delta, mc.std_error
    );
    if z_mc.abs() <= 3.0 && z_zn.abs() <= 3.0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("table 1 moments", table1),
        ("closed-form cumulants vs oracle", oracle),
        ("table 2 asymptotic quantiles", asymptotic_quantiles),
        ("table 2 simulated quantiles", empirical_quantiles),
        ("table 3 power subset", power_subset),
        ("closed form vs integral statistic", statistic_oracle),
        ("affine and permutation invariance", invariance),
        ("large-a skewness limit", skewness_limit),
        ("Delta consistency", delta_consistency),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(msg) => println!("criterion {}: PASS {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
