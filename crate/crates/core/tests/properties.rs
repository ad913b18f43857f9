use proptest::prelude::*;
use zbgof::competitors::CompetitorId;
use zbgof::sim::critical::simulate_null_statistics;
use zbgof::*;

fn samples() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0f64..10.0, 5..40).prop_filter("spread", |x| {
        let m = x.iter().sum::<f64>() / x.len() as f64;
        x.iter().map(|v| (v - m).powi(2)).sum::<f64>() / x.len() as f64 > 1e-2
    })
}

fn all_statistics() -> Vec<StatisticId> {
    let mut v: Vec<StatisticId> = [0.1, 1.0, 5.0]
        .iter()
        .map(|&a| StatisticId::z(a).unwrap())
        .collect();
    v.extend(
        [
            CompetitorId::Ad,
            CompetitorId::Sw,
            CompetitorId::Jb,
            CompetitorId::Hv { gamma: 2.5 },
            CompetitorId::Be { a: 1.0 },
            CompetitorId::Bhep { beta: 1.0 },
            CompetitorId::Bcmr,
        ]
        .map(StatisticId::from),
    );
    v
}

/// Invariant under reflection `x -> -x` as well.
fn reflection_symmetric(s: &StatisticId) -> bool {
    !matches!(
        s,
        StatisticId::Competitor {
            test: CompetitorId::Sw | CompetitorId::Be { .. } | CompetitorId::Bcmr
        }
    )
}

fn close(x: f64, y: f64, rel: f64) -> bool {
    (x - y).abs() <= rel * x.abs().max(y.abs()).max(1e-6)
}

fn stat(s: &StatisticId, x: &[f64]) -> f64 {
    s.compute(&Sample::new(x.to_vec()).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn affine_invariance_positive_scale(x in samples(), c in 0.01f64..100.0, d in -50.0f64..50.0) {
        let y: Vec<f64> = x.iter().map(|v| c * v + d).collect();
        for s in all_statistics() {
            let (u, v) = (stat(&s, &x), stat(&s, &y));
            prop_assert!(close(u, v, 1e-8), "{s}: {u} vs {v}");
        }
    }

    #[test]
    fn affine_invariance_negative_scale(x in samples(), c in -100.0f64..-0.01, d in -50.0f64..50.0) {
        let y: Vec<f64> = x.iter().map(|v| c * v + d).collect();
        for s in all_statistics().iter().filter(|s| reflection_symmetric(s)) {
            let (u, v) = (stat(s, &x), stat(s, &y));
            prop_assert!(close(u, v, 1e-8), "{s}: {u} vs {v}");
        }
    }

    #[test]
    fn permutation_invariance(x in samples(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut y = x.clone();
        y.shuffle(&mut SeedSpec::new(seed, 0).rng(0));
        for s in all_statistics() {
            let (u, v) = (stat(&s, &x), stat(&s, &y));
            prop_assert!(close(u, v, 1e-10), "{s}: {u} vs {v}");
        }
    }

    #[test]
    fn l2_statistics_nonnegative(x in samples()) {
        for s in ["Z(0.25)", "Z(1)", "Z(10)", "BHEP(1)", "BHEP(0.5)"] {
            let v = stat(&s.parse().unwrap(), &x);
            prop_assert!(v >= -1e-10, "{s}: {v}");
        }
    }

    #[test]
    fn closed_form_matches_integral(x in samples(), a in 0.2f64..5.0) {
        let res = scale_residuals(&Sample::new(x).unwrap()).unwrap();
        let a = TuningParam::new(a).unwrap();
        let c = z_statistic(&res, a);
        let i = z_statistic_integral(&res, a, &QuadratureSpec::adaptive(10.0)).unwrap();
        prop_assert!(close(c, i, 1e-8), "{c} vs {i}");
    }

    #[test]
    fn sampling_is_deterministic(n in 1usize..200, master in any::<u64>(), stream in any::<u64>()) {
        let seed = SeedSpec::new(master, stream);
        for alt in ["t3", "NMix(0.3,1,0.25)", "Gum(1,2)", "B(2,5)"] {
            let spec: AlternativeSpec = alt.parse().unwrap();
            prop_assert_eq!(
                sample_alternative(&spec, n, seed).unwrap(),
                sample_alternative(&spec, n, seed).unwrap()
            );
        }
    }

    #[test]
    fn sw_in_unit_interval(x in samples()) {
        let w = stat(&"SW".parse().unwrap(), &x);
        prop_assert!(w > 0.0 && w <= 1.0, "{w}");
    }
}

#[test]
fn affine_invariance_with_the_sample_sd_divisor() {
    let x = sample_alternative(&"chi2_5".parse().unwrap(), 30, SeedSpec::new(4, 4)).unwrap();
    let y: Vec<f64> = x.iter().map(|v| -3.0 * v + 7.0).collect();
    let s: StatisticId = "Z(1,n-1)".parse().unwrap();
    assert!(close(stat(&s, &x), stat(&s, &y), 1e-10));
}

#[test]
fn size_at_own_critical_values() {
    // Each statistic's level-0.05 test, calibrated on one set of null
    // samples, rejects about 5% of an independent set.
    let alpha = 0.05;
    let (reps, crit_reps) = (4000, 20_000);
    // Binomial noise of the rate plus that of the calibrating quantile.
    let bound = 3.0 * (alpha * (1.0 - alpha) * (1.0 / reps as f64 + 1.0 / crit_reps as f64)).sqrt();
    for s in all_statistics() {
        let level = if s.rejects_large() { 1.0 - alpha } else { alpha };
        let table = sim::simulate_quantile_table(&s, 30, &[level], crit_reps, SeedSpec::new(21, 0)).unwrap();
        let crit = table.critical_value(alpha).unwrap();
        let fresh = simulate_null_statistics(&s, 30, reps, SeedSpec::new(21, 1)).unwrap();
        let rate = fresh
            .iter()
            .filter(|&&v| if s.rejects_large() { v > crit } else { v < crit })
            .count() as f64
            / reps as f64;
        assert!((rate - alpha).abs() <= bound, "{s}: {rate}");
    }
}
