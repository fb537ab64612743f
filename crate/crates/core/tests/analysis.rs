//! Richness, deviation and ensemble invariants.

use proptest::prelude::*;
use ratbase::analysis::{deviation_curve, ensemble_stats, richness_profile, summarize, Series};
use ratbase::harness::{member_richness, members, SeedSelection, Source};
use ratbase::numeration::{Base, Nat};
use ratbase::streams::{baseline_stream, BaselineSpec, Extremal, ExtremalStream};

fn b(s: &str) -> Base {
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn thresholds_respect_the_floor(q in 2u32..5, seed in any::<u64>()) {
        let mut s = baseline_stream(BaselineSpec::random(q, seed)).unwrap();
        let ls: Vec<u32> = (1..=5).collect();
        let reports = richness_profile(&mut s, &ls, 200_000).unwrap();
        let mut prev = 0;
        for r in reports {
            let t = r.threshold().expect("random words get rich quickly");
            prop_assert!(t >= (q as u64).pow(r.l) + r.l as u64 - 1);
            prop_assert!(t > prev);
            prev = t;
        }
    }

    #[test]
    fn minimal_word_thresholds_are_monotone(v in 1u64..1 << 40) {
        let base = b("3/2");
        let mut s = ExtremalStream::from_value(base, Extremal::Min, &Nat::from(v));
        let ls: Vec<u32> = (1..=8).collect();
        let r = richness_profile(&mut s, &ls, 50_000).unwrap();
        for w in r.windows(2) {
            if let (Some(a), Some(c)) = (w[0].threshold(), w[1].threshold()) {
                prop_assert!(c > a);
            }
            // once a length is incomplete every longer one is too
            if w[0].threshold().is_none() {
                prop_assert!(w[1].threshold().is_none());
            }
        }
    }

    #[test]
    fn deviation_is_a_frequency_gap(q in 2u32..4, l in 1u32..4, seed in any::<u64>()) {
        let mut s = baseline_stream(BaselineSpec::random(q, seed)).unwrap();
        let c = deviation_curve(&mut s, l, &[l as u64, 10, 100, 1000]).unwrap();
        let bound = 1.0 - 1.0 / (q as f64).powi(l as i32);
        for (_, d) in c.samples {
            prop_assert!((0.0..=bound + 1e-12).contains(&d));
        }
    }

    #[test]
    fn band_is_ordered(values in proptest::collection::vec(-1e3f64..1e3, 1..300)) {
        let p = summarize(1, &values);
        prop_assert!(p.min <= p.d10 && p.d10 <= p.d90 && p.d90 <= p.max);
        prop_assert!(p.min <= p.mean && p.mean <= p.max);
    }
}

#[test]
fn deviation_decays_for_a_minimal_word() {
    let mut s = ExtremalStream::from_value(b("3/2"), Extremal::Min, &Nat::from(1u32));
    let c = deviation_curve(&mut s, 3, &[1_000, 10_000, 100_000]).unwrap();
    let d: Vec<f64> = c.samples.iter().map(|x| x.1).collect();
    assert!(d[2] < d[0], "{d:?}");
    assert!(d[2] < 0.01, "{d:?}");
}

#[test]
fn ensemble_members_must_share_a_grid() {
    let a = Series::new(vec![1, 2], vec![0.0, 1.0]);
    let c = Series::new(vec![1, 3], vec![0.0, 1.0]);
    assert!(ensemble_stats(&[a.clone(), a.clone()]).is_ok());
    assert!(ensemble_stats(&[a, c]).is_err());
    assert!(ensemble_stats(&[]).is_err());
}

#[test]
fn minimal_words_fall_inside_the_random_band() {
    // reduced version of the random-seed family against 100 random words
    let len = 20_000;
    let ls: Vec<u32> = (1..=7).collect();
    let band: Vec<Vec<f64>> = members(&Source::Random {
        q: 2,
        count: 100,
        rng_seed: 1,
    })
    .iter()
    .map(|m| {
        member_richness(m, &ls, len)
            .unwrap()
            .iter()
            .map(|r| r.threshold().unwrap() as f64)
            .collect()
    })
    .collect();
    let subject = members(&Source::Minimal {
        base: b("3/2"),
        seeds: SeedSelection::Random {
            count: 100,
            max_value: 1 << 50,
            rng_seed: 2,
        },
    });
    let mut inside = 0;
    let mut total = 0;
    for m in &subject {
        for r in member_richness(m, &ls, len).unwrap() {
            let Some(t) = r.threshold() else { continue };
            let col: Vec<f64> = band.iter().map(|row| row[r.l as usize - 1]).collect();
            let p = summarize(r.l as u64, &col);
            total += 1;
            if (p.min..=p.max).contains(&(t as f64)) {
                inside += 1;
            }
        }
    }
    assert!(inside * 100 >= total * 95, "{inside}/{total} inside");
}

#[test]
fn default_grid_spec_matches_default_grid() {
    use ratbase::analysis::default_grid;
    use ratbase::harness::GridSpec;
    for (l, len) in [(1, 10), (7, 1_000_000), (5, 100_000), (3, 3)] {
        assert_eq!(GridSpec::default().points(l, len), default_grid(l, len));
    }
}
