//! Deviation from uniform length-7 factor frequencies for wmin_{7/2}(2)
//! against a band of random binary words.

use ratbase::analysis::{default_grid, deviation_curve, ensemble_stats, Series};
use ratbase::numeration::{Base, Nat};
use ratbase::streams::{baseline_stream, BaselineSpec, Extremal, ExtremalStream, SplitMix64};

fn main() -> ratbase::Result<()> {
    let (l, len) = (7, 100_000);
    let grid = default_grid(l, len);
    let base: Base = "7/2".parse()?;
    let mut w = ExtremalStream::from_value(base, Extremal::Min, &Nat::from(1u32));
    let subject = deviation_curve(&mut w, l, &grid)?;

    let mut rng = SplitMix64::new(1);
    let band: Vec<Series> = (0..50)
        .map(|_| {
            let mut r = baseline_stream(BaselineSpec::random(2, rng.next_u64()))?;
            Ok(Series::from(&deviation_curve(&mut r, l, &grid)?))
        })
        .collect::<ratbase::Result<_>>()?;
    let stats = ensemble_stats(&band)?;

    println!(
        "{:>7} {:>10} {:>10} {:>10} {:>10}",
        "n", "D", "rand d10", "rand mean", "rand d90"
    );
    for (&(n, d), p) in subject.samples.iter().zip(&stats.points).step_by(8) {
        println!(
            "{n:>7} {d:>10.2e} {:>10.2e} {:>10.2e} {:>10.2e}",
            p.d10, p.mean, p.d90
        );
    }
    Ok(())
}
