//! Richness thresholds of a few minimal words, in the signed table
//! convention (negative = number of factors still missing at the cap).
//!
//! `cargo run --release --example richness_table -- 1000000` for full length.

use ratbase::analysis::{expected_random_threshold, richness_profile};
use ratbase::numeration::{Base, Nat};
use ratbase::streams::{Extremal, ExtremalStream};

fn main() -> ratbase::Result<()> {
    let cap: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100_000);
    let ls: Vec<u32> = (1..=12).collect();
    println!("cap {cap}");
    for b in ["3/2", "5/2", "7/2", "9/2"] {
        let base: Base = b.parse()?;
        let mut s = ExtremalStream::from_value(base, Extremal::Min, &Nat::from(1u32));
        let row: Vec<String> = richness_profile(&mut s, &ls, cap)?
            .iter()
            .map(|r| r.signed().to_string())
            .collect();
        println!("wmin_{b:<4} {}", row.join(" "));
    }
    let row: Vec<String> = ls
        .iter()
        .map(|&l| expected_random_threshold(2, l).to_string())
        .collect();
    println!("expected  {}", row.join(" "));
    Ok(())
}
