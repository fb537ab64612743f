//! Runs each conjecture-chain check once and prints what the ledger caught.

use std::collections::BTreeSet;

use ratbase::checks::{
    collatz_batch, equidistribution_finding, equidistribution_histogram, letter_coverage,
    stop_letters, stop_map_batch, z_witness_search, FindingsLedger,
};
use ratbase::numeration::{Base, Nat};
use ratbase::streams::{Extremal, ExtremalStream};

fn main() -> ratbase::Result<()> {
    let ledger = FindingsLedger::in_memory();
    let b32: Base = "3/2".parse()?;

    let h = equidistribution_histogram(b32, &Nat::from(1u32), 2, 100_000)?;
    println!("T_3/2 iterates mod 4: {:?}", h.frequencies());
    if let Some(f) = equidistribution_finding(b32, &Nat::from(1u32), &h, 0.01) {
        ledger.record(f)?;
    }

    let b73: Base = "7/3".parse()?;
    let hits: Vec<u64> = (1..20u32)
        .map(|n| z_witness_search(b73, &Nat::from(n), 10_000).map(|h| h.unwrap_or(0)))
        .collect::<ratbase::Result<_>>()?;
    println!("first `22` in wmin_7/3(rep n), n = 1..19: {hits:?}");

    let mut w = ExtremalStream::from_value(b73, Extremal::Max, &Nat::from(5u32));
    println!(
        "letters of wmax_7/3(61): {:?}",
        letter_coverage(&mut w, 100)?.seen()
    );

    let s: BTreeSet<u32> = [0, 1].into();
    let starts: Vec<Nat> = (1u32..=20).map(Nat::from).collect();
    let runs = stop_map_batch(b73, &s, &starts, 1_000, &ledger)?;
    let steps: Vec<_> = runs.iter().map(|r| r.steps_to_stop).collect();
    println!(
        "stop map 7/3 with S = {{0,1}} (word letters {:?}): {steps:?}",
        stop_letters(b73, &s)
    );

    let runs = collatz_batch(5, &starts, 10_000, &ledger)?;
    let reach = runs.iter().filter(|t| t.reaches_one()).count();
    println!("5x+1 halved: {reach} of {} starts reach 1", runs.len());

    println!("{} findings", ledger.len());
    for f in ledger.records().iter().take(3) {
        println!("  {}", serde_json::to_string(f).expect("plain json"));
    }
    Ok(())
}
