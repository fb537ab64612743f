//! Executable consequences of the normality conjecture for minimal words.
//!
//! None of these checks can prove anything. Each one either agrees with what
//! the conjecture predicts or produces a [`Finding`], which is recorded in a
//! [`FindingsLedger`] and never turned into an error.

mod collatz;
mod equidist;
mod factors;
mod findings;
mod stopmap;

pub use collatz::{
    collatz_like_trajectory, collatz_step, trajectory_finding, Trajectory, TrajectoryOutcome,
    BIG_VALUE_WINDOW,
};
pub use equidist::{
    equidistribution_finding, equidistribution_histogram, prefix_code, residue_table,
    ResidueHistogram,
};
pub use factors::{
    factor_search, letter_coverage, z_witness_finding, z_witness_search, LetterCoverage,
};
pub use findings::{read_findings, Finding, FindingsLedger};
pub use stopmap::{stop_letters, stop_map_finding, stop_map_run, StopMapRun};

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::Result;
use crate::numeration::{Base, Nat};

/// Largest accepted gap between a class frequency and `1/q^k`, unless configured otherwise.
pub const DEFAULT_EQUIDIST_TOLERANCE: f64 = 0.01;

/// Stop-map runs for many start values on the rayon pool; non-stopping runs
/// are appended to `ledger`.
pub fn stop_map_batch(
    base: Base,
    s: &BTreeSet<u32>,
    starts: &[Nat],
    budget: u64,
    ledger: &FindingsLedger,
) -> Result<Vec<StopMapRun>> {
    starts
        .par_iter()
        .map(|x0| {
            let run = stop_map_run(base, s, x0, budget)?;
            if let Some(f) = stop_map_finding(&run) {
                ledger.record(f)?;
            }
            Ok(run)
        })
        .collect()
}

/// Trajectories for many start values on the rayon pool; cycles avoiding 1
/// are appended to `ledger`.
pub fn collatz_batch(
    p: u64,
    starts: &[Nat],
    budget: u64,
    ledger: &FindingsLedger,
) -> Result<Vec<Trajectory>> {
    starts
        .par_iter()
        .map(|x0| {
            let t = collatz_like_trajectory(p, x0, budget)?;
            if let Some(f) = trajectory_finding(&t) {
                ledger.record(f)?;
            }
            Ok(t)
        })
        .collect()
}
