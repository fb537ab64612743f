use serde_json::json;

use super::Finding;
use crate::analysis::{cell_count, WindowCode, DEFAULT_CELL_CAP};
use crate::error::{Error, Result};
use crate::numeration::{Base, Digit, Nat};
use crate::streams::{Extremal, ExtremalStream, LetterStream};

/// Counts of `T^m(n) mod q^k` for `m = 0, ..., total - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueHistogram {
    pub modulus: u64,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl ResidueHistogram {
    pub fn frequencies(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| c as f64 / self.total as f64)
            .collect()
    }

    /// `max_r |count_r / total - 1/modulus|`.
    pub fn max_gap(&self) -> f64 {
        let expected = 1.0 / self.modulus as f64;
        self.frequencies()
            .into_iter()
            .map(|f| (f - expected).abs())
            .fold(0.0, f64::max)
    }
}

/// First `k` letters of the minimal word generated from the value `r`, encoded
/// in base `q` with the first letter most significant.
pub fn prefix_code(base: Base, r: u128, k: u32) -> u64 {
    let rule = Extremal::Min.rule(base);
    let (mut x, mut code) = (r, 0u64);
    for _ in 0..k {
        let (y, letter) = rule.apply_small(x);
        code = code * base.q() as u64 + letter as u64;
        x = y;
    }
    code
}

/// Inverse of `r -> prefix_code(r, k)` on `0..q^k`: entry `c` is the residue
/// whose minimal-word prefix has code `c`.
pub fn residue_table(base: Base, k: u32) -> Result<Vec<u64>> {
    let modulus = cell_count(base.q(), k, DEFAULT_CELL_CAP)?;
    let mut table = vec![u64::MAX; modulus as usize];
    for r in 0..modulus {
        let slot = &mut table[prefix_code(base, r as u128, k) as usize];
        assert_eq!(*slot, u64::MAX, "prefix map is not injective modulo q^{k}");
        *slot = r;
    }
    Ok(table)
}

/// Histogram of `T^m(n) mod q^k` for `m < iterations`.
///
/// Residues are read off the minimal word: letters `m+1..m+k` of `wmin(rep(n))`
/// are the prefix generated from `T^m(n)`, which pins down its class modulo
/// `q^k`.
pub fn equidistribution_histogram(
    base: Base,
    n: &Nat,
    k: u32,
    iterations: u64,
) -> Result<ResidueHistogram> {
    if *n == Nat::from(0u32) {
        return Err(Error::InvalidArgument(
            "n = 0 is a fixed point of the ceiling map".into(),
        ));
    }
    let modulus = cell_count(base.q(), k, DEFAULT_CELL_CAP)?;
    let mut counts = vec![0u64; modulus as usize];
    if modulus == 1 {
        counts[0] = iterations;
        return Ok(ResidueHistogram {
            modulus,
            counts,
            total: iterations,
        });
    }
    let table = residue_table(base, k)?;
    let mut stream = ExtremalStream::from_value(base, Extremal::Min, n);
    let mut window = WindowCode::new(base.q(), k, modulus);
    let mut buf = vec![0 as Digit; 1 << 14];
    let mut left = iterations + k as u64 - 1;
    while left > 0 {
        let take = left.min(buf.len() as u64) as usize;
        stream.fill(&mut buf[..take])?;
        for &a in &buf[..take] {
            if let Some(code) = window.push(a) {
                counts[table[code as usize] as usize] += 1;
            }
        }
        left -= take as u64;
    }
    Ok(ResidueHistogram {
        modulus,
        counts,
        total: iterations,
    })
}

/// A finding when some class frequency is more than `tolerance` away from `1/q^k`.
pub fn equidistribution_finding(
    base: Base,
    n: &Nat,
    hist: &ResidueHistogram,
    tolerance: f64,
) -> Option<Finding> {
    let gap = hist.max_gap();
    (gap > tolerance).then(|| {
        Finding::new(
            "equidist",
            json!({
                "base": base.to_string(),
                "n": n.to_string(),
                "modulus": hist.modulus,
                "iterations": hist.total,
                "tolerance": tolerance,
            }),
            json!({ "max_gap": gap, "counts": hist.counts }),
        )
    })
}
