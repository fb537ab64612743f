//! Streaming normality statistics.
//!
//! Every tracker reads the word once. A length-`l` factor is encoded as an
//! integer in base `q` and updated in constant time per letter, so the memory
//! footprint is one cell per possible factor (`q^l` cells, capped by
//! [`DEFAULT_CELL_CAP`]).

mod complexity;
mod deviation;
mod ensemble;
mod richness;

pub use complexity::complexity_count;
pub use deviation::{default_grid, deviation_curve, DeviationCurve, DeviationTracker};
pub use ensemble::{ensemble_stats, summarize, EnsemblePoint, EnsembleStats, Series};
pub use richness::{
    expected_random_threshold, richness_profile, richness_threshold, rt_champernowne, rt_debruijn,
    RichnessOutcome, RichnessReport, RichnessTracker,
};

use crate::error::{Error, Result};
use crate::numeration::Digit;
use crate::streams::{Alphabet, LetterStream};

/// Default bound on `q^l`, the number of counters or flags a tracker allocates.
pub const DEFAULT_CELL_CAP: u64 = 1 << 27;

/// Letters pulled from a stream per `fill` call.
pub(crate) const CHUNK: usize = 1 << 14;

/// `q^l`, or a resource-limit error if it exceeds `cap`.
pub fn cell_count(q: u32, l: u32, cap: u64) -> Result<u64> {
    let mut cells: u128 = 1;
    for _ in 0..l {
        cells *= q as u128;
        if cells > cap as u128 {
            break;
        }
    }
    if cells > cap as u128 {
        return Err(Error::ResourceLimit {
            what: "factor table (q^l cells)",
            needed: (q as u128).checked_pow(l).unwrap_or(u128::MAX),
            cap: cap as u128,
        });
    }
    Ok(cells as u64)
}

/// Rolling base-`q` code of the last `l` letters.
#[derive(Debug, Clone)]
pub struct WindowCode {
    q: u64,
    modulus: u64,
    l: u32,
    code: u64,
    seen: u64,
}

impl WindowCode {
    pub fn new(q: u32, l: u32, cells: u64) -> Self {
        WindowCode {
            q: q as u64,
            modulus: cells,
            l,
            code: 0,
            seen: 0,
        }
    }

    /// Feeds one letter (already shifted into `0..q`) and returns the code of the
    /// window ending here, once `l` letters have been read.
    #[inline]
    pub fn push(&mut self, index: u32) -> Option<u64> {
        self.code = (self.code * self.q + index as u64) % self.modulus;
        self.seen += 1;
        (self.seen >= self.l as u64).then_some(self.code)
    }
}

/// Drives `f(position, letter_index)` over the first `len` letters of `stream`,
/// stopping early when `f` returns `false`. Positions are 1-based.
pub(crate) fn scan<S, F>(stream: &mut S, len: u64, mut f: F) -> Result<u64>
where
    S: LetterStream + ?Sized,
    F: FnMut(u64, u32) -> bool,
{
    let alphabet: Alphabet = stream.alphabet();
    let mut buf = vec![0 as Digit; CHUNK];
    let mut pos = 0u64;
    while pos < len {
        let take = ((len - pos) as usize).min(CHUNK);
        stream.fill(&mut buf[..take])?;
        for &letter in &buf[..take] {
            pos += 1;
            if !f(pos, alphabet.index(letter)?) {
                return Ok(pos);
            }
        }
    }
    Ok(pos)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_cap() {
        assert_eq!(cell_count(2, 17, DEFAULT_CELL_CAP).unwrap(), 1 << 17);
        assert!(matches!(
            cell_count(2, 28, DEFAULT_CELL_CAP),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(cell_count(1000, 100, DEFAULT_CELL_CAP).is_err());
    }

    #[test]
    fn window_codes() {
        let mut w = WindowCode::new(2, 3, 8);
        let codes: Vec<_> = [1, 0, 1, 1, 0].iter().map(|&a| w.push(a)).collect();
        assert_eq!(codes, [None, None, Some(0b101), Some(0b011), Some(0b110)]);
    }
}
