use std::fmt;

use super::{cell_count, scan, WindowCode, DEFAULT_CELL_CAP};
use crate::error::{Error, Result};
use crate::streams::LetterStream;

/// What a scan up to `cap` letters found for one factor length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RichnessOutcome {
    /// Length of the shortest prefix containing every factor.
    Threshold(u64),
    /// Number of factors still unseen at the cap.
    Missing(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RichnessReport {
    pub l: u32,
    pub outcome: RichnessOutcome,
    pub cap: u64,
}

impl RichnessReport {
    /// Table convention: the threshold when positive, minus the missing count otherwise.
    pub fn signed(&self) -> i64 {
        match self.outcome {
            RichnessOutcome::Threshold(t) => t as i64,
            RichnessOutcome::Missing(m) => -(m as i64),
        }
    }

    pub fn threshold(&self) -> Option<u64> {
        match self.outcome {
            RichnessOutcome::Threshold(t) => Some(t),
            RichnessOutcome::Missing(_) => None,
        }
    }
}

impl fmt::Display for RichnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

/// Seen-set of length-`l` factors as a flat bit array.
#[derive(Debug, Clone)]
pub struct RichnessTracker {
    l: u32,
    cells: u64,
    window: WindowCode,
    seen: Vec<u64>,
    seen_count: u64,
    threshold: Option<u64>,
}

impl RichnessTracker {
    pub fn new(q: u32, l: u32, cell_cap: u64) -> Result<Self> {
        if l == 0 {
            return Err(Error::Parse("factor length must be at least 1".into()));
        }
        let cells = cell_count(q, l, cell_cap)?;
        Ok(RichnessTracker {
            l,
            cells,
            window: WindowCode::new(q, l, cells),
            seen: vec![0; cells.div_ceil(64) as usize],
            seen_count: 0,
            threshold: None,
        })
    }

    /// Feeds the letter at 1-based `position`. Returns `true` once complete.
    #[inline]
    pub fn push(&mut self, position: u64, index: u32) -> bool {
        if let Some(code) = self.window.push(index) {
            let (word, bit) = ((code / 64) as usize, 1u64 << (code % 64));
            if self.seen[word] & bit == 0 {
                self.seen[word] |= bit;
                self.seen_count += 1;
                if self.seen_count == self.cells {
                    self.threshold = Some(position);
                }
            }
        }
        self.threshold.is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.threshold.is_some()
    }

    pub fn report(&self, cap: u64) -> RichnessReport {
        RichnessReport {
            l: self.l,
            outcome: match self.threshold {
                Some(t) => RichnessOutcome::Threshold(t),
                None => RichnessOutcome::Missing(self.cells - self.seen_count),
            },
            cap,
        }
    }
}

/// Richness threshold of `stream` for factor length `l`, reading at most `cap` letters.
pub fn richness_threshold<S: LetterStream + ?Sized>(
    stream: &mut S,
    l: u32,
    cap: u64,
) -> Result<RichnessReport> {
    Ok(richness_profile(stream, &[l], cap)?.remove(0))
}

/// Richness reports for several lengths from a single pass over the stream.
///
/// The pass stops as soon as every length is complete, so the stream may be
/// left anywhere up to `cap`.
pub fn richness_profile<S: LetterStream + ?Sized>(
    stream: &mut S,
    ls: &[u32],
    cap: u64,
) -> Result<Vec<RichnessReport>> {
    let q = stream.alphabet().size;
    let mut trackers = ls
        .iter()
        .map(|&l| RichnessTracker::new(q, l, DEFAULT_CELL_CAP))
        .collect::<Result<Vec<_>>>()?;
    let mut pending = trackers.len();
    scan(stream, cap, |pos, index| {
        for t in trackers.iter_mut() {
            if !t.is_complete() && t.push(pos, index) {
                pending -= 1;
            }
        }
        pending > 0
    })?;
    Ok(trackers.iter().map(|t| t.report(cap)).collect())
}

/// Threshold of the `q`-ary Champernowne word: `l q^l - (q^l - 1)/(q - 1) + l + 1`.
pub fn rt_champernowne(q: u32, l: u32) -> u64 {
    assert!(q >= 2 && l >= 1);
    let ql = (q as u64).pow(l);
    l as u64 * ql - (ql - 1) / (q as u64 - 1) + l as u64 + 1
}

/// Threshold of any infinite de Bruijn word: `q^l + l - 1`.
pub fn rt_debruijn(q: u32, l: u32) -> u64 {
    assert!(q >= 2 && l >= 1);
    (q as u64).pow(l) + l as u64 - 1
}

/// `floor(q^l ln(q^l))`, the asymptotic expected threshold of a random word.
pub fn expected_random_threshold(q: u32, l: u32) -> u64 {
    let ql = (q as f64).powi(l as i32);
    (ql * ql.ln()).floor() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::streams::{Alphabet, VecStream};

    fn vec_stream(s: &str, q: u32) -> VecStream {
        let v = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
        VecStream::new(v, Alphabet::new(0, q), "test").unwrap()
    }

    #[test]
    fn tiny_words() {
        let r = richness_threshold(&mut vec_stream("01", 2), 1, 2).unwrap();
        assert_eq!(r.outcome, RichnessOutcome::Threshold(2));
        let r = richness_threshold(&mut vec_stream("0000", 2), 2, 4).unwrap();
        assert_eq!(r.outcome, RichnessOutcome::Missing(3));
        assert_eq!(r.signed(), -3);
    }

    #[test]
    fn profile_single_length() {
        let mut s = vec_stream("0011", 2);
        let r = richness_profile(&mut s, &[1], 4).unwrap();
        assert_eq!(r[0].threshold(), Some(3));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(rt_champernowne(2, 1), 3);
        assert_eq!(rt_champernowne(2, 2), 8);
        assert_eq!(rt_debruijn(3, 2), 10);
        assert_eq!(expected_random_threshold(2, 10), 7097);
        assert_eq!(expected_random_threshold(2, 17), 1544487);
        assert_eq!(expected_random_threshold(3, 11), 2140774);
        assert_eq!(expected_random_threshold(8, 6), 3270678);
    }

    #[test]
    fn zero_length_rejected() {
        assert!(RichnessTracker::new(2, 0, DEFAULT_CELL_CAP).is_err());
    }
}
