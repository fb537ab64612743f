use super::{cell_count, scan, WindowCode, DEFAULT_CELL_CAP};
use crate::error::Result;
use crate::streams::LetterStream;

/// Samples of `D_{w,l}(n)`, the largest gap between the empirical frequency of
/// a length-`l` factor in the first `n` letters and `q^-l`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationCurve {
    pub l: u32,
    pub samples: Vec<(u64, f64)>,
    /// Grid points below `l`, where no window fits yet.
    pub skipped: Vec<u64>,
}

/// Geometric grid `ceil(1.1^i)`, deduplicated, clipped to `[l, len]`, ending at `len`.
pub fn default_grid(l: u32, len: u64) -> Vec<u64> {
    let mut grid = Vec::new();
    let mut x = 1.0f64;
    loop {
        let n = x.ceil() as u64;
        if n > len {
            break;
        }
        if n >= l as u64 && grid.last() != Some(&n) {
            grid.push(n);
        }
        x *= 1.1;
    }
    if grid.last() != Some(&len) && len >= l as u64 {
        grid.push(len);
    }
    grid
}

/// Sliding-window factor counts.
#[derive(Debug, Clone)]
pub struct DeviationTracker {
    cells: u64,
    window: WindowCode,
    counts: Vec<u32>,
    windows: u64,
}

impl DeviationTracker {
    pub fn new(q: u32, l: u32, cell_cap: u64) -> Result<Self> {
        let cells = cell_count(q, l, cell_cap)?;
        Ok(DeviationTracker {
            cells,
            window: WindowCode::new(q, l, cells),
            counts: vec![0; cells as usize],
            windows: 0,
        })
    }

    #[inline]
    pub fn push(&mut self, index: u32) {
        if let Some(code) = self.window.push(index) {
            self.counts[code as usize] += 1;
            self.windows += 1;
        }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Current deviation, or `None` before the first full window.
    ///
    /// Computed as `max_v |c_v q^l - m| / (m q^l)` on exact integers, with `m`
    /// the number of windows; the single division happens in `f64` at the end.
    pub fn deviation(&self) -> Option<f64> {
        let m = self.windows;
        if m == 0 {
            return None;
        }
        let (mut lo, mut hi, mut total) = (u32::MAX, 0u32, 0u64);
        for &c in &self.counts {
            lo = lo.min(c);
            hi = hi.max(c);
            total += c as u64;
        }
        assert_eq!(total, m, "window counts must sum to n - l + 1");
        let cells = self.cells as i128;
        let m = m as i128;
        let worst = (hi as i128 * cells - m)
            .abs()
            .max((lo as i128 * cells - m).abs());
        Some(worst as f64 / (m as f64 * cells as f64))
    }
}

/// Deviation curve of `stream` sampled at `grid` (prefix lengths, ascending).
pub fn deviation_curve<S: LetterStream + ?Sized>(
    stream: &mut S,
    l: u32,
    grid: &[u64],
) -> Result<DeviationCurve> {
    let q = stream.alphabet().size;
    let mut tracker = DeviationTracker::new(q, l, DEFAULT_CELL_CAP)?;
    let (skipped, grid): (Vec<u64>, Vec<u64>) = grid.iter().partition(|&&n| n < l.max(1) as u64);
    let mut samples = Vec::with_capacity(grid.len());
    let Some(&last) = grid.last() else {
        return Ok(DeviationCurve {
            l,
            samples,
            skipped,
        });
    };
    let mut next = 0usize;
    scan(stream, last, |pos, index| {
        tracker.push(index);
        while next < grid.len() && grid[next] == pos {
            samples.push((pos, tracker.deviation().expect("grid point at least l")));
            next += 1;
        }
        true
    })?;
    Ok(DeviationCurve {
        l,
        samples,
        skipped,
    })
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
    fn small_examples() {
        let c = deviation_curve(&mut vec_stream("000", 2), 1, &[3]).unwrap();
        assert_eq!(c.samples, vec![(3, 0.5)]);
        let c = deviation_curve(&mut vec_stream("0101", 2), 1, &[4]).unwrap();
        assert_eq!(c.samples, vec![(4, 0.0)]);
        let c = deviation_curve(&mut vec_stream("0110", 2), 2, &[1, 2, 4]).unwrap();
        assert_eq!(c.skipped, vec![1]);
        // windows 01, 11, 10: each 1/3 vs 1/4, unseen 00 -> |0 - 1/4|
        assert_eq!(c.samples[1].1, 0.25);
        assert!((c.samples[0].1 - 0.75).abs() < 1e-15);
    }

    #[test]
    fn grid_shape() {
        let g = default_grid(7, 1000);
        assert_eq!(g[0], 7);
        assert_eq!(*g.last().unwrap(), 1000);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(default_grid(5, 3).is_empty());
        assert_eq!(default_grid(1, 1), vec![1]);
    }
}
