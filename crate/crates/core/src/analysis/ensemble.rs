use crate::error::{Error, Result};

use super::DeviationCurve;

/// A sampled function `x -> y`: a deviation curve, or thresholds indexed by `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub xs: Vec<u64>,
    pub ys: Vec<f64>,
}

impl Series {
    pub fn new(xs: Vec<u64>, ys: Vec<f64>) -> Self {
        assert_eq!(xs.len(), ys.len());
        Series { xs, ys }
    }
}

impl From<&DeviationCurve> for Series {
    fn from(c: &DeviationCurve) -> Self {
        let (xs, ys) = c.samples.iter().copied().unzip();
        Series { xs, ys }
    }
}

/// Order statistics of an ensemble at one sample point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsemblePoint {
    pub x: u64,
    pub min: f64,
    pub d10: f64,
    pub mean: f64,
    pub d90: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleStats {
    pub points: Vec<EnsemblePoint>,
    pub members: usize,
}

/// Five-number summary of `values` at `x`. Deciles are nearest-rank: the
/// `ceil(0.1 k)`-th and `ceil(0.9 k)`-th order statistics.
pub fn summarize(x: u64, values: &[f64]) -> EnsemblePoint {
    assert!(!values.is_empty());
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let k = v.len();
    let d10 = k.div_ceil(10);
    let d90 = (9 * k).div_ceil(10);
    EnsemblePoint {
        x,
        min: v[0],
        d10: v[d10.max(1) - 1],
        mean: v.iter().sum::<f64>() / k as f64,
        d90: v[d90.max(1) - 1],
        max: v[k - 1],
    }
}

/// Per-point statistics over series sampled on the same grid.
pub fn ensemble_stats(items: &[Series]) -> Result<EnsembleStats> {
    let first = items
        .first()
        .ok_or_else(|| Error::Alignment("empty ensemble".into()))?;
    if let Some((i, _)) = items.iter().enumerate().find(|(_, s)| s.xs != first.xs) {
        return Err(Error::Alignment(format!(
            "member {i} is sampled on a different grid than member 0"
        )));
    }
    let mut column = vec![0.0; items.len()];
    let points = first
        .xs
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            for (slot, s) in column.iter_mut().zip(items) {
                *slot = s.ys[j];
            }
            summarize(x, &column)
        })
        .collect();
    Ok(EnsembleStats {
        points,
        members: items.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn one_to_ten() {
        let v: Vec<f64> = (1..=10).map(f64::from).collect();
        let p = summarize(0, &v);
        assert_eq!(
            (p.min, p.d10, p.mean, p.d90, p.max),
            (1.0, 1.0, 5.5, 9.0, 10.0)
        );
    }

    #[test]
    fn single_member() {
        let s = Series::new(vec![1, 2, 3], vec![0.5, 0.25, 0.125]);
        let e = ensemble_stats(std::slice::from_ref(&s)).unwrap();
        for (p, &y) in e.points.iter().zip(&s.ys) {
            assert_eq!([p.min, p.d10, p.mean, p.d90, p.max], [y; 5]);
        }
    }

    #[test]
    fn misaligned() {
        let a = Series::new(vec![1, 2], vec![0.0, 0.0]);
        let b = Series::new(vec![1, 3], vec![0.0, 0.0]);
        assert!(matches!(ensemble_stats(&[a, b]), Err(Error::Alignment(_))));
        assert!(matches!(ensemble_stats(&[]), Err(Error::Alignment(_))));
    }

    proptest! {
        #[test]
        fn order_statistics_are_ordered(v in proptest::collection::vec(-1e6f64..1e6, 1..200)) {
            let p = summarize(0, &v);
            prop_assert!(p.min <= p.d10 && p.d10 <= p.d90 && p.d90 <= p.max);
            prop_assert!(p.min <= p.mean + 1e-6 && p.mean <= p.max + 1e-6);
        }
    }
}
