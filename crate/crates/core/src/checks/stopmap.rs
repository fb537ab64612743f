use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::json;

use super::Finding;
use crate::error::{Error, Result};
use crate::numeration::{Base, Digit, Nat};

/// Outcome of iterating the stop map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopMapRun {
    pub base: Base,
    pub stop_complement: BTreeSet<u32>,
    pub start: Nat,
    pub budget: u64,
    /// Number of ceiling steps taken before the residue left `S`, or `None`
    /// if it stayed inside for the whole budget.
    pub steps_to_stop: Option<u64>,
}

fn validate(base: Base, s: &BTreeSet<u32>) -> Result<()> {
    if s.is_empty() {
        return Err(Error::InvalidArgument(
            "residue set S must be nonempty".into(),
        ));
    }
    if let Some(&bad) = s.iter().find(|&&r| r >= base.q()) {
        return Err(Error::InvalidArgument(format!(
            "residue {bad} is not a class modulo {}",
            base.q()
        )));
    }
    Ok(())
}

/// Iterates `x -> ceil(p x / q)` while `x mod q` lies in `s`.
///
/// The residues of `x_0, ..., x_{budget-1}` are examined; the run stops at the
/// first one outside `s`.
pub fn stop_map_run(base: Base, s: &BTreeSet<u32>, x0: &Nat, budget: u64) -> Result<StopMapRun> {
    validate(base, s)?;
    if x0.is_zero() {
        return Err(Error::InvalidArgument(
            "start value must be positive".into(),
        ));
    }
    let (p, q) = (Nat::from(base.p()), Nat::from(base.q()));
    let mut x = x0.clone();
    let mut steps_to_stop = None;
    for m in 0..budget {
        let r = (&x % &q).to_u32().expect("residue below q");
        if !s.contains(&r) {
            steps_to_stop = Some(m);
            break;
        }
        x = (&x * &p).div_ceil(&q);
    }
    Ok(StopMapRun {
        base,
        stop_complement: s.clone(),
        start: x0.clone(),
        budget,
        steps_to_stop,
    })
}

/// Letters of the minimal word matching the residues in `s`.
///
/// The letter emitted from `x` is `(-p x) mod q`, so the run continues exactly
/// while the minimal word stays inside `{(-p s) mod q : s in S}`.
pub fn stop_letters(base: Base, s: &BTreeSet<u32>) -> BTreeSet<Digit> {
    let (p, q) = (base.p() as u64, base.q() as u64);
    s.iter()
        .map(|&r| ((q - (p * r as u64) % q) % q) as Digit)
        .collect()
}

/// A finding when the run did not stop within its budget.
pub fn stop_map_finding(run: &StopMapRun) -> Option<Finding> {
    run.steps_to_stop.is_none().then(|| {
        Finding::new(
            "stopmap",
            json!({
                "base": run.base.to_string(),
                "S": run.stop_complement,
                "x0": run.start.to_string(),
                "budget": run.budget,
            }),
            json!("no stop within budget"),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn examples() {
        let b: Base = "3/2".parse().unwrap();
        let r = stop_map_run(b, &set(&[0]), &Nat::from(2u32), 10).unwrap();
        assert_eq!(r.steps_to_stop, Some(1));
        let r = stop_map_run(b, &set(&[0, 1]), &Nat::from(2u32), 500).unwrap();
        assert_eq!(r.steps_to_stop, None);
        assert!(stop_map_finding(&r).is_some());
    }

    #[test]
    fn bad_sets() {
        let b: Base = "7/3".parse().unwrap();
        assert!(stop_map_run(b, &set(&[]), &Nat::from(2u32), 10).is_err());
        assert!(stop_map_run(b, &set(&[3]), &Nat::from(2u32), 10).is_err());
        assert!(stop_map_run(b, &set(&[1]), &Nat::from(0u32), 10).is_err());
    }

    #[test]
    fn letter_relabelling() {
        let b: Base = "7/3".parse().unwrap();
        // -7 s mod 3 = 2 s mod 3
        assert_eq!(stop_letters(b, &set(&[0, 1])), set(&[0, 2]));
        let b: Base = "3/2".parse().unwrap();
        assert_eq!(stop_letters(b, &set(&[0])), set(&[0]));
    }
}
