use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

use super::Finding;
use crate::error::{Error, Result};
use crate::numeration::Nat;

/// Values above `u64::MAX` are only compared against this many recent iterates.
pub const BIG_VALUE_WINDOW: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrajectoryOutcome {
    /// The orbit entered a cycle: `entry` is the step of the first repeated
    /// value's earlier visit, `smallest` the least cycle element.
    Cycle {
        entry: u64,
        period: u64,
        smallest: Nat,
    },
    /// No repetition detected within the budget.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub p: u64,
    pub start: Nat,
    pub steps: u64,
    pub last: Nat,
    pub max_value: Nat,
    pub outcome: TrajectoryOutcome,
}

impl Trajectory {
    /// Reached the cycle through 1 (for `p = 3`, the `(1, 2)` cycle).
    pub fn reaches_one(&self) -> bool {
        matches!(&self.outcome, TrajectoryOutcome::Cycle { smallest, .. } if smallest.is_one())
    }
}

/// `F_{p/2}(x) = (p x + 1)/2` for odd `x`, `x/2` for even `x`.
pub fn collatz_step(p: u64, x: &Nat) -> Nat {
    if x.is_odd() {
        (x * p + 1u32) >> 1
    } else {
        x >> 1
    }
}

/// Iterates `F_{p/2}` from `x0` for at most `budget` steps, stopping at the
/// first repeated value.
///
/// Every value below `2^64` is remembered; larger values are compared only
/// with the last [`BIG_VALUE_WINDOW`] large iterates, so cycles made of huge
/// values with a longer period go unnoticed.
pub fn collatz_like_trajectory(p: u64, x0: &Nat, budget: u64) -> Result<Trajectory> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "p must be odd and at least 3, got {p}"
        )));
    }
    if x0.is_zero() {
        return Err(Error::InvalidArgument(
            "start value must be positive".into(),
        ));
    }
    let mut small: HashMap<u64, u64> = HashMap::new();
    let mut big: VecDeque<(Nat, u64)> = VecDeque::new();
    let mut x = x0.clone();
    let mut max_value = x.clone();
    let mut step = 0u64;
    let outcome = loop {
        let seen = match x.to_u64() {
            Some(v) => small.insert(v, step),
            None => {
                let hit = big.iter().find(|(v, _)| *v == x).map(|&(_, s)| s);
                if hit.is_none() {
                    if big.len() == BIG_VALUE_WINDOW {
                        big.pop_front();
                    }
                    big.push_back((x.clone(), step));
                }
                hit
            }
        };
        if let Some(entry) = seen {
            let period = step - entry;
            let mut smallest = x.clone();
            let mut y = collatz_step(p, &x);
            for _ in 1..period {
                smallest = smallest.min(y.clone());
                y = collatz_step(p, &y);
            }
            break TrajectoryOutcome::Cycle {
                entry,
                period,
                smallest,
            };
        }
        if step == budget {
            break TrajectoryOutcome::Undetermined;
        }
        x = collatz_step(p, &x);
        step += 1;
        if x > max_value {
            max_value = x.clone();
        }
    };
    Ok(Trajectory {
        p,
        start: x0.clone(),
        steps: step,
        last: x,
        max_value,
        outcome,
    })
}

/// A finding when the orbit neither cycled through 1 nor was cut by the budget.
pub fn trajectory_finding(t: &Trajectory) -> Option<Finding> {
    match &t.outcome {
        TrajectoryOutcome::Cycle {
            smallest, period, ..
        } if !smallest.is_one() => Some(Finding::new(
            "collatz",
            json!({ "p": t.p, "x0": t.start.to_string() }),
            json!({ "cycle_min": smallest.to_string(), "period": period }),
        )),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_six() {
        let t = collatz_like_trajectory(3, &Nat::from(6u32), 100).unwrap();
        // 6 3 5 8 4 2 1 2
        assert_eq!(
            t.outcome,
            TrajectoryOutcome::Cycle {
                entry: 5,
                period: 2,
                smallest: Nat::one()
            }
        );
        assert_eq!(t.max_value, Nat::from(8u32));
        assert!(t.reaches_one());
    }

    #[test]
    fn seven_halves_from_three() {
        let t = collatz_like_trajectory(7, &Nat::from(3u32), 1000).unwrap();
        assert_eq!(t.outcome, TrajectoryOutcome::Undetermined);
        assert_eq!(t.steps, 1000);
        assert!(t.last > Nat::from(3u32));
        assert!(t.max_value.bits() > 64);
        assert!(trajectory_finding(&t).is_none());
    }

    #[test]
    fn five_halves_other_cycle() {
        // 13 -> 33 -> 83 -> 208 -> 104 -> 52 -> 26 -> 13
        let t = collatz_like_trajectory(5, &Nat::from(13u32), 100).unwrap();
        match &t.outcome {
            TrajectoryOutcome::Cycle {
                period, smallest, ..
            } => {
                assert_eq!((*period, smallest.clone()), (7, Nat::from(13u32)));
            }
            other => panic!("{other:?}"),
        }
        assert!(trajectory_finding(&t).is_some());
    }

    #[test]
    fn rejects_even_p() {
        assert!(collatz_like_trajectory(4, &Nat::from(3u32), 10).is_err());
        assert!(collatz_like_trajectory(3, &Nat::from(0u32), 10).is_err());
    }
}
