//! Rational base `p/q` numeration systems and the minimal and maximal infinite
//! words they generate.
//!
//! The crate is organised bottom-up:
//!
//! * [`numeration`]: exact representation, valuation, odometer, radix order and
//!   language membership.
//! * [`streams`]: resumable generators for `wmin(u)` / `wmax(u)` and for the
//!   random, Champernowne and de Bruijn comparison words.
//! * [`analysis`]: richness thresholds, deviation from uniformity, factor
//!   complexity and ensemble statistics, all computed in one streaming pass.
//! * [`checks`]: executable consequences of the normality conjecture
//!   (equidistribution of ceiling-map iterates, `(q-1)(q-1)` search, letter
//!   coverage, stop map, Collatz-like trajectories) and the findings ledger.
//! * [`constants`]: base-`q` digits of pi and sqrt(2) for the comparison rows.
//! * [`harness`]: experiment manifests, CSV output and the command-line front end.
//!
//! ```
//! use ratbase::numeration::{rep_u64, Base};
//! use ratbase::streams::wmin_prefix;
//!
//! let base: Base = "7/3".parse().unwrap();
//! assert_eq!(rep_u64(base, 13).to_string(), "614");
//! let seed = rep_u64(base, 1);
//! assert_eq!(wmin_prefix(base, &seed, 3).unwrap().to_string(), "202");
//! ```

pub mod analysis;
pub mod checks;
pub mod constants;
pub mod error;
pub mod harness;
pub mod numeration;
pub mod streams;

pub use error::{Error, Result};
