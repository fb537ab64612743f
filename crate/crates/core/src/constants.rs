//! Base-`q` digits of pi and sqrt(2), used as comparison rows.
//!
//! Digit strings include the integer part, so binary pi starts `11.0010...`
//! and is emitted as `110010...`.
//!
//! sqrt(2) is exact: `floor(sqrt(2) q^n) = isqrt(2 q^(2n))`. Pi comes from the
//! Chudnovsky series summed by binary splitting; every digit string is
//! recomputed with more guard digits and only returned when both runs agree.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::One;

use crate::error::{Error, Result};
use crate::numeration::Digit;
use crate::streams::{Alphabet, VecStream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Constant {
    Pi,
    Sqrt2,
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Constant::Pi => "pi",
            Constant::Sqrt2 => "sqrt2",
        })
    }
}

impl FromStr for Constant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Constant::Pi),
            "sqrt2" => Ok(Constant::Sqrt2),
            _ => Err(Error::Parse(format!(
                "unknown constant `{s}` (expected pi or sqrt2)"
            ))),
        }
    }
}

/// `floor(c q^frac)`, possibly one or two units low for pi.
fn scaled(c: Constant, q: u32, frac: u64) -> BigUint {
    let scale = BigUint::from(q).pow(frac as u32);
    match c {
        Constant::Sqrt2 => (&scale * &scale * 2u32).sqrt(),
        Constant::Pi => pi_scaled(&scale),
    }
}

/// Chudnovsky terms needed for an absolute error below `1/scale`.
fn pi_terms(scale: &BigUint) -> u64 {
    // each term adds about 14.18 decimal digits, i.e. 47.11 bits
    scale.bits() / 47 + 2
}

fn pi_scaled(scale: &BigUint) -> BigUint {
    let (_, q, t) = split(0, pi_terms(scale));
    let root = (scale * scale * 10005u32).sqrt();
    let num = BigInt::from(root * 426880u32) * q;
    let (sign, value) = (num / t).into_parts();
    assert_eq!(sign, Sign::Plus);
    value
}

/// Binary splitting of the Chudnovsky series over terms `a..b`.
fn split(a: u64, b: u64) -> (BigInt, BigInt, BigInt) {
    if b - a == 1 {
        let (p, q) = if a == 0 {
            (BigInt::one(), BigInt::one())
        } else {
            let a = BigInt::from(a);
            let p = (&a * 6 - 5) * (&a * 2 - 1) * (&a * 6 - 1);
            let q = &a * &a * &a * 10_939_058_860_032_000u64;
            (p, q)
        };
        let mut t: BigInt = &p * (BigInt::from(545_140_134u64) * a + 13_591_409u32);
        if a % 2 == 1 {
            t = -t;
        }
        return (p, q, t);
    }
    let m = (a + b) / 2;
    let (p1, q1, t1) = split(a, m);
    let (p2, q2, t2) = split(m, b);
    (&p1 * &p2, q1 * &q2, t1 * q2 + p1 * t2)
}

fn digits_with_guard(c: Constant, q: u32, frac: u64, guard: u64) -> Vec<Digit> {
    let x = scaled(c, q, frac + guard) / BigUint::from(q).pow(guard as u32);
    let integer_part = match c {
        Constant::Pi => 3u32,
        Constant::Sqrt2 => 1,
    };
    let int_len = BigUint::from(integer_part).to_radix_be(q).len();
    let mut d: Vec<Digit> = x.to_radix_be(q).into_iter().map(Digit::from).collect();
    assert_eq!(d.len() as u64, int_len as u64 + frac);
    d.truncate(int_len + frac as usize);
    d
}

/// The first `n` base-`q` digits of `c`, integer part first.
///
/// Fails with [`Error::Unsupported`] for `q < 2` or `q > 256`.
pub fn constant_digits(c: Constant, q: u32, n: usize) -> Result<Vec<Digit>> {
    if !(2..=256).contains(&q) {
        return Err(Error::Unsupported(format!("digits of {c} in base {q}")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let frac = n as u64;
    let mut guard = (frac / 10).max(8);
    loop {
        let a = digits_with_guard(c, q, frac, guard);
        let b = digits_with_guard(c, q, frac, guard + guard / 10 + 1);
        if a == b {
            // `frac` fractional digits always cover `n` total digits
            return Ok(a.into_iter().take(n).collect());
        }
        guard *= 2;
    }
}

/// The first `n` digits of `c` as a stream over `{0, ..., q-1}`.
pub fn constant_stream(c: Constant, q: u32, n: usize) -> Result<VecStream> {
    let digits = constant_digits(c, q, n)?;
    VecStream::new(digits, Alphabet::new(0, q), format!("{c}_base{q}"))
}
