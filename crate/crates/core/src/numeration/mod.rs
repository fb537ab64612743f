//! Exact arithmetic of the rational base `p/q` numeration system.
//!
//! A word `a_k ... a_0` over `{0, ..., p-1}` has valuation
//! `(1/q) * sum a_i (p/q)^i`. Every nonnegative integer has exactly one
//! expansion without a leading zero; [`rep`] computes it, [`val`] inverts it and
//! [`successor`] counts in place (the odometer).
//!
//! Nothing in this module uses floating point.

mod rational;
mod word;

pub use rational::Rational;
pub use word::{Digit, Word};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;

/// A rational base `p/q` with `p > q >= 1` coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Base {
    p: u32,
    q: u32,
}

impl Base {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidBase(format!(
                "{p}/{q}: denominator must be positive"
            )));
        }
        if p <= q {
            return Err(Error::InvalidBase(format!("{p}/{q}: need p > q")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidBase(format!(
                "{p}/{q}: p and q are not coprime"
            )));
        }
        Ok(Base { p, q })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Whether digits are rendered as contiguous characters.
    pub fn compact_digits(&self) -> bool {
        self.p <= 10
    }

    /// Renders a word in this base's text format.
    pub fn format_word(&self, w: &Word) -> String {
        w.to_text(self.compact_digits())
    }

    /// Parses a word in this base's text format and checks every digit is `< p`.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let w = Word::parse(s, self.compact_digits())?;
        check_digits(*self, &w)?;
        Ok(w)
    }

    /// `p < q^2`: the regime where the `(q-1)(q-1)` exclusion argument applies.
    pub fn below_q_squared(&self) -> bool {
        (self.p as u64) < (self.q as u64) * (self.q as u64)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::InvalidBase(format!("`{s}`: expected p/q")))?;
        let p = p
            .trim()
            .parse::<u32>()
            .map_err(|e| Error::InvalidBase(format!("`{s}`: {e}")))?;
        let q = q
            .trim()
            .parse::<u32>()
            .map_err(|e| Error::InvalidBase(format!("`{s}`: {e}")))?;
        Base::new(p, q)
    }
}

impl serde::Serialize for Base {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Base {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_digits(base: Base, w: &Word) -> Result<()> {
    if let Some(&d) = w.digits().iter().find(|&&d| d >= base.p) {
        return Err(Error::InvalidWord(format!(
            "digit {d} out of range for base {base}"
        )));
    }
    Ok(())
}

/// Exact valuation `(1/q) * sum a_i (p/q)^i`.
pub fn val(base: Base, w: &Word) -> Result<Rational> {
    check_digits(base, w)?;
    // Horner from the most significant digit: x <- (p x + a) / q.
    let mut num = Nat::zero();
    let mut den = Nat::from(1u32);
    let mut exp = 0u64;
    for &a in w.digits() {
        num = num * base.p + &den * a;
        den *= base.q;
        exp += 1;
    }
    Ok(Rational::from_q_power(num, base.q, exp))
}

/// The canonical expansion of `n`; `rep(0)` is the empty word.
pub fn rep(base: Base, n: &Nat) -> Word {
    let (p, q) = (base.p, base.q);
    let mut n = n.clone();
    let mut digits = Vec::new();
    while !n.is_zero() {
        let qn = n * q;
        let a = (&qn % p).to_u32().expect("remainder below p");
        n = (qn - a) / p;
        digits.push(a);
    }
    digits.reverse();
    Word::from_digits(digits)
}

pub fn rep_u64(base: Base, n: u64) -> Word {
    rep(base, &Nat::from(n))
}

/// Integer value of a word of the language, or an error if its valuation is not integral.
pub fn val_integer(base: Base, w: &Word) -> Result<Nat> {
    val(base, w)?.to_integer().ok_or_else(|| {
        Error::InvalidWord(format!(
            "`{}` does not represent an integer",
            base.format_word(w)
        ))
    })
}

/// Membership in `L_{p/q}`: the empty word, or no leading zero and an integral valuation.
pub fn is_in_language(base: Base, w: &Word) -> bool {
    if w.is_empty() {
        return true;
    }
    if w.digits()[0] == 0 {
        return false;
    }
    matches!(val(base, w), Ok(v) if v.is_integer())
}

fn require_canonical(base: Base, w: &Word) -> Result<()> {
    check_digits(base, w)?;
    if !is_in_language(base, w) {
        return Err(Error::InvalidWord(format!(
            "`{}` is not an expansion in base {base}",
            base.format_word(w)
        )));
    }
    Ok(())
}

/// The odometer: the expansion of `val(w) + 1`, computed digit by digit.
pub fn successor(base: Base, w: &Word) -> Result<Word> {
    require_canonical(base, w)?;
    let (p, q) = (base.p, base.q);
    let mut digits = w.digits().to_vec();
    match digits.iter().rposition(|&a| a < p - q) {
        Some(j) => {
            digits[j] += q;
            for a in &mut digits[j + 1..] {
                *a = *a + q - p;
            }
        }
        None => {
            for a in &mut digits {
                *a = *a + q - p;
            }
            digits.insert(0, q);
        }
    }
    Ok(Word::from_digits(digits))
}

/// Radix order: shorter words first, then lexicographic.
pub fn radix_cmp(a: &Word, b: &Word) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.digits().cmp(b.digits()))
}

/// Default bound on the number of words [`enumerate_rc`] may hold at once.
pub const DEFAULT_RC_CAP: usize = 1 << 20;

/// All `v` of length exactly `l` with `u v` in the language, in radix order.
///
/// Works on valuations: appending digit `d` to a word of value `n` gives
/// `(p n + d) / q`, which must stay integral at every step because the language is
/// prefix-closed.
pub fn enumerate_rc(base: Base, u: &Word, l: usize, cap: usize) -> Result<Vec<Word>> {
    require_canonical(base, u)?;
    let n0 = val_integer(base, u)?;
    let (p, q) = (base.p, base.q);
    let mut frontier: Vec<(Vec<u32>, Nat)> = vec![(Vec::new(), n0)];
    for depth in 0..l {
        let mut next = Vec::new();
        for (suffix, n) in &frontier {
            let pn = n * p;
            // smallest digit making p n + d divisible by q, then every q-th one
            let r = (&pn % q).to_u32().expect("remainder below q");
            let first = (q - r) % q;
            for d in (first..p).step_by(q as usize) {
                if u.is_empty() && depth == 0 && d == 0 {
                    continue;
                }
                let mut s = suffix.clone();
                s.push(d);
                next.push((s, (&pn + d) / q));
                if next.len() > cap {
                    return Err(Error::ResourceLimit {
                        what: "right-continuation enumeration",
                        needed: next.len() as u128,
                        cap: cap as u128,
                    });
                }
            }
        }
        frontier = next;
    }
    Ok(frontier
        .into_iter()
        .map(|(s, _)| Word::from_digits(s))
        .collect())
}

/// `T_{p/q}(n) = ceil(p n / q)`.
pub fn ceil_step(base: Base, n: &Nat) -> Nat {
    (n * base.p + (base.q - 1)) / base.q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Base {
        s.parse().unwrap()
    }

    fn w(base: Base, s: &str) -> Word {
        base.parse_word(s).unwrap()
    }

    #[test]
    fn base_validation() {
        assert!(Base::new(7, 3).is_ok());
        assert!(Base::new(6, 4).is_err());
        assert!(Base::new(3, 3).is_err());
        assert!(Base::new(2, 3).is_err());
        assert!(Base::new(5, 0).is_err());
        assert!("9/6".parse::<Base>().is_err());
        assert!("7-3".parse::<Base>().is_err());
        assert_eq!(b(" 7/3 ").to_string(), "7/3");
    }

    #[test]
    fn val_examples() {
        let base = b("7/3");
        assert_eq!(
            val(base, &w(base, "3")).unwrap(),
            Rational::integer(1u32.into(), 3)
        );
        assert_eq!(val(base, &w(base, "1")).unwrap().to_string(), "1/3");
        assert_eq!(val(base, &Word::empty()).unwrap().to_string(), "0");
        assert_eq!(val(base, &w(base, "10")).unwrap().to_string(), "7/9");
        assert!(val(base, &Word::from_digits(vec![7])).is_err());
    }

    #[test]
    fn rep_examples() {
        let base = b("7/3");
        assert_eq!(base.format_word(&rep_u64(base, 13)), "614");
        assert_eq!(base.format_word(&rep_u64(base, 29)), "6113");
        assert!(rep_u64(base, 0).is_empty());
        let b32 = b("3/2");
        for n in 0..=1000u64 {
            let r = rep_u64(b32, n);
            assert_eq!(val_integer(b32, &r).unwrap(), Nat::from(n));
        }
    }

    #[test]
    fn successor_examples() {
        let base = b("7/3");
        assert_eq!(
            base.format_word(&successor(base, &w(base, "3234")).unwrap()),
            "3260"
        );
        assert_eq!(
            base.format_word(&successor(base, &Word::empty()).unwrap()),
            "3"
        );
        assert_eq!(
            base.format_word(&successor(base, &w(base, "326")).unwrap()),
            "352"
        );
        assert!(successor(base, &w(base, "1")).is_err());
        assert!(successor(base, &w(base, "03")).is_err());
    }

    #[test]
    fn radix_examples() {
        let base = b("7/3");
        assert_eq!(radix_cmp(&w(base, "3"), &w(base, "10")), Ordering::Less);
        // "ba" < "abb" < "baa" with a=0, b=1
        let ba = Word::from_digits(vec![1, 0]);
        let abb = Word::from_digits(vec![0, 1, 1]);
        let baa = Word::from_digits(vec![1, 0, 0]);
        assert_eq!(radix_cmp(&ba, &abb), Ordering::Less);
        assert_eq!(radix_cmp(&abb, &baa), Ordering::Less);
        assert_eq!(radix_cmp(&baa, &baa), Ordering::Equal);
    }

    #[test]
    fn language_examples() {
        let base = b("7/3");
        assert!(is_in_language(base, &w(base, "614")));
        assert!(!is_in_language(base, &w(base, "1")));
        assert!(!is_in_language(base, &w(base, "03")));
        assert!(is_in_language(base, &Word::empty()));
        assert!(!is_in_language(base, &Word::from_digits(vec![9])));
    }

    #[test]
    fn rc_examples() {
        let base = b("7/3");
        let fmt = |v: Vec<Word>| v.iter().map(|x| base.format_word(x)).collect::<Vec<_>>();
        let three = w(base, "3");
        assert_eq!(
            fmt(enumerate_rc(base, &three, 1, DEFAULT_RC_CAP).unwrap()),
            ["2", "5"]
        );
        assert_eq!(
            fmt(enumerate_rc(base, &three, 2, DEFAULT_RC_CAP).unwrap()),
            ["20", "23", "26", "52", "55"]
        );
        assert_eq!(
            fmt(enumerate_rc(base, &Word::empty(), 1, DEFAULT_RC_CAP).unwrap()),
            ["3", "6"]
        );
        assert_eq!(
            enumerate_rc(base, &three, 0, DEFAULT_RC_CAP).unwrap(),
            vec![Word::empty()]
        );
        assert!(matches!(
            enumerate_rc(base, &three, 30, 100),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn ceil_step_examples() {
        let base = b("7/3");
        let mut x = Nat::from(1u32);
        let mut seen = vec![];
        for _ in 0..3 {
            x = ceil_step(base, &x);
            seen.push(x.to_u64().unwrap());
        }
        assert_eq!(seen, [3, 7, 17]);
        let b32 = b("3/2");
        assert!(ceil_step(b32, &Nat::zero()).is_zero());
        for n in 1..=10u64 {
            let expect = if n % 2 == 1 {
                (3 * n).div_ceil(2)
            } else {
                3 * n / 2
            };
            assert_eq!(ceil_step(b32, &Nat::from(n)), Nat::from(expect));
        }
    }
}
