use serde_json::json;

use super::Finding;
use crate::error::{Error, Result};
use crate::numeration::{Base, Digit, Nat};
use crate::streams::{Alphabet, Extremal, ExtremalStream, LetterStream};

const CHUNK: usize = 1 << 12;

/// 1-based start of the first occurrence of `target` within the first `cap`
/// letters of `stream`, found with a KMP automaton.
pub fn factor_search<S: LetterStream + ?Sized>(
    stream: &mut S,
    target: &[Digit],
    cap: u64,
) -> Result<Option<u64>> {
    let alphabet = stream.alphabet();
    for &a in target {
        alphabet.index(a)?;
    }
    if target.is_empty() {
        return Ok(Some(1));
    }
    let fail = failure_table(target);
    let mut matched = 0usize;
    let mut buf = vec![0 as Digit; CHUNK];
    let mut pos = 0u64;
    while pos < cap {
        let take = (cap - pos).min(CHUNK as u64) as usize;
        stream.fill(&mut buf[..take])?;
        for &a in &buf[..take] {
            pos += 1;
            while matched > 0 && target[matched] != a {
                matched = fail[matched - 1];
            }
            if target[matched] == a {
                matched += 1;
            }
            if matched == target.len() {
                return Ok(Some(pos + 1 - target.len() as u64));
            }
        }
    }
    Ok(None)
}

fn failure_table(t: &[Digit]) -> Vec<usize> {
    let mut fail = vec![0; t.len()];
    let mut k = 0;
    for i in 1..t.len() {
        while k > 0 && t[i] != t[k] {
            k = fail[k - 1];
        }
        if t[i] == t[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// First positions of each letter of a stream's alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterCoverage {
    pub alphabet: Alphabet,
    /// `first[i]` is the 1-based position of letter `alphabet.lo + i`.
    pub first: Vec<Option<u64>>,
    pub scanned: u64,
}

impl LetterCoverage {
    pub fn all_seen(&self) -> bool {
        self.first.iter().all(Option::is_some)
    }

    pub fn seen(&self) -> Vec<Digit> {
        (0..self.alphabet.size)
            .filter(|&i| self.first[i as usize].is_some())
            .map(|i| self.alphabet.lo + i)
            .collect()
    }

    /// Whether the lowest letter occurred: `0` for a minimal word, and its
    /// conjugate `p - q` for a maximal one.
    pub fn lowest_seen(&self) -> bool {
        self.first[0].is_some()
    }
}

/// Scans at most `cap` letters, stopping once every letter has appeared.
pub fn letter_coverage<S: LetterStream + ?Sized>(
    stream: &mut S,
    cap: u64,
) -> Result<LetterCoverage> {
    let alphabet = stream.alphabet();
    let mut first = vec![None; alphabet.size as usize];
    let mut missing = first.len();
    let mut pos = 0u64;
    while pos < cap && missing > 0 {
        let a = stream.next_letter()?;
        pos += 1;
        let slot = &mut first[alphabet.index(a)? as usize];
        if slot.is_none() {
            *slot = Some(pos);
            missing -= 1;
        }
    }
    Ok(LetterCoverage {
        alphabet,
        first,
        scanned: pos,
    })
}

/// Search for `(q-1)(q-1)` in `wmin(rep(n))`.
///
/// A word avoiding this factor would be the minimal word of a `Z_{p/q}`-number,
/// so each hit rules `n` out as a witness. Only meaningful for `1 < q` and
/// `p < q^2`; other bases are refused.
pub fn z_witness_search(base: Base, n: &Nat, cap: u64) -> Result<Option<u64>> {
    let (p, q) = (base.p() as u64, base.q() as u64);
    if q < 2 || p >= q * q {
        return Err(Error::Unsupported(format!(
            "the (q-1)(q-1) exclusion argument needs 1 < q and p < q^2, base is {base}"
        )));
    }
    let mut stream = ExtremalStream::from_value(base, Extremal::Min, n);
    let a = base.q() - 1;
    factor_search(&mut stream, &[a, a], cap)
}

/// A finding when `(q-1)(q-1)` was not found within `cap` letters.
pub fn z_witness_finding(base: Base, n: &Nat, cap: u64, hit: Option<u64>) -> Option<Finding> {
    hit.is_none().then(|| {
        Finding::new(
            "factor",
            json!({ "base": base.to_string(), "n": n.to_string(), "cap": cap }),
            json!("(q-1)(q-1) absent from the scanned prefix"),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::rep_u64;
    use crate::streams::VecStream;

    fn b(s: &str) -> Base {
        s.parse().unwrap()
    }

    fn wmin(base: &str, n: u64) -> ExtremalStream {
        let base = b(base);
        ExtremalStream::new(base, Extremal::Min, &rep_u64(base, n)).unwrap()
    }

    #[test]
    fn finds_factors() {
        let hit = factor_search(&mut wmin("3/2", 1), &[1, 1], 1000).unwrap();
        assert!(hit.unwrap() < 6);
        let hit = factor_search(&mut wmin("7/3", 1), &[2, 2], 57).unwrap();
        // 2021222...: "22" starts at the fifth letter
        assert_eq!(hit, Some(5));
    }

    #[test]
    fn kmp_handles_overlap() {
        let mut s = VecStream::new(vec![0, 0, 1, 0, 0, 1, 0, 1], Alphabet::new(0, 2), "t").unwrap();
        assert_eq!(factor_search(&mut s, &[0, 1, 0, 1], 8).unwrap(), Some(5));
        let mut s = VecStream::new(vec![0, 0, 0], Alphabet::new(0, 2), "t").unwrap();
        assert_eq!(factor_search(&mut s, &[1], 3).unwrap(), None);
    }

    #[test]
    fn rejects_foreign_letters() {
        assert!(matches!(
            factor_search(&mut wmin("7/3", 1), &[2, 3], 10),
            Err(Error::InvalidLetter { letter: 3, .. })
        ));
    }

    #[test]
    fn coverage() {
        let c = letter_coverage(&mut wmin("7/3", 1), 10).unwrap();
        assert_eq!(c.seen(), vec![0, 1, 2]);
        assert_eq!(c.first, vec![Some(2), Some(4), Some(1)]);
        let c = letter_coverage(&mut wmin("3/2", 1), 6).unwrap();
        assert!(c.all_seen() && c.lowest_seen());

        let base = b("7/3");
        let mut s = ExtremalStream::new(base, Extremal::Max, &rep_u64(base, 1)).unwrap();
        let c = letter_coverage(&mut s, 10).unwrap();
        assert_eq!(c.seen(), vec![4, 5, 6]);
    }

    #[test]
    fn z_witness_refuses_large_p() {
        assert!(z_witness_search(b("9/2"), &Nat::from(2u32), 100).is_err());
        assert!(z_witness_search(b("3/1"), &Nat::from(2u32), 100).is_err());
        assert!(z_witness_search(b("3/2"), &Nat::from(2u32), 100)
            .unwrap()
            .is_some());
    }
}
