use std::fmt;

use crate::error::{Error, Result};

/// A letter of the alphabet `{0, ..., p-1}`.
pub type Digit = u32;

/// A finite digit sequence, most significant digit first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    digits: Vec<Digit>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_digits(digits: Vec<Digit>) -> Self {
        Word { digits }
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<Digit> {
        self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn concat(&self, other: &[Digit]) -> Word {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(other);
        Word { digits }
    }

    /// Text form: contiguous characters when `compact`, otherwise dot-separated
    /// decimal values. The empty word renders as `ε`.
    pub fn to_text(&self, compact: bool) -> String {
        if self.digits.is_empty() {
            return "ε".to_string();
        }
        if compact {
            self.digits
                .iter()
                .map(|&d| char::from_digit(d, 10).expect("compact rendering needs digits below 10"))
                .collect()
        } else {
            self.digits
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Inverse of [`Word::to_text`]. Both `""` and `ε` denote the empty word.
    pub fn parse(s: &str, compact: bool) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Word::empty());
        }
        let digits = if compact {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("`{s}`: `{c}` is not a digit")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.split('.')
                .map(|t| {
                    t.parse::<Digit>()
                        .map_err(|e| Error::Parse(format!("`{s}`: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word { digits })
    }
}

impl From<Vec<Digit>> for Word {
    fn from(digits: Vec<Digit>) -> Self {
        Word { digits }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.digits.iter().all(|&d| d < 10);
        f.write_str(&self.to_text(compact))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_forms() {
        assert_eq!(Word::from_digits(vec![6, 1, 4]).to_text(true), "614");
        assert_eq!(Word::from_digits(vec![10, 3, 0]).to_text(false), "10.3.0");
        assert_eq!(Word::empty().to_string(), "ε");
        assert_eq!(Word::parse("ε", true).unwrap(), Word::empty());
        assert!(Word::parse("6x", true).is_err());
        assert!(Word::parse("1..2", false).is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(digits in proptest::collection::vec(0u32..40, 0..20), compact in any::<bool>()) {
            let digits: Vec<u32> = if compact { digits.into_iter().map(|d| d % 10).collect() } else { digits };
            let w = Word::from_digits(digits);
            prop_assert_eq!(Word::parse(&w.to_text(compact), compact).unwrap(), w);
        }
    }
}
