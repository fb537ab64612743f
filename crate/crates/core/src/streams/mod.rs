//! Resumable letter-at-a-time generators.
//!
//! * [`ExtremalStream`]: minimal and maximal words `wmin(u)` / `wmax(u)` of a
//!   rational base, backed either by the exact integer state or by a
//!   shrinking residue when the letter budget is known up front.
//! * [`baseline`]: random, Champernowne and infinite de Bruijn words used as
//!   comparison points.
//!
//! Every stream implements [`LetterStream`], which is what the analysis code
//! consumes.

pub mod baseline;
mod extremal;
pub mod limbs;
mod snapshot;

pub use baseline::{baseline_stream, BaselineKind, BaselineSpec, SplitMix64};
pub use extremal::{
    nmin, sigma, wmax_prefix, wmin_prefix, Backend, Extremal, ExtremalStream, ShrinkingResidue,
};
pub use snapshot::Snapshot;

use crate::error::{Error, Result};
use crate::numeration::Digit;

/// The contiguous sub-alphabet `{lo, ..., lo + size - 1}` a stream writes in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    pub lo: Digit,
    pub size: u32,
}

impl Alphabet {
    pub fn new(lo: Digit, size: u32) -> Self {
        Alphabet { lo, size }
    }

    pub fn hi(&self) -> Digit {
        self.lo + self.size - 1
    }

    pub fn contains(&self, letter: Digit) -> bool {
        letter >= self.lo && letter - self.lo < self.size
    }

    /// Position of `letter` inside the alphabet, `0..size`.
    pub fn index(&self, letter: Digit) -> Result<u32> {
        if self.contains(letter) {
            Ok(letter - self.lo)
        } else {
            Err(Error::InvalidLetter {
                letter,
                lo: self.lo,
                hi: self.hi(),
            })
        }
    }
}

/// A stateful source of letters.
pub trait LetterStream {
    fn next_letter(&mut self) -> Result<Digit>;

    /// Fills `buf` with the next `buf.len()` letters.
    fn fill(&mut self, buf: &mut [Digit]) -> Result<()> {
        for slot in buf {
            *slot = self.next_letter()?;
        }
        Ok(())
    }

    fn alphabet(&self) -> Alphabet;

    /// Letters emitted so far.
    fn position(&self) -> u64;

    /// Short human-readable label, used in CSV `seed` columns.
    fn label(&self) -> String;

    /// Collects the next `n` letters.
    fn take_letters(&mut self, n: usize) -> Result<Vec<Digit>> {
        let mut v = vec![0; n];
        self.fill(&mut v)?;
        Ok(v)
    }
}

impl<S: LetterStream + ?Sized> LetterStream for Box<S> {
    fn next_letter(&mut self) -> Result<Digit> {
        (**self).next_letter()
    }
    fn fill(&mut self, buf: &mut [Digit]) -> Result<()> {
        (**self).fill(buf)
    }
    fn alphabet(&self) -> Alphabet {
        (**self).alphabet()
    }
    fn position(&self) -> u64 {
        (**self).position()
    }
    fn label(&self) -> String {
        (**self).label()
    }
}

/// Owned, type-erased stream.
pub type WordStream = Box<dyn LetterStream + Send>;

/// A finite, precomputed word served as a stream. Running past its end is an error.
#[derive(Debug, Clone)]
pub struct VecStream {
    letters: Vec<Digit>,
    alphabet: Alphabet,
    pos: usize,
    label: String,
}

impl VecStream {
    pub fn new(letters: Vec<Digit>, alphabet: Alphabet, label: impl Into<String>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| !alphabet.contains(l)) {
            return Err(Error::InvalidLetter {
                letter: bad,
                lo: alphabet.lo,
                hi: alphabet.hi(),
            });
        }
        Ok(VecStream {
            letters,
            alphabet,
            pos: 0,
            label: label.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl LetterStream for VecStream {
    fn next_letter(&mut self) -> Result<Digit> {
        let l = *self.letters.get(self.pos).ok_or(Error::StreamExhausted {
            budget: self.letters.len() as u64,
        })?;
        self.pos += 1;
        Ok(l)
    }

    fn fill(&mut self, buf: &mut [Digit]) -> Result<()> {
        let end = self.pos + buf.len();
        if end > self.letters.len() {
            return Err(Error::StreamExhausted {
                budget: self.letters.len() as u64,
            });
        }
        buf.copy_from_slice(&self.letters[self.pos..end]);
        self.pos = end;
        Ok(())
    }

    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn position(&self) -> u64 {
        self.pos as u64
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}
