//! Binary checkpoint format for extremal streams.
//!
//! ```text
//! magic            4 bytes  "RBWS"
//! version          u16 BE   (currently 1)
//! kind             u8       0 = min, 1 = max
//! backend          u8       0 = exact, 1 = shrinking residue
//! p, q             u32 BE each
//! seed length      u64 BE
//! seed digits      u32 BE each
//! position         u64 BE
//! modulus exponent u64 BE   (residue backend only)
//! state length     u64 BE
//! state            big-endian magnitude bytes
//! ```

use std::io::{Read, Write};
use std::path::Path;

use num_bigint::BigUint;

use super::Extremal;
use crate::error::{Error, Result};
use crate::numeration::{Base, Word};

const MAGIC: &[u8; 4] = b"RBWS";
pub const SNAPSHOT_VERSION: u16 = 1;

/// Immutable copy of an [`ExtremalStream`](super::ExtremalStream)'s state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub base: Base,
    pub kind: Extremal,
    pub seed: Word,
    pub position: u64,
    /// `Some(m)` for the residue backend, holding the remaining letter budget.
    pub modulus_exponent: Option<u64>,
    pub state: BigUint,
}

impl Snapshot {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&SNAPSHOT_VERSION.to_be_bytes());
        out.push(match self.kind {
            Extremal::Min => 0,
            Extremal::Max => 1,
        });
        out.push(self.modulus_exponent.is_some() as u8);
        out.extend_from_slice(&self.base.p().to_be_bytes());
        out.extend_from_slice(&self.base.q().to_be_bytes());
        out.extend_from_slice(&(self.seed.len() as u64).to_be_bytes());
        for &d in self.seed.digits() {
            out.extend_from_slice(&d.to_be_bytes());
        }
        out.extend_from_slice(&self.position.to_be_bytes());
        if let Some(m) = self.modulus_exponent {
            out.extend_from_slice(&m.to_be_bytes());
        }
        let state = self.state.to_bytes_be();
        out.extend_from_slice(&(state.len() as u64).to_be_bytes());
        out.extend_from_slice(&state);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader { bytes, at: 0 };
        if r.take(4)? != MAGIC {
            return Err(Error::Snapshot("missing magic".into()));
        }
        let version = u16::from_be_bytes(r.array()?);
        if version != SNAPSHOT_VERSION {
            return Err(Error::Snapshot(format!("unsupported version {version}")));
        }
        let kind = match r.take(1)?[0] {
            0 => Extremal::Min,
            1 => Extremal::Max,
            k => return Err(Error::Snapshot(format!("unknown kind {k}"))),
        };
        let residue = match r.take(1)?[0] {
            0 => false,
            1 => true,
            k => return Err(Error::Snapshot(format!("unknown backend {k}"))),
        };
        let p = u32::from_be_bytes(r.array()?);
        let q = u32::from_be_bytes(r.array()?);
        let base = Base::new(p, q).map_err(|e| Error::Snapshot(e.to_string()))?;
        let seed_len = r.u64()? as usize;
        if seed_len > bytes.len() {
            return Err(Error::Snapshot("seed length exceeds file size".into()));
        }
        let digits = (0..seed_len)
            .map(|_| r.array().map(u32::from_be_bytes))
            .collect::<Result<Vec<_>>>()?;
        let position = r.u64()?;
        let modulus_exponent = if residue { Some(r.u64()?) } else { None };
        let state_len = r.u64()? as usize;
        let state = BigUint::from_bytes_be(r.take(state_len)?);
        if r.at != bytes.len() {
            return Err(Error::Snapshot("trailing bytes".into()));
        }
        Ok(Snapshot {
            base,
            kind,
            seed: Word::from_digits(digits),
            position,
            modulus_exponent,
            state,
        })
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::File::create(&tmp)?.write_all(&self.to_bytes())?;
        std::fs::rename(tmp, path)?;
        Ok(())
    }

    pub fn read_from(path: &Path) -> Result<Self> {
        let mut bytes = Vec::new();
        std::fs::File::open(path)?.read_to_end(&mut bytes)?;
        Self::from_bytes(&bytes)
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self
            .at
            .checked_add(n)
            .filter(|&e| e <= self.bytes.len())
            .ok_or_else(|| Error::Snapshot("truncated".into()))?;
        let s = &self.bytes[self.at..end];
        self.at = end;
        Ok(s)
    }

    fn array<const N: usize>(&mut self) -> Result<[u8; N]> {
        Ok(self.take(N)?.try_into().expect("length checked"))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_be_bytes(self.array()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::streams::{ExtremalStream, LetterStream};

    #[test]
    fn resume_continues_the_same_word() {
        let base: Base = "7/3".parse().unwrap();
        let seed = base.parse_word("614").unwrap();
        for residue in [false, true] {
            let mut full = if residue {
                ExtremalStream::with_budget(base, Extremal::Min, &seed, 300).unwrap()
            } else {
                ExtremalStream::new(base, Extremal::Min, &seed).unwrap()
            };
            let expected = full.take_letters(300).unwrap();

            let mut s = if residue {
                ExtremalStream::with_budget(base, Extremal::Min, &seed, 300).unwrap()
            } else {
                ExtremalStream::new(base, Extremal::Min, &seed).unwrap()
            };
            let mut got = s.take_letters(123).unwrap();
            let bytes = s.snapshot().to_bytes();
            let snap = Snapshot::from_bytes(&bytes).unwrap();
            assert_eq!(snap, s.snapshot());
            let mut resumed = ExtremalStream::resume(&snap).unwrap();
            assert_eq!(resumed.position(), 123);
            got.extend(resumed.take_letters(177).unwrap());
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(Snapshot::from_bytes(b"nope").is_err());
        let base: Base = "3/2".parse().unwrap();
        let s = ExtremalStream::new(base, Extremal::Max, &Word::empty()).unwrap();
        let mut bytes = s.snapshot().to_bytes();
        bytes[5] = 9;
        assert!(matches!(
            Snapshot::from_bytes(&bytes),
            Err(Error::Snapshot(_))
        ));
        let mut bytes = s.snapshot().to_bytes();
        bytes.push(0);
        assert!(Snapshot::from_bytes(&bytes).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.snap");
        let base: Base = "3/2".parse().unwrap();
        let mut s =
            ExtremalStream::new(base, Extremal::Min, &base.parse_word("2").unwrap()).unwrap();
        s.take_letters(50).unwrap();
        s.snapshot().write_to(&path).unwrap();
        assert_eq!(Snapshot::read_from(&path).unwrap(), s.snapshot());
    }
}
