use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::limbs::{LimbNat, StepRule};
use super::{Alphabet, LetterStream, Snapshot};
use crate::error::{Error, Result};
use crate::numeration::{is_in_language, rep, val_integer, Base, Digit, Nat, Word};

/// Which extremal continuation to follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extremal {
    /// Radix-least continuation, letters in `{0, ..., q-1}`.
    Min,
    /// Radix-greatest continuation, letters in `{p-q, ..., p-1}`.
    Max,
}

impl Extremal {
    pub fn rule(self, base: Base) -> StepRule {
        let (p, q) = (base.p() as u64, base.q() as u64);
        StepRule {
            p,
            q,
            c: match self {
                Extremal::Min => q - 1,
                Extremal::Max => p - 1,
            },
        }
    }

    pub fn alphabet(self, base: Base) -> Alphabet {
        match self {
            Extremal::Min => Alphabet::new(0, base.q()),
            Extremal::Max => Alphabet::new(base.p() - base.q(), base.q()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Extremal::Min => "wmin",
            Extremal::Max => "wmax",
        }
    }
}

/// Value of `u` reduced modulo `q^m`, where `m` is the number of letters still allowed.
///
/// The first `m` letters of an extremal word depend only on the seed value modulo
/// `q^m`, and the map `f` sends classes mod `q^m` to classes mod `q^(m-1)`, so the
/// state shrinks by one factor of `q` per emitted letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrinkingResidue {
    residue: BigUint,
    modulus_exponent: u64,
    modulus: BigUint,
    q: u32,
}

impl ShrinkingResidue {
    pub fn new(value: &Nat, q: u32, budget: u64) -> Self {
        let modulus = BigUint::from(q).pow(budget as u32);
        ShrinkingResidue {
            residue: value % &modulus,
            modulus_exponent: budget,
            modulus,
            q,
        }
    }

    fn from_parts(residue: BigUint, q: u32, modulus_exponent: u64) -> Result<Self> {
        let modulus = BigUint::from(q).pow(modulus_exponent as u32);
        if q > 1 && residue >= modulus {
            return Err(Error::Snapshot("residue not below its modulus".into()));
        }
        Ok(ShrinkingResidue {
            residue,
            modulus_exponent,
            modulus,
            q,
        })
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    /// Letters left before the stream is exhausted.
    pub fn modulus_exponent(&self) -> u64 {
        self.modulus_exponent
    }

    fn step(&mut self, rule: &StepRule) -> Result<Digit> {
        if self.modulus_exponent == 0 {
            return Err(Error::StreamExhausted { budget: 0 });
        }
        let (a, r) = self.residue.div_rem(&BigUint::from(self.q));
        let (fr, letter) = rule.apply_small(r.to_u64().expect("remainder below q") as u128);
        self.modulus /= self.q;
        self.modulus_exponent -= 1;
        let next = a * rule.p + BigUint::from(fr);
        self.residue = if self.q == 1 {
            BigUint::zero()
        } else {
            next % &self.modulus
        };
        Ok(letter)
    }
}

/// Storage behind an [`ExtremalStream`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    /// Exact current value `nmin(u, l)` (or its maximal analogue).
    Nat(LimbNat),
    /// Residue with a hard letter budget.
    Residue(ShrinkingResidue),
}

/// Generator for `wmin(u)` or `wmax(u)`.
///
/// Letter `l+1` is the unique letter `a` of the stream's sub-alphabet with
/// `p n_l + a = 0 (mod q)`, and the state moves to `n_{l+1} = (p n_l + a) / q`.
/// For minimal words this is the ceiling map `n -> ceil(p n / q)`.
#[derive(Debug, Clone)]
pub struct ExtremalStream {
    base: Base,
    kind: Extremal,
    seed: Word,
    position: u64,
    backend: Backend,
    rule: StepRule,
    batch: u32,
}

impl ExtremalStream {
    /// Exact backend. The seed must be an expansion.
    pub fn new(base: Base, kind: Extremal, seed: &Word) -> Result<Self> {
        let n = seed_value(base, seed)?;
        Ok(Self::build(
            base,
            kind,
            seed.clone(),
            0,
            Backend::Nat(LimbNat::from_biguint(&n)),
        ))
    }

    /// Exact backend started from `rep(n)`.
    pub fn from_value(base: Base, kind: Extremal, n: &Nat) -> Self {
        Self::build(
            base,
            kind,
            rep(base, n),
            0,
            Backend::Nat(LimbNat::from_biguint(n)),
        )
    }

    /// Shrinking-residue backend able to emit exactly `budget` letters.
    pub fn with_budget(base: Base, kind: Extremal, seed: &Word, budget: u64) -> Result<Self> {
        let n = seed_value(base, seed)?;
        let res = ShrinkingResidue::new(&n, base.q(), budget);
        Ok(Self::build(
            base,
            kind,
            seed.clone(),
            0,
            Backend::Residue(res),
        ))
    }

    fn build(base: Base, kind: Extremal, seed: Word, position: u64, backend: Backend) -> Self {
        let rule = kind.rule(base);
        ExtremalStream {
            base,
            kind,
            seed,
            position,
            backend,
            rule,
            batch: rule.max_batch(),
        }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn kind(&self) -> Extremal {
        self.kind
    }

    pub fn seed(&self) -> &Word {
        &self.seed
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    /// Current integer state (`nmin(u, position)` for minimal words), exact backend only.
    pub fn value(&self) -> Option<Nat> {
        match &self.backend {
            Backend::Nat(n) => Some(n.to_biguint()),
            Backend::Residue(_) => None,
        }
    }

    /// Bit length of the exact state, 0 for the residue backend.
    pub fn state_bits(&self) -> u64 {
        match &self.backend {
            Backend::Nat(n) => n.bits(),
            Backend::Residue(r) => r.residue.bits(),
        }
    }

    pub fn snapshot(&self) -> Snapshot {
        let (state, modulus_exponent) = match &self.backend {
            Backend::Nat(n) => (n.to_biguint(), None),
            Backend::Residue(r) => (r.residue.clone(), Some(r.modulus_exponent)),
        };
        Snapshot {
            base: self.base,
            kind: self.kind,
            seed: self.seed.clone(),
            position: self.position,
            modulus_exponent,
            state,
        }
    }

    pub fn resume(snap: &Snapshot) -> Result<Self> {
        let backend = match snap.modulus_exponent {
            None => Backend::Nat(LimbNat::from_biguint(&snap.state)),
            Some(m) => Backend::Residue(ShrinkingResidue::from_parts(
                snap.state.clone(),
                snap.base.q(),
                m,
            )?),
        };
        Ok(Self::build(
            snap.base,
            snap.kind,
            snap.seed.clone(),
            snap.position,
            backend,
        ))
    }
}

fn seed_value(base: Base, seed: &Word) -> Result<Nat> {
    if !is_in_language(base, seed) {
        return Err(Error::InvalidSeed(format!(
            "`{}` is not an expansion in base {base}",
            base.format_word(seed)
        )));
    }
    val_integer(base, seed)
}

impl LetterStream for ExtremalStream {
    fn next_letter(&mut self) -> Result<Digit> {
        let letter = match &mut self.backend {
            Backend::Nat(n) => {
                let mut out = [0];
                n.advance(&self.rule, 1, &mut out);
                out[0]
            }
            Backend::Residue(r) => r.step(&self.rule).map_err(|_| Error::StreamExhausted {
                budget: self.position,
            })?,
        };
        self.position += 1;
        Ok(letter)
    }

    fn fill(&mut self, buf: &mut [Digit]) -> Result<()> {
        match &mut self.backend {
            Backend::Nat(n) => {
                for chunk in buf.chunks_mut(self.batch as usize) {
                    n.advance(&self.rule, chunk.len() as u32, chunk);
                }
                self.position += buf.len() as u64;
                Ok(())
            }
            Backend::Residue(_) => {
                for slot in buf {
                    *slot = self.next_letter()?;
                }
                Ok(())
            }
        }
    }

    fn alphabet(&self) -> Alphabet {
        self.kind.alphabet(self.base)
    }

    fn position(&self) -> u64 {
        self.position
    }

    fn label(&self) -> String {
        format!(
            "{}_{}({})",
            self.kind.name(),
            self.base,
            self.base.format_word(&self.seed)
        )
    }
}

/// Letterwise shift `i -> i + p - q` taking minimal-word letters to maximal-word letters.
pub fn sigma(base: Base, letters: &[Digit]) -> Result<Vec<Digit>> {
    let shift = base.p() - base.q();
    letters
        .iter()
        .map(|&a| {
            if a < base.q() {
                Ok(a + shift)
            } else {
                Err(Error::InvalidLetter {
                    letter: a,
                    lo: 0,
                    hi: base.q() - 1,
                })
            }
        })
        .collect()
}

/// `nmin(u, l) = val(u . wmin(u, l))`, obtained by running the generator.
pub fn nmin(base: Base, u: &Word, l: u64) -> Result<Nat> {
    if u.is_empty() {
        return Err(Error::InvalidSeed(
            "nmin is undefined for the empty seed".into(),
        ));
    }
    let mut s = ExtremalStream::new(base, Extremal::Min, u)?;
    let mut buf = vec![0; 4096];
    let mut left = l;
    while left > 0 {
        let take = left.min(buf.len() as u64) as usize;
        s.fill(&mut buf[..take])?;
        left -= take as u64;
    }
    Ok(s.value().expect("exact backend"))
}

fn prefix(base: Base, kind: Extremal, u: &Word, len: usize) -> Result<Word> {
    let mut s = ExtremalStream::new(base, kind, u)?;
    Ok(Word::from_digits(s.take_letters(len)?))
}

/// First `len` letters of `wmin(u)`.
pub fn wmin_prefix(base: Base, u: &Word, len: usize) -> Result<Word> {
    prefix(base, Extremal::Min, u, len)
}

/// First `len` letters of `wmax(u)`.
pub fn wmax_prefix(base: Base, u: &Word, len: usize) -> Result<Word> {
    prefix(base, Extremal::Max, u, len)
}
