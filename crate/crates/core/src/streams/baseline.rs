//! Comparison words over `{0, ..., q-1}`: seeded random words, the Champernowne
//! word and an infinite de Bruijn word.

use std::fmt;
use std::str::FromStr;

use super::{Alphabet, LetterStream, WordStream};
use crate::error::{Error, Result};
use crate::numeration::Digit;

/// SplitMix64 (Steele, Lea, Flood). Fixed so that baselines are reproducible
/// across implementations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Multiply-shift reduction onto `0..n`. For `n < 2^14` every outcome has
    /// probability within `n / 2^64 < 2^-50` of `1/n`.
    #[inline]
    pub fn below(&mut self, n: u32) -> u32 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u32
    }

    /// Multiply-shift reduction onto `0..n` for 64-bit ranges.
    #[inline]
    pub fn below_u64(&mut self, n: u64) -> u64 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineKind {
    Random,
    Champernowne,
    DeBruijn,
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaselineKind::Random => "random",
            BaselineKind::Champernowne => "champernowne",
            BaselineKind::DeBruijn => "debruijn",
        })
    }
}

impl FromStr for BaselineKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(BaselineKind::Random),
            "champernowne" => Ok(BaselineKind::Champernowne),
            "debruijn" | "de-bruijn" => Ok(BaselineKind::DeBruijn),
            _ => Err(Error::Parse(format!("unknown baseline `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BaselineSpec {
    pub kind: BaselineKind,
    pub alphabet_size: u32,
    /// Only used by [`BaselineKind::Random`].
    pub rng_seed: u64,
}

impl BaselineSpec {
    pub fn random(q: u32, rng_seed: u64) -> Self {
        BaselineSpec {
            kind: BaselineKind::Random,
            alphabet_size: q,
            rng_seed,
        }
    }

    pub fn champernowne(q: u32) -> Self {
        BaselineSpec {
            kind: BaselineKind::Champernowne,
            alphabet_size: q,
            rng_seed: 0,
        }
    }

    pub fn debruijn(q: u32) -> Self {
        BaselineSpec {
            kind: BaselineKind::DeBruijn,
            alphabet_size: q,
            rng_seed: 0,
        }
    }
}

pub fn baseline_stream(spec: BaselineSpec) -> Result<WordStream> {
    let q = spec.alphabet_size;
    match spec.kind {
        BaselineKind::Random if q >= 1 => Ok(Box::new(RandomStream::new(q, spec.rng_seed))),
        BaselineKind::Champernowne if q >= 2 => Ok(Box::new(ChampernowneStream::new(q))),
        BaselineKind::DeBruijn if q >= 3 => Ok(Box::new(DeBruijnStream::new(q))),
        BaselineKind::DeBruijn => Err(Error::Unsupported(format!(
            "infinite de Bruijn words need an alphabet of at least 3 letters, got {q}"
        ))),
        kind => Err(Error::Unsupported(format!("{kind} word over {q} letters"))),
    }
}

/// Letters drawn independently and uniformly.
#[derive(Debug, Clone)]
pub struct RandomStream {
    q: u32,
    seed: u64,
    rng: SplitMix64,
    position: u64,
}

impl RandomStream {
    pub fn new(q: u32, seed: u64) -> Self {
        RandomStream {
            q,
            seed,
            rng: SplitMix64::new(seed),
            position: 0,
        }
    }
}

impl LetterStream for RandomStream {
    fn next_letter(&mut self) -> Result<Digit> {
        self.position += 1;
        Ok(self.rng.below(self.q))
    }

    fn fill(&mut self, buf: &mut [Digit]) -> Result<()> {
        for slot in buf.iter_mut() {
            *slot = self.rng.below(self.q);
        }
        self.position += buf.len() as u64;
        Ok(())
    }

    fn alphabet(&self) -> Alphabet {
        Alphabet::new(0, self.q)
    }

    fn position(&self) -> u64 {
        self.position
    }

    fn label(&self) -> String {
        format!("random:{}", self.seed)
    }
}

/// Base-`q` expansions of 1, 2, 3, ... written one after another.
#[derive(Debug, Clone)]
pub struct ChampernowneStream {
    q: u32,
    current: Vec<Digit>,
    index: usize,
    position: u64,
}

impl ChampernowneStream {
    pub fn new(q: u32) -> Self {
        ChampernowneStream {
            q,
            current: vec![1],
            index: 0,
            position: 0,
        }
    }

    fn increment(&mut self) {
        for d in self.current.iter_mut().rev() {
            *d += 1;
            if *d < self.q {
                return;
            }
            *d = 0;
        }
        self.current.insert(0, 1);
    }
}

impl LetterStream for ChampernowneStream {
    fn next_letter(&mut self) -> Result<Digit> {
        if self.index == self.current.len() {
            self.increment();
            self.index = 0;
        }
        let d = self.current[self.index];
        self.index += 1;
        self.position += 1;
        Ok(d)
    }

    fn alphabet(&self) -> Alphabet {
        Alphabet::new(0, self.q)
    }

    fn position(&self) -> u64 {
        self.position
    }

    fn label(&self) -> String {
        "champernowne".into()
    }
}

/// Largest edge set the de Bruijn extension may allocate.
const DEBRUIJN_EDGE_CAP: u64 = 1 << 31;

/// An infinite word whose prefix of length `q^l + l - 1` contains every word of
/// length `l` exactly once, for every `l`.
///
/// The prefix for order `n + 1` extends the one for order `n`: the windows of
/// length `n + 1` already present form a Hamiltonian path in the order-`n` de
/// Bruijn graph, and the remaining edges are walked by an Eulerian trail
/// starting where the path ends. For `q >= 3` the leftover graph is connected,
/// so the trail covers every edge; this is checked rather than assumed.
#[derive(Debug, Clone)]
pub struct DeBruijnStream {
    q: u32,
    letters: Vec<Digit>,
    order: u32,
    position: u64,
}

impl DeBruijnStream {
    pub fn new(q: u32) -> Self {
        assert!(q >= 3, "infinite de Bruijn words need q >= 3");
        DeBruijnStream {
            q,
            letters: (0..q).collect(),
            order: 1,
            position: 0,
        }
    }

    /// Current prefix, complete up to the order reached so far.
    pub fn prefix(&self) -> &[Digit] {
        &self.letters
    }

    fn raise_order(&mut self) -> Result<()> {
        let q = self.q as u64;
        let n = self.order;
        let nodes = q.pow(n);
        let edges = nodes * q;
        if edges > DEBRUIJN_EDGE_CAP {
            return Err(Error::ResourceLimit {
                what: "de Bruijn edge set",
                needed: edges as u128,
                cap: DEBRUIJN_EDGE_CAP as u128,
            });
        }
        let mut used = vec![false; edges as usize];
        let mut code = 0u64;
        for (i, &a) in self.letters.iter().enumerate() {
            code = (code * q + a as u64) % edges;
            if i >= n as usize {
                used[code as usize] = true;
            }
        }
        let start = code % nodes;

        // Hierholzer, iterative.
        let mut next = vec![0u32; nodes as usize];
        let mut stack = vec![start];
        let mut trail = Vec::with_capacity((edges - nodes + 2) as usize);
        while let Some(&v) = stack.last() {
            let slot = &mut next[v as usize];
            while (*slot as u64) < q && used[(v * q + *slot as u64) as usize] {
                *slot += 1;
            }
            if (*slot as u64) < q {
                let e = v * q + *slot as u64;
                used[e as usize] = true;
                stack.push(e % nodes);
            } else {
                trail.push(v);
                stack.pop();
            }
        }
        trail.reverse();
        let expected = edges - (nodes - 1);
        if trail.len() as u64 != expected + 1 || used.iter().any(|&u| !u) {
            return Err(Error::Unsupported(format!(
                "de Bruijn extension to order {} failed over {} letters",
                n + 1,
                q
            )));
        }
        self.letters
            .extend(trail[1..].iter().map(|&v| (v % q) as Digit));
        self.order += 1;
        Ok(())
    }
}

impl LetterStream for DeBruijnStream {
    fn next_letter(&mut self) -> Result<Digit> {
        while self.position as usize >= self.letters.len() {
            self.raise_order()?;
        }
        let d = self.letters[self.position as usize];
        self.position += 1;
        Ok(d)
    }

    fn fill(&mut self, buf: &mut [Digit]) -> Result<()> {
        let end = self.position as usize + buf.len();
        while end > self.letters.len() {
            self.raise_order()?;
        }
        buf.copy_from_slice(&self.letters[self.position as usize..end]);
        self.position = end as u64;
        Ok(())
    }

    fn alphabet(&self) -> Alphabet {
        Alphabet::new(0, self.q)
    }

    fn position(&self) -> u64 {
        self.position
    }

    fn label(&self) -> String {
        "debruijn".into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn text(v: &[Digit]) -> String {
        v.iter()
            .map(|d| char::from_digit(*d, 10).unwrap())
            .collect()
    }

    #[test]
    fn champernowne_prefixes() {
        let mut s = baseline_stream(BaselineSpec::champernowne(2)).unwrap();
        assert_eq!(text(&s.take_letters(14).unwrap()), "11011100101110");
        let mut s = baseline_stream(BaselineSpec::champernowne(3)).unwrap();
        assert_eq!(text(&s.take_letters(17).unwrap()), "12101112202122100");
    }

    #[test]
    fn random_is_deterministic() {
        let a = baseline_stream(BaselineSpec::random(2, 42))
            .unwrap()
            .take_letters(1000)
            .unwrap();
        let b = baseline_stream(BaselineSpec::random(2, 42))
            .unwrap()
            .take_letters(1000)
            .unwrap();
        let c = baseline_stream(BaselineSpec::random(2, 43))
            .unwrap()
            .take_letters(1000)
            .unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.iter().all(|&x| x < 2));
    }

    #[test]
    fn random_is_roughly_uniform() {
        let v = baseline_stream(BaselineSpec::random(5, 7))
            .unwrap()
            .take_letters(100_000)
            .unwrap();
        for letter in 0..5 {
            let c = v.iter().filter(|&&x| x == letter).count() as f64;
            assert!((c / 100_000.0 - 0.2).abs() < 0.01);
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 1234567 from the reference C implementation.
        let mut r = SplitMix64::new(1234567);
        assert_eq!(r.next_u64(), 6457827717110365317);
        assert_eq!(r.next_u64(), 3203168211198807973);
    }

    #[test]
    fn debruijn_prefix_property() {
        for q in [3u32, 4] {
            let mut s = baseline_stream(BaselineSpec::debruijn(q)).unwrap();
            let max_l = if q == 3 { 6 } else { 4 };
            let total = (q as usize).pow(max_l) + max_l as usize - 1;
            let w = s.take_letters(total).unwrap();
            for l in 1..=max_l as usize {
                let len = (q as usize).pow(l as u32) + l - 1;
                let windows: Vec<_> = w[..len].windows(l).collect();
                let distinct: HashSet<_> = windows.iter().collect();
                assert_eq!(windows.len(), (q as usize).pow(l as u32));
                assert_eq!(distinct.len(), windows.len(), "q={q} l={l}");
            }
        }
    }

    #[test]
    fn debruijn_needs_three_letters() {
        assert!(matches!(
            baseline_stream(BaselineSpec::debruijn(2)),
            Err(Error::Unsupported(_))
        ));
    }
}
