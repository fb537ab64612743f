//! In-place big-integer state for the letter generators.
//!
//! The generators only ever apply maps of the form `f(x) = floor((p x + c) / q)`
//! with `c < p + q`. Such maps commute with the decomposition `x = q^k a + r`:
//!
//! ```text
//! f^k(q^k a + r) = p^k a + f^k(r)
//! ```
//!
//! so `k` letters cost one pass over the limbs (divide by `q^k`, multiply by
//! `p^k`) plus `k` machine-word steps on the small remainder `r`. The pass runs
//! from the most significant limb down and writes the product back into the
//! same buffer, pushing high halves of each product into the limb above.

use num_bigint::BigUint;

use crate::numeration::Digit;

/// One step of a generator: `x -> floor((p x + c) / q)`, emitting `q f(x) - p x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepRule {
    pub p: u64,
    pub q: u64,
    pub c: u64,
}

impl StepRule {
    #[inline]
    pub fn apply_small(&self, x: u128) -> (u128, Digit) {
        let y = (self.p as u128 * x + self.c as u128) / self.q as u128;
        let letter = self.q as u128 * y - self.p as u128 * x;
        (y, letter as Digit)
    }

    /// Largest batch size with `p^k < 2^32` and `q^k < 2^32`.
    pub fn max_batch(&self) -> u32 {
        let mut k = 0u32;
        let (mut pk, mut qk) = (1u64, 1u64);
        while k < 64 && pk * self.p < (1 << 32) && qk * self.q < (1 << 32) {
            pk *= self.p;
            qk *= self.q;
            k += 1;
        }
        k.max(1)
    }
}

/// Nonnegative integer as little-endian `u64` limbs, no trailing zero limbs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LimbNat {
    limbs: Vec<u64>,
}

#[inline]
fn div_limb(rem: u64, limb: u64, d: u64) -> (u64, u64) {
    // rem < d < 2^32, so both partial dividends fit in 64 bits
    let hi = (rem << 32) | (limb >> 32);
    let (qh, r) = (hi / d, hi % d);
    let lo = (r << 32) | (limb & 0xffff_ffff);
    let (ql, r) = (lo / d, lo % d);
    ((qh << 32) | ql, r)
}

impl LimbNat {
    pub fn from_biguint(n: &BigUint) -> Self {
        let mut s = LimbNat {
            limbs: n.to_u64_digits(),
        };
        s.trim();
        s
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut words = Vec::with_capacity(self.limbs.len() * 2);
        for &l in &self.limbs {
            words.push(l as u32);
            words.push((l >> 32) as u32);
        }
        BigUint::new(words)
    }

    pub fn bits(&self) -> u64 {
        match self.limbs.last() {
            None => 0,
            Some(&top) => self.limbs.len() as u64 * 64 - top.leading_zeros() as u64,
        }
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    fn add_at(&mut self, mut idx: usize, mut v: u64) {
        while v != 0 {
            if idx == self.limbs.len() {
                self.limbs.push(0);
            }
            let (s, o) = self.limbs[idx].overflowing_add(v);
            self.limbs[idx] = s;
            v = o as u64;
            idx += 1;
        }
    }

    /// Applies `rule` `k` times (`1 <= k`, `p^k, q^k < 2^32`), writing the `k`
    /// emitted letters to `out`.
    pub fn advance(&mut self, rule: &StepRule, k: u32, out: &mut [Digit]) {
        debug_assert_eq!(out.len(), k as usize);
        let qk = rule.q.pow(k);
        let pk = rule.p.pow(k);
        debug_assert!(qk < (1 << 32) && pk < (1 << 32));

        let len = self.limbs.len();
        self.limbs.push(0);
        let mut rem = 0u64;
        for i in (0..len).rev() {
            let (quot, r) = div_limb(rem, self.limbs[i], qk);
            rem = r;
            let prod = quot as u128 * pk as u128;
            self.limbs[i] = prod as u64;
            let hi = (prod >> 64) as u64;
            if hi != 0 {
                self.add_at(i + 1, hi);
            }
        }

        let mut x = rem as u128;
        for slot in out.iter_mut() {
            let (y, letter) = rule.apply_small(x);
            *slot = letter;
            x = y;
        }
        let x = u64::try_from(x).expect("small orbit stays below 2^64");
        self.add_at(0, x);
        self.trim();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn reference(rule: &StepRule, n: &BigUint, k: u32) -> (BigUint, Vec<Digit>) {
        let mut n = n.clone();
        let mut letters = vec![];
        for _ in 0..k {
            let next = (&n * rule.p + rule.c) / rule.q;
            let letter = (&next * rule.q - &n * rule.p).to_u32().unwrap();
            letters.push(letter);
            n = next;
        }
        (n, letters)
    }

    #[test]
    fn batch_sizes() {
        assert_eq!(StepRule { p: 3, q: 2, c: 1 }.max_batch(), 20);
        assert_eq!(StepRule { p: 9, q: 8, c: 7 }.max_batch(), 10);
        assert_eq!(StepRule { p: 5, q: 1, c: 0 }.max_batch(), 13);
    }

    proptest! {
        #[test]
        fn batched_step_matches_bigint(
            words in proptest::collection::vec(any::<u32>(), 0..12),
            (p, q) in (2u64..12, 1u64..11).prop_filter("coprime, p > q", |(p, q)| p > q && num_integer::gcd(*p, *q) == 1),
            max in any::<bool>(),
            k in 1u32..8,
        ) {
            let rule = StepRule { p, q, c: if max { p - 1 } else { q - 1 } };
            let k = k.min(rule.max_batch());
            let n = BigUint::new(words);
            let mut state = LimbNat::from_biguint(&n);
            let mut out = vec![0; k as usize];
            state.advance(&rule, k, &mut out);
            let (expect_n, expect_letters) = reference(&rule, &n, k);
            prop_assert_eq!(state.to_biguint(), expect_n);
            prop_assert_eq!(out, expect_letters);
        }
    }
}
