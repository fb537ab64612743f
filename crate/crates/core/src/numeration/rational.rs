use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A nonnegative rational whose denominator is a power of `q`, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational {
    numerator: BigUint,
    q: u32,
    q_exponent: u64,
}

impl Rational {
    /// `numerator / q^exponent`, reduced.
    pub fn from_q_power(mut numerator: BigUint, q: u32, mut exponent: u64) -> Self {
        if q == 1 || numerator.is_zero() {
            exponent = 0;
        }
        while exponent > 0 {
            let (quot, rem) = numerator.div_rem(&BigUint::from(q));
            if !rem.is_zero() {
                break;
            }
            numerator = quot;
            exponent -= 1;
        }
        Rational {
            numerator,
            q,
            q_exponent: exponent,
        }
    }

    pub fn integer(n: BigUint, q: u32) -> Self {
        Rational {
            numerator: n,
            q,
            q_exponent: 0,
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    /// Exponent `j` such that the denominator is `q^j`.
    pub fn q_exponent(&self) -> u64 {
        self.q_exponent
    }

    pub fn denominator(&self) -> BigUint {
        let mut d = BigUint::one();
        for _ in 0..self.q_exponent {
            d *= self.q;
        }
        d
    }

    pub fn is_integer(&self) -> bool {
        self.q_exponent == 0
    }

    pub fn to_integer(&self) -> Option<BigUint> {
        self.is_integer().then(|| self.numerator.clone())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_powers_of_q() {
        let r = Rational::from_q_power(BigUint::from(63u32), 3, 4);
        assert_eq!(r.to_string(), "7/9");
        assert_eq!(r.q_exponent(), 2);
        let z = Rational::from_q_power(BigUint::zero(), 3, 5);
        assert!(z.is_integer());
        assert_eq!(
            Rational::from_q_power(BigUint::from(5u32), 1, 9).to_string(),
            "5"
        );
    }
}
