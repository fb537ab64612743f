//! Digits of pi and sqrt(2) in small bases, integer part first.

use ratbase::constants::{constant_digits, Constant};

fn main() -> ratbase::Result<()> {
    for q in 2..=8 {
        for c in [Constant::Pi, Constant::Sqrt2] {
            let d = constant_digits(c, q, 40)?;
            let s: String = d
                .iter()
                .map(|&x| char::from_digit(x, 10).unwrap())
                .collect();
            println!("{c:<5} base {q}: {s}");
        }
    }
    Ok(())
}
