//! Counts from 0 to 29 in base 7/3 with the odometer and checks each word
//! against the direct expansion.

use ratbase::numeration::{rep_u64, successor, val_integer, Base, Word};

fn main() -> ratbase::Result<()> {
    let base: Base = "7/3".parse()?;
    let mut w = Word::empty();
    for n in 0..30u64 {
        assert_eq!(w, rep_u64(base, n));
        assert_eq!(val_integer(base, &w)?, n.into());
        println!("{n:>2}  {}", base.format_word(&w));
        w = successor(base, &w)?;
    }
    Ok(())
}
