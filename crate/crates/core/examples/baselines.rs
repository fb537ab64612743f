//! Comparison words and the closed forms of their richness thresholds.

use ratbase::analysis::{richness_threshold, rt_champernowne, rt_debruijn};
use ratbase::constants::{constant_digits, Constant};
use ratbase::streams::{baseline_stream, BaselineSpec, LetterStream};

fn main() -> ratbase::Result<()> {
    for l in 1..=5 {
        let mut c = baseline_stream(BaselineSpec::champernowne(3))?;
        let mut d = baseline_stream(BaselineSpec::debruijn(3))?;
        println!(
            "l={l}  champernowne {} (formula {})  de Bruijn {} (formula {})",
            richness_threshold(&mut c, l, 1 << 20)?,
            rt_champernowne(3, l),
            richness_threshold(&mut d, l, 1 << 20)?,
            rt_debruijn(3, l),
        );
    }
    let mut r = baseline_stream(BaselineSpec::random(5, 42))?;
    println!("random base 5: {:?}", r.take_letters(20)?);
    println!("pi base 3:     {:?}", constant_digits(Constant::Pi, 3, 20)?);
    println!(
        "sqrt2 base 2:  {:?}",
        constant_digits(Constant::Sqrt2, 2, 20)?
    );
    Ok(())
}
