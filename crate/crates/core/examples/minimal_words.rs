//! Prefixes of minimal and maximal words, and the integers the generator
//! passes through.

use ratbase::numeration::{rep_u64, Base};
use ratbase::streams::{nmin, wmax_prefix, wmin_prefix};

fn main() -> ratbase::Result<()> {
    for (b, v) in [("7/3", 1u64), ("3/2", 1), ("9/8", 1), ("8/5", 7)] {
        let base: Base = b.parse()?;
        let u = rep_u64(base, v);
        println!("base {base}, seed {}", base.format_word(&u));
        println!("  wmin  {}...", wmin_prefix(base, &u, 60)?);
        println!("  wmax  {}...", wmax_prefix(base, &u, 60)?);
        let path: Vec<String> = (0..8)
            .map(|l| nmin(base, &u, l).map(|n| n.to_string()))
            .collect::<ratbase::Result<_>>()?;
        println!("  nmin  {}", path.join(" -> "));
    }
    Ok(())
}
