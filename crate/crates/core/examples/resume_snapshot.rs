//! Stops a long generation halfway, saves the state to disk and carries on
//! from the file.

use ratbase::numeration::{rep_u64, Base};
use ratbase::streams::{Extremal, ExtremalStream, LetterStream, Snapshot};

fn main() -> ratbase::Result<()> {
    let base: Base = "3/2".parse()?;
    let u = rep_u64(base, 1);
    let straight = ExtremalStream::new(base, Extremal::Min, &u)?.take_letters(200_000)?;

    let mut s = ExtremalStream::new(base, Extremal::Min, &u)?;
    let head = s.take_letters(100_000)?;
    let path = std::env::temp_dir().join("ratbase_example.snap");
    s.snapshot().write_to(&path)?;
    println!(
        "saved at letter {} ({} state bits)",
        s.position(),
        s.state_bits()
    );

    let mut t = ExtremalStream::resume(&Snapshot::read_from(&path)?)?;
    let tail = t.take_letters(100_000)?;
    assert_eq!([head, tail].concat(), straight);
    println!("resumed run matches the uninterrupted one");
    std::fs::remove_file(path)?;
    Ok(())
}
