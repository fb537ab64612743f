//! Runs the `table1` manifest into a temporary directory and prints the CSV
//! and its sidecar.

use ratbase::harness::{repro_manifest, run_manifest, RunOptions};

fn main() -> ratbase::Result<()> {
    let dir = std::env::temp_dir().join("ratbase_table1");
    let opts = RunOptions {
        out: Some(dir.clone()),
        ..RunOptions::default()
    };
    run_manifest(&repro_manifest("table1")?, &opts)?;
    print!("{}", std::fs::read_to_string(dir.join("table1.csv"))?);
    print!("{}", std::fs::read_to_string(dir.join("manifest.json"))?);
    Ok(())
}
