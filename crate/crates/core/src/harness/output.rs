//! CSV files written by the harness.
//!
//! | file | header |
//! |------|--------|
//! | richness | `base,seed,l,threshold_or_negative_missing,cap` |
//! | deviation | `base,seed,l,n,D` |
//! | ensemble | `n_or_l,min,d10,mean,d90,max` |
//! | expansions | `n,rep` |
//!
//! Every file is written to a `.tmp` sibling and renamed into place, so a
//! reader never sees a half-written table.

use std::path::Path;

use serde::Serialize;

use crate::analysis::EnsembleStats;
use crate::error::Result;

pub const RICHNESS_HEADER: &str = "base,seed,l,threshold_or_negative_missing,cap";
pub const DEVIATION_HEADER: &str = "base,seed,l,n,D";
pub const ENSEMBLE_HEADER: &str = "n_or_l,min,d10,mean,d90,max";
pub const EXPANSIONS_HEADER: &str = "n,rep";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RichnessRow {
    pub base: String,
    pub seed: String,
    pub l: u32,
    pub threshold_or_negative_missing: i64,
    pub cap: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeviationRow {
    pub base: String,
    pub seed: String,
    pub l: u32,
    pub n: u64,
    #[serde(rename = "D")]
    pub d: f64,
}

#[derive(Serialize)]
struct EnsembleRow {
    n_or_l: u64,
    min: f64,
    d10: f64,
    mean: f64,
    d90: f64,
    max: f64,
}

#[derive(Serialize)]
struct ExpansionRow<'a> {
    n: u64,
    rep: &'a str,
}

/// Writes `bytes` to `path` through a temporary file and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// CSV text with a header row, even when `rows` is empty.
fn table<R: Serialize>(header: &str, rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(header.split(','))
        .expect("writing to memory");
    for r in rows {
        w.serialize(r).expect("flat rows serialize");
    }
    let bytes = w.into_inner().expect("writing to memory");
    String::from_utf8(bytes).expect("rows are UTF-8")
}

pub fn richness_csv(rows: &[RichnessRow]) -> String {
    table(RICHNESS_HEADER, rows)
}

pub fn deviation_csv(rows: &[DeviationRow]) -> String {
    table(DEVIATION_HEADER, rows)
}

pub fn ensemble_csv(stats: &EnsembleStats) -> String {
    table(
        ENSEMBLE_HEADER,
        stats.points.iter().map(|p| EnsembleRow {
            n_or_l: p.x,
            min: p.min,
            d10: p.d10,
            mean: p.mean,
            d90: p.d90,
            max: p.max,
        }),
    )
}

pub fn expansions_csv(rows: &[(u64, String)]) -> String {
    table(
        EXPANSIONS_HEADER,
        rows.iter().map(|(n, rep)| ExpansionRow { n: *n, rep }),
    )
}

pub fn write_richness_csv(path: &Path, rows: &[RichnessRow]) -> Result<()> {
    write_atomic(path, richness_csv(rows).as_bytes())
}

pub fn write_deviation_csv(path: &Path, rows: &[DeviationRow]) -> Result<()> {
    write_atomic(path, deviation_csv(rows).as_bytes())
}

pub fn write_ensemble_csv(path: &Path, stats: &EnsembleStats) -> Result<()> {
    write_atomic(path, ensemble_csv(stats).as_bytes())
}

pub fn write_expansions_csv(path: &Path, rows: &[(u64, String)]) -> Result<()> {
    write_atomic(path, expansions_csv(rows).as_bytes())
}
