use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use super::manifest::{
    ExperimentConfig, Measurement, OutputMode, ReproManifest, SeedSelection, Source,
};
use super::output::{
    write_atomic, write_deviation_csv, write_ensemble_csv, write_expansions_csv,
    write_richness_csv, DeviationRow, RichnessRow,
};
use crate::analysis::{
    deviation_curve, ensemble_stats, expected_random_threshold, richness_profile, DeviationCurve,
    EnsembleStats, RichnessOutcome, RichnessReport, Series,
};
use crate::constants::{constant_stream, Constant};
use crate::error::{Error, Result};
use crate::numeration::{rep_u64, Base, Nat};
use crate::streams::{
    baseline_stream, BaselineSpec, Extremal, ExtremalStream, SplitMix64, WordStream,
};

/// One word of a series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    /// `base` column: `p/q` for minimal words, the alphabet size otherwise.
    pub base_label: String,
    /// `seed` column: the seed word, or a description of the comparison word.
    pub seed_label: String,
    kind: MemberKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum MemberKind {
    Minimal { base: Base, value: u64 },
    Constant { constant: Constant, q: u32 },
    Random { q: u32, rng_seed: u64 },
    Champernowne { q: u32 },
    DeBruijn { q: u32 },
    Expected { q: u32 },
}

impl Member {
    /// A fresh stream positioned at the first letter. `len` bounds the digits
    /// computed for constants.
    pub fn open(&self, len: u64) -> Result<WordStream> {
        Ok(match self.kind {
            MemberKind::Minimal { base, value } => Box::new(ExtremalStream::from_value(
                base,
                Extremal::Min,
                &Nat::from(value),
            )),
            MemberKind::Constant { constant, q } => {
                Box::new(constant_stream(constant, q, len as usize)?)
            }
            MemberKind::Random { q, rng_seed } => {
                baseline_stream(BaselineSpec::random(q, rng_seed))?
            }
            MemberKind::Champernowne { q } => baseline_stream(BaselineSpec::champernowne(q))?,
            MemberKind::DeBruijn { q } => baseline_stream(BaselineSpec::debruijn(q))?,
            MemberKind::Expected { .. } => {
                return Err(Error::Unsupported("the closed-form row has no word".into()))
            }
        })
    }
}

/// Seed valuations drawn for a random selection, in generation order.
pub fn draw_seed_values(count: usize, max_value: u64, rng_seed: u64) -> Vec<u64> {
    let mut rng = SplitMix64::new(rng_seed);
    (0..count)
        .map(|_| match max_value.checked_add(1) {
            Some(n) => rng.below_u64(n),
            None => rng.next_u64(),
        })
        .collect()
}

/// Per-member generator seeds for a random-word ensemble.
pub fn member_rng_seeds(count: usize, rng_seed: u64) -> Vec<u64> {
    let mut rng = SplitMix64::new(rng_seed);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// Expands a source into its words.
pub fn members(source: &Source) -> Vec<Member> {
    let minimal = |base: Base, value: u64| Member {
        base_label: base.to_string(),
        seed_label: base.format_word(&rep_u64(base, value)),
        kind: MemberKind::Minimal { base, value },
    };
    let q_label = |q: u32| q.to_string();
    match source {
        Source::Integers { .. } => Vec::new(),
        Source::Minimal { base, seeds } => {
            let values = match seeds {
                SeedSelection::Values { values } => values.clone(),
                SeedSelection::Random {
                    count,
                    max_value,
                    rng_seed,
                } => draw_seed_values(*count, *max_value, *rng_seed),
            };
            values.into_iter().map(|v| minimal(*base, v)).collect()
        }
        Source::Constant { constant, q } => vec![Member {
            base_label: q_label(*q),
            seed_label: constant.to_string(),
            kind: MemberKind::Constant {
                constant: *constant,
                q: *q,
            },
        }],
        Source::Random { q, count, rng_seed } => member_rng_seeds(*count, *rng_seed)
            .into_iter()
            .map(|s| Member {
                base_label: q_label(*q),
                seed_label: format!("random:{s}"),
                kind: MemberKind::Random { q: *q, rng_seed: s },
            })
            .collect(),
        Source::Champernowne { q } => vec![Member {
            base_label: q_label(*q),
            seed_label: "champernowne".into(),
            kind: MemberKind::Champernowne { q: *q },
        }],
        Source::DeBruijn { q } => vec![Member {
            base_label: q_label(*q),
            seed_label: "debruijn".into(),
            kind: MemberKind::DeBruijn { q: *q },
        }],
        Source::ExpectedRandom { q } => vec![Member {
            base_label: q_label(*q),
            seed_label: "expected".into(),
            kind: MemberKind::Expected { q: *q },
        }],
    }
}

/// Richness reports of one member.
pub fn member_richness(member: &Member, ls: &[u32], len: u64) -> Result<Vec<RichnessReport>> {
    if let MemberKind::Expected { q } = member.kind {
        return Ok(ls
            .iter()
            .map(|&l| RichnessReport {
                l,
                outcome: RichnessOutcome::Threshold(expected_random_threshold(q, l)),
                cap: len,
            })
            .collect());
    }
    let mut stream = member.open(len)?;
    richness_profile(&mut stream, ls, len)
}

/// Computed data of one series.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesData {
    Expansions(Vec<(u64, String)>),
    Richness(Vec<(Member, Vec<RichnessReport>)>),
    Deviation(Vec<(Member, DeviationCurve)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult {
    pub config: ExperimentConfig,
    pub data: SeriesData,
    pub ensemble: Option<EnsembleStats>,
    /// Factor lengths left out of a richness ensemble because some member
    /// did not complete them within the prefix.
    pub incomplete_ls: Vec<u32>,
    pub files: Vec<PathBuf>,
}

/// Execution knobs that do not change what an experiment means.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub out: Option<PathBuf>,
    /// Size of the worker pool; `None` lets rayon decide.
    pub workers: Option<usize>,
    /// Replaces every series' prefix length.
    pub len: Option<u64>,
    /// Caps the number of members of every series.
    pub members: Option<usize>,
    /// Seed the manifest was built with, recorded in the sidecar.
    pub rng_seed: Option<u64>,
    /// Print one progress line per finished series to stderr.
    pub progress: bool,
}

/// Applies length and member overrides.
pub fn apply_overrides(manifest: &ReproManifest, opts: &RunOptions) -> Result<ReproManifest> {
    let mut m = manifest.clone();
    for s in &mut m.series {
        if let Some(len) = opts.len {
            if !matches!(s.measurement, Measurement::Expansions) {
                s.len = len;
            }
        }
        if let Some(k) = opts.members {
            s.source = s.source.truncated(k);
        }
        s.validate()?;
    }
    Ok(m)
}

/// Runs one series on the current rayon pool.
pub fn run_series(config: &ExperimentConfig) -> Result<SeriesResult> {
    config.validate()?;
    let mut incomplete_ls = Vec::new();
    let (data, ensemble) = match (&config.source, &config.measurement) {
        (Source::Integers { base, count }, Measurement::Expansions) => {
            let rows = (0..*count)
                .map(|n| (n, base.format_word(&rep_u64(*base, n))))
                .collect();
            (SeriesData::Expansions(rows), None)
        }
        (source, Measurement::Richness { ls }) => {
            let rows: Vec<(Member, Vec<RichnessReport>)> = members(source)
                .into_par_iter()
                .map(|m| {
                    let r = member_richness(&m, ls, config.len)?;
                    Ok((m, r))
                })
                .collect::<Result<_>>()?;
            let ensemble = if config.output == OutputMode::Members {
                None
            } else {
                let complete: Vec<u32> = ls
                    .iter()
                    .copied()
                    .filter(|&l| {
                        rows.iter()
                            .all(|(_, r)| r.iter().any(|x| x.l == l && x.threshold().is_some()))
                    })
                    .collect();
                incomplete_ls = ls
                    .iter()
                    .copied()
                    .filter(|l| !complete.contains(l))
                    .collect();
                let series: Vec<Series> = rows
                    .iter()
                    .map(|(_, r)| {
                        let (xs, ys) = r
                            .iter()
                            .filter(|x| complete.contains(&x.l))
                            .map(|x| (x.l as u64, x.threshold().unwrap() as f64))
                            .unzip();
                        Series { xs, ys }
                    })
                    .collect();
                Some(ensemble_stats(&series)?)
            };
            (SeriesData::Richness(rows), ensemble)
        }
        (source, Measurement::Deviation { l, grid }) => {
            let points = grid.points(*l, config.len);
            let rows: Vec<(Member, DeviationCurve)> = members(source)
                .into_par_iter()
                .map(|m| {
                    let mut s = m.open(config.len)?;
                    let c = deviation_curve(&mut s, *l, &points)?;
                    Ok((m, c))
                })
                .collect::<Result<_>>()?;
            let ensemble = if config.output == OutputMode::Members {
                None
            } else {
                let series: Vec<Series> = rows.iter().map(|(_, c)| Series::from(c)).collect();
                Some(ensemble_stats(&series)?)
            };
            (SeriesData::Deviation(rows), ensemble)
        }
        _ => unreachable!("rejected by validate"),
    };
    Ok(SeriesResult {
        config: config.clone(),
        data,
        ensemble,
        incomplete_ls,
        files: Vec::new(),
    })
}

/// Writes the CSV files of a finished series into `dir`.
pub fn write_series(dir: &Path, result: &mut SeriesResult) -> Result<()> {
    let name = &result.config.name;
    let mode = result.config.output;
    let members_wanted = mode != OutputMode::Ensemble;
    match &result.data {
        SeriesData::Expansions(rows) => {
            let path = dir.join(format!("{name}.csv"));
            write_expansions_csv(&path, rows)?;
            result.files.push(path);
        }
        SeriesData::Richness(rows) if members_wanted => {
            let path = dir.join(format!("{name}.csv"));
            let flat: Vec<RichnessRow> = rows
                .iter()
                .flat_map(|(m, reports)| {
                    reports.iter().map(move |r| RichnessRow {
                        base: m.base_label.clone(),
                        seed: m.seed_label.clone(),
                        l: r.l,
                        threshold_or_negative_missing: r.signed(),
                        cap: r.cap,
                    })
                })
                .collect();
            write_richness_csv(&path, &flat)?;
            result.files.push(path);
        }
        SeriesData::Deviation(rows) if members_wanted => {
            let path = dir.join(format!("{name}.csv"));
            let flat: Vec<DeviationRow> = rows
                .iter()
                .flat_map(|(m, c)| {
                    c.samples.iter().map(move |&(n, d)| DeviationRow {
                        base: m.base_label.clone(),
                        seed: m.seed_label.clone(),
                        l: c.l,
                        n,
                        d,
                    })
                })
                .collect();
            write_deviation_csv(&path, &flat)?;
            result.files.push(path);
        }
        _ => {}
    }
    if let Some(e) = &result.ensemble {
        let path = dir.join(format!("{name}_ensemble.csv"));
        write_ensemble_csv(&path, e)?;
        result.files.push(path);
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct Sidecar<'a> {
    tool: &'static str,
    tool_version: &'static str,
    manifest: &'a ReproManifest,
    rng_seed: Option<u64>,
    overrides: Overrides,
    external_constants: Vec<&'a str>,
    incomplete_ensemble_lengths: Vec<(&'a str, &'a [u32])>,
    files: Vec<String>,
}

#[derive(Debug, Serialize)]
struct Overrides {
    len: Option<u64>,
    members: Option<usize>,
    workers: Option<usize>,
}

/// Runs every series of a manifest (after overrides) and, when an output
/// directory is set, writes one CSV per series plus `manifest.json`.
pub fn run_manifest(manifest: &ReproManifest, opts: &RunOptions) -> Result<Vec<SeriesResult>> {
    let manifest = apply_overrides(manifest, opts)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = opts.workers {
        builder = builder.num_threads(k);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    if let Some(dir) = &opts.out {
        std::fs::create_dir_all(dir)?;
    }
    let total = manifest.series.len();
    let mut results = Vec::with_capacity(total);
    for (i, config) in manifest.series.iter().enumerate() {
        let mut result = pool.install(|| run_series(config))?;
        if let Some(dir) = &opts.out {
            write_series(dir, &mut result)?;
        }
        if opts.progress {
            eprintln!("[{}] {}/{} {} done", manifest.id, i + 1, total, config.name);
        }
        results.push(result);
    }
    if let Some(dir) = &opts.out {
        let sidecar = Sidecar {
            tool: env!("CARGO_PKG_NAME"),
            tool_version: env!("CARGO_PKG_VERSION"),
            manifest: &manifest,
            rng_seed: opts.rng_seed,
            overrides: Overrides {
                len: opts.len,
                members: opts.members,
                workers: opts.workers,
            },
            external_constants: manifest
                .series
                .iter()
                .filter(|s| s.is_external())
                .map(|s| s.name.as_str())
                .collect(),
            incomplete_ensemble_lengths: results
                .iter()
                .filter(|r| !r.incomplete_ls.is_empty())
                .map(|r| (r.config.name.as_str(), r.incomplete_ls.as_slice()))
                .collect(),
            files: results
                .iter()
                .flat_map(|r| &r.files)
                .filter_map(|p| p.file_name().map(|f| f.to_string_lossy().into_owned()))
                .collect(),
        };
        let mut text = serde_json::to_vec_pretty(&sidecar)?;
        text.push(b'\n');
        write_atomic(&dir.join("manifest.json"), &text)?;
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::manifest::repro_manifest;

    #[test]
    fn member_labels() {
        let b: Base = "7/3".parse().unwrap();
        let m = members(&Source::Minimal {
            base: b,
            seeds: SeedSelection::Values {
                values: vec![1, 13],
            },
        });
        assert_eq!(m[0].seed_label, "3");
        assert_eq!(m[1].seed_label, "614");
        assert_eq!(m[1].base_label, "7/3");
        let r = members(&Source::Random {
            q: 2,
            count: 3,
            rng_seed: 9,
        });
        assert_eq!(r.len(), 3);
        assert!(r[0].seed_label.starts_with("random:"));
    }

    #[test]
    fn seed_draws_are_in_range_and_reproducible() {
        let a = draw_seed_values(100, 1 << 50, 5);
        assert_eq!(a, draw_seed_values(100, 1 << 50, 5));
        assert!(a.iter().all(|&v| v <= 1 << 50));
        assert_eq!(draw_seed_values(10, 0, 5), vec![0; 10]);
    }

    #[test]
    fn table1_rows() {
        let r = run_series(&repro_manifest("table1").unwrap().series[0]).unwrap();
        let SeriesData::Expansions(rows) = r.data else {
            panic!()
        };
        assert_eq!(rows.len(), 30);
        assert_eq!(rows[0].1, "ε");
        assert_eq!(rows[29].1, "6113");
    }

    #[test]
    fn small_table2_run() {
        let m = repro_manifest("table2").unwrap();
        let opts = RunOptions {
            len: Some(20_000),
            members: Some(1),
            ..RunOptions::default()
        };
        let m = ReproManifest {
            series: m
                .series
                .into_iter()
                .map(|mut s| {
                    if let Measurement::Richness { ls } = &mut s.measurement {
                        ls.truncate(8);
                    }
                    s
                })
                .collect(),
            ..m
        };
        let res = run_manifest(&m, &opts).unwrap();
        let SeriesData::Richness(rows) = &res[0].data else {
            panic!()
        };
        let got: Vec<i64> = rows[0].1.iter().map(RichnessReport::signed).collect();
        assert_eq!(got, [2, 6, 51, 54, 123, 358, 787, 1479]);
        let SeriesData::Richness(rows) = &res[5].data else {
            panic!()
        };
        let got: Vec<i64> = rows[0].1.iter().map(RichnessReport::signed).collect();
        assert_eq!(got, [3, 5, 20, 25, 102, 400, 540, 1351]);
    }
}
