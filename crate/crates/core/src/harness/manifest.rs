use serde::{Deserialize, Serialize};

use crate::constants::Constant;
use crate::error::{Error, Result};
use crate::numeration::Base;

/// Bumped whenever an embedded configuration changes.
pub const MANIFEST_VERSION: u32 = 1;

/// Default generator seed for every randomized experiment.
pub const DEFAULT_RNG_SEED: u64 = 1_234_567;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SeedSelection {
    /// Seeds `rep(v)` for the listed valuations.
    Values { values: Vec<u64> },
    /// `count` valuations drawn uniformly from `0..=max_value`.
    Random {
        count: usize,
        max_value: u64,
        rng_seed: u64,
    },
}

/// Where the letters of a series come from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    /// `rep(0), ..., rep(count - 1)`; only meaningful with [`Measurement::Expansions`].
    Integers {
        base: Base,
        count: u64,
    },
    Minimal {
        base: Base,
        seeds: SeedSelection,
    },
    /// Digits of an external constant, integer part included.
    Constant {
        constant: Constant,
        q: u32,
    },
    /// `count` independent random words; member `i` uses the `i`-th output of
    /// SplitMix64 seeded with `rng_seed`.
    Random {
        q: u32,
        count: usize,
        rng_seed: u64,
    },
    Champernowne {
        q: u32,
    },
    DeBruijn {
        q: u32,
    },
    /// The closed form `floor(q^l log q^l)`; no word is generated.
    ExpectedRandom {
        q: u32,
    },
}

impl Source {
    /// Alphabet size of the generated words.
    pub fn alphabet_size(&self) -> u32 {
        match self {
            Source::Integers { base, .. } | Source::Minimal { base, .. } => base.q(),
            Source::Constant { q, .. }
            | Source::Random { q, .. }
            | Source::Champernowne { q }
            | Source::DeBruijn { q }
            | Source::ExpectedRandom { q } => *q,
        }
    }

    pub fn members(&self) -> usize {
        match self {
            Source::Minimal {
                seeds: SeedSelection::Values { values },
                ..
            } => values.len(),
            Source::Minimal {
                seeds: SeedSelection::Random { count, .. },
                ..
            }
            | Source::Random { count, .. } => *count,
            _ => 1,
        }
    }

    /// Copy with at most `k` members (the first `k`, in generation order).
    pub fn truncated(&self, k: usize) -> Source {
        let mut s = self.clone();
        match &mut s {
            Source::Minimal {
                seeds: SeedSelection::Values { values },
                ..
            } => values.truncate(k),
            Source::Minimal {
                seeds: SeedSelection::Random { count, .. },
                ..
            }
            | Source::Random { count, .. } => *count = (*count).min(k),
            _ => {}
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GridSpec {
    /// `ceil(ratio^i)`, deduplicated, clipped to `[l, len]`, plus `len`.
    Geometric { ratio: f64 },
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::Geometric { ratio: 1.1 }
    }
}

impl GridSpec {
    pub fn points(&self, l: u32, len: u64) -> Vec<u64> {
        let GridSpec::Geometric { ratio } = *self;
        let mut grid = Vec::new();
        let mut x = 1.0f64;
        while x.ceil() as u64 <= len {
            let n = x.ceil() as u64;
            if n >= l as u64 && grid.last() != Some(&n) {
                grid.push(n);
            }
            x *= ratio;
        }
        if len >= l as u64 && grid.last() != Some(&len) {
            grid.push(len);
        }
        grid
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Measurement {
    Expansions,
    Richness { ls: Vec<u32> },
    Deviation { l: u32, grid: GridSpec },
}

/// What to write for a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputMode {
    /// One row per member and sample point.
    Members,
    /// Only the ensemble summary (min, d10, mean, d90, max).
    Ensemble,
    Both,
}

/// One series of an experiment: a word source, a prefix length and a measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    /// File stem of the series' CSV output.
    pub name: String,
    pub source: Source,
    /// Prefix length `N` read from every word.
    pub len: u64,
    pub measurement: Measurement,
    pub output: OutputMode,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let max_l = match &self.measurement {
            Measurement::Expansions => 0,
            Measurement::Richness { ls } => ls.iter().copied().max().unwrap_or(0),
            Measurement::Deviation { l, .. } => *l,
        };
        if (max_l as u64) > self.len {
            return Err(Error::InvalidArgument(format!(
                "series `{}`: prefix length {} is shorter than factor length {max_l}",
                self.name, self.len
            )));
        }
        match (&self.source, &self.measurement) {
            (Source::Integers { .. }, Measurement::Expansions) => Ok(()),
            (Source::Integers { .. }, _) | (_, Measurement::Expansions) => {
                Err(Error::InvalidArgument(format!(
                    "series `{}`: expansions are only listed for integer ranges",
                    self.name
                )))
            }
            (Source::ExpectedRandom { .. }, Measurement::Deviation { .. }) => {
                Err(Error::InvalidArgument(format!(
                    "series `{}`: the closed form only gives thresholds",
                    self.name
                )))
            }
            _ => Ok(()),
        }
    }

    /// Whether the series uses digits of an external constant.
    pub fn is_external(&self) -> bool {
        matches!(self.source, Source::Constant { .. })
    }
}

/// Configuration of one table or figure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproManifest {
    pub id: String,
    pub version: u32,
    pub description: String,
    pub series: Vec<ExperimentConfig>,
}

/// Identifiers accepted by [`repro_manifest`].
pub const EXPERIMENT_IDS: [&str; 14] = [
    "table1", "table2", "table3", "table4", "table5", "table6", "table7", "table8", "table9",
    "fig1", "fig2", "fig3", "fig4", "fig5",
];

const MILLION: u64 = 1_000_000;
const HUNDRED_K: u64 = 100_000;

/// Seed valuations of the second family, by base.
pub const SECOND_FAMILY: [(&str, [u64; 20]); 4] = [
    (
        "3/2",
        [
            97, 135, 159, 218, 224, 243, 258, 276, 382, 433, 570, 604, 650, 670, 684, 771, 845,
            870, 972, 990,
        ],
    ),
    (
        "7/2",
        [
            26, 115, 167, 190, 223, 243, 250, 255, 271, 294, 316, 394, 408, 592, 763, 802, 804,
            830, 885, 943,
        ],
    ),
    (
        "8/3",
        [
            33, 108, 188, 336, 342, 458, 470, 579, 596, 631, 641, 670, 767, 785, 805, 849, 883,
            916, 958, 1000,
        ],
    ),
    (
        "8/5",
        [
            61, 111, 116, 414, 432, 455, 477, 551, 592, 664, 711, 749, 772, 791, 835, 856, 878,
            945, 961, 965,
        ],
    ),
];

/// Bases of the first family, grouped by denominator, with the table's largest `l`.
const FIRST_FAMILY: [(u32, &[u32], u32); 7] = [
    (2, &[3, 5, 7, 9], 17),
    (3, &[4, 5, 7, 8], 11),
    (4, &[5, 7, 9], 9),
    (5, &[6, 7, 8, 9], 8),
    (6, &[7], 7),
    (7, &[8, 9], 6),
    (8, &[9], 6),
];

/// Bases of the third family and the factor length used for their deviations.
const THIRD_FAMILY: [(&str, u32); 4] = [("3/2", 7), ("7/2", 7), ("8/3", 5), ("8/5", 4)];

const THIRD_FAMILY_MAX_SEED: u64 = 1 << 50;
const ENSEMBLE_SIZE: usize = 1000;

fn base(s: &str) -> Base {
    s.parse().expect("embedded base")
}

/// File-name form of a base: `7/3` becomes `7-3`.
pub fn base_slug(b: Base) -> String {
    format!("{}-{}", b.p(), b.q())
}

fn richness(
    name: String,
    source: Source,
    len: u64,
    ls: Vec<u32>,
    output: OutputMode,
) -> ExperimentConfig {
    ExperimentConfig {
        name,
        source,
        len,
        measurement: Measurement::Richness { ls },
        output,
    }
}

fn deviation(
    name: String,
    source: Source,
    len: u64,
    l: u32,
    output: OutputMode,
) -> ExperimentConfig {
    ExperimentConfig {
        name,
        source,
        len,
        measurement: Measurement::Deviation {
            l,
            grid: GridSpec::default(),
        },
        output,
    }
}

/// Comparison rows shared by Tables 2 to 9: sqrt(2), pi, one random word and the closed form.
fn comparison_rows(q: u32, ls: &[u32], rng_seed: u64) -> Vec<ExperimentConfig> {
    let ls = ls.to_vec();
    vec![
        richness(
            format!("sqrt2_base{q}"),
            Source::Constant {
                constant: Constant::Sqrt2,
                q,
            },
            MILLION,
            ls.clone(),
            OutputMode::Members,
        ),
        richness(
            format!("pi_base{q}"),
            Source::Constant {
                constant: Constant::Pi,
                q,
            },
            MILLION,
            ls.clone(),
            OutputMode::Members,
        ),
        richness(
            format!("random_base{q}"),
            Source::Random {
                q,
                count: 1,
                rng_seed,
            },
            MILLION,
            ls.clone(),
            OutputMode::Members,
        ),
        richness(
            format!("expected_base{q}"),
            Source::ExpectedRandom { q },
            MILLION,
            ls,
            OutputMode::Members,
        ),
    ]
}

/// Largest `l` with `q^l log(q^l) <= len`: the lengths a random word of length
/// `len` is expected to complete.
pub fn reachable_lengths(q: u32, len: u64) -> Vec<u32> {
    (1..)
        .take_while(|&l| crate::analysis::expected_random_threshold(q, l) <= len)
        .collect()
}

/// Returns the embedded configuration for a table or figure.
pub fn repro_manifest(id: &str) -> Result<ReproManifest> {
    repro_manifest_with_seed(id, DEFAULT_RNG_SEED)
}

/// As [`repro_manifest`], with every randomized series seeded from `rng_seed`.
pub fn repro_manifest_with_seed(id: &str, rng_seed: u64) -> Result<ReproManifest> {
    let (description, series) = match id {
        "table1" => (
            "Expansions of 0..29 in base 7/3".to_string(),
            vec![ExperimentConfig {
                name: "table1".into(),
                source: Source::Integers {
                    base: base("7/3"),
                    count: 30,
                },
                len: 0,
                measurement: Measurement::Expansions,
                output: OutputMode::Members,
            }],
        ),
        "table2" | "table3" | "table4" | "table5" | "table6" | "table7" | "table8" => {
            let q: u32 = id[5..].parse().expect("table number");
            let (_, ps, max_l) = FIRST_FAMILY[q as usize - 2];
            let ls: Vec<u32> = (1..=max_l).collect();
            let mut series: Vec<_> = ps
                .iter()
                .map(|&p| {
                    let b = Base::new(p, q).expect("coprime");
                    richness(
                        format!("wmin_{}", base_slug(b)),
                        Source::Minimal {
                            base: b,
                            seeds: SeedSelection::Values { values: vec![1] },
                        },
                        MILLION,
                        ls.clone(),
                        OutputMode::Members,
                    )
                })
                .collect();
            series.extend(comparison_rows(q, &ls, rng_seed));
            (
                format!("Richness thresholds of the first family for q = {q}, l = 1..{max_l}"),
                series,
            )
        }
        "table9" => {
            let ls: Vec<u32> = (1..=11).collect();
            let mut series = vec![richness(
                "wmin_8-3".into(),
                Source::Minimal {
                    base: base("8/3"),
                    seeds: SeedSelection::Values {
                        values: SECOND_FAMILY[2].1.to_vec(),
                    },
                },
                MILLION,
                ls.clone(),
                OutputMode::Members,
            )];
            series.extend(comparison_rows(3, &ls, rng_seed));
            (
                "Richness thresholds in base 8/3 for the 20 seeds of the second family".into(),
                series,
            )
        }
        "fig1" => {
            let mut series = Vec::new();
            for (b, _) in THIRD_FAMILY {
                let b = base(b);
                let q = b.q();
                let ls = reachable_lengths(q, HUNDRED_K);
                series.push(richness(
                    format!("wmin_{}", base_slug(b)),
                    third_family_source(b, rng_seed),
                    HUNDRED_K,
                    ls.clone(),
                    OutputMode::Both,
                ));
                series.push(richness(
                    format!("random_base{q}_for_{}", base_slug(b)),
                    random_ensemble(q, rng_seed),
                    HUNDRED_K,
                    ls,
                    OutputMode::Ensemble,
                ));
            }
            (
                "Richness thresholds of 1000 minimal words per base against 1000 random words"
                    .into(),
                series,
            )
        }
        "fig2" => (
            "Length-7 deviation of wmin_7/2(2) against 1000 random binary words".into(),
            vec![
                deviation(
                    "wmin_7-2".into(),
                    Source::Minimal {
                        base: base("7/2"),
                        seeds: SeedSelection::Values { values: vec![1] },
                    },
                    MILLION,
                    7,
                    OutputMode::Members,
                ),
                deviation(
                    "random_base2".into(),
                    random_ensemble(2, rng_seed),
                    MILLION,
                    7,
                    OutputMode::Ensemble,
                ),
            ],
        ),
        "fig3" => (
            "Length-7 deviation of the 20 second-family words in base 7/2".into(),
            vec![
                second_family_deviation(),
                deviation(
                    "random_base2".into(),
                    random_ensemble(2, rng_seed),
                    MILLION,
                    7,
                    OutputMode::Ensemble,
                ),
            ],
        ),
        "fig4" => {
            let mut series = Vec::new();
            for (b, l) in THIRD_FAMILY {
                let b = base(b);
                series.push(deviation(
                    format!("wmin_{}", base_slug(b)),
                    third_family_source(b, rng_seed),
                    HUNDRED_K,
                    l,
                    OutputMode::Ensemble,
                ));
                series.push(deviation(
                    format!("random_base{}_for_{}", b.q(), base_slug(b)),
                    random_ensemble(b.q(), rng_seed),
                    HUNDRED_K,
                    l,
                    OutputMode::Ensemble,
                ));
            }
            (
                "Deviation ensembles of 1000 minimal words per base against random words".into(),
                series,
            )
        }
        "fig5" => {
            let b = base("8/3");
            let ls = reachable_lengths(3, HUNDRED_K);
            (
                "Left: base 8/3 richness with a ternary de Bruijn word. Right: base 7/2 deviations with the binary Champernowne word"
                    .into(),
                vec![
                    richness(
                        "left_wmin_8-3".into(),
                        third_family_source(b, rng_seed),
                        HUNDRED_K,
                        ls.clone(),
                        OutputMode::Both,
                    ),
                    richness(
                        "left_random_base3".into(),
                        random_ensemble(3, rng_seed),
                        HUNDRED_K,
                        ls.clone(),
                        OutputMode::Ensemble,
                    ),
                    richness(
                        "left_debruijn_base3".into(),
                        Source::DeBruijn { q: 3 },
                        HUNDRED_K,
                        ls,
                        OutputMode::Members,
                    ),
                    ExperimentConfig {
                        name: "right_wmin_7-2".into(),
                        ..second_family_deviation()
                    },
                    deviation(
                        "right_random_base2".into(),
                        random_ensemble(2, rng_seed),
                        MILLION,
                        7,
                        OutputMode::Ensemble,
                    ),
                    deviation(
                        "right_champernowne_base2".into(),
                        Source::Champernowne { q: 2 },
                        MILLION,
                        7,
                        OutputMode::Members,
                    ),
                ],
            )
        }
        _ => return Err(Error::UnknownExperiment(id.to_string())),
    };
    let manifest = ReproManifest {
        id: id.to_string(),
        version: MANIFEST_VERSION,
        description,
        series,
    };
    for s in &manifest.series {
        s.validate()?;
    }
    Ok(manifest)
}

fn third_family_source(b: Base, rng_seed: u64) -> Source {
    Source::Minimal {
        base: b,
        seeds: SeedSelection::Random {
            count: ENSEMBLE_SIZE,
            max_value: THIRD_FAMILY_MAX_SEED,
            rng_seed: rng_seed ^ ((b.p() as u64) << 32 | b.q() as u64),
        },
    }
}

fn random_ensemble(q: u32, rng_seed: u64) -> Source {
    Source::Random {
        q,
        count: ENSEMBLE_SIZE,
        rng_seed: rng_seed.wrapping_add(q as u64),
    }
}

fn second_family_deviation() -> ExperimentConfig {
    deviation(
        "wmin_7-2".into(),
        Source::Minimal {
            base: base("7/2"),
            seeds: SeedSelection::Values {
                values: SECOND_FAMILY[1].1.to_vec(),
            },
        },
        MILLION,
        7,
        OutputMode::Members,
    )
}
