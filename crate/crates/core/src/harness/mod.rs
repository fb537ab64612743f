//! Experiment manifests, CSV output and the command-line front end.
//!
//! A [`ReproManifest`] lists the series of one table or figure. Running it
//! writes `<series>.csv` (one row per member and length) and, for ensembles,
//! `<series>_ensemble.csv`, plus a `manifest.json` sidecar with the resolved
//! configuration, overrides and tool version.

pub mod cli;
mod manifest;
pub mod output;
pub mod reference;
mod run;

pub use cli::{run_cli, Cli};
pub use manifest::{
    base_slug, reachable_lengths, repro_manifest, repro_manifest_with_seed, ExperimentConfig,
    GridSpec, Measurement, OutputMode, ReproManifest, SeedSelection, Source, DEFAULT_RNG_SEED,
    EXPERIMENT_IDS, MANIFEST_VERSION, SECOND_FAMILY,
};
pub use run::{
    apply_overrides, draw_seed_values, member_richness, member_rng_seeds, members, run_manifest,
    run_series, write_series, Member, RunOptions, SeriesData, SeriesResult,
};
