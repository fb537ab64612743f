//! The `ratbase` command line.
//!
//! Exit status: 0 on success (findings included), 2 for usage errors, 3 when
//! a resource cap is hit, 1 for anything else.

use std::collections::BTreeSet;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;

use super::manifest::{
    repro_manifest_with_seed, ExperimentConfig, GridSpec, Measurement, OutputMode, SeedSelection,
    Source, DEFAULT_RNG_SEED, EXPERIMENT_IDS,
};
use super::output::{deviation_csv, ensemble_csv, richness_csv, DeviationRow, RichnessRow};
use super::run::{run_manifest, run_series, RunOptions, SeriesData};
use crate::analysis::{complexity_count, deviation_curve, richness_profile};
use crate::checks::{
    collatz_batch, equidistribution_finding, equidistribution_histogram, factor_search,
    letter_coverage, stop_letters, stop_map_batch, z_witness_finding, z_witness_search,
    FindingsLedger, TrajectoryOutcome, DEFAULT_EQUIDIST_TOLERANCE,
};
use crate::constants::{constant_stream, Constant};
use crate::error::{Error, Result};
use crate::numeration::{is_in_language, radix_cmp, rep, successor, val, Base, Digit, Nat, Word};
use crate::streams::{
    baseline_stream, BaselineKind, BaselineSpec, Extremal, ExtremalStream, LetterStream, Snapshot,
    WordStream,
};

#[derive(Debug, Parser)]
#[command(
    name = "ratbase",
    version,
    about = "Rational base numeration and minimal words"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expansion of an integer.
    Rep {
        #[arg(long)]
        base: String,
        n: String,
    },
    /// Value of a word (a rational with a power-of-q denominator).
    Val {
        #[arg(long)]
        base: String,
        word: String,
    },
    /// Next expansion in radix order.
    Succ {
        #[arg(long)]
        base: String,
        word: String,
    },
    /// Radix-order comparison, printed as `<`, `=` or `>`.
    Cmp {
        #[arg(long)]
        base: String,
        a: String,
        b: String,
    },
    /// Prefix of a minimal word.
    Wmin(WordArgs),
    /// Prefix of a maximal word.
    Wmax(WordArgs),
    /// Integer reached after emitting `--len` letters of the minimal word.
    Nmin(WordArgs),
    /// Richness thresholds, as CSV.
    Richness {
        #[command(flatten)]
        src: StreamArgs,
        /// Factor lengths, `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        l: RangeInclusive<u32>,
        /// Letters to read at most.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Deviation from uniform factor frequencies on a geometric grid, as CSV.
    Deviation {
        #[command(flatten)]
        src: StreamArgs,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 1_000_000)]
        len: u64,
        /// Grid ratio.
        #[arg(long, default_value_t = 1.1)]
        ratio: f64,
    },
    /// Number of distinct factors of each length in a prefix.
    Complexity {
        #[command(flatten)]
        src: StreamArgs,
        #[arg(long, value_parser = parse_range)]
        l: RangeInclusive<u32>,
        #[arg(long, default_value_t = 100_000)]
        len: u64,
    },
    /// Ensemble statistics over random seeds or random words, as CSV.
    Ensemble(EnsembleArgs),
    /// Residues of ceiling-map iterates modulo q^k.
    Equidist {
        #[arg(long)]
        base: String,
        #[arg(long)]
        seed_val: String,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1_000_000)]
        iterations: u64,
        #[arg(long, default_value_t = DEFAULT_EQUIDIST_TOLERANCE)]
        tolerance: f64,
        #[arg(long)]
        findings: Option<PathBuf>,
    },
    /// First occurrence of a factor; without `--target`, searches for `(q-1)(q-1)`.
    Factor {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[arg(long)]
        findings: Option<PathBuf>,
    },
    /// First position of every letter.
    Coverage {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        max: bool,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Iterate the ceiling map while the residue mod q stays in a set.
    Stopmap {
        #[arg(long)]
        base: String,
        /// Residues that keep the run going, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<u32>,
        /// Start values, `a..b` or a single value.
        #[arg(long, value_parser = parse_nat_range)]
        start: (Nat, Nat),
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        findings: Option<PathBuf>,
    },
    /// Trajectories of `x -> (p x + 1)/2` (odd), `x/2` (even).
    Collatz {
        #[arg(long)]
        p: u64,
        #[arg(long, value_parser = parse_nat_range)]
        start: (Nat, Nat),
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        findings: Option<PathBuf>,
    },
    /// Regenerate the CSVs of a table or figure.
    Repro(ReproArgs),
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    #[arg(long)]
    pub base: String,
    #[arg(long, conflicts_with = "seed_word")]
    pub seed_val: Option<String>,
    #[arg(long)]
    pub seed_word: Option<String>,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[arg(long, required_unless_present = "resume")]
    pub base: Option<String>,
    #[arg(long, conflicts_with = "seed_word")]
    pub seed_val: Option<String>,
    #[arg(long)]
    pub seed_word: Option<String>,
    #[arg(long)]
    pub len: u64,
    /// Continue from a snapshot file instead of a seed.
    #[arg(long)]
    pub resume: Option<PathBuf>,
    /// Write the final state to this file.
    #[arg(long)]
    pub snapshot: Option<PathBuf>,
    /// One byte per letter instead of text.
    #[arg(long)]
    pub raw: bool,
}

#[derive(Debug, Args)]
pub struct StreamArgs {
    /// Base of a minimal or maximal word.
    #[arg(long, conflicts_with_all = ["baseline", "constant"])]
    pub base: Option<String>,
    #[arg(long, conflicts_with = "seed_word")]
    pub seed_val: Option<String>,
    #[arg(long)]
    pub seed_word: Option<String>,
    #[arg(long)]
    pub max: bool,
    /// `random`, `champernowne` or `debruijn`.
    #[arg(long, requires = "q", conflicts_with = "constant")]
    pub baseline: Option<String>,
    /// `pi` or `sqrt2`.
    #[arg(long, requires = "q")]
    pub constant: Option<String>,
    /// Alphabet size of a baseline or constant.
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
    pub rng_seed: u64,
}

#[derive(Debug, Args)]
pub struct EnsembleArgs {
    /// Minimal words of this base from random seed valuations.
    #[arg(long, conflicts_with = "q")]
    pub base: Option<String>,
    /// Random words over this many letters.
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long, default_value_t = 1000)]
    pub members: usize,
    /// Largest seed valuation drawn.
    #[arg(long, default_value_t = 1 << 50)]
    pub max_seed: u64,
    /// `richness` or `deviation`.
    #[arg(long, default_value = "deviation")]
    pub measure: String,
    #[arg(long, value_parser = parse_range)]
    pub l: RangeInclusive<u32>,
    #[arg(long, default_value_t = 100_000)]
    pub len: u64,
    #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
    pub rng_seed: u64,
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// One of table1..table9, fig1..fig5.
    pub id: String,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
    pub rng_seed: u64,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Override every series' prefix length.
    #[arg(long)]
    pub len: Option<u64>,
    /// Keep only the first k members of every series.
    #[arg(long)]
    pub members: Option<usize>,
    /// Suppress the progress log.
    #[arg(long)]
    pub quiet: bool,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    if a == 0 || a > b {
        return Err(format!("`{s}`: expected 1 <= a <= b"));
    }
    Ok(a..=b)
}

fn parse_nat_range(s: &str) -> std::result::Result<(Nat, Nat), String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: Nat = a.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    let b: Nat = b
        .trim_start_matches('=')
        .trim()
        .parse()
        .map_err(|e| format!("`{s}`: {e}"))?;
    if a > b {
        return Err(format!("`{s}`: empty range"));
    }
    Ok((a, b))
}

fn parse_base(s: &str) -> Result<Base> {
    s.parse()
}

fn parse_nat(s: &str) -> Result<Nat> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("`{s}` is not a non-negative integer")))
}

fn seed_word(base: Base, val: Option<&str>, word: Option<&str>) -> Result<Word> {
    match (val, word) {
        (Some(v), _) => Ok(rep(base, &parse_nat(v)?)),
        (None, Some(w)) => {
            let w = base.parse_word(w)?;
            if !is_in_language(base, &w) {
                return Err(Error::InvalidSeed(format!(
                    "`{}` is not an expansion in base {base}",
                    base.format_word(&w)
                )));
            }
            Ok(w)
        }
        (None, None) => Err(Error::InvalidArgument(
            "one of --seed-val or --seed-word is required".into(),
        )),
    }
}

impl StreamArgs {
    fn open(&self, len: u64) -> Result<WordStream> {
        if let Some(b) = &self.base {
            let base = parse_base(b)?;
            let seed = seed_word(base, self.seed_val.as_deref(), self.seed_word.as_deref())?;
            let kind = if self.max {
                Extremal::Max
            } else {
                Extremal::Min
            };
            return Ok(Box::new(ExtremalStream::new(base, kind, &seed)?));
        }
        let q = self.q.unwrap_or(0);
        if let Some(c) = &self.constant {
            let c: Constant = c.parse()?;
            let n = usize::try_from(len)
                .map_err(|_| Error::InvalidArgument(format!("length {len} too large")))?;
            return Ok(Box::new(constant_stream(c, q, n)?));
        }
        match self
            .baseline
            .as_deref()
            .map(str::parse::<BaselineKind>)
            .transpose()?
        {
            Some(BaselineKind::Random) => baseline_stream(BaselineSpec::random(q, self.rng_seed)),
            Some(BaselineKind::Champernowne) => baseline_stream(BaselineSpec::champernowne(q)),
            Some(BaselineKind::DeBruijn) => baseline_stream(BaselineSpec::debruijn(q)),
            None => Err(Error::InvalidArgument(
                "give --base, --baseline or --constant".into(),
            )),
        }
    }

    fn labels(&self, stream: &dyn LetterStream) -> Result<(String, String)> {
        Ok(match &self.base {
            Some(b) => {
                let base = parse_base(b)?;
                let seed = seed_word(base, self.seed_val.as_deref(), self.seed_word.as_deref())?;
                (base.to_string(), base.format_word(&seed))
            }
            None => {
                let q = self.q.unwrap_or(0).to_string();
                let seed = match (&self.constant, self.baseline.as_deref()) {
                    (Some(c), _) => c.clone(),
                    (None, Some("random")) => format!("random:{}", self.rng_seed),
                    (None, Some(b)) => b.to_string(),
                    (None, None) => stream.label(),
                };
                (q, seed)
            }
        })
    }
}

fn open_ledger(path: Option<&PathBuf>) -> Result<FindingsLedger> {
    match path {
        Some(p) => FindingsLedger::open(p),
        None => Ok(FindingsLedger::in_memory()),
    }
}

fn report_findings(out: &mut dyn Write, ledger: &FindingsLedger) -> Result<()> {
    let n = ledger.len();
    if n > 0 {
        match ledger.path() {
            Some(p) => writeln!(out, "findings: {n} recorded in {}", p.display())?,
            None => {
                writeln!(out, "findings: {n}")?;
                for f in ledger.records() {
                    writeln!(out, "{}", serde_json::to_string(&f)?)?;
                }
            }
        }
    }
    Ok(())
}

fn nat_range((a, b): &(Nat, Nat)) -> Result<Vec<Nat>> {
    let span = b - a;
    if span >= Nat::from(100_000_000u32) {
        return Err(Error::ResourceLimit {
            what: "start values",
            needed: u128::try_from(&span).unwrap_or(u128::MAX),
            cap: 100_000_000,
        });
    }
    let mut v = Vec::new();
    let mut x = a.clone();
    while &x <= b {
        v.push(x.clone());
        x += 1u32;
    }
    Ok(v)
}

fn with_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(k) = workers {
        b = b.num_threads(k);
    }
    let pool = b
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    Ok(pool.install(f))
}

fn word_command(out: &mut dyn Write, args: &WordArgs, kind: Extremal, nmin: bool) -> Result<()> {
    let mut stream = match &args.resume {
        Some(path) => {
            let snap = Snapshot::read_from(path)?;
            if snap.kind != kind {
                return Err(Error::Snapshot(format!(
                    "snapshot holds a {} word, command needs {}",
                    snap.kind.name(),
                    kind.name()
                )));
            }
            ExtremalStream::resume(&snap)?
        }
        None => {
            let base = parse_base(args.base.as_deref().unwrap_or_default())?;
            let seed = seed_word(base, args.seed_val.as_deref(), args.seed_word.as_deref())?;
            ExtremalStream::new(base, kind, &seed)?
        }
    };
    let compact = stream.base().compact_digits();
    let mut buf = vec![0 as Digit; 1 << 14];
    let mut left = args.len;
    while left > 0 {
        let take = left.min(buf.len() as u64) as usize;
        stream.fill(&mut buf[..take])?;
        left -= take as u64;
        if nmin {
            continue;
        }
        if args.raw {
            let bytes: Vec<u8> = buf[..take].iter().map(|&d| d as u8).collect();
            out.write_all(&bytes)?;
        } else {
            let w = Word::from_digits(buf[..take].to_vec());
            let s = w.to_text(compact);
            if compact || left + take as u64 == args.len {
                out.write_all(s.as_bytes())?;
            } else {
                write!(out, ".{s}")?;
            }
        }
    }
    if nmin {
        let v = stream
            .value()
            .ok_or_else(|| Error::Unsupported("value of a residue-backend stream".into()))?;
        writeln!(out, "{v}")?;
    } else if !args.raw {
        writeln!(out)?;
    }
    if let Some(path) = &args.snapshot {
        stream.snapshot().write_to(path)?;
    }
    Ok(())
}

fn ensemble_command(out: &mut dyn Write, a: &EnsembleArgs) -> Result<()> {
    let source = match (&a.base, a.q) {
        (Some(b), _) => Source::Minimal {
            base: parse_base(b)?,
            seeds: SeedSelection::Random {
                count: a.members,
                max_value: a.max_seed,
                rng_seed: a.rng_seed,
            },
        },
        (None, Some(q)) => Source::Random {
            q,
            count: a.members,
            rng_seed: a.rng_seed,
        },
        (None, None) => return Err(Error::InvalidArgument("give --base or --q".into())),
    };
    let measurement = match a.measure.as_str() {
        "richness" => Measurement::Richness {
            ls: a.l.clone().collect(),
        },
        "deviation" => {
            if a.l.start() != a.l.end() {
                return Err(Error::InvalidArgument(
                    "a deviation ensemble takes a single --l".into(),
                ));
            }
            Measurement::Deviation {
                l: *a.l.start(),
                grid: GridSpec::default(),
            }
        }
        m => return Err(Error::InvalidArgument(format!("unknown measure `{m}`"))),
    };
    let config = ExperimentConfig {
        name: "ensemble".into(),
        source,
        len: a.len,
        measurement,
        output: OutputMode::Ensemble,
    };
    let r = with_pool(a.workers, || run_series(&config))??;
    if !r.incomplete_ls.is_empty() {
        eprintln!(
            "lengths left out (some member incomplete): {:?}",
            r.incomplete_ls
        );
    }
    let stats = r.ensemble.expect("ensemble requested");
    out.write_all(ensemble_csv(&stats).as_bytes())?;
    Ok(())
}

fn execute(out: &mut dyn Write, cmd: Command) -> Result<()> {
    match cmd {
        Command::Rep { base, n } => {
            let base = parse_base(&base)?;
            writeln!(out, "{}", base.format_word(&rep(base, &parse_nat(&n)?)))?;
        }
        Command::Val { base, word } => {
            let base = parse_base(&base)?;
            writeln!(out, "{}", val(base, &base.parse_word(&word)?)?)?;
        }
        Command::Succ { base, word } => {
            let base = parse_base(&base)?;
            let w = successor(base, &base.parse_word(&word)?)?;
            writeln!(out, "{}", base.format_word(&w))?;
        }
        Command::Cmp { base, a, b } => {
            let base = parse_base(&base)?;
            let sign = match radix_cmp(&base.parse_word(&a)?, &base.parse_word(&b)?) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            writeln!(out, "{sign}")?;
        }
        Command::Wmin(a) => word_command(out, &a, Extremal::Min, false)?,
        Command::Wmax(a) => word_command(out, &a, Extremal::Max, false)?,
        Command::Nmin(a) => word_command(out, &a, Extremal::Min, true)?,
        Command::Richness { src, l, cap } => {
            let mut s = src.open(cap)?;
            let (base, seed) = src.labels(&*s)?;
            let ls: Vec<u32> = l.collect();
            let rows: Vec<RichnessRow> = richness_profile(&mut s, &ls, cap)?
                .into_iter()
                .map(|r| RichnessRow {
                    base: base.clone(),
                    seed: seed.clone(),
                    l: r.l,
                    threshold_or_negative_missing: r.signed(),
                    cap: r.cap,
                })
                .collect();
            out.write_all(richness_csv(&rows).as_bytes())?;
        }
        Command::Deviation { src, l, len, ratio } => {
            if ratio.is_nan() || ratio <= 1.0 {
                return Err(Error::InvalidArgument(format!(
                    "grid ratio {ratio} must exceed 1"
                )));
            }
            let mut s = src.open(len)?;
            let (base, seed) = src.labels(&*s)?;
            let grid = GridSpec::Geometric { ratio }.points(l, len);
            let c = deviation_curve(&mut s, l, &grid)?;
            let rows: Vec<DeviationRow> = c
                .samples
                .iter()
                .map(|&(n, d)| DeviationRow {
                    base: base.clone(),
                    seed: seed.clone(),
                    l,
                    n,
                    d,
                })
                .collect();
            out.write_all(deviation_csv(&rows).as_bytes())?;
        }
        Command::Complexity { src, l, len } => {
            if len > 100_000_000 {
                return Err(Error::ResourceLimit {
                    what: "complexity prefix letters",
                    needed: len as u128,
                    cap: 100_000_000,
                });
            }
            let mut s = src.open(len)?;
            let prefix = s.take_letters(len as usize)?;
            writeln!(out, "l,count")?;
            for l in l {
                writeln!(out, "{l},{}", complexity_count(&prefix, l as usize))?;
            }
        }
        Command::Ensemble(a) => ensemble_command(out, &a)?,
        Command::Equidist {
            base,
            seed_val,
            k,
            iterations,
            tolerance,
            findings,
        } => {
            let base = parse_base(&base)?;
            let n = parse_nat(&seed_val)?;
            let ledger = open_ledger(findings.as_ref())?;
            let h = equidistribution_histogram(base, &n, k, iterations)?;
            writeln!(out, "class,count,frequency")?;
            for (i, (c, f)) in h.counts.iter().zip(h.frequencies()).enumerate() {
                writeln!(out, "{i},{c},{f}")?;
            }
            writeln!(out, "max_gap,{}", h.max_gap())?;
            if let Some(f) = equidistribution_finding(base, &n, &h, tolerance) {
                ledger.record(f)?;
            }
            report_findings(out, &ledger)?;
        }
        Command::Factor {
            seed,
            target,
            cap,
            findings,
        } => {
            let base = parse_base(&seed.base)?;
            let u = seed_word(base, seed.seed_val.as_deref(), seed.seed_word.as_deref())?;
            let hit = match target {
                Some(t) => {
                    let t = base.parse_word(&t)?;
                    let mut s = ExtremalStream::new(base, Extremal::Min, &u)?;
                    factor_search(&mut s, t.digits(), cap)?
                }
                None => {
                    let ledger = open_ledger(findings.as_ref())?;
                    let n = crate::numeration::val_integer(base, &u)?;
                    let hit = z_witness_search(base, &n, cap)?;
                    if let Some(f) = z_witness_finding(base, &n, cap, hit) {
                        ledger.record(f)?;
                    }
                    print_hit(out, hit)?;
                    return report_findings(out, &ledger);
                }
            };
            print_hit(out, hit)?;
        }
        Command::Coverage { seed, max, cap } => {
            let base = parse_base(&seed.base)?;
            let u = seed_word(base, seed.seed_val.as_deref(), seed.seed_word.as_deref())?;
            let kind = if max { Extremal::Max } else { Extremal::Min };
            let c = letter_coverage(&mut ExtremalStream::new(base, kind, &u)?, cap)?;
            writeln!(out, "letter,first_position")?;
            for (i, f) in c.first.iter().enumerate() {
                let pos = f.map_or_else(|| "absent".to_string(), |p| p.to_string());
                writeln!(out, "{},{pos}", c.alphabet.lo + i as Digit)?;
            }
        }
        Command::Stopmap {
            base,
            set,
            start,
            budget,
            workers,
            findings,
        } => {
            let base = parse_base(&base)?;
            let s: BTreeSet<u32> = set.into_iter().collect();
            let starts = nat_range(&start)?;
            if starts.iter().any(Zero::is_zero) {
                return Err(Error::InvalidArgument(
                    "start values must be positive".into(),
                ));
            }
            let ledger = open_ledger(findings.as_ref())?;
            let runs = with_pool(workers, || {
                stop_map_batch(base, &s, &starts, budget, &ledger)
            })??;
            writeln!(
                out,
                "# minimal-word letters S' = {:?}",
                stop_letters(base, &s)
            )?;
            writeln!(out, "x0,steps_to_stop")?;
            for r in runs {
                let steps = r
                    .steps_to_stop
                    .map_or_else(|| "none".to_string(), |m| m.to_string());
                writeln!(out, "{},{steps}", r.start)?;
            }
            report_findings(out, &ledger)?;
        }
        Command::Collatz {
            p,
            start,
            budget,
            workers,
            findings,
        } => {
            let starts = nat_range(&start)?;
            let ledger = open_ledger(findings.as_ref())?;
            let ts = with_pool(workers, || collatz_batch(p, &starts, budget, &ledger))??;
            writeln!(out, "x0,steps,outcome,cycle_min,period,max_bits")?;
            for t in ts {
                let (outcome, min, period) = match &t.outcome {
                    TrajectoryOutcome::Cycle {
                        period, smallest, ..
                    } => ("cycle", smallest.to_string(), period.to_string()),
                    TrajectoryOutcome::Undetermined => {
                        ("undetermined", String::new(), String::new())
                    }
                };
                writeln!(
                    out,
                    "{},{},{outcome},{min},{period},{}",
                    t.start,
                    t.steps,
                    t.max_value.bits()
                )?;
            }
            report_findings(out, &ledger)?;
        }
        Command::Repro(a) => {
            let m = repro_manifest_with_seed(&a.id, a.rng_seed)?;
            let opts = RunOptions {
                out: Some(a.out.clone()),
                workers: a.workers,
                len: a.len,
                members: a.members,
                rng_seed: Some(a.rng_seed),
                progress: !a.quiet,
            };
            let results = run_manifest(&m, &opts)?;
            for r in &results {
                if let SeriesData::Expansions(_) = r.data {
                    // table1 is small enough to echo
                    let path = &r.files[0];
                    out.write_all(&std::fs::read(path)?)?;
                }
            }
            let files: usize = results.iter().map(|r| r.files.len()).sum();
            writeln!(out, "{}: {files} CSV files in {}", a.id, a.out.display())?;
        }
    }
    Ok(())
}

fn print_hit(out: &mut dyn Write, hit: Option<u64>) -> Result<()> {
    match hit {
        Some(p) => writeln!(out, "{p}")?,
        None => writeln!(out, "absent")?,
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(out, cli.command) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Identifiers accepted by `repro`.
pub fn repro_ids() -> &'static [&'static str] {
    &EXPERIMENT_IDS
}
