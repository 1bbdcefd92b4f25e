//! Experiment driver: reproduces the toolkit's figure data as CSV/JSON
//! artifacts with deterministic seeding.
//!
//! Four commands are exposed through the `haarbench` binary:
//!
//! - `scatter` — (entropy, fidelity) pairs of Haar-random states against a
//!   fixed reference.
//! - `avg-fid` — mean fidelity per entanglement-entropy window.
//! - `pdf-table` — a closed-form fidelity PDF evaluated on a uniform grid.
//! - `benchmark` — JS divergence of the noisy DQC device against the
//!   error-free reference, per error probability.
//!
//! Parameters resolve with flag > config file > environment (seed only) >
//! default precedence, and every output embeds the provenance needed to
//! re-run it exactly.

use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;

use crate::analytic::AnalyticPdf;
use crate::benchmark::{benchmark_sweep, BenchmarkConfig, InputKind};
use crate::error::{Error, Result};
use crate::output::{atomic_write, Cell, DataTable};
use crate::rng::RandomStream;
use crate::sampling::{sample_haar_state, sample_haar_unitary};
use crate::state::{
    apply_local_unitaries_unchecked, entanglement_entropy, fidelity_pure_pure, PureState,
};

/// Samples drawn per substream when an experiment is chunked across workers.
const TRIALS_PER_STREAM: usize = 1024;

/// Substream label reserved for drawing the fixed Haar-random reference.
const REFERENCE_LABEL: u64 = u64::MAX;

/// Windows with fewer samples than this are emitted with a null mean and
/// flagged invalid.
pub const MIN_WINDOW_COUNT: usize = 100;

// ---------------------------------------------------------------------------
// Spec enums
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Scatter,
    AvgFid,
    PdfTable,
    Benchmark,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Scatter => "scatter",
            Command::AvgFid => "avg-fid",
            Command::PdfTable => "pdf-table",
            Command::Benchmark => "benchmark",
        }
    }

    fn default_samples(&self) -> usize {
        match self {
            Command::Scatter => 50_000,
            Command::AvgFid => 200_000,
            Command::PdfTable => 0, // grid evaluation, no sampling
            Command::Benchmark => 100_000,
        }
    }
}

/// The fixed reference state used by `scatter` and `avg-fid`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceKind {
    Separable,
    MaxEntangled,
    HaarRandom,
}

impl ReferenceKind {
    pub fn name(&self) -> &'static str {
        match self {
            ReferenceKind::Separable => "separable",
            ReferenceKind::MaxEntangled => "max-entangled",
            ReferenceKind::HaarRandom => "haar-random",
        }
    }
}

impl FromStr for ReferenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "separable" => Ok(ReferenceKind::Separable),
            "max-entangled" => Ok(ReferenceKind::MaxEntangled),
            "haar-random" => Ok(ReferenceKind::HaarRandom),
            other => Err(Error::InvalidConfig(format!(
                "unknown reference kind `{other}` (expected separable|max-entangled|haar-random)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn name(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidConfig(format!(
                "unknown output format `{other}` (expected csv|json)"
            ))),
        }
    }
}

// ---------------------------------------------------------------------------
// Spec resolution: defaults < config file < flags
// ---------------------------------------------------------------------------

/// Values supplied on the command line; `None` means "not given".
#[derive(Debug, Clone, Default)]
pub struct SpecOverrides {
    pub dim: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub reference: Option<ReferenceKind>,
    pub window_width: Option<f64>,
    pub gamma: Option<f64>,
    pub maxent: bool,
    pub eps_grid: Option<Vec<f64>>,
    pub bins: Option<usize>,
}

/// A parsed flat `key = value` config file.
#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    entries: Vec<(String, String)>,
}

const KNOWN_KEYS: &[&str] = &[
    "dim",
    "samples",
    "seed",
    "out",
    "format",
    "reference",
    "window-width",
    "gamma",
    "maxent",
    "eps-grid",
    "bins",
    "grid-points",
];

impl ConfigFile {
    /// Parse `key = value` lines; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::ConfigParse(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let key = key.trim().to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(Error::ConfigParse(format!(
                    "line {}: unknown key `{key}`",
                    lineno + 1
                )));
            }
            entries.push((key, value.trim().to_string()));
        }
        Ok(Self { entries })
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    fn get(&self, key: &str) -> Option<&str> {
        // Last occurrence wins, like repeated flags.
        self.entries
            .iter()
            .rev()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn get_parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| Error::ConfigParse(format!("key `{key}`: cannot parse `{raw}`"))),
        }
    }

    fn get_eps_grid(&self) -> Result<Option<Vec<f64>>> {
        match self.get("eps-grid") {
            None => Ok(None),
            Some(raw) => raw
                .split(',')
                .map(|s| {
                    s.trim().parse::<f64>().map_err(|_| {
                        Error::ConfigParse(format!("key `eps-grid`: cannot parse `{s}`"))
                    })
                })
                .collect::<Result<Vec<f64>>>()
                .map(Some),
        }
    }
}

/// A fully resolved experiment.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub command: Command,
    pub dim: usize,
    pub samples: usize,
    pub seed: u64,
    pub out: PathBuf,
    pub format: OutputFormat,
    pub reference: ReferenceKind,
    pub window_width: f64,
    pub gamma: Option<f64>,
    pub maxent: bool,
    pub eps_grid: Vec<f64>,
    pub bins: usize,
    pub grid_points: usize,
}

impl ExperimentSpec {
    /// Merge flags over config values over defaults (the seed also falls
    /// back to the `HAARBENCH_SEED` environment value, passed in by the
    /// caller), then validate.
    pub fn resolve(
        command: Command,
        flags: SpecOverrides,
        config: Option<&ConfigFile>,
        env_seed: Option<u64>,
    ) -> Result<Self> {
        let empty = ConfigFile::default();
        let cfg = config.unwrap_or(&empty);

        let spec = Self {
            command,
            dim: flags.dim.or(cfg.get_parsed("dim")?).unwrap_or(2),
            samples: flags
                .samples
                .or(cfg.get_parsed("samples")?)
                .unwrap_or_else(|| command.default_samples()),
            seed: flags
                .seed
                .or(cfg.get_parsed("seed")?)
                .or(env_seed)
                .unwrap_or(0),
            out: flags
                .out
                .or(cfg.get("out").map(PathBuf::from))
                .ok_or_else(|| {
                    Error::InvalidConfig(
                        "no output path: pass --out or set `out` in the config".into(),
                    )
                })?,
            format: flags
                .format
                .or(cfg.get_parsed("format")?)
                .unwrap_or(OutputFormat::Csv),
            reference: flags
                .reference
                .or(cfg.get_parsed("reference")?)
                .unwrap_or(ReferenceKind::Separable),
            window_width: flags
                .window_width
                .or(cfg.get_parsed("window-width")?)
                .unwrap_or(0.02),
            gamma: flags.gamma.or(cfg.get_parsed("gamma")?),
            maxent: flags.maxent || cfg.get_parsed::<bool>("maxent")?.unwrap_or(false),
            eps_grid: flags
                .eps_grid
                .or(cfg.get_eps_grid()?)
                .unwrap_or_else(|| vec![0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3]),
            bins: flags.bins.or(cfg.get_parsed("bins")?).unwrap_or(50),
            grid_points: cfg.get_parsed("grid-points")?.unwrap_or(1001),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        crate::state::check_local_dim(self.dim)?;
        if let Some(gamma) = self.gamma {
            crate::state::check_unit_range("gamma", gamma)?;
            if self.maxent {
                return Err(Error::InvalidConfig(
                    "--gamma and --maxent are mutually exclusive".into(),
                ));
            }
            if self.dim != 2 {
                return Err(Error::InvalidConfig(format!(
                    "gamma distributions are defined for local dimension 2, got {}",
                    self.dim
                )));
            }
        }
        match self.command {
            Command::Scatter | Command::AvgFid => {
                if self.samples == 0 {
                    return Err(Error::InvalidConfig("samples must be ≥ 1".into()));
                }
                if !(self.window_width > 0.0 && self.window_width <= 1.0) {
                    return Err(Error::OutOfRange {
                        param: "window-width",
                        value: self.window_width,
                        lo: 0.0,
                        hi: 1.0,
                    });
                }
            }
            Command::PdfTable => {
                if self.grid_points < 2 {
                    return Err(Error::InvalidConfig("grid-points must be ≥ 2".into()));
                }
            }
            Command::Benchmark => {
                // Grid, bins, and samples are validated by BenchmarkConfig.
            }
        }
        Ok(())
    }

    /// The input ensemble selected by `--gamma`/`--maxent` (default max-ent).
    pub fn input_kind(&self) -> InputKind {
        match self.gamma {
            Some(gamma) => InputKind::Gamma(gamma),
            None => InputKind::MaxEnt,
        }
    }

    /// Build the output table without writing it.
    pub fn build_table(&self) -> Result<DataTable> {
        match self.command {
            Command::Scatter => self.build_scatter(),
            Command::AvgFid => self.build_avg(),
            Command::PdfTable => self.build_pdf_table(),
            Command::Benchmark => self.build_benchmark(),
        }
    }

    /// Build the table and write it atomically to `self.out`.
    pub fn run(&self) -> Result<RunReport> {
        let table = self.build_table()?;
        let text = match self.format {
            OutputFormat::Csv => table.to_csv(),
            OutputFormat::Json => table.to_json(),
        };
        atomic_write(&self.out, &text)?;
        Ok(RunReport {
            rows_written: table.rows.len(),
            out: self.out.clone(),
        })
    }

    fn common_metadata(&self) -> Vec<(String, String)> {
        vec![
            ("command".into(), self.command.name().into()),
            ("version".into(), env!("CARGO_PKG_VERSION").into()),
            ("seed".into(), self.seed.to_string()),
        ]
    }

    fn build_scatter(&self) -> Result<DataTable> {
        let pairs = self.entropy_fidelity_pairs()?;
        let mut metadata = self.common_metadata();
        metadata.push(("dim".into(), self.dim.to_string()));
        metadata.push(("samples".into(), self.samples.to_string()));
        metadata.push(("reference".into(), self.reference.name().into()));
        Ok(DataTable {
            metadata,
            columns: vec!["entropy", "fidelity"],
            rows: pairs
                .into_iter()
                .map(|(e, f)| vec![Cell::Float(e), Cell::Float(f)])
                .collect(),
        })
    }

    fn build_avg(&self) -> Result<DataTable> {
        let pairs = self.entropy_fidelity_pairs()?;
        let windows = windowed_mean_fidelity(&pairs, self.window_width);
        let mut metadata = self.common_metadata();
        metadata.push(("dim".into(), self.dim.to_string()));
        metadata.push(("samples".into(), self.samples.to_string()));
        metadata.push(("reference".into(), self.reference.name().into()));
        metadata.push(("window-width".into(), format!("{}", self.window_width)));
        metadata.push(("min-window-count".into(), MIN_WINDOW_COUNT.to_string()));
        Ok(DataTable {
            metadata,
            columns: vec!["window_center", "mean_fidelity", "sample_count", "valid"],
            rows: windows
                .into_iter()
                .map(|w| {
                    let valid = w.count >= MIN_WINDOW_COUNT;
                    vec![
                        Cell::Float(w.center),
                        match (valid, w.mean) {
                            (true, Some(m)) => Cell::Float(m),
                            _ => Cell::Null,
                        },
                        Cell::Int(w.count as u64),
                        Cell::Int(valid as u64),
                    ]
                })
                .collect(),
        })
    }

    fn build_pdf_table(&self) -> Result<DataTable> {
        let pdf = match self.input_kind() {
            InputKind::Gamma(gamma) => AnalyticPdf::sep_gamma(gamma)?,
            InputKind::MaxEnt => AnalyticPdf::sep_maxent(self.dim)?,
        };
        let mut metadata = self.common_metadata();
        match self.input_kind() {
            InputKind::Gamma(gamma) => {
                metadata.push(("kind".into(), "sep-gamma".into()));
                metadata.push(("gamma".into(), format!("{gamma}")));
            }
            InputKind::MaxEnt => {
                metadata.push(("kind".into(), "sep-maxent".into()));
                metadata.push(("dim".into(), self.dim.to_string()));
            }
        }
        metadata.push(("grid-points".into(), self.grid_points.to_string()));
        let n = self.grid_points;
        let rows = (0..n)
            .map(|i| {
                let f = i as f64 / (n - 1) as f64;
                Ok(vec![Cell::Float(f), Cell::Float(pdf.pdf(f)?)])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DataTable {
            metadata,
            columns: vec!["f", "pdf"],
            rows,
        })
    }

    fn build_benchmark(&self) -> Result<DataTable> {
        let cfg = BenchmarkConfig {
            local_dim: self.dim,
            input_kind: self.input_kind(),
            epsilon_grid: self.eps_grid.clone(),
            samples_per_point: self.samples,
            bin_count: self.bins,
            seed: self.seed,
        };
        let rows = benchmark_sweep(&cfg)?;
        let mut metadata = self.common_metadata();
        metadata.push(("dim".into(), self.dim.to_string()));
        match self.input_kind() {
            InputKind::Gamma(gamma) => metadata.push(("gamma".into(), format!("{gamma}"))),
            InputKind::MaxEnt => metadata.push(("input".into(), "max-entangled".into())),
        }
        metadata.push(("samples".into(), self.samples.to_string()));
        metadata.push(("bins".into(), self.bins.to_string()));
        metadata.push((
            "eps-grid".into(),
            self.eps_grid
                .iter()
                .map(|e| format!("{e}"))
                .collect::<Vec<_>>()
                .join(","),
        ));
        Ok(DataTable {
            metadata,
            columns: vec!["eps", "js", "n_samples", "bins"],
            rows: rows
                .into_iter()
                .map(|r| {
                    vec![
                        Cell::Float(r.eps),
                        Cell::Float(r.js),
                        Cell::Int(self.samples as u64),
                        Cell::Int(self.bins as u64),
                    ]
                })
                .collect(),
        })
    }

    /// The fixed reference state for `scatter`/`avg-fid`. The haar-random
    /// kind draws from a reserved substream of the run seed so it is fixed
    /// across all samples of the run.
    pub fn reference_state(&self) -> Result<PureState> {
        reference_state(self.dim, self.reference, self.seed)
    }

    /// `(entropy, fidelity-to-reference)` pairs for `samples` Haar states,
    /// chunked across substreams for reproducible parallelism.
    fn entropy_fidelity_pairs(&self) -> Result<Vec<(f64, f64)>> {
        let reference = self.reference_state()?;
        sample_entropy_fidelity_pairs(
            self.dim,
            self.samples,
            &reference,
            &RandomStream::new(self.seed, 0),
        )
    }
}

/// Outcome of a completed run.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub rows_written: usize,
    pub out: PathBuf,
}

/// Build the fixed reference state of the given kind.
pub fn reference_state(dim: usize, kind: ReferenceKind, seed: u64) -> Result<PureState> {
    match kind {
        ReferenceKind::Separable => PureState::zero_state(dim),
        ReferenceKind::MaxEntangled => PureState::max_entangled(dim),
        ReferenceKind::HaarRandom => {
            let mut rng = RandomStream::new(seed, 0).substream(REFERENCE_LABEL);
            sample_haar_state(dim, &mut rng)
        }
    }
}

/// Draw `(entanglement entropy, fidelity to reference)` for `n` Haar-random
/// states of local dimension `dim`, using substreams `0..⌈n/1024⌉` of
/// `stream`.
pub fn sample_entropy_fidelity_pairs(
    dim: usize,
    n: usize,
    reference: &PureState,
    stream: &RandomStream,
) -> Result<Vec<(f64, f64)>> {
    if reference.local_dim() != dim {
        return Err(Error::DimensionMismatch {
            left: reference.local_dim(),
            right: dim,
        });
    }
    let n_chunks = n.div_ceil(TRIALS_PER_STREAM);
    let chunks: Vec<Result<Vec<(f64, f64)>>> = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = stream.substream(chunk as u64);
            let count = TRIALS_PER_STREAM.min(n - chunk * TRIALS_PER_STREAM);
            (0..count)
                .map(|_| {
                    let psi = sample_haar_state(dim, &mut rng)?;
                    let e = entanglement_entropy(&psi).value();
                    let f = fidelity_pure_pure(reference, &psi)?;
                    Ok((e, f))
                })
                .collect()
        })
        .collect();
    let mut pairs = Vec::with_capacity(n);
    for chunk in chunks {
        pairs.extend(chunk?);
    }
    Ok(pairs)
}

/// Per-window fidelity statistics over entropy windows of the given width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowStats {
    pub center: f64,
    pub count: usize,
    /// Mean fidelity; `None` for empty windows.
    pub mean: Option<f64>,
    /// Standard error of the mean; `None` below two samples.
    pub stderr: Option<f64>,
}

/// Partition `(entropy, fidelity)` pairs into entropy windows of width
/// `width` covering `[0, 1]` and compute per-window mean fidelity.
pub fn windowed_mean_fidelity(pairs: &[(f64, f64)], width: f64) -> Vec<WindowStats> {
    let n_windows = ((1.0 / width) - 1e-9).ceil().max(1.0) as usize;
    let mut count = vec![0usize; n_windows];
    let mut sum = vec![0.0f64; n_windows];
    let mut sum_sq = vec![0.0f64; n_windows];
    for &(e, f) in pairs {
        let idx = ((e / width) as usize).min(n_windows - 1);
        count[idx] += 1;
        sum[idx] += f;
        sum_sq[idx] += f * f;
    }
    (0..n_windows)
        .map(|i| {
            let c = count[i];
            let mean = (c > 0).then(|| sum[i] / c as f64);
            let stderr = (c > 1).then(|| {
                let m = sum[i] / c as f64;
                let var = ((sum_sq[i] - c as f64 * m * m) / (c as f64 - 1.0)).max(0.0);
                (var / c as f64).sqrt()
            });
            WindowStats {
                center: (i as f64 + 0.5) * width,
                count: c,
                mean,
                stderr,
            }
        })
        .collect()
}

/// Three fixed local-unitary pairs for invariance checks: rotating the
/// reference by any of them must leave the fidelity distribution unchanged.
pub fn rotated_reference(reference: &PureState, pair_index: u64, seed: u64) -> Result<PureState> {
    let mut rng = RandomStream::new(seed, 1).substream(pair_index);
    let d = reference.local_dim();
    let va = sample_haar_unitary(d, &mut rng)?;
    let vb = sample_haar_unitary(d, &mut rng)?;
    Ok(apply_local_unitaries_unchecked(reference, &va, &vb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn base_spec(command: Command) -> ExperimentSpec {
        ExperimentSpec {
            command,
            dim: 2,
            samples: 2000,
            seed: 42,
            out: PathBuf::from("unused.csv"),
            format: OutputFormat::Csv,
            reference: ReferenceKind::Separable,
            window_width: 0.02,
            gamma: None,
            maxent: false,
            eps_grid: vec![0.0, 0.1],
            bins: 50,
            grid_points: 101,
        }
    }

    #[test]
    fn config_file_parsing() {
        let cfg = ConfigFile::parse(
            "# a comment\n\ndim = 3\nsamples= 500\n  seed =9\neps-grid = 0, 0.1 ,0.2\n",
        )
        .unwrap();
        assert_eq!(cfg.get("dim"), Some("3"));
        assert_eq!(cfg.get_parsed::<usize>("samples").unwrap(), Some(500));
        assert_eq!(cfg.get_eps_grid().unwrap(), Some(vec![0.0, 0.1, 0.2]));

        assert!(ConfigFile::parse("no equals sign").is_err());
        assert!(ConfigFile::parse("typo-key = 1").is_err());
        assert!(ConfigFile::parse("dim = lots")
            .unwrap()
            .get_parsed::<usize>("dim")
            .is_err());
    }

    #[test]
    fn resolution_precedence() {
        let cfg = ConfigFile::parse("dim = 3\nseed = 5\nout = from_config.csv\n").unwrap();
        let flags = SpecOverrides {
            dim: Some(4),
            ..Default::default()
        };
        let spec = ExperimentSpec::resolve(Command::Scatter, flags, Some(&cfg), Some(99)).unwrap();
        // Flag beats config; config beats env/default.
        assert_eq!(spec.dim, 4);
        assert_eq!(spec.seed, 5);
        assert_eq!(spec.out, PathBuf::from("from_config.csv"));
        assert_eq!(spec.samples, 50_000);
        assert_eq!(spec.format, OutputFormat::Csv);

        // Env seed applies when neither flag nor config give one.
        let cfg = ConfigFile::parse("out = x.csv\n").unwrap();
        let spec = ExperimentSpec::resolve(
            Command::Scatter,
            SpecOverrides::default(),
            Some(&cfg),
            Some(99),
        )
        .unwrap();
        assert_eq!(spec.seed, 99);

        // Missing output path is an error.
        assert!(
            ExperimentSpec::resolve(Command::Scatter, SpecOverrides::default(), None, None)
                .is_err()
        );
    }

    #[test]
    fn validation_rejects_incoherent_specs() {
        let mut spec = base_spec(Command::Benchmark);
        spec.gamma = Some(0.5);
        spec.maxent = true;
        assert!(spec.validate().is_err());

        let mut spec = base_spec(Command::Benchmark);
        spec.gamma = Some(0.5);
        spec.dim = 3;
        assert!(spec.validate().is_err());

        let mut spec = base_spec(Command::AvgFid);
        spec.window_width = 0.0;
        assert!(spec.validate().is_err());

        let mut spec = base_spec(Command::Scatter);
        spec.dim = 1;
        assert!(spec.validate().is_err());
    }

    #[test]
    fn scatter_table_shape_and_ranges() {
        let table = base_spec(Command::Scatter).build_table().unwrap();
        assert_eq!(table.columns, vec!["entropy", "fidelity"]);
        assert_eq!(table.rows.len(), 2000);
        for row in &table.rows {
            match (&row[0], &row[1]) {
                (Cell::Float(e), Cell::Float(f)) => {
                    assert!((0.0..=1.0).contains(e));
                    assert!((0.0..=1.0).contains(f));
                }
                other => panic!("unexpected cells {other:?}"),
            }
        }
        assert!(table.metadata.iter().any(|(k, v)| k == "seed" && v == "42"));
    }

    #[test]
    fn scatter_mean_fidelity_near_one_over_d_squared() {
        let mut spec = base_spec(Command::Scatter);
        spec.samples = 20_000;
        spec.reference = ReferenceKind::HaarRandom;
        let table = spec.build_table().unwrap();
        let mean: f64 = table
            .rows
            .iter()
            .map(|r| match r[1] {
                Cell::Float(f) => f,
                _ => unreachable!(),
            })
            .sum::<f64>()
            / table.rows.len() as f64;
        // σ(f) ≈ 0.19 at d = 2, so 3 standard errors ≈ 0.004.
        assert_abs_diff_eq!(mean, 0.25, epsilon = 0.005);
    }

    #[test]
    fn avg_windows_partition_the_samples() {
        let spec = base_spec(Command::AvgFid);
        let table = spec.build_table().unwrap();
        assert_eq!(table.rows.len(), 50);
        let total: u64 = table
            .rows
            .iter()
            .map(|r| match r[2] {
                Cell::Int(c) => c,
                _ => unreachable!(),
            })
            .sum();
        assert_eq!(total, spec.samples as u64);
        // Flagged windows have null means.
        for row in &table.rows {
            match (&row[1], &row[3]) {
                (Cell::Null, Cell::Int(0)) | (Cell::Float(_), Cell::Int(1)) => {}
                other => panic!("mean/valid mismatch {other:?}"),
            }
        }
    }

    #[test]
    fn windowed_stats_basics() {
        let pairs = vec![(0.01, 0.2), (0.015, 0.4), (0.99, 0.6), (1.0, 0.8)];
        let w = windowed_mean_fidelity(&pairs, 0.02);
        assert_eq!(w.len(), 50);
        assert_eq!(w[0].count, 2);
        assert_abs_diff_eq!(w[0].mean.unwrap(), 0.3, epsilon = 1e-12);
        // Entropy exactly 1.0 lands in the last window.
        assert_eq!(w[49].count, 2);
        assert_abs_diff_eq!(w[49].mean.unwrap(), 0.7, epsilon = 1e-12);
        assert_eq!(w[25].count, 0);
        assert_eq!(w[25].mean, None);
    }

    #[test]
    fn pdf_table_values_and_normalization() {
        let mut spec = base_spec(Command::PdfTable);
        spec.gamma = Some(0.5);
        spec.grid_points = 1001;
        let table = spec.build_table().unwrap();
        assert_eq!(table.rows.len(), 1001);

        let get = |row: &Vec<Cell>| match (&row[0], &row[1]) {
            (&Cell::Float(f), &Cell::Float(p)) => (f, p),
            _ => unreachable!(),
        };
        // f = 0.2 sits at row 200 of the unit grid.
        let (f, p) = get(&table.rows[200]);
        assert_abs_diff_eq!(f, 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(p, 2.0 * 3.0f64.ln(), epsilon = 1e-9);

        // Trapezoid integral of the emitted rows.
        let vals: Vec<(f64, f64)> = table.rows.iter().map(get).collect();
        let integral: f64 = vals
            .windows(2)
            .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1 + w[1].1))
            .sum();
        assert_abs_diff_eq!(integral, 1.0, epsilon = 1e-3);

        let mut spec = base_spec(Command::PdfTable);
        spec.dim = 3;
        spec.maxent = true;
        let table = spec.build_table().unwrap();
        let (_, p0) = get(&table.rows[0]);
        assert_abs_diff_eq!(p0, 6.0, epsilon = 1e-12);
    }

    #[test]
    fn benchmark_table_shape() {
        let mut spec = base_spec(Command::Benchmark);
        spec.samples = 2000;
        let table = spec.build_table().unwrap();
        assert_eq!(table.columns, vec!["eps", "js", "n_samples", "bins"]);
        assert_eq!(table.rows.len(), 2);
        match (&table.rows[0][0], &table.rows[0][1]) {
            (&Cell::Float(eps), &Cell::Float(js)) => {
                assert_eq!(eps, 0.0);
                assert!(js >= 0.0);
            }
            other => panic!("unexpected cells {other:?}"),
        }
    }

    #[test]
    fn tables_are_deterministic() {
        let spec = base_spec(Command::Scatter);
        assert_eq!(spec.build_table().unwrap(), spec.build_table().unwrap());
    }
}
