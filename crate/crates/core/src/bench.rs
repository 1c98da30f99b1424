//! Benchmark grid over both generators with CSV output.

use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::inserter::{GenError, Outcome, Timings};
use crate::oracle::is_weakly_chordal;
use crate::params::{GenParams, Method, DEFAULT_GATE_THRESHOLD};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("no methods given")]
    NoMethods,
    #[error("no vertex counts given")]
    NoSizes,
    #[error("no densities given")]
    NoDensities,
    #[error("no seeds given")]
    NoSeeds,
    #[error("density {0} must be a positive finite number")]
    Density(f64),
    #[error("vertex count must be positive")]
    Size,
    #[error("{method} n={n} m={m} seed={seed}: {source}")]
    Gen {
        method: Method,
        n: usize,
        m: usize,
        seed: u64,
        source: GenError,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_list: Vec<usize>,
    /// Edges per vertex; `m = round(density * n)` clamped to the valid range.
    pub densities: Vec<f64>,
    pub seeds: Vec<u64>,
    pub methods: Vec<Method>,
    /// Emitted graphs up to this size are checked with the recognizer.
    pub verify_up_to: usize,
}

impl BenchConfig {
    pub fn new(
        n_list: Vec<usize>,
        densities: Vec<f64>,
        seeds: Vec<u64>,
        methods: Vec<Method>,
    ) -> Self {
        BenchConfig {
            n_list,
            densities,
            seeds,
            methods,
            verify_up_to: DEFAULT_GATE_THRESHOLD,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.methods.is_empty() {
            return Err(BenchError::NoMethods);
        }
        if self.n_list.is_empty() {
            return Err(BenchError::NoSizes);
        }
        if self.densities.is_empty() {
            return Err(BenchError::NoDensities);
        }
        if self.seeds.is_empty() {
            return Err(BenchError::NoSeeds);
        }
        if self.n_list.contains(&0) {
            return Err(BenchError::Size);
        }
        if let Some(&d) = self
            .densities
            .iter()
            .find(|d| !(d.is_finite() && **d > 0.0))
        {
            return Err(BenchError::Density(d));
        }
        Ok(())
    }
}

/// Edge target for a density, clamped to `[n - 1, n(n-1)/2]`.
pub fn edges_for_density(n: usize, density: f64) -> usize {
    let raw = (density * n as f64).round() as usize;
    raw.clamp(n.saturating_sub(1), n * n.saturating_sub(1) / 2)
}

/// One generation run. Query times are decision times for the separator
/// method and two-pair search times for the baseline; in both cases the
/// outcome columns sum to `attempts`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub method: Method,
    pub n: usize,
    pub density: f64,
    pub m: usize,
    pub seed: u64,
    pub early_return: bool,
    pub initial_ms: f64,
    pub insertion_ms: f64,
    pub query_median_us: f64,
    pub query_p95_us: f64,
    pub mutation_median_ns: f64,
    pub attempts: usize,
    pub inserted: usize,
    pub existing_edge: usize,
    pub long_shortest_path: usize,
    pub forbidden_config: usize,
    pub alternate_longer_path: usize,
    pub oracle_veto: usize,
    pub fallback_two_pair: usize,
    pub anomalies: usize,
    /// Recognizer result, left empty above the verification size.
    pub verified: Option<bool>,
}

impl BenchRecord {
    pub fn outcome_total(&self) -> usize {
        self.inserted
            + self.existing_edge
            + self.long_shortest_path
            + self.forbidden_config
            + self.alternate_longer_path
            + self.oracle_veto
    }
}

/// Nearest-rank percentile of an unsorted sample; 0 for an empty one.
pub fn percentile(sample: &[u64], p: f64) -> f64 {
    if sample.is_empty() {
        return 0.0;
    }
    let mut s = sample.to_vec();
    s.sort_unstable();
    let rank = ((p / 100.0) * s.len() as f64).ceil().max(1.0) as usize;
    s[rank.min(s.len()) - 1] as f64
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn run_one(
    method: Method,
    n: usize,
    density: f64,
    seed: u64,
    verify_up_to: usize,
) -> Result<BenchRecord, BenchError> {
    let m = edges_for_density(n, density);
    let params = GenParams::new(n, m, seed).with_method(method);
    let mut timings = Timings::default();
    let (g, trace) =
        crate::generate_graph_timed(&params, &mut timings).map_err(|source| BenchError::Gen {
            method,
            n,
            m,
            seed,
            source,
        })?;
    let (attempts, inserted) = match method {
        Method::Separator => (trace.attempts, trace.count(Outcome::Inserted)),
        Method::TwoPair => (trace.attempts, trace.fallback_two_pair_insertions),
    };
    Ok(BenchRecord {
        method,
        n,
        density,
        m,
        seed,
        early_return: trace.early_return,
        initial_ms: ms(timings.initial),
        insertion_ms: ms(timings.insertion),
        query_median_us: percentile(&timings.query_nanos, 50.0) / 1e3,
        query_p95_us: percentile(&timings.query_nanos, 95.0) / 1e3,
        mutation_median_ns: percentile(&timings.mutation_nanos, 50.0),
        attempts,
        inserted,
        existing_edge: trace.count(Outcome::RejectedExistingEdge),
        long_shortest_path: trace.count(Outcome::RejectedLongShortestPath),
        forbidden_config: trace.count(Outcome::RejectedForbiddenConfig),
        alternate_longer_path: trace.count(Outcome::RejectedAlternateLongerPath),
        oracle_veto: trace.count(Outcome::RejectedOracleVeto),
        fallback_two_pair: trace.fallback_two_pair_insertions,
        anomalies: trace.anomalies,
        verified: (n <= verify_up_to).then(|| is_weakly_chordal(&g)),
    })
}

/// Runs every (method, n, density, seed) cell in that nesting order.
pub fn run_grid(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    cfg.validate()?;
    let mut rows = Vec::new();
    for &method in &cfg.methods {
        for &n in &cfg.n_list {
            for &density in &cfg.densities {
                for &seed in &cfg.seeds {
                    rows.push(run_one(method, n, density, seed, cfg.verify_up_to)?);
                }
            }
        }
    }
    Ok(rows)
}

/// Least-squares slope of `ln y` against `ln x`, skipping non-positive points.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingFit {
    pub method: Method,
    /// Per n, the median over runs of the per-run median query time (µs).
    pub query_points: Vec<(usize, f64)>,
    pub mutation_points: Vec<(usize, f64)>,
    pub query_slope: Option<f64>,
    pub mutation_slope: Option<f64>,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

/// Log–log fit of query and mutation time against n for one method.
/// Early-return runs have no insertion phase and are skipped.
pub fn scaling_fit(rows: &[BenchRecord], method: Method) -> ScalingFit {
    let mut sizes: Vec<usize> = rows
        .iter()
        .filter(|r| r.method == method)
        .map(|r| r.n)
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut query_points = Vec::new();
    let mut mutation_points = Vec::new();
    for n in sizes {
        let cell: Vec<&BenchRecord> = rows
            .iter()
            .filter(|r| r.method == method && r.n == n && !r.early_return && r.attempts > 0)
            .collect();
        if cell.is_empty() {
            continue;
        }
        query_points.push((n, median(cell.iter().map(|r| r.query_median_us).collect())));
        mutation_points.push((
            n,
            median(cell.iter().map(|r| r.mutation_median_ns).collect()),
        ));
    }
    let as_f = |pts: &[(usize, f64)]| pts.iter().map(|&(n, y)| (n as f64, y)).collect::<Vec<_>>();
    ScalingFit {
        method,
        query_slope: loglog_slope(&as_f(&query_points)),
        mutation_slope: loglog_slope(&as_f(&mutation_points)),
        query_points,
        mutation_points,
    }
}

pub fn write_csv<W: std::io::Write>(rows: &[BenchRecord], out: W) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_csv_file(rows: &[BenchRecord], path: &Path) -> Result<(), BenchError> {
    let file = std::fs::File::create(path).map_err(csv::Error::from)?;
    write_csv(rows, file)
}
