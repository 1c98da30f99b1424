//! The `wcgen` command line.
//!
//! Exit codes: 0 success, 1 invalid arguments or unreadable input, 2 the
//! verified graph is not weakly chordal, 3 generation stopped at the initial
//! layout because it already had enough edges, 4 internal invariant failure.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::bench::{self, BenchConfig};
use crate::inserter::GenError;
use crate::io::{self, Format, Metadata};
use crate::layout::LayoutError;
use crate::oracle::check_weakly_chordal;
use crate::params::{GateMode, GenParams, Method};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_WEAKLY_CHORDAL: i32 = 2;
pub const EXIT_EARLY_RETURN: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "wcgen",
    version,
    about = "Generate and check weakly chordal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random weakly chordal graph.
    Gen(GenArgs),
    /// Check whether a graph file is weakly chordal.
    Verify(VerifyArgs),
    /// Time both generators over a grid of sizes and densities.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Number of vertices.
    #[arg(short = 'n')]
    n: usize,
    /// Target number of edges.
    #[arg(short = 'm')]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// separator or two-pair.
    #[arg(long, default_value = "separator")]
    method: Method,
    /// edgelist, dot, or json; defaults to the output extension.
    #[arg(long)]
    format: Option<Format>,
    /// Output file; standard output when omitted.
    #[arg(short = 'o')]
    output: Option<PathBuf>,
    /// on, off, or auto (on up to 64 vertices).
    #[arg(long, default_value = "auto")]
    oracle_gate: GateMode,
    /// Write the generation trace as JSON.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    path: PathBuf,
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    /// Comma-separated edges-per-vertex ratios.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    density_list: Vec<f64>,
    /// Seed list `1,2,3` or half-open range `0..100`.
    #[arg(long, default_value = "0")]
    seeds: String,
    /// Comma-separated methods.
    #[arg(long, default_value = "separator,two-pair")]
    methods: String,
    /// CSV output; standard output when omitted.
    #[arg(long)]
    csv: Option<PathBuf>,
}

/// Parses `a..b` or a comma-separated list.
pub fn parse_seeds(s: &str) -> Result<Vec<u64>, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a
            .trim()
            .parse()
            .map_err(|_| format!("bad seed range `{s}`"))?;
        let b: u64 = b
            .trim()
            .parse()
            .map_err(|_| format!("bad seed range `{s}`"))?;
        return Ok((a..b).collect());
    }
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad seed `{t}`")))
        .collect()
}

pub fn parse_methods(s: &str) -> Result<Vec<Method>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => run_bench(a),
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(a: GenArgs) -> i32 {
    let params = GenParams::new(a.n, a.m, a.seed)
        .with_method(a.method)
        .with_gate(a.oracle_gate);
    let (g, trace) = match crate::generate_graph(&params) {
        Ok(r) => r,
        Err(GenError::Params(e) | GenError::Layout(LayoutError::Params(e))) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("internal error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let format = a
        .format
        .or_else(|| a.output.as_deref().map(Format::from_path))
        .unwrap_or(Format::Edgelist);
    let text = io::serialize(&g, format, Some(&Metadata::from_trace(&trace)));
    if let Err(e) = write_out(a.output.as_deref(), &text) {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if let Some(path) = &a.trace {
        let json = serde_json::to_string_pretty(&trace).expect("trace serializes") + "\n";
        if let Err(e) = write_out(Some(path), &json) {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    }
    if trace.oracle_vetoes > 0 {
        eprintln!(
            "warning: the recognizer vetoed {} accepted insertion(s)",
            trace.oracle_vetoes
        );
    }
    if trace.early_return {
        eprintln!(
            "warning: the initial layout already has {} edges (requested {}); returning the layout",
            g.edge_count(),
            a.m
        );
        return EXIT_EARLY_RETURN;
    }
    EXIT_OK
}

fn verify(a: VerifyArgs) -> i32 {
    let g = match io::read_graph(&a.path, a.format) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match check_weakly_chordal(&g) {
        Ok(()) => {
            println!(
                "weakly chordal: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            );
            EXIT_OK
        }
        Err(hole) => {
            println!("not weakly chordal: {hole}");
            EXIT_NOT_WEAKLY_CHORDAL
        }
    }
}

fn run_bench(a: BenchArgs) -> i32 {
    let (seeds, methods) = match (parse_seeds(&a.seeds), parse_methods(&a.methods)) {
        (Ok(s), Ok(m)) => (s, m),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let cfg = BenchConfig::new(a.n_list, a.density_list, seeds, methods);
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    let rows = match bench::run_grid(&cfg) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("internal error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let written = match &a.csv {
        Some(path) => bench::write_csv_file(&rows, path),
        None => bench::write_csv(&rows, std::io::stdout()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    for &method in &cfg.methods {
        let fit = bench::scaling_fit(&rows, method);
        let show = |s: Option<f64>| s.map_or_else(|| "n/a".to_string(), |s| format!("{s:.2}"));
        eprintln!(
            "{method}: log-log slope of median query time {}, of mutation time {}",
            show(fit.query_slope),
            show(fit.mutation_slope)
        );
    }
    if rows.iter().any(|r| r.verified == Some(false)) {
        eprintln!("internal error: an emitted graph failed verification");
        return EXIT_INTERNAL;
    }
    EXIT_OK
}
