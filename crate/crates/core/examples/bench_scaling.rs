//! Time both generators at growing sizes and fit log-log slopes.
//!
//! cargo run --release --example bench_scaling

use wcgen::bench::{run_grid, scaling_fit, BenchConfig};
use wcgen::Method;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let methods = vec![Method::Separator, Method::TwoPair];
    let cfg = BenchConfig::new(
        vec![50, 100, 200, 400],
        vec![2.0],
        vec![0, 1, 2],
        methods.clone(),
    );
    let rows = run_grid(&cfg)?;

    println!(
        "{:<10} {:>5} {:>6} {:>12} {:>12}",
        "method", "n", "m", "query µs", "total ms"
    );
    for r in &rows {
        println!(
            "{:<10} {:>5} {:>6} {:>12.1} {:>12.1}",
            r.method,
            r.n,
            r.m,
            r.query_median_us,
            r.initial_ms + r.insertion_ms
        );
    }
    for method in methods {
        let fit = scaling_fit(&rows, method);
        println!(
            "{method}: query slope {:.2}, mutation slope {:.2}",
            fit.query_slope.unwrap_or(f64::NAN),
            fit.mutation_slope.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
