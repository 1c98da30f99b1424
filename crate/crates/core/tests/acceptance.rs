//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wcgen::baseline::find_random_two_pair;
use wcgen::bench::{self, BenchConfig};
use wcgen::fixtures::{self, f4v, gadget};
use wcgen::inserter::{
    compute_scope, decide, forbidden_configuration, scoped_shortest_paths, try_insert,
};
use wcgen::layout::{layout_from_tree, trim_to_n};
use wcgen::oracle::count_p3_stats;
use wcgen::params::rng_from_seed;
use wcgen::tree::{grow_tree, TreeGraph};
use wcgen::{io, is_weakly_chordal, CaseLabel, GenParams, Graph, Method, Outcome, Witness};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

fn worked_example() -> Check {
    let started = Instant::now();
    let mut g = fixtures::f1();
    let first = try_insert(&mut g, 3, 4, true).map_err(|e| e.to_string())?;
    ensure(
        first.outcome == Outcome::Inserted,
        format!("(3,4): {:?}", first.outcome),
    )?;
    ensure(
        first.case_label == CaseLabel::Case1_1,
        format!("(3,4) case {}", first.case_label),
    )?;

    let scope = compute_scope(&g, 3, 6).map_err(|e| e.to_string())?;
    ensure(scope.common == set(&[5]), format!("I = {:?}", scope.common))?;
    ensure(
        scope.aux_nodes == set(&[0, 2, 3, 4, 6, 7]),
        format!("AuxNodes = {:?}", scope.aux_nodes),
    )?;
    let paths = scoped_shortest_paths(&scope);
    ensure(
        paths.paths == vec![vec![3, 4, 7, 6]],
        format!("paths = {:?}", paths.paths),
    )?;

    let second = try_insert(&mut g, 3, 6, true).map_err(|e| e.to_string())?;
    ensure(
        second.outcome == Outcome::Inserted,
        format!("(3,6): {:?}", second.outcome),
    )?;
    ensure(
        second.case_label == CaseLabel::Case1_2_1,
        format!("(3,6) case {}", second.case_label),
    )?;
    ensure(g.edge_count() == 12, format!("{} edges", g.edge_count()))?;
    ensure(
        is_weakly_chordal(&g) && common::brute_weakly_chordal(&g),
        "final graph has a hole",
    )?;
    let elapsed = started.elapsed();
    ensure(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("cases 1.1 then 1.2.1, 12 edges, {elapsed:?}"))
}

fn neighbors_of_neighbors_rejection() -> Check {
    use f4v::*;
    let g = fixtures::f4();
    let scope = compute_scope(&g, U, V).map_err(|e| e.to_string())?;
    ensure(
        scope.aux_nodes == set(&[U, V, B, C, D, E]),
        format!("AuxNodes = {:?}", scope.aux_nodes),
    )?;
    let verdict = decide(&g, U, V).map_err(|e| e.to_string())?;
    ensure(!verdict.inserted(), "pair was accepted")?;
    let Some(Witness::Path(path)) = &verdict.witness else {
        return Err(format!("no blocking path: {verdict:?}"));
    };
    let allowed = [vec![U, C, D, E, V], vec![U, C, D, B, V]];
    ensure(allowed.contains(path), format!("blocking path {path:?}"))?;
    Ok(format!("{:?} via {:?}", verdict.outcome, path))
}

fn forbidden_configuration_equivalence() -> Check {
    let started = Instant::now();
    let mut fired_on = Vec::new();
    for mask in 0u8..16 {
        let g = fixtures::two_p3_gadget(mask);
        let mut plus = g.clone();
        plus.add_edge(gadget::U, gadget::V).unwrap();
        let truth = common::brute_weakly_chordal(&g) && !common::brute_weakly_chordal(&plus);
        let scope = compute_scope(&g, gadget::U, gadget::V).map_err(|e| e.to_string())?;
        let fired = forbidden_configuration(&g, &scoped_shortest_paths(&scope))
            .map_err(|e| e.to_string())?
            .is_some();
        ensure(
            fired == truth,
            format!("mask {mask:04b}: fired {fired}, brute force {truth}"),
        )?;
        if fired {
            fired_on.push(format!("{mask:04b}"));
        }
    }
    let f2 = decide(&fixtures::f2(), gadget::U, gadget::V).map_err(|e| e.to_string())?;
    ensure(
        f2.outcome == Outcome::RejectedForbiddenConfig,
        format!("F2: {:?}", f2.outcome),
    )?;
    let f3 = decide(&fixtures::f3(), gadget::U, gadget::V).map_err(|e| e.to_string())?;
    ensure(
        f3.outcome == Outcome::Inserted,
        format!("F3: {:?}", f3.outcome),
    )?;
    let elapsed = started.elapsed();
    ensure(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("16/16 subsets agree, fires on {fired_on:?}"))
}

fn soundness_grid() -> Check {
    let started = Instant::now();
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("counterexamples");
    let mut runs = 0;
    let mut vetoes = 0;
    let mut files = Vec::new();
    for n in [8usize, 10, 12, 16, 20, 32] {
        let hi = (n * (n - 1) / 2).min(3 * n);
        let ms: BTreeSet<usize> = (0..4)
            .map(|i| n + ((hi - n) as f64 * i as f64 / 3.0).round() as usize)
            .collect();
        for &m in &ms {
            for seed in 0..25u64 {
                for method in [Method::Separator, Method::TwoPair] {
                    let params = GenParams::new(n, m, seed).with_method(method);
                    let (g, trace) = wcgen::generate_graph(&params)
                        .map_err(|e| format!("{method} n={n} m={m} seed={seed}: {e}"))?;
                    runs += 1;
                    let ok = if n <= 16 {
                        common::brute_weakly_chordal(&g)
                    } else {
                        is_weakly_chordal(&g)
                    };
                    ensure(
                        ok,
                        format!("{method} n={n} m={m} seed={seed} emitted a graph with a hole"),
                    )?;
                    ensure(
                        trace.early_return || g.edge_count() == m,
                        format!("{method} n={n} m={m} seed={seed}: {} edges", g.edge_count()),
                    )?;
                    ensure(
                        trace.counterexamples.len() == trace.oracle_vetoes,
                        "veto without counterexample",
                    )?;
                    vetoes += trace.oracle_vetoes;
                    for ce in &trace.counterexamples {
                        files.push(
                            io::write_counterexample(&out_dir, &params, ce)
                                .map_err(|e| e.to_string())?,
                        );
                    }
                }
            }
        }
    }
    let elapsed = started.elapsed();
    ensure(
        elapsed < Duration::from_secs(600),
        format!("took {elapsed:?}"),
    )?;
    let logged = if files.is_empty() {
        String::new()
    } else {
        format!(", counterexamples in {}", out_dir.display())
    };
    Ok(format!(
        "{runs} runs all weakly chordal, {vetoes} oracle vetoes{logged}, {elapsed:.1?}"
    ))
}

fn tree_with_nodes(k: usize) -> TreeGraph {
    (0u64..)
        .map(|seed| grow_tree(k, &mut rng_from_seed(seed)))
        .find(|t| t.node_count() == k)
        .expect("some seed yields exactly k nodes")
}

fn layout_structure() -> Check {
    let mut checked = 0;
    for k in 1..=100usize {
        let t = tree_with_nodes(k);
        let l = layout_from_tree(&t).map_err(|e| e.to_string())?;
        ensure(
            l.graph.vertex_count() == 2 * k + 2 && l.m_prime == 3 * k + 1,
            format!(
                "k={k}: {} vertices, {} edges",
                l.graph.vertex_count(),
                l.m_prime
            ),
        )?;
        let have = l.graph.vertex_count();
        if have <= 64 {
            ensure(
                is_weakly_chordal(&l.graph),
                format!("k={k} untrimmed layout has a hole"),
            )?;
            checked += 1;
        }
        let targets: Vec<usize> = if k <= 32 {
            (1..have.min(65)).collect()
        } else {
            vec![16, 32, 48, 64]
        };
        for n in targets {
            let trimmed = trim_to_n(l.clone(), n).map_err(|e| format!("k={k} n={n}: {e}"))?;
            ensure(
                trimmed.graph.is_connected(),
                format!("k={k} n={n} trimmed layout disconnected"),
            )?;
            ensure(
                is_weakly_chordal(&trimmed.graph),
                format!("k={k} n={n} trimmed layout has a hole"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "k = 1..100 exact counts, {checked} layouts weakly chordal"
    ))
}

fn two_pair_safety() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut complete = 0;
    for i in 0..500u64 {
        let n = rng.gen_range(2..=16);
        let density: f64 = rng.gen::<f64>().powi(2);
        let g = common::generated(n, density, i, i % 2 == 0);
        ensure(
            common::brute_weakly_chordal(&g),
            format!("instance {i} is not weakly chordal"),
        )?;
        match find_random_two_pair(&g, &mut rng) {
            None => {
                ensure(
                    g.is_complete(),
                    format!("instance {i}: no two-pair in a non-complete graph"),
                )?;
                complete += 1;
            }
            Some((u, v)) => {
                ensure(
                    common::brute_two_pair(&g, u, v),
                    format!("instance {i}: ({u},{v}) is not a two-pair"),
                )?;
                let mut h = g.clone();
                h.add_edge(u, v).unwrap();
                ensure(
                    common::brute_weakly_chordal(&h),
                    format!("instance {i}: joining ({u},{v}) made a hole"),
                )?;
            }
        }
    }
    for n in 1..=16 {
        ensure(
            find_random_two_pair(&Graph::complete(n), &mut rng).is_none(),
            format!("K{n} has a two-pair"),
        )?;
    }
    Ok(format!(
        "500/500 instances ({complete} complete), K1..K16 have none"
    ))
}

fn p3_path_bounds() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs: Vec<Graph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=20);
            let p: f64 = rng.gen_range(0.05..0.7);
            let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(p)).collect();
            common::graph_from_bits(n, &bits)
        })
        .collect();
    graphs.extend([
        fixtures::f1(),
        fixtures::f2(),
        fixtures::f3(),
        fixtures::f4(),
        fixtures::single_p3_with_detour(),
    ]);
    graphs.extend((0..16).map(fixtures::two_p3_gadget));
    let mut pairs = 0;
    for (i, g) in graphs.iter().enumerate() {
        for (u, v) in g.non_edges() {
            let stats = count_p3_stats(g, u, v).map_err(|e| e.to_string())?;
            let paths = common::brute_p3_paths(g, u, v);
            ensure(
                stats.path_count == paths.len(),
                format!("graph {i} ({u},{v}): path count"),
            )?;
            ensure(
                stats.path_count <= stats.l * stats.k_att,
                format!("graph {i} ({u},{v}): bound"),
            )?;
            ensure(
                stats.disjoint_pair_count == common::brute_disjoint_pairs(&paths),
                format!("graph {i} ({u},{v}): disjoint pairs"),
            )?;
            pairs += 1;
        }
    }
    Ok(format!("{} graphs, {pairs} pairs", graphs.len()))
}

fn scaling() -> Check {
    let cfg = BenchConfig::new(
        vec![50, 100, 200, 400],
        vec![2.0],
        vec![0, 1, 2],
        vec![Method::Separator],
    );
    let rows = bench::run_grid(&cfg).map_err(|e| e.to_string())?;
    ensure(
        rows.iter().all(|r| r.verified != Some(false)),
        "a benchmark graph failed verification",
    )?;
    let fit = bench::scaling_fit(&rows, Method::Separator);
    let q = fit.query_slope.ok_or("no query slope")?;
    let mu = fit.mutation_slope.ok_or("no mutation slope")?;
    ensure(q <= 3.5, format!("query slope {q:.2} > 3.5"))?;
    ensure(mu <= 0.5, format!("mutation slope {mu:.2} shows growth"))?;

    let started = Instant::now();
    let params = GenParams::new(200, bench::edges_for_density(200, 2.0), 1);
    wcgen::generate_graph(&params).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    ensure(
        elapsed < Duration::from_secs(60),
        format!("n=200 took {elapsed:?}"),
    )?;
    Ok(format!(
        "query slope {q:.2}, mutation slope {mu:.2}, n=200 in {elapsed:.2?}"
    ))
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.txt"));
        let status = Command::new(env!("CARGO_BIN_EXE_wcgen"))
            .args(["gen", "-n", "20", "-m", "40", "--seed", "7", "-o"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.code() == Some(0), format!("exit {status}"))?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], "outputs differ")?;
    Ok(format!("{} identical bytes", outputs[0].len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked example", worked_example),
        (
            "neighbors-of-neighbors rejection",
            neighbors_of_neighbors_rejection,
        ),
        (
            "forbidden configuration equivalence",
            forbidden_configuration_equivalence,
        ),
        ("soundness grid", soundness_grid),
        ("layout structure", layout_structure),
        ("two-pair safety", two_pair_safety),
        ("P3 path bounds", p3_path_bounds),
        ("scaling", scaling),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
