//! Edge insertion that preserves weak chordality, and the main generation loop
//! that grows the initial layout to `m` edges.
//!
//! For a candidate non-edge `(u, v)` with common neighborhood `I`:
//!
//! * `I ≠ ∅`: search a `u`–`v` path in the graph induced on the auxiliary
//!   vertex pool (neighbors and neighbors of neighbors of `I`, plus `N(u)`
//!   and `N(v)`, minus `I`). No path: insert (case 1.1). Otherwise look at the
//!   shortest paths there: longer than 3 rejects; exactly one of length 3 is
//!   case 1.2.1; several are case 1.2.2.
//! * `I = ∅`: the same shortest-path analysis over the whole graph
//!   (cases 2.1 and 2.2).
//!
//! A single length-3 path is accepted when it has no outside neighbors, or
//! when no alternate chordless path of length ≥ 4 appears after deleting its
//! internal vertices (all of them, or one at a time). Multiple paths must
//! additionally avoid the forbidden two-path configuration.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::baseline;
use crate::graph::{Graph, GraphError, PathSet, VertexMap};
use crate::layout::{self, LayoutError};
use crate::oracle::{check_weakly_chordal, long_chordless_path, HoleWitness};
use crate::params::{rng_from_seed, GenParams, ParamError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InsertError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("expected shortest paths of length 3, found length {0}")]
    PathLength(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Insert(#[from] InsertError),
    #[error("graph with {edges} edges is not complete but has no two-pair")]
    NoTwoPair { edges: usize },
    #[error("emitted graph is not weakly chordal: {0}")]
    Invariant(HoleWitness),
}

/// Outcome of one insertion query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Inserted,
    RejectedExistingEdge,
    RejectedLongShortestPath,
    RejectedForbiddenConfig,
    RejectedAlternateLongerPath,
    RejectedOracleVeto,
}

impl Outcome {
    pub const ALL: [Outcome; 6] = [
        Outcome::Inserted,
        Outcome::RejectedExistingEdge,
        Outcome::RejectedLongShortestPath,
        Outcome::RejectedForbiddenConfig,
        Outcome::RejectedAlternateLongerPath,
        Outcome::RejectedOracleVeto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Outcome::Inserted => "inserted",
            Outcome::RejectedExistingEdge => "existing_edge",
            Outcome::RejectedLongShortestPath => "long_shortest_path",
            Outcome::RejectedForbiddenConfig => "forbidden_config",
            Outcome::RejectedAlternateLongerPath => "alternate_longer_path",
            Outcome::RejectedOracleVeto => "oracle_veto",
        }
    }
}

/// Which branch of the decision tree produced a verdict.
///
/// `Case1_2` and `Case2` label rejections made on path length alone,
/// before the single/multiple split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "1.1")]
    Case1_1,
    #[serde(rename = "1.2")]
    Case1_2,
    #[serde(rename = "1.2.1")]
    Case1_2_1,
    #[serde(rename = "1.2.2")]
    Case1_2_2,
    #[serde(rename = "2")]
    Case2,
    #[serde(rename = "2.1")]
    Case2_1,
    #[serde(rename = "2.2")]
    Case2_2,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl CaseLabel {
    /// Whether the label belongs to the non-empty common neighborhood family.
    pub fn common_nonempty(self) -> Option<bool> {
        match self {
            CaseLabel::Case1_1
            | CaseLabel::Case1_2
            | CaseLabel::Case1_2_1
            | CaseLabel::Case1_2_2 => Some(true),
            CaseLabel::Case2 | CaseLabel::Case2_1 | CaseLabel::Case2_2 => Some(false),
            CaseLabel::NotApplicable => None,
        }
    }

    /// Labels under which an insertion may happen.
    pub fn admits_insertion(self) -> bool {
        matches!(
            self,
            CaseLabel::Case1_1
                | CaseLabel::Case1_2_1
                | CaseLabel::Case1_2_2
                | CaseLabel::Case2_1
                | CaseLabel::Case2_2
        )
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::Case1_1 => "1.1",
            CaseLabel::Case1_2 => "1.2",
            CaseLabel::Case1_2_1 => "1.2.1",
            CaseLabel::Case1_2_2 => "1.2.2",
            CaseLabel::Case2 => "2",
            CaseLabel::Case2_1 => "2.1",
            CaseLabel::Case2_2 => "2.2",
            CaseLabel::NotApplicable => "n/a",
        })
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    /// A chordless path in original ids.
    Path(Vec<usize>),
    /// Two internally disjoint length-3 paths lacking both alternate cross edges.
    Forbidden(Vec<usize>, Vec<usize>),
    Hole(HoleWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub case_label: CaseLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Set when a branch the analysis rules out was taken anyway.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub anomaly: bool,
}

impl Verdict {
    fn new(outcome: Outcome, case_label: CaseLabel) -> Self {
        Verdict {
            outcome,
            case_label,
            witness: None,
            anomaly: false,
        }
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn inserted(&self) -> bool {
        self.outcome == Outcome::Inserted
    }
}

/// Common neighborhood of a candidate pair and the auxiliary graph searched
/// for `u`–`v` connections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionScope {
    pub pair: (usize, usize),
    pub common: BTreeSet<usize>,
    pub aux_nodes: BTreeSet<usize>,
    pub aux_graph: Graph,
    pub aux_map: VertexMap,
}

impl InsertionScope {
    fn aux_endpoints(&self) -> (usize, usize) {
        let (u, v) = self.pair;
        (
            self.aux_map.to_new(u).expect("u is in the auxiliary pool"),
            self.aux_map.to_new(v).expect("v is in the auxiliary pool"),
        )
    }
}

/// Builds the auxiliary pool
/// `⋃_{x∈I} (N(N(x) ∖ {u,v}) ∪ N(x)) ∪ N(u) ∪ N(v) ∪ {u,v} − I`,
/// or the whole vertex set when `I` is empty.
pub fn compute_scope(g: &Graph, u: usize, v: usize) -> Result<InsertionScope, InsertError> {
    g.check_pair(u, v)?;
    if g.has_edge(u, v) {
        return Err(GraphError::EdgePresent(u, v).into());
    }
    let common = g.common_neighbors(u, v)?;
    let aux_nodes: BTreeSet<usize> = if common.is_empty() {
        g.vertices().collect()
    } else {
        let mut pool = BTreeSet::new();
        for &x in &common {
            let nx = g.adj(x);
            let inner: Vec<usize> = nx.iter().copied().filter(|&y| y != u && y != v).collect();
            pool.extend(g.neighbors_of_set(&inner));
            pool.extend(nx.iter().copied());
        }
        pool.extend(g.adj(u).iter().copied());
        pool.extend(g.adj(v).iter().copied());
        pool.insert(u);
        pool.insert(v);
        pool.retain(|x| !common.contains(x));
        pool
    };
    let (aux_graph, aux_map) = g.induced(&aux_nodes)?;
    Ok(InsertionScope {
        pair: (u, v),
        common,
        aux_nodes,
        aux_graph,
        aux_map,
    })
}

/// True when `u` cannot reach `v` inside the auxiliary graph.
pub fn case1_separated(scope: &InsertionScope) -> bool {
    let (au, av) = scope.aux_endpoints();
    scope.aux_graph.bfs_masked(au, |_| true)[av].is_none()
}

/// All shortest `u`–`v` paths of the auxiliary graph, in original ids.
pub fn scoped_shortest_paths(scope: &InsertionScope) -> PathSet {
    scoped_shortest_paths_capped(scope, None)
}

pub fn scoped_shortest_paths_capped(scope: &InsertionScope, cap: Option<usize>) -> PathSet {
    let (au, av) = scope.aux_endpoints();
    let mut ps = scope
        .aux_graph
        .all_shortest_paths_capped(au, av, cap)
        .expect("endpoints are distinct and in range");
    ps.endpoints = scope.pair;
    for p in ps.paths.iter_mut() {
        *p = scope.aux_map.path_to_old(p);
    }
    ps
}

/// Two `u`–`v` paths, as vertex sequences.
pub type PathPair = (Vec<usize>, Vec<usize>);

/// Looks for two internally disjoint paths `u-a-b-v`, `u-c-d-v` whose only
/// cross edges are the parallel ones `(a,c)` and `(b,d)`. Inserting `(u, v)`
/// would then complete a prism, whose complement is a 6-hole.
///
/// With either alternate edge `(a,d)` or `(b,c)` present the pair is safe.
/// Missing parallel edges leave a 5- or 6-hole already in `g`, so such pairs
/// never occur in a weakly chordal input and are not reported.
pub fn forbidden_configuration(
    g: &Graph,
    all_sp: &PathSet,
) -> Result<Option<PathPair>, InsertError> {
    if let Some(p) = all_sp.paths.iter().find(|p| p.len() != 4) {
        return Err(InsertError::PathLength(p.len().saturating_sub(1)));
    }
    let paths = &all_sp.paths;
    for (i, p) in paths.iter().enumerate() {
        let (a, b) = (p[1], p[2]);
        for q in &paths[i + 1..] {
            let (c, d) = (q[1], q[2]);
            let internals: BTreeSet<usize> = [a, b, c, d].into_iter().collect();
            if internals.len() != 4 {
                continue;
            }
            let parallel = g.has_edge(a, c) && g.has_edge(b, d);
            let alternate = g.has_edge(a, d) || g.has_edge(b, c);
            if parallel && !alternate {
                return Ok(Some((p.clone(), q.clone())));
            }
        }
    }
    Ok(None)
}

/// Searches for a chordless `u`–`v` path of length at least 4 in the pool of
/// path vertices, their neighbors, and neighbors of neighbors (minus
/// `common`), with either all internal vertices of `all_sp` removed or one
/// internal vertex removed at a time.
///
/// Each variant is searched exhaustively with
/// [`long_chordless_path`](crate::oracle::long_chordless_path), so a detour
/// is found even when shorter `u`–`v` paths survive in the same variant.
pub fn alternate_longer_path(
    g: &Graph,
    all_sp: &PathSet,
    u: usize,
    v: usize,
    common: &BTreeSet<usize>,
) -> Option<Vec<usize>> {
    let internals = all_sp.internals();
    let n_int = g.neighbors_of_set(&internals);
    let mut pool = g.neighbors_of_set(&n_int);
    pool.extend(n_int);
    pool.extend(all_sp.vertices());
    pool.insert(u);
    pool.insert(v);
    pool.retain(|x| !common.contains(x));

    let mut in_pool = vec![false; g.vertex_count()];
    for &x in &pool {
        in_pool[x] = true;
    }
    let mut variants: Vec<BTreeSet<usize>> = vec![internals.clone()];
    variants.extend(internals.iter().map(|&x| BTreeSet::from([x])));
    for removed in variants {
        let found = long_chordless_path(g, u, v, |w| in_pool[w] && !removed.contains(&w));
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Runs the decision tree for `(u, v)` without touching the graph.
pub fn decide(g: &Graph, u: usize, v: usize) -> Result<Verdict, InsertError> {
    g.check_pair(u, v)?;
    if g.has_edge(u, v) {
        return Ok(Verdict::new(
            Outcome::RejectedExistingEdge,
            CaseLabel::NotApplicable,
        ));
    }
    let scope = compute_scope(g, u, v)?;
    let case1 = !scope.common.is_empty();
    let (au, av) = scope.aux_endpoints();
    let dist = scope.aux_graph.bfs_masked(av, |_| true);
    let Some(len) = dist[au] else {
        // Empty I with u, v in different components: nothing to close a cycle.
        let label = if case1 {
            CaseLabel::Case1_1
        } else {
            CaseLabel::Case2_1
        };
        return Ok(Verdict::new(Outcome::Inserted, label));
    };
    let (single, multiple, long) = if case1 {
        (
            CaseLabel::Case1_2_1,
            CaseLabel::Case1_2_2,
            CaseLabel::Case1_2,
        )
    } else {
        (CaseLabel::Case2_1, CaseLabel::Case2_2, CaseLabel::Case2)
    };
    if len > 3 {
        let ps = scoped_shortest_paths_capped(&scope, Some(1));
        let path = ps.paths.into_iter().next().expect("reachable");
        return Ok(
            Verdict::new(Outcome::RejectedLongShortestPath, long).with_witness(Witness::Path(path))
        );
    }
    if len < 3 {
        // I is excluded from the pool, so a length-2 connection cannot exist.
        let mut verdict = Verdict::new(Outcome::Inserted, single);
        verdict.anomaly = true;
        return Ok(verdict);
    }
    let all_sp = scoped_shortest_paths(&scope);
    if all_sp.len() == 1 {
        let sp = &all_sp.paths[0];
        let on_path: BTreeSet<usize> = sp.iter().copied().collect();
        let outside = g.neighbors_of_set(sp).iter().any(|x| !on_path.contains(x));
        if !outside {
            return Ok(Verdict::new(Outcome::Inserted, single));
        }
        return Ok(
            match alternate_longer_path(g, &all_sp, u, v, &scope.common) {
                Some(p) => Verdict::new(Outcome::RejectedAlternateLongerPath, single)
                    .with_witness(Witness::Path(p)),
                None => Verdict::new(Outcome::Inserted, single),
            },
        );
    }
    if let Some((p, q)) = forbidden_configuration(g, &all_sp)? {
        return Ok(Verdict::new(Outcome::RejectedForbiddenConfig, multiple)
            .with_witness(Witness::Forbidden(p, q)));
    }
    Ok(
        match alternate_longer_path(g, &all_sp, u, v, &scope.common) {
            Some(p) => Verdict::new(Outcome::RejectedAlternateLongerPath, multiple)
                .with_witness(Witness::Path(p)),
            None => Verdict::new(Outcome::Inserted, multiple),
        },
    )
}

/// Decides `(u, v)` and inserts the edge when accepted. With `gate` set, an
/// accepted insertion that leaves a hole is rolled back and reported as
/// [`Outcome::RejectedOracleVeto`].
pub fn try_insert(g: &mut Graph, u: usize, v: usize, gate: bool) -> Result<Verdict, InsertError> {
    let mut verdict = decide(g, u, v)?;
    if verdict.inserted() {
        g.insert_unchecked(u, v);
        if gate {
            apply_gate(g, u, v, &mut verdict);
        }
    }
    Ok(verdict)
}

fn apply_gate(g: &mut Graph, u: usize, v: usize, verdict: &mut Verdict) {
    if let Err(hole) = check_weakly_chordal(g) {
        g.remove_edge(u, v).expect("edge was just inserted");
        verdict.outcome = Outcome::RejectedOracleVeto;
        verdict.witness = Some(Witness::Hole(hole));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EventKind {
    Query(Verdict),
    /// Insertion of a two-pair found by the baseline search.
    TwoPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub u: usize,
    pub v: usize,
    pub kind: EventKind,
}

/// Graph state just before an insertion the oracle vetoed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub event: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub u: usize,
    pub v: usize,
    pub case_label: CaseLabel,
    pub hole: HoleWitness,
}

/// Full transcript of one seeded generation run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenTrace {
    pub params: GenParams,
    /// Edge count before the insertion phase.
    pub initial_edges: usize,
    pub early_return: bool,
    pub events: Vec<TraceEvent>,
    /// Insertion queries issued (two-pair fallbacks not included).
    pub attempts: usize,
    pub fallback_two_pair_insertions: usize,
    pub oracle_vetoes: usize,
    pub anomalies: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl GenTrace {
    pub(crate) fn new(params: GenParams) -> Self {
        GenTrace {
            params,
            initial_edges: 0,
            early_return: false,
            events: Vec::new(),
            attempts: 0,
            fallback_two_pair_insertions: 0,
            oracle_vetoes: 0,
            anomalies: 0,
            counterexamples: Vec::new(),
        }
    }

    /// Number of query events with the given outcome.
    pub fn count(&self, outcome: Outcome) -> usize {
        self.verdicts().filter(|v| v.outcome == outcome).count()
    }

    pub fn verdicts(&self) -> impl Iterator<Item = &Verdict> {
        self.events.iter().filter_map(|e| match &e.kind {
            EventKind::Query(v) => Some(v),
            EventKind::TwoPair => None,
        })
    }

    /// Edges added during the insertion phase.
    pub fn insertions(&self) -> usize {
        self.count(Outcome::Inserted) + self.fallback_two_pair_insertions
    }
}

/// Wall-clock measurements gathered alongside a run; kept out of the trace so
/// traces stay reproducible.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Timings {
    /// Tree growth, layout, and trimming (or the baseline's starting tree).
    pub initial: Duration,
    pub insertion: Duration,
    /// Per insertion query, the decision time.
    pub query_nanos: Vec<u64>,
    /// Per accepted insertion, the time spent adding the edge.
    pub mutation_nanos: Vec<u64>,
}

/// Consecutive rejections tolerated before a two-pair insertion is forced.
pub fn stall_limit(n: usize) -> usize {
    4 * n * n
}

/// Uniform random non-adjacent pair, `u < v`. The graph must not be complete.
pub(crate) fn random_non_edge<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> (usize, usize) {
    let n = g.vertex_count();
    loop {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            return (u.min(v), u.max(v));
        }
    }
}

/// Separator-based generation from `params.seed`.
pub fn generate(params: &GenParams) -> Result<(Graph, GenTrace), GenError> {
    let mut timings = Timings::default();
    generate_timed(params, &mut timings)
}

pub fn generate_timed(
    params: &GenParams,
    timings: &mut Timings,
) -> Result<(Graph, GenTrace), GenError> {
    params.validate()?;
    let mut rng = rng_from_seed(params.seed);
    let (n, m) = (params.n, params.m);
    let mut trace = GenTrace::new(*params);

    let started = Instant::now();
    let (layout, early) =
        layout::build_initial_layout_with(n, m, params.split_probability, &mut rng)?;
    timings.initial = started.elapsed();
    trace.initial_edges = layout.m_prime;
    trace.early_return = early;
    let mut g = layout.graph;
    if early {
        return Ok((g, trace));
    }

    let gate = params.gate.enabled_for(n);
    let limit = stall_limit(n);
    let mut stalled = 0usize;
    let started = Instant::now();
    while g.edge_count() < m {
        if stalled >= limit {
            let (u, v) =
                baseline::find_random_two_pair(&g, &mut rng).ok_or(GenError::NoTwoPair {
                    edges: g.edge_count(),
                })?;
            g.insert_unchecked(u, v);
            trace.fallback_two_pair_insertions += 1;
            trace.events.push(TraceEvent {
                u,
                v,
                kind: EventKind::TwoPair,
            });
            stalled = 0;
            continue;
        }
        let (u, v) = random_non_edge(&g, &mut rng);
        trace.attempts += 1;
        let t0 = Instant::now();
        let mut verdict = decide(&g, u, v)?;
        timings.query_nanos.push(t0.elapsed().as_nanos() as u64);
        if verdict.anomaly {
            trace.anomalies += 1;
        }
        if verdict.inserted() {
            let t1 = Instant::now();
            g.insert_unchecked(u, v);
            timings.mutation_nanos.push(t1.elapsed().as_nanos() as u64);
            if gate {
                apply_gate(&mut g, u, v, &mut verdict);
                if let Some(Witness::Hole(hole)) = &verdict.witness {
                    trace.oracle_vetoes += 1;
                    trace.counterexamples.push(Counterexample {
                        event: trace.events.len(),
                        n,
                        edges: g.edges().collect(),
                        u,
                        v,
                        case_label: verdict.case_label,
                        hole: hole.clone(),
                    });
                }
            }
        }
        stalled = if verdict.inserted() { 0 } else { stalled + 1 };
        trace.events.push(TraceEvent {
            u,
            v,
            kind: EventKind::Query(verdict),
        });
    }
    timings.insertion = started.elapsed();
    if gate {
        check_weakly_chordal(&g).map_err(GenError::Invariant)?;
    }
    Ok((g, trace))
}
