//! Edge list, DOT, and JSON graph files.
//!
//! Edge list: a header `n m`, then one `u v` line per edge with `u < v`,
//! sorted, 0-based, LF-terminated. Output is byte-stable for a given graph.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::inserter::{Counterexample, GenTrace};
use crate::params::{GenParams, Method, RNG_ALGORITHM};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Edgelist,
    Dot,
    Json,
}

impl Format {
    /// Guesses from the extension; anything unrecognized is an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dot" | "gv") => Format::Dot,
            Some("json") => Format::Json,
            _ => Format::Edgelist,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(Format::Edgelist),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

/// Where in the input a problem was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    /// 0-based position in a JSON `edges` array.
    Edge(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Edge(i) => write!(f, "edge #{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{at}: malformed header: {detail}")]
    MalformedHeader { at: Location, detail: String },
    #[error("{at}: malformed edge: {detail}")]
    MalformedEdge { at: Location, detail: String },
    #[error("{at}: duplicate edge ({u}, {v})")]
    DuplicateEdge { at: Location, u: usize, v: usize },
    #[error("{at}: vertex {vertex} out of range for {n} vertices")]
    OutOfRange {
        at: Location,
        vertex: usize,
        n: usize,
    },
    #[error("{at}: self-loop on vertex {vertex}")]
    SelfLoop { at: Location, vertex: usize },
    #[error("header declares {declared} edges but {found} are listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
}

fn add_checked(g: &mut Graph, u: usize, v: usize, at: Location) -> Result<(), ParseError> {
    let n = g.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(ParseError::OutOfRange { at, vertex: x, n });
        }
    }
    if u == v {
        return Err(ParseError::SelfLoop { at, vertex: u });
    }
    if g.has_edge(u, v) {
        return Err(ParseError::DuplicateEdge {
            at,
            u: u.min(v),
            v: u.max(v),
        });
    }
    g.insert_unchecked(u, v);
    Ok(())
}

pub fn serialize_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Parses an edge list. Blank lines are ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((hline, header)) = lines.next() else {
        return Err(ParseError::MalformedHeader {
            at: Location::Line(1),
            detail: "empty input".into(),
        });
    };
    let (n, declared) = parse_pair(header).ok_or_else(|| ParseError::MalformedHeader {
        at: Location::Line(hline),
        detail: format!("expected `n m`, got `{header}`"),
    })?;
    let mut g = Graph::new(n);
    let mut found = 0;
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line).ok_or_else(|| ParseError::MalformedEdge {
            at: Location::Line(lineno),
            detail: format!("expected `u v`, got `{line}`"),
        })?;
        add_checked(&mut g, u, v, Location::Line(lineno))?;
        found += 1;
    }
    if found != declared {
        return Err(ParseError::EdgeCount { declared, found });
    }
    Ok(g)
}

pub fn serialize_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT subset written by [`serialize_dot`]: node statements `k;`
/// and edge statements `a -- b;` inside one `graph { ... }` block. The vertex
/// count is one past the largest declared node.
pub fn parse_dot(text: &str) -> Result<Graph, ParseError> {
    let body: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let Some(&(first, open)) = body.first() else {
        return Err(ParseError::MalformedHeader {
            at: Location::Line(1),
            detail: "empty input".into(),
        });
    };
    if !(open.starts_with("graph") && open.ends_with('{')) {
        return Err(ParseError::MalformedHeader {
            at: Location::Line(first),
            detail: format!("expected `graph <name> {{`, got `{open}`"),
        });
    }
    let &(last, close) = body.last().expect("non-empty");
    if body.len() < 2 || close != "}" {
        return Err(ParseError::MalformedEdge {
            at: Location::Line(last),
            detail: "missing closing `}`".into(),
        });
    }
    let stmts = &body[1..body.len() - 1];
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for &(lineno, stmt) in stmts {
        let at = Location::Line(lineno);
        let bad = || ParseError::MalformedEdge {
            at,
            detail: format!("unrecognized statement `{stmt}`"),
        };
        let stmt = stmt.strip_suffix(';').ok_or_else(bad)?.trim();
        if let Some((a, b)) = stmt.split_once("--") {
            let a = a.trim().parse::<usize>().map_err(|_| bad())?;
            let b = b.trim().parse::<usize>().map_err(|_| bad())?;
            edges.push((at, a, b));
        } else {
            nodes.push(stmt.parse::<usize>().map_err(|_| bad())?);
        }
    }
    let n = nodes.iter().max().map_or(0, |m| m + 1);
    let mut g = Graph::new(n);
    for (at, a, b) in edges {
        add_checked(&mut g, a, b, at)?;
    }
    Ok(g)
}

/// Provenance block stored in JSON output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub seed: u64,
    pub method: Method,
    pub rng: String,
    pub m_target: usize,
    pub initial_edges: usize,
    pub early_return: bool,
    pub attempts: usize,
    pub fallback_two_pair_insertions: usize,
    pub oracle_vetoes: usize,
}

impl Metadata {
    pub fn from_trace(trace: &GenTrace) -> Self {
        Metadata {
            seed: trace.params.seed,
            method: trace.params.method,
            rng: RNG_ALGORITHM.to_string(),
            m_target: trace.params.m,
            initial_edges: trace.initial_edges,
            early_return: trace.early_return,
            attempts: trace.attempts,
            fallback_two_pair_insertions: trace.fallback_two_pair_insertions,
            oracle_vetoes: trace.oracle_vetoes,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<Metadata>,
}

pub fn serialize_json(g: &Graph, metadata: Option<&Metadata>) -> String {
    let doc = JsonGraph {
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        metadata: metadata.cloned(),
    };
    let mut s = serde_json::to_string(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<(Graph, Option<Metadata>), ParseError> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let mut g = Graph::new(doc.n);
    for (i, [u, v]) in doc.edges.into_iter().enumerate() {
        add_checked(&mut g, u, v, Location::Edge(i))?;
    }
    Ok((g, doc.metadata))
}

pub fn serialize(g: &Graph, format: Format, metadata: Option<&Metadata>) -> String {
    match format {
        Format::Edgelist => serialize_edgelist(g),
        Format::Dot => serialize_dot(g),
        Format::Json => serialize_json(g, metadata),
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dot => parse_dot(text),
        Format::Json => parse_json(text).map(|(g, _)| g),
    }
}

/// Reads a graph file, taking the format from `format` or the extension.
pub fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph, ReadError> {
    let text = fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text, format.unwrap_or_else(|| Format::from_path(path))).map_err(|source| {
        ReadError::Parse {
            path: path.to_path_buf(),
            source,
        }
    })
}

#[derive(Serialize)]
struct CounterexampleFile<'a> {
    params: &'a GenParams,
    rng: &'a str,
    counterexample: &'a Counterexample,
}

/// Writes one vetoed insertion as JSON under `dir`; the params and seed
/// reproduce the run, and the edge list reproduces the graph directly.
pub fn write_counterexample(
    dir: &Path,
    params: &GenParams,
    ce: &Counterexample,
) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let name = format!(
        "veto-{}-n{}-m{}-seed{}-event{}.json",
        params.method, params.n, params.m, params.seed, ce.event
    );
    let path = dir.join(name);
    let doc = CounterexampleFile {
        params,
        rng: RNG_ALGORITHM,
        counterexample: ce,
    };
    let text = serde_json::to_string_pretty(&doc).map_err(std::io::Error::other)?;
    fs::write(&path, text + "\n")?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k2_edgelist() {
        assert_eq!(serialize_edgelist(&Graph::path(2)), "2 1\n0 1\n");
    }

    #[test]
    fn f1_round_trips() {
        let g = fixtures::f1();
        let text = serialize_edgelist(&g);
        assert!(text.starts_with("8 10\n0 3\n0 4\n"));
        assert_eq!(text.lines().count(), 11);
        assert_eq!(parse_edgelist(&text).unwrap(), g);
        assert_eq!(parse_dot(&serialize_dot(&g)).unwrap(), g);
        assert_eq!(parse_json(&serialize_json(&g, None)).unwrap().0, g);
    }

    #[test]
    fn edgelist_errors_are_distinct() {
        assert_eq!(
            parse_edgelist("3 1\n0 3\n"),
            Err(ParseError::OutOfRange {
                at: Location::Line(2),
                vertex: 3,
                n: 3
            })
        );
        assert!(matches!(
            parse_edgelist("x\n"),
            Err(ParseError::MalformedHeader { .. })
        ));
        assert!(matches!(
            parse_edgelist(""),
            Err(ParseError::MalformedHeader { .. })
        ));
        assert_eq!(
            parse_edgelist("3 2\n0 1\n1 0\n"),
            Err(ParseError::DuplicateEdge {
                at: Location::Line(3),
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            parse_edgelist("3 1\n2 2\n"),
            Err(ParseError::SelfLoop {
                at: Location::Line(2),
                vertex: 2
            })
        );
        assert!(matches!(
            parse_edgelist("3 1\n0 1 2\n"),
            Err(ParseError::MalformedEdge { .. })
        ));
        assert_eq!(
            parse_edgelist("3 2\n0 1\n"),
            Err(ParseError::EdgeCount {
                declared: 2,
                found: 1
            })
        );
        let msg = parse_edgelist("3 1\n0 3\n").unwrap_err().to_string();
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn dot_and_json_errors() {
        assert!(parse_dot("digraph {\n}\n").is_err());
        assert!(matches!(
            parse_dot("graph G {\n  0;\n  1;\n  0 -- 2;\n}\n"),
            Err(ParseError::OutOfRange {
                at: Location::Line(4),
                ..
            })
        ));
        assert!(matches!(
            parse_json("{\"n\": 2, \"edges\": [[0, 0]]}"),
            Err(ParseError::SelfLoop { .. })
        ));
        assert!(matches!(parse_json("nope"), Err(ParseError::Json(_))));
    }

    #[test]
    fn dot_keeps_isolated_vertices() {
        let g = Graph::new(3);
        assert_eq!(parse_dot(&serialize_dot(&g)).unwrap(), g);
    }

    #[test]
    fn json_metadata_survives() {
        let (g, trace) = crate::inserter::generate(&GenParams::new(8, 12, 4)).unwrap();
        let meta = Metadata::from_trace(&trace);
        let (back, m) = parse_json(&serialize_json(&g, Some(&meta))).unwrap();
        assert_eq!(back, g);
        assert_eq!(m, Some(meta));
    }
}
