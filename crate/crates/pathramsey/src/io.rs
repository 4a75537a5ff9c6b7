//! Graph file formats.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` (0-based ids).
//! Blank lines and `#` comments are ignored. Bipartite edge lists use the
//! header `n1 n2 m`, with `u` in the left part and `v` in the right part.
//!
//! JSON: `{"n": 4, "edges": [[0, 1], ...]}`, or `{"n1": 2, "n2": 3, "edges":
//! ...}` for bipartite graphs.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use pathramsey_core::{BipartiteGraph, Graph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
}

impl Format {
    /// `.json` files are JSON; anything else is an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::EdgeList,
        }
    }

    fn sniff(text: &str) -> Format {
        if text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::EdgeList
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BipartiteJson {
    n1: usize,
    n2: usize,
    edges: Vec<(usize, usize)>,
}

/// Numbered, non-empty, comment-stripped lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_fields(line: usize, fields: &[&str], want: usize) -> Result<Vec<usize>> {
    if fields.len() != want {
        bail!(
            "line {line}: expected {want} integers, found {}",
            fields.len()
        );
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|e| anyhow!("line {line}: bad integer {f:?}: {e}"))
        })
        .collect()
}

/// Parses the header and edge lines; `header` is the number of header fields.
type EdgeList = (Vec<usize>, Vec<(usize, usize)>);

fn parse_edge_list(text: &str, header: usize) -> Result<EdgeList> {
    let mut lines = content_lines(text);
    let (hline, hfields) = lines.next().ok_or_else(|| anyhow!("empty edge list"))?;
    let head = parse_fields(hline, &hfields, header)?;
    let m = head[header - 1];
    let mut edges = Vec::with_capacity(m);
    for (line, fields) in lines {
        let uv = parse_fields(line, &fields, 2)?;
        edges.push((uv[0], uv[1]));
    }
    if edges.len() != m {
        bail!("header announces {m} edges, found {}", edges.len());
    }
    Ok((head, edges))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match Format::sniff(text) {
        Format::Json => {
            let g: GraphJson = serde_json::from_str(text).context("graph JSON")?;
            Ok(Graph::from_edges(g.n, &g.edges)?)
        }
        Format::EdgeList => {
            let (head, edges) = parse_edge_list(text, 2)?;
            Ok(Graph::from_edges(head[0], &edges)?)
        }
    }
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph> {
    match Format::sniff(text) {
        Format::Json => {
            let g: BipartiteJson = serde_json::from_str(text).context("bipartite graph JSON")?;
            Ok(BipartiteGraph::from_edges(g.n1, g.n2, &g.edges)?)
        }
        Format::EdgeList => {
            let (head, edges) = parse_edge_list(text, 3)?;
            Ok(BipartiteGraph::from_edges(head[0], head[1], &edges)?)
        }
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_bipartite(path: &Path) -> Result<BipartiteGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_bipartite(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn graph_to_string(g: &Graph, format: Format) -> String {
    let edges = g.edges();
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(&GraphJson { n: g.n(), edges }).expect("plain data");
            s.push('\n');
            s
        }
        Format::EdgeList => {
            let mut s = format!("{} {}\n", g.n(), edges.len());
            for (u, v) in edges {
                s.push_str(&format!("{u} {v}\n"));
            }
            s
        }
    }
}

pub fn bipartite_to_string(g: &BipartiteGraph, format: Format) -> String {
    let (n1, n2) = g.parts();
    match format {
        Format::Json => {
            let body = BipartiteJson {
                n1,
                n2,
                edges: g.edges().to_vec(),
            };
            let mut s = serde_json::to_string(&body).expect("plain data");
            s.push('\n');
            s
        }
        Format::EdgeList => {
            let mut s = format!("{n1} {n2} {}\n", g.edge_count());
            for (u, v) in g.edges() {
                s.push_str(&format!("{u} {v}\n"));
            }
            s
        }
    }
}
