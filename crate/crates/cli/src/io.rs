//! Graph sources, file schemas, and report rendering.
//!
//! A graph source is either a generator expression (`K6`, `C9`, `P5`,
//! `K_1_2_2`) or a path to a JSON document:
//!
//! ```json
//! {
//!   "n": 5,
//!   "edges": [[0, 1], [1, 2]],
//!   "partition": [[0, 2], [1, 3], [4]],
//!   "blocks": [{"outer": [0, 1, 2, 3], "chords": [[0, 2]]}]
//! }
//! ```
//!
//! `partition` and `blocks` are optional; `blocks` supplies the outer cycle
//! and chords of each 2-connected block for the outerplanar labeler.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use pdg_core::graph::OuterplanarEmbedding;
use pdg_core::{Graph, Labeling, Partition};

/// On-disk graph document shared by every subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockDocument>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockDocument {
    pub outer: Vec<usize>,
    #[serde(default)]
    pub chords: Vec<(usize, usize)>,
}

/// A parsed graph source: the graph plus whatever extras the source knew.
#[derive(Debug, Clone)]
pub struct GraphSource {
    pub graph: Graph,
    pub partition: Option<Partition>,
    pub blocks: Option<Vec<OuterplanarEmbedding>>,
    pub family: Family,
}

/// The generator family, when the source was an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Multipartite(Vec<usize>),
    File,
}

/// Parses a generator expression or loads a JSON file.
pub fn parse_graph_source(text: &str) -> Result<GraphSource> {
    if let Some(parsed) = parse_generator(text)? {
        return Ok(parsed);
    }
    let path = Path::new(text);
    let raw = fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file or parse generator `{text}`"))?;
    let doc: GraphDocument = serde_json::from_str(&raw)
        .map_err(|e| anyhow!("{}: line {}: {}", path.display(), e.line(), e))?;
    let graph = Graph::new(doc.n, &doc.edges)
        .map_err(|e| anyhow!("{}: invalid graph: {e}", path.display()))?;
    let partition = doc.partition.map(Partition::new);
    let blocks = doc.blocks.map(|bs| {
        bs.into_iter()
            .map(|b| OuterplanarEmbedding {
                outer: b.outer,
                chords: b.chords,
            })
            .collect()
    });
    Ok(GraphSource {
        graph,
        partition,
        blocks,
        family: Family::File,
    })
}

fn parse_generator(text: &str) -> Result<Option<GraphSource>> {
    let mk = |graph, partition, family| {
        Ok(Some(GraphSource {
            graph,
            partition,
            blocks: None,
            family,
        }))
    };
    if let Some(sizes) = text.strip_prefix("K_") {
        let sizes: Vec<usize> = sizes
            .split('_')
            .map(|s| s.parse().map_err(|_| anyhow!("bad partite sizes in `{text}`")))
            .collect::<Result<_>>()?;
        let (g, parts) = Graph::complete_multipartite(&sizes)?;
        return mk(g, Some(parts), Family::Multipartite(sizes));
    }
    let (head, tail) = match text.split_at_checked(1) {
        Some(pair) => pair,
        None => return Ok(None),
    };
    let Ok(n) = tail.parse::<usize>() else {
        return Ok(None);
    };
    match head {
        "K" => mk(Graph::complete(n)?, None, Family::Complete(n)),
        "C" => {
            let g = Graph::cycle(n)?;
            let blocks = vec![OuterplanarEmbedding::cycle((0..n).collect())];
            Ok(Some(GraphSource {
                graph: g,
                partition: None,
                blocks: Some(blocks),
                family: Family::Cycle(n),
            }))
        }
        "P" => mk(Graph::path(n)?, None, Family::Path(n)),
        _ => Ok(None),
    }
}

/// Labels as stored on disk: string vertex keys, integer values.
#[derive(Debug, Serialize, Deserialize)]
pub struct LabelingDocument {
    pub labels: BTreeMap<String, i64>,
}

pub fn labeling_from_document(doc: &LabelingDocument) -> Result<Labeling> {
    let mut pairs = Vec::with_capacity(doc.labels.len());
    for (k, &v) in &doc.labels {
        let vertex: usize = k
            .parse()
            .map_err(|_| anyhow!("label key `{k}` is not a vertex index"))?;
        pairs.push((vertex, v));
    }
    Ok(Labeling::from_pairs(pairs))
}

pub fn labeling_to_document(l: &Labeling) -> LabelingDocument {
    LabelingDocument {
        labels: l.iter().map(|(v, x)| (v.to_string(), x)).collect(),
    }
}

/// Parses `--labels 0,4,3485,...` against vertex order `0..n`.
pub fn labeling_from_list(text: &str) -> Result<Labeling> {
    let values: Vec<i64> = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| anyhow!("`{s}` is not an integer label"))
        })
        .collect::<Result<_>>()?;
    if values.is_empty() {
        bail!("empty label list");
    }
    Ok(Labeling::from_values(&values))
}

/// Graphviz dump of a labeled graph; edge labels carry the gaps.
pub fn to_dot(g: &Graph, l: Option<&Labeling>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match l.and_then(|l| l.get(v)) {
            Some(label) => {
                let _ = writeln!(out, "  {v} [label=\"{v}: {label}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        match l {
            Some(l) => {
                let gap = l
                    .get(u)
                    .zip(l.get(v))
                    .map(|(a, b)| a.abs_diff(b))
                    .unwrap_or(0);
                let _ = writeln!(out, "  {u} -- {v} [label=\"{gap}\"];");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}
