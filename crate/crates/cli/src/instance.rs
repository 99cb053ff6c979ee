//! The canonical instance file format.
//!
//! An instance file records a labeled union graph together with the full
//! construction parameters that regenerate it. Serialization is canonical:
//! edges sorted lexicographically with `u < v`, labels sorted ascending and
//! 1-based, and stable field order, so equal instances produce identical
//! bytes (up to the optional creation timestamp in `meta`).

use std::path::Path;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use comparability_core::{
    GridConstruction, GridParams, LabeledUnionGraph, RankedConstruction, RankedParams,
    SimpleGraph,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Grid,
    Ranked,
    Generic,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::Grid => write!(f, "grid"),
            Kind::Ranked => write!(f, "ranked"),
            Kind::Generic => write!(f, "generic"),
        }
    }
}

/// One edge record: `[u, v, [labels]]` with `u < v` and 1-based sorted
/// labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRec(pub u32, pub u32, pub Vec<u8>);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Construction {
    Grid {
        #[serde(flatten)]
        params: GridParams,
        realized_n: usize,
    },
    Ranked {
        #[serde(flatten)]
        params: RankedParams,
        realized_n: usize,
        expander_sample_attempts: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    /// RFC 3339 creation time; omitted under --deterministic and excluded
    /// from determinism comparisons.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub created: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub format_version: u32,
    pub kind: Kind,
    pub n: usize,
    pub r: usize,
    pub edges: Vec<EdgeRec>,
    pub construction: Option<Construction>,
    pub meta: Meta,
}

impl InstanceFile {
    pub fn from_union_graph(
        kind: Kind,
        graph: &LabeledUnionGraph,
        construction: Option<Construction>,
        deterministic: bool,
    ) -> Self {
        let edges = graph
            .labeled_edges()
            .iter()
            .map(|&(u, v, mask)| {
                let labels = (0..32u8).filter(|s| mask >> s & 1 == 1).map(|s| s + 1).collect();
                EdgeRec(u, v, labels)
            })
            .collect();
        InstanceFile {
            format_version: FORMAT_VERSION,
            kind,
            n: graph.n(),
            r: graph.order_count(),
            edges,
            construction,
            meta: Meta {
                tool: "comparability".to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                created: (!deterministic).then(|| chrono::Utc::now().to_rfc3339()),
            },
        }
    }

    /// Canonical bytes: fixed field order, one edge per line, compact label
    /// lists. Parsing and re-serializing any equal instance reproduces the
    /// same bytes.
    pub fn canonical_json(&self) -> anyhow::Result<String> {
        let mut s = String::new();
        s.push_str("{\n");
        s.push_str(&format!("  \"format_version\": {},\n", self.format_version));
        s.push_str(&format!("  \"kind\": {},\n", serde_json::to_string(&self.kind)?));
        s.push_str(&format!("  \"n\": {},\n", self.n));
        s.push_str(&format!("  \"r\": {},\n", self.r));
        if self.edges.is_empty() {
            s.push_str("  \"edges\": [],\n");
        } else {
            s.push_str("  \"edges\": [\n");
            for (i, EdgeRec(u, v, labels)) in self.edges.iter().enumerate() {
                let sep = if i + 1 < self.edges.len() { "," } else { "" };
                s.push_str(&format!(
                    "    [{u}, {v}, {}]{sep}\n",
                    serde_json::to_string(labels)?
                ));
            }
            s.push_str("  ],\n");
        }
        s.push_str(&format!(
            "  \"construction\": {},\n",
            serde_json::to_string(&self.construction)?
        ));
        s.push_str(&format!("  \"meta\": {}\n", serde_json::to_string(&self.meta)?));
        s.push_str("}\n");
        Ok(s)
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        std::fs::write(path, self.canonical_json()?)
            .with_context(|| format!("writing {}", path.display()))
    }

    /// Parses the file without semantic validation; any failure here means
    /// the file is malformed (exit 2 territory).
    pub fn load_schema(path: &Path) -> anyhow::Result<InstanceFile> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let file: InstanceFile =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if file.format_version != FORMAT_VERSION {
            bail!(
                "unsupported format version {} (expected {FORMAT_VERSION})",
                file.format_version
            );
        }
        Ok(file)
    }

    /// Parses and fully validates; used by commands that must trust the
    /// content.
    pub fn load(path: &Path) -> anyhow::Result<InstanceFile> {
        let file = Self::load_schema(path)?;
        let violations = file.structural_violations();
        if !violations.is_empty() {
            bail!("invalid instance file: {}", violations.join("; "));
        }
        Ok(file)
    }

    /// Named invariant violations of the file's own structure (not of the
    /// construction it claims to encode).
    pub fn structural_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.r > 32 {
            out.push("format.order-count: r exceeds 32".to_string());
        }
        let mut prev: Option<(u32, u32)> = None;
        for EdgeRec(u, v, labels) in &self.edges {
            if u >= v {
                out.push(format!("format.vertex-order: edge ({u}, {v}) must have u < v"));
                break;
            }
            if *v as usize >= self.n {
                out.push(format!("format.vertex-range: edge ({u}, {v}) exceeds n = {}", self.n));
                break;
            }
            if let Some(p) = prev {
                if p >= (*u, *v) {
                    out.push(format!(
                        "format.edge-sorting: edge ({u}, {v}) out of order after {p:?}"
                    ));
                    break;
                }
            }
            prev = Some((*u, *v));
            if labels.is_empty() {
                out.push(format!("format.labels-nonempty: edge ({u}, {v})"));
                break;
            }
            if labels.windows(2).any(|w| w[0] >= w[1]) {
                out.push(format!("format.labels-sorted: edge ({u}, {v})"));
                break;
            }
            if labels.iter().any(|&s| s == 0 || s as usize > self.r) {
                out.push(format!(
                    "format.labels-range: edge ({u}, {v}) has a label outside 1..={}",
                    self.r
                ));
                break;
            }
        }
        match (&self.kind, &self.construction) {
            (Kind::Grid, Some(Construction::Grid { params, realized_n })) => {
                if params.vertex_count() != self.n || *realized_n != self.n {
                    out.push("construction.size: parameters disagree with n".to_string());
                }
                if self.r != 2 {
                    out.push("construction.order-count: grid instances have r = 2".to_string());
                }
            }
            (Kind::Ranked, Some(Construction::Ranked { params, realized_n, .. })) => {
                if params.vertex_count() != self.n || *realized_n != self.n {
                    out.push("construction.size: parameters disagree with n".to_string());
                }
                if self.r != params.dims {
                    out.push("construction.order-count: r disagrees with parameters".to_string());
                }
            }
            (Kind::Generic, None) => {}
            _ => out.push("construction.kind: record does not match kind".to_string()),
        }
        out
    }

    /// The union graph encoded by the edge list.
    pub fn to_union_graph(&self) -> anyhow::Result<LabeledUnionGraph> {
        let edges: Vec<(u32, u32, u32)> = self
            .edges
            .iter()
            .map(|EdgeRec(u, v, labels)| {
                let mask = labels.iter().fold(0u32, |m, &s| m | 1 << (s - 1));
                (*u, *v, mask)
            })
            .collect();
        Ok(LabeledUnionGraph::from_labeled_edges(self.n, self.r, edges)?)
    }

    pub fn to_simple_graph(&self) -> anyhow::Result<SimpleGraph> {
        let edges: Vec<(u32, u32)> = self.edges.iter().map(|EdgeRec(u, v, _)| (*u, *v)).collect();
        Ok(SimpleGraph::from_edges(self.n, &edges)?)
    }

    /// Rebuilds the construction this file claims to encode and returns its
    /// union graph.
    pub fn rebuild_union_graph(&self) -> anyhow::Result<Option<LabeledUnionGraph>> {
        match &self.construction {
            Some(Construction::Grid { params, .. }) => {
                Ok(Some(GridConstruction::build(*params).union_graph()))
            }
            Some(Construction::Ranked { params, .. }) => {
                Ok(Some(RankedConstruction::build(*params)?.union_graph()))
            }
            None => Ok(None),
        }
    }
}

pub fn grid_instance(params: GridParams, deterministic: bool) -> InstanceFile {
    let gc = GridConstruction::build(params);
    let graph = gc.union_graph();
    InstanceFile::from_union_graph(
        Kind::Grid,
        &graph,
        Some(Construction::Grid {
            params,
            realized_n: params.vertex_count(),
        }),
        deterministic,
    )
}

pub fn ranked_instance(params: RankedParams, deterministic: bool) -> anyhow::Result<InstanceFile> {
    let rc = RankedConstruction::build(params)?;
    let graph = rc.union_graph();
    Ok(InstanceFile::from_union_graph(
        Kind::Ranked,
        &graph,
        Some(Construction::Ranked {
            params,
            realized_n: params.vertex_count(),
            expander_sample_attempts: rc.sample_attempts(),
        }),
        deterministic,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_the_instance_and_its_bytes() {
        let file = grid_instance(GridParams::new(2, 3, 13).unwrap(), true);
        let text = file.canonical_json().unwrap();
        let parsed: InstanceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(parsed.canonical_json().unwrap(), text);
        assert!(parsed.structural_violations().is_empty());
    }

    #[test]
    fn permuted_edge_input_serializes_to_identical_bytes() {
        let graph = GridConstruction::build(GridParams::new(2, 2, 5).unwrap()).union_graph();
        let mut reversed: Vec<(u32, u32, u32)> = graph.labeled_edges().to_vec();
        reversed.reverse();
        let shuffled =
            LabeledUnionGraph::from_labeled_edges(graph.n(), graph.order_count(), reversed)
                .unwrap();
        let a = InstanceFile::from_union_graph(Kind::Generic, &graph, None, true);
        let b = InstanceFile::from_union_graph(Kind::Generic, &shuffled, None, true);
        assert_eq!(
            a.canonical_json().unwrap(),
            b.canonical_json().unwrap()
        );
    }

    #[test]
    fn ranked_instances_round_trip_with_construction_record() {
        let params = RankedParams::new(2, 2, 4, 9, comparability_core::RankVariant::Disjoint)
            .unwrap();
        let file = ranked_instance(params, true).unwrap();
        let text = file.canonical_json().unwrap();
        let parsed: InstanceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, file);
        let rebuilt = parsed.rebuild_union_graph().unwrap().unwrap();
        assert_eq!(rebuilt, parsed.to_union_graph().unwrap());
    }
}
