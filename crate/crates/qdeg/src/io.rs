//! File formats: structured JSON for graphs and tableaux, CSV for
//! expansions and structure constants.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use qdeg_core::degraph::{DeGraph, Label};
use qdeg_core::product::StructureTable;
use qdeg_core::qsym::{BasisExpansion, QSymF};
use qdeg_core::{ConcatTableau, DescentSet, SignedShiftedTableau, StandardYoungTableau};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: String,
    pub des: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub label: Label,
    pub a: String,
    pub b: String,
}

/// `{n, vertices: [{id, des}], edges: [{label, a, b}]}`; edges name vertex ids.
///
/// An optional `labels` list gives the full label set when it differs from
/// the one implied by `n` and the edges, for instance when a label acts as
/// the identity everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
}

impl GraphFile {
    /// Vertices in graph order; edges by label, then by endpoint order.
    pub fn from_graph(g: &DeGraph) -> Self {
        let vertices = (0..g.len())
            .map(|v| VertexRecord { id: g.id(v).to_string(), des: g.des(v).iter().collect() })
            .collect();
        let mut edges = Vec::with_capacity(g.edge_count());
        for &l in g.labels() {
            for (a, b) in g.edges(l).expect("own label") {
                edges.push(EdgeRecord { label: l, a: g.id(a).to_string(), b: g.id(b).to_string() });
            }
        }
        let mut file = GraphFile { n: g.degree(), vertices, edges, labels: None };
        if file.implied_labels(false) != *g.labels() {
            file.labels = Some(g.labels().iter().copied().collect());
        }
        file
    }

    fn implied_labels(&self, queer: bool) -> BTreeSet<Label> {
        let mut labels: BTreeSet<Label> = match &self.labels {
            Some(declared) => declared.iter().copied().collect(),
            None => (2..self.n as Label).collect(),
        };
        labels.extend(self.edges.iter().map(|e| e.label));
        if queer && self.n >= 2 {
            labels.insert(0);
        }
        labels
    }

    /// Whether `label` is used by an edge or declared.
    pub fn uses_label(&self, label: Label) -> bool {
        self.edges.iter().any(|e| e.label == label) || self.labels.iter().flatten().any(|&l| l == label)
    }

    /// Builds the graph. Its labels are the declared ones (`2, …, n-1` when
    /// none are declared), every label used by an edge, and `0` as well when `queer` is set and `n >= 2`. A
    /// label without edges stands for the identity involution.
    pub fn to_graph(&self, queer: bool) -> anyhow::Result<DeGraph> {
        let mut g = DeGraph::new(self.n, self.implied_labels(queer));
        for v in &self.vertices {
            let des = DescentSet::new(self.n, v.des.iter().copied())
                .with_context(|| format!("descent set of vertex {}", v.id))?;
            g.add_vertex(v.id.clone(), des)?;
        }
        for e in &self.edges {
            g.add_edge_by_id(e.label, &e.a, &e.b)
                .with_context(|| format!("edge {} -- {} labeled {}", e.a, e.b, e.label))?;
        }
        Ok(g)
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing graph file {}", path.display()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub value: u32,
    pub marked: bool,
}

/// `{shape, rows}` with rows bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRecord {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<EntryRecord>>,
}

impl TableauRecord {
    pub fn from_sst(s: &SignedShiftedTableau) -> Self {
        TableauRecord {
            shape: s.shape().parts().to_vec(),
            rows: s
                .rows()
                .iter()
                .map(|r| r.iter().map(|e| EntryRecord { value: e.value, marked: e.marked }).collect())
                .collect(),
        }
    }

    pub fn from_syt(t: &StandardYoungTableau) -> Self {
        TableauRecord {
            shape: t.shape().parts().to_vec(),
            rows: t
                .rows()
                .iter()
                .map(|r| r.iter().map(|&value| EntryRecord { value, marked: false }).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcatRecord {
    pub left: TableauRecord,
    pub right: TableauRecord,
}

impl ConcatRecord {
    pub fn from_concat(t: &ConcatTableau) -> Self {
        ConcatRecord { left: TableauRecord::from_sst(&t.left), right: TableauRecord::from_sst(&t.right) }
    }
}

pub fn to_json_lines<T: Serialize>(items: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(items).expect("plain data");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ExpansionRow<'a> {
    shape: &'a str,
    coefficient: &'a str,
}

/// One `shape,coefficient` row per term.
pub fn expansion_csv(e: &BasisExpansion) -> anyhow::Result<String> {
    let rows: Vec<(String, String)> = e.terms().map(|(p, c)| (p.to_string(), c.to_string())).collect();
    rows_csv(&rows)
}

/// One `shape,coefficient` row per term, the shape column holding the descent set.
pub fn f_expansion_csv(f: &QSymF) -> anyhow::Result<String> {
    let rows: Vec<(String, String)> = f.terms().map(|(d, c)| (d.to_string(), c.to_string())).collect();
    rows_csv(&rows)
}

fn rows_csv(rows: &[(String, String)]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record(["shape", "coefficient"])?;
    }
    for (shape, coefficient) in rows {
        w.serialize(ExpansionRow { shape, coefficient })?;
    }
    finish(w)
}

#[derive(Serialize)]
struct StructureRow {
    gamma: String,
    delta: String,
    epsilon: String,
    coefficient: u64,
}

/// `gamma,delta,epsilon,coefficient` rows for every table, in order.
pub fn structure_csv(tables: &[StructureTable]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if tables.iter().all(|t| t.entries.is_empty()) {
        w.write_record(["gamma", "delta", "epsilon", "coefficient"])?;
    }
    for t in tables {
        for (eps, c) in t.terms() {
            w.serialize(StructureRow {
                gamma: t.left.to_string(),
                delta: t.right.to_string(),
                epsilon: eps.to_string(),
                coefficient: c,
            })?;
        }
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> anyhow::Result<String> {
    let bytes = w.into_inner().map_err(|e| anyhow::anyhow!("flushing csv: {e}"))?;
    Ok(String::from_utf8(bytes)?)
}

/// Writes to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// Rejects a record whose shape disagrees with its rows.
pub fn sst_from_record(r: &TableauRecord) -> anyhow::Result<SignedShiftedTableau> {
    let rows = r
        .rows
        .iter()
        .map(|row| row.iter().map(|e| qdeg_core::Entry { value: e.value, marked: e.marked }).collect())
        .collect();
    let s = SignedShiftedTableau::new(rows)?;
    if s.shape().parts() != r.shape.as_slice() {
        bail!("record shape {:?} does not match its rows ({})", r.shape, s.shape());
    }
    Ok(s)
}
