//! Hand-transcribed reference drawings of small queer dual equivalence
//! graphs, plus the negative and extension-search fixtures.
//!
//! Tableaux are written in the text grammar (rows bottom to top, `'` for a
//! mark, `|` between the factors of a concatenated tableau). Figure aliases
//! (`A1`, `T3`, ...) are the node names used in the drawings.

use std::collections::{BTreeMap, BTreeSet};

use anyhow::{anyhow, bail, Context};

use qdeg_core::axioms::with_queer_involution;
use qdeg_core::degraph::{concat_graph, sst_graph, syt_union_graph, DeGraph, Label};
use qdeg_core::shapes::{Partition, StrictPartition};
use qdeg_core::{ConcatTableau, DescentSet, SignedShiftedTableau, StandardYoungTableau};

/// The object family a figure draws.
#[derive(Debug, Clone, Copy)]
pub enum Family {
    Sst(&'static [usize]),
    Concat(&'static [usize], &'static [usize]),
}

#[derive(Debug, Clone, Copy)]
pub struct Figure {
    pub name: &'static str,
    pub family: Family,
    pub vertices: &'static [(&'static str, &'static str)],
    pub edges: &'static [(Label, &'static str, &'static str)],
}

const DRAWN_2: Figure = Figure {
    name: "sst-2",
    family: Family::Sst(&[2]),
    vertices: &[("S1", "1,2"), ("S2", "1,2'")],
    edges: &[(0, "S1", "S2")],
};

const DRAWN_31: Figure = Figure {
    name: "sst-3-1",
    family: Family::Sst(&[3, 1]),
    vertices: &[
        ("A1", "1,2',4/3"),
        ("A2", "1,2,4/3"),
        ("A3", "1,2,3/4"),
        ("B1", "1,2',3/4"),
        ("B2", "1,2,3'/4"),
        ("C1", "1,2',3'/4"),
        ("C2", "1,2',4'/3"),
        ("C3", "1,2,4'/3"),
    ],
    edges: &[
        (2, "A1", "A2"),
        (3, "A2", "A3"),
        (2, "B2", "B1"),
        (3, "B2", "B1"),
        (3, "C1", "C2"),
        (2, "C2", "C3"),
        (0, "A1", "A2"),
        (0, "A3", "B1"),
        (0, "B2", "C1"),
        (0, "C2", "C3"),
    ],
};

const DRAWN_4: Figure = Figure {
    name: "sst-4",
    family: Family::Sst(&[4]),
    vertices: &[
        ("T1", "1,2,3,4"),
        ("T2", "1,2',3,4"),
        ("T3", "1,2,3',4"),
        ("T4", "1,2,3,4'"),
        ("B3", "1,2',3',4"),
        ("B4", "1,2',3,4'"),
        ("B5", "1,2,3',4'"),
        ("B6", "1,2',3',4'"),
    ],
    edges: &[
        (2, "T2", "T3"),
        (3, "T3", "T4"),
        (3, "B3", "B4"),
        (2, "B4", "B5"),
        (0, "T1", "T2"),
        (0, "T3", "B3"),
        (0, "T4", "B4"),
        (0, "B5", "B6"),
    ],
};

const DRAWN_41: Figure = Figure {
    name: "sst-4-1",
    family: Family::Sst(&[4, 1]),
    vertices: &[
        ("A1", "1,2',4,5'/3"),
        ("A2", "1,2,4,5'/3"),
        ("A3", "1,2,3,5'/4"),
        ("B1", "1,2',3,5'/4"),
        ("B2", "1,2,3',5'/4"),
        ("C1", "1,2',3',5'/4"),
        ("C2", "1,2',4',5'/3"),
        ("C3", "1,2,4',5'/3"),
        ("a1", "1,2',4,5/3"),
        ("a2", "1,2,4,5/3"),
        ("a3", "1,2,3,5/4"),
        ("b1", "1,2',3,5/4"),
        ("b2", "1,2,3',5/4"),
        ("c1", "1,2',3',5/4"),
        ("c2", "1,2',4',5/3"),
        ("c3", "1,2,4',5/3"),
        ("T1", "1,2,3,4/5"),
        ("T2", "1,2',3,4/5"),
        ("T3", "1,2,3',4/5"),
        ("T4", "1,2,3,4'/5"),
        ("U3", "1,2',3',4/5"),
        ("U4", "1,2',3,4'/5"),
        ("U5", "1,2,3',4'/5"),
        ("U6", "1,2',3',4'/5"),
    ],
    edges: &[
        (2, "A1", "A2"),
        (3, "A2", "A3"),
        (2, "B2", "B1"),
        (3, "B2", "B1"),
        (3, "C1", "C2"),
        (2, "C2", "C3"),
        (0, "A1", "A2"),
        (0, "A3", "B1"),
        (0, "B2", "C1"),
        (0, "C2", "C3"),
        (2, "a1", "a2"),
        (3, "a2", "a3"),
        (2, "b2", "b1"),
        (3, "b2", "b1"),
        (3, "c1", "c2"),
        (2, "c2", "c3"),
        (0, "a1", "a2"),
        (0, "a3", "b1"),
        (0, "b2", "c1"),
        (0, "c2", "c3"),
        (2, "T2", "T3"),
        (3, "T3", "T4"),
        (3, "U3", "U4"),
        (2, "U4", "U5"),
        (0, "T1", "T2"),
        (0, "T3", "U3"),
        (0, "T4", "U4"),
        (0, "U5", "U6"),
        (4, "A1", "c2"),
        (4, "A2", "c3"),
        (4, "C1", "T1"),
        (4, "B2", "T2"),
        (4, "b1", "U5"),
        (4, "a3", "U6"),
        (4, "T3", "T4"),
        (4, "U3", "U4"),
    ],
};

const DRAWN_21X1: Figure = Figure {
    name: "concat-21x1",
    family: Family::Concat(&[2, 1], &[1]),
    vertices: &[
        ("A1", "1,2'/3|4"),
        ("A2", "1,2/3|4"),
        ("A3", "1,2/4|3"),
        ("B1", "1,2'/4|3"),
        ("B2", "1,3'/4|2"),
        ("C1", "2,3'/4|1"),
        ("C2", "2,3/4|1"),
        ("C3", "1,3/4|2"),
    ],
    edges: &[
        (2, "A1", "A2"),
        (3, "A2", "A3"),
        (2, "B2", "B1"),
        (3, "B2", "B1"),
        (3, "C1", "C2"),
        (2, "C2", "C3"),
        (0, "A1", "A2"),
        (0, "A3", "B1"),
        (0, "B2", "C1"),
        (0, "C2", "C3"),
    ],
};

const DRAWN_1X21: Figure = Figure {
    name: "concat-1x21",
    family: Family::Concat(&[1], &[2, 1]),
    vertices: &[
        ("a1", "2|1,3'/4"),
        ("a2", "1|2,3'/4"),
        ("a3", "1|2,3/4"),
        ("b1", "2|1,3/4"),
        ("b2", "3|1,2/4"),
        ("c1", "3|1,2'/4"),
        ("c2", "4|1,2'/3"),
        ("c3", "4|1,2/3"),
    ],
    edges: &[
        (2, "a1", "a2"),
        (3, "a2", "a3"),
        (2, "b2", "b1"),
        (3, "b2", "b1"),
        (3, "c1", "c2"),
        (2, "c2", "c3"),
        (0, "a1", "a2"),
        (0, "a3", "b1"),
        (0, "b2", "c1"),
        (0, "c2", "c3"),
    ],
};

const DRAWN_2X2: Figure = Figure {
    name: "concat-2x2",
    family: Family::Concat(&[2], &[2]),
    vertices: &[
        ("A1", "2,3|1,4"),
        ("A2", "1,3|2,4"),
        ("A3", "1,4|2,3"),
        ("B1", "2,4|1,3"),
        ("B2", "3,4|1,2"),
        ("C1", "3,4|1,2'"),
        ("C2", "2,4|1,3'"),
        ("C3", "1,4|2,3'"),
        ("T1", "1,2|3,4"),
        ("T2", "1,2'|3,4"),
        ("T3", "1,3'|2,4"),
        ("T4", "1,4'|2,3"),
        ("U3", "2,3'|1,4"),
        ("U4", "2,4'|1,3"),
        ("U5", "3,4'|1,2"),
        ("U6", "3,4'|1,2'"),
    ],
    edges: &[
        (2, "A1", "A2"),
        (3, "A2", "A3"),
        (2, "B2", "B1"),
        (3, "B2", "B1"),
        (3, "C1", "C2"),
        (2, "C3", "C2"),
        (0, "A1", "A2"),
        (0, "A3", "B1"),
        (0, "B2", "C1"),
        (0, "C3", "C2"),
        (2, "T2", "T3"),
        (3, "T3", "T4"),
        (3, "U3", "U4"),
        (2, "U4", "U5"),
        (0, "T1", "T2"),
        (0, "T3", "U3"),
        (0, "T4", "U4"),
        (0, "U5", "U6"),
    ],
};

/// Every transcribed drawing.
pub fn figures() -> Vec<Figure> {
    vec![DRAWN_2, DRAWN_31, DRAWN_4, DRAWN_41, DRAWN_21X1, DRAWN_1X21, DRAWN_2X2]
}

pub fn drawing(name: &str) -> Option<Figure> {
    figures().into_iter().find(|f| f.name == name)
}

impl Figure {
    /// The computed graph for the figure's family.
    pub fn computed_graph(&self) -> anyhow::Result<DeGraph> {
        Ok(match self.family {
            Family::Sst(p) => sst_graph(&StrictPartition::new(p.to_vec())?, true)?,
            Family::Concat(l, r) => {
                concat_graph(&StrictPartition::new(l.to_vec())?, &StrictPartition::new(r.to_vec())?, true)?
            }
        })
    }

    /// Letters whose cell, factor or mark differ between two transcribed tableaux.
    pub fn moved_letters(&self, a: &str, b: &str) -> anyhow::Result<Vec<u32>> {
        let places = |text: &str| -> anyhow::Result<Vec<(u32, Option<(usize, usize, usize, bool)>)>> {
            let parts: Vec<SignedShiftedTableau> = match self.family {
                Family::Sst(_) => vec![text.parse()?],
                Family::Concat(..) => {
                    let t: ConcatTableau = text.parse()?;
                    vec![t.left, t.right]
                }
            };
            let n: usize = parts.iter().map(SignedShiftedTableau::size).sum();
            Ok((1..=n as u32)
                .map(|v| {
                    let at = parts
                        .iter()
                        .enumerate()
                        .find_map(|(k, p)| p.cell_of(v).map(|(c, m)| (k, c.row, c.col, m)));
                    (v, at)
                })
                .collect())
        };
        let (pa, pb) = (places(a)?, places(b)?);
        Ok(pa.iter().zip(&pb).filter(|(x, y)| x != y).map(|(x, _)| x.0).collect())
    }

    /// Canonical vertex id of a transcribed tableau.
    fn canonical(&self, text: &str) -> anyhow::Result<String> {
        Ok(match self.family {
            Family::Sst(_) => text.parse::<SignedShiftedTableau>()?.to_string(),
            Family::Concat(..) => text.parse::<ConcatTableau>()?.to_string(),
        })
    }
}

/// Outcome of comparing a figure with the computed graph, edges written as
/// `label:alias-alias`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FigureCheck {
    pub name: &'static str,
    pub figure_vertices: usize,
    pub graph_vertices: usize,
    pub figure_edges: usize,
    /// Transcribed tableaux absent from the computed graph.
    pub unknown: Vec<String>,
    /// In the figure, not computed.
    pub missing: Vec<String>,
    /// Computed between figure vertices, not drawn.
    pub extra: Vec<String>,
    /// Computed edges from a figure vertex to one the figure omits.
    pub leaving: Vec<String>,
    /// Drawn edges moving a letter that their label cannot move: labels
    /// `i >= 2` only move `i-1, i, i+1`, label `0` only moves `1, 2`.
    pub impossible: Vec<String>,
}

impl FigureCheck {
    /// The drawn edges are exactly the computed ones on the drawn vertices,
    /// and no computed edge leaves the drawing.
    pub fn matches(&self) -> bool {
        self.unknown.is_empty() && self.missing.is_empty() && self.extra.is_empty() && self.leaving.is_empty()
    }

    pub fn covers_graph(&self) -> bool {
        self.figure_vertices == self.graph_vertices
    }
}

pub fn compare_figure(fig: &Figure) -> anyhow::Result<FigureCheck> {
    let g = fig.computed_graph()?;
    let mut check = FigureCheck {
        name: fig.name,
        figure_vertices: fig.vertices.len(),
        graph_vertices: g.len(),
        figure_edges: fig.edges.len(),
        ..Default::default()
    };
    let mut alias_of: BTreeMap<usize, &str> = BTreeMap::new();
    let mut vertex_of: BTreeMap<&str, usize> = BTreeMap::new();
    for &(alias, text) in fig.vertices {
        let id = fig.canonical(text).with_context(|| format!("{}: vertex {alias}", fig.name))?;
        match g.vertex(&id) {
            Some(v) => {
                if alias_of.insert(v, alias).is_some() {
                    bail!("{}: {alias} repeats a tableau", fig.name);
                }
                vertex_of.insert(alias, v);
            }
            None => check.unknown.push(format!("{alias}={text}")),
        }
    }
    let text_of: BTreeMap<&str, &str> = fig.vertices.iter().copied().collect();
    for &(l, a, b) in fig.edges {
        if let (Some(ta), Some(tb)) = (text_of.get(a), text_of.get(b)) {
            let window = if l == 0 { 1..=2 } else { l - 1..=l + 1 };
            let stray: Vec<u32> = fig.moved_letters(ta, tb)?.into_iter().filter(|v| !window.contains(v)).collect();
            if !stray.is_empty() {
                check.impossible.push(format!("{l}:{a}-{b} moves {stray:?}"));
            }
        }
    }
    let key = |l: Label, a: usize, b: usize| (l, a.min(b), a.max(b));
    let mut drawn = BTreeSet::new();
    for &(l, a, b) in fig.edges {
        let va = *vertex_of.get(a).ok_or_else(|| anyhow!("{}: edge names unknown {a}", fig.name))?;
        let vb = *vertex_of.get(b).ok_or_else(|| anyhow!("{}: edge names unknown {b}", fig.name))?;
        drawn.insert(key(l, va, vb));
    }
    let mut computed = BTreeSet::new();
    for &l in g.labels() {
        for (a, b) in g.edges(l)? {
            match (alias_of.get(&a), alias_of.get(&b)) {
                (Some(_), Some(_)) => {
                    computed.insert(key(l, a, b));
                }
                (Some(x), None) => check.leaving.push(format!("{l}:{x}-{}", g.id(b))),
                (None, Some(y)) => check.leaving.push(format!("{l}:{}-{y}", g.id(a))),
                (None, None) => {}
            }
        }
    }
    let name = |&(l, a, b): &(Label, usize, usize)| format!("{l}:{}-{}", alias_of[&a], alias_of[&b]);
    check.missing = drawn.difference(&computed).map(name).collect();
    check.extra = computed.difference(&drawn).map(name).collect();
    Ok(check)
}

/// A proposed `ψ_0` on a union of `SYT(λ)`, pairs given by row reading words.
#[derive(Debug, Clone, Copy)]
pub struct Pairing {
    pub name: &'static str,
    pub shapes: &'static [&'static [usize]],
    pub pairs: &'static [(&'static str, &'static str)],
}

/// A pairing on `SYT(3,1) ∪ SYT(2,2) ∪ SYT(2,1,1)` that breaks the local
/// condition at `i = 2`.
pub const REJECTED_31: Pairing = Pairing {
    name: "rejected-31",
    shapes: &[&[3, 1], &[2, 2], &[2, 1, 1]],
    pairs: &[("2134", "4123"), ("3124", "3214"), ("4213", "3412"), ("4312", "2413")],
};

pub const UNION_2: Pairing = Pairing { name: "union-2", shapes: &[&[2], &[1, 1]], pairs: &[("12", "21")] };

pub const UNION_21: Pairing = Pairing { name: "union-21", shapes: &[&[2, 1]], pairs: &[("213", "312")] };

pub const UNION_3: Pairing = Pairing {
    name: "union-3",
    shapes: &[&[3], &[2, 1], &[1, 1, 1]],
    pairs: &[("123", "213"), ("312", "321")],
};

pub const UNION_31: Pairing = Pairing {
    name: "union-31",
    shapes: &[&[3, 1], &[2, 2], &[2, 1, 1]],
    pairs: &[("2134", "3124"), ("4213", "4312"), ("4123", "2413"), ("3214", "3412")],
};

pub const UNION_4: Pairing = Pairing {
    name: "union-4",
    shapes: &[&[4], &[3, 1], &[2, 1, 1], &[1, 1, 1, 1]],
    pairs: &[("1234", "2134"), ("3124", "3214"), ("4123", "4213"), ("4312", "4321")],
};

/// Pairings the extension search must reproduce.
pub fn unique_pairings() -> Vec<Pairing> {
    vec![UNION_2, UNION_21, UNION_3, UNION_31, UNION_4]
}

impl Pairing {
    pub fn shapes(&self) -> anyhow::Result<Vec<Partition>> {
        self.shapes.iter().map(|s| Ok(Partition::new(s.to_vec())?)).collect()
    }

    /// The dual equivalence graph on the union, without `ψ_0`.
    pub fn base_graph(&self) -> anyhow::Result<DeGraph> {
        Ok(syt_union_graph(&self.shapes()?)?)
    }

    /// The pairs as vertex indices of [`Pairing::base_graph`], sorted.
    pub fn vertex_pairs(&self, g: &DeGraph) -> anyhow::Result<Vec<(usize, usize)>> {
        let by_word = vertices_by_reading_word(g)?;
        let mut out = Vec::new();
        for &(x, y) in self.pairs {
            let a = *by_word.get(x).ok_or_else(|| anyhow!("{}: no tableau reads {x}", self.name))?;
            let b = *by_word.get(y).ok_or_else(|| anyhow!("{}: no tableau reads {y}", self.name))?;
            out.push((a.min(b), a.max(b)));
        }
        out.sort();
        Ok(out)
    }

    /// The base graph with the pairing as label `0`.
    pub fn graph(&self) -> anyhow::Result<DeGraph> {
        let g = self.base_graph()?;
        let pairs = self.vertex_pairs(&g)?;
        Ok(with_queer_involution(&g, &pairs)?)
    }
}

/// Row reading word of each vertex of a graph on standard Young tableaux.
pub fn vertices_by_reading_word(g: &DeGraph) -> anyhow::Result<BTreeMap<String, usize>> {
    (0..g.len())
        .map(|v| {
            let t: StandardYoungTableau = g.id(v).parse()?;
            Ok((t.row_reading_word().to_string(), v))
        })
        .collect()
}

/// `SST(2)` with label `0` present but acting as the identity.
pub fn fixed_point_graph() -> anyhow::Result<DeGraph> {
    let base = sst_graph(&StrictPartition::new(vec![2])?, false)?;
    Ok(with_queer_involution(&base, &[])?)
}

/// The 6-vertex class graph of the double cover of `SST(4,1)`: each vertex
/// stands for a class under `d_0, d_2, d_3`, joined only by `d_4`. The
/// vertices carry no descent data, so every descent set is empty.
pub fn cover_class_graph() -> anyhow::Result<DeGraph> {
    let mut g = DeGraph::new(5, [4]);
    for id in ["T1", "a1", "A2", "T2", "a2", "A1"] {
        g.add_vertex(id, DescentSet::empty(5)?)?;
    }
    for (a, b) in [("T1", "a1"), ("T1", "A1"), ("a1", "A2"), ("A1", "a2"), ("A2", "T2"), ("a2", "T2")] {
        g.add_edge_by_id(4, a, b)?;
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Block {
    /// 5' at (1,4)
    Marked,
    /// 5 at (1,4)
    Plain,
    /// 5 at (2,2)
    Upper,
}

fn block_of(id: &str) -> anyhow::Result<Block> {
    let s: SignedShiftedTableau = id.parse()?;
    match s.cell_of(5) {
        Some((c, true)) if (c.row, c.col) == (1, 4) => Ok(Block::Marked),
        Some((c, false)) if (c.row, c.col) == (1, 4) => Ok(Block::Plain),
        Some((c, false)) if (c.row, c.col) == (2, 2) => Ok(Block::Upper),
        _ => bail!("{id} is not in SST(4,1)"),
    }
}

/// The double cover at tableau level: two copies of the queer graph on
/// `SST(4,1)`, where each `d_4` edge between the two blocks with 5 at (1,4)
/// crosses to the other copy and every other edge stays in its copy.
/// Vertex ids are the tableau followed by `#1` or `#2`.
pub fn cover_lift_graph() -> anyhow::Result<DeGraph> {
    let base = sst_graph(&StrictPartition::new(vec![4, 1])?, true)?;
    let blocks = (0..base.len()).map(|v| block_of(base.id(v))).collect::<anyhow::Result<Vec<_>>>()?;
    let m = base.len();
    let mut g = DeGraph::new(base.degree(), base.labels().iter().copied());
    for copy in 1..=2 {
        for v in 0..m {
            g.add_vertex(format!("{}#{copy}", base.id(v)), base.des(v))?;
        }
    }
    for &l in base.labels() {
        for (a, b) in base.edges(l)? {
            let cross = l == 4 && blocks[a] != blocks[b] && blocks[a] != Block::Upper && blocks[b] != Block::Upper;
            if cross {
                g.add_edge(l, a, b + m)?;
                g.add_edge(l, a + m, b)?;
            } else {
                g.add_edge(l, a, b)?;
                g.add_edge(l, a + m, b + m)?;
            }
        }
    }
    Ok(g)
}

/// Named graphs available to the command line, besides the drawings.
pub const GRAPH_FIXTURES: [&str; 9] = [
    "rejected-31",
    "union-2",
    "union-21",
    "union-3",
    "union-31",
    "union-4",
    "fixed-point",
    "cover-classes",
    "cover-lift",
];

pub fn graph_fixture(name: &str) -> anyhow::Result<DeGraph> {
    if let Some(p) = unique_pairings().into_iter().chain([REJECTED_31]).find(|p| p.name == name) {
        return p.graph();
    }
    if let Some(d) = drawing(name) {
        return d.computed_graph();
    }
    match name {
        "fixed-point" => fixed_point_graph(),
        "cover-classes" => cover_class_graph(),
        "cover-lift" => cover_lift_graph(),
        other => {
            let drawn: Vec<&str> = figures().iter().map(|f| f.name).collect();
            bail!("unknown fixture {other:?}; known: {}, {}", GRAPH_FIXTURES.join(", "), drawn.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figures_match_except_the_41_label_4_edges() {
        for fig in figures() {
            let c = compare_figure(&fig).unwrap();
            if fig.name == "sst-4-1" {
                continue;
            }
            assert!(c.matches() && c.impossible.is_empty(), "{c:?}");
        }
    }

    #[test]
    fn drawn_41_edges_that_no_d4_can_give() {
        let c = compare_figure(&DRAWN_41).unwrap();
        assert_eq!(c.missing, ["4:U6-a3", "4:C1-T1", "4:T2-B2", "4:b1-U5"]);
        assert_eq!(c.extra, ["4:U6-C1", "4:T2-b1", "4:U5-B2", "4:T1-a3"]);
        assert!(c.leaving.is_empty() && c.unknown.is_empty());
        assert_eq!(c.impossible.len(), 4);
        assert!(c.impossible.iter().all(|s| s.ends_with("moves [2]")), "{:?}", c.impossible);
    }

    #[test]
    fn partial_figure_is_reported() {
        let c = compare_figure(&DRAWN_2X2).unwrap();
        assert_eq!((c.figure_vertices, c.graph_vertices), (16, 24));
        assert!(!c.covers_graph());
    }

    #[test]
    fn lift_is_a_double_cover() {
        let g = cover_lift_graph().unwrap();
        assert_eq!(g.len(), 48);
        g.require_matchings().unwrap();
        let base = DRAWN_41.computed_graph().unwrap();
        assert_eq!(g.edge_count(), 2 * base.edge_count());
    }

    #[test]
    fn pairings_resolve() {
        for p in unique_pairings().into_iter().chain([REJECTED_31]) {
            let g = p.graph().unwrap();
            assert!(g.is_matching(0), "{}", p.name);
            assert_eq!(g.label_edge_count(0) * 2, g.len(), "{}", p.name);
        }
    }
}
