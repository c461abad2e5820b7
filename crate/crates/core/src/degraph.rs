//! Labeled involution graphs: vertices carry descent sets, and each label
//! contributes a set of edges (normally a partial matching).
//!
//! Abstract inputs may violate the matching property; the graph accepts them
//! and [`DeGraph::is_matching`] reports it, so the axiom auditors can reject
//! them with a diagnostic rather than at load time.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::involutions::{deg_concat, deg_sst, deg_syt, queer_concat, queer_sst};
use crate::shapes::{Partition, StrictPartition};
use crate::tableaux::{generate_concat, generate_sst, generate_syt, DescentSet};
use crate::{Error, Result};

/// Edge label: `0` for the queer involution, `i >= 2` for `d_i`.
pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeGraph {
    n: usize,
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    des: Vec<DescentSet>,
    labels: BTreeSet<Label>,
    edges: BTreeMap<Label, BTreeSet<(usize, usize)>>,
    adj: BTreeMap<Label, Vec<Vec<usize>>>,
}

impl DeGraph {
    /// An empty graph of degree `n` whose edges may use `labels`.
    pub fn new(n: usize, labels: impl IntoIterator<Item = Label>) -> Self {
        let labels: BTreeSet<Label> = labels.into_iter().collect();
        DeGraph {
            n,
            ids: Vec::new(),
            index: BTreeMap::new(),
            des: Vec::new(),
            edges: labels.iter().map(|&l| (l, BTreeSet::new())).collect(),
            adj: labels.iter().map(|&l| (l, Vec::new())).collect(),
            labels,
        }
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, des: DescentSet) -> Result<usize> {
        let id = id.into();
        if des.degree() != self.n {
            return Err(Error::MalformedGraph(format!(
                "vertex {id} has a descent set of degree {} in a degree-{} graph",
                des.degree(),
                self.n
            )));
        }
        if self.index.contains_key(&id) {
            return Err(Error::MalformedGraph(format!("duplicate vertex id {id}")));
        }
        let v = self.ids.len();
        self.index.insert(id.clone(), v);
        self.ids.push(id);
        self.des.push(des);
        for lists in self.adj.values_mut() {
            lists.push(Vec::new());
        }
        Ok(v)
    }

    /// Adds the undirected edge `{a, b}`; repeated edges are ignored and
    /// loops are rejected (a fixed point is the absence of an edge).
    pub fn add_edge(&mut self, label: Label, a: usize, b: usize) -> Result<()> {
        if !self.labels.contains(&label) {
            return Err(Error::UnknownLabel(label));
        }
        if a >= self.len() || b >= self.len() {
            return Err(Error::MalformedGraph(format!("edge ({a},{b}) names a missing vertex")));
        }
        if a == b {
            return Err(Error::MalformedGraph(format!("loop at {} with label {label}", self.ids[a])));
        }
        let key = (a.min(b), a.max(b));
        if self.edges.get_mut(&label).expect("declared").insert(key) {
            let adj = self.adj.get_mut(&label).expect("declared");
            adj[a].push(b);
            adj[b].push(a);
        }
        Ok(())
    }

    pub fn add_edge_by_id(&mut self, label: Label, a: &str, b: &str) -> Result<()> {
        let va = self.vertex(a).ok_or_else(|| Error::MalformedGraph(format!("unknown vertex {a}")))?;
        let vb = self.vertex(b).ok_or_else(|| Error::MalformedGraph(format!("unknown vertex {b}")))?;
        self.add_edge(label, va, vb)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn des(&self, v: usize) -> DescentSet {
        self.des[v]
    }

    pub fn labels(&self) -> &BTreeSet<Label> {
        &self.labels
    }

    /// Edges with the given label as sorted vertex pairs.
    pub fn edges(&self, label: Label) -> Result<impl Iterator<Item = (usize, usize)> + '_> {
        Ok(self.edges.get(&label).ok_or(Error::UnknownLabel(label))?.iter().copied())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(BTreeSet::len).sum()
    }

    pub fn label_edge_count(&self, label: Label) -> usize {
        self.edges.get(&label).map_or(0, BTreeSet::len)
    }

    pub fn neighbors(&self, label: Label, v: usize) -> Result<&[usize]> {
        Ok(&self.adj.get(&label).ok_or(Error::UnknownLabel(label))?[v])
    }

    pub fn is_matching(&self, label: Label) -> bool {
        self.adj.get(&label).is_some_and(|a| a.iter().all(|l| l.len() <= 1))
    }

    /// Fails naming the first label and vertex where edges do not form a matching.
    pub fn require_matchings(&self) -> Result<()> {
        for (&label, adj) in &self.adj {
            if let Some(v) = adj.iter().position(|l| l.len() > 1) {
                return Err(Error::MalformedGraph(format!(
                    "label {label} is not an involution: vertex {} has {} partners",
                    self.ids[v],
                    adj[v].len()
                )));
            }
        }
        Ok(())
    }

    /// The image of `v` under the involution `label` (itself when fixed).
    pub fn apply(&self, label: Label, v: usize) -> Result<usize> {
        match self.neighbors(label, v)? {
            [] => Ok(v),
            [w] => Ok(*w),
            many => Err(Error::MalformedGraph(format!(
                "label {label} is not an involution at {} ({} partners)",
                self.ids[v],
                many.len()
            ))),
        }
    }

    /// Subgraph on `vertices` keeping the given labels; vertex order follows `vertices`.
    pub fn induced(&self, vertices: &[usize], labels: &[Label]) -> Result<DeGraph> {
        let mut g = DeGraph::new(self.n, labels.iter().copied());
        let mut map = BTreeMap::new();
        for &v in vertices {
            map.insert(v, g.add_vertex(self.ids[v].clone(), self.des[v])?);
        }
        for &label in labels {
            for (a, b) in self.edges(label)? {
                if let (Some(&x), Some(&y)) = (map.get(&a), map.get(&b)) {
                    g.add_edge(label, x, y)?;
                }
            }
        }
        Ok(g)
    }
}

/// A set of vertices connected under a chosen label set, sorted ascending.
pub type ComponentClass = Vec<usize>;

fn check_labels(g: &DeGraph, labels: &[Label]) -> Result<()> {
    match labels.iter().find(|l| !g.labels.contains(l)) {
        Some(&l) => Err(Error::UnknownLabel(l)),
        None => Ok(()),
    }
}

/// Connected components under `labels`, ordered by smallest vertex.
pub fn components(g: &DeGraph, labels: &[Label]) -> Result<Vec<ComponentClass>> {
    check_labels(g, labels)?;
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for start in 0..g.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut class = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &l in labels {
                for &w in &g.adj[&l][v] {
                    if !seen[w] {
                        seen[w] = true;
                        class.push(w);
                        stack.push(w);
                    }
                }
            }
        }
        class.sort_unstable();
        out.push(class);
    }
    Ok(out)
}

/// `{d - h + 1 : d ∈ D, h <= d < i}` as a descent set of degree `i - h + 1`.
pub fn restrict_descents(d: &DescentSet, h: usize, i: usize) -> Result<DescentSet> {
    d.restrict(h, i)
}

/// Sorted descent sets of the vertices in `class`.
pub fn descent_multiset(class: &[usize], g: &DeGraph) -> Vec<DescentSet> {
    let mut v: Vec<DescentSet> = class.iter().map(|&x| g.des[x]).collect();
    v.sort();
    v
}

/// Largest, over pairs in a common component under `labels`, of the fewest
/// `special` edges on a connecting path.
pub fn max_special_edge_need(g: &DeGraph, labels: &[Label], special: Label) -> Result<usize> {
    Ok(special_need_witness(g, labels, special)?.map_or(0, |w| w.need))
}

/// A pair realising [`max_special_edge_need`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeedWitness {
    pub from: usize,
    pub to: usize,
    pub need: usize,
}

pub fn special_need_witness(g: &DeGraph, labels: &[Label], special: Label) -> Result<Option<NeedWitness>> {
    check_labels(g, labels)?;
    if !labels.contains(&special) {
        return Err(Error::UnknownLabel(special));
    }
    let mut best: Option<NeedWitness> = None;
    let mut dist = vec![usize::MAX; g.len()];
    for source in 0..g.len() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &l in labels {
                let w8 = usize::from(l == special);
                for &w in &g.adj[&l][v] {
                    let nd = dist[v] + w8;
                    if nd < dist[w] {
                        dist[w] = nd;
                        if w8 == 0 {
                            queue.push_front(w);
                        } else {
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        for (to, &d) in dist.iter().enumerate() {
            if d != usize::MAX && best.as_ref().is_none_or(|b| d > b.need) {
                best = Some(NeedWitness { from: source, to, need: d });
            }
        }
    }
    Ok(best)
}

/// Per-vertex invariant used to prune isomorphism search.
fn signature(g: &DeGraph, v: usize) -> (DescentSet, Vec<(Label, usize)>) {
    (g.des[v], g.adj.iter().map(|(&l, a)| (l, a[v].len())).collect())
}

/// A descent- and edge-preserving bijection from `g` to `h`, if one exists.
/// `witness[v]` is the image of vertex `v`.
pub fn is_descent_edge_isomorphic(g: &DeGraph, h: &DeGraph) -> Option<Vec<usize>> {
    let mut found = None;
    search_isomorphisms(g, h, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Every descent- and edge-preserving bijection of `g` onto itself.
pub fn automorphisms(g: &DeGraph) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    search_isomorphisms(g, g, &mut |m| {
        all.push(m.to_vec());
        true
    });
    all
}

/// Calls `visit` on each isomorphism until it returns `false`.
fn search_isomorphisms(g: &DeGraph, h: &DeGraph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if g.n != h.n || g.len() != h.len() || g.labels != h.labels {
        return;
    }
    if g.labels.iter().any(|&l| g.label_edge_count(l) != h.label_edge_count(l)) {
        return;
    }
    let mut gs: Vec<_> = (0..g.len()).map(|v| signature(g, v)).collect();
    let mut hs: Vec<_> = (0..h.len()).map(|v| signature(h, v)).collect();
    let (mut a, mut b) = (gs.clone(), hs.clone());
    a.sort();
    b.sort();
    if a != b {
        return;
    }
    // visit g in breadth-first order so most vertices have a mapped neighbour
    let order = bfs_order(g);
    let mut map = vec![usize::MAX; g.len()];
    let mut used = vec![false; h.len()];
    let _ = extend(g, h, &order, 0, &mut gs, &mut hs, &mut map, &mut used, visit);
}

fn bfs_order(g: &DeGraph) -> Vec<usize> {
    let mut seen = vec![false; g.len()];
    let mut order = Vec::with_capacity(g.len());
    for s in 0..g.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for a in g.adj.values() {
                for &w in &a[v] {
                    if !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &DeGraph,
    h: &DeGraph,
    order: &[usize],
    k: usize,
    gs: &mut Vec<(DescentSet, Vec<(Label, usize)>)>,
    hs: &mut Vec<(DescentSet, Vec<(Label, usize)>)>,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if k == order.len() {
        return visit(map);
    }
    let v = order[k];
    let anchor = g.adj.iter().find_map(|(&l, a)| a[v].iter().find(|&&w| map[w] != usize::MAX).map(|&w| (l, w)));
    let candidates: Vec<usize> = match anchor {
        Some((l, w)) => h.adj[&l][map[w]].clone(),
        None => (0..h.len()).collect(),
    };
    for c in candidates {
        if used[c] || gs[v] != hs[c] {
            continue;
        }
        let consistent = g.adj.iter().all(|(l, a)| {
            a[v].iter().all(|&w| map[w] == usize::MAX || h.adj[l][c].contains(&map[w]))
        });
        if !consistent {
            continue;
        }
        map[v] = c;
        used[c] = true;
        let go_on = extend(g, h, order, k + 1, gs, hs, map, used, visit);
        map[v] = usize::MAX;
        used[c] = false;
        if !go_on {
            return false;
        }
    }
    true
}

const CYCLED_COLORS: [&str; 6] = ["darkgreen", "orange", "brown", "cyan", "gold", "gray"];

/// Fixed edge color for a label.
pub fn label_color(label: Label) -> &'static str {
    match label {
        0 => "violet",
        2 => "red",
        3 => "blue",
        4 => "magenta",
        l => CYCLED_COLORS[(l as usize).saturating_sub(5) % CYCLED_COLORS.len()],
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: one node per vertex labeled with its id and descent
/// set, one edge per pair with its label and color.
pub fn to_dot(g: &DeGraph) -> String {
    if g.is_empty() {
        return "graph {}\n".to_string();
    }
    let mut out = String::from("graph {\n");
    for (v, id) in g.ids.iter().enumerate() {
        let id = dot_escape(id);
        let _ = writeln!(out, "  \"{id}\" [label=\"{id}\\n{}\"];", g.des[v]);
    }
    for (&l, pairs) in &g.edges {
        for &(a, b) in pairs {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{l}\", color={}];",
                dot_escape(&g.ids[a]),
                dot_escape(&g.ids[b]),
                label_color(l)
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Builds a graph with an edge between `x` and `f(x)` for each labeled
/// involution `f` and each object it moves.
///
/// Vertex ids are the objects' display strings, in the order given.
pub fn build_graph<T, D>(
    n: usize,
    objects: &[T],
    descent: D,
    involutions: &[(Label, &dyn Fn(&T) -> Result<T>)],
) -> Result<DeGraph>
where
    T: Ord + Clone + core::fmt::Display,
    D: Fn(&T) -> Result<DescentSet>,
{
    let mut g = DeGraph::new(n, involutions.iter().map(|(l, _)| *l));
    let mut index = BTreeMap::new();
    for x in objects {
        let v = g.add_vertex(x.to_string(), descent(x)?)?;
        index.insert(x.clone(), v);
    }
    for (label, f) in involutions {
        for (v, x) in objects.iter().enumerate() {
            let y = f(x)?;
            let Some(&w) = index.get(&y) else {
                return Err(Error::Construction {
                    label: *label,
                    witness: x.to_string(),
                    reason: format!("image {y} is not in the object set"),
                });
            };
            let back = f(&y)?;
            if back != *x {
                return Err(Error::Construction {
                    label: *label,
                    witness: x.to_string(),
                    reason: format!("not self-inverse: {x} -> {y} -> {back}"),
                });
            }
            if w != v {
                g.add_edge(*label, v, w)?;
            }
        }
    }
    Ok(g)
}

fn dual_labels(n: usize) -> impl Iterator<Item = Label> {
    (2..n as Label).filter(move |_| n >= 3)
}

/// The standard graph on `SST(γ)`: `d_2 … d_{n-1}`, plus `d_0` when `queer`.
pub fn sst_graph(shape: &StrictPartition, queer: bool) -> Result<DeGraph> {
    let n = shape.size();
    let objects = generate_sst(shape);
    let mut fs: Vec<(Label, alloc::boxed::Box<dyn Fn(&_) -> Result<_>>)> = Vec::new();
    if queer && n >= 2 {
        fs.push((0, alloc::boxed::Box::new(queer_sst)));
    }
    for i in dual_labels(n) {
        fs.push((i, alloc::boxed::Box::new(move |s: &_| deg_sst(s, i as usize))));
    }
    let refs: Vec<(Label, &dyn Fn(&_) -> Result<_>)> = fs.iter().map(|(l, f)| (*l, f.as_ref())).collect();
    build_graph(n, &objects, |s| s.descents(), &refs)
}

/// The standard dual equivalence graph on `SYT(λ)`.
pub fn syt_graph(shape: &Partition) -> Result<DeGraph> {
    let n = shape.size();
    let objects = generate_syt(shape);
    let fs: Vec<(Label, alloc::boxed::Box<dyn Fn(&_) -> Result<_>>)> = dual_labels(n)
        .map(|i| (i, alloc::boxed::Box::new(move |t: &_| deg_syt(t, i as usize)) as alloc::boxed::Box<dyn Fn(&_) -> Result<_>>))
        .collect();
    let refs: Vec<(Label, &dyn Fn(&_) -> Result<_>)> = fs.iter().map(|(l, f)| (*l, f.as_ref())).collect();
    build_graph(n, &objects, |t| Ok(t.descents()), &refs)
}

/// The graph on `SST(γ ⊗ δ)` with `ψ_2 … ψ_{n-1}`, plus `ψ_0` when `queer`.
pub fn concat_graph(left: &StrictPartition, right: &StrictPartition, queer: bool) -> Result<DeGraph> {
    let n = left.size() + right.size();
    let objects = generate_concat(left, right);
    let mut fs: Vec<(Label, alloc::boxed::Box<dyn Fn(&_) -> Result<_>>)> = Vec::new();
    if queer && n >= 2 {
        fs.push((0, alloc::boxed::Box::new(queer_concat)));
    }
    for i in dual_labels(n) {
        fs.push((i, alloc::boxed::Box::new(move |t: &_| deg_concat(t, i as usize))));
    }
    let refs: Vec<(Label, &dyn Fn(&_) -> Result<_>)> = fs.iter().map(|(l, f)| (*l, f.as_ref())).collect();
    build_graph(n, &objects, |t| Ok(t.descents()), &refs)
}

/// Disjoint union of graphs of one degree; vertex ids must stay distinct.
pub fn disjoint_union(parts: &[DeGraph]) -> Result<DeGraph> {
    let n = parts.first().map_or(0, DeGraph::degree);
    let mut g = DeGraph::new(n, parts.iter().flat_map(|h| h.labels.iter().copied()));
    for h in parts {
        if h.n != n {
            return Err(Error::MalformedGraph(format!("cannot join degrees {n} and {}", h.n)));
        }
        let offset = g.len();
        for v in 0..h.len() {
            g.add_vertex(h.id(v), h.des(v))?;
        }
        for (&l, pairs) in &h.edges {
            for &(a, b) in pairs {
                g.add_edge(l, a + offset, b + offset)?;
            }
        }
    }
    Ok(g)
}

/// Disjoint union of the dual equivalence graphs on `SYT(λ)` for each `λ`.
pub fn syt_union_graph(shapes: &[Partition]) -> Result<DeGraph> {
    let graphs = shapes.iter().map(syt_graph).collect::<Result<Vec<_>>>()?;
    disjoint_union(&graphs)
}

/// Labels `{0, 2, …, k}` (those present in `g`).
pub fn queer_labels_upto(g: &DeGraph, k: Label) -> Vec<Label> {
    g.labels.iter().copied().filter(|&l| l == 0 || (2..=k).contains(&l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{strict, strict_partitions_of};
    use crate::tableaux::superstandard;

    fn des(n: usize, m: &[usize]) -> DescentSet {
        DescentSet::new(n, m.iter().copied()).unwrap()
    }

    fn edge_ids(g: &DeGraph, label: Label) -> BTreeSet<(String, String)> {
        g.edges(label)
            .unwrap()
            .map(|(a, b)| {
                let (x, y) = (g.id(a).to_string(), g.id(b).to_string());
                if x < y { (x, y) } else { (y, x) }
            })
            .collect()
    }

    fn pairs(list: &[(&str, &str)]) -> BTreeSet<(String, String)> {
        list.iter()
            .map(|&(a, b)| if a < b { (a.into(), b.into()) } else { (b.into(), a.into()) })
            .collect()
    }

    #[test]
    fn sst31_edges() {
        let g = sst_graph(&strict(&[3, 1]), true).unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(g.edge_count(), 10);
        let (a1, a2, a3) = ("1,2',4/3", "1,2,4/3", "1,2,3/4");
        let (b1, b2) = ("1,2',3/4", "1,2,3'/4");
        let (c1, c2, c3) = ("1,2',3'/4", "1,2',4'/3", "1,2,4'/3");
        assert_eq!(edge_ids(&g, 2), pairs(&[(a1, a2), (b1, b2), (c2, c3)]));
        assert_eq!(edge_ids(&g, 3), pairs(&[(a2, a3), (b1, b2), (c1, c2)]));
        assert_eq!(edge_ids(&g, 0), pairs(&[(a1, a2), (a3, b1), (b2, c1), (c2, c3)]));
    }

    #[test]
    fn components_of_sst31() {
        let g = sst_graph(&strict(&[3, 1]), true).unwrap();
        assert_eq!(components(&g, &[0, 2, 3]).unwrap().len(), 1);
        let mut sizes: Vec<usize> = components(&g, &[2, 3]).unwrap().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, [2, 3, 3]);
        assert!(matches!(components(&g, &[7]), Err(Error::UnknownLabel(7))));
    }

    #[test]
    fn descent_multiset_of_sst31() {
        let g = sst_graph(&strict(&[3, 1]), true).unwrap();
        let all: Vec<usize> = (0..g.len()).collect();
        let mut expected = vec![
            des(4, &[1]),
            des(4, &[2]),
            des(4, &[2]),
            des(4, &[3]),
            des(4, &[1, 2]),
            des(4, &[1, 3]),
            des(4, &[1, 3]),
            des(4, &[2, 3]),
        ];
        expected.sort();
        assert_eq!(descent_multiset(&all, &g), expected);
    }

    #[test]
    fn single_object_graph() {
        let g = sst_graph(&strict(&[1]), true).unwrap();
        assert_eq!((g.len(), g.edge_count()), (1, 0));
        assert_eq!(max_special_edge_need(&g, &[], 0).unwrap_err(), Error::UnknownLabel(0));
    }

    #[test]
    fn special_need_on_a_cycle() {
        let mut g = DeGraph::new(5, [4]);
        for id in ["T1", "a1", "A2", "T2", "a2", "A1"] {
            g.add_vertex(id, DescentSet::empty(5).unwrap()).unwrap();
        }
        for (a, b) in [("T1", "a1"), ("T1", "A1"), ("a1", "A2"), ("A1", "a2"), ("A2", "T2"), ("a2", "T2")] {
            g.add_edge_by_id(4, a, b).unwrap();
        }
        assert!(!g.is_matching(4));
        assert_eq!(max_special_edge_need(&g, &[4], 4).unwrap(), 3);
    }

    #[test]
    fn special_need_without_special_edges() {
        // d_2 and d_0 coincide on SST(2,1)
        let g = sst_graph(&strict(&[2, 1]), true).unwrap();
        assert_eq!(max_special_edge_need(&g, &[0, 2], 2).unwrap(), 0);
        assert_eq!(max_special_edge_need(&g, &[2], 2).unwrap(), 1);
        let g = sst_graph(&strict(&[2]), true).unwrap();
        let mut h = DeGraph::new(2, [0, 5]);
        for v in 0..g.len() {
            h.add_vertex(g.id(v), g.des(v)).unwrap();
        }
        h.add_edge(0, 0, 1).unwrap();
        assert_eq!(max_special_edge_need(&h, &[0, 5], 5).unwrap(), 0);
    }

    #[test]
    fn two_special_edges_suffice() {
        for n in 2..=6 {
            for g in strict_partitions_of(n).unwrap() {
                let graph = sst_graph(&g, true).unwrap();
                let labels: Vec<Label> = graph.labels().iter().copied().collect();
                let special = if n >= 3 { n as Label - 1 } else { 0 };
                assert!(max_special_edge_need(&graph, &labels, special).unwrap() <= 2, "{g}");
            }
        }
    }

    #[test]
    fn isomorphism_and_rigidity() {
        let g4 = sst_graph(&strict(&[4]), true).unwrap();
        let g31 = sst_graph(&strict(&[3, 1]), true).unwrap();
        assert!(is_descent_edge_isomorphic(&g4, &g31).is_none());
        let w = is_descent_edge_isomorphic(&g31, &g31).unwrap();
        assert_eq!(w, (0..8).collect::<Vec<_>>());
        assert_eq!(automorphisms(&g31).len(), 1);
        let e = DeGraph::new(0, []);
        assert_eq!(is_descent_edge_isomorphic(&e, &e), Some(vec![]));
    }

    #[test]
    fn dot_export() {
        let g = sst_graph(&strict(&[3, 1]), true).unwrap();
        let dot = to_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 10);
        assert_eq!(dot.matches("[label=\"1,").count(), 8);
        assert!(dot.contains("color=violet"));
        assert_eq!(to_dot(&DeGraph::new(0, [])), "graph {}\n");
        let g = sst_graph(&strict(&[4, 1]), true).unwrap();
        let dot = to_dot(&g);
        assert_eq!(dot.matches("[label=\"4\", color=magenta]").count(), 8);
    }

    #[test]
    fn unique_superstandard_vertex() {
        for n in 1..=7 {
            for g in strict_partitions_of(n).unwrap() {
                let graph = sst_graph(&g, true).unwrap();
                let target = superstandard(&g).descents().unwrap();
                assert_eq!((0..graph.len()).filter(|&v| graph.des(v) == target).count(), 1, "{g}");
            }
        }
    }

    #[test]
    fn build_graph_reports_escaping_involution() {
        let objects = [1u32, 2, 3];
        let f = |x: &u32| Ok(x % 3 + 1);
        let err = build_graph(2, &objects, |_| DescentSet::empty(2), &[(2, &f)]).unwrap_err();
        assert!(matches!(err, Error::Construction { label: 2, .. }), "{err}");
        let g = |x: &u32| Ok(x + 10);
        let err = build_graph(2, &objects, |_| DescentSet::empty(2), &[(3, &g)]).unwrap_err();
        assert!(matches!(err, Error::Construction { label: 3, .. }), "{err}");
    }
}
