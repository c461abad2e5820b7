//! Auditors for the dual equivalence and queer dual equivalence axioms,
//! classification of equivalence classes by Schur P shape, and the
//! exhaustive search for queer involutions extending a dual equivalence.
//!
//! Local conditions are checked on windows `2 <= h <= i <= n-1` with
//! `i - h <= 3`; the path condition is checked for `k = 3, …, n` on classes
//! generated by labels `{0, 2, …, k-1}` with `k-1` as the counted label.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::degraph::{components, descent_multiset, special_need_witness, ComponentClass, DeGraph, Label};
use crate::qsym::{decompose, Basis, QSymF};
use crate::shapes::{partitions_of, strict_partitions_with_empty, Partition, StrictPartition};
use crate::tableaux::{generate_sst, generate_syt, DescentSet};
use crate::{Error, Result};

/// Largest degree accepted by [`unique_extension_search`].
pub const MAX_SEARCH_DEGREE: usize = 5;

/// Failures kept per report; the rest are only counted.
const MAX_RECORDED: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// The input is not a family of involutions with the expected labels.
    Malformed,
    /// Local Schur condition on the window `h..=i`.
    DegLocal { h: usize, i: usize },
    /// `φ_i φ_j = φ_j φ_i` for `|i - j| >= 3`.
    DegCommute { i: usize, j: usize },
    /// Local Schur P condition for `ψ_0, ψ_2, …, ψ_i`.
    QueerLocal { i: usize },
    /// The queer involution must be fixed-point-free and toggle `1 ∈ Des`.
    QueerFixedPointFree,
    /// `ψ_0 ψ_i = ψ_i ψ_0` for `i > 3`.
    QueerCommute { i: usize },
    /// At most two `k-1` edges between members of a class.
    QueerPaths { k: usize },
}

impl Condition {
    /// The axiom the condition belongs to, e.g. `"(i)"`.
    pub fn roman(&self) -> &'static str {
        match self {
            Condition::Malformed => "input",
            Condition::DegLocal { .. } | Condition::QueerLocal { .. } | Condition::QueerFixedPointFree => "(i)",
            Condition::DegCommute { .. } | Condition::QueerCommute { .. } => "(ii)",
            Condition::QueerPaths { .. } => "(iii)",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Malformed => f.write_str("malformed input"),
            Condition::DegLocal { h, i } => write!(f, "dual equivalence (i), window h={h} i={i}"),
            Condition::DegCommute { i, j } => write!(f, "dual equivalence (ii), i={i} j={j}"),
            Condition::QueerLocal { i } => write!(f, "queer (i), i={i}"),
            Condition::QueerFixedPointFree => f.write_str("queer (i), i=1, fixed-point-free"),
            Condition::QueerCommute { i } => write!(f, "queer (ii), i={i}"),
            Condition::QueerPaths { k } => write!(f, "queer (iii), k={k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub condition: Condition,
    pub witnesses: Vec<String>,
    pub explanation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub title: String,
    pub notes: Vec<String>,
    pub failures: Vec<Failure>,
    /// Failures found beyond the recorded ones.
    pub omitted: usize,
}

impl AxiomReport {
    fn new(title: String) -> Self {
        AxiomReport { title, ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fails(&self, pred: impl Fn(&Condition) -> bool) -> bool {
        self.failures.iter().any(|f| pred(&f.condition))
    }

    fn fail(&mut self, condition: Condition, witnesses: Vec<String>, explanation: String) {
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(Failure { condition, witnesses, explanation });
        } else {
            self.omitted += 1;
        }
    }

    fn absorb(&mut self, other: AxiomReport) {
        for f in other.failures {
            self.fail(f.condition, f.witnesses, f.explanation);
        }
        self.omitted += other.omitted;
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        writeln!(f, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })?;
        for fl in &self.failures {
            writeln!(f, "- [{}] {}", fl.condition, fl.explanation)?;
            if !fl.witnesses.is_empty() {
                writeln!(f, "  witnesses: {}", fl.witnesses.join(" "))?;
            }
        }
        if self.omitted > 0 {
            writeln!(f, "({} further failures not listed)", self.omitted)?;
        }
        Ok(())
    }
}

const WINDOW_NOTE: &str = "local windows use 2 <= h <= i <= n-1 with i-h <= 3";
const PATH_NOTE: &str = "path condition checked for k = 3..n on classes of {0,2,..,k-1}, counting k-1 edges";

/// Sorted descent multisets of `SYT(λ)`, `λ ⊢ m`.
fn schur_multisets(m: usize) -> Vec<(Partition, Vec<DescentSet>)> {
    partitions_of(m)
        .into_iter()
        .map(|l| {
            let mut ds: Vec<DescentSet> = generate_syt(&l).iter().map(|t| t.descents()).collect();
            ds.sort();
            (l, ds)
        })
        .collect()
}

/// Sorted descent multisets of `SST(γ)`, `γ ⊢ m` strict.
fn schur_p_multisets(m: usize) -> Vec<(StrictPartition, Vec<DescentSet>)> {
    strict_partitions_with_empty(m)
        .into_iter()
        .map(|g| {
            let mut ds: Vec<DescentSet> =
                generate_sst(&g).iter().map(|s| s.descents().expect("standard tableau")).collect();
            ds.sort();
            (g, ds)
        })
        .collect()
}

fn ids(g: &DeGraph, class: &[usize], limit: usize) -> Vec<String> {
    let mut out: Vec<String> = class.iter().take(limit).map(|&v| g.id(v).to_string()).collect();
    if class.len() > limit {
        out.push(format!("(+{} more)", class.len() - limit));
    }
    out
}

fn describe(ds: &[DescentSet], basis: Basis) -> String {
    let n = ds.first().map_or(0, DescentSet::degree);
    let f = QSymF::from_descents(n, ds.iter().copied()).expect("uniform degree");
    match decompose(&f, basis) {
        Ok(e) => format!("{f} = {e}"),
        Err(_) => format!("{f}, not in the span of {} functions", basis.name()),
    }
}

fn require_labels(g: &DeGraph, needed: impl Iterator<Item = Label>, report: &mut AxiomReport) -> bool {
    let missing: Vec<Label> = needed.filter(|l| !g.labels().contains(l)).collect();
    if !missing.is_empty() {
        report.fail(Condition::Malformed, vec![], format!("missing labels {missing:?}"));
        return false;
    }
    if let Err(e) = g.require_matchings() {
        report.fail(Condition::Malformed, vec![], e.to_string());
        return false;
    }
    true
}

/// Audits the dual equivalence axioms on labels `2, …, n-1`.
pub fn check_deg(g: &DeGraph) -> AxiomReport {
    let n = g.degree();
    let mut report = AxiomReport::new(format!("dual equivalence audit: n={n}, {} vertices", g.len()));
    report.notes.push(WINDOW_NOTE.into());
    if !require_labels(g, 2..n.max(2) as Label, &mut report) {
        return report;
    }
    let mut cache: BTreeMap<usize, Vec<(Partition, Vec<DescentSet>)>> = BTreeMap::new();
    for h in 2..n {
        for i in h..n.min(h + 4) {
            let labels: Vec<Label> = (h as Label..=i as Label).collect();
            let size = i - h + 3;
            let targets = cache.entry(size).or_insert_with(|| schur_multisets(size));
            for class in components(g, &labels).expect("labels checked") {
                let mut ds: Vec<DescentSet> = class
                    .iter()
                    .map(|&v| g.des(v).restrict(h - 1, i + 1).expect("window inside degree"))
                    .collect();
                ds.sort();
                if !targets.iter().any(|(_, t)| *t == ds) {
                    report.fail(
                        Condition::DegLocal { h, i },
                        ids(g, &class, 8),
                        format!(
                            "class of {} ({} vertices) has restricted generating function {}",
                            g.id(class[0]),
                            class.len(),
                            describe(&ds, Basis::Schur)
                        ),
                    );
                }
            }
        }
    }
    for i in 2..n {
        for j in i + 3..n {
            for v in 0..g.len() {
                let a = g.apply(j as Label, g.apply(i as Label, v).expect("matching")).expect("matching");
                let b = g.apply(i as Label, g.apply(j as Label, v).expect("matching")).expect("matching");
                if a != b {
                    report.fail(
                        Condition::DegCommute { i, j },
                        vec![g.id(v).to_string()],
                        format!("φ_{j}φ_{i} sends it to {} but φ_{i}φ_{j} to {}", g.id(a), g.id(b)),
                    );
                }
            }
        }
    }
    report
}

/// Audits the queer dual equivalence axioms: the dual equivalence axioms
/// on labels `2, …, n-1`, then conditions (i)–(iii) involving label 0.
pub fn check_queer_deg(g: &DeGraph) -> AxiomReport {
    let n = g.degree();
    let mut report = AxiomReport::new(format!("queer dual equivalence audit: n={n}, {} vertices", g.len()));
    report.notes.push(WINDOW_NOTE.into());
    report.notes.push(PATH_NOTE.into());
    let needed = (n >= 2).then_some(0).into_iter().chain(2..n.max(2) as Label);
    if !require_labels(g, needed, &mut report) {
        return report;
    }
    report.absorb(check_deg(g));

    if n >= 2 {
        for v in 0..g.len() {
            let w = g.apply(0, v).expect("matching");
            if w == v {
                report.fail(
                    Condition::QueerFixedPointFree,
                    vec![g.id(v).to_string()],
                    "ψ_0 fixes this vertex; the only degree 2 Schur P function has two terms".into(),
                );
            } else if g.des(v).contains(1) == g.des(w).contains(1) {
                report.fail(
                    Condition::QueerFixedPointFree,
                    vec![g.id(v).to_string(), g.id(w).to_string()],
                    "ψ_0 does not toggle membership of 1 in the descent set".into(),
                );
            }
        }
    }

    for i in 1..n.min(4) {
        let labels: Vec<Label> = core::iter::once(0).chain(2..=i as Label).collect();
        let targets = schur_p_multisets(i + 1);
        for class in components(g, &labels).expect("labels checked") {
            let mut ds: Vec<DescentSet> =
                class.iter().map(|&v| g.des(v).truncate(i).expect("i < n")).collect();
            ds.sort();
            if !targets.iter().any(|(_, t)| *t == ds) {
                report.fail(
                    Condition::QueerLocal { i },
                    ids(g, &class, 8),
                    format!(
                        "class of {} ({} vertices) has generating function {}",
                        g.id(class[0]),
                        class.len(),
                        describe(&ds, Basis::SchurP)
                    ),
                );
            }
        }
    }

    for i in 4..n {
        for v in 0..g.len() {
            let a = g.apply(0, g.apply(i as Label, v).expect("matching")).expect("matching");
            let b = g.apply(i as Label, g.apply(0, v).expect("matching")).expect("matching");
            if a != b {
                report.fail(
                    Condition::QueerCommute { i },
                    vec![g.id(v).to_string()],
                    format!("ψ_0ψ_{i} sends it to {} but ψ_{i}ψ_0 to {}", g.id(a), g.id(b)),
                );
            }
        }
    }

    for k in 3..=n {
        let labels: Vec<Label> = core::iter::once(0).chain(2..k as Label).collect();
        let special = (k - 1) as Label;
        if let Some(w) = special_need_witness(g, &labels, special).expect("labels checked") {
            if w.need > 2 {
                report.fail(
                    Condition::QueerPaths { k },
                    vec![g.id(w.from).to_string(), g.id(w.to).to_string()],
                    format!("connecting these needs {} edges labeled {special}, more than 2", w.need),
                );
            }
        }
    }
    report
}

/// Matches full `{0, 2, …, n-1}` classes against `SST(δ)` by descent multiset.
#[derive(Debug, Clone)]
pub struct Classifier {
    n: usize,
    targets: Vec<(StrictPartition, Vec<DescentSet>)>,
}

impl Classifier {
    pub fn new(n: usize) -> Self {
        Classifier { n, targets: schur_p_multisets(n) }
    }

    pub fn classify(&self, class: &[usize], g: &DeGraph) -> Result<StrictPartition> {
        if g.degree() != self.n {
            return Err(Error::Inconsistent(format!("classifier for n={} given a degree-{} graph", self.n, g.degree())));
        }
        let ds = descent_multiset(class, g);
        self.targets
            .iter()
            .find(|(_, t)| *t == ds)
            .map(|(shape, _)| shape.clone())
            .ok_or_else(|| {
                Error::NotQueerClass(format!(
                    "class of {} ({} vertices) has generating function {}",
                    class.first().map_or("nothing", |&v| g.id(v)),
                    class.len(),
                    describe(&ds, Basis::SchurP)
                ))
            })
    }
}

/// The strict partition `δ` whose `SST(δ)` has the same descent multiset as `class`.
pub fn classify_class(class: &[usize], g: &DeGraph) -> Result<StrictPartition> {
    Classifier::new(g.degree()).classify(class, g)
}

/// Matches `{2, …, n-1}` classes against `SYT(λ)` by descent multiset.
pub fn classify_schur_class(class: &[usize], g: &DeGraph, targets: &[(Partition, Vec<DescentSet>)]) -> Result<Partition> {
    let ds = descent_multiset(class, g);
    targets.iter().find(|(_, t)| *t == ds).map(|(l, _)| l.clone()).ok_or_else(|| {
        Error::Inconsistent(format!(
            "class of {} has generating function {}",
            class.first().map_or("nothing", |&v| g.id(v)),
            describe(&ds, Basis::Schur)
        ))
    })
}

pub(crate) fn schur_targets(n: usize) -> Vec<(Partition, Vec<DescentSet>)> {
    schur_multisets(n)
}

/// A copy of `g` with label 0 given by `pairs`.
pub fn with_queer_involution(g: &DeGraph, pairs: &[(usize, usize)]) -> Result<DeGraph> {
    let mut labels: Vec<Label> = g.labels().iter().copied().collect();
    if !labels.contains(&0) {
        labels.insert(0, 0);
    }
    let mut out = DeGraph::new(g.degree(), labels.iter().copied());
    for v in 0..g.len() {
        out.add_vertex(g.id(v), g.des(v))?;
    }
    for &l in g.labels() {
        if l == 0 {
            continue;
        }
        for (a, b) in g.edges(l)? {
            out.add_edge(l, a, b)?;
        }
    }
    for &(a, b) in pairs {
        out.add_edge(0, a, b)?;
    }
    Ok(out)
}

/// Every fixed-point-free involution `ψ_0` pairing vertices whose descent
/// sets differ in membership of 1 such that the extended graph passes
/// [`check_queer_deg`]. Each candidate is a sorted list of pairs.
///
/// Pairings are forced to commute with the existing `ψ_i`, `i >= 4`, during
/// the search.
pub fn unique_extension_search(g: &DeGraph) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = g.degree();
    if n > MAX_SEARCH_DEGREE {
        return Err(Error::Capacity(format!("extension search is limited to n <= {MAX_SEARCH_DEGREE}, got {n}")));
    }
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    g.require_matchings()?;
    let base = check_deg(g);
    if !base.passed() {
        return Err(Error::Inconsistent(format!("existing involutions are not a dual equivalence:\n{base}")));
    }
    let commuting: Vec<Label> = g.labels().iter().copied().filter(|&l| l >= 4).collect();
    let mut partner = vec![usize::MAX; g.len()];
    let mut out = Vec::new();
    search(g, &commuting, &mut partner, &mut out)?;
    out.sort();
    Ok(out)
}

fn search(g: &DeGraph, commuting: &[Label], partner: &mut Vec<usize>, out: &mut Vec<Vec<(usize, usize)>>) -> Result<()> {
    let Some(x) = partner.iter().position(|&p| p == usize::MAX) else {
        let pairs: Vec<(usize, usize)> =
            (0..partner.len()).filter(|&v| v < partner[v]).map(|v| (v, partner[v])).collect();
        if check_queer_deg(&with_queer_involution(g, &pairs)?).passed() {
            out.push(pairs);
        }
        return Ok(());
    };
    for y in 0..g.len() {
        if partner[y] != usize::MAX || y == x || g.des(x).contains(1) == g.des(y).contains(1) {
            continue;
        }
        let saved = partner.clone();
        if assign(g, commuting, partner, x, y)? {
            search(g, commuting, partner, out)?;
        }
        *partner = saved;
    }
    Ok(())
}

/// Pairs `x` with `y` and closes under `ψ_0 ψ_i = ψ_i ψ_0`; false on conflict.
fn assign(g: &DeGraph, commuting: &[Label], partner: &mut [usize], x: usize, y: usize) -> Result<bool> {
    let mut stack = vec![(x, y)];
    while let Some((a, b)) = stack.pop() {
        match (partner[a], partner[b]) {
            (pa, pb) if pa == b && pb == a => continue,
            (usize::MAX, usize::MAX) if a != b && g.des(a).contains(1) != g.des(b).contains(1) => {
                partner[a] = b;
                partner[b] = a;
            }
            _ => return Ok(false),
        }
        for &l in commuting {
            stack.push((g.apply(l, a)?, g.apply(l, b)?));
        }
    }
    Ok(true)
}

/// Tally of a graph's full components by classified shape.
pub fn tally_classes(g: &DeGraph, labels: &[Label]) -> Result<BTreeMap<StrictPartition, usize>> {
    let classifier = Classifier::new(g.degree());
    let mut tally = BTreeMap::new();
    for class in components(g, labels)? {
        *tally.entry(classifier.classify(&class, g)?).or_insert(0) += 1;
    }
    Ok(tally)
}

/// Components of `g` under every label.
pub fn full_classes(g: &DeGraph) -> Vec<ComponentClass> {
    let labels: Vec<Label> = g.labels().iter().copied().collect();
    components(g, &labels).expect("own labels")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degraph::{sst_graph, syt_graph, syt_union_graph};
    use crate::shapes::{partition, strict, strict_partitions_of};

    fn union_syt(shapes: &[&[usize]]) -> DeGraph {
        let shapes: Vec<Partition> = shapes.iter().map(|s| partition(s)).collect();
        syt_union_graph(&shapes).unwrap()
    }

    #[test]
    fn syt_graphs_pass() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                let r = check_deg(&syt_graph(&l).unwrap());
                assert!(r.passed(), "{l}\n{r}");
            }
        }
    }

    #[test]
    fn sst_graphs_pass() {
        for n in 1..=6 {
            for g in strict_partitions_of(n).unwrap() {
                let graph = sst_graph(&g, true).unwrap();
                let r = check_queer_deg(&graph);
                assert!(r.passed(), "{g}\n{r}");
                let r = check_deg(&sst_graph(&g, false).unwrap());
                assert!(r.passed(), "{g}\n{r}");
            }
        }
    }

    #[test]
    fn deleted_edge_breaks_local_condition() {
        let full = sst_graph(&strict(&[3, 1]), false).unwrap();
        let (a, b) = full.edges(2).unwrap().next().unwrap();
        let mut g = DeGraph::new(4, [2, 3]);
        for v in 0..full.len() {
            g.add_vertex(full.id(v), full.des(v)).unwrap();
        }
        for l in [2, 3] {
            for e in full.edges(l).unwrap() {
                if !(l == 2 && e == (a, b)) {
                    g.add_edge(l, e.0, e.1).unwrap();
                }
            }
        }
        let r = check_deg(&g);
        assert!(r.fails(|c| matches!(c, Condition::DegLocal { .. })), "{r}");
    }

    #[test]
    fn fixed_point_fails_at_one() {
        let mut g = DeGraph::new(2, [0]);
        g.add_vertex("x", DescentSet::empty(2).unwrap()).unwrap();
        g.add_vertex("y", DescentSet::new(2, [1]).unwrap()).unwrap();
        let r = check_queer_deg(&g);
        assert!(r.fails(|c| *c == Condition::QueerFixedPointFree), "{r}");
        assert!(r.fails(|c| *c == Condition::QueerLocal { i: 1 }), "{r}");
    }

    #[test]
    fn classification() {
        let g = sst_graph(&strict(&[3, 1]), true).unwrap();
        let all: Vec<usize> = (0..g.len()).collect();
        assert_eq!(classify_class(&all, &g).unwrap(), strict(&[3, 1]));
        let err = classify_class(&all[..3], &g).unwrap_err();
        assert!(matches!(err, Error::NotQueerClass(_)));
    }

    #[test]
    fn extension_search_small_cases() {
        let g = union_syt(&[&[2], &[1, 1]]);
        assert_eq!(unique_extension_search(&g).unwrap().len(), 1);
        let g = union_syt(&[&[3], &[2, 1], &[1, 1, 1]]);
        assert_eq!(unique_extension_search(&g).unwrap().len(), 1);
        let g = union_syt(&[&[3, 1], &[2, 2], &[2, 1, 1]]);
        assert_eq!(unique_extension_search(&g).unwrap().len(), 1);
        let big = sst_graph(&strict(&[5, 1]), false).unwrap();
        assert!(matches!(unique_extension_search(&big), Err(Error::Capacity(_))));
    }
}
