//! Subcommands: `tableaux`, `graph`, `expand`, `product`, `verify`,
//! `search-unique` and `repro`.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qdeg_core::axioms::{check_deg, check_queer_deg, unique_extension_search, AxiomReport};
use qdeg_core::degraph::{components, concat_graph, sst_graph, syt_graph, syt_union_graph, to_dot, DeGraph};
use qdeg_core::product::{structure_constants, StructureTable};
use qdeg_core::qsym::{decompose, schur_f, schur_p_f, schur_q_f, Basis, QSymF};
use qdeg_core::shapes::{strict_partitions_with_empty, Partition, StrictPartition};
use qdeg_core::tableaux::{generate_concat, generate_sst, generate_syt, generate_unmarked_sst};

use crate::fixtures::{graph_fixture, vertices_by_reading_word};
use crate::io::{self, ConcatRecord, GraphFile, TableauRecord};
use crate::repro;

/// Largest size accepted without `--allow-large`.
pub const DEFAULT_SIZE_LIMIT: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "qdeg", version, about = "Queer dual equivalence graphs and Schur P expansions")]
pub struct Cli {
    /// Permit objects of size above 12.
    #[arg(long, global = true)]
    pub allow_large: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate a family of tableaux.
    Tableaux(TableauxArgs),
    /// Build an involution graph and export it.
    Graph(GraphArgs),
    /// Expand s, P or Q in the F, s or P basis.
    Expand(ExpandArgs),
    /// Structure constants of products of Schur P functions.
    Product(ProductArgs),
    /// Audit the axioms on a built-in or file-supplied graph.
    Verify(VerifyArgs),
    /// Search for every queer involution extending a dual equivalence.
    SearchUnique(SearchArgs),
    /// Run the reproduction suite.
    Repro(ReproArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct FamilyArgs {
    /// Signed standard tableaux of a strict shape, e.g. 3,1.
    #[arg(long, value_name = "SHAPE")]
    pub sst: Option<StrictPartition>,
    /// Standard Young tableaux of a shape.
    #[arg(long, value_name = "SHAPE")]
    pub syt: Option<Partition>,
    /// Concatenated shape: two strict shapes, either may be "".
    #[arg(long, num_args = 2, value_names = ["LEFT", "RIGHT"])]
    pub concat: Option<Vec<StrictPartition>>,
    /// Unmarked signed standard tableaux of a strict shape.
    #[arg(long, value_name = "SHAPE")]
    pub unmarked: Option<StrictPartition>,
}

impl FamilyArgs {
    fn size(&self) -> usize {
        if let Some(s) = &self.sst {
            s.size()
        } else if let Some(s) = &self.syt {
            s.size()
        } else if let Some(c) = &self.concat {
            c.iter().map(StrictPartition::size).sum()
        } else {
            self.unmarked.as_ref().map_or(0, StrictPartition::size)
        }
    }
}

#[derive(Debug, Args)]
pub struct TableauxArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Structured JSON instead of a text table.
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    #[arg(long, value_name = "SHAPE")]
    pub sst: Option<StrictPartition>,
    #[arg(long, value_name = "SHAPE")]
    pub syt: Option<Partition>,
    #[arg(long, num_args = 2, value_names = ["LEFT", "RIGHT"])]
    pub concat: Option<Vec<StrictPartition>>,
    /// A named fixture, e.g. rejected-31 or cover-lift.
    #[arg(long, value_name = "NAME")]
    pub fixture: Option<String>,
    /// A graph file in the structured schema.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Add the queer involution (label 0).
    #[arg(long)]
    pub queer: bool,
    /// Write Graphviz DOT here.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    /// Write the structured graph here.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Where the summary goes (stdout by default).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExpandBasis {
    #[value(name = "F")]
    F,
    #[value(name = "s")]
    S,
    #[value(name = "P")]
    P,
}

#[derive(Debug, Args)]
#[group(id = "function", required = true, multiple = false)]
pub struct FunctionArgs {
    /// Schur function s_λ.
    #[arg(long = "s", value_name = "SHAPE")]
    pub schur: Option<Partition>,
    /// Schur P function.
    #[arg(long = "P", value_name = "SHAPE")]
    pub schur_p: Option<StrictPartition>,
    /// Schur Q function.
    #[arg(long = "Q", value_name = "SHAPE")]
    pub schur_q: Option<StrictPartition>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub function: FunctionArgs,
    #[arg(long, value_enum, default_value = "F")]
    pub basis: ExpandBasis,
    /// CSV rows (shape, coefficient) instead of text.
    #[arg(long)]
    pub csv: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    /// Left strict shape.
    #[arg(required_unless_present = "upto")]
    pub gamma: Option<StrictPartition>,
    /// Right strict shape ("" for the empty shape).
    #[arg(required_unless_present = "upto")]
    pub delta: Option<StrictPartition>,
    /// Every ordered pair of total size 1..=N instead.
    #[arg(long, value_name = "N", conflicts_with_all = ["gamma", "delta"])]
    pub upto: Option<usize>,
    #[arg(long)]
    pub csv: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Queer audit when label 0 is present, plain otherwise.
    Auto,
    Deg,
    Queer,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: Mode,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SearchSource {
    /// Use the shapes λ with a nonzero coefficient in the Schur expansion of P_γ.
    #[arg(long = "P", value_name = "SHAPE")]
    pub schur_p: Option<StrictPartition>,
    /// Explicit shapes, repeated.
    #[arg(long = "shape", value_name = "SHAPE")]
    pub shapes: Vec<Partition>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub source: SearchSource,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// Run only these criteria.
    #[arg(long, value_name = "ID")]
    pub only: Vec<u8>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs one invocation. Audit and suite failures give exit status 1.
pub fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let guard = SizeGuard(cli.allow_large);
    match cli.command {
        Command::Tableaux(a) => tableaux(a, guard),
        Command::Graph(a) => graph(a, guard),
        Command::Expand(a) => expand(a, guard),
        Command::Product(a) => product(a, guard),
        Command::Verify(a) => verify(a, guard),
        Command::SearchUnique(a) => search(a, guard),
        Command::Repro(a) => repro_cmd(a),
    }
}

#[derive(Debug, Clone, Copy)]
struct SizeGuard(bool);

impl SizeGuard {
    fn check(self, n: usize) -> anyhow::Result<()> {
        if n > DEFAULT_SIZE_LIMIT && !self.0 {
            bail!("size {n} exceeds {DEFAULT_SIZE_LIMIT}; pass --allow-large to proceed");
        }
        Ok(())
    }
}

fn tableaux(a: TableauxArgs, guard: SizeGuard) -> anyhow::Result<ExitCode> {
    guard.check(a.family.size())?;
    let f = &a.family;
    let text = if let Some(s) = f.sst.as_ref().or(f.unmarked.as_ref()) {
        let list = if f.sst.is_some() { generate_sst(s) } else { generate_unmarked_sst(s) };
        if a.json {
            io::to_json_lines(&list.iter().map(TableauRecord::from_sst).collect::<Vec<_>>())
        } else {
            let mut out = String::from("tableau\tdescents\tword\n");
            for t in &list {
                let _ = writeln!(out, "{t}\t{}\t{}", t.descents()?, t.hook_reading_word());
            }
            out
        }
    } else if let Some(l) = &f.syt {
        let list = generate_syt(l);
        if a.json {
            io::to_json_lines(&list.iter().map(TableauRecord::from_syt).collect::<Vec<_>>())
        } else {
            let mut out = String::from("tableau\tdescents\tword\n");
            for t in &list {
                let _ = writeln!(out, "{t}\t{}\t{}", t.descents(), t.row_reading_word());
            }
            out
        }
    } else {
        let c = f.concat.as_ref().expect("one family is required");
        let list = generate_concat(&c[0], &c[1]);
        if a.json {
            io::to_json_lines(&list.iter().map(ConcatRecord::from_concat).collect::<Vec<_>>())
        } else {
            let mut out = String::from("tableau\tdescents\tword\n");
            for t in &list {
                let _ = writeln!(out, "{t}\t{}\t{}", t.descents(), t.hook_reading_word());
            }
            out
        }
    };
    io::emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

/// The graph named by `src`; `queer` adds label 0 to built families, and to
/// files whose edges never use it.
fn load_graph(src: &GraphSource, queer: bool, guard: SizeGuard) -> anyhow::Result<DeGraph> {
    if let Some(s) = &src.sst {
        guard.check(s.size())?;
        return Ok(sst_graph(s, queer)?);
    }
    if let Some(l) = &src.syt {
        guard.check(l.size())?;
        return Ok(syt_graph(l)?);
    }
    if let Some(c) = &src.concat {
        guard.check(c[0].size() + c[1].size())?;
        return Ok(concat_graph(&c[0], &c[1], queer)?);
    }
    if let Some(name) = &src.fixture {
        return graph_fixture(name);
    }
    let path = src.file.as_ref().expect("one source is required");
    let file = GraphFile::read(path)?;
    file.to_graph(queer || file.uses_label(0)).with_context(|| format!("building graph from {}", path.display()))
}

fn summary(g: &DeGraph) -> String {
    let mut out = format!("n={} vertices={} edges={}", g.degree(), g.len(), g.edge_count());
    for &l in g.labels() {
        let _ = write!(out, " label{l}={}", g.label_edge_count(l));
    }
    let labels: Vec<_> = g.labels().iter().copied().collect();
    if let Ok(c) = components(g, &labels) {
        let _ = write!(out, " components={}", c.len());
    }
    out.push('\n');
    out
}

fn graph(a: GraphArgs, guard: SizeGuard) -> anyhow::Result<ExitCode> {
    let g = load_graph(&a.source, a.queer, guard)?;
    if let Some(p) = &a.dot {
        io::emit(Some(p), &to_dot(&g))?;
    }
    if let Some(p) = &a.json {
        io::emit(Some(p), &GraphFile::from_graph(&g).to_json())?;
    }
    io::emit(a.out.as_deref(), &summary(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn expand(a: ExpandArgs, guard: SizeGuard) -> anyhow::Result<ExitCode> {
    let fa = &a.function;
    let (name, f): (String, QSymF) = if let Some(l) = &fa.schur {
        guard.check(l.size())?;
        (format!("s({l})"), schur_f(l))
    } else if let Some(g) = &fa.schur_p {
        guard.check(g.size())?;
        (format!("P({g})"), schur_p_f(g))
    } else {
        let g = fa.schur_q.as_ref().expect("one function is required");
        guard.check(g.size())?;
        (format!("Q({g})"), schur_q_f(g))
    };
    let text = match a.basis {
        ExpandBasis::F if a.csv => io::f_expansion_csv(&f)?,
        ExpandBasis::F => format!("{name} = {f}\n"),
        basis => {
            let b = if basis == ExpandBasis::S { Basis::Schur } else { Basis::SchurP };
            let e = decompose(&f, b).with_context(|| format!("expanding {name}"))?;
            if a.csv {
                io::expansion_csv(&e)?
            } else {
                let mut out = format!("{name} = {e}\nshape\tcoefficient\n");
                for (p, c) in e.terms() {
                    let _ = writeln!(out, "{p}\t{c}");
                }
                out
            }
        }
    };
    io::emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn product(a: ProductArgs, guard: SizeGuard) -> anyhow::Result<ExitCode> {
    let mut tables: Vec<StructureTable> = Vec::new();
    if let Some(n) = a.upto {
        guard.check(n)?;
        for total in 1..=n {
            for left in 0..=total {
                for g in strict_partitions_with_empty(left) {
                    for d in strict_partitions_with_empty(total - left) {
                        tables.push(structure_constants(&g, &d)?);
                    }
                }
            }
        }
    } else {
        let (g, d) = (a.gamma.expect("required"), a.delta.expect("required"));
        guard.check(g.size() + d.size())?;
        tables.push(structure_constants(&g, &d)?);
    }
    let text = if a.csv {
        io::structure_csv(&tables)?
    } else {
        tables.iter().map(|t| format!("{t}\n")).collect()
    };
    io::emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(a: VerifyArgs, guard: SizeGuard) -> anyhow::Result<ExitCode> {
    let builds_queer = a.source.sst.is_some() || a.source.concat.is_some();
    let g = load_graph(&a.source, a.mode == Mode::Queer || (a.mode == Mode::Auto && builds_queer), guard)?;
    let queer = match a.mode {
        Mode::Queer => true,
        Mode::Deg => false,
        Mode::Auto => g.labels().contains(&0),
    };
    let report: AxiomReport = if queer { check_queer_deg(&g) } else { check_deg(&g) };
    io::emit(a.out.as_deref(), &report.to_string())?;
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn search(a: SearchArgs, guard: SizeGuard) -> anyhow::Result<ExitCode> {
    let shapes: Vec<Partition> = if let Some(g) = &a.source.schur_p {
        guard.check(g.size())?;
        let e = decompose(&schur_p_f(g), Basis::Schur)?;
        let mut out = Vec::new();
        for (l, c) in e.terms() {
            if *c != 1.into() {
                bail!("P({g}) = {e} has a coefficient other than 1; list the shapes with --shape");
            }
            out.push(l.clone());
        }
        out
    } else {
        a.source.shapes.clone()
    };
    if let Some(s) = shapes.iter().map(Partition::size).max() {
        guard.check(s)?;
    }
    let g = syt_union_graph(&shapes)?;
    let found = unique_extension_search(&g)?;
    let words: std::collections::BTreeMap<usize, String> =
        vertices_by_reading_word(&g)?.into_iter().map(|(w, v)| (v, w)).collect();
    let names: Vec<String> = shapes.iter().map(|l| format!("SYT({l})")).collect();
    let mut out = format!("{}: {} candidate(s)\n", names.join(" + "), found.len());
    for (k, pairs) in found.iter().enumerate() {
        let _ = writeln!(out, "candidate {}:", k + 1);
        for &(x, y) in pairs {
            let _ = writeln!(out, "  {} -- {}", words[&x], words[&y]);
        }
    }
    io::emit(a.out.as_deref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

fn repro_cmd(a: ReproArgs) -> anyhow::Result<ExitCode> {
    let results = if a.only.is_empty() {
        repro::run_all()
    } else {
        a.only.iter().map(|&id| repro::run_criterion(id)).collect::<anyhow::Result<Vec<_>>>()?
    };
    io::emit(a.out.as_deref(), &repro::render(&results))?;
    Ok(if results.iter().all(|r| r.passed) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
