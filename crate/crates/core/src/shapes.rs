//! Partitions, strict partitions and the cell geometry of their diagrams.
//!
//! Cells are `(row, col)` pairs, 1-indexed, with row 1 at the bottom. Row `r`
//! of a Young diagram occupies columns `1..=λ_r`; row `r` of a shifted diagram
//! occupies columns `r..=r+γ_r-1`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing sequence of positive integers. The empty partition is
/// allowed and has size 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn diagram(&self) -> BTreeSet<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
            .collect()
    }

    /// Reads a cell set back as a Young diagram, if it is one.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Option<Partition> {
        let rows = row_lengths(cells)?;
        for (r, &len) in rows.iter().enumerate() {
            if (1..=len).any(|c| !cells.contains(&Cell::new(r + 1, c))) {
                return None;
            }
        }
        Partition::new(rows).ok()
    }

    pub fn to_strict(&self) -> Option<StrictPartition> {
        StrictPartition::new(self.parts.clone()).ok()
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn to_partition(&self) -> Partition {
        Partition { parts: self.parts.clone() }
    }

    /// Cells `(r, c)` with `r <= c <= r + γ_r - 1`.
    pub fn shifted_diagram(&self) -> BTreeSet<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| {
                let r = i + 1;
                (r..r + len).map(move |c| Cell::new(r, c))
            })
            .collect()
    }

    /// Reads a cell set back as a shifted diagram, if it is one.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Option<StrictPartition> {
        let rows = row_lengths(cells)?;
        for (i, &len) in rows.iter().enumerate() {
            let r = i + 1;
            if (r..r + len).any(|c| !cells.contains(&Cell::new(r, c))) {
                return None;
            }
        }
        StrictPartition::new(rows).ok()
    }

    /// The partition whose diagram is the shifted diagram glued to its
    /// transpose along the main diagonal.
    pub fn sym_diagram(&self) -> Partition {
        let ell = self.parts.len();
        let arm = |j: usize| self.parts[j - 1] + j - 1;
        let height = if ell == 0 { 0 } else { arm(1) };
        let mut parts = Vec::with_capacity(height);
        for i in 1..=height {
            let p = if i <= ell {
                arm(i)
            } else {
                (1..=ell).filter(|&j| arm(j) >= i).count()
            };
            if p == 0 {
                break;
            }
            parts.push(p);
        }
        Partition { parts }
    }
}

fn row_lengths(cells: &BTreeSet<Cell>) -> Option<Vec<usize>> {
    let top = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let mut rows = vec![0usize; top];
    for c in cells {
        if c.row == 0 || c.col == 0 {
            return None;
        }
        rows[c.row - 1] += 1;
    }
    if rows.contains(&0) {
        return None;
    }
    Some(rows)
}

/// A diagram kind: Young (left-justified) or shifted.
pub trait Diagram: Sized {
    fn cells(&self) -> BTreeSet<Cell>;
    fn from_cell_set(cells: &BTreeSet<Cell>) -> Option<Self>;
}

impl Diagram for Partition {
    fn cells(&self) -> BTreeSet<Cell> {
        self.diagram()
    }
    fn from_cell_set(cells: &BTreeSet<Cell>) -> Option<Self> {
        Partition::from_cells(cells)
    }
}

impl Diagram for StrictPartition {
    fn cells(&self) -> BTreeSet<Cell> {
        self.shifted_diagram()
    }
    fn from_cell_set(cells: &BTreeSet<Cell>) -> Option<Self> {
        StrictPartition::from_cells(cells)
    }
}

/// Addable and removable cells, found by checking every candidate cell for
/// whether the modified cell set is still a diagram of the same kind.
pub fn boundary_cells<D: Diagram>(shape: &D) -> (BTreeSet<Cell>, BTreeSet<Cell>) {
    let cells = shape.cells();
    let max_row = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let max_col = cells.iter().map(|c| c.col).max().unwrap_or(0);

    let mut addable = BTreeSet::new();
    for row in 1..=max_row + 1 {
        for col in 1..=max_col + 1 {
            let cell = Cell::new(row, col);
            if cells.contains(&cell) {
                continue;
            }
            let mut grown = cells.clone();
            grown.insert(cell);
            if D::from_cell_set(&grown).is_some() {
                addable.insert(cell);
            }
        }
    }

    let mut removable = BTreeSet::new();
    for &cell in &cells {
        let mut shrunk = cells.clone();
        shrunk.remove(&cell);
        if D::from_cell_set(&shrunk).is_some() {
            removable.insert(cell);
        }
    }
    (addable, removable)
}

/// All strict partitions of `n` in decreasing lexicographic order.
pub fn strict_partitions_of(n: usize) -> Result<Vec<StrictPartition>> {
    if n == 0 {
        return Err(Error::EmptyInput("strict partitions of 0"));
    }
    Ok(strict_partitions_with_empty(n))
}

/// Like [`strict_partitions_of`], but `0` yields the single empty partition.
pub fn strict_partitions_with_empty(n: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    strict_rec(n, n, &mut current, &mut out);
    out.into_iter().map(|parts| StrictPartition { parts }).collect()
}

fn strict_rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        strict_rec(rest - p, p - 1, current, out);
        current.pop();
    }
}

/// All partitions of `n` in decreasing lexicographic order; `0` yields the
/// empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    weak_rec(n, n, &mut current, &mut out);
    out.into_iter().map(|parts| Partition { parts }).collect()
}

fn weak_rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        weak_rec(rest - p, p, current, out);
        current.pop();
    }
}

fn write_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {p:?} in shape {s:?}")))
        })
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.parts, f)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.parts, f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

/// Shorthand used throughout the tests: `strict(&[3, 1])`.
pub fn strict(parts: &[usize]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).expect("strict partition")
}

/// Shorthand for `Partition::new(parts.to_vec()).unwrap()`.
pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(list: &[(usize, usize)]) -> BTreeSet<Cell> {
        list.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn strict_partition_enumeration() {
        assert_eq!(strict_partitions_of(4).unwrap(), vec![strict(&[4]), strict(&[3, 1])]);
        assert_eq!(strict_partitions_of(1).unwrap(), vec![strict(&[1])]);
        assert_eq!(
            strict_partitions_of(6).unwrap(),
            vec![strict(&[6]), strict(&[5, 1]), strict(&[4, 2]), strict(&[3, 2, 1])]
        );
        assert_eq!(strict_partitions_of(0), Err(Error::EmptyInput("strict partitions of 0")));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let strict_counts: Vec<usize> = (1..=10).map(|n| strict_partitions_of(n).unwrap().len()).collect();
        assert_eq!(strict_counts, vec![1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
    }

    #[test]
    fn shifted_diagrams() {
        assert_eq!(strict(&[3, 1]).shifted_diagram(), cells(&[(1, 1), (1, 2), (1, 3), (2, 2)]));
        assert_eq!(strict(&[1]).shifted_diagram(), cells(&[(1, 1)]));
        assert_eq!(strict(&[2, 1]).shifted_diagram(), cells(&[(1, 1), (1, 2), (2, 2)]));
    }

    #[test]
    fn symmetric_diagrams() {
        assert_eq!(strict(&[6, 4, 3, 1]).sym_diagram(), partition(&[6, 5, 5, 4, 3, 1]));
        assert_eq!(strict(&[1]).sym_diagram(), partition(&[1]));
        assert_eq!(strict(&[2, 1]).sym_diagram(), partition(&[2, 2]));
    }

    #[test]
    fn symmetric_diagram_size_and_self_conjugacy() {
        for n in 1..=10 {
            for g in strict_partitions_of(n).unwrap() {
                let sym = g.sym_diagram();
                assert_eq!(sym.size(), 2 * g.size() - g.len(), "{g}");
                assert_eq!(sym.conjugate(), sym, "{g}");
            }
        }
    }

    #[test]
    fn shifted_cells_lie_on_or_above_the_diagonal() {
        for n in 1..=10 {
            for g in strict_partitions_of(n).unwrap() {
                let d = g.shifted_diagram();
                assert_eq!(d.len(), n);
                assert!(d.iter().all(|c| c.row <= c.col));
            }
        }
    }

    #[test]
    fn boundary_of_strict_shapes() {
        let (add, rem) = boundary_cells(&strict(&[3, 1]));
        assert_eq!(rem, cells(&[(1, 3), (2, 2)]));
        assert_eq!(add, cells(&[(1, 4), (2, 3)]));

        let (_, rem) = boundary_cells(&strict(&[2, 1]));
        assert_eq!(rem, cells(&[(2, 2)]));

        let (add, rem) = boundary_cells(&strict(&[1]));
        assert_eq!(add, cells(&[(1, 2)]));
        assert_eq!(rem, cells(&[(1, 1)]));
        assert!(add.is_disjoint(&rem));
    }

    #[test]
    fn boundary_of_young_shapes() {
        let (add, rem) = boundary_cells(&partition(&[3, 1]));
        assert_eq!(add, cells(&[(1, 4), (2, 2), (3, 1)]));
        assert_eq!(rem, cells(&[(1, 3), (2, 1)]));
    }

    #[test]
    fn parse_and_display() {
        let g: StrictPartition = "3,1".parse().unwrap();
        assert_eq!(g, strict(&[3, 1]));
        assert_eq!(alloc::format!("{g}"), "3,1");
        assert!("1,3".parse::<StrictPartition>().is_err());
        assert!("2,2".parse::<StrictPartition>().is_err());
        assert_eq!("2,2".parse::<Partition>().unwrap(), partition(&[2, 2]));
        assert_eq!("".parse::<StrictPartition>().unwrap(), StrictPartition::empty());
    }
}
