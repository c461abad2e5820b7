//! Standard Young tableaux, signed shifted tableaux and concatenated shifted
//! tableaux: validation, reading words, descent sets, enumeration and the
//! text grammar.
//!
//! Text grammar: rows bottom-to-top separated by `/`, entries separated by
//! `,`, marked entries suffixed with `'`, the two factors of a concatenated
//! tableau separated by `|`. So `1,2',4/3` is the shape-(3,1) tableau with
//! bottom row `1 2' 4` and `3` above the `2'`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::shapes::{Cell, Partition, StrictPartition};
use crate::{Error, Result};

/// Largest supported degree; descent sets are stored as `u64` bitmasks.
pub const MAX_DEGREE: usize = 64;

/// A subset of `[n-1]` together with its degree `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: u8,
    bits: u64,
}

impl DescentSet {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::Capacity(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        Ok(DescentSet { n: n as u8, bits: 0 })
    }

    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut d = DescentSet::empty(n)?;
        for i in members {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            d.bits |= 1 << i;
        }
        Ok(d)
    }

    /// Bit `i` stands for member `i`; bit 0 is unused.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        let d = DescentSet::empty(n)?;
        let allowed = if n <= 1 { 0 } else { (u64::MAX >> (64 - n)) & !1 };
        if bits & !allowed != 0 {
            return Err(Error::InvalidWord(format!("bits {bits:#b} outside [{}]", n.saturating_sub(1))));
        }
        Ok(DescentSet { bits, ..d })
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.bits & (1 << i) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.degree()).filter(move |&i| self.contains(i))
    }

    /// Keeps members `d` with `h <= d < i` and renumbers them as `d - h + 1`;
    /// the result has degree `i - h + 1`.
    pub fn restrict(&self, h: usize, i: usize) -> Result<DescentSet> {
        if h == 0 || h > i || i > self.degree() {
            return Err(Error::IndexOutOfRange { index: if h == 0 { h } else { i }, n: self.degree() });
        }
        DescentSet::new(i - h + 1, self.iter().filter(|&d| h <= d && d < i).map(|d| d - h + 1))
    }

    /// `Des ∩ [i]`, read as a descent set of degree `i + 1`.
    pub fn truncate(&self, i: usize) -> Result<DescentSet> {
        self.restrict(1, i + 1)
    }

    /// Every subset of `[n-1]`, ordered by bitmask.
    pub fn all(n: usize) -> impl Iterator<Item = DescentSet> {
        let count: u64 = if n <= 1 { 1 } else { 1 << (n - 1) };
        (0..count).map(move |m| DescentSet { n: n as u8, bits: m << 1 })
    }
}

impl PartialOrd for DescentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then lexicographic on the sorted member lists.
impl Ord for DescentSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// A sequence of distinct positive letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let distinct: BTreeSet<_> = letters.iter().collect();
        if distinct.len() != letters.len() {
            return Err(Error::InvalidWord(format!("{letters:?} repeats a letter")));
        }
        if letters.contains(&0) {
            return Err(Error::InvalidWord(format!("{letters:?} contains 0")));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word::new(letters)
    }

    /// Position of `letter`, if present.
    pub fn position(&self, letter: u32) -> Option<usize> {
        self.0.iter().position(|&l| l == letter)
    }

    fn is_permutation(&self) -> bool {
        let n = self.0.len() as u32;
        let mut seen = vec![false; self.0.len()];
        for &l in &self.0 {
            if l == 0 || l > n || seen[(l - 1) as usize] {
                return false;
            }
            seen[(l - 1) as usize] = true;
        }
        true
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&l| l > 9);
        for (k, l) in self.0.iter().enumerate() {
            if wide && k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Letters `i` with `i + 1` appearing to the left of `i`.
pub fn descent_set(w: &Word) -> Result<DescentSet> {
    if !w.is_permutation() {
        return Err(Error::InvalidWord(format!("{w} is not a permutation of [{}]", w.len())));
    }
    let n = w.len();
    let mut pos = vec![0usize; n + 1];
    for (k, &l) in w.0.iter().enumerate() {
        pos[l as usize] = k;
    }
    DescentSet::new(n, (1..n).filter(|&i| pos[i] > pos[i + 1]))
}

/// Ordinary position descents `{j : w_j > w_{j+1}}` of any sequence.
pub fn position_descents(letters: &[u32]) -> Result<DescentSet> {
    DescentSet::new(
        letters.len(),
        (1..letters.len()).filter(|&j| letters[j - 1] > letters[j]),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Entry {
    pub value: u32,
    pub marked: bool,
}

impl Entry {
    pub const fn plain(value: u32) -> Self {
        Entry { value, marked: false }
    }

    pub const fn marked(value: u32) -> Self {
        Entry { value, marked: true }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.marked {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl FromStr for Entry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, marked) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value = digits
            .trim()
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad entry {s:?}")))?;
        if value == 0 {
            return Err(Error::Parse("entries are positive".into()));
        }
        Ok(Entry { value, marked })
    }
}

/// A bijective, row- and column-increasing filling of a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardYoungTableau {
    /// `rows[0]` is the bottom row.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = StandardYoungTableau { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        Partition::new(lens).map_err(|e| Error::InvalidTableau(format!("shape: {e}")))?;
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &v in row {
                let v = v as usize;
                if v == 0 || v > n {
                    return Err(Error::InvalidTableau(format!("value {v} outside 1..={n}")));
                }
                if seen[v] {
                    return Err(Error::InvalidTableau(format!("duplicate value {v}")));
                }
                seen[v] = true;
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {} is not increasing", r + 1)));
            }
            if let Some(above) = self.rows.get(r + 1) {
                if above.iter().zip(row).any(|(a, b)| a <= b) {
                    return Err(Error::InvalidTableau(format!(
                        "a column is not increasing between rows {} and {}",
                        r + 1,
                        r + 2
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn cell_of(&self, value: u32) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&v| v == value).map(|c| Cell::new(r + 1, c + 1))
        })
    }

    /// Rows read left to right, top row first.
    pub fn row_reading_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn descents(&self) -> DescentSet {
        descent_set(&self.row_reading_word()).expect("standard tableau reads a permutation")
    }

    pub(crate) fn swap_values(&mut self, a: u32, b: u32) {
        for v in self.rows.iter_mut().flatten() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    pub(crate) fn revalidate(self) -> Result<Self> {
        self.validate().map_err(|e| Error::InvariantViolation(e.to_string()))?;
        Ok(self)
    }
}

/// A signed filling of a shifted diagram: absolute values distinct and
/// strictly increasing along rows and up columns, no mark on the main
/// diagonal.
///
/// Letters are arbitrary distinct positive integers, so the same type serves
/// the factors of a [`ConcatTableau`]. [`SignedShiftedTableau::is_standard`]
/// tells whether the letters are exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignedShiftedTableau {
    rows: Vec<Vec<Entry>>,
}

impl SignedShiftedTableau {
    /// `rows[0]` is the bottom row; row `r` (0-based) starts in column `r`.
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self> {
        let t = SignedShiftedTableau { rows };
        t.validate()?;
        Ok(t)
    }

    /// Like [`SignedShiftedTableau::new`], additionally requiring letters `1..=n`.
    pub fn standard(rows: Vec<Vec<Entry>>) -> Result<Self> {
        let t = SignedShiftedTableau::new(rows)?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!(
                "letters are not 1..={} for a standard tableau",
                t.size()
            )));
        }
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        StrictPartition::new(lens).map_err(|e| Error::InvalidTableau(format!("shape: {e}")))?;
        let mut seen = BTreeSet::new();
        for e in self.rows.iter().flatten() {
            if e.value == 0 {
                return Err(Error::InvalidTableau("entries are positive".into()));
            }
            if !seen.insert(e.value) {
                return Err(Error::InvalidTableau(format!("duplicate absolute value {}", e.value)));
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(first) = row.first() {
                if first.marked {
                    return Err(Error::InvalidTableau(format!(
                        "marked entry {first} on the main diagonal in row {}",
                        r + 1
                    )));
                }
            }
            if row.windows(2).any(|w| w[0].value >= w[1].value) {
                return Err(Error::InvalidTableau(format!("row {} is not increasing", r + 1)));
            }
            if let Some(above) = self.rows.get(r + 1) {
                // above[k] sits in the same column as row[k + 1]
                if above.iter().zip(row.iter().skip(1)).any(|(a, b)| a.value <= b.value) {
                    return Err(Error::InvalidTableau(format!(
                        "a column is not increasing between rows {} and {}",
                        r + 1,
                        r + 2
                    )));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn revalidate(self) -> Result<Self> {
        self.validate().map_err(|e| Error::InvariantViolation(e.to_string()))?;
        Ok(self)
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size() as u32;
        self.rows.iter().flatten().all(|e| e.value >= 1 && e.value <= n)
    }

    /// Sorted letters (absolute values).
    pub fn letters(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.rows.iter().flatten().map(|e| e.value).collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, value: u32) -> bool {
        self.locate(value).is_some()
    }

    /// `(row index, offset within row)`, both 0-based.
    pub(crate) fn locate(&self, value: u32) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|e| e.value == value).map(|k| (r, k))
        })
    }

    pub(crate) fn entry_mut(&mut self, at: (usize, usize)) -> &mut Entry {
        &mut self.rows[at.0][at.1]
    }

    pub fn entry(&self, cell: Cell) -> Option<Entry> {
        if cell.row == 0 || cell.col < cell.row {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - cell.row).copied()
    }

    /// Cell and mark of the letter `value`.
    pub fn cell_of(&self, value: u32) -> Option<(Cell, bool)> {
        self.locate(value).map(|(r, k)| {
            let e = self.rows[r][k];
            (Cell::new(r + 1, r + 1 + k), e.marked)
        })
    }

    /// Diagonal of a letter: row minus column if unmarked, column minus row
    /// if marked.
    pub fn diagonal_of(&self, value: u32) -> Option<i64> {
        self.locate(value).map(|(r, k)| {
            let offset = k as i64;
            if self.rows[r][k].marked {
                offset
            } else {
                -offset
            }
        })
    }

    /// For `i` from the largest column index down to 1: marked entries of
    /// column `i` bottom to top, then unmarked entries of row `i` left to
    /// right.
    pub fn hook_reading_word(&self) -> Word {
        let width = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| r + row.len())
            .max()
            .unwrap_or(0);
        let mut letters = Vec::with_capacity(self.size());
        for i in (1..=width).rev() {
            for r in 1..=i {
                if let Some(e) = self.entry(Cell::new(r, i)) {
                    if e.marked {
                        letters.push(e.value);
                    }
                }
            }
            if let Some(row) = self.rows.get(i - 1) {
                letters.extend(row.iter().filter(|e| !e.marked).map(|e| e.value));
            }
        }
        Word(letters)
    }

    /// Descent set of the hook reading word. Requires standard letters.
    pub fn descents(&self) -> Result<DescentSet> {
        descent_set(&self.hook_reading_word())
    }

    /// Entries with absolute value at most `k`, as a tableau.
    pub fn restrict_to(&self, k: u32) -> SignedShiftedTableau {
        let rows: Vec<Vec<Entry>> = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|e| e.value <= k).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect();
        SignedShiftedTableau { rows }
    }

    /// Relabels letters order-preservingly onto `letters` (sorted ascending).
    pub(crate) fn relabel(&self, letters: &[u32]) -> SignedShiftedTableau {
        let own = self.letters();
        let map = |v: u32| letters[own.binary_search(&v).expect("own letter")];
        SignedShiftedTableau {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|e| Entry { value: map(e.value), marked: e.marked }).collect())
                .collect(),
        }
    }
}

/// A pair of shifted fillings written side by side; together they use the
/// letters `1..=n` once each and neither factor has a mark on its diagonal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConcatTableau {
    pub left: SignedShiftedTableau,
    pub right: SignedShiftedTableau,
}

impl ConcatTableau {
    pub fn new(left: SignedShiftedTableau, right: SignedShiftedTableau) -> Result<Self> {
        let t = ConcatTableau { left, right };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let mut letters = self.left.letters();
        letters.extend(self.right.letters());
        letters.sort_unstable();
        let n = letters.len() as u32;
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTableau("duplicate absolute value across factors".into()));
        }
        if letters.iter().copied().ne(1..=n) {
            return Err(Error::InvalidTableau(format!("letters are not 1..={n}")));
        }
        Ok(())
    }

    pub(crate) fn revalidate(self) -> Result<Self> {
        self.left.validate().map_err(|e| Error::InvariantViolation(e.to_string()))?;
        self.right.validate().map_err(|e| Error::InvariantViolation(e.to_string()))?;
        self.validate().map_err(|e| Error::InvariantViolation(e.to_string()))?;
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.left.size() + self.right.size()
    }

    pub fn shapes(&self) -> (StrictPartition, StrictPartition) {
        (self.left.shape(), self.right.shape())
    }

    /// `hook(left)` followed by `hook(right)`.
    pub fn hook_reading_word(&self) -> Word {
        let mut letters = self.left.hook_reading_word().0;
        letters.extend(self.right.hook_reading_word().0);
        Word(letters)
    }

    pub fn descents(&self) -> DescentSet {
        concat_descents(self)
    }
}

pub fn row_reading_word(t: &StandardYoungTableau) -> Word {
    t.row_reading_word()
}

pub fn hook_reading_word(s: &SignedShiftedTableau) -> Word {
    s.hook_reading_word()
}

pub fn concat_descents(t: &ConcatTableau) -> DescentSet {
    descent_set(&t.hook_reading_word()).expect("concatenated tableau reads a permutation")
}

/// Row-by-row identity filling, bottom row first; unmarked.
pub fn superstandard(shape: &StrictPartition) -> SignedShiftedTableau {
    let mut next = 1u32;
    let rows = shape
        .parts()
        .iter()
        .map(|&len| {
            (0..len)
                .map(|_| {
                    let e = Entry::plain(next);
                    next += 1;
                    e
                })
                .collect()
        })
        .collect();
    SignedShiftedTableau { rows }
}

/// Every standard Young tableau of shape `shape`, sorted by serialization.
pub fn generate_syt(shape: &Partition) -> Vec<StandardYoungTableau> {
    let lens: Vec<usize> = shape.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = lens.iter().map(|&l| vec![0; l]).collect();
    let mut current = lens.clone();
    let mut out = Vec::new();
    fill_young(shape.size() as u32, &mut current, &mut rows, &mut out);
    sort_by_text(out)
}

fn fill_young(v: u32, lens: &mut Vec<usize>, rows: &mut Vec<Vec<u32>>, out: &mut Vec<StandardYoungTableau>) {
    if v == 0 {
        out.push(StandardYoungTableau { rows: rows.clone() });
        return;
    }
    for r in 0..lens.len() {
        let len = lens[r];
        let next = lens.get(r + 1).copied().unwrap_or(0);
        if len == 0 || next >= len {
            continue;
        }
        rows[r][len - 1] = v;
        lens[r] -= 1;
        fill_young(v - 1, lens, rows, out);
        lens[r] += 1;
    }
}

/// Every signed standard tableau of shape `shape`, sorted by serialization.
pub fn generate_sst(shape: &StrictPartition) -> Vec<SignedShiftedTableau> {
    generate_shifted(shape, true)
}

/// Shifted standard tableaux with every mark off.
pub fn generate_unmarked_sst(shape: &StrictPartition) -> Vec<SignedShiftedTableau> {
    generate_shifted(shape, false)
}

fn generate_shifted(shape: &StrictPartition, with_marks: bool) -> Vec<SignedShiftedTableau> {
    let lens: Vec<usize> = shape.parts().to_vec();
    let mut rows: Vec<Vec<Entry>> = lens.iter().map(|&l| vec![Entry::plain(0); l]).collect();
    let mut current = lens.clone();
    let mut out = Vec::new();
    fill_shifted(shape.size() as u32, with_marks, &mut current, &mut rows, &mut out);
    sort_by_text(out)
}

fn fill_shifted(
    v: u32,
    with_marks: bool,
    lens: &mut Vec<usize>,
    rows: &mut Vec<Vec<Entry>>,
    out: &mut Vec<SignedShiftedTableau>,
) {
    if v == 0 {
        out.push(SignedShiftedTableau { rows: rows.clone() });
        return;
    }
    for r in 0..lens.len() {
        let len = lens[r];
        let next = lens.get(r + 1).copied().unwrap_or(0);
        // the remaining row lengths must stay strictly decreasing (trailing zeros allowed)
        if len == 0 || !(next + 1 < len || (len == 1 && next == 0)) {
            continue;
        }
        let on_diagonal = len == 1;
        lens[r] -= 1;
        rows[r][len - 1] = Entry::plain(v);
        fill_shifted(v - 1, with_marks, lens, rows, out);
        if with_marks && !on_diagonal {
            rows[r][len - 1] = Entry::marked(v);
            fill_shifted(v - 1, with_marks, lens, rows, out);
        }
        lens[r] += 1;
    }
}

/// Every signed standard tableau of the concatenated shape `left ⊗ right`,
/// sorted by serialization.
pub fn generate_concat(left: &StrictPartition, right: &StrictPartition) -> Vec<ConcatTableau> {
    let n = (left.size() + right.size()) as u32;
    let lefts = generate_sst(left);
    let rights = generate_sst(right);
    let mut out = Vec::new();
    for subset in combinations(n, left.size()) {
        let complement: Vec<u32> = (1..=n).filter(|v| subset.binary_search(v).is_err()).collect();
        for s in &lefts {
            let s = s.relabel(&subset);
            for t in &rights {
                out.push(ConcatTableau { left: s.clone(), right: t.relabel(&complement) });
            }
        }
    }
    sort_by_text(out)
}

fn combinations(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if (n - v + 1) as usize + cur.len() < k {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn sort_by_text<T: fmt::Display>(items: Vec<T>) -> Vec<T> {
    let mut keyed: Vec<(String, T)> = items.into_iter().map(|t| (t.to_string(), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, t)| t).collect()
}

fn write_rows<T: fmt::Display>(rows: &[Vec<T>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (r, row) in rows.iter().enumerate() {
        if r > 0 {
            f.write_str("/")?;
        }
        for (k, e) in row.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
    }
    Ok(())
}

fn parse_rows(s: &str) -> Result<Vec<Vec<Entry>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            if row.trim().is_empty() {
                return Err(Error::Parse(format!("empty row in {s:?}")));
            }
            row.split(',').map(str::parse::<Entry>).collect()
        })
        .collect()
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(&self.rows, f)
    }
}

impl fmt::Display for SignedShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(&self.rows, f)
    }
}

impl fmt::Display for ConcatTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.left, self.right)
    }
}

impl FromStr for StandardYoungTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_rows(s)?;
        if rows.iter().flatten().any(|e| e.marked) {
            return Err(Error::Parse("standard Young tableaux carry no marks".into()));
        }
        StandardYoungTableau::new(rows.into_iter().map(|r| r.into_iter().map(|e| e.value).collect()).collect())
    }
}

impl FromStr for SignedShiftedTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SignedShiftedTableau::standard(parse_rows(s)?)
    }
}

impl FromStr for ConcatTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("{s:?} has no '|' between factors")))?;
        if r.contains('|') {
            return Err(Error::Parse(format!("{s:?} has more than two factors")));
        }
        ConcatTableau::new(
            SignedShiftedTableau::new(parse_rows(l)?)?,
            SignedShiftedTableau::new(parse_rows(r)?)?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{partition, strict};

    fn sst(s: &str) -> SignedShiftedTableau {
        s.parse().unwrap()
    }

    fn des(n: usize, m: &[usize]) -> DescentSet {
        DescentSet::new(n, m.iter().copied()).unwrap()
    }

    fn word(s: &str) -> Word {
        Word::new(s.chars().map(|c| c.to_digit(10).unwrap()).collect()).unwrap()
    }

    #[test]
    fn row_words_of_figure_tableaux() {
        let t: StandardYoungTableau = "1,3,4/2".parse().unwrap();
        assert_eq!(t.row_reading_word(), word("2134"));
        let t: StandardYoungTableau = "1,2,3/4".parse().unwrap();
        assert_eq!(t.row_reading_word(), word("4123"));
        let t: StandardYoungTableau = "1".parse().unwrap();
        assert_eq!(t.row_reading_word(), word("1"));
    }

    #[test]
    fn hook_words() {
        assert_eq!(sst("1,2',4/3").hook_reading_word(), word("2314"));
        assert_eq!(sst("1,2',3'/4").hook_reading_word(), word("3241"));
        // the printed figure has 4213; the reading rule gives 4231, same descents
        assert_eq!(sst("1,2',4'/3").hook_reading_word(), word("4231"));
        assert_eq!(descent_set(&word("4231")).unwrap(), descent_set(&word("4213")).unwrap());
    }

    #[test]
    fn descent_sets_of_words() {
        assert_eq!(descent_set(&word("2134")).unwrap(), des(4, &[1]));
        assert_eq!(descent_set(&word("3241")).unwrap(), des(4, &[1, 2]));
        assert_eq!(descent_set(&word("123456")).unwrap(), des(6, &[]));
        assert!(matches!(descent_set(&word("124")), Err(Error::InvalidWord(_))));
    }

    #[test]
    fn concat_descent_examples() {
        let t: ConcatTableau = "1,2/3|4".parse().unwrap();
        assert_eq!(t.hook_reading_word(), word("3124"));
        assert_eq!(t.descents(), des(4, &[2]));
        let t: ConcatTableau = "1|2".parse().unwrap();
        assert_eq!(t.descents(), des(2, &[]));
        let t: ConcatTableau = "2|1".parse().unwrap();
        assert_eq!(t.descents(), des(2, &[1]));
    }

    #[test]
    fn figure_descent_lists_in_order() {
        let syt: Vec<DescentSet> = ["1,3,4/2", "1,2,4/3", "1,2,3/4"]
            .iter()
            .map(|s| s.parse::<StandardYoungTableau>().unwrap().descents())
            .collect();
        assert_eq!(syt, vec![des(4, &[1]), des(4, &[2]), des(4, &[3])]);

        let figure = ["1,2,4/3", "1,2',4/3", "1,2,4'/3", "1,2',4'/3", "1,2,3/4", "1,2',3/4", "1,2,3'/4", "1,2',3'/4"];
        let expected = [&[2][..], &[1], &[2, 3], &[1, 3], &[3], &[1, 3], &[2], &[1, 2]];
        for (s, e) in figure.iter().zip(expected) {
            assert_eq!(sst(s).descents().unwrap(), des(4, e), "{s}");
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(generate_syt(&partition(&[3, 1])).len(), 3);
        assert_eq!(generate_sst(&strict(&[3, 1])).len(), 8);
        assert_eq!(generate_sst(&strict(&[4])).len(), 8);
        assert_eq!(generate_sst(&strict(&[4, 1])).len(), 24);
        assert_eq!(generate_concat(&strict(&[2, 1]), &strict(&[1])).len(), 8);
        assert_eq!(generate_concat(&strict(&[2]), &strict(&[2])).len(), 24);
    }

    #[test]
    fn sst_31_is_exactly_the_figure() {
        let got: BTreeSet<String> = generate_sst(&strict(&[3, 1])).iter().map(|t| t.to_string()).collect();
        let figure: BTreeSet<String> = ["1,2,4/3", "1,2',4/3", "1,2,4'/3", "1,2',4'/3", "1,2,3/4", "1,2',3/4", "1,2,3'/4", "1,2',3'/4"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, figure);
    }

    #[test]
    fn superstandard_tableaux() {
        let s = superstandard(&strict(&[3, 1]));
        assert_eq!(s.to_string(), "1,2,3/4");
        assert_eq!(s.descents().unwrap(), des(4, &[3]));
        let s = superstandard(&strict(&[1]));
        assert_eq!(s.to_string(), "1");
        assert_eq!(s.descents().unwrap(), des(1, &[]));
        let s = superstandard(&strict(&[2, 1]));
        assert_eq!(s.to_string(), "1,2/3");
        assert_eq!(s.descents().unwrap(), des(3, &[2]));
    }

    #[test]
    fn parse_errors_name_the_invariant() {
        let err = "1,1'".parse::<SignedShiftedTableau>().unwrap_err();
        assert!(err.to_string().contains("duplicate absolute value"), "{err}");
        let err = "1',2".parse::<SignedShiftedTableau>().unwrap_err();
        assert!(err.to_string().contains("diagonal"), "{err}");
        let err = "1,3/2".parse::<SignedShiftedTableau>().unwrap_err();
        assert!(err.to_string().contains("column"), "{err}");
        let err = "2,1".parse::<SignedShiftedTableau>().unwrap_err();
        assert!(err.to_string().contains("row"), "{err}");
        let err = "1,2/3,4".parse::<SignedShiftedTableau>().unwrap_err();
        assert!(err.to_string().contains("shape"), "{err}");
        assert!("1,2/x".parse::<SignedShiftedTableau>().is_err());
        assert!("1,2".parse::<ConcatTableau>().is_err());
    }

    #[test]
    fn concat_parse_accepts_valid_factor() {
        let t: ConcatTableau = "1,2/3|4".parse().unwrap();
        assert_eq!(t.shapes(), (strict(&[2, 1]), strict(&[1])));
        assert_eq!(t.to_string(), "1,2/3|4");
        let t: ConcatTableau = "1,2|".parse().unwrap();
        assert!(t.right.is_empty());
    }

    #[test]
    fn descent_set_helpers() {
        let d = des(5, &[1, 3]);
        assert_eq!(d.restrict(2, 4).unwrap(), des(3, &[2]));
        assert_eq!(d.restrict(1, 5).unwrap(), d);
        assert_eq!(des(6, &[2]).restrict(3, 5).unwrap(), des(3, &[]));
        assert_eq!(d.truncate(2).unwrap(), des(3, &[1]));
        assert!(d.restrict(3, 2).is_err());
        assert_eq!(DescentSet::all(4).count(), 8);
        assert_eq!(d.to_string(), "{1,3}");
    }

    #[test]
    fn descent_set_order_is_lexicographic() {
        let mut v = vec![des(4, &[2, 3]), des(4, &[1, 3]), des(4, &[3]), des(4, &[]), des(4, &[1])];
        v.sort();
        assert_eq!(v, vec![des(4, &[]), des(4, &[1]), des(4, &[1, 3]), des(4, &[2, 3]), des(4, &[3])]);
    }
}
