//! Elementary involutions: `d_i` on standard Young tableaux and on signed
//! shifted tableaux, the queer involution `d_0`, their concatenated-shape
//! versions `ψ_i` and `ψ_0`, and the partial odd involution `ψ'_3`.
//!
//! Every map returns a fresh value and re-validates it; a validation failure
//! there means a bug and surfaces as [`Error::InvariantViolation`].

use alloc::format;

use crate::tableaux::{ConcatTableau, SignedShiftedTableau, StandardYoungTableau, Word};
use crate::{Error, Result};

/// Signed diagonal of a letter: `row - col` if unmarked, `col - row` if marked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalValue(pub i64);

impl DiagonalValue {
    pub fn of(s: &SignedShiftedTableau, letter: u32) -> Option<DiagonalValue> {
        s.diagonal_of(letter).map(DiagonalValue)
    }
}

/// Which branch of the shifted rule applies to a triple `i-1, i, i+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftedCase {
    /// `i` sits on the middle diagonal.
    Fixed,
    /// Two of the diagonals coincide; `shared` is their common value.
    ToggleOne { shared: i64, letter: u32 },
    /// Outer diagonals differ in absolute value by one.
    ToggleTwo { low: u32, high: u32 },
    /// Swap the letters on the outer diagonals.
    Swap { low: u32, high: u32 },
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i <= 1 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

/// Classifies the action of `d_i` on a tableau holding `i-1, i, i+1`.
pub fn shifted_case(s: &SignedShiftedTableau, i: u32) -> Result<ShiftedCase> {
    let mut triple = [(0i64, 0u32); 3];
    for (slot, letter) in triple.iter_mut().zip([i - 1, i, i + 1]) {
        let d = s.diagonal_of(letter).ok_or_else(|| Error::NotDefined {
            label: format!("d_{i}"),
            reason: format!("letter {letter} is not in {s}"),
        })?;
        *slot = (d, letter);
    }
    let own = triple[1].0;
    triple.sort();
    let [(a, la), (b, _), (c, lc)] = triple;
    if own == b {
        return Ok(ShiftedCase::Fixed);
    }
    if a == b {
        return Ok(ShiftedCase::ToggleOne { shared: a, letter: lc });
    }
    if b == c {
        return Ok(ShiftedCase::ToggleOne { shared: c, letter: la });
    }
    if (a.abs() - c.abs()).abs() == 1 {
        return Ok(ShiftedCase::ToggleTwo { low: la, high: lc });
    }
    Ok(ShiftedCase::Swap { low: la, high: lc })
}

fn toggle(s: &mut SignedShiftedTableau, letter: u32) {
    let at = s.locate(letter).expect("letter located by caller");
    let e = s.entry_mut(at);
    e.marked = !e.marked;
}

/// Exchanges two letters, each cell keeping its own mark.
fn swap_letters(s: &mut SignedShiftedTableau, x: u32, y: u32) {
    let px = s.locate(x).expect("letter located by caller");
    let py = s.locate(y).expect("letter located by caller");
    s.entry_mut(px).value = y;
    s.entry_mut(py).value = x;
}

/// Applies the shifted rule for letters `i-1, i, i+1`, which must all be present.
pub(crate) fn apply_shifted(s: &SignedShiftedTableau, i: u32) -> Result<SignedShiftedTableau> {
    let mut out = s.clone();
    match shifted_case(s, i)? {
        ShiftedCase::Fixed => return Ok(out),
        ShiftedCase::ToggleOne { letter, .. } => toggle(&mut out, letter),
        ShiftedCase::ToggleTwo { low, high } => {
            toggle(&mut out, low);
            toggle(&mut out, high);
        }
        ShiftedCase::Swap { low, high } => swap_letters(&mut out, low, high),
    }
    out.revalidate()
}

/// `d_i` on a signed standard tableau, `1 < i < n`.
pub fn deg_sst(s: &SignedShiftedTableau, i: usize) -> Result<SignedShiftedTableau> {
    require_standard(s)?;
    check_index(i, s.size())?;
    apply_shifted(s, i as u32)
}

fn require_standard(s: &SignedShiftedTableau) -> Result<()> {
    if !s.is_standard() {
        return Err(Error::InvalidTableau(format!("{s} does not use the letters 1..={}", s.size())));
    }
    Ok(())
}

/// The two of `i-1, i, i+1` at the extreme positions of `w`, or `None` when
/// `i` already lies between the other two.
fn extreme_pair(w: &Word, i: u32) -> Option<(u32, u32)> {
    let mut triple = [i - 1, i, i + 1].map(|l| (w.position(l).expect("letter present"), l));
    let middle = triple[1].1;
    triple.sort();
    if triple[1].1 == middle {
        None
    } else {
        Some((triple[0].1, triple[2].1))
    }
}

/// Haiman's `d_i` on a standard Young tableau, `1 < i < n`.
pub fn deg_syt(t: &StandardYoungTableau, i: usize) -> Result<StandardYoungTableau> {
    check_index(i, t.size())?;
    match extreme_pair(&t.row_reading_word(), i as u32) {
        None => Ok(t.clone()),
        Some((x, y)) => {
            let mut out = t.clone();
            out.swap_values(x, y);
            out.revalidate()
        }
    }
}

/// The queer involution `d_0`: toggles the mark on the letter 2.
pub fn queer_sst(s: &SignedShiftedTableau) -> Result<SignedShiftedTableau> {
    if s.size() < 2 {
        return Err(Error::DegreeTooSmall { n: s.size(), min: 2 });
    }
    apply_queer(s)
}

fn apply_queer(s: &SignedShiftedTableau) -> Result<SignedShiftedTableau> {
    if !s.contains(2) {
        return Err(Error::NotDefined { label: "d_0".into(), reason: format!("{s} has no letter 2") });
    }
    let mut out = s.clone();
    toggle(&mut out, 2);
    out.revalidate()
}

/// `ψ_i` on a concatenated tableau, `1 < i < n`.
pub fn deg_concat(t: &ConcatTableau, i: usize) -> Result<ConcatTableau> {
    check_index(i, t.size())?;
    let i = i as u32;
    let word = t.hook_reading_word();
    let Some((x, y)) = extreme_pair(&word, i) else {
        return Ok(t.clone());
    };
    let in_left = [i - 1, i, i + 1].iter().all(|&l| t.left.contains(l));
    let in_right = [i - 1, i, i + 1].iter().all(|&l| t.right.contains(l));
    let out = if in_left {
        ConcatTableau { left: apply_shifted(&t.left, i)?, right: t.right.clone() }
    } else if in_right {
        ConcatTableau { left: t.left.clone(), right: apply_shifted(&t.right, i)? }
    } else {
        let mut out = t.clone();
        swap_across(&mut out, x, y);
        out
    };
    out.revalidate()
}

/// Exchanges two letters wherever they sit, marks staying with their cells.
fn swap_across(t: &mut ConcatTableau, x: u32, y: u32) {
    let side_of = |t: &ConcatTableau, l: u32| t.left.contains(l);
    let (x_left, y_left) = (side_of(t, x), side_of(t, y));
    if x_left == y_left {
        let side = if x_left { &mut t.left } else { &mut t.right };
        swap_letters(side, x, y);
        return;
    }
    let (px, py) = (
        if x_left { t.left.locate(x) } else { t.right.locate(x) }.expect("present"),
        if y_left { t.left.locate(y) } else { t.right.locate(y) }.expect("present"),
    );
    if x_left {
        t.left.entry_mut(px).value = y;
        t.right.entry_mut(py).value = x;
    } else {
        t.right.entry_mut(px).value = y;
        t.left.entry_mut(py).value = x;
    }
}

/// `ψ_0` on a concatenated tableau.
pub fn queer_concat(t: &ConcatTableau) -> Result<ConcatTableau> {
    if t.size() < 2 {
        return Err(Error::DegreeTooSmall { n: t.size(), min: 2 });
    }
    let out = if t.left.contains(1) && t.left.contains(2) {
        ConcatTableau { left: apply_queer(&t.left)?, right: t.right.clone() }
    } else if t.right.contains(1) && t.right.contains(2) {
        ConcatTableau { left: t.left.clone(), right: apply_queer(&t.right)? }
    } else {
        let mut out = t.clone();
        swap_across(&mut out, 1, 2);
        out
    };
    out.revalidate()
}

/// The partial odd involution `ψ'_3` built from `ψ_0` and `ψ_2`.
///
/// Returns [`Error::NotDefined`] when no guard holds or when the holding
/// guards disagree.
pub fn odd_psi3<T, P0, P2>(psi0: P0, psi2: P2, s: &T) -> Result<T>
where
    T: Clone + PartialEq + core::fmt::Display,
    P0: Fn(&T) -> Result<T>,
    P2: Fn(&T) -> Result<T>,
{
    let s0 = psi0(s)?;
    let s2 = psi2(s)?;
    let s20 = psi2(&s0)?;
    let s02 = psi0(&s2)?;
    let mut chosen: Option<T> = None;
    let candidates = [
        (s20 == s0, s02.clone()),
        (s02 == s0, s20.clone()),
        (s2 == s0, s.clone()),
    ];
    for (holds, value) in candidates {
        if !holds {
            continue;
        }
        match &chosen {
            Some(prev) if *prev != value => {
                return Err(Error::NotDefined {
                    label: "ψ'_3".into(),
                    reason: format!("guards give both {prev} and {value} at {s}"),
                })
            }
            _ => chosen = Some(value),
        }
    }
    chosen.ok_or_else(|| Error::NotDefined {
        label: "ψ'_3".into(),
        reason: format!("no guard holds at {s}"),
    })
}

/// `ψ'_3` on signed standard tableaux.
pub fn odd_psi3_sst(s: &SignedShiftedTableau) -> Result<SignedShiftedTableau> {
    odd_psi3(queer_sst, |t| deg_sst(t, 2), s)
}
