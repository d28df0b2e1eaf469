use std::fmt;

use super::{check_letter, ExtendedSkewPipeDream};
use crate::diagrams::{shape, Cell};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowState {
    Empty,
    Left,
    Right,
    Both,
}

impl RowState {
    fn from_pair(left: bool, right: bool) -> Self {
        match (left, right) {
            (false, false) => RowState::Empty,
            (true, false) => RowState::Left,
            (false, true) => RowState::Right,
            (true, true) => RowState::Both,
        }
    }

    fn pair(self) -> (bool, bool) {
        match self {
            RowState::Empty => (false, false),
            RowState::Left => (true, false),
            RowState::Right => (false, true),
            RowState::Both => (true, true),
        }
    }
}

/// The two columns of an extended diagram that carry its weight, stacked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColumnDiagram {
    pub j: usize,
    pub rows: Vec<RowState>,
}

impl fmt::Display for TwoColumnDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            let (l, rt) = r.pair();
            let ch = |b| if b { '+' } else { '.' };
            write!(f, "{}{}", ch(l), ch(rt))?;
            if i + 1 < self.rows.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Number of rows: `n + 1` for `j = 1`, else `2(n − j + 1) + 1`.
pub fn row_count(n: usize, j: usize) -> usize {
    if j == 1 {
        n + 1
    } else {
        2 * (n - j + 1) + 1
    }
}

/// The pair of boxes behind each row, top first.
fn row_boxes(n: usize, j: usize) -> Vec<(Cell, Cell)> {
    let mut rows = vec![((0, n + j - 1), (0, n + j))];
    if j == 1 {
        rows.extend((1..=n).map(|k| ((k, n), (k, n + 1))));
    } else {
        for k in 1..=n - j + 1 {
            rows.push(((k, n - j + 1), (k, n - j + 2)));
            rows.push(((k, n + j - 1), (k, n + j)));
        }
    }
    rows
}

/// Bit of a box of `SY_n ⊔ {(0, n + j)}`.
fn bit_of(n: usize, j: usize, cell: Cell) -> Option<usize> {
    if cell == (0, n + j) {
        Some(n * n)
    } else {
        shape(n).index_of(cell)
    }
}

/// `D^{(j)}` for the letter of `e`.
pub fn two_column_projection(e: &ExtendedSkewPipeDream) -> TwoColumnDiagram {
    let (n, j) = (e.rank(), e.letter());
    let rows = row_boxes(n, j)
        .into_iter()
        .map(|(a, b)| RowState::from_pair(e.contains(a), e.contains(b)))
        .collect();
    TwoColumnDiagram { j, rows }
}

/// Swaps the column counts of every rectangle of the two-column projection and
/// lifts the result back.
///
/// Full rows are set aside. What remains splits uniquely into blocks made of
/// right-only rows, one empty row, then left-only rows; each block with `c₁`
/// left and `c₂` right boxes is replaced by the block with `c₂` left and `c₁`
/// right boxes. Only meaningful on members of an extended ladder closure of
/// some `D(w)`; any other input may fail to decompose.
pub fn tau_involution(e: &ExtendedSkewPipeDream) -> Result<ExtendedSkewPipeDream> {
    check_letter(e.letter(), e.rank())?;
    let (n, j) = (e.rank(), e.letter());
    let boxes = row_boxes(n, j);
    let proj = two_column_projection(e);
    let open: Vec<usize> = (0..proj.rows.len())
        .filter(|&r| proj.rows[r] != RowState::Both)
        .collect();
    let seq: Vec<RowState> = open.iter().map(|&r| proj.rows[r]).collect();

    let mut out = Vec::with_capacity(seq.len());
    let mut t = 0;
    while t < seq.len() {
        let mut right = 0;
        while t < seq.len() && seq[t] == RowState::Right {
            right += 1;
            t += 1;
        }
        if seq.get(t) != Some(&RowState::Empty) {
            return Err(Error::Decomposition(format!(
                "expected an empty pivot row in {proj:?} at open row {t}"
            )));
        }
        t += 1;
        let mut left = 0;
        while t < seq.len() && seq[t] == RowState::Left {
            left += 1;
            t += 1;
        }
        out.extend(std::iter::repeat_n(RowState::Right, left));
        out.push(RowState::Empty);
        out.extend(std::iter::repeat_n(RowState::Left, right));
    }

    let mut mask = e.mask();
    for (&r, state) in open.iter().zip(out) {
        let (a, b) = boxes[r];
        let (l, rt) = state.pair();
        for (cell, on) in [(a, l), (b, rt)] {
            match bit_of(n, j, cell) {
                Some(bit) if on => mask |= 1 << bit,
                Some(bit) => mask &= !(1 << bit),
                None if on => {
                    return Err(Error::Decomposition(format!("box {cell:?} is outside the shape")))
                }
                None => {}
            }
        }
    }
    Ok(ExtendedSkewPipeDream::from_mask(n, j, mask))
}
