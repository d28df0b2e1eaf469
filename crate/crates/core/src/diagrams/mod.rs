//! Skew pipe dreams: subsets of the shifted staircase
//! `SY_n = {(i, j) : 1 ≤ i ≤ n, i ≤ j ≤ 2n − i}`.
//!
//! Boxes are enumerated bottom row first, right to left inside a row:
//! `((n,n), (n−1,n+1), (n−1,n), …, (1,2), (1,1))`. Position `k` (1-based) in
//! that order carries the letter `|q_k − n| + 1` of `i_C`, and a diagram is
//! stored as a bit mask over the 0-based positions.

pub(crate) mod ladder;
pub(crate) mod mitosis;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{check_rank, Error, Result};
use crate::weyl::{k_min, PositionSequence, SignedPermutation};
use crate::MAX_RANK;

pub use ladder::{inverse_ladder_move, ladder_closure, ladder_move};
pub use mitosis::{
    is_poptotic, m_of_w, mitosis_full, mitosis_full_set, mitosis_transposed,
    mitosis_transposed_set, r0_index, start_transposed, transposed_chain, unique_closure_predicate,
    full_chain,
};

/// A box `(row, column)`, 1-based.
pub type Cell = (usize, usize);

/// 0-based position of `(p, q)` in the staircase order, if it is a box.
pub fn position_index(n: usize, (p, q): Cell) -> Option<usize> {
    if p == 0 || p > n || q < p || q > 2 * n - p {
        return None;
    }
    Some((n - p) * (n - p) + (2 * n - p - q))
}

/// Precomputed scan tables for one rank.
#[derive(Debug)]
pub struct Staircase {
    n: usize,
    cells: Vec<Cell>,
    right: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
    /// Positions `ℓ > k` with `q_ℓ ∈ {q_k, 2n − q_k}`, ascending.
    scan_up: Vec<Vec<usize>>,
    /// Positions `ℓ < k` with `q_ℓ ∈ {q_k − 1, 2n − q_k + 1}`, descending.
    scan_down: Vec<Vec<usize>>,
    full: u64,
}

impl Staircase {
    fn build(n: usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for p in (1..=n).rev() {
            for q in (p..=2 * n - p).rev() {
                cells.push((p, q));
            }
        }
        let big_n = cells.len();
        let right = cells.iter().map(|&(p, q)| position_index(n, (p, q + 1))).collect();
        let left = cells.iter().map(|&(p, q)| position_index(n, (p, q - 1))).collect();
        let scan_up = (0..big_n)
            .map(|k| {
                let q = cells[k].1;
                (k + 1..big_n)
                    .filter(|&l| cells[l].1 == q || cells[l].1 + q == 2 * n)
                    .collect()
            })
            .collect();
        let scan_down = (0..big_n)
            .map(|k| {
                let q = cells[k].1;
                (0..k)
                    .rev()
                    .filter(|&l| cells[l].1 + 1 == q || cells[l].1 + q == 2 * n + 1)
                    .collect()
            })
            .collect();
        let full = if big_n == 64 { u64::MAX } else { (1u64 << big_n) - 1 };
        Self {
            n,
            cells,
            right,
            left,
            scan_up,
            scan_down,
            full,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `N = n²`.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// `(p_k, q_k)` for 1-based `k`.
    pub fn cell(&self, k: usize) -> Cell {
        self.cells[k - 1]
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        position_index(self.n, cell)
    }

    /// Letter of `i_C` at 0-based position `idx`.
    pub fn letter(&self, idx: usize) -> usize {
        self.cells[idx].1.abs_diff(self.n) + 1
    }

    /// 0-based positions in the columns `{n − i + 1, n + i − 1}`, ascending.
    pub fn pair_positions(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&k| self.letter(k) == i)
    }

    pub fn full_mask(&self) -> u64 {
        self.full
    }

    pub fn full(&self) -> SkewPipeDream {
        SkewPipeDream::from_mask(self.n, self.full)
    }

    pub fn empty(&self) -> SkewPipeDream {
        SkewPipeDream::from_mask(self.n, 0)
    }

    pub(crate) fn right_of(&self, idx: usize) -> Option<usize> {
        self.right[idx]
    }

    pub(crate) fn left_of(&self, idx: usize) -> Option<usize> {
        self.left[idx]
    }

    pub(crate) fn scan_up(&self, idx: usize) -> &[usize] {
        &self.scan_up[idx]
    }

    pub(crate) fn scan_down(&self, idx: usize) -> &[usize] {
        &self.scan_down[idx]
    }
}

/// Shared staircase tables for rank `n` (`1 ≤ n ≤ MAX_RANK`).
///
/// Panics on unsupported ranks; use [`try_shape`] to get an error instead.
pub fn shape(n: usize) -> &'static Staircase {
    try_shape(n).expect("unsupported rank")
}

pub fn try_shape(n: usize) -> Result<&'static Staircase> {
    static SHAPES: [OnceLock<Staircase>; MAX_RANK] = [const { OnceLock::new() }; MAX_RANK];
    check_rank(n)?;
    Ok(SHAPES[n - 1].get_or_init(|| Staircase::build(n)))
}

/// A subset of `SY_n`, bit-packed by staircase position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewPipeDream {
    n: u8,
    mask: u64,
}

impl SkewPipeDream {
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!((1..=MAX_RANK).contains(&n));
        debug_assert!(mask & !shape(n).full_mask() == 0);
        Self { n: n as u8, mask }
    }

    pub fn from_cells(n: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        check_rank(n)?;
        let mut mask = 0;
        for c in cells {
            let idx = position_index(n, c).ok_or(Error::CellOutsideShape(c.0, c.1, n))?;
            mask |= 1 << idx;
        }
        Ok(Self { n: n as u8, mask })
    }

    pub fn full(n: usize) -> Self {
        shape(n).full()
    }

    pub fn empty(n: usize) -> Self {
        Self::from_mask(n, 0)
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Membership; boxes outside `SY_n` are never members.
    pub fn contains(&self, cell: Cell) -> bool {
        position_index(self.rank(), cell).is_some_and(|i| self.mask >> i & 1 == 1)
    }

    pub(crate) fn has_bit(&self, idx: usize) -> bool {
        self.mask >> idx & 1 == 1
    }

    /// Member boxes in position order.
    pub fn cells(&self) -> Vec<Cell> {
        let s = shape(self.rank());
        (0..s.size())
            .filter(|&i| self.has_bit(i))
            .map(|i| s.cells[i])
            .collect()
    }

    /// Member boxes in row-major order (for display).
    pub fn cells_row_major(&self) -> Vec<Cell> {
        let mut c = self.cells();
        c.sort();
        c
    }

    pub fn to_cell_list(&self) -> CellList {
        CellList {
            n: self.rank(),
            cells: self.cells().into_iter().map(|(p, q)| [p, q]).collect(),
        }
    }
}

impl fmt::Debug for SkewPipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SPD{}{:?}", self.n, self.cells_row_major())
    }
}

/// Rows of `+` and `.` in the shifted layout, top row first.
impl fmt::Display for SkewPipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        for p in 1..=n {
            for q in 1..2 * n {
                let ch = if q < p || q > 2 * n - p {
                    ' '
                } else if self.contains((p, q)) {
                    '+'
                } else {
                    '.'
                };
                write!(f, "{ch}")?;
            }
            if p < n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// JSON form `{"n": 3, "cells": [[1,1],[2,2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellList {
    pub n: usize,
    pub cells: Vec<[usize; 2]>,
}

impl TryFrom<&CellList> for SkewPipeDream {
    type Error = Error;

    fn try_from(list: &CellList) -> Result<Self> {
        SkewPipeDream::from_cells(list.n, list.cells.iter().map(|&[p, q]| (p, q)))
    }
}

/// `(k_D, k′_D)`: positions inside and outside `D`, each ascending.
pub fn position_sequences(d: &SkewPipeDream) -> (PositionSequence, PositionSequence) {
    let big_n = d.rank() * d.rank();
    let (inside, outside): (Vec<usize>, Vec<usize>) = (1..=big_n).partition(|&k| d.has_bit(k - 1));
    (
        PositionSequence::from_sorted(inside),
        PositionSequence::from_sorted(outside),
    )
}

/// `D(w)`: the diagram whose complement positions are `k_w`.
pub fn canonical_diagram(w: &SignedPermutation) -> SkewPipeDream {
    let n = w.rank();
    let mut mask = shape(n).full_mask();
    for &k in k_min(w).indices() {
        mask &= !(1 << (k - 1));
    }
    SkewPipeDream::from_mask(n, mask)
}

/// `m(w, i)` for `i = 1..=n`: the number of `j ∈ Ĩ` with
/// `−(n−i+1) ≤ j < n−i+1` and `w⁻¹(j) < w⁻¹(n−i+1)`.
pub fn m_values(w: &SignedPermutation) -> Vec<usize> {
    let n = w.rank() as i32;
    let inv = w.inverse();
    (1..=n)
        .map(|i| {
            let top = n - i + 1;
            let bound = inv.apply(top);
            (-top..top)
                .filter(|&j| j != 0 && inv.apply(j) < bound)
                .count()
        })
        .collect()
}

/// Left-justified rows `{(i, j) ∈ SY_n : j ≤ m_i + i − 1}`.
pub fn diagram_from_m_values(n: usize, m: &[usize]) -> Result<SkewPipeDream> {
    let cells = (1..=n).flat_map(|i| (i..=2 * n - i).filter(move |&j| j < m[i - 1] + i).map(move |j| (i, j)));
    SkewPipeDream::from_cells(n, cells)
}

pub type DiagramSet = BTreeSet<SkewPipeDream>;
