use std::collections::HashSet;

use super::{shape, Cell, DiagramSet, SkewPipeDream, Staircase};
use crate::error::{Error, Result};

/// An always-empty scan position appended above position `N` in the column
/// pair of letter `letter`; landing on it sets `bit`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Phantom {
    pub letter: usize,
    pub bit: usize,
}

#[inline]
fn bit(mask: u64, i: usize) -> bool {
    mask >> i & 1 == 1
}

/// Bit receiving the `+` when the ladder move at `idx` is defined.
pub(crate) fn forward_landing(
    s: &Staircase,
    mask: u64,
    idx: usize,
    phantom: Option<Phantom>,
) -> Option<usize> {
    if !bit(mask, idx) {
        return None;
    }
    if s.right_of(idx).is_some_and(|r| bit(mask, r)) {
        return None;
    }
    for &l in s.scan_up(idx) {
        let here = bit(mask, l);
        let right = s.right_of(l);
        let beside = right.is_some_and(|r| bit(mask, r));
        if here && beside {
            continue;
        }
        return match right {
            Some(r) if !here && !beside => Some(r),
            _ => None,
        };
    }
    match phantom {
        Some(ph) if s.letter(idx) == ph.letter && !bit(mask, ph.bit) => Some(ph.bit),
        _ => None,
    }
}

/// Bit receiving the `+` when the inverse ladder move at `idx` is defined.
pub(crate) fn inverse_landing(s: &Staircase, mask: u64, idx: usize) -> Option<usize> {
    if !bit(mask, idx) {
        return None;
    }
    if s.left_of(idx).is_some_and(|l| bit(mask, l)) {
        return None;
    }
    for &l in s.scan_down(idx) {
        let here = bit(mask, l);
        let beside = s.right_of(l).is_some_and(|r| bit(mask, r));
        if here && beside {
            continue;
        }
        return (!here && !beside).then_some(l);
    }
    None
}

/// Closure of `start` under the ladder moves at positions accepted by
/// `movable`. Only bits below `N` ever move. Result is sorted.
pub(crate) fn closure_masks(
    s: &Staircase,
    start: u64,
    movable: impl Fn(usize) -> bool,
    phantom: Option<Phantom>,
) -> Vec<u64> {
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(mask) = stack.pop() {
        for idx in 0..s.size() {
            if !bit(mask, idx) || !movable(idx) {
                continue;
            }
            if let Some(to) = forward_landing(s, mask, idx, phantom) {
                let next = (mask & !(1 << idx)) | (1 << to);
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

fn checked_index(d: &SkewPipeDream, cell: Cell) -> Result<usize> {
    let n = d.rank();
    shape(n)
        .index_of(cell)
        .ok_or(Error::CellOutsideShape(cell.0, cell.1, n))
}

/// `L_{i,j}(D)`; `Ok(None)` when the move is undefined.
pub fn ladder_move(d: &SkewPipeDream, cell: Cell) -> Result<Option<SkewPipeDream>> {
    let idx = checked_index(d, cell)?;
    let s = shape(d.rank());
    Ok(forward_landing(s, d.mask(), idx, None)
        .map(|to| SkewPipeDream::from_mask(d.rank(), (d.mask() & !(1 << idx)) | (1 << to))))
}

/// `L⁻¹_{i,j}(D)`; `Ok(None)` when the move is undefined.
pub fn inverse_ladder_move(d: &SkewPipeDream, cell: Cell) -> Result<Option<SkewPipeDream>> {
    let idx = checked_index(d, cell)?;
    let s = shape(d.rank());
    Ok(inverse_landing(s, d.mask(), idx)
        .map(|to| SkewPipeDream::from_mask(d.rank(), (d.mask() & !(1 << idx)) | (1 << to))))
}

/// Every diagram reachable from `D` by ladder moves, `D` included.
pub fn ladder_closure(d: &SkewPipeDream) -> DiagramSet {
    let n = d.rank();
    closure_masks(shape(n), d.mask(), |_| true, None)
        .into_iter()
        .map(|m| SkewPipeDream::from_mask(n, m))
        .collect()
}
