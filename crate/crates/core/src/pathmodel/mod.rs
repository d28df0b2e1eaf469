//! The pipe model of a skew pipe dream.
//!
//! A diagram `D ⊆ SY_n` is first rearranged into a subset `Ω(D)` of the
//! Gelfand–Tsetlin shape `{(i, j) : 1 ≤ j ≤ n, 1 ≤ i ≤ 2j − 1}`: row `k` of
//! `D` splits into its left half (columns `k..=n`), which becomes row `2k − 1`,
//! and its reversed right half, which becomes row `2k`. The shape is then
//! extended by the boxes `(2k, k)` and a column `n + 1`, so that rows `2k − 1`
//! and `2k` both span columns `k..=n+1`. Every box of `Ω(D)` is a crossing
//! and every other box an elbow, and following the `n` pipes from their entry
//! points on the left to the top edge yields a signed permutation `w_D`.
//!
//! Rows of the extended shape are numbered from the top. Pipe `k` enters at
//! the west edge of `(2(n − k) + 1, n − k + 1)`, so pipe 1 starts at the
//! bottom.

mod render;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::diagrams::{shape, Cell, DiagramSet, SkewPipeDream};
use crate::error::{check_rank, Error, Result};
use crate::weyl::SignedPermutation;
use crate::MAX_RANK;

pub use render::{parse_ascii, render_ascii, render_tikz};

/// Largest rank scanned by [`rsp`] without an explicit opt-in.
pub const RSP_MAX_RANK: usize = 4;
/// Largest rank scanned by [`rsp`] with the opt-in.
pub const RSP_OPT_IN_RANK: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tile {
    /// Connects north with south and west with east.
    Cross,
    /// Connects north with west and south with east.
    Elbow,
    /// Connects north with east and south with west.
    ReversedElbow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    N = 0,
    E = 1,
    S = 2,
    W = 3,
}

impl Side {
    fn opposite(self) -> Side {
        match self {
            Side::N => Side::S,
            Side::E => Side::W,
            Side::S => Side::N,
            Side::W => Side::E,
        }
    }
}

impl Tile {
    fn exit(self, from: Side) -> Side {
        match (self, from) {
            (Tile::Cross, s) => s.opposite(),
            (Tile::Elbow, Side::N) => Side::W,
            (Tile::Elbow, Side::W) => Side::N,
            (Tile::Elbow, Side::S) => Side::E,
            (Tile::Elbow, Side::E) => Side::S,
            (Tile::ReversedElbow, Side::N) => Side::E,
            (Tile::ReversedElbow, Side::E) => Side::N,
            (Tile::ReversedElbow, Side::S) => Side::W,
            (Tile::ReversedElbow, Side::W) => Side::S,
        }
    }
}

/// Whether `(row, col)` lies in the extended shape of rank `n`.
pub fn in_extended_shape(n: usize, (row, col): Cell) -> bool {
    row >= 1 && row <= 2 * n && col >= row.div_ceil(2) && col <= n + 1
}

/// Tile of a box outside `Ω(D)`.
pub fn empty_tile(n: usize, (row, col): Cell) -> Tile {
    if (col <= n) == (row % 2 == 1) {
        Tile::Elbow
    } else {
        Tile::ReversedElbow
    }
}

/// Staircase box that lands on `(row, col)` under `Ω`, if any.
pub fn omega_source(n: usize, (row, col): Cell) -> Option<Cell> {
    if col > n || row == 0 || row > 2 * n {
        return None;
    }
    let k = row.div_ceil(2);
    if row % 2 == 1 {
        (col >= k).then_some((k, col))
    } else {
        (col > k).then_some((k, 2 * n + 1 - col))
    }
}

/// `Ω(D)` as a sorted list of boxes of the Gelfand–Tsetlin shape.
pub fn gt_rearrangement(d: &SkewPipeDream) -> Vec<Cell> {
    let n = d.rank();
    let mut out: Vec<Cell> = grid(n)
        .cells
        .iter()
        .filter(|c| c.omega_bit.is_some_and(|b| d.has_bit(b)))
        .map(|c| c.at)
        .collect();
    out.sort_unstable();
    out
}

#[derive(Debug)]
struct GridCell {
    at: Cell,
    omega_bit: Option<usize>,
    empty: Tile,
    /// Neighbour ids indexed by `Side`.
    next: [Option<usize>; 4],
}

/// Flattened extended shape with neighbour links.
#[derive(Debug)]
struct Grid {
    cells: Vec<GridCell>,
    /// Cell id of pipe `k`'s entry box, 0-based in `k`.
    entries: Vec<usize>,
}

impl Grid {
    fn build(n: usize) -> Self {
        let mut ids = BTreeMap::new();
        let mut at = Vec::new();
        for row in 1..=2 * n {
            for col in row.div_ceil(2)..=n + 1 {
                ids.insert((row, col), at.len());
                at.push((row, col));
            }
        }
        let s = shape(n);
        let cells = at
            .iter()
            .map(|&(row, col)| {
                let look = |r: Option<usize>, c: Option<usize>| {
                    r.zip(c).and_then(|rc| ids.get(&rc).copied())
                };
                GridCell {
                    at: (row, col),
                    omega_bit: omega_source(n, (row, col)).and_then(|c| s.index_of(c)),
                    empty: empty_tile(n, (row, col)),
                    next: [
                        look(row.checked_sub(1), Some(col)),
                        look(Some(row), Some(col + 1)),
                        look(Some(row + 1), Some(col)),
                        look(Some(row), col.checked_sub(1)),
                    ],
                }
            })
            .collect();
        let entries = (1..=n).map(|k| ids[&(2 * (n - k) + 1, n - k + 1)]).collect();
        Self { cells, entries }
    }

    fn tile(&self, id: usize, mask: u64) -> Tile {
        let c = &self.cells[id];
        if c.omega_bit.is_some_and(|b| mask >> b & 1 == 1) {
            Tile::Cross
        } else {
            c.empty
        }
    }
}

fn grid(n: usize) -> &'static Grid {
    static GRIDS: [OnceLock<Grid>; MAX_RANK] = [const { OnceLock::new() }; MAX_RANK];
    GRIDS[n - 1].get_or_init(|| Grid::build(n))
}

/// Outcome of following one pipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipeTrace {
    /// Entry index `k` (1-based).
    pub pipe: usize,
    /// Column `c` whose top edge the pipe leaves through.
    pub exit_column: usize,
    /// Crossing boxes the pipe passes through twice.
    pub self_crossings: usize,
    /// Boxes visited, in order.
    pub path: Vec<Cell>,
}

/// Walks pipe `k` over the tiles of `mask`. Calls `visit` on every box id.
fn walk(n: usize, mask: u64, k: usize, mut visit: impl FnMut(usize, Tile)) -> Result<(usize, usize)> {
    let g = grid(n);
    let mut id = g.entries[k - 1];
    let mut from = Side::W;
    // bit i of `once` / `twice`: crossing id i seen once / twice
    let (mut once, mut twice) = (0u128, 0u128);
    let limit = 4 * g.cells.len() + 4;
    for _ in 0..limit {
        let tile = g.tile(id, mask);
        visit(id, tile);
        if tile == Tile::Cross {
            let b = 1u128 << id;
            if twice & b != 0 {
                return Err(Error::Trace {
                    pipe: k,
                    reason: format!("crossing {:?} visited three times", g.cells[id].at),
                });
            }
            if once & b != 0 {
                twice |= b;
            } else {
                once |= b;
            }
        }
        let out = tile.exit(from);
        match g.cells[id].next[out as usize] {
            Some(next) => {
                id = next;
                from = out.opposite();
            }
            None => {
                let (row, col) = g.cells[id].at;
                if out == Side::N && row == 1 && col <= n {
                    return Ok((col, twice.count_ones() as usize));
                }
                return Err(Error::Trace {
                    pipe: k,
                    reason: format!("left the shape through {out:?} of ({row}, {col})"),
                });
            }
        }
    }
    Err(Error::Trace {
        pipe: k,
        reason: "did not terminate".into(),
    })
}

/// `w_D` without recording paths.
pub(crate) fn w_of_mask(n: usize, mask: u64) -> Result<SignedPermutation> {
    let mut window = vec![0i32; n];
    for k in 1..=n {
        let (col, signs) = walk(n, mask, k, |_, _| ())?;
        let j = n + 1 - col;
        if window[j - 1] != 0 {
            return Err(Error::Trace {
                pipe: k,
                reason: format!("exit column {col} reached twice"),
            });
        }
        let v = k as i32;
        window[j - 1] = if signs % 2 == 1 { v } else { -v };
    }
    SignedPermutation::new(window)
}

/// The tiled extended shape of a diagram with its traced pipes.
#[derive(Debug, Clone)]
pub struct PipeDiagram {
    diagram: SkewPipeDream,
    traces: Vec<PipeTrace>,
    /// For every box id, the strands passing through it: `+k` for pipe `k`
    /// until it turns in column `n + 1`, `-k` after, and so on.
    owners: Vec<Vec<i64>>,
}

/// Builds the tiles of `D` and follows every pipe.
pub fn trace_pipes(d: &SkewPipeDream) -> Result<PipeDiagram> {
    let n = d.rank();
    let g = grid(n);
    let mut owners = vec![Vec::new(); g.cells.len()];
    let mut traces = Vec::with_capacity(n);
    for k in 1..=n {
        let mut path = Vec::new();
        let mut strand = k as i64;
        let mut last_col = 0;
        let (exit_column, self_crossings) = walk(n, d.mask(), k, |id, _| {
            let at = g.cells[id].at;
            // one pass through the last column is one turn, however many boxes it spans
            if at.1 == n + 1 && last_col != n + 1 {
                strand = -strand;
            }
            last_col = at.1;
            path.push(at);
            owners[id].push(strand);
        })?;
        traces.push(PipeTrace {
            pipe: k,
            exit_column,
            self_crossings,
            path,
        });
    }
    let mut exits: Vec<usize> = traces.iter().map(|t| t.exit_column).collect();
    exits.sort_unstable();
    exits.dedup();
    if exits.len() != n {
        return Err(Error::Trace {
            pipe: 0,
            reason: "exit columns are not distinct".into(),
        });
    }
    Ok(PipeDiagram {
        diagram: *d,
        traces,
        owners,
    })
}

impl PipeDiagram {
    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn diagram(&self) -> &SkewPipeDream {
        &self.diagram
    }

    /// Tile at `(row, col)`, or `None` outside the extended shape.
    pub fn tile(&self, cell: Cell) -> Option<Tile> {
        let n = self.rank();
        if !in_extended_shape(n, cell) {
            return None;
        }
        let crossing = omega_source(n, cell).is_some_and(|c| self.diagram.contains(c));
        Some(if crossing { Tile::Cross } else { empty_tile(n, cell) })
    }

    /// Rows of tiles, top first; each row covers columns `1..=n+1`.
    pub fn tiles(&self) -> Vec<Vec<Option<Tile>>> {
        let n = self.rank();
        (1..=2 * n)
            .map(|r| (1..=n + 1).map(|c| self.tile((r, c))).collect())
            .collect()
    }

    pub fn traces(&self) -> &[PipeTrace] {
        &self.traces
    }

    /// `v_D(k) = n + 1 − c_k`, listed for `k = 1..=n`.
    pub fn v(&self) -> Vec<usize> {
        let n = self.rank();
        self.traces.iter().map(|t| n + 1 - t.exit_column).collect()
    }

    /// Self-crossing counts of `ℓ_1, …, ℓ_n`.
    pub fn signs(&self) -> Vec<usize> {
        self.traces.iter().map(|t| t.self_crossings).collect()
    }

    /// `w_D(j) = (−1)^{sign(L_j) + 1} v_D⁻¹(j)` with `L_{v_D(k)} = ℓ_k`.
    pub fn w(&self) -> SignedPermutation {
        let n = self.rank();
        let mut window = vec![0i32; n];
        for (t, v) in self.traces.iter().zip(self.v()) {
            let k = t.pipe as i32;
            window[v - 1] = if t.self_crossings % 2 == 1 { k } else { -k };
        }
        SignedPermutation::new(window).expect("exit columns are distinct")
    }

    pub fn is_reduced(&self) -> bool {
        let n = self.rank();
        self.diagram.len() + self.w().length() == n * n
    }

    /// Number of crossing boxes shared by each pair of strands of distinct
    /// pipes.
    ///
    /// A pipe runs as `+k` until it turns around in column `n + 1`, then as
    /// its mirror `-k`. Crossing `a` with `b` is the same event as crossing
    /// `-a` with `-b`, so keys are normalised to `(a, b)` with `|a| < |b|`
    /// and `a > 0`.
    pub fn pair_crossing_counts(&self) -> BTreeMap<(i64, i64), usize> {
        let g = grid(self.rank());
        let mut out = BTreeMap::new();
        for (id, strands) in self.owners.iter().enumerate() {
            if g.tile(id, self.diagram.mask()) != Tile::Cross {
                continue;
            }
            for (i, &a) in strands.iter().enumerate() {
                for &b in &strands[i + 1..] {
                    if a.abs() == b.abs() {
                        continue;
                    }
                    let (a, b) = if a.abs() < b.abs() { (a, b) } else { (b, a) };
                    let key = if a > 0 { (a, b) } else { (-a, -b) };
                    *out.entry(key).or_insert(0) += 1;
                }
            }
        }
        out
    }
}

/// `w_D`.
pub fn w_of_diagram(d: &SkewPipeDream) -> Result<SignedPermutation> {
    w_of_mask(d.rank(), d.mask())
}

/// Whether `|D| = n² − ℓ(w_D)`.
pub fn is_reduced_diagram(d: &SkewPipeDream) -> Result<bool> {
    let n = d.rank();
    Ok(d.len() + w_of_diagram(d)?.length() == n * n)
}

fn rsp_guard(n: usize, allow_opt_in: bool) -> Result<()> {
    check_rank(n)?;
    let max = if allow_opt_in { RSP_OPT_IN_RANK } else { RSP_MAX_RANK };
    if n > max {
        return Err(Error::RankGuard {
            what: "brute-force reduced diagram scan",
            n,
            max,
        });
    }
    Ok(())
}

/// `RSP(w)` by tracing every subset of `SY_n` of size `n² − ℓ(w)`.
///
/// Ranks above [`RSP_MAX_RANK`] need `allow_opt_in`.
pub fn rsp(w: &SignedPermutation, allow_opt_in: bool) -> Result<DiagramSet> {
    let n = w.rank();
    rsp_guard(n, allow_opt_in)?;
    let size = (n * n - w.length()) as u32;
    let masks: Vec<u64> = (0..1u64 << (n * n))
        .into_par_iter()
        .filter(|m| m.count_ones() == size)
        .filter(|&m| w_of_mask(n, m).map(|v| &v == w).unwrap_or(false))
        .collect();
    Ok(masks.into_iter().map(|m| SkewPipeDream::from_mask(n, m)).collect())
}

/// Every reduced diagram of rank `n`, grouped by `w_D`.
pub fn rsp_all(n: usize, allow_opt_in: bool) -> Result<BTreeMap<SignedPermutation, DiagramSet>> {
    rsp_guard(n, allow_opt_in)?;
    let hits: Vec<Result<Option<(SignedPermutation, u64)>>> = (0..1u64 << (n * n))
        .into_par_iter()
        .map(|m| {
            let w = w_of_mask(n, m)?;
            Ok((m.count_ones() as usize + w.length() == n * n).then_some((w, m)))
        })
        .collect();
    let mut out: BTreeMap<SignedPermutation, DiagramSet> = BTreeMap::new();
    for hit in hits {
        if let Some((w, m)) = hit? {
            out.entry(w).or_default().insert(SkewPipeDream::from_mask(n, m));
        }
    }
    Ok(out)
}
