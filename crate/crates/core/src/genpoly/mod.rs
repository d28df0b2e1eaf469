//! Bivariate generating functions over ladder closures.
//!
//! For a letter `j`, the staircase gains one extra box `(0, n + j)` above row 1.
//! Ladder moves in the column pair `{n − j + 1, n + j − 1}` may then push a `+`
//! into that box. Boxes of the pair carry the variable `x`; boxes of the
//! neighbouring pair `{n − j + 2, n + j}` in rows `p ≤ n − j + 1` (and the extra
//! box) carry `y`.

mod bipoly;
mod twocol;

use std::fmt;

use crate::diagrams::ladder::{closure_masks, Phantom};
use crate::diagrams::mitosis::mitosis_masks;
use crate::diagrams::{canonical_diagram, shape, Cell, DiagramSet, SkewPipeDream, Staircase};
use crate::error::{Error, Result};
use crate::weyl::SignedPermutation;

pub use bipoly::BiPoly;
pub use twocol::{row_count, tau_involution, two_column_projection, RowState, TwoColumnDiagram};

/// A subset of `SY_n ⊔ {(0, n + j)}`; the extra box is bit `n²`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedSkewPipeDream {
    n: u8,
    j: u8,
    mask: u64,
}

impl ExtendedSkewPipeDream {
    pub(crate) fn from_mask(n: usize, j: usize, mask: u64) -> Self {
        debug_assert!(mask >> (n * n + 1) == 0);
        Self {
            n: n as u8,
            j: j as u8,
            mask,
        }
    }

    pub fn from_diagram(d: &SkewPipeDream, j: usize) -> Result<Self> {
        check_letter(j, d.rank())?;
        Ok(Self::from_mask(d.rank(), j, d.mask()))
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn letter(&self) -> usize {
        self.j as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn extra_box(&self) -> Cell {
        (0, self.rank() + self.letter())
    }

    pub fn has_extra(&self) -> bool {
        self.mask >> (self.rank() * self.rank()) & 1 == 1
    }

    /// The part inside `SY_n`.
    pub fn base(&self) -> SkewPipeDream {
        let n = self.rank();
        SkewPipeDream::from_mask(n, self.mask & shape(n).full_mask())
    }

    pub fn contains(&self, cell: Cell) -> bool {
        if cell == self.extra_box() {
            self.has_extra()
        } else {
            self.base().contains(cell)
        }
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Boxes in position order, the extra box last.
    pub fn cells(&self) -> Vec<Cell> {
        let mut c = self.base().cells();
        if self.has_extra() {
            c.push(self.extra_box());
        }
        c
    }
}

impl fmt::Debug for ExtendedSkewPipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut c = self.cells();
        c.sort_unstable();
        write!(f, "ESPD{}/{}{:?}", self.n, self.j, c)
    }
}

fn check_letter(j: usize, n: usize) -> Result<()> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, max: n });
    }
    Ok(())
}

/// Bit masks of the `x` and `y` boxes for letter `j`.
fn weight_masks(s: &Staircase, j: usize) -> (u64, u64) {
    let n = s.rank();
    let (mut xm, mut ym) = (0u64, 1u64 << (n * n));
    for (k, &(p, q)) in s.cells().iter().enumerate() {
        if q == n + 1 - j || q == n + j - 1 {
            xm |= 1 << k;
        }
        if p + j <= n + 1 && (q == n + 2 - j || q == n + j) {
            ym |= 1 << k;
        }
    }
    (xm, ym)
}

fn mask_weight(s: &Staircase, j: usize, mask: u64) -> (u32, u32) {
    let (xm, ym) = weight_masks(s, j);
    ((mask & xm).count_ones(), (mask & ym).count_ones())
}

/// `(d(x, D), d(y, D))`.
pub fn weight_exponents(d: &SkewPipeDream, j: usize) -> Result<(u32, u32)> {
    check_letter(j, d.rank())?;
    Ok(mask_weight(shape(d.rank()), j, d.mask()))
}

/// `x^{d(x, D)} y^{d(y, D)}`.
pub fn weight_monomial(d: &SkewPipeDream, j: usize) -> Result<BiPoly> {
    let (a, b) = weight_exponents(d, j)?;
    Ok(BiPoly::monomial(a, b))
}

/// Weight of an extended diagram, at its own letter.
pub fn extended_weight_monomial(e: &ExtendedSkewPipeDream) -> BiPoly {
    let (a, b) = mask_weight(shape(e.rank()), e.letter(), e.mask());
    BiPoly::monomial(a, b)
}

pub(crate) fn phantom(n: usize, j: usize) -> Phantom {
    Phantom {
        letter: j,
        bit: n * n,
    }
}

pub(crate) fn extended_closure_masks(n: usize, j: usize, start: u64) -> Vec<u64> {
    closure_masks(shape(n), start, |_| true, Some(phantom(n, j)))
}

/// `𝓛^{(j)}(D)`.
pub fn extended_ladder_closure(d: &SkewPipeDream, j: usize) -> Result<Vec<ExtendedSkewPipeDream>> {
    check_letter(j, d.rank())?;
    let n = d.rank();
    Ok(extended_closure_masks(n, j, d.mask())
        .into_iter()
        .map(|m| ExtendedSkewPipeDream::from_mask(n, j, m))
        .collect())
}

/// The single extended ladder move at `cell`, if defined.
pub fn extended_ladder_move(
    e: &ExtendedSkewPipeDream,
    cell: Cell,
) -> Result<Option<ExtendedSkewPipeDream>> {
    let n = e.rank();
    let s = shape(n);
    let idx = s.index_of(cell).ok_or(Error::CellOutsideShape(cell.0, cell.1, n))?;
    let ph = phantom(n, e.letter());
    Ok(crate::diagrams::ladder::forward_landing(s, e.mask(), idx, Some(ph)).map(|to| {
        ExtendedSkewPipeDream::from_mask(n, e.letter(), (e.mask() & !(1 << idx)) | (1 << to))
    }))
}

fn weigh(s: &Staircase, j: usize, masks: impl IntoIterator<Item = u64>) -> BiPoly {
    masks.into_iter().map(|m| mask_weight(s, j, m)).collect()
}

fn closure_of(w: &SignedPermutation) -> Vec<u64> {
    let n = w.rank();
    closure_masks(shape(n), canonical_diagram(w).mask(), |_| true, None)
}

/// `F_w = Σ_{D ∈ 𝓛(D(w))} x^D`.
pub fn f_w(w: &SignedPermutation, j: usize) -> Result<BiPoly> {
    check_letter(j, w.rank())?;
    Ok(weigh(shape(w.rank()), j, closure_of(w)))
}

/// `F_w^{(j)}`, summed over the extended closure.
pub fn f_w_extended(w: &SignedPermutation, j: usize) -> Result<BiPoly> {
    check_letter(j, w.rank())?;
    let n = w.rank();
    let masks = extended_closure_masks(n, j, canonical_diagram(w).mask());
    Ok(weigh(shape(n), j, masks))
}

/// `F̃_w^{(j)}`: the part of `F_w` on diagrams killed by `mitosis_j⊤`.
pub fn f_w_tilde(w: &SignedPermutation, j: usize) -> Result<BiPoly> {
    check_letter(j, w.rank())?;
    let s = shape(w.rank());
    let dead = closure_of(w)
        .into_iter()
        .filter(|&m| mitosis_masks(s, m, j, true).is_empty());
    Ok(weigh(s, j, dead))
}

/// Outcome of checking the mitosis recursion at one `(w, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionReport {
    pub w: SignedPermutation,
    pub j: usize,
    /// Names of the checks that failed, in evaluation order.
    pub failures: Vec<String>,
}

impl RecursionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn describe(set: &DiagramSet) -> String {
    let cells: Vec<Vec<Cell>> = set.iter().map(|d| d.cells_row_major()).collect();
    format!("{cells:?}")
}

/// Checks `𝓛(D(ws_j)) = M_j(𝓛(D(w))) = mitosis_j⊤(𝓛(D(w)))` together with the
/// generating-function identities behind it. Requires `ℓ(w) < ℓ(ws_j)`.
pub fn verify_mitosis_recursion(w: &SignedPermutation, j: usize) -> Result<RecursionReport> {
    let n = w.rank();
    check_letter(j, n)?;
    let u = w.mul_simple_right(j);
    if u.length() < w.length() {
        return Err(Error::NotLengthAdditive(vec![j]));
    }
    let s = shape(n);
    let mut failures = Vec::new();
    let to_set = |ms: &[u64]| -> DiagramSet {
        ms.iter().map(|&m| SkewPipeDream::from_mask(n, m)).collect()
    };

    let base = closure_of(w);
    let target = to_set(&closure_of(&u));
    let mut full = Vec::new();
    let mut transposed = Vec::new();
    for &m in &base {
        full.extend(mitosis_masks(s, m, j, false));
        transposed.extend(mitosis_masks(s, m, j, true));
    }
    let full_set = to_set(&full);
    let t_set = to_set(&transposed);
    if full_set != target {
        failures.push(format!(
            "M_j(L(D(w))) = {} but L(D(ws_j)) = {}",
            describe(&full_set),
            describe(&target)
        ));
    }
    if t_set != target {
        failures.push(format!(
            "mitosis_j(L(D(w))) = {} but L(D(ws_j)) = {}",
            describe(&t_set),
            describe(&target)
        ));
    }
    if transposed.len() != t_set.len() {
        failures.push("mitosis_j images of distinct diagrams overlap".into());
    }

    let fw = weigh(s, j, base.iter().copied());
    let fu = weigh(s, j, target.iter().map(|d| d.mask()));
    let fj = f_w_extended(w, j)?;
    let left = &fw + &fu.shift(0, 1);
    let mid = &fw.swap_xy() + &fu.shift(1, 0);
    if left != fj || mid != fj {
        failures.push(format!("F_w + yF_ws = {left}, T(F_w) + xF_ws = {mid}, F^(j) = {fj}"));
    }
    if !fj.is_symmetric() {
        failures.push(format!("F^(j) = {fj} is not symmetric"));
    }
    let ft = f_w_tilde(w, j)?;
    if !ft.is_symmetric() {
        failures.push(format!("F~^(j) = {ft} is not symmetric"));
    }
    let xmy = &BiPoly::x() - &BiPoly::y();
    let lhs = &xmy * &weigh(s, j, transposed.iter().copied());
    let rhs = &fw - &fw.swap_xy();
    if lhs != rhs {
        failures.push(format!("(x - y) * mitosis sum = {lhs} but F_w - T(F_w) = {rhs}"));
    }

    let extra = 1u64 << (n * n);
    let ext = extended_closure_masks(n, j, canonical_diagram(w).mask());
    let top: DiagramSet = ext
        .iter()
        .filter(|&&m| m & extra != 0)
        .map(|&m| SkewPipeDream::from_mask(n, m & !extra))
        .collect();
    if top != target {
        failures.push(format!(
            "diagrams through the extra box give {} instead of {}",
            describe(&top),
            describe(&target)
        ));
    }
    let ext_u = to_set(&extended_closure_masks(n, j, canonical_diagram(&u).mask()));
    if ext_u != target {
        failures.push("extended closure of D(ws_j) reaches the extra box".into());
    }
    Ok(RecursionReport {
        w: w.clone(),
        j,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::ladder_closure;

    fn spd(n: usize, cells: &[Cell]) -> SkewPipeDream {
        SkewPipeDream::from_cells(n, cells.iter().copied()).unwrap()
    }

    fn perm(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn weight_example() {
        let d = spd(3, &[(1, 2), (1, 5), (2, 2), (2, 4), (3, 3)]);
        assert_eq!(weight_monomial(&d, 2).unwrap(), BiPoly::monomial(3, 1));
        let e = ExtendedSkewPipeDream::from_diagram(&d, 2).unwrap();
        let moved = extended_ladder_move(&e, (1, 2)).unwrap().unwrap();
        assert!(moved.has_extra());
        assert_eq!(moved.extra_box(), (0, 5));
        assert_eq!(
            moved.base(),
            spd(3, &[(1, 5), (2, 2), (2, 4), (3, 3)])
        );
        assert_eq!(extended_weight_monomial(&moved), BiPoly::monomial(2, 2));
        assert_eq!(weight_monomial(&SkewPipeDream::empty(3), 1).unwrap(), BiPoly::one());
    }

    #[test]
    fn small_generating_functions() {
        for n in 1..=3 {
            for j in 1..=n {
                assert_eq!(f_w(&SignedPermutation::longest(n), j).unwrap(), BiPoly::one());
                let ext = extended_ladder_closure(&SkewPipeDream::empty(n), j).unwrap();
                assert_eq!(ext.len(), 1);
                assert!(ext[0].is_empty());
            }
        }
        let w = perm("-2,1");
        assert_eq!(f_w(&w, 1).unwrap(), &BiPoly::x() + &BiPoly::y());
    }

    #[test]
    fn extended_closure_splits() {
        for n in 1..=3 {
            for w in SignedPermutation::all(n).unwrap() {
                for j in 1..=n {
                    let u = w.mul_simple_right(j);
                    if u.length() < w.length() {
                        continue;
                    }
                    let ext = extended_ladder_closure(&canonical_diagram(&w), j).unwrap();
                    let top: DiagramSet =
                        ext.iter().filter(|e| e.has_extra()).map(|e| e.base()).collect();
                    assert_eq!(top, ladder_closure(&canonical_diagram(&u)));
                    let bottom: DiagramSet =
                        ext.iter().filter(|e| !e.has_extra()).map(|e| e.base()).collect();
                    assert_eq!(bottom, ladder_closure(&canonical_diagram(&w)));
                }
            }
        }
    }

    #[test]
    fn recursion_holds_rank_two() {
        let mut pairs = 0;
        for w in SignedPermutation::all(2).unwrap() {
            for j in 1..=2 {
                if w.mul_simple_right(j).length() > w.length() {
                    let r = verify_mitosis_recursion(&w, j).unwrap();
                    assert!(r.passed(), "{:?}", r);
                    pairs += 1;
                }
            }
        }
        assert_eq!(pairs, 8);
        assert!(verify_mitosis_recursion(&SignedPermutation::longest(2), 1).is_err());
    }

    #[test]
    fn recursion_holds_rank_three() {
        for w in SignedPermutation::all(3).unwrap() {
            for j in 1..=3 {
                if w.mul_simple_right(j).length() > w.length() {
                    let r = verify_mitosis_recursion(&w, j).unwrap();
                    assert!(r.passed(), "{:?}", r);
                }
            }
        }
    }

    #[test]
    fn mitosis_strings_are_geometric() {
        for n in 1..=3 {
            let s = shape(n);
            for w in SignedPermutation::all(n).unwrap() {
                for j in 1..=n {
                    for m in closure_of(&w) {
                        let out = mitosis_masks(s, m, j, true);
                        if out.is_empty() {
                            continue;
                        }
                        let mut ws: Vec<(u32, u32)> =
                            out.iter().map(|&o| mask_weight(s, j, o)).collect();
                        ws.sort_unstable();
                        let (a0, b0) = ws[0];
                        // ascending order puts y^k·m first
                        for (t, &(a, b)) in ws.iter().enumerate() {
                            assert_eq!((a, b + t as u32), (a0 + t as u32, b0), "{w} {j}");
                        }
                    }
                }
            }
        }
    }
}
