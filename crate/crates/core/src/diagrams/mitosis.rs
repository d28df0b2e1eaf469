use super::ladder::closure_masks;
use super::{m_values, shape, DiagramSet, SkewPipeDream, Staircase};
use crate::error::{Error, Result};
use crate::weyl::{apply_word, k_min, SignedPermutation, Word};

/// 0-based `r₀` over a raw mask.
pub(crate) fn r0_bit(s: &Staircase, mask: u64, i: usize) -> Option<usize> {
    s.pair_positions(i)
        .filter(|&k| !s.right_of(k).is_some_and(|r| mask >> r & 1 == 1))
        .last()
}

/// Condition (†): every position of the pair at or above `r0` is occupied.
pub(crate) fn dagger_holds(s: &Staircase, mask: u64, i: usize, r0: usize) -> bool {
    s.pair_positions(i).filter(|&k| k >= r0).all(|k| mask >> k & 1 == 1)
}

pub(crate) fn start_bit(s: &Staircase, mask: u64, i: usize) -> usize {
    let n = s.rank();
    let (lo, hi) = (n + 1 - i, n + i - 1);
    let mut start = n - i + 2;
    for (k, &(p, q)) in s.cells().iter().enumerate() {
        if mask >> k & 1 == 1 {
            continue;
        }
        if q == lo {
            start = start.min(p);
        }
        if q == hi {
            start = start.min(p + 1);
        }
    }
    start
}

/// Masks of `M_i(D)` (or `mitosis_i⊤(D)` when `transposed`), sorted.
pub(crate) fn mitosis_masks(s: &Staircase, mask: u64, i: usize, transposed: bool) -> Vec<u64> {
    let Some(r0) = r0_bit(s, mask, i) else {
        return Vec::new();
    };
    if !dagger_holds(s, mask, i, r0) {
        return Vec::new();
    }
    let limit = if transposed {
        start_bit(s, mask, i)
    } else {
        usize::MAX
    };
    closure_masks(
        s,
        mask & !(1 << r0),
        |k| s.letter(k) == i && s.cells()[k].0 < limit,
        None,
    )
}

fn to_set(n: usize, masks: Vec<u64>) -> DiagramSet {
    masks.into_iter().map(|m| SkewPipeDream::from_mask(n, m)).collect()
}

fn check_letter(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(())
}

/// 1-based `r₀` for the column pair of letter `i`, if any position qualifies.
pub fn r0_index(d: &SkewPipeDream, i: usize) -> Result<Option<usize>> {
    check_letter(i, d.rank())?;
    Ok(r0_bit(shape(d.rank()), d.mask(), i).map(|k| k + 1))
}

/// `start_i⊤(D)`.
pub fn start_transposed(d: &SkewPipeDream, i: usize) -> Result<usize> {
    check_letter(i, d.rank())?;
    Ok(start_bit(shape(d.rank()), d.mask(), i))
}

/// `M_i(D)`.
pub fn mitosis_full(d: &SkewPipeDream, i: usize) -> Result<DiagramSet> {
    check_letter(i, d.rank())?;
    Ok(to_set(d.rank(), mitosis_masks(shape(d.rank()), d.mask(), i, false)))
}

/// `mitosis_i⊤(D)`.
pub fn mitosis_transposed(d: &SkewPipeDream, i: usize) -> Result<DiagramSet> {
    check_letter(i, d.rank())?;
    Ok(to_set(d.rank(), mitosis_masks(shape(d.rank()), d.mask(), i, true)))
}

fn apply_set(set: &DiagramSet, i: usize, transposed: bool) -> Result<DiagramSet> {
    let mut out = DiagramSet::new();
    for d in set {
        check_letter(i, d.rank())?;
        let s = shape(d.rank());
        out.extend(to_set(d.rank(), mitosis_masks(s, d.mask(), i, transposed)));
    }
    Ok(out)
}

pub fn mitosis_full_set(set: &DiagramSet, i: usize) -> Result<DiagramSet> {
    apply_set(set, i, false)
}

pub fn mitosis_transposed_set(set: &DiagramSet, i: usize) -> Result<DiagramSet> {
    apply_set(set, i, true)
}

/// `M_{j_r} ⋯ M_{j_1}({SY_n})` for the word `(j_1, …, j_r)`.
pub fn full_chain(word: &Word, n: usize) -> Result<DiagramSet> {
    word.validate(n)?;
    let mut set = DiagramSet::from([SkewPipeDream::full(n)]);
    for &j in word.letters() {
        set = mitosis_full_set(&set, j)?;
    }
    Ok(set)
}

/// `mitosis⊤_{j_r} ⋯ mitosis⊤_{j_1}({SY_n})`.
pub fn transposed_chain(word: &Word, n: usize) -> Result<DiagramSet> {
    word.validate(n)?;
    let mut set = DiagramSet::from([SkewPipeDream::full(n)]);
    for &j in word.letters() {
        set = mitosis_transposed_set(&set, j)?;
    }
    Ok(set)
}

/// `𝓜(w)`: the `M` chain along the letters of `i_C` at the positions `k_w`.
pub fn m_of_w(w: &SignedPermutation) -> DiagramSet {
    let n = w.rank();
    let word = k_min(w).carve(n);
    full_chain(&word, n).expect("carved letters are in range")
}

/// Whether every prefix keeps `mitosis⊤` nonempty on every diagram reached.
///
/// The word must be length-additive: each prefix of length `k` has length `k`.
pub fn is_poptotic(word: &Word, n: usize) -> Result<bool> {
    word.validate(n)?;
    let mut w = SignedPermutation::identity(n);
    for (k, &j) in word.letters().iter().enumerate() {
        w = w.mul_simple_right(j);
        if w.length() != k + 1 {
            return Err(Error::NotLengthAdditive(word.letters().to_vec()));
        }
    }
    debug_assert_eq!(apply_word(word, n).ok(), Some(w));
    let s = shape(n);
    let mut masks = vec![s.full_mask()];
    for &j in word.letters() {
        let mut next = Vec::new();
        for &m in &masks {
            let out = mitosis_masks(s, m, j, true);
            if out.is_empty() {
                return Ok(false);
            }
            next.extend(out);
        }
        next.sort_unstable();
        next.dedup();
        masks = next;
    }
    Ok(true)
}

/// Conditions on `m(w, ·)` characterising `|𝓛(D(w))| = 1`.
pub fn unique_closure_predicate(w: &SignedPermutation) -> bool {
    let n = w.rank();
    let mut m = m_values(w);
    m.push(0);
    // m[i - 1] = m(w, i)
    let decreasing = (0..n).all(|i| m[i + 1] == 0 || m[i] > m[i + 1]);
    let tail = (1..n).all(|i| {
        let (cur, next) = (m[i - 1], m[i]);
        let room = n - i + 1;
        if cur < room {
            next == 0
        } else if cur == room {
            next == room - 1 || next == 0
        } else {
            true
        }
    });
    decreasing && tail
}
