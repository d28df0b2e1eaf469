//! Signed permutations of `{±1, …, ±n}` (the Weyl group of type `C_n`),
//! words in the simple reflections and reduced subwords of the fixed
//! reduced word `i_C = (1, 2,1,2, 3,2,1,2,3, …)` of the longest element.
//!
//! Products follow function composition: `(uv)(x) = u(v(x))`, and a word
//! `(j_1, …, j_r)` stands for `s_{j_1} s_{j_2} ⋯ s_{j_r}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{check_rank, Error, Result};

/// Rank limit for anything that enumerates reduced words.
pub const REDUCED_WORD_MAX_RANK: usize = 5;

/// An element of the hyperoctahedral group, stored by its window
/// `(w(1), …, w(n))`. Values on negative arguments are derived from
/// `w(-i) = -w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        check_rank(n).map_err(|_| Error::InvalidWindow(window.clone()))?;
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidWindow(window));
            }
            seen[a] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    /// `w₀ = (1 −1)(2 −2)⋯(n −n)`.
    pub fn longest(n: usize) -> Self {
        Self {
            window: (1..=n as i32).map(|v| -v).collect(),
        }
    }

    /// The simple reflection `s_i`: `s_1` negates `1`, `s_k` swaps `k-1` and `k`
    /// (and their negatives).
    pub fn simple_reflection(i: usize, n: usize) -> Result<Self> {
        check_rank(n)?;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut w = Self::identity(n);
        if i == 1 {
            w.window[0] = -1;
        } else {
            w.window.swap(i - 2, i - 1);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// `w(x)` for `x ∈ {±1, …, ±n}`.
    pub fn apply(&self, x: i32) -> i32 {
        debug_assert!(x != 0 && x.unsigned_abs() as usize <= self.rank());
        if x > 0 {
            self.window[x as usize - 1]
        } else {
            -self.window[(-x) as usize - 1]
        }
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            let i = i as i32 + 1;
            if v > 0 {
                window[v as usize - 1] = i;
            } else {
                window[(-v) as usize - 1] = -i;
            }
        }
        Self { window }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            window: other.window.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    /// `w s_i` (act on positions).
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        if i == 1 {
            w.window[0] = -w.window[0];
        } else {
            w.window.swap(i - 2, i - 1);
        }
        w
    }

    /// `s_i w` (act on values).
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let window = self
            .window
            .iter()
            .map(|&v| {
                let a = v.unsigned_abs() as usize;
                let s = v.signum();
                if i == 1 {
                    if a == 1 {
                        -v
                    } else {
                        v
                    }
                } else if a == i - 1 {
                    s * i as i32
                } else if a == i {
                    s * (i as i32 - 1)
                } else {
                    v
                }
            })
            .collect();
        Self { window }
    }

    /// Coxeter length, `|{(i, j) ∈ Ĩ × [n] : −j ≤ i < j, w(i) > w(j)}|`.
    pub fn length(&self) -> usize {
        let n = self.rank() as i32;
        let mut count = 0;
        for j in 1..=n {
            let wj = self.apply(j);
            for i in -j..j {
                if i != 0 && self.apply(i) > wj {
                    count += 1;
                }
            }
        }
        count
    }

    /// All `2ⁿ·n!` elements, sorted lexicographically by window.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        check_rank(n)?;
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        permutations(&mut perm, 0, &mut |p| {
            for signs in 0u32..(1 << n) {
                let window = p
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if signs >> i & 1 == 1 { -v } else { v })
                    .collect();
                out.push(Self { window });
            }
        });
        out.sort();
        Ok(out)
    }

    /// Left descents `{i : ℓ(s_i w) < ℓ(w)}`.
    pub fn left_descents(&self) -> Vec<usize> {
        let l = self.length();
        (1..=self.rank())
            .filter(|&i| self.mul_simple_left(i).length() < l)
            .collect()
    }

    /// Right descents `{i : ℓ(w s_i) < ℓ(w)}`.
    pub fn right_descents(&self) -> Vec<usize> {
        let l = self.length();
        (1..=self.rank())
            .filter(|&i| self.mul_simple_right(i).length() < l)
            .collect()
    }
}

fn permutations(v: &mut Vec<i32>, k: usize, f: &mut impl FnMut(&[i32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.window)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Comma-separated window, e.g. `"-3,-2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

/// A word in the simple reflections; letters are `1..=n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        for &j in &self.0 {
            if j == 0 || j > n {
                return Err(Error::IndexOutOfRange { index: j, max: n });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Word::default());
        }
        Ok(Word(parse_list(s)?))
    }
}

/// Strictly increasing 1-based indices into `[N]`, `N = n²`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositionSequence(Vec<usize>);

impl PositionSequence {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        let big_n = n * n;
        let ok = indices.windows(2).all(|p| p[0] < p[1])
            && indices.iter().all(|&k| (1..=big_n).contains(&k));
        if ok {
            Ok(Self(indices))
        } else {
            Err(Error::InvalidPositions(indices))
        }
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|p| p[0] < p[1]));
        Self(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letters of `i_C` at these positions.
    pub fn carve(&self, n: usize) -> Word {
        Word(self.0.iter().map(|&k| ic_letter(n, k)).collect())
    }
}

fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<T>()
                .map_err(|_| Error::Parse(format!("bad list entry {t:?} in {s:?}")))
        })
        .collect()
}

pub fn simple_reflection(i: usize, n: usize) -> Result<SignedPermutation> {
    SignedPermutation::simple_reflection(i, n)
}

pub fn compose(u: &SignedPermutation, v: &SignedPermutation) -> Result<SignedPermutation> {
    u.compose(v)
}

pub fn length(w: &SignedPermutation) -> usize {
    w.length()
}

pub fn longest_element(n: usize) -> SignedPermutation {
    SignedPermutation::longest(n)
}

/// Letter of `i_C` at 1-based position `k`.
///
/// Block `b` (positions `(b-1)²+1 ..= b²`) reads `b, b-1, …, 1, …, b-1, b`.
pub fn ic_letter(_n: usize, k: usize) -> usize {
    debug_assert!(k >= 1);
    let b = (1..).find(|b: &usize| b * b >= k).unwrap();
    let offset = k - (b - 1) * (b - 1); // 1..=2b-1
    offset.abs_diff(b) + 1
}

pub fn i_c_word(n: usize) -> Word {
    Word((1..=n * n).map(|k| ic_letter(n, k)).collect())
}

/// `s_{j_1} ⋯ s_{j_r}`.
pub fn apply_word(word: &Word, n: usize) -> Result<SignedPermutation> {
    check_rank(n)?;
    word.validate(n)?;
    Ok(word
        .0
        .iter()
        .fold(SignedPermutation::identity(n), |w, &j| w.mul_simple_right(j)))
}

pub fn is_reduced(word: &Word, n: usize) -> Result<bool> {
    Ok(apply_word(word, n)?.length() == word.len())
}

/// Every reduced word of `w`, built by peeling right descents.
pub fn reduced_words(w: &SignedPermutation) -> Result<BTreeSet<Word>> {
    let n = w.rank();
    if n > REDUCED_WORD_MAX_RANK {
        return Err(Error::RankGuard {
            what: "reduced word enumeration",
            n,
            max: REDUCED_WORD_MAX_RANK,
        });
    }
    let mut memo = HashMap::new();
    Ok(reduced_words_rec(w, &mut memo).into_iter().collect())
}

fn reduced_words_rec(
    w: &SignedPermutation,
    memo: &mut HashMap<SignedPermutation, Vec<Word>>,
) -> Vec<Word> {
    if let Some(ws) = memo.get(w) {
        return ws.clone();
    }
    let out = if w.is_identity() {
        vec![Word::default()]
    } else {
        let mut out = Vec::new();
        for i in w.right_descents() {
            for mut word in reduced_words_rec(&w.mul_simple_right(i), memo) {
                word.0.push(i);
                out.push(word);
            }
        }
        out
    };
    memo.insert(w.clone(), out.clone());
    out
}

/// The `limit` lexicographically smallest reduced words of `w`, without
/// enumerating the rest; works at every rank.
pub fn reduced_words_up_to(w: &SignedPermutation, limit: usize) -> Vec<Word> {
    fn go(w: &SignedPermutation, prefix: &mut Vec<usize>, out: &mut Vec<Word>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if w.is_identity() {
            out.push(Word(prefix.clone()));
            return;
        }
        for i in w.left_descents() {
            prefix.push(i);
            go(&w.mul_simple_left(i), prefix, out, limit);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, &mut Vec::with_capacity(w.length()), &mut out, limit);
    out
}

/// One reduced word (lexicographically smallest right-descent peeling).
pub fn some_reduced_word(w: &SignedPermutation) -> Word {
    let mut letters = Vec::with_capacity(w.length());
    let mut cur = w.clone();
    while let Some(&i) = cur.right_descents().first() {
        letters.push(i);
        cur = cur.mul_simple_right(i);
    }
    letters.reverse();
    Word(letters)
}

/// Whether `v` has a reduced word carved out of `i_C` at positions `> from`
/// (0-based `from`). Memoised on `(from, v)`.
struct SubwordOracle {
    n: usize,
    letters: Vec<usize>,
    memo: HashMap<(usize, SignedPermutation), bool>,
}

impl SubwordOracle {
    fn new(n: usize) -> Self {
        Self {
            n,
            letters: i_c_word(n).0,
            memo: HashMap::new(),
        }
    }

    fn feasible(&mut self, from: usize, v: &SignedPermutation) -> bool {
        let remaining = self.letters.len() - from;
        let l = v.length();
        if l == 0 {
            return true;
        }
        if l > remaining {
            return false;
        }
        let key = (from, v.clone());
        if let Some(&b) = self.memo.get(&key) {
            return b;
        }
        let mut ok = false;
        for k in from..self.letters.len() {
            let u = v.mul_simple_left(self.letters[k]);
            if u.length() < l && self.feasible(k + 1, &u) {
                ok = true;
                break;
            }
        }
        self.memo.insert(key, ok);
        ok
    }

    fn collect(&mut self, from: usize, v: &SignedPermutation, prefix: &mut Vec<usize>, out: &mut Vec<PositionSequence>) {
        if v.length() == 0 {
            out.push(PositionSequence::from_sorted(prefix.clone()));
            return;
        }
        let l = v.length();
        for k in from..self.letters.len() {
            let u = v.mul_simple_left(self.letters[k]);
            if u.length() < l && self.feasible(k + 1, &u) {
                prefix.push(k + 1);
                self.collect(k + 1, &u, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// `R(i_C, w)`: increasing position tuples whose letters form a reduced word
/// of `w`, in lexicographic order.
pub fn reduced_subwords_of_ic(w: &SignedPermutation) -> Vec<PositionSequence> {
    let mut oracle = SubwordOracle::new(w.rank());
    let mut out = Vec::new();
    oracle.collect(0, w, &mut Vec::new(), &mut out);
    debug_assert_eq!(oracle.n, w.rank());
    out
}

/// `k_w`, the lexicographic minimum of `R(i_C, w)`; empty for the identity.
pub fn k_min(w: &SignedPermutation) -> PositionSequence {
    let mut oracle = SubwordOracle::new(w.rank());
    let mut cur = w.clone();
    let mut picked = Vec::with_capacity(w.length());
    let mut from = 0;
    while cur.length() > 0 {
        let l = cur.length();
        let k = (from..oracle.letters.len())
            .find(|&k| {
                let u = cur.mul_simple_left(oracle.letters[k]);
                u.length() < l && oracle.feasible(k + 1, &u)
            })
            .expect("i_C is a reduced word of the longest element");
        picked.push(k + 1);
        cur = cur.mul_simple_left(oracle.letters[k]);
        from = k + 1;
    }
    PositionSequence::from_sorted(picked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn simple_reflections() {
        assert_eq!(simple_reflection(1, 2).unwrap().window(), &[-1, 2]);
        assert_eq!(simple_reflection(2, 2).unwrap().window(), &[2, 1]);
        assert_eq!(simple_reflection(3, 3).unwrap().window(), &[1, 3, 2]);
        assert!(matches!(
            simple_reflection(3, 2),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        ));
        assert!(simple_reflection(0, 2).is_err());
    }

    #[test]
    fn composition_convention() {
        let s1 = simple_reflection(1, 2).unwrap();
        let s2 = simple_reflection(2, 2).unwrap();
        // s2(s1(1)) = s2(-1) = -2, s2(s1(2)) = s2(2) = 1
        assert_eq!(compose(&s2, &s1).unwrap().window(), &[-2, 1]);
        let w = sp("-3,-2,1");
        let e = SignedPermutation::identity(3);
        assert_eq!(compose(&w, &e).unwrap(), w);
        assert!(compose(&w, &w.inverse()).unwrap().is_identity());
        assert!(matches!(
            compose(&w, &s1),
            Err(Error::RankMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn mul_simple_matches_compose() {
        for w in SignedPermutation::all(3).unwrap() {
            for i in 1..=3 {
                let s = simple_reflection(i, 3).unwrap();
                assert_eq!(w.mul_simple_right(i), w.compose(&s).unwrap());
                assert_eq!(w.mul_simple_left(i), s.compose(&w).unwrap());
            }
        }
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPermutation::identity(4).length(), 0);
        for n in 1..=5 {
            assert_eq!(longest_element(n).length(), n * n);
        }
        assert_eq!(sp("-3,-2,1").length(), 5);
    }

    #[test]
    fn ic_word() {
        assert_eq!(i_c_word(1).0, vec![1]);
        assert_eq!(i_c_word(2).0, vec![1, 2, 1, 2]);
        assert_eq!(i_c_word(3).0, vec![1, 2, 1, 2, 3, 2, 1, 2, 3]);
        for n in 1..=6 {
            let w = i_c_word(n);
            assert_eq!(w.len(), n * n);
            assert_eq!(apply_word(&w, n).unwrap(), longest_element(n));
            assert!(is_reduced(&w, n).unwrap());
        }
    }

    #[test]
    fn words() {
        assert!(apply_word(&Word::default(), 3).unwrap().is_identity());
        assert_eq!(apply_word(&Word(vec![2, 1, 3, 2, 1]), 3).unwrap(), sp("-3,-2,1"));
        assert_eq!(apply_word(&Word(vec![1, 2, 1, 2]), 2).unwrap(), sp("-1,-2"));
        assert!(!is_reduced(&Word(vec![1, 1]), 2).unwrap());
        assert!(is_reduced(&Word(vec![2, 1, 3, 2, 1]), 3).unwrap());
        assert!(apply_word(&Word(vec![4]), 3).is_err());
    }

    #[test]
    fn reduced_word_sets() {
        let e = SignedPermutation::identity(3);
        assert_eq!(reduced_words(&e).unwrap(), BTreeSet::from([Word::default()]));
        let s1 = simple_reflection(1, 3).unwrap();
        assert_eq!(reduced_words(&s1).unwrap(), BTreeSet::from([Word(vec![1])]));

        // exhaustive search over all length-2 words for [-2, 1]
        let w = sp("-2,1");
        let brute: BTreeSet<Word> = (1..=2)
            .flat_map(|a| (1..=2).map(move |b| Word(vec![a, b])))
            .filter(|word| apply_word(word, 2).unwrap() == w)
            .collect();
        assert_eq!(reduced_words(&w).unwrap(), brute);
        assert!(brute.contains(&Word(vec![2, 1])));

        assert!(matches!(
            reduced_words(&SignedPermutation::identity(6)),
            Err(Error::RankGuard { .. })
        ));
    }

    #[test]
    fn reduced_words_of_longest_rank2() {
        let words = reduced_words(&longest_element(2)).unwrap();
        assert_eq!(
            words,
            BTreeSet::from([Word(vec![1, 2, 1, 2]), Word(vec![2, 1, 2, 1])])
        );
    }

    #[test]
    fn subwords_rank2_table() {
        let cases = [
            ("1,2", vec![1, 2, 1, 2], vec![], vec![]),
            ("-1,2", vec![1], vec![vec![1], vec![3]], vec![1]),
            ("2,1", vec![2], vec![vec![2], vec![4]], vec![2]),
            ("2,-1", vec![1, 2], vec![vec![1, 2], vec![1, 4], vec![3, 4]], vec![1, 2]),
            ("-2,1", vec![2, 1], vec![vec![2, 3]], vec![2, 3]),
            ("-2,-1", vec![1, 2, 1], vec![vec![1, 2, 3]], vec![1, 2, 3]),
            ("1,-2", vec![2, 1, 2], vec![vec![2, 3, 4]], vec![2, 3, 4]),
        ];
        for (window, word, subwords, kw) in cases {
            let w = sp(window);
            if w.is_identity() {
                assert!(k_min(&w).is_empty());
                continue;
            }
            assert_eq!(apply_word(&Word(word), 2).unwrap(), w);
            let got: Vec<Vec<usize>> = reduced_subwords_of_ic(&w)
                .into_iter()
                .map(|p| p.0)
                .collect();
            assert_eq!(got, subwords, "R(i_C, {w})");
            assert_eq!(k_min(&w).0, kw);
        }
    }

    #[test]
    fn subwords_rank3_example() {
        let w = apply_word(&Word(vec![1, 3, 2]), 3).unwrap();
        assert_eq!(w, apply_word(&Word(vec![3, 1, 2]), 3).unwrap());
        let got: Vec<Vec<usize>> = reduced_subwords_of_ic(&w).into_iter().map(|p| p.0).collect();
        assert_eq!(
            got,
            vec![vec![1, 5, 6], vec![1, 5, 8], vec![3, 5, 6], vec![3, 5, 8], vec![5, 7, 8]]
        );
        assert_eq!(k_min(&w).0, vec![1, 5, 6]);
    }

    #[test]
    fn k_min_is_reduced_and_minimal() {
        for n in 1..=3 {
            for w in SignedPermutation::all(n).unwrap() {
                let k = k_min(&w);
                assert_eq!(k.len(), w.length());
                let word = k.carve(n);
                assert_eq!(apply_word(&word, n).unwrap(), w);
                let all = reduced_subwords_of_ic(&w);
                assert_eq!(all.iter().min().cloned().unwrap_or_default(), k);
            }
        }
    }

    #[test]
    fn coxeter_properties() {
        for n in 1..=3 {
            for w in SignedPermutation::all(n).unwrap() {
                let l = w.length();
                assert_eq!(w.inverse().length(), l);
                for i in 1..=n {
                    let m = w.mul_simple_right(i).length();
                    assert!(m == l + 1 || m + 1 == l);
                }
                for word in reduced_words(&w).unwrap() {
                    assert_eq!(word.len(), l);
                    assert_eq!(apply_word(&word, n).unwrap(), w);
                }
                assert_eq!(apply_word(&some_reduced_word(&w), n).unwrap(), w);
            }
        }
    }

    #[test]
    fn group_order() {
        let mut fact = 1;
        for n in 1..=4 {
            fact *= n;
            let all = SignedPermutation::all(n).unwrap();
            assert_eq!(all.len(), (1 << n) * fact);
            assert!(all.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn parse_and_display() {
        let w: SignedPermutation = " -3, -2,1".parse().unwrap();
        assert_eq!(w.to_string(), "-3,-2,1");
        assert!("1,1".parse::<SignedPermutation>().is_err());
        assert!("1,x".parse::<SignedPermutation>().is_err());
        assert!("0,1".parse::<SignedPermutation>().is_err());
        assert_eq!("".parse::<Word>().unwrap(), Word::default());
        assert_eq!("2,1,2".parse::<Word>().unwrap(), Word(vec![2, 1, 2]));
        assert!(PositionSequence::new(vec![2, 2], 2).is_err());
        assert!(PositionSequence::new(vec![1, 5], 2).is_err());
        assert!(PositionSequence::new(vec![1, 4], 2).is_ok());
    }

    #[test]
    fn bounded_words_are_a_prefix() {
        for n in 1..=3 {
            for w in SignedPermutation::all(n).unwrap() {
                let all: Vec<Word> = reduced_words(&w).unwrap().into_iter().collect();
                for k in [1, 3, usize::MAX] {
                    let some = reduced_words_up_to(&w, k);
                    assert_eq!(some[..], all[..k.min(all.len())]);
                }
            }
        }
        let w0 = SignedPermutation::longest(6);
        let words = reduced_words_up_to(&w0, 2);
        assert_eq!(words.len(), 2);
        assert!(words.iter().all(|x| apply_word(x, 6).unwrap() == w0 && x.len() == 36));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
            (
                Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n),
            )
                .prop_map(|(p, s)| {
                    let window = p
                        .into_iter()
                        .zip(s)
                        .map(|(v, neg)| if neg { -v } else { v })
                        .collect();
                    SignedPermutation::new(window).unwrap()
                })
        }

        proptest! {
            #[test]
            fn group_laws((u, v, w) in (1usize..=6).prop_flat_map(|n| (signed_perm(n), signed_perm(n), signed_perm(n)))) {
                let uv_w = u.compose(&v).unwrap().compose(&w).unwrap();
                let u_vw = u.compose(&v.compose(&w).unwrap()).unwrap();
                prop_assert_eq!(uv_w, u_vw);
                prop_assert!(u.compose(&u.inverse()).unwrap().is_identity());
                prop_assert_eq!(u.inverse().inverse(), u.clone());
                prop_assert_eq!(u.inverse().length(), u.length());
                let round: SignedPermutation = u.to_string().parse().unwrap();
                prop_assert_eq!(round, u);
            }
        }
    }
}
