//! String cones and string polytopes for the reduced word `i_C`, and the
//! faces indexed by skew pipe dreams.
//!
//! Coordinates `x_1, …, x_N` are grouped into blocks; block `b` holds the
//! indices `(b−1)² + 1 ..= b²`. The cone says each block is weakly decreasing
//! and ends non-negative. The polytope adds, for each `j`,
//! `x_j ≤ λ_{i_j} − Σ_{t > j} c_{i_j, i_t} x_t`. Facet `r` is `x_r = x_{r+1}`
//! inside a block and `x_r = 0` at a block end.

mod demazure;
pub mod linalg;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::diagrams::{m_of_w, position_sequences, SkewPipeDream};
use crate::error::{check_rank, Error, Result};
use crate::weyl::{i_c_word, SignedPermutation};

pub use demazure::{demazure_character, demazure_character_word, demazure_dimension, WeightPolynomial};

/// Default bound on enumerated lattice points.
pub const DEFAULT_POINT_CAP: usize = 2_000_000;

/// Coefficients in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        check_rank(coeffs.len())?;
        Ok(Self(coeffs))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `ϖ_i`.
    pub fn fundamental(i: usize, n: usize) -> Self {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        Self(c)
    }

    /// `ρ = ϖ_1 + … + ϖ_n`.
    pub fn rho(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub(crate) fn check_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NonDominant(self.0.clone()))
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("weight {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

/// Cartan matrix, 0-based: `c[2−1][1−1] = −2`, `c[1−1][2−1] = −1`.
pub fn cartan(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for (k, row) in c.iter_mut().enumerate() {
        row[k] = 2;
    }
    if n >= 2 {
        c[1][0] = -2;
        c[0][1] = -1;
    }
    for k in 1..n.saturating_sub(1) {
        c[k][k + 1] = -1;
        c[k + 1][k] = -1;
    }
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EqKind {
    /// `x_r = x_{r+1}`.
    EqNext,
    /// `x_r = 0`.
    EqZero,
}

/// Whether 1-based index `r` closes its block.
pub fn is_block_end(r: usize) -> bool {
    let b = (1..).find(|b: &usize| b * b >= r).unwrap();
    b * b == r
}

/// The kind of facet `r`.
pub fn facet_kind(r: usize) -> EqKind {
    if is_block_end(r) {
        EqKind::EqZero
    } else {
        EqKind::EqNext
    }
}

/// One linear constraint `coeffs · x ≤ rhs` (or `=` for equalities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linear {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
}

impl Linear {
    fn eval(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// The string cone or polytope intersected with some facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSystem {
    n: usize,
    lambda: Option<Weight>,
    equalities: Vec<(usize, EqKind)>,
}

/// `𝒞_{i_C}`.
pub fn string_cone(n: usize) -> Result<FaceSystem> {
    check_rank(n)?;
    Ok(FaceSystem {
        n,
        lambda: None,
        equalities: Vec::new(),
    })
}

/// `Δ_{i_C}(λ)`.
pub fn string_polytope(lambda: &Weight) -> Result<FaceSystem> {
    lambda.check_dominant()?;
    Ok(FaceSystem {
        n: lambda.rank(),
        lambda: Some(lambda.clone()),
        equalities: Vec::new(),
    })
}

/// `F_D(Δ_{i_C}(λ))`: the facets at the positions of `D`.
pub fn face_of_diagram(d: &SkewPipeDream, lambda: &Weight) -> Result<FaceSystem> {
    if d.rank() != lambda.rank() {
        return Err(Error::RankMismatch {
            left: d.rank(),
            right: lambda.rank(),
        });
    }
    let (inside, _) = position_sequences(d);
    string_polytope(lambda)?.with_facets(inside.indices())
}

impl FaceSystem {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Ambient dimension `N = n²`.
    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn lambda(&self) -> Option<&Weight> {
        self.lambda.as_ref()
    }

    pub fn equalities(&self) -> &[(usize, EqKind)] {
        &self.equalities
    }

    /// Intersects with the facets `F_r` for the given 1-based indices.
    pub fn with_facets(mut self, indices: &[usize]) -> Result<Self> {
        let big_n = self.dim();
        for &r in indices {
            if r == 0 || r > big_n {
                return Err(Error::IndexOutOfRange { index: r, max: big_n });
            }
            self.equalities.push((r, facet_kind(r)));
        }
        self.equalities.sort_unstable();
        self.equalities.dedup();
        Ok(self)
    }

    /// Cone inequalities then (for polytopes) upper bounds, as `coeffs · x ≤ rhs`.
    pub fn inequalities(&self) -> Vec<Linear> {
        let big_n = self.dim();
        let mut out = Vec::new();
        for r in 1..=big_n {
            let mut coeffs = vec![0; big_n];
            coeffs[r - 1] = -1;
            if !is_block_end(r) {
                coeffs[r] = 1;
            }
            out.push(Linear { coeffs, rhs: 0 });
        }
        if let Some(lambda) = &self.lambda {
            let ic = i_c_word(self.n);
            let c = cartan(self.n);
            let letters = ic.letters();
            for j in 1..=big_n {
                let ij = letters[j - 1];
                let mut coeffs = vec![0; big_n];
                coeffs[j - 1] = 1;
                for t in j + 1..=big_n {
                    coeffs[t - 1] += c[ij - 1][letters[t - 1] - 1];
                }
                out.push(Linear {
                    coeffs,
                    rhs: lambda.coeffs()[ij - 1],
                });
            }
        }
        out
    }

    /// The facet equalities as `coeffs · x = 0`.
    pub fn equality_rows(&self) -> Vec<Linear> {
        let big_n = self.dim();
        self.equalities
            .iter()
            .map(|&(r, kind)| {
                let mut coeffs = vec![0; big_n];
                coeffs[r - 1] = 1;
                if kind == EqKind::EqNext {
                    coeffs[r] = -1;
                }
                Linear { coeffs, rhs: 0 }
            })
            .collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.dim()
            && self.inequalities().iter().all(|l| l.eval(x) <= l.rhs)
            && self.equality_rows().iter().all(|l| l.eval(x) == l.rhs)
    }

    /// Integer points, lexicographically sorted. Fails beyond `cap` points.
    pub fn lattice_points(&self, cap: usize) -> Result<Vec<Vec<i64>>> {
        let lambda = self.lambda.as_ref().ok_or(Error::Unbounded)?;
        let big_n = self.dim();
        let letters = i_c_word(self.n).letters().to_vec();
        let c = cartan(self.n);
        let mut eq = vec![None; big_n + 1];
        for &(r, kind) in &self.equalities {
            eq[r] = Some(kind);
        }
        let mut walker = Walker {
            big_n,
            letters,
            cartan: c,
            lambda: lambda.coeffs().to_vec(),
            eq,
            x: vec![0; big_n + 2],
            out: Vec::new(),
            cap,
        };
        walker.descend(big_n)?;
        let mut out = walker.out;
        out.sort_unstable();
        Ok(out)
    }

    /// Dimension of the affine hull of the integer points.
    ///
    /// String polytopes are integral, so this is the dimension of the face.
    pub fn lattice_dimension(&self, cap: usize) -> Result<isize> {
        Ok(linalg::affine_dimension(&self.lattice_points(cap)?))
    }

    /// All vertices, by solving every square subsystem of tight constraints.
    pub fn vertices(&self) -> Result<Vec<Vec<linalg::Q>>> {
        if self.lambda.is_none() {
            return Err(Error::Unbounded);
        }
        let big_n = self.dim();
        let ineq = self.inequalities();
        let eqs = self.equality_rows();
        let mut found = BTreeSet::new();
        let mut chosen = Vec::with_capacity(big_n);
        choose(ineq.len(), big_n.saturating_sub(eqs.len()), 0, &mut chosen, &mut |set| {
            let rows: Vec<&Linear> = eqs.iter().chain(set.iter().map(|&i| &ineq[i])).collect();
            if rows.len() != big_n {
                return;
            }
            let a: Vec<Vec<i64>> = rows.iter().map(|l| l.coeffs.clone()).collect();
            let b: Vec<i64> = rows.iter().map(|l| l.rhs).collect();
            let Some(x) = linalg::solve(&a, &b) else { return };
            let feasible = ineq.iter().all(|l| {
                let v: linalg::Q = l.coeffs.iter().zip(&x).map(|(&c, &xi)| xi * c).sum();
                v <= linalg::Q::from_integer(l.rhs)
            });
            if feasible {
                found.insert(x);
            }
        });
        Ok(found.into_iter().collect())
    }
}

fn choose(m: usize, k: usize, from: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for i in from..m {
        if m - i < k - acc.len() {
            break;
        }
        acc.push(i);
        choose(m, k, i + 1, acc, f);
        acc.pop();
    }
}

struct Walker {
    big_n: usize,
    letters: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    lambda: Vec<i64>,
    eq: Vec<Option<EqKind>>,
    /// 1-based, with a zero sentinel at `big_n + 1`.
    x: Vec<i64>,
    out: Vec<Vec<i64>>,
    cap: usize,
}

impl Walker {
    fn descend(&mut self, j: usize) -> Result<()> {
        if j == 0 {
            if self.out.len() >= self.cap {
                return Err(Error::PointCap(self.cap));
            }
            self.out.push(self.x[1..=self.big_n].to_vec());
            return Ok(());
        }
        let ij = self.letters[j - 1];
        let mut upper = self.lambda[ij - 1];
        for t in j + 1..=self.big_n {
            upper -= self.cartan[ij - 1][self.letters[t - 1] - 1] * self.x[t];
        }
        let lower = if is_block_end(j) { 0 } else { self.x[j + 1] };
        let (lo, hi) = match self.eq[j] {
            None => (lower, upper),
            Some(EqKind::EqZero) => (0, 0),
            Some(EqKind::EqNext) => (self.x[j + 1], self.x[j + 1]),
        };
        let (lo, hi) = (lo.max(lower), hi.min(upper));
        for v in lo..=hi {
            self.x[j] = v;
            self.descend(j - 1)?;
        }
        self.x[j] = 0;
        Ok(())
    }
}

/// `|⋃_{D ∈ 𝓜(w)} F_D(Δ(λ)) ∩ ℤ^N|`.
pub fn union_face_lattice_points(w: &SignedPermutation, lambda: &Weight) -> Result<usize> {
    if w.rank() != lambda.rank() {
        return Err(Error::RankMismatch {
            left: w.rank(),
            right: lambda.rank(),
        });
    }
    let mut all = BTreeSet::new();
    for d in m_of_w(w) {
        all.extend(face_of_diagram(&d, lambda)?.lattice_points(DEFAULT_POINT_CAP)?);
    }
    Ok(all.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::length;

    fn weight(c: &[i64]) -> Weight {
        Weight::new(c.to_vec()).unwrap()
    }

    #[test]
    fn cartan_entries() {
        let c = cartan(3);
        assert_eq!(c, vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -1, 2]]);
        assert_eq!(cartan(1), vec![vec![2]]);
    }

    #[test]
    fn facet_order() {
        for n in 1..=4 {
            let kinds: Vec<EqKind> = (1..=n * n).map(facet_kind).collect();
            for (r, k) in kinds.iter().enumerate() {
                let r = r + 1;
                let last = (1..=n).any(|b| b * b == r);
                assert_eq!(*k == EqKind::EqZero, last);
            }
        }
        assert_eq!(
            (1..=4).map(facet_kind).collect::<Vec<_>>(),
            vec![EqKind::EqZero, EqKind::EqNext, EqKind::EqNext, EqKind::EqZero]
        );
    }

    #[test]
    fn rank_two_cone() {
        let cone = string_cone(2).unwrap();
        let ineq = cone.inequalities();
        assert_eq!(ineq.len(), 4);
        // x1 >= 0; x2 >= x3 >= x4 >= 0
        assert_eq!(ineq[0].coeffs, vec![-1, 0, 0, 0]);
        assert_eq!(ineq[1].coeffs, vec![0, -1, 1, 0]);
        assert_eq!(ineq[2].coeffs, vec![0, 0, -1, 1]);
        assert_eq!(ineq[3].coeffs, vec![0, 0, 0, -1]);
        assert!(cone.contains(&[0, 0, 0, 0]));
        assert!(cone.contains(&[7, 5, 3, 1]));
        assert!(!cone.contains(&[0, 1, 2, 0]));
        assert_eq!(cone.lattice_points(10), Err(Error::Unbounded));
    }

    #[test]
    fn zero_weight_is_a_point() {
        for n in 1..=3 {
            let p = string_polytope(&Weight::zero(n)).unwrap();
            assert_eq!(p.lattice_points(10).unwrap(), vec![vec![0; n * n]]);
        }
        assert!(matches!(
            string_polytope(&weight(&[1, -1])),
            Err(Error::NonDominant(_))
        ));
    }

    #[test]
    fn lattice_points_match_filtering() {
        let lam = Weight::rho(2);
        let poly = string_polytope(&lam).unwrap();
        let pts = poly.lattice_points(1000).unwrap();
        assert_eq!(pts.len(), 16);
        let mut brute = Vec::new();
        for a in 0..=4i64 {
            for b in 0..=4 {
                for c in 0..=4 {
                    for d in 0..=4 {
                        let x = vec![a, b, c, d];
                        if poly.contains(&x) {
                            brute.push(x);
                        }
                    }
                }
            }
        }
        assert_eq!(pts, brute);
        for mask in 0..16u64 {
            let d = SkewPipeDream::from_mask(2, mask);
            let face = face_of_diagram(&d, &lam).unwrap();
            let filtered: Vec<Vec<i64>> =
                brute.iter().filter(|x| face.contains(x)).cloned().collect();
            assert_eq!(face.lattice_points(1000).unwrap(), filtered);
        }
        assert_eq!(poly.lattice_points(3), Err(Error::PointCap(3)));
    }

    #[test]
    fn counts_match_demazure() {
        for n in 2..=3 {
            let mut lams: Vec<Weight> = (1..=n).map(|i| Weight::fundamental(i, n)).collect();
            lams.push(Weight::rho(n));
            for lam in &lams {
                let total = string_polytope(lam).unwrap().lattice_points(DEFAULT_POINT_CAP).unwrap().len();
                let w0 = SignedPermutation::longest(n);
                assert_eq!(total as i64, demazure_dimension(&w0, lam).unwrap());
                for w in SignedPermutation::all(n).unwrap() {
                    assert_eq!(
                        union_face_lattice_points(&w, lam).unwrap() as i64,
                        demazure_dimension(&w, lam).unwrap(),
                        "{w} {lam}"
                    );
                }
            }
        }
        assert_eq!(union_face_lattice_points(&SignedPermutation::identity(2), &Weight::rho(2)).unwrap(), 1);
    }

    #[test]
    fn inverse_convention_is_ruled_out() {
        let rho = Weight::rho(2);
        let mismatched: Vec<String> = SignedPermutation::all(2)
            .unwrap()
            .into_iter()
            .filter(|w| {
                union_face_lattice_points(w, &rho).unwrap() as i64
                    != demazure_dimension(&w.inverse(), &rho).unwrap()
            })
            .map(|w| w.to_string())
            .collect();
        assert!(!mismatched.is_empty());
    }

    #[test]
    fn extreme_faces() {
        let lam = Weight::rho(2);
        let full = face_of_diagram(&SkewPipeDream::full(2), &lam).unwrap();
        assert_eq!(full.lattice_points(10).unwrap(), vec![vec![0; 4]]);
        let empty = face_of_diagram(&SkewPipeDream::empty(2), &lam).unwrap();
        assert_eq!(empty, string_polytope(&lam).unwrap());
        assert_eq!(empty.lattice_dimension(1000).unwrap(), 4);
    }

    #[test]
    fn face_dimension_is_length() {
        for n in 1..=3 {
            let lam = Weight::rho(n);
            for w in SignedPermutation::all(n).unwrap() {
                for d in m_of_w(&w) {
                    let dim = face_of_diagram(&d, &lam).unwrap().lattice_dimension(DEFAULT_POINT_CAP).unwrap();
                    assert_eq!(dim, length(&w) as isize, "{w}");
                }
            }
        }
    }

    #[test]
    fn rho_polytope_is_integral() {
        let poly = string_polytope(&Weight::rho(2)).unwrap();
        let verts = poly.vertices().unwrap();
        assert!(!verts.is_empty());
        assert!(verts.iter().flatten().all(|q| q.is_integer()));
        let lattice = poly.lattice_points(1000).unwrap();
        for v in &verts {
            let v: Vec<i64> = v.iter().map(|q| q.to_integer()).collect();
            assert!(lattice.contains(&v));
        }
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("1,0,2".parse::<Weight>().unwrap(), weight(&[1, 0, 2]));
        assert!("1,x".parse::<Weight>().is_err());
        assert_eq!(Weight::rho(3).to_string(), "1,1,1");
        assert!(Weight::rho(2).is_regular() && !Weight::fundamental(1, 2).is_regular());
    }
}
