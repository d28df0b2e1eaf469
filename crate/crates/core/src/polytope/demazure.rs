//! Demazure characters, used as an independent count of lattice points.

use std::collections::BTreeMap;

use super::{cartan, Weight};
use crate::error::Result;
use crate::weyl::{some_reduced_word, SignedPermutation, Word};

/// A formal character `Σ c_μ e^μ` over weights in fundamental-weight coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightPolynomial {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl WeightPolynomial {
    pub fn exponential(mu: &Weight) -> Self {
        let mut p = Self::default();
        p.add(mu.coeffs().to_vec(), 1);
        p
    }

    fn add(&mut self, mu: Vec<i64>, c: i64) {
        let e = self.terms.entry(mu.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&mu);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, mu: &[i64]) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    /// Sum of coefficients, the dimension of the module.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    /// The Demazure operator `π_i`.
    pub fn demazure(&self, i: usize) -> Self {
        let n = self.terms.keys().next().map_or(0, |k| k.len());
        if n == 0 {
            return self.clone();
        }
        let c = cartan(n);
        let alpha: Vec<i64> = (0..n).map(|k| c[k][i - 1]).collect();
        let shifted = |mu: &[i64], t: i64| -> Vec<i64> {
            mu.iter().zip(&alpha).map(|(m, a)| m - t * a).collect()
        };
        let mut out = Self::default();
        for (mu, &coef) in &self.terms {
            let m = mu[i - 1];
            if m >= 0 {
                for t in 0..=m {
                    out.add(shifted(mu, t), coef);
                }
            } else {
                for t in 1..-m {
                    out.add(shifted(mu, -t), -coef);
                }
            }
        }
        out
    }
}

/// `π_{j_1} ⋯ π_{j_r}(e^λ)` for the word `(j_1, …, j_r)`.
pub fn demazure_character_word(word: &Word, lambda: &Weight) -> Result<WeightPolynomial> {
    lambda.check_dominant()?;
    word.validate(lambda.rank())?;
    let mut p = WeightPolynomial::exponential(lambda);
    for &j in word.letters().iter().rev() {
        p = p.demazure(j);
    }
    Ok(p)
}

/// Demazure character of `w` at `λ`, along one reduced word of `w`.
pub fn demazure_character(w: &SignedPermutation, lambda: &Weight) -> Result<WeightPolynomial> {
    demazure_character_word(&some_reduced_word(w), lambda)
}

pub fn demazure_dimension(w: &SignedPermutation, lambda: &Weight) -> Result<i64> {
    Ok(demazure_character(w, lambda)?.dimension())
}
