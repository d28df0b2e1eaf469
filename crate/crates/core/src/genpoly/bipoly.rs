use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `Σ c_{a,b} xᵃ yᵇ` with integer coefficients; zero terms are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(1, a, b)
    }

    pub fn term(c: i64, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, a, b);
        p
    }

    pub fn add_term(&mut self, c: i64, a: u32, b: u32) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> i64 {
        self.terms.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Terms in ascending `(a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    /// Sum of all coefficients, i.e. the value at `x = y = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiplies by `xᵃ yᵇ`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(p, q), &c)| ((p + a, q + b), c)).collect(),
        }
    }

    /// `f(x, y) ↦ f(y, x)`.
    pub fn swap_xy(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), &c)| ((b, a), c)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_xy()
    }
}

impl FromIterator<(u32, u32)> for BiPoly {
    /// Sums monomials.
    fn from_iter<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (a, b) in iter {
            p.add_term(1, a, b);
        }
        p
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), &c) in &rhs.terms {
            out.add_term(c, a, b);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(p, q), &d) in &rhs.terms {
                out.add_term(c * d, a + p, b + q);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: BiPoly) -> BiPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

fn power(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Ascending `(a, b)` order, e.g. `1 + 2y - x^2y^3`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b), &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != 1 || (a, b) == (0, 0) {
                write!(f, "{mag}")?;
            }
            power(f, 'x', a)?;
            power(f, 'y', b)?;
        }
        Ok(())
    }
}
