//! Combinatorics of skew pipe dreams for the symplectic group `Sp(2n)`.
//!
//! The crate builds the sets of skew pipe dreams that index the components of
//! semi-toric limits of type-C Schubert varieties in three independent ways:
//!
//! * the canonical diagram `D(w)` closed under ladder moves ([`diagrams`]),
//! * chains of mitosis operators started from the full staircase ([`diagrams`]),
//! * brute force over all subsets of the staircase using the pipe model
//!   ([`pathmodel`]),
//!
//! together with the bivariate generating functions used to relate them
//! ([`genpoly`]) and the string-polytope faces they index ([`polytope`]).
//! [`verify`] runs the exhaustive agreement checks.
//!
//! Everything here is exact integer/rational arithmetic on small ranks.

mod error;

pub mod diagrams;
pub mod genpoly;
pub mod pathmodel;
pub mod polytope;
pub mod verify;
pub mod weyl;

pub use diagrams::{shape, Cell, SkewPipeDream, Staircase};
pub use error::{Error, Result};
pub use genpoly::{BiPoly, ExtendedSkewPipeDream, TwoColumnDiagram};
pub use pathmodel::{PipeDiagram, Tile};
pub use polytope::{FaceSystem, Weight, WeightPolynomial};
pub use weyl::{PositionSequence, SignedPermutation, Word};

/// Largest rank supported by the bit-packed diagram representation.
///
/// A rank-`n` staircase has `n²` boxes and the extended diagrams of the
/// generating-function machinery need one more bit, so `n² + 1 ≤ 64`.
pub const MAX_RANK: usize = 7;
