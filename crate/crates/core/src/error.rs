use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {0} is not supported (expected 1..={max})", max = crate::MAX_RANK)]
    UnsupportedRank(usize),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid signed permutation window {0:?}")]
    InvalidWindow(Vec<i32>),

    #[error("position sequence {0:?} is not strictly increasing inside 1..=N")]
    InvalidPositions(Vec<usize>),

    #[error("cell ({0}, {1}) is not a box of the staircase of rank {2}")]
    CellOutsideShape(usize, usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} is limited to rank <= {max} (got {n})")]
    RankGuard { what: &'static str, n: usize, max: usize },

    #[error("word {0:?} is not length-additive")]
    NotLengthAdditive(Vec<usize>),

    #[error("pipe trace failed for pipe {pipe}: {reason}")]
    Trace { pipe: usize, reason: String },

    #[error("two-column decomposition failed: {0}")]
    Decomposition(String),

    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("the string cone is unbounded; a weight is required")]
    Unbounded,

    #[error("lattice point enumeration exceeded the cap of {0} points")]
    PointCap(usize),
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if (1..=crate::MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedRank(n))
    }
}
