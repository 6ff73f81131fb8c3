use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Hypotheses that a computation may require of its input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    TotallyUnimodular,
    EvenCircuits,
    Bipartite,
    Balanced,
}

impl Hypothesis {
    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::TotallyUnimodular => "totally-unimodular",
            Hypothesis::EvenCircuits => "even-circuits",
            Hypothesis::Bipartite => "bipartite",
            Hypothesis::Balanced => "balanced",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix has a non-integer entry")]
    NotIntegerMatrix,
    #[error("matrix is not totally unimodular")]
    NotTotallyUnimodular,
    #[error("odd circuit present: {circuit:?}")]
    OddCircuitPresent { circuit: Vec<i64> },
    #[error("hypothesis failed: {which}")]
    HypothesisFailed { which: Hypothesis },
    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("index set is not a basis of the matroid")]
    NotABasis,
    #[error("circuit has an entry outside {{-1, 0, 1}}")]
    NonUnitCircuitEntry,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, size: usize, cap: usize) -> Self {
        Error::CapExceeded { what, size, cap }
    }

    /// The unmet hypothesis, if this error reports one.
    pub fn hypothesis(&self) -> Option<Hypothesis> {
        match self {
            Error::NotTotallyUnimodular => Some(Hypothesis::TotallyUnimodular),
            Error::OddCircuitPresent { .. } => Some(Hypothesis::EvenCircuits),
            Error::HypothesisFailed { which } => Some(*which),
            _ => None,
        }
    }
}
