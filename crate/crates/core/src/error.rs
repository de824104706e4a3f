use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: rank must be at least 1")]
    InvalidRank(usize),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid signed permutation window: {0}")]
    InvalidWindow(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("stirling index k={k} exceeds n={n}")]
    StirlingIndex { n: usize, k: usize },

    #[error("internal cross-check failed for {what} at n={n}")]
    CrossCheck { what: &'static str, n: usize },

    #[error("{what} at n={n} is not a non-negative integer")]
    NotNatural { what: &'static str, n: usize },

    #[error("precision of {requested} bits is below the minimum of {minimum}")]
    PrecisionTooLow { requested: u32, minimum: u32 },

    #[error("could not reach {precision_bits} bits of relative precision")]
    Widening { precision_bits: u32 },

    #[error("enclosure is empty or inverted")]
    EmptyEnclosure,

    #[error("enclosure contains zero or a negative value where a positive one is required")]
    NotPositive,

    #[error("undecided at n={n} after {precision_bits} bits")]
    Undecided { n: usize, precision_bits: u32 },

    #[error("n={n} exceeds the enumeration cap of {cap} ({elements} elements)")]
    CapExceeded { n: usize, cap: usize, elements: String },

    #[error("trial count must be at least 1")]
    ZeroTrials,
}
