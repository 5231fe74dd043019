use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error("operation requires a nonempty bicomposition")]
    EmptyBicomposition,
    #[error("top row of the bicomposition is all zeros")]
    ZeroTopRow,
    #[error("number of variables differs: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("invalid indices: {0}")]
    InvalidIndices(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("polynomial is not bihomogeneous")]
    NotHomogeneous,
    #[error("ideal generator has a constant term")]
    ConstantGenerator,
    #[error("vector of bidegree {found:?} does not live in bidegree {expected:?}")]
    BidegreeMismatch {
        expected: (u32, u32),
        found: (u32, u32),
    },
    #[error("length {len} exceeds the number of variables {n}")]
    LengthExceedsVariables { len: usize, n: usize },
    #[error("{0} exceeds the resource guard")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
