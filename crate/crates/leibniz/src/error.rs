use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found} in {context}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range 1..={max} in {context}")]
    IndexOutOfRange {
        context: String,
        index: usize,
        max: usize,
    },

    #[error("Leibniz identity fails at basis triple ({0}, {1}, {2}) (1-based)")]
    NotLeibniz(usize, usize, usize),

    #[error("structure table '{0}' is not a Lie algebra: {1}")]
    NotLie(String, String),

    #[error("[L, I] != 0: squares span is not left-annihilated (non-Leibniz input)")]
    SquaresNotAnnihilated,

    #[error("right-module axiom fails at Lie basis pair ({0}, {1}) (1-based)")]
    ModuleAxiom(usize, usize),

    #[error("trivial module rejected: {0}")]
    TrivialModule(String),

    #[error("module action and Lie algebra disagree: {0}")]
    ModuleMismatch(String),

    #[error("ad(h_{0}) is not diagonal with integer entries in the given basis")]
    NonDiagonalCartan(usize),

    #[error("non-Cartan basis vector {0} (1-based) has zero root: input is not a supported semisimple presentation")]
    ZeroRoot(usize),

    #[error("two basis vectors share the root {0:?}: root spaces must be one-dimensional")]
    RootMultiplicity(Vec<i64>),

    #[error("{0:?} is not a root of the decomposition")]
    NotARoot(Vec<i64>),

    #[error("no highest-weight vector found (no basis vector is annihilated by all positive-root actions)")]
    NoHighestWeight,

    #[error("map is not a derivation of '{0}'")]
    NotADerivation(String),

    #[error("coefficient index {0} does not match the layout's classification")]
    CoefficientMismatch(String),

    #[error("unknown catalog name '{0}'")]
    UnknownCatalogName(String),

    #[error("malformed rational '{0}'")]
    MalformedRational(String),

    #[error("duplicate constants entry at (i={0}, j={1}, k={2})")]
    DuplicateEntry(usize, usize, usize),

    #[error("invalid algebra file: {0}")]
    InvalidFile(String),

    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
