use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {reason}")]
    NotAGroup {
        reason: String,
        /// Witnessing triple (a, b, c) for associativity failures.
        witness: Option<(usize, usize, usize)>,
    },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("representation mismatch: {0}")]
    RepMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("invalid irrep table: {0}")]
    InvalidTable(String),
    #[error("non-integer multiplicity {value} for irrep {irrep}")]
    NonIntegerMultiplicity { irrep: String, value: f64 },
    #[error("unsupported group spec `{0}`")]
    UnsupportedGroup(String),
    #[error("empty family")]
    EmptyFamily,
    #[error("empty rank selection")]
    EmptySelection,
    #[error("vector is not in the cyclic span (relative residual {residual:.3e})")]
    NotInCyclicSpan { residual: f64 },
    #[error("action is not 2-transitive")]
    NotTwoTransitive,
    #[error("invalid psi: {0}")]
    BadPsi(String),
    #[error("generator {generator} lies outside the range-function subspace at irrep {irrep} (residual {residual:.3e})")]
    GeneratorsOutsideVJ {
        generator: usize,
        irrep: String,
        residual: f64,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    /// True for failures of the floating-point machinery itself (eigensolver
    /// non-convergence and the like), as opposed to rejected input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Numeric(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
