use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix must be square and symmetric")]
    NotSymmetric,
    #[error("gram matrix is odd: diagonal entry {0} is not even")]
    OddGram(usize),
    #[error("gram matrix is degenerate")]
    Degenerate,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not isotropic")]
    NotIsotropic,
    #[error("invalid finite quadratic form: {0}")]
    InvalidForm(String),
    #[error("permutation is not a symmetry of the graph")]
    NotSymmetry,
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("unsupported Hirzebruch index k = {0}")]
    UnsupportedIndex(u32),
    #[error("fiber {0} is not present")]
    FiberAbsent(String),
    #[error("fiber {0} cannot be contracted")]
    NotContractible(String),
    #[error("discriminant vanishes identically")]
    ZeroDiscriminant,
    #[error("curve has a non-simple singular fiber")]
    NonSimpleFiber,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
        }
    }
}
