use thiserror::Error;

/// Errors raised while reading a Coxeter graph file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph file has no vertex line")]
    MissingVertices,
    #[error("line {line}: duplicate vertex `{name}`")]
    DuplicateVertex { line: usize, name: String },
    #[error("line {line}: unknown vertex `{name}`")]
    UnknownVertex { line: usize, name: String },
    #[error("line {line}: label on the self-pair ({name}, {name})")]
    SelfLabel { line: usize, name: String },
    #[error("line {line}: label {label} is below 2")]
    LabelTooSmall { line: usize, label: u64 },
    #[error("line {line}: malformed integer `{token}`")]
    MalformedInteger { line: usize, token: String },
    #[error("line {line}: expected `s t m`, found {found} fields")]
    MalformedEdge { line: usize, found: usize },
    #[error("line {line}: conflicting label for ({s}, {t})")]
    ConflictingLabel { line: usize, s: String, t: String },
    #[error("{count} generators exceed the supported maximum of {max}")]
    TooManyGenerators { count: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for rank {rank}")]
    InvalidGeneratorIndex { index: usize, rank: usize },
    #[error("subset {0} is not connected in the Coxeter graph")]
    Disconnected(String),
    #[error("parabolic subgroup on {0} is infinite")]
    InfiniteType(String),
    #[error("subset {0} has a finite irreducible component")]
    HasFiniteComponent(String),
    #[error("generator {t} already lies in {x}")]
    GeneratorInSubset { t: String, x: String },
    #[error("generator {t} is not {x}-admissible")]
    NotAdmissible { t: String, x: String },
    #[error("label {0} is outside the exactly supported set {{2,3,4,5,6,inf}}")]
    UnsupportedLabel(String),
    #[error("{target} is not a proper subset of {x}")]
    InvalidTarget { target: String, x: String },
    #[error("vector has coordinates of both signs and is not a root")]
    NotARoot,
    #[error("{what} exceeded the budget of {limit}")]
    BudgetExceeded { what: &'static str, limit: usize },
    #[error("elements belong to Coxeter groups of different rank ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
