use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("search exceeded cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("generator {0} is not an involution")]
    NotInvolution(usize),
    #[error("generators {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("generator {0} is the identity")]
    IdentityGenerator(usize),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("element is not in the group")]
    NotInGroup,
    #[error("rho0*rho2 is the identity, petrie dual is degenerate")]
    DegeneratePetrie,
    #[error("not a string C-group")]
    NotStringCGroup,
    #[error("second argument is not a generator-respecting quotient of the first")]
    NotACovering,
    #[error("polytope is not internally self-dual")]
    NotInternallySelfDual,
    #[error("mix is not polytopal")]
    NotPolytopal,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
