use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coefficient vector {0:?} is not a positive root")]
    NotARoot(Vec<i32>),
    #[error("cannot parse root string `{0}`")]
    BadRootString(String),
    #[error("word is not reduced: letter at position {0} produces a non-positive or repeated root")]
    NotReduced(usize),
    #[error("letter {0} is not a node of the diagram")]
    BadLetter(usize),
    #[error("automorphism is not compatible with the diagram involution")]
    IncompatibleAutomorphism,
    #[error("class is not twisted adapted")]
    NotTwistedAdapted,
    #[error("index {0} is not a sink")]
    NotASink(usize),
    #[error("linear extension count exceeds bound {bound} (at least {seen} found)")]
    ExtensionBound { bound: u64, seen: u64 },
    #[error("search space exceeds bound {0}")]
    SearchBound(usize),
    #[error("roots are equal")]
    EqualRoots,
    #[error("sum is not a positive root")]
    SumNotARoot,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
