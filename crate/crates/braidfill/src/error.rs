use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a braid needs at least one strand")]
    ZeroStrands,
    #[error("{0} strands is more than supported")]
    TooManyStrands(usize),
    #[error("need at least {needed} strands, got {got}")]
    TooFewStrands { needed: usize, got: usize },
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand {strand} out of range for {strands} strands")]
    StrandOutOfRange { strand: usize, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("bad strand range {lo}..{hi} in B_{strands}")]
    BadRange { lo: usize, hi: usize, strands: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown component {0:?}")]
    UnknownComponent(String),
    #[error("component {0:?} is not a single fixed strand")]
    NotFixedStrand(String),
    #[error("link has no braid axis")]
    NoAxis,
    #[error("component {name:?} has coefficient {coefficient}, only ∞ can be erased")]
    NotErasable { name: String, coefficient: String },
    #[error("braid does not match the twist template: {0}")]
    TemplateMismatch(String),
    #[error("strand sets do not partition the braid into closure cycles")]
    BadComponents,
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
