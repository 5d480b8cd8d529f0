use std::fmt;

use thiserror::Error;

/// What went wrong while reading a TFP v1 document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingMagic,
    MalformedHeader(String),
    NotPowerOfTwo(usize),
    VstarOutOfRange { vstar: usize, n: usize },
    RowLength { expected: usize, found: usize },
    MissingRows { expected: usize, found: usize },
    TrailingContent,
    BadCell(char),
    Diagonal(usize),
    Antisymmetry { u: usize, v: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingMagic => write!(f, "expected `TFP v1` header line"),
            ParseErrorKind::MalformedHeader(s) => write!(f, "malformed header: {s}"),
            ParseErrorKind::NotPowerOfTwo(n) => write!(f, "n not a power of two (n={n})"),
            ParseErrorKind::VstarOutOfRange { vstar, n } => {
                write!(f, "vstar out of range (vstar={vstar}, n={n})")
            }
            ParseErrorKind::RowLength { expected, found } => {
                write!(f, "row has {found} cells, expected {expected}")
            }
            ParseErrorKind::MissingRows { expected, found } => {
                write!(f, "found {found} matrix rows, expected {expected}")
            }
            ParseErrorKind::TrailingContent => write!(f, "unexpected content after matrix"),
            ParseErrorKind::BadCell(c) => write!(f, "non-binary matrix cell {c:?}"),
            ParseErrorKind::Diagonal(u) => write!(f, "diagonal violation: player {u} beats itself"),
            ParseErrorKind::Antisymmetry { u, v } => write!(
                f,
                "antisymmetry violation between players {u} and {v}: exactly one must beat the other"
            ),
        }
    }
}

/// Parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        Self { line, column, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid tournament: {0}")]
    InvalidTournament(String),

    #[error("invalid seeding: {0}")]
    InvalidSeeding(String),

    #[error("invalid match set sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid arborescence: {0}")]
    InvalidLba(String),

    #[error("invalid pattern or host: {0}")]
    InvalidEmbedInput(String),

    #[error("coloring uses {colors} colors, DP width limit is {limit}")]
    WidthExceeded { colors: usize, limit: usize },

    #[error("oracle guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
