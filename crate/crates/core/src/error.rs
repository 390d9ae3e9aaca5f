use thiserror::Error;

use crate::degree::SplitKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("not a permutation of the vertex set")]
    BadPermutation,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("chromatic bound {chi} outside 1..={n}")]
    ChiOutOfRange { chi: usize, n: usize },
    #[error("{op} requires {expected}, got a graph that is {found}")]
    Domain {
        op: &'static str,
        expected: &'static str,
        found: String,
    },
    #[error("{op}: target size {target} must be exactly {expected}")]
    TargetMismatch {
        op: &'static str,
        target: usize,
        expected: usize,
    },
    #[error("{op}: target size {target} too small for an input on {order} vertices (needs at least {min})")]
    TargetTooSmall {
        op: &'static str,
        target: usize,
        order: usize,
        min: usize,
    },

    #[error("{op}: partition tag {claimed} does not match the graph (actual {actual})")]
    TagMismatch {
        op: &'static str,
        claimed: String,
        actual: String,
    },
    #[error("{op}: not a clique/stable-set partition of the graph")]
    InvalidPartition { op: &'static str },

    #[error("{op} is limited to {limit} vertices, got {n}")]
    SizeBound {
        op: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("search budget of {0} steps exhausted")]
    BudgetExhausted(u64),

    #[error("duplicate isomorphism class in census input (record {index})")]
    DuplicateGraph { index: usize },
    #[error("census input mixes vertex counts {expected} and {found}")]
    MixedOrders { expected: usize, found: usize },
    #[error("need split counts for 0..={need}, have {have}")]
    InsufficientPrefix { need: usize, have: usize },
}

impl Error {
    pub(crate) fn domain(
        op: &'static str,
        expected: &'static str,
        kind: SplitKind,
        ng3: bool,
    ) -> Self {
        let found = if ng3 {
            "NG-3".to_string()
        } else {
            kind.to_string()
        };
        Error::Domain {
            op,
            expected,
            found,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
