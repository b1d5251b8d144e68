use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("malformed skew diagram: {0}")]
    MalformedSkew(String),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("skew diagram is not basic")]
    NotBasic,

    #[error("the empty diagram has no boundary paths")]
    EmptyDiagram,

    #[error("cannot remove {amount} boxes: a row or column of the diagram is too short")]
    TooShallow { amount: usize },

    #[error("partition {partition} does not fit in a {cols}x{rows} box")]
    DoesNotFit {
        partition: Partition,
        cols: usize,
        rows: usize,
    },

    #[error("skew character is not multiplicity free")]
    NotMultiplicityFree,
}
