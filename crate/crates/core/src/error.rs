use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} do not form a partition (must be weakly decreasing and positive)")]
    InvalidPartition(Vec<u32>),

    #[error("partition {partition} has length {} but at most {max} rows are allowed", partition.len())]
    TooLong { partition: Partition, max: usize },

    #[error("dual Jacobi-Trudi size {size} is smaller than the first part {first} of the partition")]
    DualSizeTooSmall { size: usize, first: u32 },

    #[error("partition {partition} is not in the {rows}x{cols} box")]
    OutsideBox {
        partition: Partition,
        rows: usize,
        cols: usize,
    },

    #[error("invalid Grassmannian parameters r = {r}, n = {n}")]
    InvalidSpec { r: usize, n: usize },

    #[error("polynomial is not symmetric in its {0} variables")]
    NotSymmetric(usize),

    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: String, found: String },

    #[error("generator index {index} exceeds the {max} available generators")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error("elimination did not terminate at zero: {0}")]
    EliminationFailed(String),

    #[error("divisor is not monic")]
    NonMonicDivisor,

    #[error("class has a nonzero constant term and cannot be nilpotent")]
    NotAugmentationPositive,

    #[error("no power up to {0} vanished, contradicting the degree bound")]
    NilpotencyBound(usize),

    #[error("ambient rings differ")]
    RingMismatch,

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
