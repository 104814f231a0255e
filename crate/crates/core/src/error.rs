use thiserror::Error;

use crate::partition::{Corner, Partition};

pub type Result<T> = std::result::Result<T, AtlasError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("a partition needs at least one part")]
    EmptyPartition,

    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),

    #[error("part {0} exceeds the supported range")]
    PartTooLarge(i64),

    #[error("size must be at least 1, got {0}")]
    InvalidSize(u32),

    #[error("cannot parse partition text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("{corner} is not a removable corner of {partition}")]
    NotRemovable { corner: Corner, partition: Partition },

    #[error("{corner} is not an addable corner of {partition}")]
    NotAddable { corner: Corner, partition: Partition },

    #[error("size mismatch: {left} has size {left_size}, {right} has size {right_size}")]
    SizeMismatch {
        left: Partition,
        right: Partition,
        left_size: u32,
        right_size: u32,
    },

    #[error("{partition} is not a vertex of G_{n}")]
    NotAVertex { partition: Partition, n: u32 },

    #[error("set is not closed under conjugation: {partition} is present but {conjugate} is not")]
    NotConjugationClosed {
        partition: Partition,
        conjugate: Partition,
    },

    #[error("layer {r} was not found for any n <= {n_max}")]
    NotFound { r: u32, n_max: u32 },

    #[error("region {region:?} is declared conjugation-invariant but {partition} and its conjugate disagree")]
    RegionNotConjugationInvariant { region: String, partition: Partition },

    #[error("region file line {line}: {reason}")]
    RegionFile { line: usize, reason: String },
}
