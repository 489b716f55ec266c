use thiserror::Error;

use crate::types::CanonicalOffset;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid point '{0}': expected three comma-separated integers x,y,z")]
    InvalidPoint(String),
    #[error("unknown neighborhood '{0}': expected 6, 18 or 26")]
    InvalidNeighborhood(String),
    #[error("invalid move step ({0},{1},{2}): components must be -1, 0 or 1 and not all zero")]
    InvalidStep(i8, i8, i8),
    #[error("parts sum to {sum}, expected {n}")]
    PartsMismatch { n: u64, sum: u128 },
    #[error("max-coordinate formula needs i >= j + k, got {0}")]
    MaxCaseNotApplicable(CanonicalOffset),
    #[error("half-sum formula needs i <= j + k + 1, got {0}")]
    HalfCaseNotApplicable(CanonicalOffset),
    #[error("18-neighborhood formulas disagree at {offset}: max-coordinate {max_case}, half-sum {half_case}")]
    OverlapDisagreement {
        offset: CanonicalOffset,
        max_case: crate::Count,
        half_case: crate::Count,
    },
    #[error("Minkowski order must be at least 1, got {0}")]
    InvalidOrder(u32),
    #[error("path limit must be positive")]
    NonPositiveLimit,
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
