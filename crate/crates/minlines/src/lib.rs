//! Root system and Weyl group combinatorics of minimal rational curves on
//! Schubert varieties, their Bott-Samelson desingularizations, and Perrin's
//! generalized resolutions.
//!
//! All arithmetic is exact integer arithmetic over the simple-root basis;
//! there is no floating point anywhere in this crate.

pub mod bottsam;
pub mod cli;
pub mod corpus;
pub mod perrin;
pub mod rootsys;
pub mod schubert;
pub mod weyl;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse `{0}` as a Dynkin type")]
    ParseType(String),
    #[error("cannot parse `{0}` as a word")]
    ParseWord(String),
    #[error("values belong to different root systems")]
    MixedSystems,
    #[error("word is not reduced")]
    NotReduced,
    #[error("`{0}` is not a root")]
    NotARoot(String),
    #[error("operation requires an irreducible root system")]
    Reducible,
    #[error("operation requires a simply-laced root system")]
    NotSimplyLaced,
    #[error("simple root index {0} out of range")]
    BadIndex(usize),
    #[error("index {0} out of range for a word of length {1}")]
    BadLetter(usize, usize),
    #[error("element is not a minimal coset representative")]
    NotMinimalCosetRep,
    #[error("element is not minuscule")]
    NotMinuscule,
    #[error("weight is not fundamental")]
    NotFundamental,
    #[error("weight has support meeting the Levi set")]
    WeightMeetsLevi,
    #[error("simple root lies in the Levi set")]
    RootInLevi,
    #[error("simple root {0} is short")]
    ShortRoot(usize),
    #[error("parabolic is not maximal")]
    NotMaximalParabolic,
    #[error("enumeration would exceed the cap of {0} elements")]
    EnumerationCap(usize),
    #[error("Schubert block {0} is singular")]
    SingularBlock(usize),
    #[error("peak ordering does not cover the peak set")]
    BadPeakOrder,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Enumeration cap for full Weyl-group sweeps; `MINLINES_ENUM_CAP` overrides.
pub fn enum_cap() -> usize {
    std::env::var("MINLINES_ENUM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(10_000_000)
}
