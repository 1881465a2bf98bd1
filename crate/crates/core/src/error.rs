use thiserror::Error;

/// Errors raised by constructions and analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line enumeration needs {needed} vectors but the cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },

    #[error("module dimension {dim} exceeds the configured cap {cap}")]
    DimensionGuard { dim: u128, cap: u128 },

    #[error("p = {p} does not divide n = {n}")]
    RankNotDivisible { n: usize, p: u32 },

    #[error("weight is not in the closure of the first dominant alcove")]
    NotInAlcove,

    #[error("character is not of standard Levi form: nonzero value at E_{i}{j}")]
    NotStandardLevi { i: usize, j: usize },

    #[error("character is nonzero on X_(-alpha_{root}), parabolic construction does not apply")]
    NotApplicable { root: usize },

    #[error("Cartan action is not diagonalizable over the prime field")]
    NotDiagonalizable,

    #[error("module is not simple")]
    NotSimple,

    #[error("r_{index} = 0, so there is no composition factor for this coset")]
    ZeroFactor { index: usize },

    #[error("subspace is not invariant under the action")]
    NotSubmodule,

    #[error("maximal vectors of a simple module carry inequivalent labels")]
    InconsistentLabel,

    #[error("structural check failed: {0}")]
    StructureViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
