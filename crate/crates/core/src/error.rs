//! The single error type shared across the crate.

use thiserror::Error;

use crate::subset::ElementSubset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {n} exceeds the supported maximum of 64")]
    GroundSetTooLarge { n: u64 },

    #[error("element {element} is outside the ground set 1..={limit}")]
    ElementOutOfRange { element: u64, limit: u32 },

    #[error("circuit at position {index} is empty")]
    EmptyCircuit { index: usize },

    #[error("circuit {inner} is contained in circuit {outer}")]
    ComparablePair {
        inner: ElementSubset,
        outer: ElementSubset,
    },

    #[error("elimination fails for {c1} and {c2} at element {element}: no circuit inside {target}")]
    EliminationFailure {
        c1: ElementSubset,
        c2: ElementSubset,
        element: u32,
        target: ElementSubset,
    },

    #[error("family of {count} circuits exceeds the construction cap of {cap}")]
    TooManyCircuits { count: usize, cap: usize },

    #[error("modulus {modulus} is not prime")]
    NonPrimeModulus { modulus: u64 },

    /// `force_allows` distinguishes a soft cap (a caller may opt in up to the
    /// hard cap) from the hard one.
    #[error("{what} over {n} elements exceeds the cap of {cap}")]
    ResourceCapExceeded {
        what: &'static str,
        n: u32,
        cap: u32,
        force_allows: bool,
    },

    #[error("matroid is not simple: circuit {witness} has fewer than 3 elements")]
    NotSimple { witness: ElementSubset },

    #[error("{member} is not a circuit of the matroid")]
    NotACircuit { member: ElementSubset },

    #[error("{d} is not a double circuit: {detail}")]
    NotADoubleCircuit { d: ElementSubset, detail: String },

    #[error("circuit {circuit} is not a member of the candidate family")]
    CircuitNotInBasis { circuit: ElementSubset },

    #[error("circuit {circuit} is closed, so it admits no swap")]
    CircuitIsClosed { circuit: ElementSubset },

    #[error("element {element} is not in the closure of {circuit} outside it")]
    IneligibleSwapElement { circuit: ElementSubset, element: u32 },

    #[error("hypergraph edge at position {index} is empty")]
    EmptyEdge { index: usize },

    #[error("unknown catalog name `{name}`")]
    UnknownCatalogName { name: String },

    #[error("invalid parameters for catalog entry `{name}`: {msg}")]
    InvalidCatalogParams { name: String, msg: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("circuit data file for `{name}` not found (searched: {searched})")]
    DataFileMissing { name: String, searched: String },

    #[error("could not read `{path}`: {msg}")]
    Io { path: String, msg: String },
}
