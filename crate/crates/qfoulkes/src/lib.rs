//! Exact computation engine for symmetric functions with polynomial
//! coefficients in `q`, aimed at verifying Foulkes-type plethysm positivity
//! statements and their q-analogs built from Hall-Littlewood polynomials.
//!
//! Organization:
//! - [`partition`]: integer partitions, conjugation, dominance, hooks
//! - [`qpoly`]: dense univariate polynomials in `q` over exact rationals
//! - [`character`]: symmetric-group characters via Murnaghan-Nakayama
//! - [`symfunc`]: the symmetric-function kernel (power-sum basis, plethysm,
//!   Schur expansions, positivity order)
//! - [`hall_littlewood`]: `H_n(x;q)`, charge, Kostka-Foulkes polynomials,
//!   q-Schur functions `S_mu(x;q)`
//! - [`hepoly`]: the subring generated by `h1, h2, e2` with its canonical basis
//! - [`foulkes`]: divided differences, conjecture predicates, dimension
//!   identities, `q = 1` closed forms, iterated plethysm sums
//! - [`configsearch`]: exhaustive search for Foulkes and q-Foulkes
//!   configurations
//! - [`cache`]: persistence of the character and Kostka-Foulkes memo tables
//! - [`suites`]: named verification suites (goldens, tables, properties)
//! - [`cli`]: command-line front end used by the `qfoulkes` binary
//!
//! All arithmetic is exact; there is no floating point anywhere in the crate.

pub mod cache;
pub mod character;
pub mod cli;
pub mod configsearch;
pub mod foulkes;
pub mod hall_littlewood;
pub mod hepoly;
pub mod partition;
pub mod qpoly;
pub mod report;
pub mod suites;
pub mod symfunc;

pub use character::character;
pub use partition::Partition;
pub use qpoly::QPoly;
pub use symfunc::{SchurExpansion, SymFunc};

/// Errors surfaced by the engine.
///
/// A `NotDivisible` from a divided difference signals a falsified vanishing
/// claim (or an engine bug, depending on the call site); conjecture checks
/// never turn a negative verdict into an error.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("polynomial is not divisible by 1 - q (value at q=1 is {0})")]
    NotDivisible(String),
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
    #[error("weight mismatch: |{0}| != |{1}|")]
    WeightMismatch(String, String),
    #[error("word content is not a partition: {0:?}")]
    NotPartitionContent(Vec<u32>),
    #[error("inhomogeneous symmetric function where a homogeneous one is required")]
    Inhomogeneous,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
