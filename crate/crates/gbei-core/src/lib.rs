//! Exact computation with binomial edge ideals of graphs.
//!
//! Given a simple graph `G` on vertices `1..=n` and an integer `m >= 2`, the
//! generalized binomial edge ideal lives in a polynomial ring with an `m x n`
//! matrix of variables and is generated by the 2-minors `[k,l|i,j]` picked out
//! by the edges of `G`. This crate computes with these ideals exactly, over
//! the rationals or over a prime field:
//!
//! * multivariate polynomial arithmetic and Groebner bases ([`poly`],
//!   [`groebner`], [`ideal`]),
//! * graph combinatorics feeding the algebra: cut sets, connectivity,
//!   cliques, and recognized graph families ([`graph`]),
//! * minimal primes, heights, and lower/upper bounds for the cohomological
//!   dimension and arithmetical rank of binomial edge ideals ([`bei`]),
//! * machine-checkable certificates that a small ideal generates a binomial
//!   edge ideal up to radical ([`certificates`]).
//!
//! The `gbei` binary exposes the same functionality on the command line.

pub mod bei;
pub mod certificates;
pub mod field;
pub mod graph;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod poly;

pub use bei::{bounds_report, build_gbei, BoundsReport};
pub use field::Coeff;
pub use graph::SimpleGraph;
pub use groebner::{normal_form, reduced_groebner, GbBudget};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, RingSpec};

/// Errors shared across the crate.
///
/// The CLI maps these to stable exit codes: `Disconnected` to 2, `Parse` and
/// `InvalidInput` to 3, `ResourceCap` to 4.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
