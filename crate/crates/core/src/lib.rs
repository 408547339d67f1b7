//! Letterplace and co-letterplace ideals of finite posets.
//!
//! The crate builds monomial ideals from isotone maps between posets,
//! computes Alexander duals by several independent routes, certifies
//! regular sequences of variable differences and the quotient ideals they
//! produce, computes exact graded Betti tables and Hilbert numerators, and
//! generates the derived ideal families (multichain, determinantal initial,
//! strongly stable, Ferrers, cointerval, uniform face).
//!
//! Module map:
//! - [`poset`], [`hom`]: finite posets, Hom-posets, downsets, currying.
//! - [`monomial`]: monomial ideals and Alexander duality.
//! - [`letterplace`]: the L(Q,P) / L(n,P) / L(P,n) / L(J) constructions.
//! - [`quotient`]: fibered maps, kernel bases, regular-sequence oracles,
//!   separations.
//! - [`homology`]: Betti tables, Hilbert numerators, ring properties.
//! - [`families`]: the derived ideal families with built-in cross-checks.
//! - [`acceptance`]: the reproducible verification catalog.

pub mod acceptance;
pub mod bits;
pub mod export;
pub mod families;
pub mod hom;
pub mod homology;
pub mod letterplace;
pub mod monomial;
pub mod poset;
pub mod quotient;
pub mod rng;

mod rank;

pub use poset::Poset;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cyclic covers through {cycle:?}")]
    CyclicCovers { cycle: Vec<String> },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("not squarefree: generator {0}")]
    NotSquarefree(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("Hom-poset exceeds cap of {cap} maps")]
    HomTooLarge { cap: usize },
    #[error("budget exceeded: {what} needs {count}, budget {budget}")]
    Budget {
        what: &'static str,
        count: usize,
        budget: usize,
    },
    #[error("zero ideal not allowed here")]
    ZeroIdeal,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal contradiction (bug): {0}")]
    Bug(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
