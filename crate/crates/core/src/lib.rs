//! Exact enumeration of Cayley digraphs on dihedral groups up to
//! CI-isomorphism.
//!
//! Two connection sets `S, T ⊆ D_{2n} \ {1}` are CI-equivalent when some
//! group automorphism maps one onto the other, so the number of
//! CI-classes of Cayley digraphs on `D_{2n}` is the number of orbits of
//! `Aut(D_{2n})` on the power set of the non-identity elements. For
//! dihedral groups with the DCI property this equals the number of
//! Cayley digraphs up to isomorphism. Everything here is exact integer
//! arithmetic; big counts use [`Nat`].
//!
//! * [`arith`] — number-theory kernel (gcd, phi, orders, geometric sums).
//! * [`dihedral`] — the group, its automorphisms and their algebra.
//! * [`cycles`] — closed-form cycle counts of an automorphism acting on
//!   the non-identity elements.
//! * [`census`] — Burnside counting of CI-classes, plus the
//!   divisor-weighted census formula for odd square-free `n`.
//! * [`d6p`] — the specialization `n = 3p` with its piecewise formulas
//!   and the closed-form digraph count for `D_{6p}`.
//! * [`oracle`] — brute-force ground truth (explicit permutations,
//!   fixed-point counting, direct power-set orbit enumeration).
//! * [`verify`] — the cross-validation suite wiring all routes together.

pub mod arith;
pub mod census;
pub mod cycles;
pub mod d6p;
pub mod dihedral;
pub mod oracle;
pub mod verify;

pub use arith::{Nat, Residue};
pub use census::{CensusResult, DciStatus, DciTag, Method, TableRow};
pub use cycles::CycleData;
pub use d6p::{D6pParams, LambdaSet};
pub use dihedral::{Aut, Element, ElementKind, Permutation};

/// Errors reported for inputs outside an operation's domain.
///
/// Violations of internal exactness invariants (a closed form producing a
/// non-exact division) are not `Error`s: they panic with a message starting
/// with `invariant violation`, since they can only be caused by a bug in a
/// formula, never by input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The subscript pair does not define an automorphism.
    #[error("invalid automorphism: gcd({r}, {n}) != 1")]
    InvalidAutomorphism { n: u64, r: u64 },
    /// An operation restricted to square-free n > 1 was called outside
    /// that hypothesis.
    #[error("square-free n > 1 required, got {n}")]
    SquareFreeRequired { n: u64 },
    /// The census formula's hypothesis (n > 2, odd, square-free) fails.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    /// The closed-form count does not apply to these parameters.
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// Brute-force enumeration would exceed the configured state space.
    #[error("too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
