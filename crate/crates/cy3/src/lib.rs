//! Exact-arithmetic tools for superpotentials on three generators and their
//! Jacobian algebras.
//!
//! A superpotential `w` is an element of `V ⊗ V ⊗ V` for a 3-dimensional
//! vector space `V` with fixed basis `x, y, z`. Its Jacobian algebra `J(w)`
//! is the free algebra `k⟨x,y,z⟩` modulo the cyclic partial derivatives of
//! `w`. This crate decides, over the rationals and with no rounding anywhere,
//! whether `J(w)` is 3-Calabi-Yau, by four mutually cross-checking routes:
//!
//! * the divisor-class table driven by `μ(w)` and the plane cubic
//!   `E = {w̄ = 0}` ([`classify::table1_verdict`]),
//! * absence of rank-one tensors in the relation space
//!   ([`classify::rank_one_verdict`]),
//! * standardness plus emptiness of the 2×2-minor locus of the presentation
//!   matrix ([`classify::atv_verdict`]),
//! * a brute-force graded-dimension oracle comparing the Hilbert function
//!   against `(1-t)^{-3}` ([`oracle::hilbert_check`], a falsifier only).
//!
//! Supporting layers: exact ternary forms with Hessians, resultants and gcd
//! ([`exactpoly`]), a projective-emptiness decision by pure linear algebra
//! ([`psolve`]), the tensor calculus of the `S₃` action ([`tensor3`]), and a
//! rational classifier for plane cubic divisors with exact `j`-invariants
//! ([`cubiccurve`]).
//!
//! The `examples/` directory contains one runnable walk-through per
//! capability; the `cy3` binary exposes the same functionality as JSON-driven
//! subcommands.

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod cubiccurve;
pub mod exactpoly;
pub mod linalg;
pub mod oracle;
pub mod psolve;
pub mod rat;
pub mod tensor3;

pub use rat::Rat;

use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
///
/// `Internal` signals a broken invariant between procedures the mathematics
/// proves equivalent; callers should treat it as a bug report, not an input
/// problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd undefined: both forms are zero")]
    GcdUndefined,
    #[error("j-invariant undefined: the cubic is singular")]
    JUndefined,
    #[error("the zero superpotential presents the tensor algebra, which is not 3-Calabi-Yau")]
    ZeroSuperpotential,
    #[error("form system has no generators")]
    EmptySystem,
    #[error("degree cap exceeded: degree {requested} > cap {cap}")]
    DegreeCap { requested: usize, cap: usize },
    #[error("expected tensor degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("linear change of variables is singular")]
    SingularMap,
    #[error("relations are not in Clifford form under the given change of basis")]
    NotCliffordForm,
    #[error("Clifford scalars satisfy abc = -1, inconsistent with a 3-Calabi-Yau input")]
    CliffordInconsistent,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
