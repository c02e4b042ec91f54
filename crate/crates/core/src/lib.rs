//! Exact-arithmetic Perron transforms.
//!
//! The building block is the elementary matrix `A_{J,j}`: the identity with
//! row `j` replaced by the indicator of `J`. Given two points of ℕⁿ, one can
//! always choose `J` so that, whichever `j ∈ J` an adversary picks, a
//! lexicographic measure of how incomparable the points are strictly drops.
//! Iterating makes the points comparable, and that single fact drives:
//!
//! * [`game`]: a winning strategy for Hironaka's polyhedra game;
//! * [`group`]: Perron transforms of a basis of a free ordered abelian group
//!   that put given positive elements in the cone of the basis;
//! * [`monomial`]: monomial substitutions that make one monomial divide
//!   another, and that factor a polynomial as a monomial times a unit.
//!
//! All arithmetic is on unbounded integers and rationals. Indices are
//! 0-based throughout the library.

pub mod engine;
pub mod error;
pub mod game;
pub mod group;
pub mod linalg;
pub mod monomial;
pub mod tau;
pub mod transform;
pub mod vector;

pub use engine::{
    choose_set, run_pair, Abort, Adversary, AdversaryPolicy, EngineTrace, FirstIndex, MaxGrowth,
    Position, Scripted, SeededRandom,
};
pub use error::{Error, Result};
pub use game::{is_won, prune_dominated, solve, GameOutcome, GameState};
pub use group::{
    positivize, positivize_all, simple_perron, validate_order, GroupBasis, GroupElement,
    GroupOrder, LexVector, OrderViolation, Positivized, PositivizedAll,
};
pub use monomial::{
    apply_substitution, divisibility_transform, monomial_value, monomialize,
    DivisibilityTransform, Monomial, MonomializationResult, Polynomial, Substitution, ValuedRing,
};
pub use tau::{comparability, reduce_pair, tau, Comparability, ReducedPair, Tau};
pub use transform::{
    apply_matrix, apply_step, compose_trace, determinant, step_matrix, Step, Trace,
    TransformMatrix,
};
pub use vector::{IntVec, NatVec};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
