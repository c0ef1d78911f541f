//! Exact-arithmetic computational Lie theory for the simple types A–G.
//!
//! The crate builds root data for every simple type (Bourbaki node
//! numbering), acts with the Weyl group on exact weight vectors, computes
//! Weyl dimensions, Freudenthal weight multiplicities and Klimyk tensor
//! product decompositions, and verifies the combinatorics of the weight
//! polytope `A ∩ (2ρ + B)` together with the parabolic inequality chain
//! used to locate every dominant `λ ≤ 2ρ` inside `V(ρ) ⊗ V(ρ)`.
//!
//! All arithmetic is exact: weight coordinates are overflow-checked `i64`,
//! basis conversions and cone tests use big rationals, and dimension
//! counts use big integers. No floating point is used anywhere.

pub mod eigencone;
mod error;
pub mod polytope;
pub mod rep_theory;
pub mod report;
pub mod root_system;
mod simplex;
pub mod verifier;
pub mod weight_order;

pub use error::{Error, Result};
pub use report::{CaseResult, VerdictReport};
pub use root_system::{
    build_root_datum, Family, Limits, NodeSet, RootDatum, RootSystemSpec, Weight, WeightQ,
    WeylWord,
};

/// Rational scalar used throughout: arbitrary-precision, never wraps.
pub type Rat = num::BigRational;
/// Integer type for dimension counts (`dim V(ρ)` reaches `2^{120}` for E8).
pub type Int = num::BigInt;
