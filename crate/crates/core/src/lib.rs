//! Exact-arithmetic construction and analysis of two binomial-coefficient
//! families and the combinatorial machinery connecting them:
//!
//! - [`triangles`]: rows of the linear (Pascal) triangle and of the nonlinear
//!   triangle whose entry at `q` counts subsets of `{1..n}` with element sum
//!   `q`, built by their recurrences over arbitrary-precision integers.
//! - [`words`]: length-`n` words over the two-letter alphabet `{a, b}`, their
//!   plain (`p`) and position-weighted (`q`) indices, exhaustive histograms,
//!   and the grouping of polynomial terms into p-type / q-type classes.
//! - [`trajectories`]: realization of words as lattice ray trajectories in a
//!   plain-walk (Galton-board) or integrated-walk branching system, with
//!   endpoint grouping and detection of superimposed links.
//! - [`distributions`]: probabilities, cumulative envelopes, half-mass central
//!   intervals, empirical width exponents, and rescaled envelope comparison
//!   between the two triangle types.
//!
//! All row coefficients are exact [`BigUint`] values; floating point enters
//! only at the final conversion of exact integer ratios.

pub mod distributions;
pub mod error;
pub mod trajectories;
pub mod triangles;
pub mod words;

pub use error::Error;
pub use num_bigint::BigUint;

pub use distributions::{
    CentralInterval, DistributionSummary, EnvelopeComparison, ExponentEstimate,
};
pub use trajectories::{EndpointClass, EndpointClasses, Link, LinkReport, TrajectoryPath, WalkSystem};
pub use triangles::{Row, TriangleKind};
pub use words::{GroupedExpression, IndexKind, Letter, Word, DEFAULT_ENUMERATION_CAP};
