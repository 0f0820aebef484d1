//! Exact-rational engine for the birational geometry of a double blow-up
//! of P^(n-k) x P^k: blow up a degree-d hypersurface in a fiber of one
//! projection, then the strict transform of a fiber of the other.
//!
//! The crate represents divisor and curve classes on the resulting
//! fourfold-lattice, decides nefness/ampleness/bigness from the explicit
//! cone generators, and synthesizes boundary divisors certifying the log
//! Fano property by exact linear-inequality feasibility. All arithmetic is
//! arbitrary-precision rational; every decision procedure either returns a
//! checkable witness or is paired with an independent formulation that the
//! test suite compares it against.
//!
//! Module map:
//! - [`rat`], [`fm`]: exact scalars and Fourier–Motzkin elimination with
//!   strict-inequality tracking and witness extraction;
//! - [`lattice`]: the rank-4 lattice, intersection pairing and named
//!   classes;
//! - [`cones`]: nef/effective cone generators, membership and interiority;
//! - [`positivity`]: ampleness/nefness criteria for the (twisted)
//!   anticanonical class and its ample-plus-effective split;
//! - [`logfano`]: the boundary-divisor system, its closed-form solution
//!   and the witness catalog;
//! - [`classify`]: sweeps, classification rows and table/csv/json output.

pub mod classify;
pub mod cones;
pub mod error;
pub mod fm;
pub mod lattice;
pub mod logfano;
pub mod positivity;
pub mod rat;

pub use classify::{classify, render, sweep, ClassificationRow, LogFanoAnswer, OutputFormat};
pub use cones::{
    effective_generators, effective_membership, is_ample, is_big, is_nef, nef_coords, NefBasis,
};
pub use error::{Error, Result};
pub use fm::{LinIneq, LinIneqSystem, Relation, Witness};
pub use lattice::{
    anticanonical, delta_class, delta_to_greek, named_curves, named_divisors, pair, CurveClass,
    DeltaCoeffs, DivClass, Geometry, NamedCurves, NamedDivisors,
};
pub use logfano::{
    closed_form_feasible, find_boundary, klt_check, logfano_system, table_verdict, table_witness,
    verify_boundary, LogFanoVerdict, WitnessSource,
};
pub use positivity::{
    ample_criterion, ample_rows, big_decomposition, minus_k_big, minus_k_status, nef_criterion,
    BigDecomposition, MinusKStatus, PositivityReport,
};
pub use rat::Rat;
