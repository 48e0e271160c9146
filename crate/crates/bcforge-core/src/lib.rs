//! Exact-arithmetic engine for the cohomology of bounded double complexes.
//!
//! The crate computes de Rham, row (`∂`), column (`∂̄`), Bott-Chern, and
//! Aeppli cohomologies of bounded double complexes over the Gaussian
//! rationals, realizes Poincaré-duality pairings with their conjugate-linear
//! star and Laplacian-kernel oracles, verifies sub-complex transfer
//! properties on chain maps, and builds complexes from declarative
//! character-twisted model descriptions, including the shipped Nakamura
//! solvmanifold presets.
//!
//! Everything is exact: coefficients live in Q(i) with arbitrary-precision
//! rational components and there is no floating point anywhere. All values
//! are immutable after construction and all operations are pure functions,
//! so they may be used freely across threads.

pub mod complex;
pub mod hodge;
pub mod matrix;
pub mod models;
pub mod morphisms;
pub mod scalar;
pub mod subspace;
pub mod synthetic;

pub use complex::{BigradedComplex, CohomologyResult, CohomologyTable, Degree, Theory, Violation};
pub use hodge::{Differential, HodgeError, LaplacianKind, PairedComplex, PdViolation};
pub use matrix::Matrix;
pub use models::{BuiltModel, GeneratorSpec, ModelError, ModelSpec};
pub use morphisms::{ComplexMap, InducedMap, MapError, Splitting};
pub use scalar::Scalar;
pub use subspace::Subspace;
