//! The sesquivalent graph polynomial `Φ_G(x, y, z)`.
//!
//! * [`graph`]: graphs, parsers and cycle / subgraph enumerators.
//! * [`exact`]: exact integer polynomial, its characteristic and matching
//!   specializations, and the determinant oracle.
//! * [`region`]: explicit zero-free region for bounded maximum degree.
//! * [`interpolator`]: deterministic approximation with a certified
//!   additive error on `log Φ_G`.
//! * [`validate`] and [`cli`]: validation suites and the `sesq` front end.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod interpolator;
pub mod region;
pub mod validate;
mod walk;

pub use error::{Error, Result};
pub use exact::{ExactEngine, SesquivalentPolynomial, SesquivalentSubgraph};
pub use graph::{Cycle, Graph};
pub use interpolator::{approximate_phi, ApproxConfig, Approximation, InterpolationPlan, TruncatedLogSeries};
pub use region::{certify_region, Point, RegionCertificate, RegionParams};
