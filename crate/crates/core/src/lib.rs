//! Exact matroid computations: rank oracles over typed backends, minor
//! certificates, covering numbers, triangular-pair reductions, the
//! lift/projection perturbation calculus, and spanning-clique /
//! spanning-geometry decompositions. Every extraction emits a
//! machine-checkable witness that is re-verified against brute force at
//! small scale.


pub mod bounds;
pub mod constructions;

pub mod covering;
pub mod error;
pub mod gf;
pub mod graph;
pub mod ground;

pub mod kernel;
pub mod mask;




pub use error::{MatroidError, Result};
pub use ground::GroundSet;
pub use kernel::{Matroid, MinorCertificate};
pub use mask::Mask;
