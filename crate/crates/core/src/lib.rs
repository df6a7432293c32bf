//! Exact computation in free nonunitary Rota-Baxter algebras.
//!
//! Elements are finite sums of bracketed words with rational coefficients.
//! On top of the free algebra the crate provides the induced dendriform
//! di- and trialgebra operations, the free dendriform algebras on decorated
//! planar trees together with their embeddings into the free Rota-Baxter
//! algebra, and checks of the enveloping-algebra factorization against
//! concrete Rota-Baxter algebras.

pub mod algebra;
pub mod base_algebra;
pub mod dendriform;
pub mod enveloping;
pub mod error;
pub mod expr;
pub mod free_rba;
mod lexer;
pub mod lincomb;
pub mod rbword;
pub mod sample;
pub mod scalar;
pub mod suites;
pub mod trees;

pub use algebra::{LinearSpace, RotaBaxterAlgebra};
pub use base_algebra::{BaseAlgebra, BaseElement, BaseKind, MultTable};
pub use dendriform::{DendKind, DendriformStructure, Flavor};
pub use enveloping::{verify_envelope, EnvelopeReport, FiniteDendriform, RbOracle};
pub use error::{Error, Result};
pub use free_rba::{Context, Element, Limits, Morphism};
pub use lincomb::LinComb;
pub use rbword::{Alphabet, Factor, Generator, Letter, RBWord, WordStats};
pub use scalar::Scalar;
