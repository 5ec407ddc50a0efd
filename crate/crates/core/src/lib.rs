//! Exact computations with Lie conformal algebras, their universal
//! enveloping vertex algebras, and the formal vertex laws and vertex
//! manifolds obtained by integrating nilpotent ones.

pub mod error;
pub mod exec;
pub mod fvl;
pub mod golden;
pub mod lca;
pub mod manifold;
pub mod oracle;
pub mod linalg;
pub mod render;
pub mod scalar;
pub mod bialgebra;
pub mod dsl;
pub mod enveloping;

pub use error::{Error, Result};
pub use scalar::Q;
