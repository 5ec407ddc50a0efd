//! Lie conformal algebras: presentations, brackets, axioms and the lower
//! central series with its adapted bases.

mod axioms;
mod frame;
mod poly;
mod presentation;
mod series;
mod submodule;
mod vector;

pub use axioms::{check_lca_axioms, jacobi_residual, skew_residual, AxiomCheck, AxiomReport, Residual};
pub use frame::{Frame, Letter};
pub use poly::DPoly;
pub use presentation::{GenKind, GeneratorSpec, LcaPresentation};
pub use series::{lower_central_series, theta, Filtration, LowerCentralSeries, MAX_SERIES_LEN};
pub use submodule::Submodule;
pub use vector::{BasisIndex, ConformalVector, LambdaMuPoly, LambdaPoly};

use std::sync::Arc;

/// An ordered list of basis vectors with their `Θ` labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedBasis {
    pub vectors: Vec<(ConformalVector, u32)>,
}

/// Adapted basis of the slice of depth at most `depth_cap`, in PBW order.
pub fn adapted_basis(p: &LcaPresentation, depth_cap: u32) -> crate::error::Result<AdaptedBasis> {
    let frame = Frame::adapted(Arc::new(p.clone()))?;
    let vectors = frame
        .letters_up_to(depth_cap)
        .into_iter()
        .map(|l| (frame.vector(l), l.theta()))
        .collect();
    Ok(AdaptedBasis { vectors })
}
