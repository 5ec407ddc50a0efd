//! Formal vertex laws: the coefficient tables of the integrated vertex
//! structure, and checks of their axioms.

mod checks;
mod jacobi;
mod law_hom;
mod poly;
mod table;

pub use checks::{check_convergence_bound, check_identities, ConvergenceReport, IdentityReport};
pub use jacobi::{check_fvl_jacobi, JacobiFailure, JacobiReport};
pub use law_hom::{check_law_hom, LawHomReport, LawMap};
pub use table::{extract_fvl, fvl_from_json, fvl_to_json, monomials, FvlTable};
