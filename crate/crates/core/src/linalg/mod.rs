//! Exact integer linear algebra: polynomials, sparse matrices and minimal
//! polynomials. No floating point anywhere.

mod dependence;
mod minpoly;
pub mod modp;
mod poly;
mod sparse;

pub use dependence::{first_dependence, DependenceFinder};
pub use minpoly::{annihilates, apply_poly, evaluate_poly_at_matrix, minimal_polynomial, MinPolyMethod};
pub use poly::BigPoly;
pub use sparse::SparseIntMatrix;
