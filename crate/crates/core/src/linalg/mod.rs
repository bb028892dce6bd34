//! Exact big-integer linear algebra.
//!
//! Determinants use Bareiss fraction-free elimination, so every
//! intermediate value is an integer minor and no rationals appear.

mod matrix;
mod polynomial;
mod snf;
mod spanning;

pub use matrix::{determinant, BigIntMatrix};
pub use polynomial::{
    charpoly_matrix_determinant, charpoly_matrix_determinant_with_shift, IntPolynomial, PolyMatrix,
};
pub use snf::{picard_torsion_order, smith_normal_form};
pub use spanning::{
    brute_force_spanning_trees, kirchhoff_count, laplacian, laplacian_cofactor, BRUTE_FORCE_EDGE_CAP,
};
