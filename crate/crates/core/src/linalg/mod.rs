//! Matrices over `F_q`, Sylvester matrices and normal forms.

pub mod gf2mat;
mod matrix;
mod normal_form;
mod sylvester;

pub use matrix::Matrix;
pub use normal_form::{
    char_poly_hessenberg, gl_order, invariant_factors, mat_order, min_char_poly, min_poly_krylov, rcf, vector_min_poly,
    NormalFormReport,
};
pub use sylvester::sylvester_matrix;

use crate::error::Result;

/// Determinant over `F_q`; for a Sylvester matrix this is the resultant.
pub fn mat_det(a: &Matrix) -> Result<u32> {
    a.det()
}

/// Matrix-vector product with `v` as a column vector.
pub fn mat_apply(a: &Matrix, v: &[u32]) -> Result<Vec<u32>> {
    a.apply(v)
}
