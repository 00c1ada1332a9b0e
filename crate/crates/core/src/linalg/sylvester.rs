use super::matrix::Matrix;
use crate::algebra::Poly;
use crate::error::{Error, Result};

/// The `2n x 2n` Sylvester matrix of two degree-`n` polynomials.
///
/// Row `i < n` holds the ascending coefficients of `pf` starting at column
/// `i`; rows `n..2n` do the same for `pg`. States are column vectors, so
/// `M * (x || y)` is one step of the pair system.
pub fn sylvester_matrix(pf: &Poly, pg: &Poly, n: usize) -> Result<Matrix> {
    pf.check_field(pg)?;
    for p in [pf, pg] {
        match p.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(k) if k != n => return Err(Error::DegreeMismatch { expected: n, got: k }),
            _ => {}
        }
        if p.constant_term() == 0 {
            return Err(Error::ZeroConstantTerm);
        }
    }
    if n == 0 {
        return Err(Error::DegreeMismatch { expected: 1, got: 0 });
    }
    let mut m = Matrix::zeros(pf.field(), 2 * n, 2 * n);
    for (block, p) in [pf, pg].into_iter().enumerate() {
        for i in 0..n {
            for (k, &c) in p.coeffs().iter().enumerate() {
                m.set(block * n + i, i + k, c);
            }
        }
    }
    Ok(m)
}
