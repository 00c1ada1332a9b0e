//! Cycle structure of linear pairs from the elementary divisors of their
//! Sylvester matrix.
//!
//! A block `M(f^m)` with `f` irreducible of degree `e` splits its
//! `q^(em)` states by annihilator: the vectors killed by `f^h` but not by
//! `f^(h-1)` number `q^(he) - q^((h-1)e)` and all lie on cycles of length
//! `ord(f^h)`. Independent blocks combine through [`CycleSum::product`].

use serde::Serialize;

use crate::algebra::{checked_field_size, irreducible_power_order, is_irreducible, is_primitive, poly_gcd, Poly};
use crate::dynamics::CycleSum;
use crate::error::{Error, Result};
use crate::linalg::{min_char_poly, sylvester_matrix, vector_min_poly, Matrix};

/// An elementary divisor `f^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSpec {
    #[serde(serialize_with = "crate::lms::ser_poly")]
    pub f: Poly,
    pub m: u32,
}

pub(crate) fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl BlockSpec {
    pub fn new(f: Poly, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Internal("multiplicity must be positive".into()));
        }
        if !is_irreducible(&f) {
            return Err(Error::Reducible);
        }
        Ok(BlockSpec { f: f.monic(), m })
    }
}

/// `ord(f^h)` for irreducible `f` with nonzero constant term.
pub fn ord_power(f: &Poly, h: u32) -> Result<u64> {
    if !is_irreducible(f) {
        return Err(Error::Reducible);
    }
    irreducible_power_order(f, h)
}

/// Cycle sum of the system defined by the companion block of `f^m`.
pub fn block_cycle_sum(b: &BlockSpec) -> Result<CycleSum> {
    let e = b.f.degree().ok_or(Error::ZeroPolynomial)?;
    let q = b.f.q();
    let mut sum = CycleSum::term(1, 1);
    let mut prev = 1u64;
    for h in 1..=b.m {
        let size = checked_field_size(q, e * h as usize).ok_or(Error::Overflow("q^(he)"))?;
        let t = ord_power(&b.f, h)?;
        let states = size - prev;
        if !states.is_multiple_of(t) {
            return Err(Error::Internal(format!("{states} states do not split into cycles of length {t}")));
        }
        sum.add((states / t) as u128, t);
        prev = size;
    }
    Ok(sum)
}

pub fn cycle_sum_product(a: &CycleSum, b: &CycleSum) -> CycleSum {
    a.product(b)
}

/// Cycle sum of `v -> A v` for an invertible square matrix.
pub fn matrix_cycle_sum(a: &Matrix) -> Result<CycleSum> {
    if !a.is_invertible() {
        return Err(Error::Singular);
    }
    let report = min_char_poly(a)?;
    report.elementary_divisors.iter().try_fold(CycleSum::term(1, 1), |acc, (f, m)| {
        Ok(acc.product(&block_cycle_sum(&BlockSpec { f: f.clone(), m: *m })?))
    })
}

fn check_pair(pf: &Poly, pg: &Poly) -> Result<usize> {
    let n = pf.degree().ok_or(Error::ZeroPolynomial)?;
    let ng = pg.degree().ok_or(Error::ZeroPolynomial)?;
    if n != ng {
        return Err(Error::DegreeMismatch { expected: n, got: ng });
    }
    if !poly_gcd(pf, pg)?.is_one() {
        return Err(Error::NotCoprime);
    }
    Ok(n)
}

/// Cycle sum of the pair system `H = M_{f,g}` for coprime `pf`, `pg`.
pub fn system_cycle_sum(pf: &Poly, pg: &Poly) -> Result<CycleSum> {
    let n = check_pair(pf, pg)?;
    matrix_cycle_sum(&sylvester_matrix(pf, pg, n)?)
}

/// True iff the Sylvester matrix has a primitive minimal polynomial of
/// degree `2n`, i.e. order `q^(2n) - 1`.
pub fn is_maximal(pf: &Poly, pg: &Poly) -> Result<bool> {
    let n = check_pair(pf, pg)?;
    let min = min_char_poly(&sylvester_matrix(pf, pg, n)?)?.min_poly;
    Ok(min.degree() == Some(2 * n) && is_primitive(&min))
}

/// Same verdict as [`is_maximal`] from the annihilator of the first basis
/// vector alone, skipping the coprimality check (a common factor makes the
/// matrix singular, so no vector has a primitive annihilator of full degree).
pub fn is_maximal_krylov(pf: &Poly, pg: &Poly, n: usize) -> Result<bool> {
    let m = sylvester_matrix(pf, pg, n)?;
    let mut e1 = vec![0u32; 2 * n];
    e1[0] = 1;
    let mu = vector_min_poly(&m, &e1)?;
    Ok(mu.degree() == Some(2 * n) && is_primitive(&mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn p2(c: &[u32]) -> Poly {
        Poly::new(Field::binary(), c.iter().copied())
    }

    #[test]
    fn power_orders() {
        assert_eq!(ord_power(&p2(&[1, 1, 1]), 1).unwrap(), 3);
        assert_eq!(ord_power(&p2(&[1, 1]), 2).unwrap(), 2);
        assert!(matches!(ord_power(&p2(&[1, 0, 1]), 1), Err(Error::Reducible)));
    }

    #[test]
    fn block_sums() {
        let b = BlockSpec::new(p2(&[1, 1, 1]), 1).unwrap();
        assert_eq!(block_cycle_sum(&b).unwrap().to_string(), "1×1 + 1×3");
        let b = BlockSpec::new(p2(&[1, 1]), 2).unwrap();
        assert_eq!(block_cycle_sum(&b).unwrap().to_string(), "2×1 + 1×2");
    }

    #[test]
    fn pair_90_150() {
        let (pf, pg) = (p2(&[1, 0, 1]), p2(&[1, 1, 1]));
        assert_eq!(system_cycle_sum(&pf, &pg).unwrap().to_string(), "1×1 + 1×15");
        assert!(is_maximal(&pf, &pg).unwrap());
        assert!(is_maximal_krylov(&pf, &pg, 2).unwrap());
        assert!(matches!(is_maximal(&pf, &pf), Err(Error::NotCoprime)));
    }

    #[test]
    fn identity_is_not_maximal() {
        let id = Matrix::identity(Field::binary(), 2);
        assert_eq!(matrix_cycle_sum(&id).unwrap().to_string(), "4×1");
    }
}
