//! Bit-packed square matrices over `F_2` of dimension at most 63, used by
//! the maximal-pair enumeration hot loop.

use crate::algebra::gf2;

/// Row `r` is stored as a `u64` with bit `c` holding entry `(r, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<u64>,
}

impl BitMatrix {
    pub fn from_rows(rows: Vec<u64>) -> Self {
        assert!(rows.len() < 64, "dimension must be below 64");
        BitMatrix { rows }
    }

    /// Sylvester matrix of two bit-packed polynomials of degree `n`.
    pub fn sylvester(pf: u64, pg: u64, n: usize) -> Self {
        debug_assert_eq!(gf2::degree(pf), Some(n as u32));
        debug_assert_eq!(gf2::degree(pg), Some(n as u32));
        let rows = (0..n).map(|i| pf << i).chain((0..n).map(|i| pg << i)).collect();
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// `M * v` for a column vector `v`.
    #[inline]
    pub fn apply(&self, v: u64) -> u64 {
        self.rows.iter().enumerate().fold(0, |acc, (r, &row)| acc | ((((row & v).count_ones() & 1) as u64) << r))
    }

    /// Monic generator of the annihilator of `v`, bit-packed (bit `i` is the
    /// coefficient of `X^i`).
    pub fn vector_min_poly(&self, v: u64) -> u64 {
        let n = self.dim();
        // (reduced vector, combination of Krylov powers, pivot bit)
        let mut basis: Vec<(u64, u64, u32)> = Vec::with_capacity(n);
        let mut current = v;
        for k in 0..=n {
            let mut w = current;
            let mut comb = 1u64 << k;
            for &(bv, bc, piv) in &basis {
                if (w >> piv) & 1 == 1 {
                    w ^= bv;
                    comb ^= bc;
                }
            }
            if w == 0 {
                return comb;
            }
            basis.push((w, comb, w.trailing_zeros()));
            current = self.apply(current);
        }
        unreachable!("Krylov sequence longer than the dimension")
    }
}

/// True iff the binary Sylvester matrix of `pf`, `pg` has a primitive minimal
/// polynomial of full degree `2n`.
///
/// When the minimal polynomial is irreducible of degree `2n`, every nonzero
/// vector has it as annihilator; so it suffices to test the annihilator of
/// the first basis vector.
pub fn sylvester_is_maximal(pf: u64, pg: u64, n: usize, tester: &gf2::PrimitivityTester) -> bool {
    maximal_min_poly(pf, pg, n, tester).is_some()
}

/// The primitive minimal polynomial of a maximal binary Sylvester matrix.
pub fn maximal_min_poly(pf: u64, pg: u64, n: usize, tester: &gf2::PrimitivityTester) -> Option<u64> {
    let mu = BitMatrix::sylvester(pf, pg, n).vector_min_poly(1);
    tester.is_primitive(mu).then_some(mu)
}
