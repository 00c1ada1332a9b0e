use std::fmt;

use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};

/// Dense row-major matrix over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: data.len() });
        }
        let data = data.into_iter().map(|c| field.reduce(c as u64)).collect();
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: Field, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, got: bad.len() });
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// the negated low coefficients in the last column.
    pub fn companion(g: &Poly) -> Result<Self> {
        let k = g.degree().ok_or(Error::ZeroPolynomial)?;
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let field = g.field();
        let mut m = Self::zeros(field, k, k);
        for i in 1..k {
            m.set(i, i - 1, 1);
        }
        for i in 0..k {
            m.set(i, k - 1, field.neg(g.coeff(i)));
        }
        Ok(m)
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diagonal(field: Field, blocks: &[Matrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(field, n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let q = self.field.q() as u64;
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * rhs.get(k, c) as u64) % q;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out.set(r, c, v as u32);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product with `v` as a column vector.
    pub fn apply(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let q = self.field.q() as u64;
        Ok((0..self.rows)
            .map(|r| {
                let s = self.row(r).iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % q);
                s as u32
            })
            .collect())
    }

    pub fn pow(&self, mut exp: u64) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, n);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<u32> {
        let n = self.require_square()?;
        let f = self.field;
        let mut m = self.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m.get(r, col) != 0) else {
                return Ok(0);
            };
            if piv != col {
                m.swap_rows(piv, col);
                det = f.neg(det);
            }
            let p = m.get(col, col);
            det = f.mul(det, p);
            let inv = f.inv(p).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), inv);
                if factor != 0 {
                    m.sub_row_multiple(r, col, factor, col);
                }
            }
        }
        Ok(det)
    }

    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(piv, rank);
            let inv = f.inv(m.get(rank, col)).expect("nonzero pivot");
            for r in 0..self.rows {
                if r != rank {
                    let factor = f.mul(m.get(r, col), inv);
                    if factor != 0 {
                        m.sub_row_multiple(r, rank, factor, col);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[target] -= factor * row[source]` for columns `from..`.
    pub(crate) fn sub_row_multiple(&mut self, target: usize, source: usize, factor: u32, from: usize) {
        let f = self.field;
        for c in from..self.cols {
            let s = self.get(source, c);
            if s != 0 {
                let t = self.get(target, c);
                self.set(target, c, f.sub(t, f.mul(factor, s)));
            }
        }
    }
}

/// Rows of space-separated digits.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
