use std::fmt;

use serde::Serialize;

use super::rule::{is_permutation, LocalRule};
use crate::error::{Error, Result};

/// `N x N` grid of symbols in `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatinSquare {
    order: usize,
    grid: Vec<u32>,
}

impl LatinSquare {
    /// Wraps a grid without checking the Latin property.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::NotSquare { rows: order, cols: bad.len() });
        }
        Ok(LatinSquare { order, grid: rows.concat() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.grid[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.grid.chunks(self.order.max(1)).map(<[u32]>::to_vec).collect()
    }

    /// Each row and each column is a permutation of `1..=N`.
    pub fn is_latin(&self) -> bool {
        let n = self.order;
        let mut seen = vec![false; n];
        // symbols 1..=N shifted to 0..N; 0 wraps to u32::MAX and is rejected
        (0..n).all(|i| is_permutation(&mut seen, (0..n).map(|j| self.get(i, j).wrapping_sub(1))))
            && (0..n).all(|j| is_permutation(&mut seen, (0..n).map(|i| self.get(i, j).wrapping_sub(1))))
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn is_latin(square: &LatinSquare) -> bool {
    square.is_latin()
}

/// `phi(x) = 1 + sum x_i q^(i-1)`, first coordinate least significant.
pub fn phi(x: &[u32], q: u32) -> usize {
    1 + x.iter().rev().fold(0usize, |acc, &c| acc * q as usize + c as usize)
}

/// Inverse of [`phi`] for vectors of length `len`.
pub fn psi(i: usize, q: u32, len: usize) -> Vec<u32> {
    let mut k = i - 1;
    (0..len)
        .map(|_| {
            let c = (k % q as usize) as u32;
            k /= q as usize;
            c
        })
        .collect()
}

/// Square of order `q^(d-1)` with entry `(i, j) = phi(F(psi(i) || psi(j)))`.
pub fn latin_square(rule: &LocalRule) -> Result<LatinSquare> {
    if !rule.is_bipermutive() {
        return Err(Error::NotBipermutive);
    }
    let n = rule.diameter() - 1;
    let q = rule.q();
    let order = (q as usize).pow(n as u32);
    let mut grid = Vec::with_capacity(order * order);
    let mut config = vec![0u32; 2 * n];
    for i in 1..=order {
        config[..n].copy_from_slice(&psi(i, q, n));
        for j in 1..=order {
            config[n..].copy_from_slice(&psi(j, q, n));
            let out = rule.nbca_apply(&config)?;
            grid.push(phi(&out, q) as u32);
        }
    }
    Ok(LatinSquare { order, grid })
}

/// True iff the map `x || y -> F(x||y) || G(x||y)` on `F_q^(2(d-1))` is a
/// bijection, i.e. the superposed squares are orthogonal.
pub fn are_orthogonal(f: &LocalRule, g: &LocalRule) -> Result<bool> {
    f.require_compatible(g)?;
    if !f.is_bipermutive() || !g.is_bipermutive() {
        return Err(Error::NotBipermutive);
    }
    let n = f.diameter() - 1;
    let q = f.q();
    let states = (q as usize)
        .checked_pow(2 * n as u32)
        .filter(|&s| s <= 1 << 32)
        .ok_or(Error::UnsupportedDiameter { d: f.diameter(), reason: "phase space too large" })?;
    let mut hit = vec![false; states];
    let mut config = vec![0u32; 2 * n];
    for s in 0..states {
        super::rule::decode_msb(s, q, &mut config);
        let mut image = f.nbca_apply(&config)?;
        image.extend(g.nbca_apply(&config)?);
        let k = image.iter().fold(0usize, |acc, &c| acc * q as usize + c as usize);
        if std::mem::replace(&mut hit[k], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The joint map `x -> (f(x), g(x))` hits every pair `q^(d-2)` times.
pub fn pairwise_balanced(f: &LocalRule, g: &LocalRule) -> Result<bool> {
    f.require_compatible(g)?;
    let q = f.q() as usize;
    let mut counts = vec![0usize; q * q];
    for (&a, &b) in f.table().iter().zip(g.table()) {
        counts[a as usize * q + b as usize] += 1;
    }
    let target = f.table().len() / (q * q);
    Ok(counts.iter().all(|&c| c == target))
}
