//! Enumeration of linear pairs whose Sylvester matrix has maximal order.
//!
//! Candidates are the degree-`n` polynomials `a_1 + a_2 X + ... + a_d X^n`
//! listed in lexicographic order of `(a_1, ..., a_d)`. For `i < j` the
//! matrix with `P_i` on top and `P_j` below is tested. A pair is maximal
//! iff the annihilator of the first basis vector is primitive of degree
//! `2n` (see [`crate::lms::is_maximal_krylov`]).

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{gf2, is_primitive, Field, Poly};
use crate::error::{Error, Result};
use crate::linalg::gf2mat::maximal_min_poly;
use crate::linalg::{sylvester_matrix, vector_min_poly};

/// Which end coefficients a candidate polynomial may have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum EndCoefficients {
    /// `a_1 = a_d = 1`.
    #[default]
    One,
    /// `a_1 != 0` and `a_d != 0`.
    Nonzero,
}

/// Which index pairs are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum PairOrder {
    /// `i < j`, `P_i` on top.
    #[default]
    Lexicographic,
    /// `i < j`, counted if either stacking is maximal.
    Either,
    /// All `i != j`.
    Ordered,
}

#[derive(Debug, Clone, Default)]
pub struct LinearEnumOptions {
    pub ends: EndCoefficients,
    pub order: PairOrder,
    /// Keep every maximal pair in the report.
    pub collect: bool,
}

/// Serialized with ascending coefficient lists, as in [`Self::to_line`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalPairRecord {
    #[serde(serialize_with = "ser_coeffs")]
    pub pf: Poly,
    #[serde(serialize_with = "ser_coeffs")]
    pub pg: Poly,
    #[serde(serialize_with = "ser_coeffs")]
    pub min_poly: Poly,
}

fn ser_coeffs<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_coeff_list())
}

impl MaximalPairRecord {
    /// `pf pg` as ascending coefficient lists, e.g. `1,0,1 1,1,1`.
    pub fn to_line(&self) -> String {
        format!("{} {}", self.pf.to_coeff_list(), self.pg.to_coeff_list())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearEnumReport {
    pub q: u32,
    pub d: usize,
    pub candidates: u64,
    pub pairs_tested: u64,
    pub count: u64,
    pub records: Vec<MaximalPairRecord>,
}

/// Candidate polynomials in lexicographic order of `(a_1, ..., a_d)`.
pub fn candidate_polys(field: Field, d: usize, ends: EndCoefficients) -> Result<Vec<Poly>> {
    let q = field.q() as u64;
    let total = q.checked_pow(d as u32).filter(|&t| t <= 1 << 32).ok_or(Error::Overflow("candidate count"))?;
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; d];
    for idx in 0..total {
        let mut k = idx;
        for slot in coeffs.iter_mut().rev() {
            *slot = (k % q) as u32;
            k /= q;
        }
        let ok = match ends {
            EndCoefficients::One => coeffs[0] == 1 && coeffs[d - 1] == 1,
            EndCoefficients::Nonzero => coeffs[0] != 0 && coeffs[d - 1] != 0,
        };
        if ok {
            out.push(Poly::new(field, coeffs.iter().copied()));
        }
    }
    Ok(out)
}

enum Tester {
    Binary(gf2::PrimitivityTester, Vec<u64>),
    Generic,
}

impl Tester {
    fn min_poly(&self, polys: &[Poly], i: usize, j: usize, n: usize) -> Result<Option<Poly>> {
        match self {
            Tester::Binary(t, bits) => Ok(maximal_min_poly(bits[i], bits[j], n, t).map(gf2::to_poly)),
            Tester::Generic => {
                let m = sylvester_matrix(&polys[i], &polys[j], n)?;
                let mut e1 = vec![0u32; 2 * n];
                e1[0] = 1;
                let mu = vector_min_poly(&m, &e1)?;
                Ok((mu.degree() == Some(2 * n) && is_primitive(&mu)).then_some(mu))
            }
        }
    }
}

/// Counts maximal linear pairs of diameter `d` over `F_q`.
pub fn enumerate_maximal_linear(d: usize, q: u32, options: &LinearEnumOptions) -> Result<LinearEnumReport> {
    let field = Field::new(q)?;
    if d < 2 {
        return Err(Error::UnsupportedDiameter { d, reason: "diameter must be at least 2" });
    }
    let n = d - 1;
    crate::algebra::checked_field_size(q, 2 * n).ok_or(Error::Overflow("q^(2n)"))?;
    let polys = candidate_polys(field, d, options.ends)?;
    let tester = if q == 2 && 2 * n < 64 {
        Tester::Binary(gf2::PrimitivityTester::new(2 * n as u32), polys.iter().map(gf2::from_poly).collect())
    } else {
        Tester::Generic
    };
    let len = polys.len();
    let per_row: Vec<Result<(u64, u64, Vec<MaximalPairRecord>)>> = (0..len)
        .into_par_iter()
        .map(|i| {
            let mut tested = 0u64;
            let mut count = 0u64;
            let mut records = Vec::new();
            let js: Box<dyn Iterator<Item = usize>> = match options.order {
                PairOrder::Ordered => Box::new((0..len).filter(move |&j| j != i)),
                _ => Box::new(i + 1..len),
            };
            for j in js {
                tested += 1;
                let mut hit = tester.min_poly(&polys, i, j, n)?.map(|m| (i, j, m));
                if hit.is_none() && options.order == PairOrder::Either {
                    hit = tester.min_poly(&polys, j, i, n)?.map(|m| (j, i, m));
                }
                if let Some((a, b, min_poly)) = hit {
                    count += 1;
                    if options.collect {
                        records.push(MaximalPairRecord { pf: polys[a].clone(), pg: polys[b].clone(), min_poly });
                    }
                }
            }
            Ok((tested, count, records))
        })
        .collect();
    let mut report = LinearEnumReport { q, d, candidates: len as u64, pairs_tested: 0, count: 0, records: Vec::new() };
    for row in per_row {
        let (tested, count, records) = row?;
        report.pairs_tested += tested;
        report.count += count;
        report.records.extend(records);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binary_counts() {
        let opts = LinearEnumOptions::default();
        let counts: Vec<u64> = (2..=6).map(|d| enumerate_maximal_linear(d, 2, &opts).unwrap().count).collect();
        assert_eq!(counts, vec![0, 1, 1, 3, 17]);
    }

    #[test]
    fn small_ternary_counts() {
        let opts = LinearEnumOptions::default();
        let counts: Vec<u64> = (2..=5).map(|d| enumerate_maximal_linear(d, 3, &opts).unwrap().count).collect();
        assert_eq!(counts, vec![0, 0, 3, 15]);
    }

    #[test]
    fn candidate_order() {
        let p = candidate_polys(Field::binary(), 4, EndCoefficients::One).unwrap();
        let lists: Vec<String> = p.iter().map(Poly::to_coeff_list).collect();
        assert_eq!(lists, vec!["1,0,0,1", "1,0,1,1", "1,1,0,1", "1,1,1,1"]);
    }
}
