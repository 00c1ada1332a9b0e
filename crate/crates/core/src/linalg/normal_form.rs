//! Invariant factors, elementary divisors and the rational canonical form.
//!
//! The invariant factors come from the Smith normal form of `X*I - A` over
//! `F_q[X]`; the characteristic and minimal polynomials are read off them.
//! Two independent routes (Hessenberg characteristic polynomial and
//! Krylov minimal polynomials) are kept for cross-checking and for the
//! enumeration hot path.

use serde::Serialize;

use super::matrix::Matrix;
use crate::algebra::{irreducible_power_order, lcm_u64, poly_factor, Field, Poly};
use crate::error::{Error, Result};

/// Normal-form data of a square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormReport {
    pub char_poly: Poly,
    pub min_poly: Poly,
    /// Non-unit invariant factors, each dividing the next.
    pub invariant_factors: Vec<Poly>,
    /// One `(irreducible, multiplicity)` entry per companion block.
    pub elementary_divisors: Vec<(Poly, u32)>,
}

impl NormalFormReport {
    /// The elementary divisors as polynomials `f^m`.
    pub fn elementary_divisor_polys(&self) -> Vec<Poly> {
        self.elementary_divisors.iter().map(|(f, m)| f.pow(*m)).collect()
    }
}

#[derive(Serialize)]
struct ReportJson {
    char_poly: String,
    min_poly: String,
    invariant_factors: Vec<String>,
    elementary_divisors: Vec<(String, u32)>,
}

impl Serialize for NormalFormReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            char_poly: self.char_poly.to_string(),
            min_poly: self.min_poly.to_string(),
            invariant_factors: self.invariant_factors.iter().map(Poly::to_string).collect(),
            elementary_divisors: self.elementary_divisors.iter().map(|(f, m)| (f.to_string(), *m)).collect(),
        }
        .serialize(s)
    }
}

/// Diagonal of the Smith normal form of `X*I - A`, made monic, with the
/// unit entries dropped.
pub fn invariant_factors(a: &Matrix) -> Result<Vec<Poly>> {
    let n = a.require_square()?;
    let field = a.field();
    let mut m: Vec<Vec<Poly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let entry = field.neg(a.get(r, c));
                    if r == c {
                        Poly::new(field, [entry, 1])
                    } else {
                        Poly::constant(field, entry)
                    }
                })
                .collect()
        })
        .collect();

    for k in 0..n {
        loop {
            let pivot = (k..n)
                .flat_map(|r| (k..n).map(move |c| (r, c)))
                .filter(|&(r, c)| !m[r][c].is_zero())
                .min_by_key(|&(r, c)| m[r][c].degree());
            let Some((pr, pc)) = pivot else {
                return Err(Error::Internal("characteristic matrix lost full rank".into()));
            };
            m.swap(k, pr);
            for row in m.iter_mut() {
                row.swap(k, pc);
            }
            let p = m[k][k].clone();
            let mut clean = true;
            for r in k + 1..n {
                if m[r][k].is_zero() {
                    continue;
                }
                let (quot, rem) = m[r][k].div_rem(&p);
                let (top, bottom) = m.split_at_mut(r);
                for (dst, src) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                    *dst = &*dst - &(&quot * src);
                }
                clean &= rem.is_zero();
            }
            for c in k + 1..n {
                if m[k][c].is_zero() {
                    continue;
                }
                let (quot, rem) = m[k][c].div_rem(&p);
                for row in m.iter_mut().skip(k) {
                    let t = &row[c] - &(&quot * &row[k]);
                    row[c] = t;
                }
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            let offender =
                (k + 1..n).flat_map(|r| (k + 1..n).map(move |c| (r, c))).find(|&(r, c)| !p.divides(&m[r][c]));
            match offender {
                Some((r, _)) => {
                    let (top, bottom) = m.split_at_mut(r);
                    for (dst, src) in top[k][k..].iter_mut().zip(&bottom[0][k..]) {
                        *dst = &*dst + src;
                    }
                }
                None => break,
            }
        }
    }
    Ok((0..n).map(|i| m[i][i].monic()).filter(|p| !p.is_one()).collect())
}

/// Characteristic polynomial, minimal polynomial, invariant factors and
/// elementary divisors of a square matrix.
pub fn min_char_poly(a: &Matrix) -> Result<NormalFormReport> {
    let field = a.field();
    let invariant = invariant_factors(a)?;
    let char_poly = invariant.iter().fold(Poly::one(field), |acc, p| &acc * p);
    let min_poly = invariant.last().cloned().unwrap_or_else(|| Poly::one(field));
    let mut elementary_divisors = Vec::new();
    for inv in &invariant {
        elementary_divisors.extend(poly_factor(inv)?.factors);
    }
    elementary_divisors.sort();
    Ok(NormalFormReport { char_poly, min_poly, invariant_factors: invariant, elementary_divisors })
}

/// Rational canonical form: block-diagonal companion matrices of the
/// elementary divisors.
pub fn rcf(a: &Matrix) -> Result<Matrix> {
    let report = min_char_poly(a)?;
    let blocks = report.elementary_divisor_polys().iter().map(Matrix::companion).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::block_diagonal(a.field(), &blocks))
}

/// Multiplicative order of an invertible matrix, as the `lcm` of the orders
/// of its elementary divisors.
pub fn mat_order(a: &Matrix) -> Result<u64> {
    a.require_square()?;
    if a.det()? == 0 {
        return Err(Error::Singular);
    }
    order_from_elementary_divisors(&min_char_poly(a)?.elementary_divisors)
}

pub(crate) fn order_from_elementary_divisors(divisors: &[(Poly, u32)]) -> Result<u64> {
    divisors.iter().try_fold(1u64, |acc, (f, m)| {
        let o = irreducible_power_order(f, *m)?;
        lcm_u64(acc, o).ok_or(Error::Overflow("matrix order"))
    })
}

/// Characteristic polynomial via reduction to upper Hessenberg form.
pub fn char_poly_hessenberg(a: &Matrix) -> Result<Poly> {
    let n = a.require_square()?;
    let f = a.field();
    let mut h = a.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap_rows(i, j + 1);
            for r in 0..n {
                let (x, y) = (h.get(r, i), h.get(r, j + 1));
                h.set(r, i, y);
                h.set(r, j + 1, x);
            }
        }
        let inv = f.inv(h.get(j + 1, j)).expect("nonzero pivot");
        for k in j + 2..n {
            let u = f.mul(h.get(k, j), inv);
            if u == 0 {
                continue;
            }
            // row_k -= u * row_{j+1}; col_{j+1} += u * col_k keeps similarity
            h.sub_row_multiple(k, j + 1, u, 0);
            for r in 0..n {
                let v = f.add(h.get(r, j + 1), f.mul(u, h.get(r, k)));
                h.set(r, j + 1, v);
            }
        }
    }
    let mut polys: Vec<Poly> = vec![Poly::one(f)];
    for k in 1..=n {
        let mut pk = &Poly::new(f, [f.neg(h.get(k - 1, k - 1)), 1]) * &polys[k - 1];
        let mut t = 1u32;
        for i in 1..k {
            t = f.mul(t, h.get(k - i, k - i - 1));
            let c = f.mul(h.get(k - i - 1, k - 1), t);
            if c != 0 {
                pk = &pk - &polys[k - i - 1].scale(c);
            }
        }
        polys.push(pk);
    }
    Ok(polys.pop().expect("n + 1 entries"))
}

/// Minimal polynomial of `A` relative to the vector `v` (the monic
/// generator of `{p : p(A) v = 0}`), found from the first linear
/// dependency among `v, Av, A^2 v, ...`.
pub fn vector_min_poly(a: &Matrix, v: &[u32]) -> Result<Poly> {
    let n = a.require_square()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() });
    }
    let f = a.field();
    // echelon rows: (vector, combination over powers, pivot column)
    let mut basis: Vec<(Vec<u32>, Vec<u32>, usize)> = Vec::new();
    let mut current = v.to_vec();
    for k in 0..=n {
        let mut w = current.clone();
        let mut comb = vec![0u32; n + 1];
        comb[k] = 1;
        for (bv, bc, piv) in &basis {
            let c = w[*piv];
            if c != 0 {
                for (x, y) in w.iter_mut().zip(bv) {
                    *x = f.sub(*x, f.mul(c, *y));
                }
                for (x, y) in comb.iter_mut().zip(bc) {
                    *x = f.sub(*x, f.mul(c, *y));
                }
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => return Ok(Poly::new(f, comb)),
            Some(piv) => {
                let inv = f.inv(w[piv]).expect("nonzero pivot");
                w.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                basis.push((w, comb, piv));
            }
        }
        current = a.apply(&current)?;
    }
    Err(Error::Internal("Krylov sequence exceeded the dimension".into()))
}

/// Minimal polynomial as the `lcm` of the vector minimal polynomials of the
/// standard basis; independent of the Smith normal form route.
pub fn min_poly_krylov(a: &Matrix) -> Result<Poly> {
    let n = a.require_square()?;
    let f = a.field();
    let mut acc = Poly::one(f);
    for i in 0..n {
        let mut e = vec![0u32; n];
        e[i] = 1;
        let mu = vector_min_poly(a, &e)?;
        let g = crate::algebra::gcd_unchecked(&acc, &mu);
        acc = (&acc * &mu).div_rem(&g).0.monic();
    }
    Ok(acc)
}

/// Order of the general linear group `GL(m, F_q)`: `prod_{i<m} (q^m - q^i)`.
pub fn gl_order(m: usize, q: u32) -> Result<u128> {
    Field::new(q)?;
    if m == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let qm = (q as u128).checked_pow(m as u32).ok_or(Error::Overflow("GL order"))?;
    let mut acc = 1u128;
    let mut qi = 1u128;
    for _ in 0..m {
        acc = acc.checked_mul(qm - qi).ok_or(Error::Overflow("GL order"))?;
        qi *= q as u128;
    }
    Ok(acc)
}
