//! Factorization of polynomials over prime fields.
//!
//! Pipeline: square-free decomposition, distinct-degree splitting, then
//! equal-degree splitting (Cantor-Zassenhaus; the trace map in characteristic
//! two). The random elements used for equal-degree splitting come from a
//! fixed-seed generator, so results and running times are reproducible.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::poly::{gcd_unchecked, Poly};
use crate::error::{Error, Result};

/// Complete factorization `unit * prod(factor^multiplicity)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u32,
    /// Monic irreducible factors, sorted, each with its multiplicity.
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factors back out, including the leading unit.
    pub fn expand(&self, field: Field) -> Poly {
        let mut acc = Poly::constant(field, self.unit);
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit != 1 || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
            if !self.factors.is_empty() {
                write!(f, "*")?;
            }
        }
        for (i, (p, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            let wrap = p.coeffs().iter().filter(|&&c| c != 0).count() > 1;
            match (wrap, *m) {
                (true, 1) => write!(f, "({p})")?,
                (true, m) => write!(f, "({p})^{m}")?,
                (false, 1) => write!(f, "{p}")?,
                (false, m) => write!(f, "({p})^{m}")?,
            }
        }
        Ok(())
    }
}

/// Factors `f` into monic irreducibles with multiplicities.
pub fn poly_factor(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading();
    let mut factors = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ca_5eed);
    for (sqfree, mult) in square_free(&f.monic()) {
        for (block, degree) in distinct_degree(&sqfree) {
            let mut pieces = Vec::new();
            equal_degree(&block, degree, &mut rng, &mut pieces);
            factors.extend(pieces.into_iter().map(|p| (p, mult)));
        }
    }
    factors.sort();
    let mut merged: Vec<(Poly, u32)> = Vec::with_capacity(factors.len());
    for (p, m) in factors {
        match merged.last_mut() {
            Some((last, lm)) if *last == p => *lm += m,
            _ => merged.push((p, m)),
        }
    }
    Ok(Factorization { unit, factors: merged })
}

/// Rabin/Ben-Or test: no factor of degree `<= deg/2`.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let x = Poly::x(f.field());
    let q = f.q() as u128;
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = h.pow_mod(q, &f);
        if !gcd_unchecked(&(&h - &x), &f).is_one() {
            return false;
        }
    }
    true
}

/// Square-free decomposition of a monic polynomial: `f = prod(g_i^i)`.
pub(crate) fn square_free(f: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = f.q();
    let c0 = gcd_unchecked(f, &f.derivative());
    let mut w = f.div_rem(&c0).0;
    let mut c = c0;
    let mut i = 1;
    while !w.is_one() {
        let y = gcd_unchecked(&w, &c);
        let fac = w.div_rem(&y).0;
        if !fac.is_one() {
            out.push((fac.monic(), i));
        }
        c = c.div_rem(&y).0;
        w = y;
        i += 1;
    }
    if !c.is_one() {
        // c is a p-th power: keep every p-th coefficient (a^p = a in F_p)
        let root = Poly::new(c.field(), c.coeffs().iter().step_by(p as usize).copied());
        for (g, m) in square_free(&root.monic()) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a monic square-free polynomial into products of equal-degree irreducibles.
pub(crate) fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let x = Poly::x(f.field());
    let q = f.q() as u128;
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod(q, &rest);
        let g = gcd_unchecked(&(&h - &x), &rest);
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &Poly, degree: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = f.degree().unwrap_or(0);
    if n == degree {
        out.push(f.monic());
        return;
    }
    let field = f.field();
    let q = field.q();
    loop {
        let a = Poly::new(field, (0..n).map(|_| rng.gen_range(0..q)));
        if a.is_constant() {
            continue;
        }
        let g = gcd_unchecked(&a, f);
        let candidate = if !g.is_one() {
            g
        } else {
            let b = if q == 2 {
                // absolute trace a + a^2 + ... + a^(2^(degree-1))
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..degree {
                    t = t.mul_mod(&t, f);
                    acc = &acc + &t;
                }
                acc
            } else {
                let exp = (q as u128).pow(degree as u32).saturating_sub(1) / 2;
                &a.pow_mod(exp, f) - &Poly::one(field)
            };
            gcd_unchecked(&b, f)
        };
        let cd = candidate.degree().unwrap_or(0);
        if cd > 0 && cd < n {
            let rest = f.div_rem(&candidate).0;
            equal_degree(&candidate, degree, rng, out);
            equal_degree(&rest, degree, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: u32, c: &[u32]) -> Poly {
        Poly::new(Field::new(q).unwrap(), c.iter().copied())
    }

    #[test]
    fn x3_plus_1_over_f2() {
        let fac = poly_factor(&p(2, &[1, 0, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(2, &[1, 1]), 1), (p(2, &[1, 1, 1]), 1)]);
    }

    #[test]
    fn irreducible_input_is_its_own_factor() {
        let f = p(2, &[1, 1, 1]);
        let fac = poly_factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(f, 1)]);
        assert!(fac.is_irreducible());
    }

    #[test]
    fn cube_of_linear_factor() {
        let fac = poly_factor(&p(2, &[1, 1, 1, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(2, &[1, 1]), 3)]);
    }

    #[test]
    fn p_th_power_layers() {
        // (X^2+X+1)^2 * (X+1)^4 over F2 and (X+1)^3 (X^2+1) over F3
        let a = &p(2, &[1, 1, 1]).pow(2) * &p(2, &[1, 1]).pow(4);
        let fac = poly_factor(&a).unwrap();
        assert_eq!(fac.factors, vec![(p(2, &[1, 1]), 4), (p(2, &[1, 1, 1]), 2)]);
        let b = &p(3, &[1, 1]).pow(3) * &p(3, &[1, 0, 1]);
        let fac = poly_factor(&b.scale(2)).unwrap();
        assert_eq!(fac.unit, 2);
        assert_eq!(fac.expand(Field::new(3).unwrap()), b.scale(2));
        assert_eq!(fac.factors, vec![(p(3, &[1, 1]), 3), (p(3, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(poly_factor(&Poly::zero(Field::binary())).is_err());
    }

    #[test]
    fn irreducibility_named_cases() {
        assert!(is_irreducible(&p(2, &[1, 1, 1])));
        assert!(!is_irreducible(&p(2, &[1, 0, 1])));
        assert!(is_irreducible(&p(2, &[0, 1])));
        assert!(!is_irreducible(&p(2, &[1])));
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree n over F_q
        fn count(q: u64, n: u64) -> u64 {
            let mu = |m: u64| -> i64 {
                let mut m = m;
                let mut r = 1i64;
                let mut p = 2;
                while p * p <= m {
                    if m.is_multiple_of(p) {
                        m /= p;
                        if m.is_multiple_of(p) {
                            return 0;
                        }
                        r = -r;
                    }
                    p += 1;
                }
                if m > 1 {
                    r = -r;
                }
                r
            };
            let s: i64 = (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| mu(n / d) * (q.pow(d as u32) as i64)).sum();
            (s / n as i64) as u64
        }
        for (q, maxn) in [(2u32, 10usize), (3, 6)] {
            let field = Field::new(q).unwrap();
            for n in 1..=maxn {
                let total = (q as usize).pow(n as u32);
                let mut found = 0u64;
                for idx in 0..total {
                    let mut coeffs = Vec::with_capacity(n + 1);
                    let mut v = idx;
                    for _ in 0..n {
                        coeffs.push((v % q as usize) as u32);
                        v /= q as usize;
                    }
                    coeffs.push(1);
                    let f = Poly::new(field, coeffs);
                    let irr = is_irreducible(&f);
                    let fac = poly_factor(&f).unwrap();
                    assert_eq!(irr, fac.is_irreducible(), "{f}");
                    found += irr as u64;
                }
                assert_eq!(found, count(q as u64, n as u64), "q={q} n={n}");
            }
        }
    }
}
