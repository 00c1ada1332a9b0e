use super::factor::{is_irreducible, poly_factor};
use super::intfactor::{int_factor, lcm_u64};
use super::poly::Poly;
use crate::error::{Error, Result};

/// `q^k` if it fits in a `u64`.
pub fn checked_field_size(q: u32, k: usize) -> Option<u64> {
    (q as u64).checked_pow(u32::try_from(k).ok()?)
}

/// True iff `X^exp = 1 (mod f)`.
fn x_pow_is_one(f: &Poly, exp: u64) -> bool {
    Poly::x(f.field()).pow_mod(exp as u128, f).is_one()
}

/// Order of `X` modulo an irreducible `f` with `f(0) != 0`: start from
/// `q^e - 1` and strip every prime factor that keeps `X^t = 1`.
pub(crate) fn irreducible_order(f: &Poly) -> Result<u64> {
    let e = f.degree().ok_or(Error::ZeroPolynomial)?;
    let bound = checked_field_size(f.q(), e).ok_or(Error::Overflow("q^deg"))? - 1;
    let mut t = bound;
    for (p, k) in int_factor(bound).factors {
        for _ in 0..k {
            if t % p == 0 && x_pow_is_one(f, t / p) {
                t /= p;
            } else {
                break;
            }
        }
    }
    Ok(t)
}

/// Smallest `r` with `p^r >= h`, by integer iteration.
pub fn ceil_log(p: u64, h: u64) -> u32 {
    let mut r = 0;
    let mut acc = 1u64;
    while acc < h {
        acc = acc.saturating_mul(p);
        r += 1;
    }
    r
}

/// `ord(f^h) = ord(f) * p^ceil(log_p h)` for irreducible `f` with nonzero
/// constant term, `p` the characteristic.
pub fn irreducible_power_order(f: &Poly, h: u32) -> Result<u64> {
    if h == 0 {
        return Err(Error::Internal("multiplicity must be positive".into()));
    }
    if f.constant_term() == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    let base = irreducible_order(&f.monic())?;
    let p = f.field().characteristic() as u64;
    let lift = p.checked_pow(ceil_log(p, h as u64)).ok_or(Error::Overflow("p^ceil(log_p h)"))?;
    base.checked_mul(lift).ok_or(Error::Overflow("power order"))
}

/// Least `t >= 1` with `X^t = 1 (mod f)`.
///
/// Irreducible inputs start from `q^e - 1`; reducible ones combine the
/// orders of their prime-power factors with `lcm`.
pub fn poly_order(f: &Poly) -> Result<u64> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::DegreeMismatch { expected: 1, got: 0 }),
        _ => {}
    }
    if f.constant_term() == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    let fac = poly_factor(f)?;
    let mut t = 1u64;
    for (g, m) in &fac.factors {
        let o = irreducible_power_order(g, *m)?;
        t = lcm_u64(t, o).ok_or(Error::Overflow("lcm of orders"))?;
    }
    Ok(t)
}

/// True iff `f` is irreducible of degree `k` and `ord(f) = q^k - 1`.
///
/// Decided by the order of `X` alone: when `f` is reducible the ring
/// `F_q[X]/(f)` has fewer than `q^k - 1` units, so `X` cannot reach that
/// order. Panics if `q^k` does not fit in 64 bits.
pub fn is_primitive(f: &Poly) -> bool {
    let Some(k) = f.degree() else { return false };
    if k == 0 || f.constant_term() == 0 {
        return false;
    }
    let f = f.monic();
    let n = checked_field_size(f.q(), k).expect("q^k must fit in 64 bits") - 1;
    if !x_pow_is_one(&f, n) {
        return false;
    }
    int_factor(n).primes().all(|p| !x_pow_is_one(&f, n / p))
}

/// Definition-level primitivity check (irreducibility plus full order).
pub fn is_primitive_by_definition(f: &Poly) -> bool {
    let Some(k) = f.degree() else { return false };
    if k == 0 || f.constant_term() == 0 || !is_irreducible(f) {
        return false;
    }
    match (poly_order(f), checked_field_size(f.q(), k)) {
        (Ok(t), Some(size)) => t == size - 1,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn p(q: u32, c: &[u32]) -> Poly {
        Poly::new(Field::new(q).unwrap(), c.iter().copied())
    }

    /// Successive powers of X until they return to 1.
    fn brute_order(f: &Poly) -> u64 {
        let x = Poly::x(f.field());
        let mut acc = x.rem(f);
        let mut t = 1;
        while !acc.is_one() {
            acc = acc.mul_mod(&x, f);
            t += 1;
        }
        t
    }

    #[test]
    fn named_orders() {
        assert_eq!(poly_order(&p(2, &[1, 1, 1])).unwrap(), 3);
        assert_eq!(poly_order(&p(2, &[1, 1])).unwrap(), 1);
        assert_eq!(poly_order(&p(2, &[1, 1, 1, 1, 1])).unwrap(), 5);
        assert!(matches!(poly_order(&p(2, &[0, 1, 1])), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn named_primitivity() {
        assert!(is_primitive(&p(2, &[1, 1, 0, 0, 1])));
        assert!(!is_primitive(&p(2, &[1, 1, 1, 1, 1])));
        assert!(!is_primitive(&p(2, &[1, 0, 1])));
        // X^2 + X + 2 over F3 has order 8
        assert!(is_primitive(&p(3, &[2, 1, 1])));
    }

    #[test]
    fn power_orders() {
        assert_eq!(irreducible_power_order(&p(2, &[1, 1, 1]), 1).unwrap(), 3);
        assert_eq!(irreducible_power_order(&p(2, &[1, 1]), 2).unwrap(), 2);
        assert_eq!(irreducible_power_order(&p(2, &[1, 1]), 3).unwrap(), 4);
        assert_eq!(irreducible_power_order(&p(2, &[1, 1]), 5).unwrap(), 8);
        assert_eq!(ceil_log(3, 1), 0);
        assert_eq!(ceil_log(3, 3), 1);
        assert_eq!(ceil_log(3, 4), 2);
    }

    #[test]
    fn exhaustive_order_and_primitivity_small_fields() {
        for (q, maxdeg) in [(2u32, 8usize), (3, 5)] {
            let field = Field::new(q).unwrap();
            for k in 1..=maxdeg {
                for idx in 0..(q as usize).pow(k as u32) {
                    let mut coeffs = Vec::new();
                    let mut v = idx;
                    for _ in 0..k {
                        coeffs.push((v % q as usize) as u32);
                        v /= q as usize;
                    }
                    coeffs.push(1);
                    if coeffs[0] == 0 {
                        continue;
                    }
                    let f = Poly::new(field, coeffs);
                    assert_eq!(poly_order(&f).unwrap(), brute_order(&f), "{f}");
                    assert_eq!(is_primitive(&f), is_primitive_by_definition(&f), "{f}");
                }
            }
        }
    }
}
