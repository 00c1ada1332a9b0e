//! Bit-packed arithmetic in `F_2[X]` for polynomials of degree below 64.
//! Bit `i` holds the coefficient of `X^i`.

use super::field::Field;
use super::intfactor::int_factor;
use super::poly::Poly;

#[inline]
pub fn degree(a: u64) -> Option<u32> {
    if a == 0 {
        None
    } else {
        Some(63 - a.leading_zeros())
    }
}

pub fn from_poly(p: &Poly) -> u64 {
    debug_assert_eq!(p.q(), 2);
    debug_assert!(p.coeffs().len() <= 64);
    p.coeffs().iter().enumerate().fold(0, |acc, (i, &c)| acc | ((c as u64) << i))
}

pub fn to_poly(a: u64) -> Poly {
    Poly::new(Field::binary(), (0..64).map(|i| ((a >> i) & 1) as u32))
}

/// `a mod m`, `m != 0`.
pub fn rem(mut a: u64, m: u64) -> u64 {
    let dm = degree(m).expect("nonzero modulus");
    while let Some(da) = degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// `a * b mod m` for `a, b` already reduced and `deg m <= 63`.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    let k = degree(m).expect("nonzero modulus");
    let top = 1u64 << k;
    let mut acc = 0u64;
    let mut bit = 64 - b.leading_zeros();
    while bit > 0 {
        bit -= 1;
        acc <<= 1;
        if acc & top != 0 {
            acc ^= m;
        }
        if (b >> bit) & 1 == 1 {
            acc ^= a;
        }
    }
    acc
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut b = rem(base, m);
    let mut acc = rem(1, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        exp >>= 1;
        if exp > 0 {
            b = mul_mod(b, b, m);
        }
    }
    acc
}

/// Primitivity test specialised to a fixed degree, with the prime divisors
/// of `2^k - 1` computed once.
#[derive(Debug, Clone)]
pub struct PrimitivityTester {
    degree: u32,
    order: u64,
    cofactors: Vec<u64>,
}

impl PrimitivityTester {
    pub fn new(degree: u32) -> Self {
        assert!((1..64).contains(&degree));
        let order = (1u64 << degree) - 1;
        let cofactors = int_factor(order).primes().map(|p| order / p).collect();
        PrimitivityTester { degree, order, cofactors }
    }

    pub fn is_primitive(&self, m: u64) -> bool {
        if degree(m) != Some(self.degree) || m & 1 == 0 {
            return false;
        }
        // X^(2^k) = X  <=>  X^(2^k - 1) = 1 once X is a unit
        let mut x = 2u64;
        if self.degree == 1 {
            x = rem(x, m);
        }
        let mut t = x;
        for _ in 0..self.degree {
            t = mul_mod(t, t, m);
        }
        if t != x {
            return false;
        }
        debug_assert_eq!(pow_mod(2, self.order, m), 1);
        self.cofactors.iter().all(|&c| pow_mod(2, c, m) != 1)
    }
}
