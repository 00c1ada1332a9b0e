//! Integer factorization for the exponents that show up in order computations
//! (`q^k - 1` with `q^k < 2^64`).

use serde::{Deserialize, Serialize};

use super::field::{is_prime_u64, mul_mod_u64};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization as `(prime, exponent)` pairs sorted by prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct IntFactorization {
    pub factors: Vec<(u64, u32)>,
}

impl IntFactorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplies the factorization back out (saturating is never needed for
    /// values produced by [`int_factor`]).
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Full prime factorization of `m` (empty for `m <= 1`).
pub fn int_factor(m: u64) -> IntFactorization {
    let mut primes = Vec::new();
    let mut n = m;
    if n > 1 {
        while n.is_multiple_of(2) {
            primes.push(2);
            n /= 2;
        }
        let mut d = 3;
        while d <= TRIAL_LIMIT && d * d <= n {
            while n.is_multiple_of(d) {
                primes.push(d);
                n /= d;
            }
            d += 2;
        }
        if n > 1 {
            split_large(n, &mut primes);
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((last, e)) if *last == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    IntFactorization { factors }
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho; `n` must be odd and composite.
fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let mut g = 1;
        let mut r = 1u64;
        let mut q = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod_u64(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd(a, b)
}
