use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use crate::error::{Error, Result};

/// Univariate polynomial over a prime field.
///
/// `coeffs[i]` is the coefficient of `X^i`; trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, reducing them mod `q`.
    pub fn new(field: Field, coeffs: impl IntoIterator<Item = u32>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| field.reduce(c as u64)).collect();
        Self::from_reduced(field, coeffs)
    }

    pub(crate) fn from_reduced(field: Field, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Poly { field, coeffs: vec![1] }
    }

    pub fn constant(field: Field, c: u32) -> Self {
        Self::new(field, [c])
    }

    /// The indeterminate `X`.
    pub fn x(field: Field) -> Self {
        Poly { field, coeffs: vec![0, 1] }
    }

    /// `c * X^k`.
    pub fn monomial(field: Field, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.field.q()
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Scales by the inverse leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.leading()) {
            Some(inv) if inv != 1 => self.scale(inv),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = self.field;
        Self::from_reduced(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { field: self.field, coeffs }
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, f.reduce(i as u64))).collect();
        Self::from_reduced(f, coeffs)
    }

    pub(crate) fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.q(), right: other.q() });
        }
        Ok(())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        debug_assert_eq!(self.field, divisor.field);
        let f = self.field;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        (Self::from_reduced(f, quot), Self::from_reduced(f, rem))
    }

    pub fn checked_div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.div_rem(divisor))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// `(self * other) mod modulus`.
    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Poly {
        (self * other).rem(modulus)
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u128, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(self.field).rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_mod(&base, modulus);
            }
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one(self.field);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Ascending coefficient list, e.g. `1,0,1` for `X^2+1`.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(u32::to_string).collect();
        parts.join(",")
    }

    /// Parses either an ascending coefficient list (`1,0,1`) or a pretty
    /// form (`X^2+1`, `2x^3 + x + 2`, `2*X`).
    pub fn parse(field: Field, text: &str) -> Result<Poly> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if text.contains(['x', 'X']) {
            parse_pretty(field, text)
        } else {
            let coeffs = text
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    t.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{t}`")))
                        .and_then(|c| check_coeff(field, c))
                })
                .collect::<Result<Vec<u32>>>()?;
            Ok(Poly::from_reduced(field, coeffs))
        }
    }
}

fn check_coeff(field: Field, c: u64) -> Result<u32> {
    if c >= field.q() as u64 {
        return Err(Error::Parse(format!("coefficient {c} is not an element of F_{}", field.q())));
    }
    Ok(c as u32)
}

fn parse_pretty(field: Field, text: &str) -> Result<Poly> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs: Vec<u32> = Vec::new();
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let bytes = cleaned.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > start {
            terms.push((negative, &cleaned[start..i]));
            negative = b == b'-';
            start = i + 1;
        } else if (b == b'+' || b == b'-') && i == start {
            negative = b == b'-';
            start = i + 1;
        }
    }
    if start >= cleaned.len() {
        return Err(Error::Parse(format!("dangling sign in `{text}`")));
    }
    terms.push((negative, &cleaned[start..]));
    for (neg, term) in terms {
        let (coef, power) = match term.find(['x', 'X']) {
            None => (term, 0usize),
            Some(pos) => {
                let coef = term[..pos].trim_end_matches('*');
                let rest = &term[pos + 1..];
                let power = if rest.is_empty() {
                    1
                } else if let Some(e) = rest.strip_prefix('^') {
                    e.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?
                } else {
                    return Err(Error::Parse(format!("unexpected `{rest}` in `{term}`")));
                };
                (if coef.is_empty() { "1" } else { coef }, power)
            }
        };
        let c = coef.parse::<u64>().map_err(|_| Error::Parse(format!("bad coefficient in `{term}`")))?;
        let c = check_coeff(field, c)?;
        let c = if neg { field.neg(c) } else { c };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] = field.add(coeffs[power], c);
    }
    Ok(Poly::from_reduced(field, coeffs))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "X")?,
                (1, c) => write!(f, "{c}X")?,
                (i, 1) => write!(f, "X^{i}")?,
                (i, c) => write!(f, "{c}X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Degree first, then coefficients from the leading term down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .q()
            .cmp(&other.field.q())
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.field, rhs.field);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_reduced(f, (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.field, rhs.field);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_reduced(f, (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.field, rhs.field);
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let q = f.q() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % q;
            }
        }
        Poly::from_reduced(f, acc.into_iter().map(|c| c as u32).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly::from_reduced(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Monic greatest common divisor; `gcd(0, 0)` is rejected.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    a.check_field(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(gcd_unchecked(a, b))
}

pub(crate) fn gcd_unchecked(a: &Poly, b: &Poly) -> Poly {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    while !r1.is_zero() {
        let r = r0.rem(&r1);
        r0 = r1;
        r1 = r;
    }
    r0.monic()
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn poly_xgcd(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
    a.check_field(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = a.field();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
    let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
    while !r1.is_zero() {
        let (quot, r) = r0.div_rem(&r1);
        let s = &s0 - &(&quot * &s1);
        let t = &t0 - &(&quot * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = f.inv(r0.leading()).expect("nonzero gcd");
    Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::binary()
    }

    fn p2(c: &[u32]) -> Poly {
        Poly::new(f2(), c.iter().copied())
    }

    #[test]
    fn gcd_of_rule_90_and_150_polynomials_is_one() {
        let g = poly_gcd(&p2(&[1, 0, 1]), &p2(&[1, 1, 1])).unwrap();
        assert!(g.is_one());
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let f3 = Field::new(3).unwrap();
        let a = Poly::new(f3, [2, 0, 2]);
        let g = poly_gcd(&a, &Poly::zero(f3)).unwrap();
        assert_eq!(g, Poly::new(f3, [1, 0, 1]));
        assert!(poly_gcd(&Poly::zero(f3), &Poly::zero(f3)).is_err());
    }

    #[test]
    fn gcd_shares_linear_factor() {
        // X^3+1 = (X+1)(X^2+X+1), X^3+X^2+X+1 = (X+1)^3
        let g = poly_gcd(&p2(&[1, 0, 0, 1]), &p2(&[1, 1, 1, 1])).unwrap();
        assert_eq!(g, p2(&[1, 1]));
        let (q, r) = p2(&[1, 0, 0, 1]).div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, p2(&[1, 1, 1]));
    }

    #[test]
    fn gcd_rejects_field_mismatch() {
        let a = p2(&[1, 1]);
        let b = Poly::new(Field::new(3).unwrap(), [1, 1]);
        assert!(matches!(poly_gcd(&a, &b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn xgcd_bezout_identity() {
        let f5 = Field::new(5).unwrap();
        let a = Poly::new(f5, [3, 1, 4, 1, 2]);
        let b = Poly::new(f5, [2, 0, 1, 3]);
        let (g, s, t) = poly_xgcd(&a, &b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn pretty_and_list_parsing_agree() {
        let f3 = Field::new(3).unwrap();
        let a = Poly::parse(f3, "2X^3 + x + 2").unwrap();
        let b = Poly::parse(f3, "2,1,0,2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "2X^3+X+2");
        assert_eq!(Poly::parse(f3, &a.to_string()).unwrap(), a);
        assert_eq!(Poly::parse(f2(), "X^2+X+1").unwrap().to_coeff_list(), "1,1,1");
        assert_eq!(Poly::parse(f3, "X - 1").unwrap(), Poly::new(f3, [2, 1]));
        assert!(Poly::parse(f2(), "1,2").is_err());
        assert!(Poly::parse(f2(), "X^").is_err());
        assert!(Poly::parse(f2(), "").is_err());
    }

    #[test]
    fn derivative_in_characteristic_two() {
        // d/dX (X^3+X^2+1) = 3X^2 + 2X = X^2
        assert_eq!(p2(&[1, 0, 1, 1]).derivative(), p2(&[0, 0, 1]));
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let m = p2(&[1, 1, 0, 0, 1]);
        let x = Poly::x(f2());
        let mut acc = Poly::one(f2());
        for e in 0..40u128 {
            assert_eq!(x.pow_mod(e, &m), acc, "e = {e}");
            acc = acc.mul_mod(&x, &m);
        }
    }
}
