use std::fmt;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::Field;
use crate::error::{Error, Result};

/// Largest supported number of table cells.
pub const MAX_TABLE_LEN: usize = 1 << 24;

/// A local rule `f: F_q^d -> F_q` stored as its full lookup table.
///
/// Entry `k` of the table is `f(x)` for the neighborhood `x` whose radix-`q`
/// value, read with `x_1` as the most significant digit, is `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalRule {
    field: Field,
    d: usize,
    table: Vec<u32>,
}

/// Number of table cells `q^d`, if supported.
pub(crate) fn table_len(q: u32, d: usize) -> Result<usize> {
    (q as usize)
        .checked_pow(d as u32)
        .filter(|&n| n <= MAX_TABLE_LEN)
        .ok_or(Error::UnsupportedDiameter { d, reason: "truth table too large" })
}

impl LocalRule {
    pub fn new(field: Field, d: usize, table: Vec<u32>) -> Result<Self> {
        if d < 2 {
            return Err(Error::UnsupportedDiameter { d, reason: "diameter must be at least 2" });
        }
        let len = table_len(field.q(), d)?;
        if table.len() != len {
            return Err(Error::InvalidRule(format!("table has {} entries, expected {len}", table.len())));
        }
        if let Some(bad) = table.iter().find(|&&c| c >= field.q()) {
            return Err(Error::InvalidRule(format!("symbol {bad} outside F_{}", field.q())));
        }
        Ok(LocalRule { field, d, table })
    }

    /// Tabulates `f` over all neighborhoods.
    pub fn from_fn(field: Field, d: usize, mut f: impl FnMut(&[u32]) -> u32) -> Result<Self> {
        let len = table_len(field.q(), d)?;
        let mut x = vec![0u32; d];
        let table = (0..len)
            .map(|k| {
                decode_msb(k, field.q(), &mut x);
                field.reduce(f(&x) as u64)
            })
            .collect();
        Self::new(field, d, table)
    }

    /// Binary rule from a `u64` truth table (bit `k` is entry `k`), `d <= 6`.
    pub fn from_bits(d: usize, bits: u64) -> Result<Self> {
        if !(2..=6).contains(&d) {
            return Err(Error::UnsupportedDiameter { d, reason: "bit-packed tables need 2 <= d <= 6" });
        }
        Self::new(Field::binary(), d, (0..1usize << d).map(|k| ((bits >> k) & 1) as u32).collect())
    }

    /// Parses a digit string listing the table from the highest neighborhood
    /// down to `0...0`, as in the usual rule-code presentation.
    pub fn parse_table(field: Field, text: &str) -> Result<Self> {
        let digits: Vec<u32> = text
            .trim()
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad table digit {c:?}"))))
            .collect::<Result<_>>()?;
        let q = field.q() as usize;
        let mut d = 0;
        let mut len = 1usize;
        while len < digits.len() {
            len = len.saturating_mul(q);
            d += 1;
        }
        if len != digits.len() || d < 2 {
            return Err(Error::Parse(format!("table length {} is not a power q^d with d >= 2", digits.len())));
        }
        Self::new(field, d, digits.into_iter().rev().collect())
    }

    /// Inverse of [`LocalRule::parse_table`].
    pub fn table_string(&self) -> String {
        self.table.iter().rev().map(|c| char::from_digit(*c, 36).unwrap_or('?')).collect()
    }

    /// Binary rule from its Wolfram code.
    pub fn from_code(code: &BigUint, d: usize) -> Result<Self> {
        let len = table_len(2, d)?;
        if code.bits() > len as u64 {
            return Err(Error::InvalidRule(format!("code {code} exceeds 2^{len}")));
        }
        Self::new(Field::binary(), d, (0..len).map(|k| code.bit(k as u64) as u32).collect())
    }

    /// Wolfram code `sum f(x) 2^val(x)` of a binary rule.
    pub fn wolfram_code(&self) -> Result<BigUint> {
        if self.q() != 2 {
            return Err(Error::BinaryOnly(self.q()));
        }
        let mut code = BigUint::default();
        for (k, &c) in self.table.iter().enumerate() {
            if c == 1 {
                code.set_bit(k as u64, true);
            }
        }
        Ok(code)
    }

    /// Random bipermutive rule: for each middle block, the `(x_1, x_d)`
    /// slice is an isotope of the cyclic Latin square.
    pub fn random_bipermutive<R: Rng + ?Sized>(field: Field, d: usize, rng: &mut R) -> Result<Self> {
        let q = field.q() as usize;
        let len = table_len(field.q(), d)?;
        let middle = len / (q * q);
        let mut table = vec![0u32; len];
        let mut perms: [Vec<u32>; 3] = std::array::from_fn(|_| (0..field.q()).collect());
        for m in 0..middle {
            for p in perms.iter_mut() {
                p.shuffle(rng);
            }
            for a in 0..q {
                for b in 0..q {
                    let k = (a * middle + m) * q + b;
                    table[k] = perms[2][(perms[0][a] as usize + perms[1][b] as usize) % q];
                }
            }
        }
        Self::new(field, d, table)
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
    pub fn diameter(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Binary table packed into a `u64`, `d <= 6`.
    pub fn bits(&self) -> Option<u64> {
        (self.q() == 2 && self.d <= 6)
            .then(|| self.table.iter().enumerate().fold(0u64, |acc, (k, &c)| acc | ((c as u64) << k)))
    }

    #[inline]
    pub fn eval(&self, x: &[u32]) -> u32 {
        debug_assert_eq!(x.len(), self.d);
        let q = self.q() as usize;
        self.table[x.iter().fold(0usize, |acc, &c| acc * q + c as usize)]
    }

    /// True iff `f` permutes `F_q` in `x_1` and in `x_d` for every fixing of
    /// the remaining cells.
    pub fn is_bipermutive(&self) -> bool {
        let q = self.q() as usize;
        let len = self.table.len();
        let high = len / q;
        let mut seen = vec![false; q];
        // x_d varies fastest; x_1 has stride q^(d-1)
        (0..high).all(|base| is_permutation(&mut seen, (0..q).map(|b| self.table[base * q + b])))
            && (0..high).all(|rest| is_permutation(&mut seen, (0..q).map(|a| self.table[a * high + rest])))
    }

    /// Sliding-window application on a configuration of `m >= d` cells.
    pub fn nbca_apply(&self, config: &[u32]) -> Result<Vec<u32>> {
        if config.len() < self.d {
            return Err(Error::DimensionMismatch { expected: self.d, got: config.len() });
        }
        if config.iter().any(|&c| c >= self.q()) {
            return Err(Error::InvalidRule("configuration symbol outside the alphabet".into()));
        }
        Ok(config.windows(self.d).map(|w| self.eval(w)).collect())
    }

    /// Rule with every output negated (`q = 2`) or mapped `c -> q-1-c`.
    pub fn complement(&self) -> LocalRule {
        let top = self.q() - 1;
        LocalRule { field: self.field, d: self.d, table: self.table.iter().map(|c| top - c).collect() }
    }

    /// Rule evaluated on the reversed neighborhood.
    pub fn reflect(&self) -> LocalRule {
        let q = self.q();
        let mut x = vec![0u32; self.d];
        let table = (0..self.table.len())
            .map(|k| {
                decode_msb(k, q, &mut x);
                x.reverse();
                self.eval(&x)
            })
            .collect();
        LocalRule { field: self.field, d: self.d, table }
    }

    pub(crate) fn require_compatible(&self, other: &LocalRule) -> Result<()> {
        if self.q() != other.q() {
            return Err(Error::FieldMismatch { left: self.q(), right: other.q() });
        }
        if self.d != other.d {
            return Err(Error::DimensionMismatch { expected: self.d, got: other.d });
        }
        Ok(())
    }
}

impl fmt::Display for LocalRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.wolfram_code() {
            Ok(code) => write!(f, "rule {code} (d={})", self.d),
            Err(_) => write!(f, "table {} (q={}, d={})", self.table_string(), self.q(), self.d),
        }
    }
}

/// True iff `cells` lists each of `0..seen.len()` once.
pub(crate) fn is_permutation(seen: &mut [bool], mut cells: impl Iterator<Item = u32>) -> bool {
    seen.iter_mut().for_each(|s| *s = false);
    cells.all(|c| (c as usize) < seen.len() && !std::mem::replace(&mut seen[c as usize], true))
}

/// Writes the radix-`q` digits of `k` into `out`, most significant first.
pub(crate) fn decode_msb(mut k: usize, q: u32, out: &mut [u32]) {
    for slot in out.iter_mut().rev() {
        *slot = (k % q as usize) as u32;
        k /= q as usize;
    }
}
