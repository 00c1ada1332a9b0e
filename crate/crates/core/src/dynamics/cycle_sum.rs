use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Formal sum of cycle terms: `count` cycles of each `length`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycleSum {
    terms: BTreeMap<u64, u128>,
}

impl CycleSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// The sum with a single term.
    pub fn term(count: u128, length: u64) -> Self {
        let mut s = Self::new();
        s.add(count, length);
        s
    }

    /// Adds `count` cycles of `length`, merging with an existing term.
    pub fn add(&mut self, count: u128, length: u64) {
        assert!(length > 0, "cycle length must be positive");
        if count > 0 {
            *self.terms.entry(length).or_insert(0) += count;
        }
    }

    /// `(count, length)` pairs sorted by length.
    pub fn terms(&self) -> Vec<(u128, u64)> {
        self.terms.iter().map(|(&t, &n)| (n, t)).collect()
    }

    pub fn count_of(&self, length: u64) -> u128 {
        self.terms.get(&length).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of states covered, `sum n_i t_i`.
    pub fn weight(&self) -> u128 {
        self.terms.iter().map(|(&t, &n)| n * t as u128).sum()
    }

    pub fn cycle_count(&self) -> u128 {
        self.terms.values().sum()
    }

    pub fn max_length(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    /// `lcm` of all lengths, if it fits.
    pub fn period(&self) -> Option<u64> {
        self.terms.keys().try_fold(1u64, |acc, &t| crate::algebra::lcm_u64(acc, t))
    }

    /// Distributive product with `(n1,t1)(n2,t2) = (n1 n2 gcd(t1,t2), lcm(t1,t2))`.
    pub fn product(&self, other: &CycleSum) -> CycleSum {
        let mut out = CycleSum::new();
        for (&t1, &n1) in &self.terms {
            for (&t2, &n2) in &other.terms {
                let g = crate::algebra::gcd_u64(t1, t2);
                let l = (t1 / g).checked_mul(t2).expect("cycle length exceeds u64");
                out.add(n1 * n2 * g as u128, l);
            }
        }
        out
    }
}

/// `n1×t1 + n2×t2 + ...`
impl fmt::Display for CycleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(t, n)| format!("{n}×{t}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Serialized as `[[count, length], ...]`.
impl Serialize for CycleSum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (t, n) in &self.terms {
            seq.serialize_element(&(n, t))?;
        }
        seq.end()
    }
}
