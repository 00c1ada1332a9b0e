//! The dynamical system `H(x || y) = F(x || y) || G(x || y)` of an
//! orthogonal pair, with brute-force cycle analysis.

mod cycle_sum;

pub use cycle_sum::CycleSum;

use serde::Serialize;

use crate::ca::{are_orthogonal, decode_msb, LocalRule};
use crate::error::{Error, Result};

/// Largest phase space swept by [`OcaSystem::cycle_decomposition`].
pub const MAX_SWEEP_STATES: u64 = 1 << 30;

/// A state `x || y` of `2n` symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SystemState(pub Vec<u32>);

impl SystemState {
    /// Parses a digit string such as `"1000"`.
    pub fn parse(text: &str, q: u32) -> Result<Self> {
        text.trim()
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(v) if v < q => Ok(v),
                _ => Err(Error::Parse(format!("bad state digit {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SystemState)
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for SystemState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// An orthogonal pair of bipermutive rules of diameter `d = n + 1`.
#[derive(Debug, Clone)]
pub struct OcaSystem {
    f: LocalRule,
    g: LocalRule,
}

impl OcaSystem {
    /// Validates that the rules are compatible, bipermutive and orthogonal.
    pub fn new(f: LocalRule, g: LocalRule) -> Result<Self> {
        if !are_orthogonal(&f, &g)? {
            return Err(Error::NotOrthogonal);
        }
        Ok(OcaSystem { f, g })
    }

    pub fn rules(&self) -> (&LocalRule, &LocalRule) {
        (&self.f, &self.g)
    }

    pub fn q(&self) -> u32 {
        self.f.q()
    }

    /// Half-state length `n = d - 1`.
    pub fn n(&self) -> usize {
        self.f.diameter() - 1
    }

    /// `q^(2n)` if it fits.
    pub fn state_count(&self) -> Option<u64> {
        (self.q() as u64).checked_pow(2 * self.n() as u32)
    }

    pub fn step(&self, s: &SystemState) -> Result<SystemState> {
        let n = self.n();
        if s.len() != 2 * n {
            return Err(Error::DimensionMismatch { expected: 2 * n, got: s.len() });
        }
        let mut out = self.f.nbca_apply(&s.0)?;
        out.extend(self.g.nbca_apply(&s.0)?);
        Ok(SystemState(out))
    }

    /// `H` on radix-`q` state indices (first symbol most significant).
    fn step_index(&self, k: u64, buf: &mut [u32]) -> u64 {
        let q = self.q() as u64;
        decode_msb(k as usize, self.q(), buf);
        let d = self.f.diameter();
        let mut out = 0u64;
        for rule in [&self.f, &self.g] {
            for w in buf.windows(d) {
                out = out * q + rule.eval(w) as u64;
            }
        }
        out
    }

    /// Exact cycle sum by sweeping the phase space with a visited bitset.
    pub fn cycle_decomposition(&self) -> Result<CycleSum> {
        let total = self
            .state_count()
            .filter(|&s| s <= MAX_SWEEP_STATES)
            .ok_or(Error::UnsupportedDiameter { d: self.f.diameter(), reason: "phase space too large to sweep" })?;
        let mut visited = vec![0u64; total.div_ceil(64) as usize];
        let mut buf = vec![0u32; 2 * self.n()];
        let mut sum = CycleSum::new();
        for start in 0..total {
            if visited[(start / 64) as usize] >> (start % 64) & 1 == 1 {
                continue;
            }
            let mut len = 0u64;
            let mut k = start;
            loop {
                visited[(k / 64) as usize] |= 1 << (k % 64);
                len += 1;
                k = self.step_index(k, &mut buf);
                if k == start {
                    break;
                }
                if visited[(k / 64) as usize] >> (k % 64) & 1 == 1 {
                    return Err(Error::Internal("update map is not a permutation".into()));
                }
            }
            sum.add(1, len);
        }
        Ok(sum)
    }

    pub fn max_cycle_length(&self) -> Result<u64> {
        Ok(self.cycle_decomposition()?.max_length().unwrap_or(0))
    }

    /// Least `p >= 1` with `H^p(s) = s`.
    pub fn period_of_state(&self, s: &SystemState) -> Result<u64> {
        let mut cur = self.step(s)?;
        let mut p = 1u64;
        while cur != *s {
            cur = self.step(&cur)?;
            p += 1;
        }
        Ok(p)
    }

    /// The orbit prefix `H(s), H^2(s), ..., H^steps(s)`.
    pub fn keystream(&self, seed: &SystemState, steps: usize) -> Result<Vec<SystemState>> {
        let mut out = Vec::with_capacity(steps);
        let mut cur = seed.clone();
        for _ in 0..steps {
            cur = self.step(&cur)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// Minimum number of differing block coordinates among the tuples
    /// `(x, y, F(x||y), G(x||y))` over all pairs of distinct states.
    pub fn multipermutation_distance(&self) -> Result<usize> {
        let total = self
            .state_count()
            .filter(|&s| s <= 1 << 12)
            .ok_or(Error::UnsupportedDiameter { d: self.f.diameter(), reason: "pairwise scan too large" })?;
        let n = self.n();
        let mut tuples = Vec::with_capacity(total as usize);
        let mut buf = vec![0u32; 2 * n];
        let size = (self.q() as u64).pow(n as u32);
        for k in 0..total {
            let image = self.step_index(k, &mut buf);
            tuples.push([k / size, k % size, image / size, image % size]);
        }
        let mut best = 4;
        for (i, a) in tuples.iter().enumerate() {
            for b in &tuples[i + 1..] {
                best = best.min(a.iter().zip(b).filter(|(x, y)| x != y).count());
            }
        }
        Ok(best)
    }
}

pub fn step(f: &LocalRule, g: &LocalRule, s: &SystemState) -> Result<SystemState> {
    f.require_compatible(g)?;
    if s.len() != 2 * (f.diameter() - 1) {
        return Err(Error::DimensionMismatch { expected: 2 * (f.diameter() - 1), got: s.len() });
    }
    let mut out = f.nbca_apply(&s.0)?;
    out.extend(g.nbca_apply(&s.0)?);
    Ok(SystemState(out))
}

pub fn cycle_decomposition(f: &LocalRule, g: &LocalRule) -> Result<CycleSum> {
    OcaSystem::new(f.clone(), g.clone())?.cycle_decomposition()
}

pub fn max_cycle_length(f: &LocalRule, g: &LocalRule) -> Result<u64> {
    OcaSystem::new(f.clone(), g.clone())?.max_cycle_length()
}

pub fn period_of_state(f: &LocalRule, g: &LocalRule, s: &SystemState) -> Result<u64> {
    OcaSystem::new(f.clone(), g.clone())?.period_of_state(s)
}

pub fn keystream(f: &LocalRule, g: &LocalRule, seed: &SystemState, steps: usize) -> Result<Vec<SystemState>> {
    OcaSystem::new(f.clone(), g.clone())?.keystream(seed, steps)
}
