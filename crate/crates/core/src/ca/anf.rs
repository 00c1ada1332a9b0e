use std::fmt;

use super::rule::LocalRule;
use crate::error::{Error, Result};

/// Algebraic normal form of a Boolean rule.
///
/// `coeffs[mask]` is the coefficient of the monomial `prod x_i` over the
/// variables in `mask`, where bit `d - i` of the mask stands for `x_i`
/// (the same digit order as the truth-table index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anf {
    d: usize,
    coeffs: Vec<u8>,
}

fn moebius(values: &mut [u8]) {
    let mut step = 1;
    while step < values.len() {
        for block in values.chunks_mut(2 * step) {
            let (lo, hi) = block.split_at_mut(step);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
        step *= 2;
    }
}

impl Anf {
    pub fn from_rule(rule: &LocalRule) -> Result<Self> {
        if rule.q() != 2 {
            return Err(Error::BinaryOnly(rule.q()));
        }
        let mut coeffs: Vec<u8> = rule.table().iter().map(|&c| c as u8).collect();
        moebius(&mut coeffs);
        Ok(Anf { d: rule.diameter(), coeffs })
    }

    /// Rebuilds the truth table; the transform is an involution.
    pub fn to_rule(&self) -> LocalRule {
        let mut table = self.coeffs.clone();
        moebius(&mut table);
        LocalRule::new(crate::algebra::Field::binary(), self.d, table.into_iter().map(u32::from).collect())
            .expect("ANF of a valid rule")
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Variable indices (1-based) of each monomial with coefficient one.
    pub fn monomials(&self) -> Vec<Vec<usize>> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(mask, _)| (1..=self.d).filter(|i| mask >> (self.d - i) & 1 == 1).collect())
            .collect()
    }

    /// Size of the largest monomial; zero for constant rules.
    pub fn degree(&self) -> u32 {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c == 1).map(|(mask, _)| mask.count_ones()).max().unwrap_or(0)
    }

    pub fn is_affine(&self) -> bool {
        self.degree() <= 1
    }

    pub fn is_linear(&self) -> bool {
        self.is_affine() && self.coeffs[0] == 0
    }
}

impl fmt::Display for Anf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut monos = self.monomials();
        if monos.is_empty() {
            return write!(f, "0");
        }
        monos.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let terms: Vec<String> = monos
            .iter()
            .map(|m| if m.is_empty() { "1".to_string() } else { m.iter().map(|i| format!("x{i}")).collect() })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Algebraic degree of a binary rule.
pub fn algebraic_degree(rule: &LocalRule) -> Result<u32> {
    Ok(Anf::from_rule(rule)?.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn anf(code: u32) -> Anf {
        Anf::from_rule(&LocalRule::from_code(&BigUint::from(code), 3).unwrap()).unwrap()
    }

    #[test]
    fn named_forms() {
        assert_eq!(anf(90).to_string(), "x1 + x3");
        assert_eq!(anf(90).degree(), 1);
        assert_eq!(anf(30).to_string(), "x1 + x2 + x3 + x2x3");
        assert_eq!(anf(30).degree(), 2);
        assert_eq!(anf(0).to_string(), "0");
        assert_eq!(anf(0).degree(), 0);
        assert!(anf(165).is_affine() && !anf(165).is_linear());
        assert!(anf(150).is_linear());
    }

    #[test]
    fn rejects_ternary() {
        let r = LocalRule::new(crate::algebra::Field::new(3).unwrap(), 2, vec![0; 9]).unwrap();
        assert!(matches!(Anf::from_rule(&r), Err(Error::BinaryOnly(3))));
    }
}
