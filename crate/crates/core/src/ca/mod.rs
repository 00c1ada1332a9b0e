//! Local rules, Latin squares built from them, and orthogonality.

mod anf;
mod latin;
mod linear;
mod rule;

pub use anf::{algebraic_degree, Anf};
pub use latin::{are_orthogonal, is_latin, latin_square, pairwise_balanced, phi, psi, LatinSquare};
pub use linear::{linear_rule_to_poly, poly_to_linear_rule, LinearRule};
pub use rule::{LocalRule, MAX_TABLE_LEN};

pub(crate) use rule::decode_msb;

use crate::error::Result;
use num_bigint::BigUint;

/// Wolfram code of a binary rule.
pub fn wolfram_code(rule: &LocalRule) -> Result<BigUint> {
    rule.wolfram_code()
}

/// Binary rule of diameter `d` from its Wolfram code.
pub fn rule_from_code(code: &BigUint, d: usize) -> Result<LocalRule> {
    LocalRule::from_code(code, d)
}

pub fn is_bipermutive(rule: &LocalRule) -> bool {
    rule.is_bipermutive()
}

pub fn nbca_apply(rule: &LocalRule, config: &[u32]) -> Result<Vec<u32>> {
    rule.nbca_apply(config)
}
