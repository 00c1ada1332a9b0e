//! Prime-field and univariate polynomial arithmetic: gcd, factorization,
//! multiplicative order and primitivity.

mod factor;
mod field;
pub mod gf2;
mod intfactor;
mod order;
mod poly;

pub use factor::{is_irreducible, poly_factor, Factorization};
pub use field::{is_prime_u64, Field};
pub use intfactor::{int_factor, IntFactorization};
pub use order::{
    ceil_log, checked_field_size, irreducible_power_order, is_primitive, is_primitive_by_definition, poly_order,
};
pub use poly::{poly_gcd, poly_xgcd, Poly};

pub(crate) use intfactor::{gcd_u64, lcm_u64};
pub(crate) use poly::gcd_unchecked;
