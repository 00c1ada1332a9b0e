//! Orthogonal cellular automata (OCA): construction of Latin squares from
//! bipermutive local rules, cycle analysis of the dynamical system induced by
//! an OCA pair, and enumeration of maximal-period pairs.
//!
//! Module map:
//! - [`algebra`]: prime fields, polynomials, factorization, orders.
//! - [`linalg`]: matrices over `F_q`, Sylvester matrices, normal forms.
//! - [`ca`]: local rules, Latin squares, orthogonality.
//! - [`dynamics`]: the pair dynamical system and brute-force cycle sums.
//! - [`lms`]: cycle sums of linear pairs from elementary divisors.
//! - [`search`]: exhaustive and maximal-linear enumeration drivers.

pub mod algebra;
pub mod ca;
pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod lms;
pub mod search;

pub use algebra::{Factorization, Field, IntFactorization, Poly};
pub use ca::{LatinSquare, LinearRule, LocalRule};
pub use dynamics::{CycleSum, OcaSystem, SystemState};
pub use error::{Error, Result};
pub use linalg::{Matrix, NormalFormReport};
