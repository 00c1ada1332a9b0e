use super::rule::LocalRule;
use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};

/// Linear rule `f(x) = a_1 x_1 + ... + a_d x_d` with `a_1, a_d != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearRule {
    field: Field,
    coeffs: Vec<u32>,
}

impl LinearRule {
    pub fn new(field: Field, coeffs: Vec<u32>) -> Result<Self> {
        let coeffs: Vec<u32> = coeffs.into_iter().map(|c| field.reduce(c as u64)).collect();
        if coeffs.len() < 2 {
            return Err(Error::UnsupportedDiameter { d: coeffs.len(), reason: "diameter must be at least 2" });
        }
        if coeffs[0] == 0 || coeffs[coeffs.len() - 1] == 0 {
            return Err(Error::NotBipermutive);
        }
        Ok(LinearRule { field, coeffs })
    }

    /// Parses `"a1,a2,...,ad"`.
    pub fn parse(field: Field, text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad coefficient {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn diameter(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// `P_f(X) = a_1 + a_2 X + ... + a_d X^(d-1)`.
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().copied())
    }

    pub fn from_poly(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.constant_term() == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        Self::new(p.field(), p.coeffs().to_vec())
    }

    pub fn to_local_rule(&self) -> Result<LocalRule> {
        let f = self.field;
        LocalRule::from_fn(f, self.diameter(), |x| {
            x.iter().zip(&self.coeffs).fold(0, |acc, (&xi, &a)| f.add(acc, f.mul(a, xi)))
        })
    }

    /// Recovers the coefficients if the table is that of a bipermutive
    /// linear rule.
    pub fn from_local_rule(rule: &LocalRule) -> Option<Self> {
        let d = rule.diameter();
        let q = rule.q() as usize;
        let coeffs: Vec<u32> = (0..d).map(|i| rule.table()[q.pow((d - 1 - i) as u32)]).collect();
        let lin = Self::new(rule.field(), coeffs).ok()?;
        (lin.to_local_rule().ok()? == *rule).then_some(lin)
    }
}

pub fn linear_rule_to_poly(rule: &LinearRule) -> Poly {
    rule.to_poly()
}

pub fn poly_to_linear_rule(p: &Poly) -> Result<LinearRule> {
    LinearRule::from_poly(p)
}
