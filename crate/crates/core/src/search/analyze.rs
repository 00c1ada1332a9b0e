//! Analysis of externally supplied rule pairs, one pair per line.
//!
//! Each line holds two rule tokens separated by whitespace or a comma. A
//! token of exactly `q^d` digits is a truth table (highest neighborhood
//! first); otherwise it is a decimal Wolfram code (binary alphabet only).
//! Text after `#` is ignored.

use std::io::BufRead;
use std::path::Path;

use num_bigint::BigUint;
use serde::Serialize;

use super::report::Distribution;
use crate::algebra::{poly_gcd, Field};
use crate::ca::{are_orthogonal, LinearRule, LocalRule};
use crate::dynamics::{CycleSum, OcaSystem, MAX_SWEEP_STATES};
use crate::error::{Error, Result};
use crate::lms::system_cycle_sum;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CycleMethod {
    BruteForce,
    Lms,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairAnalysis {
    pub line: usize,
    pub text: String,
    pub orthogonal: Option<bool>,
    pub linear: Option<bool>,
    pub method: Option<CycleMethod>,
    pub cycle_sum: Option<CycleSum>,
    pub max_cycle_length: Option<u64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct AnalysisReport {
    pub pairs: Vec<PairAnalysis>,
    pub distribution: Distribution,
}

impl AnalysisReport {
    pub fn errors(&self) -> usize {
        self.pairs.iter().filter(|p| p.error.is_some()).count()
    }
}

pub fn parse_rule_token(token: &str, field: Field, d: usize) -> Result<LocalRule> {
    let len = (field.q() as usize).checked_pow(d as u32);
    let is_table = Some(token.len()) == len && token.chars().all(|c| c.to_digit(10).is_some_and(|v| v < field.q()));
    if is_table {
        return LocalRule::parse_table(field, token);
    }
    if field.q() != 2 {
        return Err(Error::Parse(format!("{token:?} is not a table of {} digits", len.unwrap_or(0))));
    }
    let code: BigUint = token.parse().map_err(|_| Error::Parse(format!("bad rule token {token:?}")))?;
    LocalRule::from_code(&code, d)
}

fn analyze_rules(f: &LocalRule, g: &LocalRule, entry: &mut PairAnalysis) -> Result<()> {
    if !f.is_bipermutive() || !g.is_bipermutive() {
        return Err(Error::NotBipermutive);
    }
    let linear = LinearRule::from_local_rule(f).zip(LinearRule::from_local_rule(g));
    entry.linear = Some(linear.is_some());
    let brute_ok = (f.q() as u64).checked_pow(2 * (f.diameter() as u32 - 1)).is_some_and(|s| s <= MAX_SWEEP_STATES);
    match linear {
        Some((lf, lg)) => {
            let (pf, pg) = (lf.to_poly(), lg.to_poly());
            let orthogonal = poly_gcd(&pf, &pg)?.is_one();
            entry.orthogonal = Some(orthogonal);
            if orthogonal {
                entry.cycle_sum = Some(system_cycle_sum(&pf, &pg)?);
                entry.method = Some(CycleMethod::Lms);
            }
        }
        None if brute_ok => {
            let orthogonal = are_orthogonal(f, g)?;
            entry.orthogonal = Some(orthogonal);
            if orthogonal {
                let sys = OcaSystem::new(f.clone(), g.clone())?;
                entry.cycle_sum = Some(sys.cycle_decomposition()?);
                entry.method = Some(CycleMethod::BruteForce);
            }
        }
        None => return Err(Error::UnsupportedDiameter { d: f.diameter(), reason: "phase space too large to sweep" }),
    }
    entry.max_cycle_length = entry.cycle_sum.as_ref().and_then(CycleSum::max_length);
    Ok(())
}

/// Analyzes every pair line; malformed lines become error records.
pub fn analyze_reader<R: BufRead>(reader: R, field: Field, d: usize) -> Result<AnalysisReport> {
    let mut report = AnalysisReport::default();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut entry = PairAnalysis {
            line: idx + 1,
            text: content.to_string(),
            orthogonal: None,
            linear: None,
            method: None,
            cycle_sum: None,
            max_cycle_length: None,
            error: None,
        };
        let tokens: Vec<&str> =
            content.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
        let outcome = if tokens.len() != 2 {
            Err(Error::Parse(format!("expected two rules, found {}", tokens.len())))
        } else {
            parse_rule_token(tokens[0], field, d)
                .and_then(|f| Ok((f, parse_rule_token(tokens[1], field, d)?)))
                .and_then(|(f, g)| analyze_rules(&f, &g, &mut entry))
        };
        if let Err(e) = outcome {
            entry.error = Some(e.to_string());
        }
        if let Some(len) = entry.max_cycle_length {
            *report.distribution.entry(len).or_insert(0) += 1;
        }
        report.pairs.push(entry);
    }
    Ok(report)
}

pub fn analyze_pair_file(path: &Path, field: Field, d: usize) -> Result<AnalysisReport> {
    analyze_reader(std::io::BufReader::new(std::fs::File::open(path)?), field, d)
}
