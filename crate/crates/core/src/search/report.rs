use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Histogram of maximum cycle lengths: length -> number of pairs.
pub type Distribution = BTreeMap<u64, u64>;

/// Counts from the exhaustive search over binary bipermutive pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub d: usize,
    pub q: u32,
    /// Number of bipermutive rules of diameter `d`.
    pub bipermutive_rules: u64,
    /// Ordered pairs examined after the optional balance filter.
    pub pairs_visited: u64,
    pub oca_pairs: u64,
    pub maximal: u64,
    pub maximal_nonlinear: u64,
    pub maximal_linear: u64,
    pub distribution: Distribution,
    /// Truth tables (bit `k` = output on neighborhood `k`) of the maximal pairs.
    pub maximal_pairs: Vec<(u64, u64)>,
}

impl SearchReport {
    pub(crate) fn merge(&mut self, other: SearchReport) {
        self.pairs_visited += other.pairs_visited;
        self.oca_pairs += other.oca_pairs;
        self.maximal += other.maximal;
        self.maximal_nonlinear += other.maximal_nonlinear;
        self.maximal_linear += other.maximal_linear;
        for (len, count) in other.distribution {
            *self.distribution.entry(len).or_insert(0) += count;
        }
        self.maximal_pairs.extend(other.maximal_pairs);
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = [
            ("d", self.d as u64),
            ("bipermutive rules", self.bipermutive_rules),
            ("pairs visited", self.pairs_visited),
            ("OCA pairs", self.oca_pairs),
            ("maximal", self.maximal),
            ("maximal nonlinear", self.maximal_nonlinear),
            ("maximal linear", self.maximal_linear),
        ];
        for (label, value) in rows {
            writeln!(f, "{label:<20}{value:>12}")?;
        }
        writeln!(f, "max cycle length distribution:")?;
        for (len, count) in &self.distribution {
            writeln!(f, "  {len:>10}  {count:>10}")?;
        }
        Ok(())
    }
}

/// Writes the histogram as CSV with header `max_cycle_length,pair_count`.
pub fn write_distribution<W: Write>(distribution: &Distribution, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["max_cycle_length", "pair_count"])?;
    for (len, count) in distribution {
        w.write_record([len.to_string(), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn export_distribution(distribution: &Distribution, path: &Path) -> Result<()> {
    write_distribution(distribution, std::fs::File::create(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_distribution_has_header_only() {
        let mut buf = Vec::new();
        write_distribution(&Distribution::new(), &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "max_cycle_length,pair_count\n");
    }
}
