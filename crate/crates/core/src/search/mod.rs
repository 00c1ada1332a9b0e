//! Search drivers: exhaustive binary pair search, maximal linear-pair
//! enumeration, and analysis of supplied pair lists.

mod analyze;
mod exhaustive;
mod linear;
mod report;

pub use analyze::{analyze_pair_file, analyze_reader, parse_rule_token, AnalysisReport, CycleMethod, PairAnalysis};
pub use exhaustive::{bipermutive_table, exhaustive_search, SearchOptions};
pub use linear::{
    candidate_polys, enumerate_maximal_linear, EndCoefficients, LinearEnumOptions, LinearEnumReport, MaximalPairRecord,
    PairOrder,
};
pub use report::{export_distribution, write_distribution, Distribution, SearchReport};
