use std::fmt::Write as _;

use oca_core::algebra::{poly_gcd, Field, Poly};
use oca_core::ca::{are_orthogonal, latin_square, pairwise_balanced, LinearRule, LocalRule};
use oca_core::dynamics::{CycleSum, OcaSystem, SystemState, MAX_SWEEP_STATES};
use oca_core::lms::system_cycle_sum;
use oca_core::search::{
    analyze_pair_file, enumerate_maximal_linear, exhaustive_search, export_distribution, parse_rule_token,
    write_distribution, Distribution, EndCoefficients, LinearEnumOptions, PairOrder, SearchOptions,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::*;
use crate::CliError;

/// A command's result in every supported format.
pub struct Rendered {
    pub text: String,
    pub json: Value,
    pub csv: Option<String>,
}

type Outcome = Result<Rendered, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn csv_rows<I, R>(header: &[&str], rows: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Domain(e.into());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Domain(oca_core::Error::Io(e.into_error())))?;
    Ok(String::from_utf8(bytes).expect("utf-8 csv"))
}

fn distribution_csv(dist: &Distribution) -> Result<String, CliError> {
    let mut buf = Vec::new();
    write_distribution(dist, &mut buf)?;
    Ok(String::from_utf8(buf).expect("utf-8 csv"))
}

fn linear_to_rule(lin: &LinearRule, d: Option<usize>) -> Result<LocalRule, CliError> {
    if let Some(d) = d {
        if d != lin.diameter() {
            return Err(usage(format!("--d {d} does not match a rule of diameter {}", lin.diameter())));
        }
    }
    Ok(lin.to_local_rule()?)
}

fn single_rule(a: &RuleArgs) -> Result<LocalRule, CliError> {
    let field = Field::new(a.q)?;
    let need_d = || a.d.ok_or_else(|| usage("--d is required for this rule source"));
    let rule = if let Some(code) = &a.rule {
        parse_rule_token(code, field, need_d()?)?
    } else if let Some(t) = &a.table {
        LocalRule::parse_table(field, t)?
    } else if let Some(l) = &a.linear {
        linear_to_rule(&LinearRule::parse(field, l)?, a.d)?
    } else if let Some(p) = &a.poly {
        linear_to_rule(&LinearRule::from_poly(&Poly::parse(field, p)?)?, a.d)?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        LocalRule::random_bipermutive(field, need_d()?, &mut rng)?
    };
    if let Some(d) = a.d {
        if d != rule.diameter() {
            return Err(usage(format!("--d {d} does not match a rule of diameter {}", rule.diameter())));
        }
    }
    Ok(rule)
}

struct Pair {
    f: LocalRule,
    g: LocalRule,
    linear: Option<(Poly, Poly)>,
}

fn rule_pair(a: &PairArgs) -> Result<Pair, CliError> {
    let field = Field::new(a.q)?;
    let (f, g) = if !a.rules.is_empty() {
        if a.rules.len() != 2 {
            return Err(usage("--rules takes exactly two rules"));
        }
        let parse = |t: &str| -> Result<LocalRule, CliError> {
            match a.d {
                Some(d) => Ok(parse_rule_token(t, field, d)?),
                None => LocalRule::parse_table(field, t).map_err(|_| usage("--d is required for Wolfram codes")),
            }
        };
        (parse(&a.rules[0])?, parse(&a.rules[1])?)
    } else {
        let lins: Vec<LinearRule> = if !a.linear.is_empty() {
            a.linear.iter().map(|t| LinearRule::parse(field, t)).collect::<Result<_, _>>()?
        } else {
            a.poly
                .iter()
                .map(|t| Poly::parse(field, t).and_then(|p| LinearRule::from_poly(&p)))
                .collect::<Result<_, _>>()?
        };
        if lins.len() != 2 {
            return Err(usage("give exactly two linear rules"));
        }
        (linear_to_rule(&lins[0], a.d)?, linear_to_rule(&lins[1], a.d)?)
    };
    if f.diameter() != g.diameter() {
        return Err(usage("rules have different diameters"));
    }
    let linear =
        LinearRule::from_local_rule(&f).zip(LinearRule::from_local_rule(&g)).map(|(a, b)| (a.to_poly(), b.to_poly()));
    Ok(Pair { f, g, linear })
}

fn sweepable(rule: &LocalRule) -> bool {
    (rule.q() as u64).checked_pow(2 * (rule.diameter() as u32 - 1)).is_some_and(|s| s <= MAX_SWEEP_STATES)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn latin(a: &RuleArgs) -> Outcome {
    let rule = single_rule(a)?;
    let square = latin_square(&rule)?;
    let rows = square.rows();
    let csv = csv_rows(
        &(1..=square.order())
            .map(|j| format!("c{j}"))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>(),
        rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>()),
    )?;
    Ok(Rendered {
        text: square.to_string(),
        json: json!({
            "q": rule.q(),
            "d": rule.diameter(),
            "table": rule.table_string(),
            "order": square.order(),
            "rows": rows,
        }),
        csv: Some(csv),
    })
}

/// Orthogonality by superposition, cross-checked against coprimality for
/// linear pairs.
fn orthogonality(p: &Pair) -> Result<(Option<bool>, Option<bool>), CliError> {
    let brute = if sweepable(&p.f) { Some(are_orthogonal(&p.f, &p.g)?) } else { None };
    let coprime = match &p.linear {
        Some((pf, pg)) => Some(poly_gcd(pf, pg)?.is_one()),
        None => None,
    };
    if let (Some(b), Some(c)) = (brute, coprime) {
        if b != c {
            return Err(CliError::Domain(oca_core::Error::Internal(format!(
                "superposition says {b}, coprimality says {c}"
            ))));
        }
    }
    if brute.is_none() && coprime.is_none() {
        return Err(CliError::Domain(oca_core::Error::UnsupportedDiameter {
            d: p.f.diameter(),
            reason: "phase space too large to check a nonlinear pair",
        }));
    }
    Ok((brute, coprime))
}

pub fn orthogonal(a: &PairArgs) -> Outcome {
    let p = rule_pair(a)?;
    if !p.f.is_bipermutive() || !p.g.is_bipermutive() {
        return Err(CliError::Domain(oca_core::Error::NotBipermutive));
    }
    let (brute, coprime) = orthogonality(&p)?;
    let verdict = brute.or(coprime).unwrap_or(false);
    let balanced = pairwise_balanced(&p.f, &p.g)?;
    let mut text = format!("orthogonal: {}\n", yes_no(verdict));
    if let Some(b) = brute {
        writeln!(text, "superposition: {}", yes_no(b)).unwrap();
    }
    if let Some(c) = coprime {
        writeln!(text, "coprime polynomials: {}", yes_no(c)).unwrap();
    }
    writeln!(text, "pairwise balanced: {}", yes_no(balanced)).unwrap();
    Ok(Rendered {
        text,
        json: json!({
            "orthogonal": verdict,
            "superposition": brute,
            "coprime": coprime,
            "pairwise_balanced": balanced,
        }),
        csv: None,
    })
}

pub fn cycles(a: &PairArgs) -> Outcome {
    let p = rule_pair(a)?;
    if !p.f.is_bipermutive() || !p.g.is_bipermutive() {
        return Err(CliError::Domain(oca_core::Error::NotBipermutive));
    }
    let (brute_orth, coprime) = orthogonality(&p)?;
    if !brute_orth.or(coprime).unwrap_or(false) {
        return Err(CliError::Domain(oca_core::Error::NotOrthogonal));
    }
    let brute: Option<CycleSum> =
        if sweepable(&p.f) { Some(OcaSystem::new(p.f.clone(), p.g.clone())?.cycle_decomposition()?) } else { None };
    let theory = match &p.linear {
        Some((pf, pg)) => Some(system_cycle_sum(pf, pg)?),
        None => None,
    };
    if let (Some(b), Some(t)) = (&brute, &theory) {
        if b != t {
            return Err(CliError::Domain(oca_core::Error::Internal(format!(
                "brute force {b} differs from elementary-divisor result {t}"
            ))));
        }
    }
    let max = brute.as_ref().or(theory.as_ref()).and_then(CycleSum::max_length);
    let mut text = String::new();
    match (&brute, &theory) {
        (Some(b), Some(t)) => {
            writeln!(text, "brute force: {b}").unwrap();
            writeln!(text, "lms:         {t}").unwrap();
        }
        (Some(s), None) | (None, Some(s)) => writeln!(text, "{s}").unwrap(),
        (None, None) => unreachable!("orthogonality check guarantees one route"),
    }
    if let Some(m) = max {
        writeln!(text, "max cycle length: {m}").unwrap();
    }
    let mut rows = Vec::new();
    for (name, sum) in [("brute_force", &brute), ("lms", &theory)] {
        if let Some(s) = sum {
            rows.extend(s.terms().into_iter().map(|(n, t)| vec![name.to_string(), n.to_string(), t.to_string()]));
        }
    }
    Ok(Rendered {
        text,
        json: json!({ "brute_force": brute, "lms": theory, "max_cycle_length": max }),
        csv: Some(csv_rows(&["method", "count", "length"], rows)?),
    })
}

pub fn keystream(a: &KeystreamArgs) -> Outcome {
    let p = rule_pair(&a.pair)?;
    let seed = SystemState::parse(&a.state, p.f.q())?;
    let sys = OcaSystem::new(p.f, p.g)?;
    if seed.len() != 2 * sys.n() {
        return Err(usage(format!("--state needs {} symbols, got {}", 2 * sys.n(), seed.len())));
    }
    let orbit = sys.keystream(&seed, a.steps)?;
    if let Some(path) = &a.binary {
        if sys.q() != 2 {
            return Err(CliError::Domain(oca_core::Error::BinaryOnly(sys.q())));
        }
        let bits: Vec<u32> = orbit.iter().flat_map(|s| s.symbols().to_vec()).collect();
        let bytes: Vec<u8> = bits
            .chunks(8)
            .map(|c| c.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i))))
            .collect();
        std::fs::write(path, bytes).map_err(|e| CliError::Domain(e.into()))?;
    }
    let lines: Vec<String> = orbit.iter().map(SystemState::to_string).collect();
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    Ok(Rendered {
        json: json!({ "seed": seed.to_string(), "steps": a.steps, "states": lines }),
        csv: Some(csv_rows(
            &["step", "state"],
            lines.iter().enumerate().map(|(i, s)| vec![(i + 1).to_string(), s.clone()]),
        )?),
        text,
    })
}

pub fn table1(a: &Table1Args) -> Outcome {
    let options =
        SearchOptions { balance_filter: !a.no_balance_filter, long_run: a.long_run, checkpoint: a.checkpoint.clone() };
    let report = exhaustive_search(a.d, &options)?;
    if let Some(path) = &a.distribution {
        export_distribution(&report.distribution, path)?;
    }
    Ok(Rendered {
        text: report.to_string(),
        json: serde_json::to_value(&report).expect("serializable report"),
        csv: Some(distribution_csv(&report.distribution)?),
    })
}

pub fn table2(a: &Table2Args) -> Outcome {
    let options = LinearEnumOptions {
        ends: match a.ends {
            Ends::One => EndCoefficients::One,
            Ends::Nonzero => EndCoefficients::Nonzero,
        },
        order: match a.order {
            Order::Lex => PairOrder::Lexicographic,
            Order::Either => PairOrder::Either,
            Order::Ordered => PairOrder::Ordered,
        },
        collect: a.list,
    };
    let report = enumerate_maximal_linear(a.d, a.q, &options)?;
    let mut text = format!("{}\n", report.count);
    for r in &report.records {
        writeln!(text, "{}", r.to_line()).unwrap();
    }
    let csv = csv_rows(
        &["pf", "pg", "min_poly"],
        report.records.iter().map(|r| vec![r.pf.to_coeff_list(), r.pg.to_coeff_list(), r.min_poly.to_coeff_list()]),
    )?;
    Ok(Rendered { text, json: serde_json::to_value(&report).expect("serializable report"), csv: Some(csv) })
}

pub fn analyze(a: &AnalyzeArgs) -> Outcome {
    let field = Field::new(a.q)?;
    let report = analyze_pair_file(&a.file, field, a.d)?;
    if let Some(path) = &a.distribution {
        export_distribution(&report.distribution, path)?;
    }
    let mut text = String::new();
    for p in &report.pairs {
        match &p.error {
            Some(e) => writeln!(text, "line {}: {}: error: {e}", p.line, p.text).unwrap(),
            None => {
                write!(text, "line {}: {}: orthogonal={}", p.line, p.text, yes_no(p.orthogonal == Some(true))).unwrap();
                if let (Some(sum), Some(max)) = (&p.cycle_sum, p.max_cycle_length) {
                    let method = if p.linear == Some(true) { "lms" } else { "brute force" };
                    write!(text, " max={max} cycles={sum} [{method}]").unwrap();
                }
                text.push('\n');
            }
        }
    }
    writeln!(text, "pairs: {} errors: {}", report.pairs.len(), report.errors()).unwrap();
    Ok(Rendered {
        text,
        json: serde_json::to_value(&report).expect("serializable report"),
        csv: Some(distribution_csv(&report.distribution)?),
    })
}
