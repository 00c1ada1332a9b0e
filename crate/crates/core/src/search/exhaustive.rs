//! Exhaustive search over ordered pairs of binary bipermutive rules.
//!
//! A bipermutive rule of diameter `d` is `x_1 + g(x_2..x_{d-1}) + x_d` for a
//! generator `g` on the `2^(d-2)` middle patterns. States of `2n = 2(d-1)`
//! cells are bit-packed with cell 1 in the most significant position, so
//! each output window is a contiguous bit field.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::SearchReport;
use crate::ca::{Anf, LocalRule};
use crate::error::{Error, Result};

const CHECKPOINT_VERSION: u32 = 1;
const PAIRS_PER_CHUNK: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Skip pairs whose truth tables are not pairwise balanced.
    pub balance_filter: bool,
    /// Required for `d = 6`.
    pub long_run: bool,
    /// Resumable progress file, rewritten after every batch of chunks.
    pub checkpoint: Option<PathBuf>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { balance_filter: true, long_run: false, checkpoint: None }
    }
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    version: u32,
    d: usize,
    balance_filter: bool,
    chunk_len: u64,
    next_chunk: u64,
    partial: SearchReport,
}

/// Truth table of `x_1 + g(middle) + x_d` as a `u64`.
pub fn bipermutive_table(d: usize, g: u64) -> u64 {
    let mid = 1u64 << (d - 2);
    let mut t = 0u64;
    for k in 0..1u64 << d {
        let x1 = k >> (d - 1);
        let xd = k & 1;
        let m = (k >> 1) & (mid - 1);
        t |= (x1 ^ ((g >> m) & 1) ^ xd) << k;
    }
    t
}

#[inline]
fn nbca_bits(table: u64, s: u32, n: usize, mask: u32) -> u32 {
    let mut out = 0;
    for k in 0..n {
        out |= (((table >> ((s >> k) & mask)) & 1) as u32) << k;
    }
    out
}

/// Fills `image` with `H` when it is a bijection; returns false on the
/// first collision.
#[inline]
fn pair_image(tf: u64, tg: u64, n: usize, seen: &mut [u64], image: &mut [u32]) -> bool {
    let mask = (1u32 << (n + 1)) - 1;
    seen.iter_mut().for_each(|w| *w = 0);
    for (s, slot) in image.iter_mut().enumerate() {
        let h = (nbca_bits(tf, s as u32, n, mask) << n) | nbca_bits(tg, s as u32, n, mask);
        let (w, b) = ((h >> 6) as usize, h & 63);
        if seen[w] >> b & 1 == 1 {
            return false;
        }
        seen[w] |= 1 << b;
        *slot = h;
    }
    true
}

fn max_cycle(image: &[u32], seen: &mut [u64]) -> u64 {
    seen.iter_mut().for_each(|w| *w = 0);
    let mut best = 0;
    for start in 0..image.len() as u32 {
        if seen[(start >> 6) as usize] >> (start & 63) & 1 == 1 {
            continue;
        }
        let mut len = 0u64;
        let mut k = start;
        loop {
            seen[(k >> 6) as usize] |= 1 << (k & 63);
            len += 1;
            k = image[k as usize];
            if k == start {
                break;
            }
        }
        best = best.max(len);
    }
    best
}

fn is_affine_table(d: usize, table: u64) -> bool {
    let rule = LocalRule::from_bits(d, table).expect("valid table");
    Anf::from_rule(&rule).expect("binary rule").is_affine()
}

/// Generator differences that keep a pair balanced: exactly half the middle
/// patterns differ.
fn balanced_deltas(d: usize) -> Vec<u64> {
    let mid = 1u32 << (d - 2);
    (0..1u64 << mid).filter(|x| x.count_ones() == mid / 2).collect()
}

struct Ctx {
    d: usize,
    n: usize,
    tables: Vec<u64>,
    deltas: Option<Vec<u64>>,
}

impl Ctx {
    fn run_range(&self, gens: std::ops::Range<u64>) -> SearchReport {
        let states = 1usize << (2 * self.n);
        let mut seen = vec![0u64; states.div_ceil(64)];
        let mut image = vec![0u32; states];
        let full = states as u64 - 1;
        let mut rep = SearchReport::default();
        let mut visit = |g1: u64, g2: u64, rep: &mut SearchReport| {
            rep.pairs_visited += 1;
            let (tf, tg) = (self.tables[g1 as usize], self.tables[g2 as usize]);
            if !pair_image(tf, tg, self.n, &mut seen, &mut image) {
                return;
            }
            rep.oca_pairs += 1;
            let len = max_cycle(&image, &mut seen);
            *rep.distribution.entry(len).or_insert(0) += 1;
            if len >= full {
                rep.maximal += 1;
                if is_affine_table(self.d, tf) && is_affine_table(self.d, tg) {
                    rep.maximal_linear += 1;
                } else {
                    rep.maximal_nonlinear += 1;
                }
                rep.maximal_pairs.push((tf, tg));
            }
        };
        for g1 in gens {
            match &self.deltas {
                Some(deltas) => deltas.iter().for_each(|&dl| visit(g1, g1 ^ dl, &mut rep)),
                None => (0..self.tables.len() as u64).for_each(|g2| visit(g1, g2, &mut rep)),
            }
        }
        rep
    }
}

fn load_checkpoint(path: &Path, d: usize, filter: bool, chunk_len: u64) -> Result<Option<Checkpoint>> {
    if !path.exists() {
        return Ok(None);
    }
    let cp: Checkpoint = serde_json::from_reader(std::io::BufReader::new(std::fs::File::open(path)?))
        .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
    if cp.version != CHECKPOINT_VERSION || cp.d != d || cp.balance_filter != filter || cp.chunk_len != chunk_len {
        return Err(Error::Checkpoint(format!("{} belongs to a different search", path.display())));
    }
    Ok(Some(cp))
}

fn save_checkpoint(path: &Path, cp: &Checkpoint) -> Result<()> {
    let tmp = path.with_extension("tmp");
    serde_json::to_writer(std::io::BufWriter::new(std::fs::File::create(&tmp)?), cp)?;
    std::fs::rename(tmp, path)?;
    Ok(())
}

/// Runs the search for `3 <= d <= 6`; counts are independent of the number
/// of worker threads.
pub fn exhaustive_search(d: usize, options: &SearchOptions) -> Result<SearchReport> {
    if !(3..=6).contains(&d) {
        return Err(Error::UnsupportedDiameter { d, reason: "exhaustive search covers 3 <= d <= 6" });
    }
    if d == 6 && !options.long_run {
        return Err(Error::UnsupportedDiameter { d, reason: "d = 6 requires the long-run flag" });
    }
    let rules = 1u64 << (1u32 << (d - 2));
    let ctx = Ctx {
        d,
        n: d - 1,
        tables: (0..rules).map(|g| bipermutive_table(d, g)).collect(),
        deltas: options.balance_filter.then(|| balanced_deltas(d)),
    };
    let per_gen = ctx.deltas.as_ref().map_or(rules, |v| v.len() as u64);
    let chunk_len = (PAIRS_PER_CHUNK / per_gen).clamp(1, rules);
    let chunks = rules.div_ceil(chunk_len);

    let mut report = SearchReport { d, q: 2, bipermutive_rules: rules, ..Default::default() };
    let mut next = 0;
    if let Some(path) = &options.checkpoint {
        if let Some(cp) = load_checkpoint(path, d, options.balance_filter, chunk_len)? {
            report = cp.partial;
            next = cp.next_chunk;
        }
    }
    let batch = (rayon::current_num_threads() as u64 * 4).max(1);
    while next < chunks {
        let end = (next + batch).min(chunks);
        let parts: Vec<SearchReport> = (next..end)
            .into_par_iter()
            .map(|c| ctx.run_range(c * chunk_len..((c + 1) * chunk_len).min(rules)))
            .collect();
        for p in parts {
            report.merge(p);
        }
        next = end;
        if let Some(path) = &options.checkpoint {
            let cp = Checkpoint {
                version: CHECKPOINT_VERSION,
                d,
                balance_filter: options.balance_filter,
                chunk_len,
                next_chunk: next,
                partial: report,
            };
            save_checkpoint(path, &cp)?;
            report = cp.partial;
        }
    }
    report.maximal_pairs.sort_unstable();
    Ok(report)
}
