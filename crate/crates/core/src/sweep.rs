//! Exhaustive bound checks over enumerated degree sequences.
//!
//! Each order is split into shards by leading degree, shards are solved in
//! parallel, and results are concatenated in stream order so output does not
//! depend on scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundName, BoundReport};
use crate::error::{Error, Result};
use crate::graphical::{enumerate_with_leading, SequenceKind};
use crate::poly::IntPolynomial;
use crate::rootfind::{find_roots, Root, RootSet};
use crate::sequence::DegreeSequence;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub kind: SequenceKind,
    pub n_min: usize,
    pub n_max: usize,
    pub bounds: Vec<BoundName>,
    /// Worker threads; `0` uses the rayon default.
    pub jobs: usize,
    pub tol: f64,
    /// Keep every record, not only violations.
    pub keep_records: bool,
}

impl SweepConfig {
    /// The conjecture is only claimed for simple graphs; on multigraphs it is
    /// measured but never counted as a violation.
    pub fn asserts(&self, bound: BoundName) -> bool {
        !(bound == BoundName::Conjecture && matches!(self.kind, SequenceKind::Multigraph { .. }))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub schema: u32,
    /// Degree sequence or family spec.
    pub id: String,
    pub n: usize,
    pub polynomial: IntPolynomial,
    pub roots: Vec<Root>,
    pub zero_mult: usize,
    pub reports: Vec<BoundReport>,
}

impl SweepRecord {
    pub fn new(id: String, n: usize, rs: &RootSet, bounds: &[BoundName]) -> SweepRecord {
        SweepRecord {
            schema: SCHEMA,
            id,
            n,
            polynomial: rs.polynomial.clone(),
            roots: rs.roots.clone(),
            zero_mult: rs.zero_mult,
            reports: bounds.iter().map(|&b| bounds::check(b, rs, n)).collect(),
        }
    }

    pub fn failed_bounds(&self) -> impl Iterator<Item = BoundName> + '_ {
        self.reports.iter().filter(|r| !r.holds).map(|r| r.bound)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json_line(line: &str) -> Result<SweepRecord> {
        let rec: SweepRecord = serde_json::from_str(line)
            .map_err(|e| Error::parse("sweep record", abbreviate(line), e.to_string()))?;
        if rec.schema != SCHEMA {
            return Err(Error::parse(
                "sweep record",
                rec.schema.to_string(),
                format!("unsupported schema, expected {SCHEMA}"),
            ));
        }
        Ok(rec)
    }
}

fn abbreviate(s: &str) -> String {
    let mut out: String = s.chars().take(40).collect();
    if out.len() < s.len() {
        out.push_str("...");
    }
    out
}

/// Parses JSON lines, skipping blank lines; errors name the line number.
pub fn parse_jsonl(text: &str) -> Result<Vec<SweepRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            SweepRecord::from_json_line(l).map_err(|e| match e {
                Error::Parse {
                    what,
                    token,
                    reason,
                } => Error::Parse {
                    what,
                    token,
                    reason: format!("line {}: {reason}", i + 1),
                },
                other => other,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderCounts {
    pub sequences: usize,
    pub violations: usize,
    /// Failures of bounds that are recorded but not asserted.
    pub unasserted: usize,
    pub nonconvergent: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SweepSummary {
    pub per_n: BTreeMap<usize, OrderCounts>,
    /// Records with at least one asserted bound failing, in stream order.
    pub violations: Vec<SweepRecord>,
    /// Sequences whose roots could not be certified.
    pub failures: Vec<(String, String)>,
    /// Every record in stream order, when requested.
    pub records: Vec<SweepRecord>,
}

impl SweepSummary {
    pub fn total_sequences(&self) -> usize {
        self.per_n.values().map(|c| c.sequences).sum()
    }
}

enum Outcome {
    Record(SweepRecord),
    Failed(String, String),
}

fn solve_shard(n: usize, d1: u64, config: &SweepConfig) -> Vec<Outcome> {
    enumerate_with_leading(n, config.kind, d1)
        .map(|seq: DegreeSequence| {
            let id = seq.to_string();
            let p = IntPolynomial::from_degrees(&seq);
            match find_roots(&p, config.tol) {
                Ok(rs) => Outcome::Record(SweepRecord::new(id, n, &rs, &config.bounds)),
                Err(e) => Outcome::Failed(id, e.to_string()),
            }
        })
        .collect()
}

/// Runs the sweep; `on_order` is called after each order with its counts.
pub fn run_sweep(
    config: &SweepConfig,
    mut on_order: impl FnMut(usize, &OrderCounts),
) -> Result<SweepSummary> {
    if config.n_max < config.n_min || config.n_min == 0 {
        return Err(Error::InvalidArgument(format!(
            "order range {}..={} is empty",
            config.n_min, config.n_max
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut summary = SweepSummary::default();
    for n in config.n_min..=config.n_max {
        let cap = config.kind.degree_cap(n);
        let shards: Vec<Vec<Outcome>> = pool.install(|| {
            (0..=cap)
                .rev()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|d1| solve_shard(n, d1, config))
                .collect()
        });
        let mut counts = OrderCounts::default();
        for outcome in shards.into_iter().flatten() {
            counts.sequences += 1;
            match outcome {
                Outcome::Record(rec) => {
                    let (asserted, other): (Vec<_>, Vec<_>) =
                        rec.failed_bounds().partition(|&b| config.asserts(b));
                    if !other.is_empty() {
                        counts.unasserted += 1;
                    }
                    if !asserted.is_empty() {
                        counts.violations += 1;
                        summary.violations.push(rec.clone());
                    }
                    if config.keep_records {
                        summary.records.push(rec);
                    }
                }
                Outcome::Failed(id, msg) => {
                    counts.nonconvergent += 1;
                    summary.failures.push((id, msg));
                }
            }
        }
        on_order(n, &counts);
        summary.per_n.insert(n, counts);
    }
    Ok(summary)
}
