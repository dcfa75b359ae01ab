//! Verification checks over censuses of regular graphs.

mod conjectures;
mod crossover;
mod identities;
mod theorems;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use homlab_core::census::{enumerate_regular, CensusError, CensusRecord, Filters};
use homlab_core::constructions::ConstructionError;
use homlab_core::partition::{brute_force_z, brute_force_zb, compare_values, partition_z, partition_zb_backtrack};
use homlab_core::{BipartiteTarget, ExactValue, SimpleGraph, TargetGraph};
use rand::Rng;
use rayon::prelude::*;

use crate::graph6;
use crate::random::stream_rng;
use crate::report::{AuditSummary, Backing, CensusScope, CheckReport, Outcome, Record};

pub use conjectures::{
    check_conjectures, check_cycle_conjecture, check_star_conjecture, check_triangle_free_conjecture, Conjecture, ConjectureRanges,
};
pub use crossover::{crossover_report, find_star_crossover, CrossoverRow, CrossoverTable, VALIDATION_D_MAX};
pub use identities::{check_transform_identities, IdentityConfig};
pub use theorems::{check_extended_extremality, check_kahn_baseline, check_wr_extremality};

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("closed form disagrees with brute force for {0}")]
    Validation(String),
}

/// Degree and largest vertex count of a census sweep, written `d:n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scope {
    pub d: usize,
    pub n_max: usize,
}

impl Scope {
    pub fn new(d: usize, n_max: usize) -> Self {
        Scope { d, n_max }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.d, self.n_max)
    }
}

impl FromStr for Scope {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CheckError::InvalidParameter(format!("scope {s:?} is not of the form d:n_max"));
        let (d, n) = s.split_once(':').ok_or_else(bad)?;
        Ok(Scope { d: d.trim().parse().map_err(|_| bad())?, n_max: n.trim().parse().map_err(|_| bad())? })
    }
}

type CensusKey = (usize, usize, Filters);

/// Shared state for a batch of checks: memoized censuses and audit settings.
pub struct Context {
    censuses: Mutex<HashMap<CensusKey, Arc<Vec<CensusRecord>>>>,
    pub audit: bool,
    pub seed: u64,
}

impl Context {
    pub fn new(seed: u64, audit: bool) -> Self {
        Context { censuses: Mutex::new(HashMap::new()), audit, seed }
    }

    pub fn census(&self, n: usize, d: usize, filters: Filters) -> Result<Arc<Vec<CensusRecord>>, CensusError> {
        let key = (n, d, filters);
        if let Some(c) = self.censuses.lock().expect("census cache poisoned").get(&key) {
            return Ok(c.clone());
        }
        let records = Arc::new(enumerate_regular(n, d, filters)?);
        self.censuses.lock().expect("census cache poisoned").insert(key, records.clone());
        Ok(records)
    }

    /// All census graphs of the scope, in increasing `n` and canonical order
    /// within each `n`. Fails if any `n` in range exceeds the census cap.
    pub fn census_graphs(&self, scope: Scope, filters: Filters) -> Result<Vec<SimpleGraph>, CensusError> {
        let mut out = Vec::new();
        for n in 1..=scope.n_max {
            if n * scope.d % 2 == 1 {
                continue;
            }
            out.extend(self.census(n, scope.d, filters)?.iter().map(|r| r.graph.clone()));
        }
        Ok(out)
    }
}

pub type Evaluate<'a> = &'a (dyn Fn(&SimpleGraph) -> ExactValue + Sync);

/// A normalized comparison of every census graph against one extremal graph:
/// a record is a counterexample iff `p(G) > p(reference)`.
pub struct Sweep<'a> {
    pub check: String,
    pub target: String,
    pub backing: Backing,
    pub scope: Scope,
    pub filters: Filters,
    pub reference: SimpleGraph,
    pub evaluate: Evaluate<'a>,
    /// Independent engine used by the audit.
    pub recount: Evaluate<'a>,
}

impl Sweep<'_> {
    pub fn run(&self, ctx: &Context) -> Result<CheckReport, CheckError> {
        let start = Instant::now();
        let graphs = ctx.census_graphs(self.scope, self.filters)?;
        let reference = (self.evaluate)(&self.reference);
        let ref_n = self.reference.n();
        let values: Vec<ExactValue> = graphs.par_iter().map(|g| (self.evaluate)(g)).collect();
        let records: Vec<Record> = graphs
            .iter()
            .zip(&values)
            .map(|(g, z)| {
                let cmp = compare_values(z, g.n(), &reference, ref_n);
                Record {
                    graph6: graph6::encode(g),
                    n: g.n(),
                    label: None,
                    value: z.to_string(),
                    reference: reference.to_string(),
                    outcome: Outcome::from_ordering(cmp.outcome),
                    ok: cmp.is_at_most(),
                }
            })
            .collect();
        let census = CensusScope { d: self.scope.d, n_max: self.scope.n_max, filters: self.filters.to_string() };
        let mut report = CheckReport::new(self.check.clone(), self.target.clone(), self.backing, Some(census), records);
        report.summary.notes.push(format!("reference {} = {}", graph6::encode(&self.reference), reference));
        if ctx.audit {
            report.summary.audit = Some(audit(ctx, &report.check, &report.target, &graphs, &values, self.recount));
        }
        report.wall_time = start.elapsed();
        Ok(report)
    }
}

/// Maps below this count are recounted by brute force, larger ones by
/// backtracking.
const BRUTE_FORCE_MAPS: u128 = 1 << 22;

fn brute_force_feasible(source_n: usize, target_n: usize) -> bool {
    (target_n as u128).checked_pow(source_n as u32).is_some_and(|m| m <= BRUTE_FORCE_MAPS)
}

/// Independent recount of `Z(G, H)`: brute force when small, else backtracking.
pub fn recount_z(g: &SimpleGraph, h: &TargetGraph) -> ExactValue {
    if brute_force_feasible(g.n(), h.n()) {
        brute_force_z(g, h)
    } else {
        partition_z(g, h)
    }
}

/// Independent recount of `Z_b(G, H)`.
pub fn recount_zb(g: &BipartiteTarget, h: &BipartiteTarget) -> ExactValue {
    if brute_force_feasible(g.n(), h.n()) {
        brute_force_zb(g, h)
    } else {
        partition_zb_backtrack(g, h)
    }
}

/// Sample roughly 1% of the records (at least one) from a seeded stream and
/// recompute them with an independent engine.
pub fn audit(ctx: &Context, check: &str, target: &str, graphs: &[SimpleGraph], values: &[ExactValue], recount: Evaluate<'_>) -> AuditSummary {
    let mut rng = stream_rng(ctx.seed, &format!("audit/{check}/{target}"));
    let mut picked: Vec<usize> = (0..graphs.len()).filter(|_| rng.random_range(0..100) == 0).collect();
    if picked.is_empty() && !graphs.is_empty() {
        picked.push(rng.random_range(0..graphs.len()));
    }
    let failures = picked.par_iter().filter(|&&i| recount(&graphs[i]) != values[i]).map(|&i| graph6::encode(&graphs[i])).collect();
    AuditSummary { sampled: picked.len(), failures }
}
