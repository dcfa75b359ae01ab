//! Degree at which `K_{d,d}` overtakes `K_{d+1}` for fully looped stars.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use homlab_core::constructions::{add_loops, complete, complete_bipartite, star};
use homlab_core::partition::{brute_force_z, compare_values, complete_bipartite_z, complete_z, STRUCTURAL_TARGET_CAP};
use homlab_core::{ExactValue, TargetGraph};

use super::CheckError;
use crate::graph6;
use crate::report::{Backing, CheckReport, Outcome, Record};

/// The closed forms are checked against brute force for `d` up to this value.
pub const VALIDATION_D_MAX: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossoverRow {
    pub d: usize,
    pub clique: ExactValue,
    pub biclique: ExactValue,
    /// `p(K_{d+1})` against `p(K_{d,d})`; `Less` means the biclique wins.
    pub outcome: Ordering,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossoverTable {
    pub k: usize,
    pub rows: Vec<CrossoverRow>,
}

impl CrossoverTable {
    /// Smallest tested `d` with `p(K_{d+1}) < p(K_{d,d})`.
    pub fn minimal_d(&self) -> Option<usize> {
        self.rows.iter().find(|r| r.outcome == Ordering::Less).map(|r| r.d)
    }
}

fn looped_star(k: usize) -> TargetGraph {
    add_loops(&TargetGraph::from(&star(k)))
}

pub fn find_star_crossover(k: usize, degrees: RangeInclusive<usize>) -> Result<CrossoverTable, CheckError> {
    if k < 2 || *degrees.start() == 0 {
        return Err(CheckError::InvalidParameter("need k >= 2 and d >= 1".into()));
    }
    if k > STRUCTURAL_TARGET_CAP {
        return Err(CheckError::InvalidParameter(format!("star size {k} exceeds the closed-form cap")));
    }
    let h = looped_star(k);
    let closed = |d: usize| -> (ExactValue, ExactValue) {
        let c = complete_z(d + 1, &h).expect("stars in range fit the closed-form cap");
        let b = complete_bipartite_z(d, d, &h).expect("stars in range fit the closed-form cap");
        (c, b)
    };
    for d in 1..=VALIDATION_D_MAX {
        let (c, b) = closed(d);
        if c != brute_force_z(&complete(d + 1), &h) || b != brute_force_z(&complete_bipartite(d, d), &h) {
            return Err(CheckError::Validation(format!("star:{k}:looped at d = {d}")));
        }
    }
    let rows = degrees
        .map(|d| {
            let (clique, biclique) = closed(d);
            let outcome = compare_values(&clique, d + 1, &biclique, 2 * d).outcome;
            CrossoverRow { d, clique, biclique, outcome }
        })
        .collect();
    Ok(CrossoverTable { k, rows })
}

/// `S_3^o` is the Widom-Rowlinson graph, where no crossover may occur. The
/// caller sets `wall_time`.
pub fn crossover_report(table: &CrossoverTable) -> CheckReport {
    let records = table
        .rows
        .iter()
        .map(|r| Record {
            graph6: graph6::encode(&complete(r.d + 1)),
            n: r.d + 1,
            label: Some(format!("d={}", r.d)),
            value: r.clique.to_string(),
            reference: r.biclique.to_string(),
            outcome: Outcome::from_ordering(r.outcome),
            ok: r.outcome != Ordering::Less,
        })
        .collect();
    let backing = if table.k == 3 { Backing::Theorem } else { Backing::Exploration };
    let mut rep = CheckReport::new("crossover", format!("star:{}:looped", table.k), backing, None, records);
    let range = match (table.rows.first(), table.rows.last()) {
        (Some(a), Some(b)) => format!("{}..={}", a.d, b.d),
        _ => "empty range".into(),
    };
    rep.summary.status = match table.minimal_d() {
        Some(d) => format!("K_{{d,d}} overtakes K_{{d+1}} from d = {d} (minimal over d in {range}, empirical)"),
        None => format!("no crossover for d in {range}"),
    };
    rep.summary.notes.push(format!("closed forms checked against brute force for d <= {VALIDATION_D_MAX}"));
    rep
}
