//! Sweeps for open statements. Results are only ever "consistent at tested
//! scale" or a concrete counterexample with both exact values.

use std::fmt;
use std::str::FromStr;

use homlab_core::census::Filters;
use homlab_core::constructions::{add_loops, complete, complete_bipartite, cycle, star};
use homlab_core::partition::partition_z_fast;
use homlab_core::{SimpleGraph, TargetGraph};

use super::{recount_z, CheckError, Context, Scope, Sweep};
use crate::report::{Backing, CheckReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    Cycles,
    Stars,
    TriangleFree,
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjecture::Cycles => "cycles",
            Conjecture::Stars => "stars",
            Conjecture::TriangleFree => "triangle_free",
        })
    }
}

impl FromStr for Conjecture {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cycles" => Ok(Conjecture::Cycles),
            "stars" => Ok(Conjecture::Stars),
            "triangle_free" | "triangle-free" => Ok(Conjecture::TriangleFree),
            _ => Err(CheckError::InvalidParameter(format!("unknown conjecture {s:?}"))),
        }
    }
}

/// Instances to sweep for each conjecture.
#[derive(Debug, Clone)]
pub struct ConjectureRanges {
    pub cycle_lengths: Vec<usize>,
    pub cycle_scopes: Vec<Scope>,
    pub star_sizes: Vec<usize>,
    pub star_scopes: Vec<Scope>,
    /// `(label, H)` pairs.
    pub triangle_free_targets: Vec<(String, TargetGraph)>,
    pub triangle_free_scopes: Vec<Scope>,
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    ctx: &Context,
    check: &str,
    target: String,
    backing: Backing,
    scope: Scope,
    filters: Filters,
    h: &TargetGraph,
    reference: SimpleGraph,
) -> Result<CheckReport, CheckError> {
    let eval = |g: &SimpleGraph| partition_z_fast(g, h);
    let recount = |g: &SimpleGraph| recount_z(g, h);
    Sweep { check: check.into(), target, backing, scope, filters, reference, evaluate: &eval, recount: &recount }.run(ctx)
}

/// `p(G) <= p(K_{d+1})` for the fully looped cycle `C_k^o`. Even `k >= 6` is
/// covered by the extended line graph theorem (`C_k^o` is the extended line
/// graph of `C_k`) and is checked as such.
pub fn check_cycle_conjecture(ctx: &Context, k: usize, scope: Scope) -> Result<CheckReport, CheckError> {
    if k < 3 {
        return Err(CheckError::InvalidParameter(format!("cycle length {k} < 3")));
    }
    let h = add_loops(&TargetGraph::from(&cycle(k)));
    let backing = if k >= 6 && k.is_multiple_of(2) { Backing::Theorem } else { Backing::Conjecture };
    let mut rep = sweep(ctx, "conj-cycles", format!("cycle:{k}:looped"), backing, scope, Filters::NONE, &h, complete(scope.d + 1))?;
    if k < 4 {
        rep.summary.notes.push("cycle length below 4 is outside the conjecture's stated range".into());
    }
    Ok(rep)
}

/// For `k = 4`: `p(G) <= p(K_{d+1})` with `H = S_4^o`. For `k >= 6`:
/// `p(G) <= p(K_{d,d})` with `H = S_k^o`. The statement is made for `d >= 4`;
/// smaller degrees run anyway and are flagged in the notes.
pub fn check_star_conjecture(ctx: &Context, k: usize, scope: Scope) -> Result<CheckReport, CheckError> {
    let reference = match k {
        4 => complete(scope.d + 1),
        k if k >= 6 => complete_bipartite(scope.d, scope.d),
        _ => return Err(CheckError::InvalidParameter(format!("star conjecture covers k = 4 and k >= 6, got {k}"))),
    };
    let h = add_loops(&TargetGraph::from(&star(k)));
    let mut rep = sweep(ctx, "conj-stars", format!("star:{k}:looped"), Backing::Conjecture, scope, Filters::NONE, &h, reference)?;
    if scope.d < 4 {
        rep.summary.notes.push("d < 4 is outside the conjecture's stated range".into());
    }
    Ok(rep)
}

/// `p(G) <= p(K_{d,d})` over triangle-free census graphs.
pub fn check_triangle_free_conjecture(ctx: &Context, h: &TargetGraph, label: &str, scope: Scope) -> Result<CheckReport, CheckError> {
    sweep(ctx, "conj-triangle-free", label.into(), Backing::Conjecture, scope, Filters::triangle_free(), h, complete_bipartite(scope.d, scope.d))
}

pub fn check_conjectures(ctx: &Context, which: Conjecture, ranges: &ConjectureRanges) -> Result<Vec<CheckReport>, CheckError> {
    let mut out = Vec::new();
    match which {
        Conjecture::Cycles => {
            for &k in &ranges.cycle_lengths {
                for &s in &ranges.cycle_scopes {
                    out.push(check_cycle_conjecture(ctx, k, s)?);
                }
            }
        }
        Conjecture::Stars => {
            for &k in &ranges.star_sizes {
                for &s in &ranges.star_scopes {
                    out.push(check_star_conjecture(ctx, k, s)?);
                }
            }
        }
        Conjecture::TriangleFree => {
            for (label, h) in &ranges.triangle_free_targets {
                for &s in &ranges.triangle_free_scopes {
                    out.push(check_triangle_free_conjecture(ctx, h, label, s)?);
                }
            }
        }
    }
    Ok(out)
}
