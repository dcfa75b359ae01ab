//! Sweeps whose outcome is guaranteed by a theorem: any counterexample is a bug.

use homlab_core::census::Filters;
use homlab_core::constructions::{complete, complete_bipartite, extended_line_graph, h_wr};
use homlab_core::partition::{partition_z_fast, partition_zb};
use homlab_core::{BipartiteTarget, SimpleGraph};

use super::{recount_z, recount_zb, CheckError, Context, Scope, Sweep};
use crate::report::{Backing, CheckReport};

fn require_degree(scope: Scope) -> Result<(), CheckError> {
    if scope.d == 0 {
        return Err(CheckError::InvalidParameter("degree must be positive".into()));
    }
    Ok(())
}

/// `hom(G, H_WR)^(d+1) <= hom(K_{d+1}, H_WR)^n` over the full census.
pub fn check_wr_extremality(ctx: &Context, scope: Scope) -> Result<CheckReport, CheckError> {
    require_degree(scope)?;
    let h = h_wr();
    let eval = |g: &SimpleGraph| partition_z_fast(g, &h);
    let recount = |g: &SimpleGraph| recount_z(g, &h);
    Sweep {
        check: "wr".into(),
        target: "wr".into(),
        backing: Backing::Theorem,
        scope,
        filters: Filters::NONE,
        reference: complete(scope.d + 1),
        evaluate: &eval,
        recount: &recount,
    }
    .run(ctx)
}

/// `Z(G, H~)^(d+1) <= Z(K_{d+1}, H~)^n` for the extended line graph of a
/// weighted bipartite `H`.
pub fn check_extended_extremality(ctx: &Context, h: &BipartiteTarget, label: &str, scope: Scope) -> Result<CheckReport, CheckError> {
    require_degree(scope)?;
    let line = extended_line_graph(h);
    if line.n() == 0 {
        return Err(CheckError::InvalidParameter("target has no edges".into()));
    }
    let eval = |g: &SimpleGraph| partition_z_fast(g, &line);
    let recount = |g: &SimpleGraph| recount_z(g, &line);
    Sweep {
        check: "ext".into(),
        target: label.into(),
        backing: Backing::Theorem,
        scope,
        filters: Filters::NONE,
        reference: complete(scope.d + 1),
        evaluate: &eval,
        recount: &recount,
    }
    .run(ctx)
}

fn as_bipartite(g: &SimpleGraph) -> BipartiteTarget {
    BipartiteTarget::from_simple(g).expect("bipartite census graphs have a bipartition")
}

/// `Z_b(G, H)^(2d) <= Z_b(K_{d,d}, H)^n` over bipartite census graphs, each
/// with the bipartition from `bipartition_of`.
pub fn check_kahn_baseline(ctx: &Context, h: &BipartiteTarget, label: &str, scope: Scope) -> Result<CheckReport, CheckError> {
    require_degree(scope)?;
    let eval = |g: &SimpleGraph| partition_zb(&as_bipartite(g), h);
    let recount = |g: &SimpleGraph| recount_zb(&as_bipartite(g), h);
    Sweep {
        check: "kahn".into(),
        target: label.into(),
        backing: Backing::Theorem,
        scope,
        filters: Filters::bipartite(),
        reference: complete_bipartite(scope.d, scope.d),
        evaluate: &eval,
        recount: &recount,
    }
    .run(ctx)
}
