//! Exact identities between counts and isomorphisms between constructions.

use std::time::Instant;

use homlab_core::census::Filters;
use homlab_core::constructions::{
    add_loops, bipartite_product, complete, cycle, double_cover_plus_matching, exponential_graph, extended_line_graph, h_ind, h_wr, h_wr_weighted,
    looped_part, path, petersen, tensor_product,
};
use homlab_core::partition::{partition_z_fast, partition_zb};
use homlab_core::rational::ratio;
use homlab_core::{are_isomorphic, BipartiteTarget, ExactValue, SimpleGraph, TargetGraph};
use rayon::prelude::*;

use super::{audit, recount_z, CheckError, Context, Scope};
use crate::graph6;
use crate::random::{bipartite_target, simple_graph, stream_rng, target};
use crate::report::{Backing, CheckReport, Outcome, Record};
use crate::target_json::to_json;

/// Sizes and trial counts of the identity suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityConfig {
    /// Censuses on which `hom(G, H_WR) = hom(G', H_ind)` is checked; empty
    /// skips the census part.
    pub census_scopes: Vec<Scope>,
    pub include_petersen: bool,
    pub ext_cover_trials: usize,
    pub ext_cover_max_source_vertices: usize,
    pub ext_cover_max_target_side: usize,
    pub ext_cover_max_target_edges: usize,
    /// Numerators and denominators of random weights lie in `1..=max_weight`.
    pub max_weight: u32,
    pub tensor_trials: usize,
    pub tensor_max_source_vertices: usize,
    pub tensor_max_factor_vertices: usize,
    pub product_trials: usize,
    pub product_max_side: usize,
    pub product_max_edges: usize,
}

fn matched(graph6: String, n: usize, label: String, value: String, reference: String) -> Record {
    let ok = value == reference;
    Record { graph6, n, label: Some(label), value, reference, outcome: Outcome::matching(ok), ok }
}

fn iso_record(label: &str, x: &TargetGraph, y: &TargetGraph) -> Record {
    let verdict = |b: bool| if b { "isomorphic" } else { "not isomorphic" }.to_string();
    matched(String::new(), 0, label.into(), verdict(are_isomorphic(x, y)), verdict(true))
}

fn bipartite_json(h: &BipartiteTarget) -> String {
    format!("{} A={:?}", to_json(h.graph()), h.part_a())
}

fn wr_weighted_from_path() -> (TargetGraph, TargetGraph) {
    let (lb, lw, lr) = (ratio(2, 1), ratio(3, 2), ratio(5, 1));
    let weights = vec![ratio(1, 1), lb.clone(), &lw / &lb, &lr * &lb / &lw];
    let p4 = BipartiteTarget::from_simple(&path(4)).and_then(|h| h.with_weights(weights)).expect("valid weights");
    (extended_line_graph(&p4), h_wr_weighted(lb, lw, lr))
}

fn structural_records() -> Result<Vec<Record>, CheckError> {
    let p4 = BipartiteTarget::from_simple(&path(4)).expect("paths are bipartite");
    let c4 = BipartiteTarget::from_simple(&cycle(4)).expect("even cycles are bipartite");
    let l_exp = looped_part(&exponential_graph(&h_ind(), &complete(2))?);
    let (weighted_line, weighted_wr) = wr_weighted_from_path();
    Ok(vec![
        iso_record("ext-line(path:4) ~ wr", &extended_line_graph(&p4), &h_wr()),
        iso_record("looped-part(ind^K2) ~ wr", &l_exp, &h_wr()),
        iso_record("ext-line(cycle:4) ~ complete:4:looped", &extended_line_graph(&c4), &add_loops(&TargetGraph::from(&complete(4)))),
        iso_record("ext-line(weighted path:4) ~ wr:lb=2,lw=3/2,lr=5", &weighted_line, &weighted_wr),
    ])
}

/// Census graphs, their `hom(G, H_WR)` values, and the records.
type CoverRun = (Vec<SimpleGraph>, Vec<ExactValue>, Vec<Record>);

fn double_cover_records(ctx: &Context, cfg: &IdentityConfig) -> Result<CoverRun, CheckError> {
    let mut graphs = Vec::new();
    for &s in &cfg.census_scopes {
        graphs.extend(ctx.census_graphs(s, Filters::NONE)?);
    }
    if cfg.include_petersen {
        graphs.push(petersen());
    }
    let (wr, ind) = (h_wr(), h_ind());
    let pairs: Vec<(ExactValue, ExactValue)> = graphs
        .par_iter()
        .map(|g| {
            let cover = double_cover_plus_matching(g).to_simple();
            (partition_z_fast(g, &wr), partition_z_fast(&cover, &ind))
        })
        .collect();
    let records =
        graphs.iter().zip(&pairs).map(|(g, (a, b))| matched(graph6::encode(g), g.n(), "double-cover".into(), a.to_string(), b.to_string())).collect();
    Ok((graphs, pairs.into_iter().map(|p| p.0).collect(), records))
}

/// `Z(G, H~) = Z_b(G', H)` on random weighted instances.
fn ext_cover_records(ctx: &Context, cfg: &IdentityConfig) -> Vec<Record> {
    let mut rng = stream_rng(ctx.seed, "identities/ext-cover");
    let trials: Vec<(SimpleGraph, BipartiteTarget)> = (0..cfg.ext_cover_trials)
        .map(|_| {
            let g = simple_graph(&mut rng, cfg.ext_cover_max_source_vertices);
            let h = bipartite_target(&mut rng, cfg.ext_cover_max_target_side, cfg.ext_cover_max_target_edges, cfg.max_weight);
            (g, h)
        })
        .collect();
    trials
        .par_iter()
        .enumerate()
        .map(|(i, (g, h))| {
            let lhs = partition_z_fast(g, &extended_line_graph(h));
            let rhs = partition_zb(&double_cover_plus_matching(g), h);
            matched(graph6::encode(g), g.n(), format!("ext-cover#{i} H={}", bipartite_json(h)), lhs.to_string(), rhs.to_string())
        })
        .collect()
}

/// `Z(G, H1 x H2) = Z(G, H1) Z(G, H2)`.
fn tensor_records(ctx: &Context, cfg: &IdentityConfig) -> Vec<Record> {
    let mut rng = stream_rng(ctx.seed, "identities/tensor");
    let trials: Vec<(SimpleGraph, TargetGraph, TargetGraph)> = (0..cfg.tensor_trials)
        .map(|_| {
            let g = simple_graph(&mut rng, cfg.tensor_max_source_vertices);
            let h1 = target(&mut rng, cfg.tensor_max_factor_vertices, cfg.max_weight);
            let h2 = target(&mut rng, cfg.tensor_max_factor_vertices, cfg.max_weight);
            (g, h1, h2)
        })
        .collect();
    trials
        .par_iter()
        .enumerate()
        .map(|(i, (g, h1, h2))| {
            let lhs = partition_z_fast(g, &tensor_product(h1, h2));
            let rhs = partition_z_fast(g, h1) * partition_z_fast(g, h2);
            let label = format!("tensor#{i} H1={} H2={}", to_json(h1), to_json(h2));
            matched(graph6::encode(g), g.n(), label, lhs.to_string(), rhs.to_string())
        })
        .collect()
}

/// `H1~ x H2~ ~ (H1 x H2)~` for random bipartite pairs.
fn product_records(ctx: &Context, cfg: &IdentityConfig) -> Vec<Record> {
    let mut rng = stream_rng(ctx.seed, "identities/product");
    let pairs: Vec<(BipartiteTarget, BipartiteTarget)> = (0..cfg.product_trials)
        .map(|_| {
            let h1 = bipartite_target(&mut rng, cfg.product_max_side, cfg.product_max_edges, cfg.max_weight);
            let h2 = bipartite_target(&mut rng, cfg.product_max_side, cfg.product_max_edges, cfg.max_weight);
            (h1, h2)
        })
        .collect();
    pairs
        .par_iter()
        .enumerate()
        .map(|(i, (h1, h2))| {
            let lhs = tensor_product(&extended_line_graph(h1), &extended_line_graph(h2));
            let rhs = extended_line_graph(&bipartite_product(h1, h2));
            iso_record(&format!("product#{i} H1={} H2={}", bipartite_json(h1), bipartite_json(h2)), &lhs, &rhs)
        })
        .collect()
}

/// Runs the whole suite as one report. With `ctx.audit`, a sample of the
/// double-cover records is recounted by an independent engine.
pub fn check_transform_identities(ctx: &Context, cfg: &IdentityConfig) -> Result<CheckReport, CheckError> {
    let start = Instant::now();
    let mut records = structural_records()?;
    let (graphs, values, cover) = double_cover_records(ctx, cfg)?;
    records.extend(cover);
    records.extend(ext_cover_records(ctx, cfg));
    records.extend(tensor_records(ctx, cfg));
    records.extend(product_records(ctx, cfg));
    let mut rep = CheckReport::new("identities", "various", Backing::Theorem, None, records);
    let scopes: Vec<String> = cfg.census_scopes.iter().map(Scope::to_string).collect();
    rep.summary.notes.push(format!(
        "double-cover scopes [{}]{}; ext-cover trials {}; tensor trials {}; product trials {}",
        scopes.join(", "),
        if cfg.include_petersen { " + petersen" } else { "" },
        cfg.ext_cover_trials,
        cfg.tensor_trials,
        cfg.product_trials
    ));
    if ctx.audit {
        let wr = h_wr();
        let recount = |g: &SimpleGraph| recount_z(g, &wr);
        rep.summary.audit = Some(audit(ctx, "identities", "double-cover", &graphs, &values, &recount));
    }
    rep.wall_time = start.elapsed();
    Ok(rep)
}
