//! TOML run configuration. Every key is required so that a config file fully
//! determines a run.

use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context as _};
use homlab_core::constructions::{make_family, Built, FamilySpec};
use homlab_core::{BipartiteTarget, TargetGraph};
use serde::Deserialize;

use crate::checks::{
    check_conjectures, check_extended_extremality, check_kahn_baseline, check_transform_identities, check_wr_extremality, crossover_report,
    find_star_crossover, Conjecture, ConjectureRanges, Context, IdentityConfig, Scope,
};
use crate::random::{stream_rng, weights};
use crate::report::CheckReport;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    pub audit: bool,
    pub census: CensusSection,
    pub identities: IdentitiesSection,
    pub wr: WrSection,
    pub ext: ExtSection,
    pub kahn: KahnSection,
    pub conj: ConjSection,
    pub crossover: CrossoverSection,
}

/// Master switch for everything that enumerates a census.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusSection {
    pub enabled: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentitiesSection {
    pub enabled: bool,
    pub census_scopes: Vec<String>,
    pub include_petersen: bool,
    pub ext_cover_trials: usize,
    pub ext_cover_max_source_vertices: usize,
    pub ext_cover_max_target_side: usize,
    pub ext_cover_max_target_edges: usize,
    pub max_weight: u32,
    pub tensor_trials: usize,
    pub tensor_max_source_vertices: usize,
    pub tensor_max_factor_vertices: usize,
    pub product_trials: usize,
    pub product_max_side: usize,
    pub product_max_edges: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WrSection {
    pub enabled: bool,
    pub scopes: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtSection {
    pub enabled: bool,
    pub targets: Vec<String>,
    /// Random weightings per target, in addition to unit weights.
    pub random_weightings: usize,
    pub max_weight: u32,
    pub scopes: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KahnSection {
    pub enabled: bool,
    pub targets: Vec<String>,
    pub scopes: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConjSection {
    pub enabled: bool,
    pub cycle_lengths: Vec<usize>,
    pub cycle_scopes: Vec<String>,
    pub star_sizes: Vec<usize>,
    pub star_scopes: Vec<String>,
    pub triangle_free_targets: Vec<String>,
    pub triangle_free_scopes: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossoverSection {
    pub enabled: bool,
    pub star_sizes: Vec<usize>,
    pub d_max: usize,
}

/// The configuration shipped as `configs/default.toml`.
pub const DEFAULT_CONFIG: &str = include_str!("../../../configs/default.toml");

impl Config {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let cfg: Config = toml::from_str(text).context("malformed config")?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Config::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn default_config() -> Self {
        Config::parse(DEFAULT_CONFIG).expect("shipped default config is valid")
    }

    /// Checks everything that can be checked without running: scope syntax
    /// and census caps, family specs, and exponent ranges.
    fn validate(&self) -> anyhow::Result<()> {
        let all_scopes = [
            &self.identities.census_scopes,
            &self.wr.scopes,
            &self.ext.scopes,
            &self.kahn.scopes,
            &self.conj.cycle_scopes,
            &self.conj.star_scopes,
            &self.conj.triangle_free_scopes,
        ];
        for list in all_scopes {
            scopes(list)?;
        }
        for t in self.ext.targets.iter().chain(&self.kahn.targets) {
            bipartite_family(t)?;
        }
        for t in &self.conj.triangle_free_targets {
            family(t)?;
        }
        if self.crossover.d_max == 0 {
            bail!("crossover.d_max must be positive");
        }
        Ok(())
    }
}

pub fn scopes(list: &[String]) -> anyhow::Result<Vec<Scope>> {
    list.iter()
        .map(|s| {
            let scope: Scope = s.parse()?;
            let cap = homlab_core::census::census_cap(scope.d, false);
            if scope.d == 0 || scope.n_max > cap {
                bail!("scope {s:?} outside the census range (d >= 1, n_max <= {cap})");
            }
            Ok(scope)
        })
        .collect()
}

pub fn family(spec: &str) -> anyhow::Result<TargetGraph> {
    let spec: FamilySpec = spec.parse()?;
    Ok(make_family(&spec)?.into_target())
}

/// A family spec that builds a bipartite simple graph.
pub fn bipartite_family(spec: &str) -> anyhow::Result<BipartiteTarget> {
    let parsed: FamilySpec = spec.parse()?;
    match make_family(&parsed)? {
        Built::Simple(g) => BipartiteTarget::from_simple(&g).with_context(|| format!("{spec} is not bipartite")),
        Built::Target(_) => bail!("{spec} is not a simple bipartite graph"),
    }
}

impl IdentitiesSection {
    /// Without the census the whole double-cover part, Petersen included, is
    /// skipped.
    pub fn to_identity_config(&self, census: bool) -> anyhow::Result<IdentityConfig> {
        Ok(IdentityConfig {
            census_scopes: if census { scopes(&self.census_scopes)? } else { Vec::new() },
            include_petersen: census && self.include_petersen,
            ext_cover_trials: self.ext_cover_trials,
            ext_cover_max_source_vertices: self.ext_cover_max_source_vertices,
            ext_cover_max_target_side: self.ext_cover_max_target_side,
            ext_cover_max_target_edges: self.ext_cover_max_target_edges,
            max_weight: self.max_weight,
            tensor_trials: self.tensor_trials,
            tensor_max_source_vertices: self.tensor_max_source_vertices,
            tensor_max_factor_vertices: self.tensor_max_factor_vertices,
            product_trials: self.product_trials,
            product_max_side: self.product_max_side,
            product_max_edges: self.product_max_edges,
        })
    }
}

/// Target label with explicit weights, e.g. `path:4 weights=[1,2,1/3,5]`.
pub fn weighted_label(spec: &str, h: &BipartiteTarget) -> String {
    if h.graph().is_unweighted() {
        return spec.to_string();
    }
    let ws: Vec<String> = h.graph().weights().iter().map(homlab_core::rational::fraction_string).collect();
    format!("{spec} weights=[{}]", ws.join(","))
}

/// `H` with unit weights followed by `count` seeded random weightings.
pub fn weightings(seed: u64, spec: &str, h: &BipartiteTarget, count: usize, max_weight: u32) -> Vec<BipartiteTarget> {
    let mut rng = stream_rng(seed, &format!("weights/{spec}"));
    let mut out = vec![h.clone()];
    for _ in 0..count {
        let ws = weights(&mut rng, h.n(), max_weight);
        out.push(h.clone().with_weights(ws).expect("one positive weight per vertex"));
    }
    out
}

/// Runs every enabled check in a fixed order.
pub fn run_all(cfg: &Config) -> anyhow::Result<Vec<CheckReport>> {
    let ctx = Context::new(cfg.seed, cfg.audit);
    let census = cfg.census.enabled;
    let mut reports = Vec::new();
    if cfg.identities.enabled {
        reports.push(check_transform_identities(&ctx, &cfg.identities.to_identity_config(census)?)?);
    }
    if census && cfg.wr.enabled {
        for s in scopes(&cfg.wr.scopes)? {
            reports.push(check_wr_extremality(&ctx, s)?);
        }
    }
    if census && cfg.ext.enabled {
        for spec in &cfg.ext.targets {
            let h = bipartite_family(spec)?;
            for hw in weightings(cfg.seed, spec, &h, cfg.ext.random_weightings, cfg.ext.max_weight) {
                for s in scopes(&cfg.ext.scopes)? {
                    reports.push(check_extended_extremality(&ctx, &hw, &weighted_label(spec, &hw), s)?);
                }
            }
        }
    }
    if census && cfg.kahn.enabled {
        for spec in &cfg.kahn.targets {
            let h = bipartite_family(spec)?;
            for s in scopes(&cfg.kahn.scopes)? {
                reports.push(check_kahn_baseline(&ctx, &h, spec, s)?);
            }
        }
    }
    if census && cfg.conj.enabled {
        let ranges = ConjectureRanges {
            cycle_lengths: cfg.conj.cycle_lengths.clone(),
            cycle_scopes: scopes(&cfg.conj.cycle_scopes)?,
            star_sizes: cfg.conj.star_sizes.clone(),
            star_scopes: scopes(&cfg.conj.star_scopes)?,
            triangle_free_targets: cfg.conj.triangle_free_targets.iter().map(|t| Ok((t.clone(), family(t)?))).collect::<anyhow::Result<_>>()?,
            triangle_free_scopes: scopes(&cfg.conj.triangle_free_scopes)?,
        };
        for which in [Conjecture::Cycles, Conjecture::Stars, Conjecture::TriangleFree] {
            reports.extend(check_conjectures(&ctx, which, &ranges)?);
        }
    }
    if cfg.crossover.enabled {
        for &k in &cfg.crossover.star_sizes {
            let start = Instant::now();
            let mut rep = crossover_report(&find_star_crossover(k, 1..=cfg.crossover.d_max)?);
            rep.wall_time = start.elapsed();
            reports.push(rep);
        }
    }
    Ok(reports)
}
