use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};
use homlab::checks::{
    check_conjectures, check_extended_extremality, check_kahn_baseline, check_wr_extremality, crossover_report, find_star_crossover, Conjecture,
    ConjectureRanges, Context, Scope,
};
use homlab::config::{bipartite_family, family, run_all, weighted_label, weightings, Config};
use homlab::report::{write_reports, CheckReport, Format, WriteOptions};
use homlab::{graph6, target_json};
use homlab_core::census::{census_count, enumerate_regular, Filters};
use homlab_core::constructions::{
    add_loops, bipartite_product, double_cover_plus_matching, exponential_graph, extended_line_graph, looped_part, tensor_product,
};
use homlab_core::partition::{
    brute_force_z, brute_force_zb, hom_count_dp, min_degree_order, partition_z, partition_z_fast, partition_zb, partition_zb_backtrack,
};
use homlab_core::rational::parse_fraction;
use homlab_core::{BipartiteTarget, SimpleGraph, TargetGraph};

#[derive(Parser)]
#[command(name = "homlab", version, about = "Exact homomorphism counts and extremality checks over regular-graph censuses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List d-regular graphs up to isomorphism as graph6.
    Census(CensusArgs),
    /// Count homomorphisms (or the weighted partition function) from G into H.
    Count(CountArgs),
    /// Apply a graph transformation.
    Transform(TransformArgs),
    /// hom(G, H_WR) against K_{d+1} over the census.
    CheckWr(SweepArgs),
    /// Z(G, extended line graph of H) against K_{d+1}.
    CheckExt(ExtArgs),
    /// Z_b(G, H) against K_{d,d} over bipartite census graphs.
    CheckKahn(KahnArgs),
    /// Sweep one of the open conjectures.
    CheckConj(ConjArgs),
    /// Compare K_{d+1} and K_{d,d} into the fully looped star S_k^o.
    Crossover(CrossoverArgs),
    /// Run every check enabled in a config file.
    RunAll(RunAllArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Include wall time in reports (output is then no longer reproducible).
    #[arg(long)]
    timings: bool,
}

impl OutputArgs {
    fn writer(&self) -> anyhow::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    fn options(&self) -> WriteOptions {
        let format = match self.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        };
        WriteOptions { format, timings: self.timings }
    }
}

#[derive(Args)]
struct FilterArgs {
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    bipartite: bool,
    #[arg(long)]
    triangle_free: bool,
}

impl FilterArgs {
    fn filters(&self) -> Filters {
        Filters { connected: self.connected, bipartite: self.bipartite, triangle_free: self.triangle_free }
    }
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    d: usize,
    /// Exactly this many vertices.
    #[arg(long, conflicts_with = "n_max", required_unless_present = "n_max")]
    n: Option<usize>,
    /// Every vertex count up to this one (skipping odd n*d).
    #[arg(long)]
    n_max: Option<usize>,
    #[command(flatten)]
    filters: FilterArgs,
    /// Print only the number of graphs per n.
    #[arg(long)]
    count: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "target_source")]
struct TargetArgs {
    /// Target family, e.g. `wr`, `ind`, `path:4`, `cycle:6:looped`, `wr:lb=2,lw=1,lr=3`.
    #[arg(long)]
    target: Option<String>,
    /// Target graph in the JSON format.
    #[arg(long)]
    target_json: Option<PathBuf>,
}

impl TargetArgs {
    fn load(&self) -> anyhow::Result<TargetGraph> {
        match (&self.target, &self.target_json) {
            (Some(spec), _) => family(spec),
            (None, Some(path)) => read_target_json(path),
            (None, None) => unreachable!("clap requires one target source"),
        }
    }
}

fn read_target_json(path: &PathBuf) -> anyhow::Result<TargetGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    target_json::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn bipartite_of(h: &TargetGraph) -> anyhow::Result<BipartiteTarget> {
    if !h.looped_vertices().is_empty() {
        bail!("target has loops, so it has no bipartition");
    }
    let simple = SimpleGraph::build(h.n(), &h.edges())?;
    let (a, _) = simple.bipartition_of().context("target is not bipartite")?;
    Ok(BipartiteTarget::new(h.clone(), &a)?)
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    /// Variable elimination, falling back to backtracking.
    Auto,
    Dp,
    Backtrack,
    Brute,
}

#[derive(Args)]
struct CountArgs {
    /// Source graph as graph6.
    #[arg(long)]
    graph: String,
    #[command(flatten)]
    target: TargetArgs,
    #[arg(long, value_enum, default_value = "auto")]
    engine: Engine,
    /// Count bipartition-preserving maps (Z_b), using `bipartition_of` on
    /// both graphs.
    #[arg(long)]
    zb: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    /// G -> G' (graph6 in, graph6 out).
    DoubleCover,
    /// Extended line graph of a bipartite target.
    ExtLine,
    AddLoops,
    LoopedPart,
    /// Tensor product with `--target2`/`--target2-json`.
    Tensor,
    /// Product of two bipartite targets whose extended line graph is the
    /// tensor of theirs.
    BipartiteProduct,
    /// H^A with A given by `--exponent`.
    Exponential,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    op: Op,
    /// Source graph (graph6) for `double-cover`.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    target: Option<String>,
    #[arg(long)]
    target_json: Option<PathBuf>,
    #[arg(long)]
    target2: Option<String>,
    #[arg(long)]
    target2_json: Option<PathBuf>,
    /// Exponent graph A (graph6) for `exponential`.
    #[arg(long)]
    exponent: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepParams {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Recount a seeded 1% sample of records with an independent engine.
    #[arg(long)]
    audit: bool,
}

impl SweepParams {
    fn scope(&self) -> Scope {
        Scope::new(self.d, self.n_max)
    }

    fn context(&self) -> Context {
        Context::new(self.seed, self.audit)
    }
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    sweep: SweepParams,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ExtArgs {
    /// Bipartite target family, e.g. `path:5` or `cycle:6`.
    #[arg(long)]
    target: String,
    /// Comma-separated vertex weights, e.g. `1,2/3,5,1`.
    #[arg(long, conflicts_with = "random_weightings")]
    weights: Option<String>,
    /// Also run this many seeded random weightings.
    #[arg(long, default_value_t = 0)]
    random_weightings: usize,
    #[arg(long, default_value_t = 10)]
    max_weight: u32,
    #[command(flatten)]
    sweep: SweepParams,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct KahnArgs {
    #[arg(long)]
    target: String,
    #[command(flatten)]
    sweep: SweepParams,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Cycles,
    Stars,
    TriangleFree,
}

#[derive(Args)]
struct ConjArgs {
    #[arg(long, value_enum)]
    which: Which,
    /// Cycle lengths or star sizes (comma-separated).
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    /// Targets for `triangle-free` (repeatable).
    #[arg(long)]
    target: Vec<String>,
    #[command(flatten)]
    sweep: SweepParams,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CrossoverArgs {
    /// Number of vertices of the star.
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    d_min: usize,
    #[arg(long, default_value_t = 30)]
    d_max: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct RunAllArgs {
    /// Config file; the shipped default config when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override the config seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Force auditing on.
    #[arg(long)]
    audit: bool,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_weights(s: &str) -> anyhow::Result<Vec<homlab_core::Rational>> {
    s.split(',').map(|w| parse_fraction(w.trim()).map_err(|e| anyhow::anyhow!("weight {w:?}: {e}"))).collect()
}

fn decode(s: &str) -> anyhow::Result<SimpleGraph> {
    graph6::decode(s).with_context(|| format!("graph6 {s:?}"))
}

fn emit(reports: &[CheckReport], output: &OutputArgs) -> anyhow::Result<bool> {
    let mut w = output.writer()?;
    write_reports(&mut w, reports, output.options())?;
    w.flush()?;
    let mut failed = false;
    for r in reports {
        eprintln!("{}", r.headline());
        if output.timings {
            eprintln!("      wall time {:.3}s", r.wall_time.as_secs_f64());
        }
        failed |= r.is_failure();
    }
    Ok(!failed)
}

fn census(args: &CensusArgs) -> anyhow::Result<()> {
    let filters = args.filters.filters();
    let sizes: Vec<usize> = match (args.n, args.n_max) {
        (Some(n), _) => vec![n],
        (None, Some(m)) => (1..=m).filter(|n| (n * args.d).is_multiple_of(2)).collect(),
        (None, None) => unreachable!("clap requires --n or --n-max"),
    };
    let mut w: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for n in sizes {
        if args.count {
            writeln!(w, "n={n} d={} filters={filters} count={}", args.d, census_count(n, args.d, filters)?)?;
            continue;
        }
        writeln!(w, "#census n={n} d={} filters={filters}", args.d)?;
        for r in enumerate_regular(n, args.d, filters)? {
            writeln!(w, "{}", graph6::encode(&r.graph))?;
        }
    }
    w.flush()?;
    Ok(())
}

fn count(args: &CountArgs) -> anyhow::Result<()> {
    let g = decode(&args.graph)?;
    let h = args.target.load()?;
    let value = if args.zb {
        let gb = BipartiteTarget::from_simple(&g).context("source graph is not bipartite")?;
        let hb = bipartite_of(&h)?;
        match args.engine {
            Engine::Auto | Engine::Dp => partition_zb(&gb, &hb),
            Engine::Backtrack => partition_zb_backtrack(&gb, &hb),
            Engine::Brute => brute_force_zb(&gb, &hb),
        }
    } else {
        match args.engine {
            Engine::Auto => partition_z_fast(&g, &h),
            Engine::Dp => hom_count_dp(&g, &h, &min_degree_order(g.adjacency()))?,
            Engine::Backtrack => partition_z(&g, &h),
            Engine::Brute => brute_force_z(&g, &h),
        }
    };
    println!("{value}");
    Ok(())
}

fn transform(args: &TransformArgs) -> anyhow::Result<()> {
    let first = || -> anyhow::Result<TargetGraph> {
        match (&args.target, &args.target_json) {
            (Some(s), _) => family(s),
            (None, Some(p)) => read_target_json(p),
            (None, None) => bail!("--target or --target-json is required"),
        }
    };
    let second = || -> anyhow::Result<TargetGraph> {
        match (&args.target2, &args.target2_json) {
            (Some(s), _) => family(s),
            (None, Some(p)) => read_target_json(p),
            (None, None) => bail!("--target2 or --target2-json is required"),
        }
    };
    let text = match args.op {
        Op::DoubleCover => {
            let g = decode(args.graph.as_deref().context("--graph is required")?)?;
            graph6::encode(&double_cover_plus_matching(&g).to_simple())
        }
        Op::ExtLine => target_json::to_json(&extended_line_graph(&bipartite_of(&first()?)?)),
        Op::AddLoops => target_json::to_json(&add_loops(&first()?)),
        Op::LoopedPart => target_json::to_json(&looped_part(&first()?)),
        Op::Tensor => target_json::to_json(&tensor_product(&first()?, &second()?)),
        Op::BipartiteProduct => {
            let p = bipartite_product(&bipartite_of(&first()?)?, &bipartite_of(&second()?)?);
            target_json::to_json(p.graph())
        }
        Op::Exponential => {
            let a = decode(args.exponent.as_deref().context("--exponent is required")?)?;
            target_json::to_json(&exponential_graph(&first()?, &a)?)
        }
    };
    match &args.out {
        Some(p) => std::fs::write(p, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Census(a) => census(&a).map(|_| true),
        Command::Count(a) => count(&a).map(|_| true),
        Command::Transform(a) => transform(&a).map(|_| true),
        Command::CheckWr(a) => {
            let rep = check_wr_extremality(&a.sweep.context(), a.sweep.scope())?;
            emit(&[rep], &a.output)
        }
        Command::CheckExt(a) => {
            let h = bipartite_family(&a.target)?;
            let targets = match &a.weights {
                Some(w) => vec![h.with_weights(parse_weights(w)?)?],
                None => weightings(a.sweep.seed, &a.target, &h, a.random_weightings, a.max_weight),
            };
            let ctx = a.sweep.context();
            let reports = targets
                .iter()
                .map(|hw| check_extended_extremality(&ctx, hw, &weighted_label(&a.target, hw), a.sweep.scope()))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&reports, &a.output)
        }
        Command::CheckKahn(a) => {
            let h = bipartite_family(&a.target)?;
            let rep = check_kahn_baseline(&a.sweep.context(), &h, &a.target, a.sweep.scope())?;
            emit(&[rep], &a.output)
        }
        Command::CheckConj(a) => {
            let scope = vec![a.sweep.scope()];
            let (which, default_k) = match a.which {
                Which::Cycles => (Conjecture::Cycles, vec![4, 5, 6, 7, 8]),
                Which::Stars => (Conjecture::Stars, vec![4, 6]),
                Which::TriangleFree => (Conjecture::TriangleFree, Vec::new()),
            };
            let k = if a.k.is_empty() { default_k } else { a.k.clone() };
            let targets = if a.target.is_empty() { vec!["wr".to_string()] } else { a.target.clone() };
            let ranges = ConjectureRanges {
                cycle_lengths: k.clone(),
                cycle_scopes: scope.clone(),
                star_sizes: k,
                star_scopes: scope.clone(),
                triangle_free_targets: targets.iter().map(|t| Ok((t.clone(), family(t)?))).collect::<anyhow::Result<_>>()?,
                triangle_free_scopes: scope,
            };
            let reports = check_conjectures(&a.sweep.context(), which, &ranges)?;
            emit(&reports, &a.output)
        }
        Command::Crossover(a) => {
            if a.d_min < 1 || a.d_min > a.d_max {
                bail!("need 1 <= d-min <= d-max");
            }
            let start = Instant::now();
            let mut rep = crossover_report(&find_star_crossover(a.k, a.d_min..=a.d_max)?);
            rep.wall_time = start.elapsed();
            emit(&[rep], &a.output)
        }
        Command::RunAll(a) => {
            let mut cfg = match &a.config {
                Some(p) => Config::load(p)?,
                None => Config::default_config(),
            };
            if let Some(s) = a.seed {
                cfg.seed = s;
            }
            cfg.audit |= a.audit;
            let start = Instant::now();
            let reports = run_all(&cfg)?;
            let ok = emit(&reports, &a.output)?;
            let failures = reports.iter().filter(|r| r.is_failure()).count();
            eprintln!("{} reports, {} failing theorem-backed or audit checks", reports.len(), failures);
            if a.output.timings {
                eprintln!("total wall time {:.3}s", start.elapsed().as_secs_f64());
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
