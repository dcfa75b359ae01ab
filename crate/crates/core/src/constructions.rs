//! Named graph families and the transformations between source and target graphs.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Signed;

use crate::bits::BitMatrix;
use crate::graph::{BipartiteTarget, SimpleGraph, TargetGraph};
use crate::rational::{fraction_string, parse_fraction, Rational};

/// Largest vertex count of an exponential graph `H^A`.
pub const EXPONENTIAL_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("exponential graph would have {size} vertices (cap {cap})")]
    ExponentialTooLarge { size: u128, cap: usize },
    #[error("cannot parse family {0:?}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Path on `k` vertices.
    Path(usize),
    Cycle(usize),
    /// `K_{1,k-1}`: centre `0`, leaves `1..k`.
    Star(usize),
    /// Vertex 0 unoccupied (looped), vertex 1 occupied.
    HardCore,
    /// Looped path `r - w - b`.
    WidomRowlinson,
    WeightedWidomRowlinson {
        blue: Rational,
        white: Rational,
        red: Rational,
    },
}

/// A family plus the optional "add a loop everywhere" modifier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub looped: bool,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, looped: false }
    }

    pub fn looped(family: Family) -> Self {
        FamilySpec { family, looped: true }
    }
}

impl From<Family> for FamilySpec {
    fn from(family: Family) -> Self {
        FamilySpec::new(family)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Built {
    Simple(SimpleGraph),
    Target(TargetGraph),
}

impl Built {
    pub fn into_target(self) -> TargetGraph {
        match self {
            Built::Simple(g) => TargetGraph::from(&g),
            Built::Target(t) => t,
        }
    }

    pub fn into_simple(self) -> Option<SimpleGraph> {
        match self {
            Built::Simple(g) => Some(g),
            Built::Target(_) => None,
        }
    }
}

pub fn make_family(spec: &FamilySpec) -> Result<Built, ConstructionError> {
    let invalid = |m: &str| Err(ConstructionError::InvalidParameter(m.into()));
    let built = match &spec.family {
        Family::Complete(k) if *k >= 1 => Built::Simple(complete(*k)),
        Family::CompleteBipartite(a, b) if *a >= 1 && *b >= 1 => Built::Simple(complete_bipartite(*a, *b)),
        Family::Path(k) if *k >= 1 => Built::Simple(path(*k)),
        Family::Cycle(k) if *k >= 3 => Built::Simple(cycle(*k)),
        Family::Star(k) if *k >= 1 => Built::Simple(star(*k)),
        Family::Complete(_) | Family::CompleteBipartite(..) | Family::Path(_) | Family::Star(_) => return invalid("sizes must be at least 1"),
        Family::Cycle(_) => return invalid("cycles need at least 3 vertices"),
        Family::HardCore => Built::Target(h_ind()),
        Family::WidomRowlinson => Built::Target(h_wr()),
        Family::WeightedWidomRowlinson { blue, white, red } => {
            if [blue, white, red].iter().any(|w| !w.is_positive()) {
                return invalid("Widom-Rowlinson weights must be positive");
            }
            Built::Target(h_wr_weighted(blue.clone(), white.clone(), red.clone()))
        }
    };
    Ok(if spec.looped { Built::Target(add_loops(&built.into_target())) } else { built })
}

pub fn complete(n: usize) -> SimpleGraph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    SimpleGraph::build(n, &e).expect("valid by construction")
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    let mut e = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            e.push((i, j));
        }
    }
    SimpleGraph::build(a + b, &e).expect("valid by construction")
}

pub fn path(k: usize) -> SimpleGraph {
    let e: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    SimpleGraph::build(k, &e).expect("valid by construction")
}

pub fn cycle(k: usize) -> SimpleGraph {
    assert!(k >= 3, "cycle needs at least 3 vertices");
    let e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    SimpleGraph::build(k, &e).expect("valid by construction")
}

pub fn star(k: usize) -> SimpleGraph {
    let e: Vec<_> = (1..k).map(|i| (0, i)).collect();
    SimpleGraph::build(k, &e).expect("valid by construction")
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram.
pub fn petersen() -> SimpleGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    SimpleGraph::build(10, &e).expect("valid by construction")
}

pub fn h_ind() -> TargetGraph {
    TargetGraph::from_edges(2, &[(0, 0), (0, 1)]).expect("valid by construction")
}

/// Vertex order `r, w, b`.
pub fn h_wr() -> TargetGraph {
    add_loops(&TargetGraph::from(&path(3)))
}

/// Widom-Rowlinson target with weights `(red, white, blue)` on `r, w, b`.
pub fn h_wr_weighted(blue: Rational, white: Rational, red: Rational) -> TargetGraph {
    h_wr().with_weights(vec![red, white, blue]).expect("weights checked by caller")
}

/// `H ↦ H^o`.
pub fn add_loops(h: &TargetGraph) -> TargetGraph {
    let mut adj = h.adjacency().clone();
    for v in 0..h.n() {
        adj.set(v, v, true);
    }
    TargetGraph::from_parts(adj, h.weights().to_vec()).expect("weights unchanged")
}

/// `G ↦ G'`: vertex `(u, 0)` is `u`, `(u, 1)` is `n + u`, with `(u,0) ~ (v,1)`
/// iff `uv ∈ E(G)` or `u = v`. Designated bipartition `(V×{0}, V×{1})`.
pub fn double_cover_plus_matching(g: &SimpleGraph) -> BipartiteTarget {
    let n = g.n();
    let mut adj = BitMatrix::new(2 * n);
    for u in 0..n {
        adj.set_sym(u, n + u, true);
        for v in g.neighbors(u) {
            adj.set_sym(u, n + v, true);
        }
    }
    let a: Vec<usize> = (0..n).collect();
    BipartiteTarget::new(TargetGraph::unweighted(adj), &a).expect("bipartite by construction")
}

/// Extended line graph together with the `(a, b)` edge of `H` behind each vertex.
///
/// Vertices are the edges of `H`, sorted by `(A-endpoint, B-endpoint)`, with
/// weight `ν(a)ν(b)`; `(a1,b1) ~ (a2,b2)` iff `a1b2` and `a2b1` are both edges.
pub fn extended_line_graph_labeled(h: &BipartiteTarget) -> (TargetGraph, Vec<(usize, usize)>) {
    let g = h.graph();
    let edges = h.oriented_edges();
    let m = edges.len();
    let mut adj = BitMatrix::new(m);
    for (i, &(a1, b1)) in edges.iter().enumerate() {
        for (j, &(a2, b2)) in edges.iter().enumerate().skip(i) {
            if g.has_edge(a1, b2) && g.has_edge(a2, b1) {
                adj.set_sym(i, j, true);
            }
        }
    }
    let weights = edges.iter().map(|&(a, b)| g.weight(a) * g.weight(b)).collect();
    let t = TargetGraph::from_parts(adj, weights).expect("products of positive weights");
    (t, edges)
}

/// `H ↦ H̃`.
pub fn extended_line_graph(h: &BipartiteTarget) -> TargetGraph {
    extended_line_graph_labeled(h).0
}

/// Categorical product; vertex `(a, b)` is `a * |V(H2)| + b`, weight `ν1(a)ν2(b)`.
pub fn tensor_product(h1: &TargetGraph, h2: &TargetGraph) -> TargetGraph {
    let (n1, n2) = (h1.n(), h2.n());
    let mut adj = BitMatrix::new(n1 * n2);
    for a1 in 0..n1 {
        for a2 in h1.neighbors(a1) {
            for b1 in 0..n2 {
                for b2 in h2.neighbors(b1) {
                    adj.set(a1 * n2 + b1, a2 * n2 + b2, true);
                }
            }
        }
    }
    let mut weights = Vec::with_capacity(n1 * n2);
    for a in 0..n1 {
        for b in 0..n2 {
            weights.push(h1.weight(a) * h2.weight(b));
        }
    }
    TargetGraph::from_parts(adj, weights).expect("products of positive weights")
}

/// `H12 = (A1×A2, B1×B2, E1×E2)` with product weights. `A` vertices come first,
/// pairs in lexicographic order.
pub fn bipartite_product(h1: &BipartiteTarget, h2: &BipartiteTarget) -> BipartiteTarget {
    let (a1, b1, a2, b2) = (h1.part_a(), h1.part_b(), h2.part_a(), h2.part_b());
    let pairs = |x: &[usize], y: &[usize]| -> Vec<(usize, usize)> { x.iter().flat_map(|&i| y.iter().map(move |&j| (i, j))).collect() };
    let side_a = pairs(&a1, &a2);
    let side_b = pairs(&b1, &b2);
    let na = side_a.len();
    let mut adj = BitMatrix::new(na + side_b.len());
    for (i, &(x1, x2)) in side_a.iter().enumerate() {
        for (j, &(y1, y2)) in side_b.iter().enumerate() {
            if h1.graph().has_edge(x1, y1) && h2.graph().has_edge(x2, y2) {
                adj.set_sym(i, na + j, true);
            }
        }
    }
    let weight = |&(x, y): &(usize, usize)| h1.graph().weight(x) * h2.graph().weight(y);
    let weights = side_a.iter().chain(side_b.iter()).map(weight).collect();
    let t = TargetGraph::from_parts(adj, weights).expect("products of positive weights");
    let part_a: Vec<usize> = (0..na).collect();
    BipartiteTarget::new(t, &part_a).expect("bipartite by construction")
}

/// `H^A`: vertices are maps `f: V(A) → V(H)`, encoded as base-`|V(H)|` numbers
/// with digit `u` holding `f(u)`. `f1 ~ f2` iff `(f1(u), f2(v)) ∈ E(H)` for every
/// ordered edge `(u, v)` of `A`. The result is unweighted.
pub fn exponential_graph(h: &TargetGraph, a: &SimpleGraph) -> Result<TargetGraph, ConstructionError> {
    let base = h.n() as u128;
    let size = (0..a.n()).try_fold(1u128, |acc, _| acc.checked_mul(base)).unwrap_or(u128::MAX);
    if size > EXPONENTIAL_CAP as u128 {
        return Err(ConstructionError::ExponentialTooLarge { size, cap: EXPONENTIAL_CAP });
    }
    let size = size as usize;
    let k = a.n();
    let digits = |mut idx: usize| -> Vec<usize> {
        let mut out = vec![0; k];
        for d in out.iter_mut() {
            *d = idx % h.n().max(1);
            idx /= h.n().max(1);
        }
        out
    };
    let maps: Vec<Vec<usize>> = (0..size).map(digits).collect();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (u, v) in a.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    let mut adj = BitMatrix::new(size);
    for (i, f1) in maps.iter().enumerate() {
        for (j, f2) in maps.iter().enumerate().skip(i) {
            if arcs.iter().all(|&(u, v)| h.has_edge(f1[u], f2[v])) {
                adj.set_sym(i, j, true);
            }
        }
    }
    Ok(TargetGraph::unweighted(adj))
}

/// Induced subgraph on `vertices` (in the given order), weights inherited.
pub fn induced_subgraph(h: &TargetGraph, vertices: &[usize]) -> TargetGraph {
    let mut adj = BitMatrix::new(vertices.len());
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate() {
            if h.has_edge(u, v) {
                adj.set(i, j, true);
            }
        }
    }
    let weights = vertices.iter().map(|&v| h.weight(v).clone()).collect();
    TargetGraph::from_parts(adj, weights).expect("inherited weights")
}

/// `H ↦ l(H)`: the subgraph induced by the looped vertices.
pub fn looped_part(h: &TargetGraph) -> TargetGraph {
    induced_subgraph(h, &h.looped_vertices())
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Complete(k) => write!(f, "complete:{k}")?,
            Family::CompleteBipartite(a, b) => write!(f, "biclique:{a}:{b}")?,
            Family::Path(k) => write!(f, "path:{k}")?,
            Family::Cycle(k) => write!(f, "cycle:{k}")?,
            Family::Star(k) => write!(f, "star:{k}")?,
            Family::HardCore => write!(f, "ind")?,
            Family::WidomRowlinson => write!(f, "wr")?,
            Family::WeightedWidomRowlinson { blue, white, red } => {
                write!(f, "wr:lb={},lw={},lr={}", fraction_string(blue), fraction_string(white), fraction_string(red))?
            }
        }
        if self.looped {
            write!(f, ":looped")?;
        }
        Ok(())
    }
}

/// Mini-language: `wr`, `ind`, `path:4`, `cycle:6:looped`, `star:6:looped`,
/// `complete:5`, `biclique:3:3`, `wr:lb=2,lw=1,lr=3`.
impl FromStr for FamilySpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConstructionError::Parse(s.to_string());
        let mut parts: Vec<&str> = s.trim().split(':').collect();
        let looped = parts.len() > 1 && parts.last() == Some(&"looped");
        if looped {
            parts.pop();
        }
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let family = match parts.as_slice() {
            ["wr"] => Family::WidomRowlinson,
            ["ind"] => Family::HardCore,
            ["complete", k] => Family::Complete(num(k)?),
            ["path", k] => Family::Path(num(k)?),
            ["cycle", k] => Family::Cycle(num(k)?),
            ["star", k] => Family::Star(num(k)?),
            ["biclique", a, b] => Family::CompleteBipartite(num(a)?, num(b)?),
            ["wr", params] => {
                let (mut lb, mut lw, mut lr) = (None, None, None);
                for kv in params.split(',') {
                    let (k, v) = kv.split_once('=').ok_or_else(bad)?;
                    let v = parse_fraction(v.trim()).map_err(|_| bad())?;
                    match k.trim() {
                        "lb" => lb = Some(v),
                        "lw" => lw = Some(v),
                        "lr" => lr = Some(v),
                        _ => return Err(bad()),
                    }
                }
                match (lb, lw, lr) {
                    (Some(blue), Some(white), Some(red)) => Family::WeightedWidomRowlinson { blue, white, red },
                    _ => return Err(ConstructionError::Parse(format!("{s}: need lb, lw and lr"))),
                }
            }
            _ => return Err(bad()),
        };
        Ok(FamilySpec { family, looped })
    }
}
