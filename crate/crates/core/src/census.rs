//! Isomorph-free enumeration of `d`-regular graphs.
//!
//! The generator adds vertices one at a time. A labelled graph is kept only if
//! its upper-triangle string, read column by column (`x01, x02, x12, x03, ...`),
//! is the lexicographic maximum over all relabellings. Every vertex prefix of a
//! maximal string is itself maximal, so each isomorphism class is reached exactly
//! once. Partial graphs are also pruned by degree feasibility and by the
//! hereditary filters (connected prefixes, bipartite, triangle-free).
//!
//! [`enumerate_regular_naive`] is an independent slow path: all labelled graphs
//! with `N(0) = {1..d}`, deduplicated by [`canonical_form`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::SimpleGraph;

/// Largest `n` accepted for full censuses of degree `d`; connected-only
/// censuses get two more vertices.
pub fn census_cap(d: usize, connected_only: bool) -> usize {
    let base = if d <= 3 { 12 } else { 10 };
    if connected_only {
        base + 2
    } else {
        base
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Filters {
    pub connected: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
}

impl Filters {
    pub const NONE: Filters = Filters { connected: false, bipartite: false, triangle_free: false };

    pub fn connected() -> Self {
        Filters { connected: true, ..Filters::NONE }
    }

    pub fn bipartite() -> Self {
        Filters { bipartite: true, ..Filters::NONE }
    }

    pub fn triangle_free() -> Self {
        Filters { triangle_free: true, ..Filters::NONE }
    }

    pub fn accepts(&self, flags: &Flags) -> bool {
        (!self.connected || flags.connected) && (!self.bipartite || flags.bipartite) && (!self.triangle_free || flags.triangle_free)
    }
}

/// Comma-separated active filters, or `none`.
impl fmt::Display for Filters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(self.connected, "connected"), (self.bipartite, "bipartite"), (self.triangle_free, "triangle_free")]
            .into_iter()
            .filter_map(|(on, name)| on.then_some(name))
            .collect();
        if names.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&names.join(","))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
    pub connected: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
}

impl Flags {
    pub fn of(g: &SimpleGraph) -> Self {
        Flags { connected: g.is_connected(), bipartite: g.bipartition_of().is_some(), triangle_free: g.is_triangle_free() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub graph: SimpleGraph,
    pub canon: CanonicalForm,
    pub flags: Flags,
    pub n: usize,
    pub d: usize,
}

impl CensusRecord {
    fn new(graph: SimpleGraph, d: usize) -> Self {
        let canon = canonical_form(&graph).expect("census sizes are within the canonical-form cap");
        CensusRecord { flags: Flags::of(&graph), n: graph.n(), canon, graph, d }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("no {d}-regular graph on {n} vertices: n*d is odd")]
    Parity { n: usize, d: usize },
    #[error("census of {d}-regular graphs is capped at n = {cap}, got n = {n}")]
    Cap { n: usize, d: usize, cap: usize },
}

fn validate(n: usize, d: usize, filters: Filters) -> Result<(), CensusError> {
    if n * d % 2 == 1 {
        return Err(CensusError::Parity { n, d });
    }
    let cap = census_cap(d, filters.connected);
    if n > cap {
        return Err(CensusError::Cap { n, d, cap });
    }
    Ok(())
}

/// One record per isomorphism class of `d`-regular graphs on `n` vertices that
/// pass `filters`, sorted by canonical form.
pub fn enumerate_regular(n: usize, d: usize, filters: Filters) -> Result<Vec<CensusRecord>, CensusError> {
    validate(n, d, filters)?;
    let mut out = Vec::new();
    if n == 0 || d < n {
        let mut gen = Orderly { n, d, filters, rows: vec![0; n], deg: vec![0; n], found: Vec::new() };
        gen.extend(0);
        out = gen.found.into_iter().map(|g| CensusRecord::new(g, d)).filter(|r| filters.accepts(&r.flags)).collect();
    }
    out.sort_by(|a, b| a.canon.cmp(&b.canon));
    Ok(out)
}

pub fn census_count(n: usize, d: usize, filters: Filters) -> Result<usize, CensusError> {
    enumerate_regular(n, d, filters).map(|v| v.len())
}

struct Orderly {
    n: usize,
    d: usize,
    filters: Filters,
    rows: Vec<u32>,
    deg: Vec<usize>,
    found: Vec<SimpleGraph>,
}

impl Orderly {
    /// Vertices `0..k` are placed.
    fn extend(&mut self, k: usize) {
        if k == self.n {
            let mut edges = Vec::new();
            for u in 0..self.n {
                for v in u + 1..self.n {
                    if self.rows[u] >> v & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            self.found.push(SimpleGraph::build(self.n, &edges).expect("valid by construction"));
            return;
        }
        let open: Vec<usize> = (0..k).filter(|&v| self.deg[v] < self.d).collect();
        let mut chosen = Vec::with_capacity(self.d);
        self.choose(k, &open, 0, &mut chosen);
    }

    fn choose(&mut self, k: usize, open: &[usize], from: usize, chosen: &mut Vec<usize>) {
        self.try_vertex(k, chosen);
        if chosen.len() == self.d {
            return;
        }
        for i in from..open.len() {
            chosen.push(open[i]);
            self.choose(k, open, i + 1, chosen);
            chosen.pop();
        }
    }

    fn try_vertex(&mut self, k: usize, nbrs: &[usize]) {
        let (n, d) = (self.n, self.d);
        if self.filters.connected && k > 0 && nbrs.is_empty() {
            return;
        }
        if self.filters.triangle_free && nbrs.iter().any(|&u| nbrs.iter().any(|&v| self.rows[u] >> v & 1 == 1)) {
            return;
        }
        let mask = nbrs.iter().fold(0u32, |m, &v| m | 1 << v);
        // transposing k-1 and k must not increase column k-1
        if k >= 2 {
            let low = (1u32 << (k - 1)) - 1;
            if column_key(self.rows[k - 1] & low, k - 1) < column_key(mask & low, k - 1) {
                return;
            }
        }
        let remaining = n - k - 1;
        let mut deficit_sum = d - nbrs.len();
        let mut deficient = usize::from(nbrs.len() < d);
        if d - nbrs.len() > remaining {
            return;
        }
        for v in 0..k {
            let deg = self.deg[v] + (mask >> v & 1) as usize;
            let deficit = d - deg;
            if deficit > remaining {
                return;
            }
            deficit_sum += deficit;
            deficient += usize::from(deficit > 0);
        }
        if remaining > 0 {
            let supply = remaining * d;
            if deficit_sum > supply || (supply - deficit_sum) % 2 == 1 {
                return;
            }
            if (supply - deficit_sum) / 2 > remaining * (remaining - 1) / 2 || d > deficient + remaining - 1 {
                return;
            }
        } else if deficit_sum != 0 {
            return;
        }

        self.rows[k] = mask;
        for &v in nbrs {
            self.rows[v] |= 1 << k;
            self.deg[v] += 1;
        }
        self.deg[k] = nbrs.len();
        let keep = (!self.filters.bipartite || prefix_bipartite(&self.rows, k + 1)) && is_max_string(&self.rows, k + 1);
        if keep {
            self.extend(k + 1);
        }
        for &v in nbrs {
            self.rows[v] &= !(1 << k);
            self.deg[v] -= 1;
        }
        self.rows[k] = 0;
        self.deg[k] = 0;
    }
}

/// Bits of a column over rows `0..len`, row 0 most significant.
fn column_key(bits: u32, len: usize) -> u32 {
    let mut key = 0;
    for i in 0..len {
        key = key << 1 | (bits >> i & 1);
    }
    key
}

fn prefix_bipartite(rows: &[u32], k: usize) -> bool {
    let mut side = vec![u8::MAX; k];
    for s in 0..k {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..k {
                if rows[u] >> v & 1 == 1 {
                    if side[v] == u8::MAX {
                        side[v] = side[u] ^ 1;
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether the graph on `0..k` has the lexicographically largest column string
/// among all its relabellings.
pub fn is_max_string(rows: &[u32], k: usize) -> bool {
    let own: Vec<u32> = (0..k).map(|j| column_key(rows[j] & ((1u32 << j) - 1), j)).collect();
    let mut perm = Vec::with_capacity(k);
    !exceeds(rows, k, &own, &mut perm, 0)
}

/// True if some completion of `perm` yields a strictly larger string.
fn exceeds(rows: &[u32], k: usize, own: &[u32], perm: &mut Vec<usize>, used: u32) -> bool {
    let j = perm.len();
    if j == k {
        return false;
    }
    for w in 0..k {
        if used >> w & 1 == 1 {
            continue;
        }
        let col = perm.iter().fold(0u32, |key, &p| key << 1 | (rows[p] >> w & 1));
        match col.cmp(&own[j]) {
            core::cmp::Ordering::Greater => return true,
            core::cmp::Ordering::Less => continue,
            core::cmp::Ordering::Equal => {
                perm.push(w);
                let found = exceeds(rows, k, own, perm, used | 1 << w);
                perm.pop();
                if found {
                    return true;
                }
            }
        }
    }
    false
}

/// Test oracle: labelled enumeration with `N(0) = {1..d}` plus canonical
/// deduplication. Exponential; intended for small `n`.
pub fn enumerate_regular_naive(n: usize, d: usize, filters: Filters) -> Result<Vec<CensusRecord>, CensusError> {
    validate(n, d, filters)?;
    let mut classes: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
    if n == 0 || d < n {
        let mut adj = vec![0u32; n];
        let mut deg = vec![0usize; n];
        if n > 0 {
            for v in 1..=d {
                adj[0] |= 1 << v;
                adj[v] |= 1;
                deg[v] = 1;
            }
            deg[0] = d;
        }
        naive_fill(n, d, 1.min(n), &mut adj, &mut deg, &mut |rows| {
            let mut edges = Vec::new();
            for (u, row) in rows.iter().enumerate() {
                for v in u + 1..n {
                    if row >> v & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = SimpleGraph::build(n, &edges).expect("valid by construction");
            let canon = canonical_form(&g).expect("within cap");
            classes.entry(canon).or_insert(g);
        });
    }
    Ok(classes.into_values().map(|g| CensusRecord::new(g, d)).filter(|r| filters.accepts(&r.flags)).collect())
}

fn naive_fill(n: usize, d: usize, v: usize, adj: &mut [u32], deg: &mut [usize], emit: &mut dyn FnMut(&[u32])) {
    if v == n {
        emit(adj);
        return;
    }
    let need = d - deg[v];
    let later: Vec<usize> = (v + 1..n).filter(|&u| deg[u] < d).collect();
    if later.len() < need {
        return;
    }
    let mut pick = Vec::with_capacity(need);
    combos(&later, need, 0, &mut pick, &mut |chosen| {
        for &u in chosen {
            adj[v] |= 1 << u;
            adj[u] |= 1 << v;
            deg[u] += 1;
        }
        deg[v] = d;
        naive_fill(n, d, v + 1, adj, deg, emit);
        for &u in chosen {
            adj[v] &= !(1 << u);
            adj[u] &= !(1 << v);
            deg[u] -= 1;
        }
        deg[v] = d - need;
    });
}

fn combos(items: &[usize], k: usize, from: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < k - pick.len() {
            break;
        }
        pick.push(items[i]);
        combos(items, k, i + 1, pick, f);
        pick.pop();
    }
}
