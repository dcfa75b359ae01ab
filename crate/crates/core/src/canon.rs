//! Canonical labelling and isomorphism testing for small graphs.
//!
//! `canonical_form` runs individualisation-refinement: vertices start in cells
//! keyed by `(loop, weight)`, cells are refined to an equitable partition, and
//! the search tree over individualised vertices is explored with pruning by the
//! automorphisms discovered at equal leaves. The canonical form is the largest
//! leaf certificate.
//!
//! `are_isomorphic` is a separate routine (joint colour refinement on both
//! graphs followed by a backtracking bijection search) with no size cap.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{SimpleGraph, TargetGraph};
use crate::rational::{write_fraction, Rational};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_VERTEX_CAP: usize = 16;

/// Byte string identifying an isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CanonError {
    #[error("canonical form needs at most {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
}

pub trait Canonize {
    fn canonical_form(&self) -> Result<CanonicalForm, CanonError>;
}

impl Canonize for TargetGraph {
    fn canonical_form(&self) -> Result<CanonicalForm, CanonError> {
        canonize_target(self)
    }
}

impl Canonize for SimpleGraph {
    fn canonical_form(&self) -> Result<CanonicalForm, CanonError> {
        canonize_target(&TargetGraph::from(self))
    }
}

pub fn canonical_form<G: Canonize + ?Sized>(graph: &G) -> Result<CanonicalForm, CanonError> {
    graph.canonical_form()
}

type Cells = Vec<Vec<usize>>;

/// Sorted distinct `(loop, weight)` keys, and each vertex's rank among them.
fn vertex_classes(h: &TargetGraph) -> Vec<usize> {
    let mut keys: BTreeMap<(bool, &Rational), usize> = BTreeMap::new();
    for v in 0..h.n() {
        keys.insert((h.has_loop(v), h.weight(v)), 0);
    }
    for (rank, slot) in keys.values_mut().enumerate() {
        *slot = rank;
    }
    (0..h.n()).map(|v| keys[&(h.has_loop(v), h.weight(v))]).collect()
}

struct Canonizer<'a> {
    h: &'a TargetGraph,
    first: Option<(Vec<usize>, Vec<u8>)>,
    best: Option<(Vec<usize>, Vec<u8>)>,
    autos: Vec<Vec<usize>>,
}

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | 1 << v)
}

impl<'a> Canonizer<'a> {
    fn count_into(&self, v: usize, mask: u64) -> u32 {
        (self.h.adjacency().row(v)[0] & mask).count_ones()
    }

    /// Refines to the coarsest equitable partition finer than `cells`.
    fn refine(&self, mut cells: Cells) -> Cells {
        'outer: loop {
            for si in 0..cells.len() {
                let mask = mask_of(&cells[si]);
                for ci in 0..cells.len() {
                    if cells[ci].len() < 2 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cells[ci].iter().map(|&v| (self.count_into(v, mask), v)).collect();
                    if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                        continue;
                    }
                    keyed.sort_unstable();
                    let mut parts: Cells = Vec::new();
                    let mut last = None;
                    for (c, v) in keyed {
                        if last != Some(c) {
                            parts.push(Vec::new());
                            last = Some(c);
                        }
                        parts.last_mut().unwrap().push(v);
                    }
                    cells.splice(ci..=ci, parts);
                    continue 'outer;
                }
            }
            return cells;
        }
    }

    fn certificate(&self, perm: &[usize]) -> Vec<u8> {
        let n = perm.len();
        let mut out = Vec::with_capacity(2 + n * n / 8 + 4 * n);
        out.extend_from_slice(&(n as u16).to_be_bytes());
        let mut acc = 0u8;
        let mut filled = 0;
        for i in 0..n {
            for j in i..n {
                acc = (acc << 1) | self.h.has_edge(perm[i], perm[j]) as u8;
                filled += 1;
                if filled == 8 {
                    out.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(acc << (8 - filled));
        }
        let mut text = alloc::string::String::new();
        for &p in perm {
            write_fraction(&mut text, self.h.weight(p)).unwrap();
            text.push(';');
        }
        out.extend_from_slice(text.as_bytes());
        out
    }

    fn leaf(&mut self, cells: &Cells) {
        let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = self.certificate(&perm);
        let n = perm.len();
        let auto_from = |reference: &[usize]| {
            let mut gamma = vec![0; n];
            for i in 0..n {
                gamma[reference[i]] = perm[i];
            }
            gamma
        };
        let Some((first_perm, first_cert)) = &self.first else {
            self.first = Some((perm.clone(), cert.clone()));
            self.best = Some((perm, cert));
            return;
        };
        if *first_cert == cert {
            let g = auto_from(first_perm);
            self.autos.push(g);
            return;
        }
        let (best_perm, best_cert) = self.best.as_ref().unwrap();
        match cert.cmp(best_cert) {
            core::cmp::Ordering::Equal => {
                let g = auto_from(best_perm);
                self.autos.push(g);
            }
            core::cmp::Ordering::Greater => self.best = Some((perm, cert)),
            core::cmp::Ordering::Less => {}
        }
    }

    /// Orbit representative of every vertex under the automorphisms found so far
    /// that fix `path` pointwise.
    fn orbits_fixing(&self, path: &[usize]) -> Vec<usize> {
        let n = self.h.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in self.autos.iter().filter(|g| path.iter().all(|&p| g[p] == p)) {
            for (v, &gv) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gv));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn search(&mut self, cells: Cells, path: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() {
                let orbit = self.orbits_fixing(path);
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            let child = self.refine(child);
            path.push(v);
            self.search(child, path);
            path.pop();
        }
    }
}

fn canonize_target(h: &TargetGraph) -> Result<CanonicalForm, CanonError> {
    let n = h.n();
    if n > CANON_VERTEX_CAP {
        return Err(CanonError::TooLarge { n, cap: CANON_VERTEX_CAP });
    }
    let mut c = Canonizer { h, first: None, best: None, autos: Vec::new() };
    if n == 0 {
        return Ok(CanonicalForm(c.certificate(&[])));
    }
    let class = vertex_classes(h);
    let classes = class.iter().max().map_or(0, |m| m + 1);
    let mut cells: Cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[class[v]].push(v);
    }
    let cells = c.refine(cells);
    c.search(cells, &mut Vec::new());
    Ok(CanonicalForm(c.best.unwrap().1))
}

/// Whether a bijection preserves adjacency, loops and weights.
pub fn are_isomorphic(x: &TargetGraph, y: &TargetGraph) -> bool {
    let n = x.n();
    if n != y.n() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let Some((cx, cy)) = joint_colours(x, y) else {
        return false;
    };
    // Match rarest colours first, then prefer vertices adjacent to ones already placed.
    let mut freq = BTreeMap::new();
    for &c in &cx {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| x.has_edge(u, v)).count();
                (links > 0, core::cmp::Reverse(freq[&cx[v]]), links, core::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_match(x, y, &cx, &cy, &order, 0, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend_match(
    x: &TargetGraph,
    y: &TargetGraph,
    cx: &[usize],
    cy: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..y.n() {
        if used[w] || cy[w] != cx[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| x.has_edge(u, v) == y.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_match(x, y, cx, cy, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

/// Stable colour refinement run on both graphs with a shared palette. `None`
/// when the colour histograms already differ.
fn joint_colours(x: &TargetGraph, y: &TargetGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = x.n();
    let mut palette: BTreeMap<(bool, Rational), usize> = BTreeMap::new();
    for g in [x, y] {
        for v in 0..n {
            palette.insert((g.has_loop(v), g.weight(v).clone()), 0);
        }
    }
    for (i, slot) in palette.values_mut().enumerate() {
        *slot = i;
    }
    let key = |g: &TargetGraph, v: usize| palette[&(g.has_loop(v), g.weight(v).clone())];
    let mut cx: Vec<usize> = (0..n).map(|v| key(x, v)).collect();
    let mut cy: Vec<usize> = (0..n).map(|v| key(y, v)).collect();
    let mut classes = palette.len();
    loop {
        if histogram(&cx) != histogram(&cy) {
            return None;
        }
        let sig = |g: &TargetGraph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.neighbors(v).map(|u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sx: Vec<_> = (0..n).map(|v| sig(x, &cx, v)).collect();
        let sy: Vec<_> = (0..n).map(|v| sig(y, &cy, v)).collect();
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in sx.iter().chain(sy.iter()) {
            ranks.insert(s, 0);
        }
        for (i, slot) in ranks.values_mut().enumerate() {
            *slot = i;
        }
        let nx: Vec<usize> = sx.iter().map(|s| ranks[s]).collect();
        let ny: Vec<usize> = sy.iter().map(|s| ranks[s]).collect();
        let refined = ranks.len();
        cx = nx;
        cy = ny;
        if refined == classes {
            if histogram(&cx) != histogram(&cy) {
                return None;
            }
            return Some((cx, cy));
        }
        classes = refined;
    }
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}
