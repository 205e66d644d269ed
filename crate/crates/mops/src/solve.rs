//! Exact, certificate-producing solvers: star containment, the isolating-set
//! checker, bounded subset search for isolation and domination numbers, and
//! the 3-coloring route to a dominating set of size at most n/3.

use crate::mop::{Mop, MopError};
use crate::simple_graph::SimpleGraph;
use serde::{Deserialize, Serialize};

/// How an isolating set was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Exact,
    Theorem1,
    Theorem2Low,
    Theorem2High,
    Manual,
}

/// A vertex set tagged with the star parameter it isolates against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingSet {
    pub members: Vec<usize>,
    pub k: usize,
    pub provenance: Provenance,
}

impl IsolatingSet {
    pub fn new(mut members: Vec<usize>, k: usize, provenance: Provenance) -> Self {
        members.sort_unstable();
        members.dedup();
        IsolatingSet { members, k, provenance }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Re-checks the defining property against an instance.
    pub fn verify(&self, m: &Mop) -> Result<bool, MopError> {
        is_isolating_set(m, &self.members, self.k)
    }
}

/// A proper 3-coloring of a mop, entries in `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn is_proper(&self, m: &Mop) -> bool {
        self.colors.len() == m.n()
            && self.colors.iter().all(|&c| c < 3)
            && m.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Whether `g` contains the star `K_{1,k+1}` as a subgraph, i.e. some vertex
/// has at least `k + 1` neighbors. For `k = 1` this says the edges of `g` do
/// not form a matching.
pub fn contains_star(g: &SimpleGraph, k: usize) -> bool {
    g.max_degree() > k
}

/// Whether deleting `N[set]` leaves a graph with no `K_{1,k+1}`.
pub fn is_isolating_set(m: &Mop, set: &[usize], k: usize) -> Result<bool, MopError> {
    Ok(!contains_star(&m.residual(set)?, k))
}

/// Whether `N[set]` covers every vertex.
pub fn is_dominating_set(m: &Mop, set: &[usize]) -> Result<bool, MopError> {
    Ok(m.closed_neighborhood(set)?.len() == m.n())
}

/// Default subset-search cap: safe for the domination number by the n/3
/// bound, hence for both isolation numbers as well.
pub fn default_size_cap(n: usize) -> usize {
    n / 3 + 1
}

/// Smallest `K_{1,k+1}`-isolating set, by exhausting cardinalities
/// `0..=size_cap` in lexicographic order. `None` means no set within the cap
/// isolates; minimality of a returned witness is certified by the exhaustion
/// of all smaller cardinalities.
pub fn iota_exact(m: &Mop, k: usize, size_cap: usize) -> Option<IsolatingSet> {
    let rows = AdjacencyRows::new(m);
    search(m.n(), size_cap, |subset| rows.isolates(subset, k))
        .map(|members| IsolatingSet::new(members, k, Provenance::Exact))
}

/// Smallest dominating set with witness, by the same bounded search.
pub fn gamma_exact(m: &Mop, size_cap: usize) -> Option<Vec<usize>> {
    let rows = AdjacencyRows::new(m);
    search(m.n(), size_cap, |subset| rows.dominates(subset))
}

fn search(n: usize, cap: usize, accept: impl Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    for size in 0..=cap.min(n) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if accept(&subset) {
                return Some(subset);
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    None
}

/// In-place lexicographic successor among ascending index vectors.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let size = subset.len();
    for i in (0..size).rev() {
        if subset[i] < n - size + i {
            subset[i] += 1;
            for j in i + 1..size {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Per-vertex neighborhood bitmasks. Orders up to 64 use one word per row;
/// larger orders fall back to multi-word rows.
enum AdjacencyRows {
    Narrow(NarrowRows),
    Wide(WideRows),
}

impl AdjacencyRows {
    fn new(m: &Mop) -> Self {
        if m.n() <= 64 {
            AdjacencyRows::Narrow(NarrowRows::new(m))
        } else {
            AdjacencyRows::Wide(WideRows::new(m))
        }
    }

    fn isolates(&self, subset: &[usize], k: usize) -> bool {
        match self {
            AdjacencyRows::Narrow(r) => r.isolates(subset, k),
            AdjacencyRows::Wide(r) => r.isolates(subset, k),
        }
    }

    fn dominates(&self, subset: &[usize]) -> bool {
        match self {
            AdjacencyRows::Narrow(r) => r.dominates(subset),
            AdjacencyRows::Wide(r) => r.dominates(subset),
        }
    }
}

struct NarrowRows {
    open: Vec<u64>,
    closed: Vec<u64>,
    full: u64,
}

impl NarrowRows {
    fn new(m: &Mop) -> Self {
        let n = m.n();
        let mut open = vec![0u64; n];
        for (u, v) in m.edges() {
            open[u] |= 1 << v;
            open[v] |= 1 << u;
        }
        let closed: Vec<u64> = (0..n).map(|v| open[v] | (1 << v)).collect();
        let full = if n == 64 { u64::MAX } else { (1 << n) - 1 };
        NarrowRows { open, closed, full }
    }

    fn isolates(&self, subset: &[usize], k: usize) -> bool {
        let mut covered = 0u64;
        for &v in subset {
            covered |= self.closed[v];
        }
        let alive = self.full & !covered;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.open[v] & alive).count_ones() as usize > k {
                return false;
            }
        }
        true
    }

    fn dominates(&self, subset: &[usize]) -> bool {
        let mut covered = 0u64;
        for &v in subset {
            covered |= self.closed[v];
        }
        covered == self.full
    }
}

struct WideRows {
    n: usize,
    words: usize,
    open: Vec<u64>,
    closed: Vec<u64>,
}

impl WideRows {
    fn new(m: &Mop) -> Self {
        let n = m.n();
        let words = n.div_ceil(64);
        let mut open = vec![0u64; n * words];
        for (u, v) in m.edges() {
            open[u * words + v / 64] |= 1 << (v % 64);
            open[v * words + u / 64] |= 1 << (u % 64);
        }
        let mut closed = open.clone();
        for v in 0..n {
            closed[v * words + v / 64] |= 1 << (v % 64);
        }
        WideRows { n, words, open, closed }
    }

    fn alive_mask(&self, subset: &[usize]) -> Vec<u64> {
        let mut covered = vec![0u64; self.words];
        for &v in subset {
            let row = &self.closed[v * self.words..(v + 1) * self.words];
            for (c, r) in covered.iter_mut().zip(row) {
                *c |= r;
            }
        }
        let mut alive = vec![0u64; self.words];
        for w in 0..self.words {
            alive[w] = !covered[w];
        }
        let tail = self.n % 64;
        if tail != 0 {
            alive[self.words - 1] &= (1 << tail) - 1;
        }
        alive
    }

    fn isolates(&self, subset: &[usize], k: usize) -> bool {
        let alive = self.alive_mask(subset);
        for v in 0..self.n {
            if alive[v / 64] & (1 << (v % 64)) == 0 {
                continue;
            }
            let row = &self.open[v * self.words..(v + 1) * self.words];
            let deg: u32 = row.iter().zip(&alive).map(|(r, a)| (r & a).count_ones()).sum();
            if deg as usize > k {
                return false;
            }
        }
        true
    }

    fn dominates(&self, subset: &[usize]) -> bool {
        self.alive_mask(subset).iter().all(|&w| w == 0)
    }
}

/// A proper 3-coloring built by peeling degree-2 vertices (lowest label
/// first) down to a triangle, then re-inserting each peeled vertex with the
/// color its two neighbors leave free.
pub fn three_color(m: &Mop) -> Coloring {
    let n = m.n();
    if n == 3 {
        return Coloring { colors: vec![0, 1, 2] };
    }
    let v = m.degree_two_vertices()[0];
    let (smaller, map) = m.remove_degree_two_vertex(v).expect("valid mop has an ear");
    let sub = three_color(&smaller);
    let mut colors = vec![0u8; n];
    for (new, &old) in map.iter().enumerate() {
        colors[old] = sub.colors[new];
    }
    let a = colors[(v + n - 1) % n];
    let b = colors[(v + 1) % n];
    colors[v] = (0..3).find(|c| *c != a && *c != b).expect("two neighbors leave a color");
    Coloring { colors }
}

/// The smallest color class of a proper 3-coloring: a dominating set of size
/// at most n/3, since every vertex lies on a triangle carrying all three
/// colors.
pub fn dominating_by_coloring(m: &Mop) -> Vec<usize> {
    let coloring = three_color(m);
    let mut classes: [Vec<usize>; 3] = Default::default();
    for (v, &c) in coloring.colors.iter().enumerate() {
        classes[c as usize].push(v);
    }
    let best = (0..3).min_by_key(|&c| classes[c].len()).expect("three classes");
    std::mem::take(&mut classes[best])
}
