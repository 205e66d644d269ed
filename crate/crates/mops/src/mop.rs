//! The maximal outerplanar graph (mop) type and its structural operations.
//!
//! A mop on `n` vertices is stored as a triangulation of the convex `n`-gon:
//! vertices carry the labels `0..n-1` in Hamiltonian-cycle order, the cycle
//! edges `{i, (i+1) mod n}` are implicit, and only the `n - 3` non-crossing
//! diagonals are stored. The Hamiltonian cycle of a mop is unique, so fixing
//! it in the labeling loses no generality.

use crate::simple_graph::SimpleGraph;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A maximal outerplanar graph: vertex count plus sorted diagonal list.
///
/// Values built through [`Mop::new`] or any operation on valid mops satisfy
/// all invariants; [`Mop::from_parts`] skips checking so that arbitrary field
/// contents can be fed to [`Mop::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mop {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

/// The first violated mop invariant, in checking order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MopViolation {
    #[error("vertex count {0} is below 3")]
    TooFewVertices(usize),
    #[error("diagonal ({0}, {1}) is not an ordered in-range pair")]
    MalformedDiagonal(usize, usize),
    #[error("diagonal ({0}, {1}) appears more than once")]
    DuplicateDiagonal(usize, usize),
    #[error("expected {expected} diagonals, found {found}")]
    WrongDiagonalCount { expected: usize, found: usize },
    #[error("diagonal ({0}, {1}) joins cycle-adjacent vertices")]
    AdjacentEndpoints(usize, usize),
    #[error("diagonals ({}, {}) and ({}, {}) cross", .0.0, .0.1, .1.0, .1.1)]
    CrossingDiagonals((usize, usize), (usize, usize)),
}

/// Errors from structural operations on valid mops.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MopError {
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("({0}, {1}) is not a diagonal")]
    NotADiagonal(usize, usize),
    #[error("({0}, {1}) is not a Hamiltonian edge")]
    NotHamiltonianEdge(usize, usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} does not have degree 2")]
    NotDegreeTwo(usize),
    #[error("operation needs order at least {min}, mop has {n}")]
    OrderTooSmall { min: usize, n: usize },
    #[error("edge ({0}, {1}) has no face on the requested side")]
    NoFaceOnSide(usize, usize),
}

/// Selects one of the two arcs the endpoints of an edge cut the cycle into.
///
/// For a normalized edge `(a, b)` with `a < b`, `Inner` is the arc of
/// vertices strictly between `a` and `b` in ascending label order, and
/// `Outer` is the complementary arc. A Hamiltonian edge has exactly one
/// nonempty side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Inner,
    Outer,
}

/// An interior triangular face, identified by one of its edges plus the apex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceApex {
    pub edge: (usize, usize),
    pub apex: usize,
}

/// The two sub-mops obtained by cutting a mop along a diagonal.
///
/// `inner` covers the ascending arc `d.0 ..= d.1`, `outer` the complementary
/// arc; both carry fresh labels assigned in parent cyclic order, and the
/// `*_map` vectors send each sub-label back to its parent label. The shared
/// diagonal becomes a Hamiltonian edge of both parts.
#[derive(Debug, Clone)]
pub struct DiagonalPartition {
    pub diagonal: (usize, usize),
    pub inner: Mop,
    pub outer: Mop,
    pub inner_map: Vec<usize>,
    pub outer_map: Vec<usize>,
    /// Number of parent Hamiltonian edges on the inner side; always
    /// `inner.n() - 1`.
    pub inner_hamiltonian_edges: usize,
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Strict cyclic interleaving of two normalized chords; shared endpoints
/// never count as crossing.
fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

impl Mop {
    /// Builds and validates a mop. Diagonal pairs may come in either
    /// orientation and any order.
    pub fn new(
        n: usize,
        diagonals: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, MopViolation> {
        let mut diagonals: Vec<(usize, usize)> =
            diagonals.into_iter().map(|(u, v)| norm(u, v)).collect();
        diagonals.sort_unstable();
        let m = Mop { n, diagonals };
        m.validate()?;
        Ok(m)
    }

    /// Wraps raw field contents without checking any invariant.
    pub fn from_parts(n: usize, diagonals: Vec<(usize, usize)>) -> Self {
        Mop { n, diagonals }
    }

    /// The fan: vertex 0 joined to every vertex of the path `1..n-1`.
    pub fn fan(n: usize) -> Result<Self, MopViolation> {
        if n < 3 {
            return Err(MopViolation::TooFewVertices(n));
        }
        Ok(Mop { n, diagonals: (2..n - 1).map(|i| (0, i)).collect() })
    }

    /// Checks every invariant, reporting the first violation found.
    pub fn validate(&self) -> Result<(), MopViolation> {
        if self.n < 3 {
            return Err(MopViolation::TooFewVertices(self.n));
        }
        for &(i, j) in &self.diagonals {
            if i >= j || j > self.n - 1 {
                return Err(MopViolation::MalformedDiagonal(i, j));
            }
        }
        let mut sorted = self.diagonals.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(MopViolation::DuplicateDiagonal(w[0].0, w[0].1));
        }
        if sorted.len() != self.n - 3 {
            return Err(MopViolation::WrongDiagonalCount {
                expected: self.n - 3,
                found: sorted.len(),
            });
        }
        for &(i, j) in &sorted {
            if j - i == 1 || (i == 0 && j == self.n - 1) {
                return Err(MopViolation::AdjacentEndpoints(i, j));
            }
        }
        for (idx, &a) in sorted.iter().enumerate() {
            for &b in &sorted[idx + 1..] {
                if b.0 >= a.1 {
                    break; // sorted: no later chord can start inside a
                }
                if chords_cross(a, b) {
                    return Err(MopViolation::CrossingDiagonals(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    fn check_vertex(&self, v: usize) -> Result<(), MopError> {
        if v < self.n {
            Ok(())
        } else {
            Err(MopError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn is_hamiltonian_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = norm(u, v);
        b < self.n && (b - a == 1 || (a == 0 && b == self.n - 1))
    }

    pub fn is_diagonal(&self, u: usize, v: usize) -> bool {
        self.diagonals.binary_search(&norm(u, v)).is_ok()
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.is_hamiltonian_edge(u, v) || self.is_diagonal(u, v))
    }

    /// All edges, Hamiltonian first, normalized.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.hamiltonian_edges().chain(self.diagonals.iter().copied())
    }

    pub fn hamiltonian_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n - 1).map(|i| (i, i + 1)).chain(std::iter::once((0, self.n - 1)))
    }

    pub fn edge_count(&self) -> usize {
        self.n + self.diagonals.len()
    }

    /// Neighbors of `v` in ascending label order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = vec![(v + self.n - 1) % self.n, (v + 1) % self.n];
        for &(a, b) in &self.diagonals {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn degree(&self, v: usize) -> Result<usize, MopError> {
        self.check_vertex(v)?;
        Ok(2 + self.diagonals.iter().filter(|&&(a, b)| a == v || b == v).count())
    }

    /// All vertices of degree exactly 2, ascending. For `n >= 4` this set is
    /// independent and its size lies in `[2, n/2]`.
    pub fn degree_two_vertices(&self) -> Vec<usize> {
        let mut hits = vec![false; self.n];
        for &(a, b) in &self.diagonals {
            hits[a] = true;
            hits[b] = true;
        }
        (0..self.n).filter(|&v| !hits[v]).collect()
    }

    /// `S` together with every vertex adjacent to a member of `S`, ascending.
    pub fn closed_neighborhood(&self, seeds: &[usize]) -> Result<Vec<usize>, MopError> {
        let mut mark = vec![false; self.n];
        for &v in seeds {
            self.check_vertex(v)?;
            mark[v] = true;
            mark[(v + self.n - 1) % self.n] = true;
            mark[(v + 1) % self.n] = true;
        }
        for &(a, b) in &self.diagonals {
            if seeds.contains(&a) {
                mark[b] = true;
            }
            if seeds.contains(&b) {
                mark[a] = true;
            }
        }
        Ok((0..self.n).filter(|&v| mark[v]).collect())
    }

    /// The subgraph induced on `V - N[S]`, with original labels preserved.
    pub fn residual(&self, seeds: &[usize]) -> Result<SimpleGraph, MopError> {
        let removed = self.closed_neighborhood(seeds)?;
        let mut alive = vec![true; self.n];
        for &v in &removed {
            alive[v] = false;
        }
        let vertices: Vec<usize> = (0..self.n).filter(|&v| alive[v]).collect();
        let edges: Vec<(usize, usize)> =
            self.edges().filter(|&(a, b)| alive[a] && alive[b]).collect();
        Ok(SimpleGraph::new(vertices, edges).expect("induced subgraph is simple"))
    }

    /// The whole mop as a plain graph.
    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::new(0..self.n, self.edges()).expect("mop is simple")
    }

    /// Cuts the mop along diagonal `d` into the two arc sub-mops.
    pub fn diagonal_partition(&self, d: (usize, usize)) -> Result<DiagonalPartition, MopError> {
        let d = norm(d.0, d.1);
        if !self.is_diagonal(d.0, d.1) {
            return Err(MopError::NotADiagonal(d.0, d.1));
        }
        let (a, b) = d;
        // inner: parent labels a..=b, sub-label v - a
        let inner_map: Vec<usize> = (a..=b).collect();
        let inner_diags: Vec<(usize, usize)> = self
            .diagonals
            .iter()
            .filter(|&&(x, y)| (x, y) != d && x >= a && y <= b)
            .map(|&(x, y)| (x - a, y - a))
            .collect();
        let inner = Mop { n: b - a + 1, diagonals: inner_diags };
        // outer: parent labels b, b+1, .., n-1, 0, .., a in cyclic order
        let outer_map: Vec<usize> = (b..self.n).chain(0..=a).collect();
        let to_outer = |p: usize| if p >= b { p - b } else { p + self.n - b };
        let mut outer_diags: Vec<(usize, usize)> = self
            .diagonals
            .iter()
            .filter(|&&(x, y)| (x, y) != d && (x <= a || x >= b) && (y <= a || y >= b))
            .map(|&(x, y)| norm(to_outer(x), to_outer(y)))
            .collect();
        outer_diags.sort_unstable();
        let outer = Mop { n: self.n - (b - a) + 1, diagonals: outer_diags };
        debug_assert!(inner.validate().is_ok() && outer.validate().is_ok());
        Ok(DiagonalPartition {
            diagonal: d,
            inner_hamiltonian_edges: b - a,
            inner,
            outer,
            inner_map,
            outer_map,
        })
    }

    /// Merges the endpoints of a Hamiltonian edge into one vertex, collapsing
    /// parallel edges. Returns the contracted mop and the old-to-new label
    /// map (both endpoints map to the merged label).
    pub fn contract_hamiltonian_edge(
        &self,
        e: (usize, usize),
    ) -> Result<(Mop, Vec<usize>), MopError> {
        if self.n == 3 {
            return Err(MopError::OrderTooSmall { min: 4, n: self.n });
        }
        let (a, b) = norm(e.0, e.1);
        if !self.is_hamiltonian_edge(a, b) {
            return Err(MopError::NotHamiltonianEdge(e.0, e.1));
        }
        let n2 = self.n - 1;
        // keeps cyclic order: consecutive edge merges into label a,
        // the wrap edge (0, n-1) merges into label 0
        let map: Vec<usize> = if b - a == 1 {
            (0..self.n).map(|v| if v <= a { v } else { v - 1 }).collect()
        } else {
            (0..self.n).map(|v| if v == self.n - 1 { 0 } else { v }).collect()
        };
        let mut diags: Vec<(usize, usize)> = self
            .diagonals
            .iter()
            .map(|&(x, y)| norm(map[x], map[y]))
            .filter(|&(x, y)| !(y - x == 1 || (x == 0 && y == n2 - 1)))
            .collect();
        diags.sort_unstable();
        diags.dedup();
        let out = Mop { n: n2, diagonals: diags };
        debug_assert!(out.validate().is_ok());
        Ok((out, map))
    }

    /// Deletes a degree-2 vertex; the remaining labels shift to close the
    /// gap. Returns the smaller mop and a map from its labels back to the
    /// input labels.
    pub fn remove_degree_two_vertex(&self, v: usize) -> Result<(Mop, Vec<usize>), MopError> {
        self.check_vertex(v)?;
        if self.n == 3 {
            return Err(MopError::OrderTooSmall { min: 4, n: self.n });
        }
        if self.degree(v)? != 2 {
            return Err(MopError::NotDegreeTwo(v));
        }
        let ear_base = norm((v + self.n - 1) % self.n, (v + 1) % self.n);
        let mut diags: Vec<(usize, usize)> = self
            .diagonals
            .iter()
            .filter(|&&d| d != ear_base)
            .map(|&(x, y)| (if x > v { x - 1 } else { x }, if y > v { y - 1 } else { y }))
            .collect();
        diags.sort_unstable();
        let out = Mop { n: self.n - 1, diagonals: diags };
        debug_assert!(out.validate().is_ok());
        let map: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        Ok((out, map))
    }

    /// Adds a new degree-2 vertex across Hamiltonian edge `e`; `e` becomes a
    /// diagonal of the result. Returns the map from input labels to result
    /// labels.
    pub fn add_ear(&self, e: (usize, usize)) -> Result<(Mop, Vec<usize>), MopError> {
        let (a, b) = norm(e.0, e.1);
        if !self.is_hamiltonian_edge(a, b) {
            return Err(MopError::NotHamiltonianEdge(e.0, e.1));
        }
        let (map, new_diag): (Vec<usize>, (usize, usize)) = if b - a == 1 {
            // new vertex takes label a+1, later labels shift up
            ((0..self.n).map(|v| if v <= a { v } else { v + 1 }).collect(), (a, a + 2))
        } else {
            // wrap edge: new vertex appended as label n
            ((0..self.n).collect(), (0, self.n - 1))
        };
        let mut diags: Vec<(usize, usize)> =
            self.diagonals.iter().map(|&(x, y)| (map[x], map[y])).collect();
        diags.push(new_diag);
        diags.sort_unstable();
        let out = Mop { n: self.n + 1, diagonals: diags };
        debug_assert!(out.validate().is_ok());
        Ok((out, map))
    }

    /// The apex of the interior face lying on the given side of an edge.
    pub fn face_apex(&self, e: (usize, usize), side: Side) -> Result<FaceApex, MopError> {
        let (a, b) = norm(e.0, e.1);
        if !self.is_edge(a, b) {
            return Err(MopError::NotAnEdge(e.0, e.1));
        }
        let arc: Vec<usize> = match side {
            Side::Inner => (a + 1..b).collect(),
            Side::Outer => (b + 1..self.n).chain(0..a).collect(),
        };
        if arc.is_empty() {
            return Err(MopError::NoFaceOnSide(a, b));
        }
        // non-crossing triangulations admit exactly one apex per side
        arc.iter()
            .copied()
            .find(|&w| self.is_edge(a, w) && self.is_edge(b, w))
            .map(|apex| FaceApex { edge: (a, b), apex })
            .ok_or(MopError::NoFaceOnSide(a, b))
    }

    /// All `n - 2` interior triangular faces as sorted vertex triples.
    pub fn faces(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::with_capacity(self.n.saturating_sub(2));
        let mut stack = vec![(0usize, self.n - 1)];
        while let Some((lo, hi)) = stack.pop() {
            if hi - lo < 2 {
                continue;
            }
            let apex = self
                .face_apex((lo, hi), Side::Inner)
                .expect("valid mop has a face inside every arc")
                .apex;
            out.push([lo, apex, hi]);
            stack.push((lo, apex));
            stack.push((apex, hi));
        }
        out.sort_unstable();
        out
    }

    /// Relabels vertex `i` to `(n - i) mod n`, reversing the cycle
    /// orientation. Returns the mop and the old-to-new label map.
    pub fn reversed(&self) -> (Mop, Vec<usize>) {
        let map: Vec<usize> = (0..self.n).map(|v| (self.n - v) % self.n).collect();
        (self.relabel(&map), map)
    }

    /// Relabels vertex `i` to `(i + r) mod n`. Returns the mop and the
    /// old-to-new label map.
    pub fn rotated(&self, r: usize) -> (Mop, Vec<usize>) {
        let map: Vec<usize> = (0..self.n).map(|v| (v + r) % self.n).collect();
        (self.relabel(&map), map)
    }

    fn relabel(&self, map: &[usize]) -> Mop {
        let mut diags: Vec<(usize, usize)> =
            self.diagonals.iter().map(|&(x, y)| norm(map[x], map[y])).collect();
        diags.sort_unstable();
        let out = Mop { n: self.n, diagonals: diags };
        debug_assert!(out.validate().is_ok());
        out
    }
}

#[derive(Serialize, Deserialize)]
struct MopJson {
    n: usize,
    diagonals: Vec<[usize; 2]>,
}

impl Serialize for Mop {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // diagonals are stored normalized and sorted, matching the wire format
        MopJson {
            n: self.n,
            diagonals: self.diagonals.iter().map(|&(a, b)| [a, b]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mop {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = MopJson::deserialize(deserializer)?;
        Mop::new(raw.n, raw.diagonals.iter().map(|&[a, b]| (a, b))).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan5() -> Mop {
        Mop::fan(5).unwrap()
    }

    #[test]
    fn validate_accepts_triangle_and_fan() {
        assert!(Mop::new(3, []).is_ok());
        assert!(Mop::new(5, [(0, 2), (0, 3)]).is_ok());
    }

    #[test]
    fn validate_names_first_violation() {
        let crossing = Mop::from_parts(6, vec![(0, 2), (1, 3), (3, 5)]);
        assert_eq!(
            crossing.validate().unwrap_err(),
            MopViolation::CrossingDiagonals((0, 2), (1, 3))
        );
        assert_eq!(
            Mop::from_parts(2, vec![]).validate().unwrap_err(),
            MopViolation::TooFewVertices(2)
        );
        assert_eq!(
            Mop::from_parts(5, vec![(3, 1), (0, 3)]).validate().unwrap_err(),
            MopViolation::MalformedDiagonal(3, 1)
        );
        assert_eq!(
            Mop::from_parts(5, vec![(0, 2)]).validate().unwrap_err(),
            MopViolation::WrongDiagonalCount { expected: 2, found: 1 }
        );
        assert_eq!(
            Mop::from_parts(5, vec![(0, 1), (0, 3)]).validate().unwrap_err(),
            MopViolation::AdjacentEndpoints(0, 1)
        );
        assert_eq!(
            Mop::from_parts(6, vec![(0, 2), (0, 2), (2, 4)]).validate().unwrap_err(),
            MopViolation::DuplicateDiagonal(0, 2)
        );
        // wrap pair counts as cycle-adjacent
        assert_eq!(
            Mop::from_parts(6, vec![(0, 5), (1, 3), (1, 4)]).validate().unwrap_err(),
            MopViolation::AdjacentEndpoints(0, 5)
        );
    }

    #[test]
    fn degrees() {
        let f = fan5();
        assert_eq!(f.degree(0).unwrap(), 4);
        assert_eq!(f.degree(1).unwrap(), 2);
        assert!(f.degree(5).is_err());
        assert_eq!(Mop::fan(9).unwrap().degree(0).unwrap(), 8);
    }

    #[test]
    fn closed_neighborhood_cases() {
        let f = fan5();
        assert_eq!(f.closed_neighborhood(&[0]).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(f.closed_neighborhood(&[]).unwrap(), Vec::<usize>::new());
        assert_eq!(f.closed_neighborhood(&[1]).unwrap(), vec![0, 1, 2]);
        assert!(f.closed_neighborhood(&[7]).is_err());
    }

    #[test]
    fn residual_cases() {
        let f = fan5();
        assert!(f.residual(&[0]).unwrap().is_empty());
        let r = f.residual(&[1]).unwrap();
        assert_eq!(r.vertices(), &[3, 4]);
        assert_eq!(r.edges(), &[(3, 4)]);
        assert_eq!(f.residual(&[]).unwrap(), f.to_simple_graph());
    }

    #[test]
    fn partition_fan5() {
        let f = fan5();
        let p = f.diagonal_partition((0, 3)).unwrap();
        assert_eq!(p.inner_hamiltonian_edges, 3);
        assert_eq!(p.inner, Mop::new(4, [(0, 2)]).unwrap());
        assert_eq!(p.inner_map, vec![0, 1, 2, 3]);
        assert_eq!(p.outer, Mop::new(3, []).unwrap());
        assert_eq!(p.outer_map, vec![3, 4, 0]);

        let p = f.diagonal_partition((0, 2)).unwrap();
        assert_eq!(p.inner_hamiltonian_edges, 2);
        assert_eq!(p.inner, Mop::new(3, []).unwrap());
        // parent diagonal (0, 3) lands on outer labels 3 and 1
        assert_eq!(p.outer, Mop::new(4, [(1, 3)]).unwrap());
        assert_eq!(p.outer_map, vec![2, 3, 4, 0]);

        assert_eq!(f.diagonal_partition((1, 3)).unwrap_err(), MopError::NotADiagonal(1, 3));
    }

    #[test]
    fn partition_edge_identity() {
        // mapped edge sets of the two parts union to the parent's edges and
        // intersect exactly in the cut diagonal
        let m = Mop::new(7, [(0, 2), (2, 6), (3, 6), (3, 5)]).unwrap();
        for &d in m.diagonals() {
            let p = m.diagonal_partition(d).unwrap();
            let mut mapped: Vec<(usize, usize)> = Vec::new();
            let mut shared: Vec<(usize, usize)> = Vec::new();
            let lift = |part: &Mop, map: &[usize]| -> Vec<(usize, usize)> {
                part.edges().map(|(x, y)| norm(map[x], map[y])).collect()
            };
            let inner_edges = lift(&p.inner, &p.inner_map);
            let outer_edges = lift(&p.outer, &p.outer_map);
            for e in &inner_edges {
                if outer_edges.contains(e) {
                    shared.push(*e);
                }
            }
            mapped.extend(inner_edges);
            mapped.extend(outer_edges);
            mapped.sort_unstable();
            mapped.dedup();
            let mut parent: Vec<(usize, usize)> = m.edges().collect();
            parent.sort_unstable();
            assert_eq!(mapped, parent);
            assert_eq!(shared, vec![d]);
            assert_eq!(p.inner.n() + p.outer.n(), m.n() + 2);
        }
    }

    #[test]
    fn contract_cases() {
        let f4 = Mop::new(4, [(0, 2)]).unwrap();
        let (t, map) = f4.contract_hamiltonian_edge((1, 2)).unwrap();
        assert_eq!(t, Mop::new(3, []).unwrap());
        assert_eq!(map, vec![0, 1, 1, 2]);

        let (m, _) = fan5().contract_hamiltonian_edge((1, 2)).unwrap();
        assert_eq!(m.n(), 4);
        assert!(m.validate().is_ok());

        // wrap edge merges the last label into 0
        let (m, map) = fan5().contract_hamiltonian_edge((0, 4)).unwrap();
        assert_eq!(m, Mop::new(4, [(0, 2)]).unwrap());
        assert_eq!(map, vec![0, 1, 2, 3, 0]);

        assert!(fan5().contract_hamiltonian_edge((0, 2)).is_err());
        assert!(Mop::new(3, []).unwrap().contract_hamiltonian_edge((0, 1)).is_err());
    }

    #[test]
    fn remove_degree_two_cases() {
        let (m, map) = fan5().remove_degree_two_vertex(1).unwrap();
        assert_eq!(m, Mop::new(4, [(0, 2)]).unwrap());
        assert_eq!(map, vec![0, 2, 3, 4]);

        let f4 = Mop::new(4, [(0, 2)]).unwrap();
        let (t, _) = f4.remove_degree_two_vertex(1).unwrap();
        assert_eq!(t, Mop::new(3, []).unwrap());

        assert_eq!(fan5().remove_degree_two_vertex(0).unwrap_err(), MopError::NotDegreeTwo(0));
        assert!(Mop::new(3, []).unwrap().remove_degree_two_vertex(0).is_err());
    }

    #[test]
    fn add_ear_cases() {
        let t = Mop::new(3, []).unwrap();
        let (f4, map) = t.add_ear((0, 1)).unwrap();
        assert_eq!(f4, Mop::new(4, [(0, 2)]).unwrap());
        assert_eq!(map, vec![0, 2, 3]);

        let (m, _) = t.add_ear((0, 2)).unwrap();
        assert_eq!(m, Mop::new(4, [(0, 2)]).unwrap());

        assert!(fan5().add_ear((0, 2)).is_err());
    }

    #[test]
    fn ear_then_removal_restores() {
        let m = Mop::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap();
        for e in m.hamiltonian_edges().collect::<Vec<_>>() {
            let (bigger, map) = m.add_ear(e).unwrap();
            let new_vertex = (0..bigger.n()).find(|v| !map.contains(v)).unwrap();
            assert_eq!(bigger.degree(new_vertex).unwrap(), 2);
            let (back, back_map) = bigger.remove_degree_two_vertex(new_vertex).unwrap();
            assert_eq!(back, m);
            // round trip is the identity on surviving labels
            for (v, &w) in map.iter().enumerate() {
                let idx = back_map.iter().position(|&o| o == w).unwrap();
                assert_eq!(idx, v);
            }
        }
    }

    #[test]
    fn fan_shape() {
        assert_eq!(Mop::fan(3).unwrap(), Mop::new(3, []).unwrap());
        assert_eq!(Mop::fan(5).unwrap().diagonals(), &[(0, 2), (0, 3)]);
        assert!(Mop::fan(2).is_err());
        let f9 = Mop::fan(9).unwrap();
        assert_eq!(f9.degree(0).unwrap(), 8);
    }

    #[test]
    fn face_apex_cases() {
        let f = fan5();
        assert_eq!(f.face_apex((0, 4), Side::Inner).unwrap().apex, 3);
        assert_eq!(f.face_apex((0, 3), Side::Outer).unwrap().apex, 4);
        assert_eq!(f.face_apex((0, 3), Side::Inner).unwrap().apex, 2);
        assert_eq!(f.face_apex((1, 3), Side::Inner).unwrap_err(), MopError::NotAnEdge(1, 3));
        // consecutive Hamiltonian edge has no inner side
        assert_eq!(f.face_apex((1, 2), Side::Inner).unwrap_err(), MopError::NoFaceOnSide(1, 2));
        assert_eq!(f.face_apex((1, 2), Side::Outer).unwrap().apex, 0);
    }

    #[test]
    fn face_count_is_n_minus_2() {
        let f = fan5();
        let faces = f.faces();
        assert_eq!(faces.len(), 3);
        assert_eq!(faces, vec![[0, 1, 2], [0, 2, 3], [0, 3, 4]]);
        for m in crate::gen::enumerate_mops(7).unwrap() {
            let faces = m.faces();
            assert_eq!(faces.len(), 5);
            let mut dedup = faces.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), faces.len());
        }
    }

    #[test]
    fn degree_two_vertex_sets() {
        assert_eq!(fan5().degree_two_vertices(), vec![1, 4]);
        assert_eq!(Mop::new(3, []).unwrap().degree_two_vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn reversal_and_rotation() {
        let t = Mop::new(3, []).unwrap();
        assert_eq!(t.reversed().0, t);

        let f = fan5();
        let (rev, map) = f.reversed();
        assert_eq!(rev, f); // the fan is symmetric about its center
        assert_eq!(map, vec![0, 4, 3, 2, 1]);
        let (twice, _) = rev.reversed();
        assert_eq!(twice, f);

        let (rot, map) = f.rotated(2);
        assert_eq!(map, vec![2, 3, 4, 0, 1]);
        assert!(rot.validate().is_ok());
        let (back, _) = rot.rotated(3);
        assert_eq!(back, f);

        // reversal preserves the degree multiset
        let mut before: Vec<usize> = (0..5).map(|v| f.degree(v).unwrap()).collect();
        let mut after: Vec<usize> = (0..5).map(|v| rev.degree(v).unwrap()).collect();
        before.sort_unstable();
        after.sort_unstable();
        assert_eq!(before, after);
    }

    #[test]
    fn json_round_trip() {
        let f = fan5();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"n":5,"diagonals":[[0,2],[0,3]]}"#);
        let back: Mop = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        // readers accept unordered pairs in any order
        let shuffled: Mop = serde_json::from_str(r#"{"n":5,"diagonals":[[3,0],[2,0]]}"#).unwrap();
        assert_eq!(shuffled, f);
        assert!(serde_json::from_str::<Mop>(r#"{"n":5,"diagonals":[[0,2]]}"#).is_err());
    }
}
