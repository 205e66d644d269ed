//! Instance sources: exhaustive enumeration of all triangulations of the
//! labeled n-gon, seeded uniform random generation, and the named extremal
//! families.

use crate::mop::Mop;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order `enumerate_mops` accepts by default; the instance count is
/// the Catalan number C(n-2), which passes 50 million soon after.
pub const DEFAULT_ENUMERATION_CAP: usize = 13;

/// Deterministic seed for the random generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(value: u64) -> Self {
        Seed(value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("order {n} outside supported range {lo}..={hi}")]
    OrderOutOfRange { n: usize, lo: usize, hi: usize },
    #[error("family {family} requires parameter >= {min}, got {got}")]
    BadFamilyParam { family: FamilyName, min: usize, got: usize },
}

/// Streams every triangulation of the labeled convex `n`-gon exactly once.
///
/// Order is a depth-first split on the apex of the face containing the edge
/// `{0, n-1}`, apexes ascending, recursing on the lower arc first.
pub fn enumerate_mops(n: usize) -> Result<MopEnumeration, GenError> {
    enumerate_mops_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_mops`] with an explicit order cap.
pub fn enumerate_mops_with_cap(n: usize, cap: usize) -> Result<MopEnumeration, GenError> {
    if n < 3 || n > cap {
        return Err(GenError::OrderOutOfRange { n, lo: 3, hi: cap });
    }
    Ok(MopEnumeration {
        n,
        started: false,
        done: false,
        pending: Vec::new(),
        chords: Vec::new(),
        choices: Vec::new(),
    })
}

/// One backtracking point: the arc `(lo, hi)` being split and the apex
/// currently tried, plus enough state to roll back and try the next apex.
struct Choice {
    lo: usize,
    hi: usize,
    apex: usize,
    chords_len: usize,
    pending_snapshot: Vec<(usize, usize)>,
}

pub struct MopEnumeration {
    n: usize,
    started: bool,
    done: bool,
    pending: Vec<(usize, usize)>,
    chords: Vec<(usize, usize)>,
    choices: Vec<Choice>,
}

impl MopEnumeration {
    fn split(&mut self, lo: usize, hi: usize, apex: usize) {
        if apex - lo >= 2 {
            self.chords.push((lo, apex));
        }
        if hi - apex >= 2 {
            self.chords.push((apex, hi));
        }
        self.pending.push((apex, hi));
        self.pending.push((lo, apex));
    }

    /// Triangulates every pending arc with minimal apexes, recording the
    /// choice points. Always succeeds.
    fn descend(&mut self) {
        while let Some((lo, hi)) = self.pending.pop() {
            if hi - lo < 2 {
                continue;
            }
            self.choices.push(Choice {
                lo,
                hi,
                apex: lo + 1,
                chords_len: self.chords.len(),
                pending_snapshot: self.pending.clone(),
            });
            self.split(lo, hi, lo + 1);
        }
    }

    fn emit(&self) -> Mop {
        let mut diagonals = self.chords.clone();
        diagonals.sort_unstable();
        let m = Mop::from_parts(self.n, diagonals);
        debug_assert!(m.validate().is_ok());
        m
    }
}

impl Iterator for MopEnumeration {
    type Item = Mop;

    fn next(&mut self) -> Option<Mop> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.pending.push((0, self.n - 1));
            self.descend();
            return Some(self.emit());
        }
        while let Some(top) = self.choices.last_mut() {
            let next_apex = top.apex + 1;
            if next_apex < top.hi {
                top.apex = next_apex;
                let (lo, hi) = (top.lo, top.hi);
                let chords_len = top.chords_len;
                self.pending = top.pending_snapshot.clone();
                self.chords.truncate(chords_len);
                self.split(lo, hi, next_apex);
                self.descend();
                return Some(self.emit());
            }
            self.choices.pop();
        }
        self.done = true;
        None
    }
}

/// A triangulation of the labeled `n`-gon drawn uniformly at random.
///
/// Uses the bijection with binary trees on `n - 2` internal nodes: a tree is
/// grown uniformly by leaf insertion and decoded back into polygon chords.
/// Deterministic for a fixed `(n, seed)`.
pub fn random_mop(n: usize, seed: Seed) -> Result<Mop, GenError> {
    if n < 3 {
        return Err(GenError::OrderOutOfRange { n, lo: 3, hi: usize::MAX });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let tree = uniform_binary_tree(n - 2, &mut rng);
    let m = decode_tree(n, &tree);
    debug_assert!(m.validate().is_ok());
    Ok(m)
}

/// Node of a full binary tree; leaves have no payload.
enum TreeNode {
    Leaf,
    Internal(usize, usize),
}

struct Tree {
    nodes: Vec<TreeNode>,
    root: usize,
}

/// Grows a uniformly random full binary tree with `internal` internal nodes:
/// repeatedly pick any existing node, splice a new internal node into its
/// place, and hang a fresh leaf on a random side.
fn uniform_binary_tree(internal: usize, rng: &mut ChaCha8Rng) -> Tree {
    let mut nodes = vec![TreeNode::Leaf];
    let mut parent: Vec<Option<usize>> = vec![None];
    let mut root = 0;
    for _ in 0..internal {
        let target = rng.random_range(0..nodes.len());
        let leaf = nodes.len();
        nodes.push(TreeNode::Leaf);
        parent.push(None);
        let splice = nodes.len();
        let children = if rng.random_bool(0.5) { (leaf, target) } else { (target, leaf) };
        nodes.push(TreeNode::Internal(children.0, children.1));
        parent.push(parent[target]);
        if let Some(p) = parent[target] {
            match &mut nodes[p] {
                TreeNode::Internal(l, r) => {
                    if *l == target {
                        *l = splice;
                    } else {
                        *r = splice;
                    }
                }
                TreeNode::Leaf => unreachable!("parent is internal"),
            }
        } else {
            root = splice;
        }
        parent[target] = Some(splice);
        parent[leaf] = Some(splice);
    }
    Tree { nodes, root }
}

/// Maps a full binary tree with `n - 2` internal nodes onto the triangulation
/// whose face on edge `{0, n-1}` corresponds to the root.
fn decode_tree(n: usize, tree: &Tree) -> Mop {
    let mut leaves = vec![0usize; tree.nodes.len()];
    // post-order leaf counts, iterative to stay stack-safe for large n
    let mut order = Vec::with_capacity(tree.nodes.len());
    let mut stack = vec![tree.root];
    while let Some(v) = stack.pop() {
        order.push(v);
        if let TreeNode::Internal(l, r) = tree.nodes[v] {
            stack.push(l);
            stack.push(r);
        }
    }
    for &v in order.iter().rev() {
        leaves[v] = match tree.nodes[v] {
            TreeNode::Leaf => 1,
            TreeNode::Internal(l, r) => leaves[l] + leaves[r],
        };
    }
    let mut diagonals = Vec::with_capacity(n - 3);
    let mut walk = vec![(tree.root, 0usize, n - 1)];
    while let Some((v, lo, hi)) = walk.pop() {
        if let TreeNode::Internal(l, r) = tree.nodes[v] {
            let mid = lo + leaves[l];
            if mid - lo >= 2 {
                diagonals.push((lo, mid));
            }
            if hi - mid >= 2 {
                diagonals.push((mid, hi));
            }
            walk.push((l, lo, mid));
            walk.push((r, mid, hi));
        } else {
            debug_assert_eq!(hi - lo, 1);
        }
    }
    diagonals.sort_unstable();
    Mop::from_parts(n, diagonals)
}

/// The named instance families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyName {
    Fan,
    Gt,
    Ht,
    A15,
    Bt,
    MaxDeg2,
    MinDeg2,
}

impl std::fmt::Display for FamilyName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FamilyName::Fan => "Fan",
            FamilyName::Gt => "Gt",
            FamilyName::Ht => "Ht",
            FamilyName::A15 => "A15",
            FamilyName::Bt => "Bt",
            FamilyName::MaxDeg2 => "MaxDeg2",
            FamilyName::MinDeg2 => "MinDeg2",
        };
        f.write_str(s)
    }
}

/// A family instance request: the family plus its parameter (order for Fan
/// and MinDeg2, block count for Gt/Ht/Bt, half-order for MaxDeg2; ignored by
/// A15).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(rename = "family")]
    pub name: FamilyName,
    pub param: usize,
}

impl FamilySpec {
    pub fn new(name: FamilyName, param: usize) -> Self {
        FamilySpec { name, param }
    }

    fn check(&self) -> Result<(), GenError> {
        let min = match self.name {
            FamilyName::Fan | FamilyName::MaxDeg2 => 3,
            FamilyName::Gt | FamilyName::Ht | FamilyName::Bt => 2,
            FamilyName::MinDeg2 => 4,
            FamilyName::A15 => return Ok(()),
        };
        if self.param < min {
            return Err(GenError::BadFamilyParam { family: self.name, min, got: self.param });
        }
        Ok(())
    }

    /// Stated order of the instance.
    pub fn order(&self) -> usize {
        match self.name {
            FamilyName::Fan | FamilyName::MinDeg2 => self.param,
            FamilyName::Gt | FamilyName::Ht => 5 * self.param,
            FamilyName::A15 => 15,
            FamilyName::Bt => 15 * self.param,
            FamilyName::MaxDeg2 => 2 * self.param,
        }
    }

    /// Stated number of degree-2 vertices.
    pub fn degree_two_count(&self) -> usize {
        match self.name {
            FamilyName::Fan => {
                if self.param == 3 {
                    3
                } else {
                    2
                }
            }
            FamilyName::Gt => self.param,
            FamilyName::Ht => 2 * self.param,
            FamilyName::A15 => 5,
            FamilyName::Bt => 5 * self.param,
            FamilyName::MaxDeg2 => self.param,
            FamilyName::MinDeg2 => 2,
        }
    }

    /// Known exact value of the K_{1,2}-isolation number, where the family
    /// pins one.
    pub fn expected_iota1(&self) -> Option<usize> {
        match self.name {
            FamilyName::Fan => Some(1),
            FamilyName::Gt | FamilyName::Ht => Some(self.param),
            FamilyName::A15 => Some(3),
            FamilyName::Bt => Some(3 * self.param),
            FamilyName::MaxDeg2 | FamilyName::MinDeg2 => None,
        }
    }
}

/// Builds the requested family instance.
pub fn build_family(spec: &FamilySpec) -> Result<Mop, GenError> {
    spec.check()?;
    let m = match spec.name {
        FamilyName::Fan => Mop::fan(spec.param).expect("param checked"),
        FamilyName::Gt => build_fan_chain(spec.param, BlockKind::EndpointPair),
        FamilyName::Ht => build_fan_chain(spec.param, BlockKind::MiddlePair),
        FamilyName::A15 => build_a15(),
        FamilyName::Bt => build_bt(spec.param),
        FamilyName::MaxDeg2 => build_max_deg2(spec.param),
        FamilyName::MinDeg2 => build_min_deg2(spec.param),
    };
    debug_assert!(m.validate().is_ok());
    Ok(m)
}

/// How a 5-vertex fan block exposes its two junction vertices (the block's
/// first and last cycle labels, which the joining polygon connects).
#[derive(Clone, Copy)]
enum BlockKind {
    /// Junctions are a degree-2 vertex and its degree-3 neighbor, leaving one
    /// degree-2 vertex strictly inside the block.
    EndpointPair,
    /// Junctions are the two degree-3 path vertices, leaving two degree-2
    /// vertices strictly inside the block.
    MiddlePair,
}

/// Diagonals of one fan block on labels `b..b+4`, including the closing chord
/// `{b, b+4}`.
fn block_diagonals(b: usize, kind: BlockKind) -> [(usize, usize); 3] {
    match kind {
        // fan center at b+3: degrees b:3, b+1:3, b+2:2, b+3:4, b+4:2
        BlockKind::EndpointPair => [(b, b + 3), (b + 1, b + 3), (b, b + 4)],
        // fan center at b+2: degrees b:3, b+1:2, b+2:4, b+3:2, b+4:3
        BlockKind::MiddlePair => [(b, b + 2), (b + 2, b + 4), (b, b + 4)],
    }
}

/// Fan-triangulates the polygon on the sorted vertex list `ring` (given in
/// cycle order), anchored at its first vertex.
fn joining_fan(ring: &[usize]) -> Vec<(usize, usize)> {
    (2..ring.len() - 1).map(|i| (ring[0], ring[i])).collect()
}

/// `t` disjoint 5-vertex fans on consecutive blocks, joined through a central
/// polygon on the block endpoints.
fn build_fan_chain(t: usize, kind: BlockKind) -> Mop {
    let n = 5 * t;
    let mut diagonals = Vec::with_capacity(n - 3);
    let mut ring = Vec::with_capacity(2 * t);
    for i in 0..t {
        let b = 5 * i;
        diagonals.extend(block_diagonals(b, kind));
        ring.push(b);
        ring.push(b + 4);
    }
    diagonals.extend(joining_fan(&ring));
    diagonals.sort_unstable();
    Mop::from_parts(n, diagonals)
}

/// Order-15 block: two middle-pair fans and one endpoint-pair fan joined by a
/// hexagon; it has five degree-2 vertices and isolation number 3.
fn build_a15() -> Mop {
    let mut diagonals = Vec::with_capacity(12);
    diagonals.extend(block_diagonals(0, BlockKind::MiddlePair));
    diagonals.extend(block_diagonals(5, BlockKind::MiddlePair));
    diagonals.extend(block_diagonals(10, BlockKind::EndpointPair));
    diagonals.extend(joining_fan(&[0, 4, 5, 9, 10, 14]));
    diagonals.sort_unstable();
    Mop::from_parts(15, diagonals)
}

/// `t` copies of the order-15 block joined through a central `2t`-gon on the
/// junction pair of each copy.
fn build_bt(t: usize) -> Mop {
    // rotate the block so its junction pair sits at labels 0 and 14
    let (block, _) = build_a15().rotated(10);
    let n = 15 * t;
    let mut diagonals = Vec::with_capacity(n - 3);
    let mut ring = Vec::with_capacity(2 * t);
    for i in 0..t {
        let b = 15 * i;
        diagonals.extend(block.diagonals().iter().map(|&(x, y)| (x + b, y + b)));
        diagonals.push((b, b + 14));
        ring.push(b);
        ring.push(b + 14);
    }
    diagonals.extend(joining_fan(&ring));
    diagonals.sort_unstable();
    Mop::from_parts(n, diagonals)
}

/// Doubles a fan by hanging one new degree-2 vertex across every Hamiltonian
/// edge, reaching the maximum possible degree-2 count n/2.
fn build_max_deg2(p: usize) -> Mop {
    let base = Mop::fan(p).expect("param checked");
    // base vertex i becomes 2i; new vertices take the odd labels
    let mut diagonals: Vec<(usize, usize)> =
        base.edges().map(|(x, y)| (2 * x, 2 * y)).collect();
    diagonals.sort_unstable();
    Mop::from_parts(2 * p, diagonals)
}

/// Serpentine triangulation of the `n`-gon: alternating chords leave exactly
/// two degree-2 vertices, the minimum possible.
fn build_min_deg2(n: usize) -> Mop {
    let mut diagonals = Vec::with_capacity(n - 3);
    let (mut lo, mut hi) = (1, n - 1);
    diagonals.push((lo, hi));
    for step in 0.. {
        if diagonals.len() == n - 3 {
            break;
        }
        if step % 2 == 0 {
            lo += 1;
        } else {
            hi -= 1;
        }
        diagonals.push((lo, hi));
    }
    diagonals.sort_unstable();
    Mop::from_parts(n, diagonals)
}
