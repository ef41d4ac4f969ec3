//! DAG families and their insertion orders.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::labeled_dag::{LabeledDag, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    /// Source joined to `n - 1` leaves; sorting over it is selection sort.
    Star(usize),
    /// Linked list of `n` vertices; sorting over it is insertion sort.
    Path(usize),
    /// `dims`-dimensional Young tableau with `side^dims` cells.
    YoungGrid { dims: u32, side: usize },
    /// Subset lattice of a `dims`-element set.
    Hypercube(u32),
}

impl Topology {
    /// Vertex count.
    pub fn capacity(&self) -> Result<usize> {
        match *self {
            Topology::Star(n) | Topology::Path(n) => {
                if n == 0 {
                    Err(Error::InvalidTopology(self.to_string()))
                } else {
                    Ok(n)
                }
            }
            Topology::YoungGrid { dims, side } => {
                if side == 0 {
                    return Err(Error::InvalidTopology(self.to_string()));
                }
                side.checked_pow(dims).ok_or(Error::Overflow)
            }
            Topology::Hypercube(k) => 1usize
                .checked_shl(k)
                .filter(|_| k < usize::BITS)
                .ok_or(Error::Overflow),
        }
    }

    /// Builds the DAG with every label set to infinity.
    pub fn build(&self) -> Result<LabeledDag> {
        let n = self.capacity()?;
        let mut edges = Vec::new();
        match *self {
            Topology::Star(_) => edges.extend((1..n).map(|v| (0, v))),
            Topology::Path(_) => edges.extend((1..n).map(|v| (v - 1, v))),
            Topology::YoungGrid { dims, side } => {
                // Row-major: the last coordinate has stride 1.
                for v in 0..n {
                    let mut stride = 1;
                    for _ in 0..dims {
                        let coord = (v / stride) % side;
                        if coord + 1 < side {
                            edges.push((v, v + stride));
                        }
                        stride *= side;
                    }
                }
            }
            Topology::Hypercube(k) => {
                for v in 0..n {
                    for b in 0..k {
                        if v & (1 << b) == 0 {
                            edges.push((v, v | (1 << b)));
                        }
                    }
                }
            }
        }
        LabeledDag::from_edges(n, &edges)
    }

    /// The order `get_next` follows for this family. Hypercubes use the
    /// constant-memory cardinality order, everything else plain BFS.
    pub fn insertion_order(&self, g: &LabeledDag) -> VertexOrder {
        match *self {
            Topology::Hypercube(k) => hypercube_order(k),
            _ => bfs_order(g),
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Topology::Star(n) => write!(f, "star:{n}"),
            Topology::Path(n) => write!(f, "path:{n}"),
            Topology::YoungGrid { dims, side } => write!(f, "grid:{dims}:{side}"),
            Topology::Hypercube(k) => write!(f, "hypercube:{k}"),
        }
    }
}

/// Parses `star:N`, `path:N`, `grid:K:S` or `hypercube:K`.
impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTopology(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize> { parts[i].parse().map_err(|_| bad()) };
        let t = match (parts[0], parts.len()) {
            ("star", 2) => Topology::Star(num(1)?),
            ("path", 2) => Topology::Path(num(1)?),
            ("grid", 3) => Topology::YoungGrid {
                dims: u32::try_from(num(1)?).map_err(|_| bad())?,
                side: num(2)?,
            },
            ("hypercube", 2) => Topology::Hypercube(u32::try_from(num(1)?).map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        match t {
            Topology::Star(0) | Topology::Path(0) | Topology::YoungGrid { side: 0, .. } => {
                Err(bad())
            }
            t => Ok(t),
        }
    }
}

/// Stateful cursor over every vertex exactly once, source first, in
/// nondecreasing distance from the source.
#[derive(Debug, Clone)]
pub enum VertexOrder {
    Bfs { order: Vec<VertexId>, pos: usize },
    Hypercube(HypercubeOrder),
}

impl VertexOrder {
    /// The next vertex, or `Exhausted` once all `n` have been returned.
    pub fn get_next(&mut self) -> Result<VertexId> {
        self.next().ok_or(Error::Exhausted)
    }
}

impl Iterator for VertexOrder {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        match self {
            VertexOrder::Bfs { order, pos } => {
                let v = order.get(*pos).copied();
                *pos += v.is_some() as usize;
                v
            }
            VertexOrder::Hypercube(h) => h.next().map(|m| VertexId(m as usize)),
        }
    }
}

/// Breadth-first order from the source, expanding neighbours in ascending
/// id.
pub fn bfs_order(g: &LabeledDag) -> VertexOrder {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut queue = VecDeque::from([g.source()]);
    seen[g.source().index()] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in g.next(u) {
            if !seen[v.index()] {
                seen[v.index()] = true;
                queue.push_back(v);
            }
        }
    }
    VertexOrder::Bfs { order, pos: 0 }
}

/// Bitmasks of `[0, 2^k)` grouped by ascending popcount, ascending value
/// within each group. O(1) time per call and O(1) state.
#[derive(Debug, Clone)]
pub struct HypercubeOrder {
    dims: u32,
    last: Option<u64>,
}

pub fn hypercube_order(k: u32) -> VertexOrder {
    VertexOrder::Hypercube(HypercubeOrder {
        dims: k,
        last: None,
    })
}

impl Iterator for HypercubeOrder {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let next = match self.last {
            None => 0,
            Some(x) => {
                let limit = 1u64.checked_shl(self.dims).unwrap_or(0).wrapping_sub(1);
                match next_same_popcount(x).filter(|&y| y <= limit) {
                    Some(y) => y,
                    None => {
                        let ones = x.count_ones() + 1;
                        if ones > self.dims {
                            return None;
                        }
                        1u64.checked_shl(ones).unwrap_or(0).wrapping_sub(1)
                    }
                }
            }
        };
        self.last = Some(next);
        Some(next)
    }
}

/// Smallest `y > x` with the same popcount, or `None` when no such value
/// fits in 64 bits (or `x == 0`).
pub fn next_same_popcount(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let lowest = x & x.wrapping_neg();
    let ripple = x.checked_add(lowest)?;
    let ones = ((ripple ^ x) >> 2) / lowest;
    Some(ripple | ones)
}

/// Random single-source DAG: vertex 0 is the source, every other vertex
/// gets one uniformly chosen earlier parent plus each other earlier vertex
/// as a parent with probability `density`. Labels are all infinity.
pub fn random_dag(n: usize, density: f64, seed: u64) -> LabeledDag {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = density.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.push((parent, v));
        for u in 0..v {
            if u != parent && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    LabeledDag::from_edges(n.max(1), &edges).expect("forward edges from a single root form a DAG")
}

/// Subset size of a hypercube vertex.
pub fn cardinality(v: VertexId) -> u32 {
    v.index().count_ones()
}
