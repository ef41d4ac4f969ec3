//! Single-source DAG structure with a mutable label per vertex.
//!
//! The graph shape is fixed at construction. Labels are the only mutable
//! state; an edge `(u, v)` is *good* when `label(u) <= label(v)` and the DAG
//! is *ordered* when every edge is good, the generalized heap property.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
///
/// For hypercube DAGs the index is also the subset bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

/// A vertex label: a finite integer or the `Infinity` sentinel.
///
/// `Infinity` is strictly greater than every finite value, including
/// `i64::MAX`, and equal to itself. The derived ordering relies on variant
/// order, so `Finite` must stay first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Finite(i64),
    Infinity,
}

impl Label {
    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Label::Finite(x) => Some(x),
            Label::Infinity => None,
        }
    }
}

impl From<i64> for Label {
    fn from(x: i64) -> Self {
        Label::Finite(x)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(x) => write!(f, "{x}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Label {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "inf" {
            Ok(Label::Infinity)
        } else {
            s.parse().map(Label::Finite)
        }
    }
}

/// Adjacency direction: towards previous neighbours (the source) or towards
/// next neighbours (the sinks).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Prev,
    Next,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Prev => Direction::Next,
            Direction::Next => Direction::Prev,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDag {
    prev: Vec<Vec<VertexId>>,
    next: Vec<Vec<VertexId>>,
    labels: Vec<Label>,
    source: VertexId,
    sources: usize,
    edge_count: usize,
    topo: Vec<VertexId>,
}

impl LabeledDag {
    /// Builds a single-source DAG with every label set to `Infinity`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let dag = Self::build(n, edges)?;
        if dag.sources != 1 {
            return Err(Error::MultipleSources { count: dag.sources });
        }
        dag.check_reachable()?;
        Ok(dag)
    }

    /// Like [`LabeledDag::from_edges`] but accepts any number of in-degree-0
    /// vertices; `source` is the lowest-index one. Only the sift procedures
    /// may be used on such a DAG, the queue rejects it.
    pub fn from_edges_multi_source_unchecked(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges)
    }

    fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut prev = vec![Vec::new(); n];
        let mut next = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(VertexId(u)));
            }
            next[u].push(VertexId(v));
            prev[v].push(VertexId(u));
        }
        for (u, adj) in next.iter_mut().enumerate() {
            adj.sort_unstable();
            if let Some(w) = adj.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(VertexId(u), w[0]));
            }
        }
        for adj in prev.iter_mut() {
            adj.sort_unstable();
        }

        // Kahn's algorithm; leftover vertices mean a cycle.
        let mut indeg: Vec<usize> = prev.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let sources = queue.len();
        let source = VertexId(queue.front().copied().unwrap_or(0));
        let mut topo = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            topo.push(VertexId(u));
            for &VertexId(v) in &next[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CycleDetected);
        }

        Ok(LabeledDag {
            prev,
            next,
            labels: vec![Label::Infinity; n],
            source,
            sources,
            edge_count: edges.len(),
            topo,
        })
    }

    fn check_reachable(&self) -> Result<()> {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![self.source];
        seen[self.source.0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.next[u.0] {
                if !seen[v.0] {
                    seen[v.0] = true;
                    stack.push(v);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(v) => Err(Error::Unreachable(VertexId(v))),
            None => Ok(()),
        }
    }

    /// Replaces every label at once.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::LabelCountMismatch {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    /// Number of in-degree-0 vertices. Always 1 unless the DAG came from
    /// [`LabeledDag::from_edges_multi_source_unchecked`].
    pub fn source_count(&self) -> usize {
        self.sources
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n()).map(VertexId)
    }

    /// Previous neighbours of `v`, ascending.
    pub fn prev(&self, v: VertexId) -> &[VertexId] {
        &self.prev[v.0]
    }

    /// Next neighbours of `v`, ascending.
    pub fn next(&self, v: VertexId) -> &[VertexId] {
        &self.next[v.0]
    }

    pub fn neighbours(&self, v: VertexId, dir: Direction) -> &[VertexId] {
        match dir {
            Direction::Prev => self.prev(v),
            Direction::Next => self.next(v),
        }
    }

    /// A topological order (Kahn, FIFO), fixed at construction.
    pub fn topological_order(&self) -> &[VertexId] {
        &self.topo
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.next
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().map(move |&v| (VertexId(u), v)))
    }

    pub fn is_edge(&self, u: VertexId, v: VertexId) -> bool {
        u.0 < self.n() && self.next[u.0].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v.0]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn set_label(&mut self, v: VertexId, label: Label) {
        self.labels[v.0] = label;
    }

    pub(crate) fn swap_labels(&mut self, u: VertexId, v: VertexId) {
        self.labels.swap(u.0, v.0);
    }

    pub fn is_good_edge(&self, u: VertexId, v: VertexId) -> Result<bool> {
        if !self.is_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.labels[u.0] <= self.labels[v.0])
    }

    pub fn is_ordered(&self) -> bool {
        self.edges()
            .all(|(u, v)| self.labels[u.0] <= self.labels[v.0])
    }

    pub fn bad_edges(&self) -> Vec<(VertexId, VertexId)> {
        self.edges()
            .filter(|&(u, v)| self.labels[u.0] > self.labels[v.0])
            .collect()
    }

    /// The label multiset, as a sorted vector.
    pub fn labels_multiset(&self) -> Vec<Label> {
        let mut labels = self.labels.clone();
        labels.sort_unstable();
        labels
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.prev[v.0].len()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.next[v.0].len()
    }
}
