//! Sorting by filling an ordered DAG and draining its minimum.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::labeled_dag::{Label, LabeledDag};
use crate::pqueue::OrderedDagQueue;
use crate::topologies::{hypercube_order, Topology, VertexOrder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortReport {
    pub output: Vec<i64>,
    pub insert_comparisons: u64,
    pub remove_comparisons: u64,
    pub total_comparisons: u64,
    /// `None` when sorting over a caller-supplied DAG.
    pub topology: Option<Topology>,
    pub n_elements: usize,
}

fn run(
    g: LabeledDag,
    order: VertexOrder,
    input: &[i64],
    topology: Option<Topology>,
) -> Result<SortReport> {
    let mut q = OrderedDagQueue::with_order(g, order)?;
    for &x in input {
        q.insert(Label::Finite(x))?;
    }
    let insert_comparisons = q.comparisons();
    q.reset_comparisons();
    let mut output = Vec::with_capacity(input.len());
    for _ in 0..input.len() {
        let min = q.remove_min()?;
        output.push(min.finite().expect("finite labels drain before infinity"));
    }
    let remove_comparisons = q.comparisons();
    Ok(SortReport {
        output,
        insert_comparisons,
        remove_comparisons,
        total_comparisons: insert_comparisons + remove_comparisons,
        topology,
        n_elements: input.len(),
    })
}

/// Sorts `input` over `g`, which must have exactly `input.len()` vertices,
/// inserting in BFS order.
pub fn dag_sort(g: LabeledDag, input: &[i64]) -> Result<SortReport> {
    if g.n() != input.len() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: input.len(),
        });
    }
    let order = crate::topologies::bfs_order(&g);
    run(g, order, input, None)
}

/// [`dag_sort`] over a built topology, using its insertion order.
pub fn sort_with_topology(t: Topology, input: &[i64]) -> Result<SortReport> {
    let g = t.build()?;
    if g.n() != input.len() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: input.len(),
        });
    }
    let order = t.insertion_order(&g);
    run(g, order, input, Some(t))
}

/// Smallest hypercube dimension holding `n` elements.
pub fn hypercube_dims_for(n: usize) -> u32 {
    n.max(1).next_power_of_two().trailing_zeros()
}

/// Sorts on the smallest hypercube that fits. Vertices left unfilled stay at
/// infinity and act as padding; no sentinel values are inserted.
pub fn hypercube_sort(input: &[i64]) -> Result<SortReport> {
    let k = hypercube_dims_for(input.len());
    let t = Topology::Hypercube(k);
    run(t.build()?, hypercube_order(k), input, Some(t))
}

/// `n, n - 1, ..., 1`: every insert sifts all the way to the source.
pub fn worst_case_input(n: usize) -> Vec<i64> {
    (1..=n as i64).rev().collect()
}

/// Input shapes for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    Random,
    Sorted,
    Reverse,
    Equal,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [
        Pattern::Random,
        Pattern::Sorted,
        Pattern::Reverse,
        Pattern::Equal,
    ];

    /// `n` values; only `Random` uses the seed (uniform in `[0, 2^31)`).
    pub fn generate(self, n: usize, seed: u64) -> Vec<i64> {
        match self {
            Pattern::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..n).map(|_| rng.gen_range(0..1i64 << 31)).collect()
            }
            Pattern::Sorted => (1..=n as i64).collect(),
            Pattern::Reverse => worst_case_input(n),
            Pattern::Equal => vec![0; n],
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::Random => "random",
            Pattern::Sorted => "sorted",
            Pattern::Reverse => "reverse",
            Pattern::Equal => "equal",
        })
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "random" => Pattern::Random,
            "sorted" => Pattern::Sorted,
            "reverse" => Pattern::Reverse,
            "equal" => Pattern::Equal,
            _ => return Err(format!("unknown pattern {s:?}")),
        })
    }
}
