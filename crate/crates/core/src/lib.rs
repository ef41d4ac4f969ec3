//! Priority queues over heap-ordered single-source DAGs.
//!
//! A labeled DAG is *ordered* when every edge `(u, v)` has
//! `label(u) <= label(v)`. Lowering or raising one label and sifting it
//! along violating edges restores the property, which turns any
//! single-source DAG into a priority queue and any such queue into a
//! sorting algorithm. Stars give selection sort, paths insertion sort,
//! grids Young-tableau sort, and hypercubes an `O(n log^2 n)` sort.
//! Every label comparison is counted.

pub mod analysis;
pub mod dag_sort;
mod error;
pub mod fixtures;
pub mod format;
pub mod labeled_dag;
pub mod pqueue;
pub mod reorder;
pub mod topologies;
pub mod trace;

pub use analysis::{general_bound, log_factorial_bound_holds, stats, DagStats, LogFactorialCheck};
pub use dag_sort::{
    dag_sort, hypercube_sort, sort_with_topology, worst_case_input, Pattern, SortReport,
};
pub use error::{Error, Result};
pub use labeled_dag::{Direction, Label, LabeledDag, VertexId};
pub use pqueue::OrderedDagQueue;
pub use reorder::{ComparisonCounter, Exchange, ExchangeTrace};
pub use topologies::{Topology, VertexOrder};
