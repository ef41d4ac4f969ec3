//! The twelve-vertex ordered DAG used as the worked lowering example.
//!
//! Vertices are numbered left to right, top to bottom as drawn; it has two
//! in-degree-0 vertices (labels 1 and 2).

use crate::labeled_dag::{Label, LabeledDag};

/// The fixture in the DAG text format.
pub const SAMPLE_TEXT: &str = include_str!("../../cli/fixtures/sample.dag");

/// Vertex holding label 12, the one lowered to 3 in the worked example.
pub const SAMPLE_LOWERED_VERTEX: usize = 9;

/// Labels after lowering vertex 9 from 12 to 3.
pub const SAMPLE_AFTER_LOWERING: [i64; 12] = [1, 2, 3, 4, 6, 6, 8, 9, 8, 10, 14, 16];

pub fn sample_edges() -> (usize, Vec<(usize, usize)>) {
    let edges = vec![
        (0, 2),
        (1, 2),
        (1, 8),
        (2, 3),
        (2, 4),
        (3, 5),
        (3, 6),
        (4, 5),
        (5, 6),
        (5, 7),
        (5, 8),
        (6, 7),
        (6, 9),
        (7, 9),
        (8, 7),
        (8, 9),
        (9, 10),
        (9, 11),
    ];
    (12, edges)
}

pub fn sample_labels() -> Vec<Label> {
    [1, 2, 4, 6, 6, 8, 8, 10, 9, 12, 14, 16]
        .into_iter()
        .map(Label::Finite)
        .collect()
}

pub fn sample() -> LabeledDag {
    let (n, edges) = sample_edges();
    LabeledDag::from_edges_multi_source_unchecked(n, &edges)
        .and_then(|g| g.with_labels(sample_labels()))
        .expect("sample fixture is a valid DAG")
}
