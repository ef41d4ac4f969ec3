//! Per-iteration snapshots of a lowering, rendered as Graphviz DOT.
//!
//! The sifting vertex is filled gray; the vertex the next iteration will
//! exchange with is filled black.

use std::fmt::Write as _;

use crate::error::Result;
use crate::labeled_dag::{Label, LabeledDag, VertexId};
use crate::reorder::{self, ComparisonCounter, ExchangeTrace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub labels: Vec<Label>,
    pub current: VertexId,
    pub next_violating: Option<VertexId>,
}

/// Runs a checked lowering of `v` to `new`, recording one snapshot after
/// the label is written and one after every exchange.
pub fn record_lowering(
    g: &mut LabeledDag,
    v: VertexId,
    new: Label,
) -> Result<(ExchangeTrace, Vec<Snapshot>)> {
    if new >= g.label(v) {
        return Err(crate::Error::NotLowering {
            current: g.label(v),
            new,
        });
    }
    if !g.is_ordered() {
        return Err(crate::Error::NotOrdered);
    }
    let mut snapshots = Vec::new();
    let mut counter = ComparisonCounter::new();
    let trace = reorder::lower_label_observed(g, v, new, &mut counter, |g, current| {
        let mut scratch = ComparisonCounter::new();
        snapshots.push(Snapshot {
            labels: g.labels().to_vec(),
            current,
            next_violating: reorder::get_largest_violating(g, current, &mut scratch),
        });
    })?;
    Ok((trace, snapshots))
}

/// One `digraph` per snapshot over the structure of `g`.
pub fn snapshot_to_dot(g: &LabeledDag, snap: &Snapshot, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    out.push_str("  rankdir=LR;\n  node [shape=circle];\n");
    for v in g.vertices() {
        let label = snap.labels[v.index()];
        let style = if v == snap.current {
            ", style=filled, fillcolor=gray80"
        } else if Some(v) == snap.next_violating {
            ", style=filled, fillcolor=black, fontcolor=white"
        } else {
            ""
        };
        let _ = writeln!(out, "  v{v} [label=\"{label}\"{style}];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  v{u} -> v{v};");
    }
    out.push_str("}\n");
    out
}

pub fn snapshots_to_dot(g: &LabeledDag, snaps: &[Snapshot]) -> String {
    snaps
        .iter()
        .enumerate()
        .map(|(i, s)| snapshot_to_dot(g, s, &format!("step{i}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sample_lowering_snapshots() {
        let mut g = fixtures::sample();
        let (trace, snaps) = record_lowering(&mut g, VertexId(9), 3.into()).unwrap();
        assert_eq!(trace.len(), 5);
        assert_eq!(snaps.len(), 6);
        let currents: Vec<usize> = snaps.iter().map(|s| s.current.index()).collect();
        assert_eq!(currents, [9, 7, 8, 5, 3, 2]);
        let blacks: Vec<Option<usize>> = snaps
            .iter()
            .map(|s| s.next_violating.map(VertexId::index))
            .collect();
        assert_eq!(blacks, [Some(7), Some(8), Some(5), Some(3), Some(2), None]);
        // (c): the lowered 3 sits where 9 was, 9 moved up to the old 10.
        assert_eq!(snaps[2].labels[7], Label::Finite(9));
        assert_eq!(snaps[2].labels[8], Label::Finite(3));
        let last: Vec<Label> = fixtures::SAMPLE_AFTER_LOWERING.map(Label::Finite).to_vec();
        assert_eq!(snaps[5].labels, last);

        let dot = snapshots_to_dot(&g, &snaps);
        assert_eq!(dot.matches("digraph").count(), 6);
        assert!(dot.contains("v9 [label=\"3\", style=filled, fillcolor=gray80];"));
    }

    #[test]
    fn single_vertex_has_one_snapshot() {
        let mut g = LabeledDag::from_edges(1, &[])
            .unwrap()
            .with_labels(vec![4.into()])
            .unwrap();
        let (_, snaps) = record_lowering(&mut g, VertexId(0), 1.into()).unwrap();
        assert_eq!(snaps.len(), 1);
        assert!(record_lowering(&mut g, VertexId(0), 1.into()).is_err());
    }
}
