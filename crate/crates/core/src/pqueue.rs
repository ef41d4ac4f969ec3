//! Priority queue over any single-source DAG.
//!
//! All vertices start at infinity. Insertion writes the new label into an
//! infinity vertex and sifts it towards the source; the source always holds
//! the minimum; removal raises the source to infinity and sifts it down.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::labeled_dag::{Label, LabeledDag, VertexId};
use crate::reorder::{self, ComparisonCounter, ExchangeTrace};
use crate::topologies::{bfs_order, VertexOrder};

#[derive(Debug, Clone)]
pub struct OrderedDagQueue {
    dag: LabeledDag,
    /// Insertion order, materialized from the `VertexOrder` cursor.
    order: Vec<VertexId>,
    /// Position of each vertex in `order`.
    position: Vec<usize>,
    /// Positions (in `order`) of vertices currently labeled infinity.
    infinity_slots: BTreeSet<usize>,
    counter: ComparisonCounter,
}

impl OrderedDagQueue {
    /// Empty queue over `g`, inserting in BFS order.
    pub fn new(g: LabeledDag) -> Result<Self> {
        let order = bfs_order(&g);
        Self::with_order(g, order)
    }

    /// Empty queue over `g` with an explicit insertion order, which must
    /// visit every vertex once in nondecreasing distance from the source.
    pub fn with_order(g: LabeledDag, order: VertexOrder) -> Result<Self> {
        if g.source_count() != 1 {
            return Err(Error::MultipleSources {
                count: g.source_count(),
            });
        }
        if g.labels().iter().any(|l| l.is_finite()) {
            return Err(Error::NotAllInfinity);
        }
        let order: Vec<VertexId> = order.collect();
        debug_assert_eq!(order.len(), g.n());
        let mut position = vec![usize::MAX; g.n()];
        for (i, v) in order.iter().enumerate() {
            position[v.index()] = i;
        }
        Ok(OrderedDagQueue {
            infinity_slots: (0..g.n()).collect(),
            dag: g,
            order,
            position,
            counter: ComparisonCounter::new(),
        })
    }

    pub fn dag(&self) -> &LabeledDag {
        &self.dag
    }

    pub fn into_dag(self) -> LabeledDag {
        self.dag
    }

    pub fn capacity(&self) -> usize {
        self.dag.n()
    }

    /// Number of finite labels.
    pub fn len(&self) -> usize {
        self.dag.n() - self.infinity_slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn comparisons(&self) -> u64 {
        self.counter.count()
    }

    pub fn reset_comparisons(&mut self) {
        self.counter.reset();
    }

    /// Insertion order in use.
    pub fn insertion_order(&self) -> &[VertexId] {
        &self.order
    }

    fn refresh_slot(&mut self, v: VertexId) {
        let pos = self.position[v.index()];
        if self.dag.label(v).is_finite() {
            self.infinity_slots.remove(&pos);
        } else {
            self.infinity_slots.insert(pos);
        }
    }

    fn refresh_trace(&mut self, start: VertexId, trace: &ExchangeTrace) {
        self.refresh_slot(start);
        for s in &trace.steps {
            self.refresh_slot(s.to);
        }
    }

    /// Inserts `label` and returns the vertex it came to rest at.
    ///
    /// The target is the infinity vertex earliest in the insertion order;
    /// with no removals yet that is exactly the next vertex of the order.
    pub fn insert(&mut self, label: Label) -> Result<VertexId> {
        if !label.is_finite() {
            return Err(Error::NonFiniteLabel);
        }
        let &pos = self.infinity_slots.first().ok_or(Error::Full)?;
        let target = self.order[pos];
        let trace = reorder::lower_label(&mut self.dag, target, label, &mut self.counter)?;
        self.refresh_trace(target, &trace);
        Ok(trace.terminal)
    }

    /// The source and its label, which is the minimum.
    pub fn get_min(&self) -> Result<(VertexId, Label)> {
        if self.is_empty() {
            return Err(Error::Empty);
        }
        let s = self.dag.source();
        Ok((s, self.dag.label(s)))
    }

    pub fn remove_min(&mut self) -> Result<Label> {
        let (s, min) = self.get_min()?;
        let trace = reorder::raise_label(&mut self.dag, s, Label::Infinity, &mut self.counter)?;
        self.refresh_trace(s, &trace);
        Ok(min)
    }

    /// Decreases the label at `v`. Handles are positions: after other
    /// operations `v` may hold a different label than it once did.
    pub fn lower_label_at(&mut self, v: VertexId, new: Label) -> Result<()> {
        let trace = reorder::lower_label(&mut self.dag, v, new, &mut self.counter)?;
        self.refresh_trace(v, &trace);
        Ok(())
    }

    /// Increases the label at `v` to a finite value; raising to infinity is
    /// what [`OrderedDagQueue::remove_min`] does.
    pub fn raise_label_at(&mut self, v: VertexId, new: Label) -> Result<()> {
        if !new.is_finite() {
            return Err(Error::RaiseToInfinityForbidden);
        }
        let trace = reorder::raise_label(&mut self.dag, v, new, &mut self.counter)?;
        self.refresh_trace(v, &trace);
        Ok(())
    }
}
