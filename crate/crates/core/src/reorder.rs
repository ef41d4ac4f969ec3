//! Label sifting on ordered DAGs.
//!
//! Lowering a label walks it towards the source, each step exchanging labels
//! with the largest violating previous neighbour. Raising walks towards the
//! sinks through the smallest violating next neighbour. Two raise routes
//! exist: [`raise_label`] is written directly, [`raise_label_via_reversal`]
//! reuses the lowering loop on a negated, edge-reversed view. Both must agree.
//!
//! Every label-vs-label comparison is charged to a [`ComparisonCounter`].
//! Selecting among `m >= 1` candidate neighbours costs exactly `m`
//! comparisons: `m - 1` for the argmax scan plus one violation test.

use std::cmp::{Ordering, Reverse};
use std::fmt;

use crate::error::{Error, Result};
use crate::labeled_dag::{Direction, Label, LabeledDag, VertexId};

/// Tally of label comparisons.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComparisonCounter {
    count: u64,
}

impl ComparisonCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn reset(&mut self) {
        self.count = 0;
    }

    #[inline]
    pub fn compare<T: Ord>(&mut self, a: &T, b: &T) -> Ordering {
        self.count += 1;
        a.cmp(b)
    }
}

/// One label exchange between `from` (the sifting position) and `to` (the
/// violating neighbour). `label` is the neighbour's label, which moves into
/// `from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exchange {
    pub from: VertexId,
    pub to: VertexId,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeTrace {
    pub steps: Vec<Exchange>,
    pub terminal: VertexId,
}

impl ExchangeTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// One `swap u v label=x` line per exchange.
impl fmt::Display for ExchangeTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "swap {} {} label={}", s.from, s.to, s.label)?;
        }
        Ok(())
    }
}

/// Whether a candidate ordered `ord` against the running best replaces it.
/// Equal candidates keep the earlier (lower-id) best.
#[inline]
fn replaces(ord: Ordering, want: Ordering) -> bool {
    ord == want || (cfg!(feature = "mutation-invert-tiebreak") && ord == Ordering::Equal)
}

/// The neighbour in `dir` with the greatest key, if that key exceeds the key
/// of `v`. Ties go to the lowest `VertexId` since adjacency is ascending and
/// only a strictly greater key replaces the running best.
fn largest_violating_by<K: Ord>(
    g: &LabeledDag,
    v: VertexId,
    dir: Direction,
    key: impl Fn(Label) -> K,
    counter: &mut ComparisonCounter,
) -> Option<VertexId> {
    let (&first, rest) = g.neighbours(v, dir).split_first()?;
    let mut best = first;
    let mut best_key = key(g.label(first));
    for &u in rest {
        let k = key(g.label(u));
        if replaces(counter.compare(&k, &best_key), Ordering::Greater) {
            best = u;
            best_key = k;
        }
    }
    let own = key(g.label(v));
    (counter.compare(&best_key, &own) == Ordering::Greater).then_some(best)
}

/// The previous neighbour of `v` with the largest label, provided it is
/// strictly greater than `v`'s label.
pub fn get_largest_violating(
    g: &LabeledDag,
    v: VertexId,
    counter: &mut ComparisonCounter,
) -> Option<VertexId> {
    largest_violating_by(g, v, Direction::Prev, |l| l, counter)
}

/// Mirror of [`get_largest_violating`] over next neighbours: the smallest
/// next label, provided it is strictly below `v`'s label.
pub fn get_smallest_violating_next(
    g: &LabeledDag,
    v: VertexId,
    counter: &mut ComparisonCounter,
) -> Option<VertexId> {
    let (&first, rest) = g.next(v).split_first()?;
    let mut best = first;
    for &u in rest {
        if replaces(counter.compare(&g.label(u), &g.label(best)), Ordering::Less) {
            best = u;
        }
    }
    (counter.compare(&g.label(best), &g.label(v)) == Ordering::Less).then_some(best)
}

fn sift_by<K: Ord>(
    g: &mut LabeledDag,
    start: VertexId,
    dir: Direction,
    key: impl Fn(Label) -> K + Copy,
    counter: &mut ComparisonCounter,
    observer: &mut dyn FnMut(&LabeledDag, VertexId),
) -> ExchangeTrace {
    let mut current = start;
    let mut steps = Vec::new();
    observer(g, current);
    while let Some(u) = largest_violating_by(g, current, dir, key, counter) {
        steps.push(Exchange {
            from: current,
            to: u,
            label: g.label(u),
        });
        g.swap_labels(current, u);
        current = u;
        observer(g, current);
    }
    ExchangeTrace {
        steps,
        terminal: current,
    }
}

fn check_lowering(g: &LabeledDag, v: VertexId, new: Label) -> Result<()> {
    let current = g.label(v);
    if new >= current {
        return Err(Error::NotLowering { current, new });
    }
    Ok(())
}

fn check_raising(g: &LabeledDag, v: VertexId, new: Label) -> Result<()> {
    let current = g.label(v);
    if new <= current {
        return Err(Error::NotRaising { current, new });
    }
    Ok(())
}

/// Sets `v`'s label to `new` (strictly lower) and sifts it towards the
/// source until the DAG is ordered again.
///
/// The DAG is assumed ordered on entry; [`lower_label_checked`] verifies it.
pub fn lower_label(
    g: &mut LabeledDag,
    v: VertexId,
    new: Label,
    counter: &mut ComparisonCounter,
) -> Result<ExchangeTrace> {
    lower_label_observed(g, v, new, counter, |_, _| {})
}

/// [`lower_label`] with an O(|E|) ordered-ness check of the precondition.
pub fn lower_label_checked(
    g: &mut LabeledDag,
    v: VertexId,
    new: Label,
    counter: &mut ComparisonCounter,
) -> Result<ExchangeTrace> {
    check_lowering(g, v, new)?;
    if !g.is_ordered() {
        return Err(Error::NotOrdered);
    }
    lower_label(g, v, new, counter)
}

/// [`lower_label`], calling `observer(g, current)` once after the new label
/// is written and again at the end of every exchange iteration.
pub fn lower_label_observed(
    g: &mut LabeledDag,
    v: VertexId,
    new: Label,
    counter: &mut ComparisonCounter,
    mut observer: impl FnMut(&LabeledDag, VertexId),
) -> Result<ExchangeTrace> {
    check_lowering(g, v, new)?;
    g.set_label(v, new);
    Ok(sift_by(
        g,
        v,
        Direction::Prev,
        |l| l,
        counter,
        &mut observer,
    ))
}

/// Sets `v`'s label to `new` (strictly higher) and sifts it towards the
/// sinks.
pub fn raise_label(
    g: &mut LabeledDag,
    v: VertexId,
    new: Label,
    counter: &mut ComparisonCounter,
) -> Result<ExchangeTrace> {
    raise_label_observed(g, v, new, counter, |_, _| {})
}

pub fn raise_label_observed(
    g: &mut LabeledDag,
    v: VertexId,
    new: Label,
    counter: &mut ComparisonCounter,
    mut observer: impl FnMut(&LabeledDag, VertexId),
) -> Result<ExchangeTrace> {
    check_raising(g, v, new)?;
    g.set_label(v, new);
    let mut current = v;
    let mut steps = Vec::new();
    observer(g, current);
    while let Some(u) = get_smallest_violating_next(g, current, counter) {
        steps.push(Exchange {
            from: current,
            to: u,
            label: g.label(u),
        });
        g.swap_labels(current, u);
        current = u;
        observer(g, current);
    }
    Ok(ExchangeTrace {
        steps,
        terminal: current,
    })
}

/// Raising as lowering on the mirrored problem: labels negated and edges
/// reversed, then the lowering loop runs with `-new`.
///
/// Negation is `std::cmp::Reverse` (so infinity maps below every finite
/// value without overflow) and reversal swaps which adjacency list is read
/// as "previous". Nothing is materialized, so restoring the original
/// orientation and signs is a no-op.
pub fn raise_label_via_reversal(
    g: &mut LabeledDag,
    v: VertexId,
    new: Label,
) -> Result<ExchangeTrace> {
    check_raising(g, v, new)?;
    g.set_label(v, new);
    let mut scratch = ComparisonCounter::new();
    Ok(sift_by(
        g,
        v,
        Direction::Prev.reversed(),
        Reverse,
        &mut scratch,
        &mut |_, _| {},
    ))
}

/// Violation of the lowering loop invariant found mid-sift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopInvariantViolation {
    /// A bad edge that does not touch `current` on the expected side.
    StrayBadEdge(VertexId, VertexId),
    /// A previous neighbour of `current` labeled above one of its next
    /// neighbours.
    NeighbourOrder { prev: VertexId, next: VertexId },
}

/// Checks the two-part invariant that holds at the end of every lowering
/// iteration: every bad edge enters `current`, and every previous
/// neighbour of `current` is labeled at most every next neighbour. O(|E|).
pub fn check_lowering_invariant(
    g: &LabeledDag,
    current: VertexId,
) -> std::result::Result<(), LoopInvariantViolation> {
    check_invariant(g, current, Direction::Prev)
}

/// Mirror of [`check_lowering_invariant`] for raising: every bad edge
/// leaves `current`.
pub fn check_raising_invariant(
    g: &LabeledDag,
    current: VertexId,
) -> std::result::Result<(), LoopInvariantViolation> {
    check_invariant(g, current, Direction::Next)
}

fn check_invariant(
    g: &LabeledDag,
    current: VertexId,
    dir: Direction,
) -> std::result::Result<(), LoopInvariantViolation> {
    for (u, v) in g.bad_edges() {
        let touches = match dir {
            Direction::Prev => v == current,
            Direction::Next => u == current,
        };
        if !touches {
            return Err(LoopInvariantViolation::StrayBadEdge(u, v));
        }
    }
    for &p in g.prev(current) {
        for &n in g.next(current) {
            if g.label(p) > g.label(n) {
                return Err(LoopInvariantViolation::NeighbourOrder { prev: p, next: n });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn labeled(n: usize, edges: &[(usize, usize)], labels: &[i64]) -> LabeledDag {
        LabeledDag::from_edges(n, edges)
            .unwrap()
            .with_labels(labels.iter().map(|&x| Label::Finite(x)).collect())
            .unwrap()
    }

    fn finite(g: &LabeledDag) -> Vec<i64> {
        g.labels().iter().map(|l| l.finite().unwrap()).collect()
    }

    #[test]
    fn largest_violating_in_sample() {
        let mut g = fixtures::sample();
        g.set_label(VertexId(9), Label::Finite(3));
        let mut c = ComparisonCounter::new();
        assert_eq!(
            get_largest_violating(&g, VertexId(9), &mut c),
            Some(VertexId(7))
        );
        assert_eq!(c.count(), 3);
    }

    #[test]
    fn largest_violating_source_costs_nothing() {
        let g = labeled(2, &[(0, 1)], &[1, 2]);
        let mut c = ComparisonCounter::new();
        assert_eq!(get_largest_violating(&g, VertexId(0), &mut c), None);
        assert_eq!(c.count(), 0);
    }

    #[test]
    fn largest_violating_tie_goes_to_lower_index() {
        // 0 -> {1, 2} -> 3, labels 7 7 on the middle vertices, 5 at the sink
        let g = labeled(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], &[0, 7, 7, 5]);
        let mut c = ComparisonCounter::new();
        assert_eq!(
            get_largest_violating(&g, VertexId(3), &mut c),
            Some(VertexId(1))
        );
        assert_eq!(c.count(), 2);
    }

    #[test]
    fn smallest_violating_next() {
        let g = LabeledDag::from_edges(3, &[(0, 1), (1, 2)])
            .unwrap()
            .with_labels(vec![Label::Infinity, 2.into(), 3.into()])
            .unwrap();
        let mut c = ComparisonCounter::new();
        assert_eq!(
            get_smallest_violating_next(&g, VertexId(0), &mut c),
            Some(VertexId(1))
        );
        assert_eq!(c.count(), 1);

        c.reset();
        assert_eq!(get_smallest_violating_next(&g, VertexId(2), &mut c), None);
        assert_eq!(c.count(), 0);

        let g = labeled(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], &[9, 4, 4, 10]);
        c.reset();
        assert_eq!(
            get_smallest_violating_next(&g, VertexId(0), &mut c),
            Some(VertexId(1))
        );
        assert_eq!(c.count(), 2);
    }

    #[test]
    fn sample_lowering() {
        let mut g = fixtures::sample();
        let mut c = ComparisonCounter::new();
        let trace = lower_label(
            &mut g,
            VertexId(fixtures::SAMPLE_LOWERED_VERTEX),
            Label::Finite(3),
            &mut c,
        )
        .unwrap();
        let displaced: Vec<Label> = trace.steps.iter().map(|s| s.label).collect();
        assert_eq!(displaced, [10, 9, 8, 6, 4].map(Label::Finite).to_vec());
        assert_eq!(trace.terminal, VertexId(2));
        assert_eq!(finite(&g), fixtures::SAMPLE_AFTER_LOWERING);
        assert!(g.is_ordered());
        // 3 + 3 + 2 + 2 + 1 + 2 previous neighbours visited
        assert_eq!(c.count(), 13);
        assert_eq!(
            trace.to_string(),
            "swap 9 7 label=10\nswap 7 8 label=9\nswap 8 5 label=8\nswap 5 3 label=6\nswap 3 2 label=4\n"
        );
    }

    #[test]
    fn lowering_single_vertex() {
        let mut g = labeled(1, &[], &[10]);
        let mut c = ComparisonCounter::new();
        let t = lower_label(&mut g, VertexId(0), 5.into(), &mut c).unwrap();
        assert!(t.is_empty());
        assert_eq!(g.label(VertexId(0)), Label::Finite(5));
    }

    #[test]
    fn lowering_path_to_source() {
        let mut g = labeled(3, &[(0, 1), (1, 2)], &[1, 4, 9]);
        let mut c = ComparisonCounter::new();
        let t = lower_label(&mut g, VertexId(2), 0.into(), &mut c).unwrap();
        assert_eq!(finite(&g), [0, 1, 4]);
        assert_eq!(t.len(), 2);
        assert_eq!(c.count(), 2);
    }

    #[test]
    fn lowering_requires_strict_decrease() {
        let mut g = labeled(2, &[(0, 1)], &[1, 4]);
        let mut c = ComparisonCounter::new();
        assert_eq!(
            lower_label(&mut g, VertexId(1), 4.into(), &mut c),
            Err(Error::NotLowering {
                current: 4.into(),
                new: 4.into()
            })
        );
        assert!(lower_label(&mut g, VertexId(1), Label::Infinity, &mut c).is_err());
    }

    #[test]
    fn checked_lowering_rejects_unordered() {
        let mut g = labeled(2, &[(0, 1)], &[5, 4]);
        let mut c = ComparisonCounter::new();
        assert_eq!(
            lower_label_checked(&mut g, VertexId(1), 1.into(), &mut c),
            Err(Error::NotOrdered)
        );
    }

    #[test]
    fn raising_path() {
        let mut g = labeled(3, &[(0, 1), (1, 2)], &[1, 2, 3]);
        let mut h = g.clone();
        let mut c = ComparisonCounter::new();
        raise_label(&mut g, VertexId(0), 5.into(), &mut c).unwrap();
        assert_eq!(finite(&g), [2, 3, 5]);
        raise_label_via_reversal(&mut h, VertexId(0), 5.into()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn raising_sink_and_single_vertex() {
        let mut g = labeled(2, &[(0, 1)], &[1, 2]);
        let mut c = ComparisonCounter::new();
        let t = raise_label(&mut g, VertexId(1), 7.into(), &mut c).unwrap();
        assert!(t.is_empty());
        assert_eq!(finite(&g), [1, 7]);

        let mut g = labeled(1, &[], &[3]);
        let t = raise_label_via_reversal(&mut g, VertexId(0), 8.into()).unwrap();
        assert!(t.is_empty());
        assert_eq!(finite(&g), [8]);
    }

    #[test]
    fn raising_star_source_to_infinity() {
        let mut g = labeled(4, &[(0, 1), (0, 2), (0, 3)], &[1, 4, 7, 2]);
        let mut h = g.clone();
        let mut c = ComparisonCounter::new();
        let t = raise_label(&mut g, VertexId(0), Label::Infinity, &mut c).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(g.labels(), &[2.into(), 4.into(), 7.into(), Label::Infinity]);
        assert_eq!(c.count(), 3);
        raise_label_via_reversal(&mut h, VertexId(0), Label::Infinity).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn raising_requires_strict_increase() {
        let mut g = labeled(2, &[(0, 1)], &[1, 4]);
        let mut c = ComparisonCounter::new();
        assert!(matches!(
            raise_label(&mut g, VertexId(0), 1.into(), &mut c),
            Err(Error::NotRaising { .. })
        ));
        assert!(matches!(
            raise_label_via_reversal(&mut g, VertexId(0), 0.into()),
            Err(Error::NotRaising { .. })
        ));
    }

    #[test]
    fn sample_invariant_holds_each_iteration() {
        let mut g = fixtures::sample();
        let mut c = ComparisonCounter::new();
        let mut iterations = 0;
        lower_label_observed(&mut g, VertexId(9), 3.into(), &mut c, |g, cur| {
            iterations += 1;
            check_lowering_invariant(g, cur).unwrap();
        })
        .unwrap();
        assert_eq!(iterations, 6);
    }

    #[test]
    fn invariant_detects_stray_bad_edge() {
        let g = labeled(3, &[(0, 1), (1, 2)], &[5, 1, 9]);
        assert_eq!(
            check_lowering_invariant(&g, VertexId(2)),
            Err(LoopInvariantViolation::StrayBadEdge(
                VertexId(0),
                VertexId(1)
            ))
        );
        assert!(check_lowering_invariant(&g, VertexId(1)).is_ok());
    }
}
