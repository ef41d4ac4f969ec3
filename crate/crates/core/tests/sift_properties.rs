//! Randomized checks of the sift procedures on arbitrary single-source DAGs.

use ordered_dag::analysis;
use ordered_dag::reorder::{
    self, check_lowering_invariant, check_raising_invariant, raise_label_via_reversal,
};
use ordered_dag::{ComparisonCounter, Label, LabeledDag, VertexId};
use proptest::prelude::*;

/// Vertex 0 is the only source: every other vertex gets one random earlier
/// parent plus extra forward edges with probability `density`.
fn random_dag(n: usize, density: f64, seed: u64) -> LabeledDag {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
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
    LabeledDag::from_edges(n, &edges).unwrap()
}

/// Ordered labeling: nondecreasing along the construction order, which is
/// topological.
fn ordered_labels(g: LabeledDag, seed: u64) -> LabeledDag {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut vals: Vec<i64> = (0..g.n()).map(|_| rng.gen_range(-20..20)).collect();
    vals.sort_unstable();
    g.with_labels(vals.into_iter().map(Label::Finite).collect())
        .unwrap()
}

fn replaced(mut before: Vec<Label>, old: Label, new: Label) -> Vec<Label> {
    let i = before.iter().position(|&l| l == old).unwrap();
    before[i] = new;
    before.sort_unstable();
    before
}

/// Longest path ending at `v`, i.e. its depth.
fn depth(g: &LabeledDag, v: VertexId) -> usize {
    g.prev(v)
        .iter()
        .map(|&u| depth(g, u) + 1)
        .max()
        .unwrap_or(0)
}

fn height(g: &LabeledDag, v: VertexId) -> usize {
    g.next(v)
        .iter()
        .map(|&u| height(g, u) + 1)
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn lowering_restores_order(n in 1usize..40, density in 0.0f64..0.4, seed: u64, pick: usize, delta in 1i64..50) {
        let mut g = ordered_labels(random_dag(n, density, seed), seed ^ 1);
        let v = VertexId(pick % n);
        let old = g.label(v);
        let new = Label::Finite(old.finite().unwrap() - delta);
        let before = g.labels_multiset();
        let mut c = ComparisonCounter::new();
        let mut visited_prev = 0u64;
        let trace = reorder::lower_label_observed(&mut g, v, new, &mut c, |g, cur| {
            visited_prev += g.in_degree(cur) as u64;
            check_lowering_invariant(g, cur).unwrap();
        }).unwrap();
        prop_assert!(g.is_ordered());
        prop_assert_eq!(g.labels_multiset(), replaced(before, old, new));
        prop_assert!(trace.len() <= depth(&g, v));
        prop_assert_eq!(c.count(), visited_prev);
        for w in trace.steps.windows(2) {
            prop_assert_eq!(w[0].to, w[1].from);
        }
        for s in &trace.steps {
            prop_assert!(g.is_edge(s.to, s.from));
        }
    }

    #[test]
    fn raising_restores_order(n in 1usize..40, density in 0.0f64..0.4, seed: u64, pick: usize, delta in 1i64..50, to_inf: bool) {
        let mut g = ordered_labels(random_dag(n, density, seed), seed ^ 2);
        let v = VertexId(pick % n);
        let old = g.label(v);
        let new = if to_inf { Label::Infinity } else { Label::Finite(old.finite().unwrap() + delta) };
        let before = g.labels_multiset();
        let mut h = g.clone();
        let mut c = ComparisonCounter::new();
        let mut visited_next = 0u64;
        let trace = reorder::raise_label_observed(&mut g, v, new, &mut c, |g, cur| {
            visited_next += g.out_degree(cur) as u64;
            check_raising_invariant(g, cur).unwrap();
        }).unwrap();
        prop_assert!(g.is_ordered());
        prop_assert_eq!(g.labels_multiset(), replaced(before, old, new));
        prop_assert!(trace.len() <= height(&g, v));
        prop_assert_eq!(c.count(), visited_next);

        let mirrored = raise_label_via_reversal(&mut h, v, new).unwrap();
        prop_assert_eq!(h.labels(), g.labels());
        prop_assert_eq!(mirrored, trace);
    }

    #[test]
    fn lowering_is_deterministic(n in 1usize..30, seed: u64, pick: usize) {
        let g = ordered_labels(random_dag(n, 0.3, seed), seed);
        let v = VertexId(pick % n);
        let new = Label::Finite(-100);
        let run = || {
            let mut g = g.clone();
            reorder::lower_label(&mut g, v, new, &mut ComparisonCounter::new()).unwrap()
        };
        prop_assert_eq!(run(), run());
    }

    #[test]
    fn stats_match_exhaustive_dfs(n in 1usize..=10, density in 0.0f64..0.6, seed: u64) {
        let g = random_dag(n, density, seed);
        let s = analysis::stats(&g).unwrap();
        prop_assert_eq!(s.longest_path, height(&g, g.source()));
        prop_assert!(s.longest_path < n);
        prop_assert!(analysis::log_factorial_bound_holds(&s).ok);
    }
}
