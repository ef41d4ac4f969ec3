use std::process::ExitCode;

use clap::Args;
use ordered_dag::reorder::{self, raise_label_via_reversal};
use ordered_dag::topologies::random_dag;
use ordered_dag::{
    analysis, dag_sort, fixtures, ComparisonCounter, Label, LabeledDag, OrderedDagQueue, Pattern,
    Topology, VertexId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Failure;

/// Expected text trace of the fixture lowering vertex 9 from 12 to 3.
pub const GOLDEN_TRACE: &str =
    "swap 9 7 label=10\nswap 7 8 label=9\nswap 8 5 label=8\nswap 5 3 label=6\nswap 3 2 label=4\n";

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

type Outcome = Result<(), String>;

fn families() -> Vec<Topology> {
    vec![
        Topology::Star(17),
        Topology::Path(17),
        Topology::YoungGrid { dims: 2, side: 4 },
        Topology::Hypercube(5),
    ]
}

/// Random queue operations with a sorted-vector model; checks ordered-ness
/// and multiset conservation after every operation.
fn queue_sequences(seed: u64) -> (Outcome, Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ordered = Ok(());
    let mut conserved = Ok(());
    for t in families() {
        let mut q = OrderedDagQueue::new(t.build().expect("family builds")).expect("all infinity");
        let mut model: Vec<i64> = Vec::new();
        for step in 0..2000 {
            match rng.gen_range(0..4) {
                0 | 1 if model.len() < q.capacity() => {
                    let x = rng.gen_range(-100..100);
                    q.insert(x.into()).expect("not full");
                    model.push(x);
                }
                2 if !model.is_empty() => {
                    let got = q.remove_min().expect("not empty").finite();
                    let min = *model.iter().min().expect("not empty");
                    if got != Some(min) && conserved.is_ok() {
                        conserved =
                            Err(format!("{t} step {step}: removed {got:?}, expected {min}"));
                    }
                    let i = model.iter().position(|&x| x == min).expect("present");
                    model.swap_remove(i);
                }
                _ => {
                    let v = VertexId(rng.gen_range(0..q.capacity()));
                    let Some(old) = q.dag().label(v).finite() else {
                        continue;
                    };
                    let new = old + rng.gen_range(-30..30);
                    let r = match new.cmp(&old) {
                        std::cmp::Ordering::Less => q.lower_label_at(v, new.into()),
                        std::cmp::Ordering::Greater => q.raise_label_at(v, new.into()),
                        std::cmp::Ordering::Equal => continue,
                    };
                    r.expect("strict change on a finite label");
                    let i = model.iter().position(|&x| x == old).expect("present");
                    model[i] = new;
                }
            }
            if !q.dag().is_ordered() && ordered.is_ok() {
                ordered = Err(format!("{t} step {step}: not ordered"));
            }
            let mut finite: Vec<i64> = q.dag().labels().iter().filter_map(|l| l.finite()).collect();
            finite.sort_unstable();
            let mut expected = model.clone();
            expected.sort_unstable();
            if finite != expected && conserved.is_ok() {
                conserved = Err(format!("{t} step {step}: label multiset diverged"));
            }
        }
    }
    (ordered, conserved)
}

fn random_ordered(rng: &mut ChaCha8Rng, max_n: usize) -> LabeledDag {
    let n = rng.gen_range(1..=max_n);
    let g = random_dag(n, rng.gen_range(0.0..0.3), rng.gen());
    // Nondecreasing along vertex ids, which random_dag makes topological.
    let mut labels: Vec<i64> = (0..n).map(|_| rng.gen_range(-50..50)).collect();
    labels.sort_unstable();
    g.with_labels(labels.into_iter().map(Label::Finite).collect())
        .expect("n labels")
}

fn raise_equivalence(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..1000 {
        let mut g = random_ordered(&mut rng, 64);
        let v = VertexId(rng.gen_range(0..g.n()));
        let old = g.label(v).finite().expect("finite");
        let new = if rng.gen_bool(0.2) {
            Label::Infinity
        } else {
            Label::Finite(old + rng.gen_range(1..60))
        };
        let mut h = g.clone();
        reorder::raise_label(&mut g, v, new, &mut ComparisonCounter::new())
            .map_err(|e| e.to_string())?;
        raise_label_via_reversal(&mut h, v, new).map_err(|e| e.to_string())?;
        if g.labels() != h.labels() {
            return Err(format!("case {case}: labelings differ"));
        }
    }
    Ok(())
}

fn log_factorial_bound(seed: u64) -> Outcome {
    let mut sweep = Vec::new();
    for n in [2, 16, 256, 4096] {
        sweep.push(Topology::Star(n));
        sweep.push(Topology::Path(n));
    }
    sweep.extend((1..=12).map(Topology::Hypercube));
    sweep.extend(
        [(1, 4096), (2, 64), (3, 16), (4, 8), (6, 4), (12, 2)]
            .map(|(dims, side)| Topology::YoungGrid { dims, side }),
    );
    let mut graphs: Vec<LabeledDag> = sweep.iter().map(|t| t.build().expect("builds")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=256);
        graphs.push(random_dag(n, rng.gen_range(0.0..0.1), rng.gen()));
    }
    for g in &graphs {
        let s = analysis::stats(g).map_err(|e| e.to_string())?;
        let c = analysis::log_factorial_bound_holds(&s);
        if !c.ok {
            return Err(format!("n={} lhs={} rhs={}", s.n, c.lhs, c.rhs));
        }
    }
    Ok(())
}

fn general_bound(seed: u64) -> Outcome {
    for t in families() {
        for p in Pattern::ALL {
            for r in 0..5 {
                let row = crate::bench::run_cell(t, p, seed + r).map_err(|e| e.to_string())?;
                if row.total_cmp as u128 > row.bound {
                    return Err(format!("{t} {p}: {} > {}", row.total_cmp, row.bound));
                }
            }
        }
    }
    Ok(())
}

fn hypercube_worst_case() -> Outcome {
    for k in 1..=12 {
        let r = dag_sort::hypercube_sort(&dag_sort::worst_case_input(1 << k))
            .map_err(|e| e.to_string())?;
        let closed = analysis::hypercube_worst_case_closed(k).map_err(|e| e.to_string())?;
        let sum = analysis::hypercube_worst_case_sum(k).map_err(|e| e.to_string())?;
        if r.insert_comparisons != closed || closed != sum {
            return Err(format!(
                "k={k}: run {} closed {closed} sum {sum}",
                r.insert_comparisons
            ));
        }
    }
    Ok(())
}

fn golden_trace() -> Outcome {
    let run = || {
        let mut g = fixtures::sample();
        reorder::lower_label(
            &mut g,
            VertexId(fixtures::SAMPLE_LOWERED_VERTEX),
            Label::Finite(3),
            &mut ComparisonCounter::new(),
        )
        .map(|t| (t.to_string(), g))
    };
    let (first, g) = run().map_err(|e| e.to_string())?;
    let (second, _) = run().map_err(|e| e.to_string())?;
    if first != GOLDEN_TRACE || second != first {
        return Err(format!("trace differs from golden:\n{first}"));
    }
    let expected: Vec<Label> = fixtures::SAMPLE_AFTER_LOWERING.map(Label::Finite).to_vec();
    if g.labels() != expected.as_slice() {
        return Err("final labeling differs".into());
    }
    Ok(())
}

pub fn run(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let (ordered, conserved) = queue_sequences(args.seed);
    let suites: Vec<(&str, Outcome)> = vec![
        ("ordered-after-every-operation", ordered),
        ("multiset-conservation", conserved),
        ("raise-equivalence", raise_equivalence(args.seed)),
        ("log-factorial-bound", log_factorial_bound(args.seed)),
        ("general-bound", general_bound(args.seed)),
        ("hypercube-worst-case", hypercube_worst_case()),
        ("determinism-golden-trace", golden_trace()),
    ];
    let mut all = true;
    for (name, outcome) in suites {
        match outcome {
            Ok(()) => println!("PASS {name}"),
            Err(e) => {
                all = false;
                println!("FAIL {name}: {e}");
            }
        }
    }
    Ok(if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
