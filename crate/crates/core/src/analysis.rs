//! Structural metrics and the comparison-count formulas.

use crate::error::{Error, Result};
use crate::labeled_dag::LabeledDag;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DagStats {
    pub n: usize,
    /// Longest path (in edges) starting at the source.
    pub longest_path: usize,
    pub max_in_degree: usize,
    pub max_out_degree: usize,
}

pub fn stats(g: &LabeledDag) -> Result<DagStats> {
    if g.source_count() != 1 {
        return Err(Error::MultipleSources {
            count: g.source_count(),
        });
    }
    // Longest distance from the source by DP over a topological order.
    let mut dist = vec![0usize; g.n()];
    for &u in g.topological_order() {
        for &v in g.next(u) {
            dist[v.index()] = dist[v.index()].max(dist[u.index()] + 1);
        }
    }
    Ok(DagStats {
        n: g.n(),
        longest_path: dist.into_iter().max().unwrap_or(0),
        max_in_degree: g.vertices().map(|v| g.in_degree(v)).max().unwrap_or(0),
        max_out_degree: g.vertices().map(|v| g.out_degree(v)).max().unwrap_or(0),
    })
}

/// `n * L * (D_in + D_out)`, the comparison budget of a full sort.
pub fn general_bound(s: &DagStats) -> u128 {
    s.n as u128 * s.longest_path as u128 * (s.max_in_degree + s.max_out_degree) as u128
}

/// Worst-case insert-phase comparisons for `2^k` elements on a hypercube,
/// closed form `(k 2^k + k (k - 1) 2^(k-2)) / 2`.
pub fn hypercube_worst_case_closed(k: u32) -> Result<u64> {
    if k < 2 {
        // k 2^k / 2, the second term vanishes
        return Ok(k as u64);
    }
    let k64 = k as u64;
    let pow = 1u64
        .checked_shl(k - 2)
        .filter(|_| k - 2 < 64)
        .ok_or(Error::Overflow)?;
    let first = k64.checked_mul(4).and_then(|x| x.checked_mul(pow));
    let second = (k64 * (k64 - 1)).checked_mul(pow);
    first
        .zip(second)
        .and_then(|(a, b)| a.checked_add(b))
        .map(|t| t / 2)
        .ok_or(Error::Overflow)
}

/// The same quantity as the binomial sum `sum_i C(k, i) (i + 1) i / 2`.
pub fn hypercube_worst_case_sum(k: u32) -> Result<u64> {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for i in 0..=k as u128 {
        if let Some(prev) = i.checked_sub(1) {
            binom = binom.checked_mul(k as u128 - prev).ok_or(Error::Overflow)? / i;
        }
        let term = binom.checked_mul((i + 1) * i).ok_or(Error::Overflow)? / 2;
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    u64::try_from(total).map_err(|_| Error::Overflow)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogFactorialCheck {
    /// `log2(n!) / n`
    pub lhs: f64,
    /// `L * (D_in + D_out)`
    pub rhs: f64,
    pub ok: bool,
}

/// `log2(n!)` by direct summation.
pub fn log2_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).log2()).sum()
}

/// Checks `log2(n!) / n <= L (D_in + D_out)`. Meaningful for `n >= 2`.
pub fn log_factorial_bound_holds(s: &DagStats) -> LogFactorialCheck {
    let lhs = if s.n == 0 {
        0.0
    } else {
        log2_factorial(s.n) / s.n as f64
    };
    let rhs = (s.longest_path * (s.max_in_degree + s.max_out_degree)) as f64;
    LogFactorialCheck {
        lhs,
        rhs,
        ok: lhs <= rhs,
    }
}
