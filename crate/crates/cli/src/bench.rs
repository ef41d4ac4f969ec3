use std::fmt::Write as _;
use std::process::ExitCode;

use clap::Args;
use ordered_dag::{analysis, dag_sort, Pattern, Topology};
use rayon::prelude::*;

use crate::{Failure, Format, Output};

pub const CSV_HEADER: &str =
    "topology,n,pattern,seed,insert_cmp,remove_cmp,total_cmp,bound,worst_case_formula";

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// A full spec (`hypercube:10`) or a family (`star`, `path`, `grid:K`,
    /// `hypercube`) combined with `--sizes`.
    #[arg(long, default_value = "hypercube")]
    topology: String,
    /// Family size parameters: N for star/path, side S for grid:K, K for
    /// hypercube. Comma-separated, `a-b` for inclusive ranges.
    #[arg(long, default_value = "1-10")]
    sizes: String,
    /// Comma-separated patterns (random, sorted, reverse, equal) or `all`.
    #[arg(long, default_value = "all")]
    pattern: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Runs per (size, pattern) cell; run r uses seed + r.
    #[arg(long, default_value_t = 1)]
    repeats: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[command(flatten)]
    output: Output,
}

pub fn parse_sizes(s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::new(2, format!("bad --sizes {s:?}"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let a: usize = a.parse().map_err(|_| bad())?;
                let b: usize = b.parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() || out.contains(&0) {
        return Err(bad());
    }
    Ok(out)
}

fn parse_patterns(s: &str) -> Result<Vec<Pattern>, Failure> {
    if s == "all" {
        return Ok(Pattern::ALL.to_vec());
    }
    s.split(',')
        .map(|p| p.trim().parse().map_err(|e: String| Failure::new(2, e)))
        .collect()
}

fn topologies(spec: &str, sizes: &str) -> Result<Vec<Topology>, Failure> {
    if let Ok(t) = spec.parse::<Topology>() {
        return Ok(vec![t]);
    }
    let sizes = parse_sizes(sizes)?;
    let family: Vec<&str> = spec.split(':').collect();
    let make: Box<dyn Fn(usize) -> Option<Topology>> = match family.as_slice() {
        ["star"] => Box::new(|n| Some(Topology::Star(n))),
        ["path"] => Box::new(|n| Some(Topology::Path(n))),
        ["hypercube"] => Box::new(|k| u32::try_from(k).ok().map(Topology::Hypercube)),
        ["grid", k] => {
            let dims: u32 = k
                .parse()
                .map_err(|_| Failure::new(2, format!("bad topology {spec:?}")))?;
            Box::new(move |side| Some(Topology::YoungGrid { dims, side }))
        }
        _ => return Err(Failure::new(2, format!("bad topology {spec:?}"))),
    };
    sizes
        .into_iter()
        .map(|s| make(s).ok_or_else(|| Failure::new(2, format!("bad size {s}"))))
        .collect()
}

#[derive(Debug, Clone)]
pub struct Row {
    pub topology: Topology,
    pub n: usize,
    pub pattern: Pattern,
    pub seed: u64,
    pub insert_cmp: u64,
    pub remove_cmp: u64,
    pub total_cmp: u64,
    pub bound: u128,
    pub worst_case_formula: Option<u64>,
}

impl Row {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.topology,
            self.n,
            self.pattern,
            self.seed,
            self.insert_cmp,
            self.remove_cmp,
            self.total_cmp,
            self.bound,
            self.worst_case_formula
                .map(|w| w.to_string())
                .unwrap_or_default()
        )
    }
}

pub fn run_cell(t: Topology, pattern: Pattern, seed: u64) -> ordered_dag::Result<Row> {
    let g = t.build()?;
    let n = g.n();
    let bound = analysis::general_bound(&analysis::stats(&g)?);
    let input = pattern.generate(n, seed);
    let r = dag_sort::sort_with_topology(t, &input)?;
    let worst_case_formula = match t {
        Topology::Hypercube(k) => Some(analysis::hypercube_worst_case_closed(k)?),
        _ => None,
    };
    Ok(Row {
        topology: t,
        n,
        pattern,
        seed,
        insert_cmp: r.insert_comparisons,
        remove_cmp: r.remove_comparisons,
        total_cmp: r.total_comparisons,
        bound,
        worst_case_formula,
    })
}

pub fn run(args: BenchArgs) -> Result<ExitCode, Failure> {
    let topologies = topologies(&args.topology, &args.sizes)?;
    let patterns = parse_patterns(&args.pattern)?;
    if args.format == Format::Dot {
        return Err(Failure::new(2, "bench supports --format csv or text"));
    }

    let mut cells = Vec::new();
    for &t in &topologies {
        for &p in &patterns {
            for r in 0..args.repeats {
                cells.push((t, p, args.seed.wrapping_add(r)));
            }
        }
    }
    let rows = cells
        .par_iter()
        .map(|&(t, p, seed)| run_cell(t, p, seed))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::new(2, e.to_string()))?;

    let mut out = String::new();
    match args.format {
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for row in &rows {
                out.push_str(&row.csv());
                out.push('\n');
            }
        }
        _ => {
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{:<14} n={:<6} {:<8} total={:<10} bound={}",
                    row.topology.to_string(),
                    row.n,
                    row.pattern.to_string(),
                    row.total_cmp,
                    row.bound
                );
            }
        }
    }
    args.output.write(&out)?;
    Ok(ExitCode::SUCCESS)
}
