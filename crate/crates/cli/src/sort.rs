use std::process::ExitCode;

use clap::Args;
use ordered_dag::{analysis, dag_sort, Error, SortReport, Topology};

use crate::{read_input, Failure, Output};

#[derive(Args, Debug)]
pub struct SortArgs {
    /// `star:N`, `path:N`, `grid:K:S`, `hypercube:K`, or a bare `star`,
    /// `path` or `hypercube` sized to the input.
    #[arg(long, default_value = "hypercube")]
    topology: String,
    /// Input file, `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[command(flatten)]
    output: Output,
}

enum Plan {
    Fixed(Topology),
    Star,
    Path,
    Hypercube,
}

fn plan(spec: &str) -> Result<Plan, Failure> {
    match spec {
        "star" => Ok(Plan::Star),
        "path" => Ok(Plan::Path),
        "hypercube" => Ok(Plan::Hypercube),
        s => s
            .parse()
            .map(Plan::Fixed)
            .map_err(|e: Error| Failure::new(2, e.to_string())),
    }
}

pub fn parse_numbers(text: &str) -> Result<Vec<i64>, Failure> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::new(2, format!("not an integer: {t:?}")))
        })
        .collect()
}

pub fn stats_line(r: &SortReport, topology: &Topology) -> Result<String, Failure> {
    let g = topology
        .build()
        .map_err(|e| Failure::new(2, e.to_string()))?;
    let s = analysis::stats(&g).map_err(|e| Failure::new(2, e.to_string()))?;
    Ok(format!(
        "n={} topology={} insert_cmp={} remove_cmp={} total={} bound={}",
        r.n_elements,
        topology,
        r.insert_comparisons,
        r.remove_comparisons,
        r.total_comparisons,
        analysis::general_bound(&s)
    ))
}

pub fn run(args: SortArgs) -> Result<ExitCode, Failure> {
    let plan = plan(&args.topology)?;
    let input = parse_numbers(&read_input(&args.input)?)?;
    if input.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }
    let report = match plan {
        Plan::Hypercube => dag_sort::hypercube_sort(&input),
        Plan::Star => dag_sort::sort_with_topology(Topology::Star(input.len()), &input),
        Plan::Path => dag_sort::sort_with_topology(Topology::Path(input.len()), &input),
        Plan::Fixed(t) => dag_sort::sort_with_topology(t, &input),
    }
    .map_err(|e| match e {
        Error::SizeMismatch { .. } => Failure::new(3, e.to_string()),
        e => Failure::new(2, e.to_string()),
    })?;
    let topology = report
        .topology
        .expect("topology sorts record their topology");

    let sorted: Vec<String> = report.output.iter().map(i64::to_string).collect();
    let text = format!(
        "{}\n{}\n",
        sorted.join(" "),
        stats_line(&report, &topology)?
    );
    args.output.write(&text)?;
    Ok(ExitCode::SUCCESS)
}
