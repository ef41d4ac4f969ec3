use std::process::ExitCode;

use clap::Args;
use ordered_dag::{format, trace, Error, Label, VertexId};

use crate::{read_input, Failure, Format, Output};

#[derive(Args, Debug)]
pub struct TraceArgs {
    /// DAG file in the text format, `-` for standard input.
    #[arg(long)]
    input: String,
    /// Vertex whose label is lowered.
    #[arg(long)]
    vertex: usize,
    /// New (strictly lower) label.
    #[arg(long, allow_hyphen_values = true)]
    new_label: i64,
    /// `dot` for one digraph per iteration, `text` for swap lines.
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    #[command(flatten)]
    output: Output,
}

pub fn run(args: TraceArgs) -> Result<ExitCode, Failure> {
    let text = read_input(&args.input)?;
    let mut g = format::parse_dag(&text, true).map_err(|e| Failure::new(2, e.to_string()))?;
    if args.vertex >= g.n() {
        return Err(Failure::new(
            2,
            format!("vertex {} out of range for {} vertices", args.vertex, g.n()),
        ));
    }
    let structure = g.clone();
    let (trace, snapshots) =
        trace::record_lowering(&mut g, VertexId(args.vertex), Label::Finite(args.new_label))
            .map_err(|e| match e {
                Error::NotLowering { .. } | Error::NotOrdered => Failure::new(4, e.to_string()),
                e => Failure::new(2, e.to_string()),
            })?;
    let out = match args.format {
        Format::Dot => trace::snapshots_to_dot(&structure, &snapshots),
        Format::Text => trace.to_string(),
        Format::Csv => return Err(Failure::new(2, "trace supports --format dot or text")),
    };
    args.output.write(&out)?;
    Ok(ExitCode::SUCCESS)
}
