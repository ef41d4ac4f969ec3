//! Plain-text DAG files.
//!
//! ```text
//! n m
//! u v        (m edge lines)
//! labels: l_0 ... l_{n-1}    (optional, "inf" for infinity)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::labeled_dag::{Label, LabeledDag};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
}

/// Parses a DAG file. With `multi_source` the single-source check is skipped.
pub fn parse_dag(text: &str, multi_source: bool) -> Result<LabeledDag> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    let n = parse_usize(toks.next(), hline, "vertex count")?;
    let m = parse_usize(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "trailing tokens in header"));
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline, format!("expected {m} edges")))?;
        let mut toks = line.split_whitespace();
        let u = parse_usize(toks.next(), ln, "edge tail")?;
        let v = parse_usize(toks.next(), ln, "edge head")?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens in edge line"));
        }
        edges.push((u, v));
    }

    let labels = match lines.next() {
        None => None,
        Some((ln, line)) => {
            let rest = line
                .strip_prefix("labels:")
                .ok_or_else(|| parse_err(ln, "expected \"labels:\" line"))?;
            let labels = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<Label>()
                        .map_err(|_| parse_err(ln, format!("bad label {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if labels.len() != n {
                return Err(parse_err(
                    ln,
                    format!("expected {n} labels, got {}", labels.len()),
                ));
            }
            if let Some((ln, _)) = lines.next() {
                return Err(parse_err(ln, "unexpected content after labels"));
            }
            Some(labels)
        }
    };

    let g = if multi_source {
        LabeledDag::from_edges_multi_source_unchecked(n, &edges)?
    } else {
        LabeledDag::from_edges(n, &edges)?
    };
    match labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

/// Writes a DAG in the text format, always including the labels line.
pub fn write_dag(g: &LabeledDag) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out.push_str("labels:");
    for l in g.labels() {
        let _ = write!(out, " {l}");
    }
    out.push('\n');
    out
}
