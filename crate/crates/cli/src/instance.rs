//! Text instance files.
//!
//! ```text
//! # comment
//! <vertex count>
//! <u> <v> <weight> <cost> [<cap>]
//! ```
//!
//! Everything after `#` is ignored, as are blank lines. Edge ids follow file
//! order from 0. An omitted cap, or `inf`, means unbounded. Flow files use
//! the same grammar with arcs `<from> <to> <base> <cost> [<cap>]`; base
//! graphs for the generators need only `<u> <v>` and ignore later fields.

use mstfort::flows::{Arc, FlowNetwork};
use mstfort::oracle::BaseGraph;
use mstfort::WeightedGraph;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number; 0 for whole-file problems.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            0 => write!(f, "{}", self.message),
            n => write!(f, "line {n}: {}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

fn error(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Header vertex count and the remaining lines split into fields.
fn records(text: &str) -> Result<(usize, Vec<(usize, Vec<&str>)>), ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            (
                i + 1,
                l.split('#')
                    .next()
                    .unwrap_or("")
                    .split_whitespace()
                    .collect::<Vec<_>>(),
            )
        })
        .filter(|(_, fields)| !fields.is_empty());
    let (line, header) = lines
        .next()
        .ok_or_else(|| error(0, "missing vertex count"))?;
    if header.len() != 1 {
        return Err(error(line, "expected a single vertex count"));
    }
    let n = header[0]
        .parse()
        .map_err(|_| error(line, format!("invalid vertex count {:?}", header[0])))?;
    Ok((n, lines.collect()))
}

fn number(line: usize, what: &str, field: &str) -> Result<u64, ParseError> {
    field
        .parse()
        .map_err(|_| error(line, format!("invalid {what} {field:?}")))
}

fn endpoint(line: usize, field: &str, n: usize) -> Result<usize, ParseError> {
    let v = number(line, "vertex", field)? as usize;
    if v >= n {
        return Err(error(
            line,
            format!("vertex {v} out of range for {n} vertices"),
        ));
    }
    Ok(v)
}

type Row = (usize, usize, u64, u64, Option<u64>);

fn rows(text: &str) -> Result<(usize, Vec<(usize, Row)>), ParseError> {
    let (n, lines) = records(text)?;
    let mut out = Vec::new();
    for (line, f) in lines {
        if f.len() != 4 && f.len() != 5 {
            return Err(error(
                line,
                format!("expected 4 or 5 fields, found {}", f.len()),
            ));
        }
        let u = endpoint(line, f[0], n)?;
        let v = endpoint(line, f[1], n)?;
        let weight = number(line, "weight", f[2])?;
        let cost = number(line, "cost", f[3])?;
        if cost == 0 {
            return Err(error(line, "cost must be positive"));
        }
        let cap = match f.get(4) {
            None | Some(&"inf") => None,
            Some(c) => Some(number(line, "cap", c)?),
        };
        out.push((line, (u, v, weight, cost, cap)));
    }
    Ok((n, out))
}

pub fn parse_instance(text: &str) -> Result<WeightedGraph, ParseError> {
    let (n, rows) = rows(text)?;
    for &(line, (u, v, ..)) in &rows {
        if u == v {
            return Err(error(line, format!("self-loop at vertex {u}")));
        }
    }
    WeightedGraph::new(n, rows.into_iter().map(|(_, r)| r)).map_err(|e| error(0, e.to_string()))
}

pub fn parse_flow(
    text: &str,
    source: Option<usize>,
    sink: Option<usize>,
) -> Result<FlowNetwork, ParseError> {
    let (n, rows) = rows(text)?;
    let arcs = rows
        .into_iter()
        .map(|(line, (from, to, base, cost, cap))| {
            if from == to {
                return Err(error(line, format!("self-loop at vertex {from}")));
            }
            Ok(Arc {
                from,
                to,
                base,
                cost,
                cap,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let source = source.unwrap_or(0);
    let sink = sink.unwrap_or(n.saturating_sub(1));
    FlowNetwork::new(n, source, sink, arcs).map_err(|e| error(0, e.to_string()))
}

pub fn parse_base(text: &str) -> Result<BaseGraph, ParseError> {
    let (n, lines) = records(text)?;
    let mut edges = Vec::new();
    for (line, f) in lines {
        if f.len() < 2 {
            return Err(error(line, "expected at least 2 fields"));
        }
        let (u, v) = (endpoint(line, f[0], n)?, endpoint(line, f[1], n)?);
        if u == v {
            return Err(error(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Ok(BaseGraph {
        vertex_count: n,
        edges,
    })
}

/// Instance text that [`parse_instance`] reads back to the same graph.
pub fn format_instance(g: &WeightedGraph, header: &str) -> String {
    let mut out = String::new();
    for line in header.lines() {
        out.push_str(&format!("# {line}\n"));
    }
    out.push_str(&format!("{}\n", g.vertex_count()));
    for e in g.edges() {
        match e.cap {
            Some(c) => out.push_str(&format!("{} {} {} {} {c}\n", e.u, e.v, e.weight, e.cost)),
            None => out.push_str(&format!("{} {} {} {}\n", e.u, e.v, e.weight, e.cost)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_caps() {
        let g =
            parse_instance("# triangle\n3\n0 1 0 1\n\n0 2 0 1 2 # capped\n1 2 0 1 inf\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge(1).cap, Some(2));
        assert_eq!(g.edge(2).cap, None);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_instance("3\n0 1 0 1\n0 5 0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.to_string().starts_with("line 3:"));
        assert_eq!(parse_instance("3\n0 1 0\n").unwrap_err().line, 2);
        assert_eq!(parse_instance("3\n0 1 0 0\n").unwrap_err().line, 2);
        assert_eq!(parse_instance("3\n1 1 0 1\n").unwrap_err().line, 2);
        assert_eq!(parse_instance("# only\n").unwrap_err().line, 0);
        assert_eq!(parse_instance("x\n").unwrap_err().line, 1);
        assert!(parse_instance("3\n0 1 0 1\n")
            .unwrap_err()
            .message
            .contains("connected"));
    }

    #[test]
    fn round_trips_through_text() {
        let g = parse_instance("3\n0 1 2 20\n0 2 1 1 3\n2 1 1 1\n").unwrap();
        assert_eq!(parse_instance(&format_instance(&g, "copy")).unwrap(), g);
    }

    #[test]
    fn flow_and_base_files() {
        let net = parse_flow("3\n0 1 1 1\n1 2 2 1 inf\n", None, None).unwrap();
        assert_eq!((net.source(), net.sink(), net.arcs().len()), (0, 2, 2));
        assert!(parse_flow("3\n0 1 1 1\n", Some(1), Some(1)).is_err());
        let base = parse_base("3\n0 1\n1 2 9 9\n").unwrap();
        assert_eq!(base.edges, vec![(0, 1), (1, 2)]);
    }
}
