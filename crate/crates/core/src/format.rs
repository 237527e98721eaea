//! Line-oriented text formats for graphs and parity assignments, and a DOT
//! emitter for drawing graphs with highlighted edges.
//!
//! Graph files:
//!
//! ```text
//! c optional comment
//! p parity-graph <n> <m>
//! v <vertex_id>            (optional; vertices default to 1..=n)
//! e <edge_id> <u> <v>
//! ```
//!
//! Assignment files list even circuits by edge ids, or give one uniform
//! parity:
//!
//! ```text
//! j <odd|even> <k> <edge_id_1> ... <edge_id_k>
//! j-all <odd|even>
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::circuits::ClockwiseParity;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Orientation, VertexId};
use crate::solver::ParityAssignment;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

// Yields (1-based line number, tokens) for every non-blank, non-comment line.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut vertices: Vec<VertexId> = Vec::new();
    let mut seen_v = BTreeSet::new();
    let mut edges: Vec<(EdgeId, VertexId, VertexId, usize)> = Vec::new();
    let mut seen_e = BTreeSet::new();
    for (ln, toks) in content_lines(text) {
        let extra = |n: usize| -> Result<()> {
            if toks.len() > n {
                Err(parse_err(ln, format!("unexpected token '{}'", toks[n])))
            } else {
                Ok(())
            }
        };
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(ln, "duplicate header"));
                }
                if toks.get(1) != Some(&"parity-graph") {
                    return Err(parse_err(ln, "expected 'p parity-graph <n> <m>'"));
                }
                let n = number(toks.get(2).copied(), ln, "vertex count")?;
                let m = number(toks.get(3).copied(), ln, "edge count")?;
                extra(4)?;
                header = Some((n, m, ln));
            }
            "v" | "e" if header.is_none() => {
                return Err(parse_err(ln, "header must come before vertex and edge lines"));
            }
            "v" => {
                let id: VertexId = number(toks.get(1).copied(), ln, "vertex id")?;
                extra(2)?;
                if !seen_v.insert(id) {
                    return Err(parse_err(ln, format!("duplicate vertex {id}")));
                }
                vertices.push(id);
            }
            "e" => {
                let id: EdgeId = number(toks.get(1).copied(), ln, "edge id")?;
                let u: VertexId = number(toks.get(2).copied(), ln, "endpoint")?;
                let v: VertexId = number(toks.get(3).copied(), ln, "endpoint")?;
                extra(4)?;
                if !seen_e.insert(id) {
                    return Err(parse_err(ln, format!("duplicate edge {id}")));
                }
                edges.push((id, u, v, ln));
            }
            other => return Err(parse_err(ln, format!("unknown line type '{other}'"))),
        }
    }
    let (n, m, hl) = header.ok_or_else(|| parse_err(text.lines().count().max(1), "missing header"))?;
    if vertices.is_empty() {
        vertices = (1..=n as VertexId).collect();
    } else if vertices.len() != n {
        return Err(parse_err(hl, format!("header declares {n} vertices, file lists {}", vertices.len())));
    }
    if edges.len() != m {
        return Err(parse_err(hl, format!("header declares {m} edges, file lists {}", edges.len())));
    }
    let vset: BTreeSet<VertexId> = vertices.iter().copied().collect();
    for &(id, u, v, ln) in &edges {
        for x in [u, v] {
            if !vset.contains(&x) {
                return Err(parse_err(ln, format!("edge {id} uses unknown vertex {x}")));
            }
        }
    }
    Multigraph::new(vertices, edges.into_iter().map(|(id, u, v, _)| (id, u, v)))
}

/// Canonical text: header, `v` lines only when the vertex set is not
/// 1..=n, then edges by id with the smaller endpoint first.
pub fn emit_graph(g: &Multigraph) -> String {
    let mut out = String::new();
    let n = g.vertex_count();
    writeln!(out, "p parity-graph {} {}", n, g.edge_count()).unwrap();
    let default_range = g.vertices().iter().copied().eq(1..=n as VertexId);
    if !default_range {
        for v in g.vertices() {
            writeln!(out, "v {v}").unwrap();
        }
    }
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.id, e.u, e.v).unwrap();
    }
    out
}

pub fn canonicalize_graph(text: &str) -> Result<String> {
    parse_graph(text).map(|g| emit_graph(&g))
}

/// Parses an assignment file. Explicit keys are checked against `g` when it
/// is given.
pub fn parse_assignment(text: &str, g: Option<&Multigraph>) -> Result<ParityAssignment> {
    let mut uniform: Option<ClockwiseParity> = None;
    let mut map: BTreeMap<Vec<EdgeId>, ClockwiseParity> = BTreeMap::new();
    let mut first_line = None;
    for (ln, toks) in content_lines(text) {
        first_line.get_or_insert(ln);
        let parity = |i: usize| -> Result<ClockwiseParity> {
            let t = toks.get(i).copied().ok_or_else(|| parse_err(ln, "missing parity"))?;
            ClockwiseParity::parse(t).ok_or_else(|| parse_err(ln, format!("bad parity '{t}'")))
        };
        match toks[0] {
            "j-all" => {
                if uniform.is_some() || !map.is_empty() {
                    return Err(parse_err(ln, "'j-all' must be the only assignment line"));
                }
                uniform = Some(parity(1)?);
                if toks.len() > 2 {
                    return Err(parse_err(ln, format!("unexpected token '{}'", toks[2])));
                }
            }
            "j" => {
                if uniform.is_some() {
                    return Err(parse_err(ln, "'j-all' must be the only assignment line"));
                }
                let p = parity(1)?;
                let k: usize = number(toks.get(2).copied(), ln, "circuit length")?;
                if toks.len() != 3 + k {
                    return Err(parse_err(ln, format!("expected {k} edge ids, found {}", toks.len() - 3)));
                }
                if k == 0 || k % 2 == 1 {
                    return Err(parse_err(ln, format!("even circuits have even positive length, not {k}")));
                }
                let mut ids = Vec::with_capacity(k);
                for t in &toks[3..] {
                    ids.push(number::<EdgeId>(Some(t), ln, "edge id")?);
                }
                ids.sort_unstable();
                if ids.windows(2).any(|w| w[0] == w[1]) {
                    return Err(parse_err(ln, "repeated edge id"));
                }
                if let Some(g) = g {
                    crate::circuits::Circuit::from_edges(g, ids.iter().copied())
                        .map_err(|e| parse_err(ln, e.to_string()))?;
                }
                if map.insert(ids, p).is_some() {
                    return Err(parse_err(ln, "circuit listed twice"));
                }
            }
            other => return Err(parse_err(ln, format!("unknown line type '{other}'"))),
        }
    }
    match uniform {
        Some(p) => Ok(ParityAssignment::uniform(p)),
        None if map.is_empty() => Err(parse_err(first_line.unwrap_or(1), "empty assignment")),
        None => Ok(ParityAssignment::explicit(map)),
    }
}

pub fn emit_assignment(j: &ParityAssignment) -> String {
    match j {
        ParityAssignment::AllOdd => "j-all odd\n".into(),
        ParityAssignment::AllEven => "j-all even\n".into(),
        ParityAssignment::Explicit { map, .. } => {
            let mut out = String::new();
            for (ids, p) in map {
                write!(out, "j {} {}", p, ids.len()).unwrap();
                for id in ids {
                    write!(out, " {id}").unwrap();
                }
                out.push('\n');
            }
            out
        }
    }
}

/// DOT rendering. Highlighted edges are drawn bold; with an orientation the
/// graph is directed.
pub fn to_dot(g: &Multigraph, highlight: &BTreeSet<EdgeId>, o: Option<&Orientation>) -> String {
    let (kind, arrow) = if o.is_some() { ("digraph", "->") } else { ("graph", "--") };
    let mut out = format!("{kind} G {{\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in g.edges() {
        let (a, b) = o.and_then(|o| o.arc(e.id)).unwrap_or((e.u, e.v));
        let style = if highlight.contains(&e.id) { ", style=bold, color=red" } else { "" };
        writeln!(out, "  {a} {arrow} {b} [label=\"{}\"{style}];", e.id).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K23: &str = "c K_{2,3}\np parity-graph 5 6\ne 1 1 3\ne 2 1 4\ne 3 1 5\ne 4 2 3\ne 5 2 4\ne 6 2 5\n";

    #[test]
    fn parses_and_round_trips() {
        let g = parse_graph(K23).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        let canon = emit_graph(&g);
        assert_eq!(canon, K23.lines().skip(1).map(|l| format!("{l}\n")).collect::<String>());
        assert_eq!(emit_graph(&parse_graph(&canon).unwrap()), canon);
    }

    #[test]
    fn canonical_form_sorts_and_normalises() {
        let text = "p  parity-graph 3 3\n\ne 3 1 3\ne 1 2 1\nc mid\ne 2 2 3\n";
        assert_eq!(
            canonicalize_graph(text).unwrap(),
            "p parity-graph 3 3\ne 1 1 2\ne 2 2 3\ne 3 1 3\n"
        );
    }

    #[test]
    fn explicit_vertex_lines_are_kept() {
        let text = "p parity-graph 2 1\nv 5\nv 7\ne 1 5 7\n";
        assert_eq!(canonicalize_graph(text).unwrap(), text);
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let bad = "p parity-graph 2 1\ne 1 1 x\n";
        assert_eq!(
            parse_graph(bad),
            Err(Error::Parse { line: 2, message: "bad endpoint 'x'".into() })
        );
        assert!(matches!(parse_graph("e 1 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("p parity-graph 2 2\ne 1 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_graph("p parity-graph 2 2\ne 1 1 2\ne 1 1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph("p parity-graph 2 1\ne 1 1 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn assignments() {
        let g = parse_graph(K23).unwrap();
        assert_eq!(parse_assignment("j-all odd\n", Some(&g)).unwrap(), ParityAssignment::AllOdd);
        assert_eq!(parse_assignment("c x\nj-all even\n", None).unwrap(), ParityAssignment::AllEven);
        let text = "j odd 4 1 2 4 5\nj even 4 2 3 5 6\nj odd 4 1 3 4 6\n";
        let j = parse_assignment(text, Some(&g)).unwrap();
        assert_eq!(j.prescribed(&[2, 3, 5, 6]).unwrap(), ClockwiseParity::Even);
        assert_eq!(emit_assignment(&j), "j odd 4 1 2 4 5\nj odd 4 1 3 4 6\nj even 4 2 3 5 6\n");
        assert!(parse_assignment("j odd 3 1 2 4\n", None).is_err());
        assert!(parse_assignment("j odd 4 1 2 4\n", None).is_err());
        assert!(matches!(parse_assignment("j odd 4 1 2 3 4\n", Some(&g)), Err(Error::Parse { line: 1, .. })));
        assert!(parse_assignment("j-all odd\nj odd 4 1 2 4 5\n", None).is_err());
        assert!(parse_assignment("", None).is_err());
    }

    #[test]
    fn dot_output() {
        let g = parse_graph(K23).unwrap();
        let dot = to_dot(&g, &[1].into_iter().collect(), None);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("1 -- 3 [label=\"1\", style=bold, color=red];"));
        let o = Orientation::reference(&g);
        assert!(to_dot(&g, &BTreeSet::new(), Some(&o)).contains("1 -> 3"));
    }
}
