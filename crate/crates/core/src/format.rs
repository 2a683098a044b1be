//! Arc-list text format and DOT export.
//!
//! ```text
//! # comments and blank lines are ignored
//! digraph p=6
//! partition X=0,1,2 Y=3,4,5
//! 0 3
//! 3 1
//! ```
//!
//! Vertices are 0-based. The `partition` line is optional and marks a
//! balanced bipartite input.

use std::fmt::Write as _;
use std::path::Path;

use crate::digraph::{BipartiteDigraph, Digraph, VertexSet};
use crate::error::{Error, Result};

/// A parsed arc-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcList {
    pub digraph: Digraph,
    pub partition: Option<VertexSet>,
}

impl ArcList {
    pub fn bipartite(&self) -> Result<BipartiteDigraph> {
        match self.partition {
            Some(x) => BipartiteDigraph::new(self.digraph.clone(), x),
            None => Err(Error::NotBipartite("no partition line".into())),
        }
    }
}

fn parse_list(s: &str, line: usize) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse().map_err(|_| Error::Parse { line, msg: format!("bad vertex '{t}'") })
        })
        .collect()
}

pub fn parse(text: &str) -> Result<ArcList> {
    let mut order: Option<usize> = None;
    let mut partition = None;
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if order.is_none() {
            let p = content
                .strip_prefix("digraph")
                .map(str::trim)
                .and_then(|r| r.strip_prefix("p="))
                .ok_or_else(|| Error::Parse { line, msg: "expected 'digraph p=<p>'".into() })?;
            order = Some(p.trim().parse().map_err(|_| Error::Parse { line, msg: format!("bad order '{p}'") })?);
            continue;
        }
        if let Some(rest) = content.strip_prefix("partition") {
            let mut x = None;
            let mut y = None;
            for part in rest.split_whitespace() {
                if let Some(l) = part.strip_prefix("X=") {
                    x = Some(parse_list(l, line)?);
                } else if let Some(l) = part.strip_prefix("Y=") {
                    y = Some(parse_list(l, line)?);
                } else {
                    return Err(Error::Parse { line, msg: format!("unexpected '{part}'") });
                }
            }
            let (Some(x), Some(y)) = (x, y) else {
                return Err(Error::Parse { line, msg: "partition needs X= and Y=".into() });
            };
            let xs: VertexSet = x.iter().copied().collect();
            let ys: VertexSet = y.iter().copied().collect();
            let p = order.unwrap_or(0);
            if xs.len() != x.len() || ys.len() != y.len() || !xs.intersection(ys).is_empty() || xs.union(ys) != VertexSet::full(p) {
                return Err(Error::Parse { line, msg: "partition must split the vertex set".into() });
            }
            partition = Some(xs);
            continue;
        }
        let mut it = content.split_whitespace();
        let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse { line, msg: format!("expected '<u> <v>', got '{content}'") });
        };
        let u: usize = u.parse().map_err(|_| Error::Parse { line, msg: format!("bad vertex '{u}'") })?;
        let v: usize = v.parse().map_err(|_| Error::Parse { line, msg: format!("bad vertex '{v}'") })?;
        arcs.push((u, v));
    }
    let p = order.ok_or(Error::Parse { line: 0, msg: "missing 'digraph p=<p>' header".into() })?;
    let digraph = Digraph::new(p, arcs)?;
    if let Some(x) = partition {
        BipartiteDigraph::new(digraph.clone(), x)?;
    }
    Ok(ArcList { digraph, partition })
}

pub fn read_file(path: &Path) -> Result<ArcList> {
    parse(&std::fs::read_to_string(path)?)
}

/// Arc-list text, arcs in lexicographic order.
pub fn to_arc_list(d: &Digraph, partition: Option<VertexSet>) -> String {
    to_arc_list_with_header(d, partition, &[])
}

/// Arc-list text preceded by `# ` comment lines.
pub fn to_arc_list_with_header(d: &Digraph, partition: Option<VertexSet>, header: &[String]) -> String {
    let mut s = String::new();
    for h in header {
        for l in h.lines() {
            let _ = writeln!(s, "# {l}");
        }
    }
    let _ = writeln!(s, "digraph p={}", d.order());
    if let Some(x) = partition {
        let y = d.vertices().difference(x);
        let join = |set: VertexSet| set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let _ = writeln!(s, "partition X={} Y={}", join(x), join(y));
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Graphviz DOT; 2-cycles appear as two separate arcs.
pub fn to_dot(d: &Digraph, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", name.replace('"', "\\\""));
    for v in 0..d.order() {
        let _ = writeln!(s, "  {v} [label=\"{}\"];", d.label(v).replace('"', "\\\""));
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "  {u} -> {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_partition() {
        let text = "# header\n\ndigraph p=4\npartition X=0,1 Y=2,3\n0 2 # arc\n2 1\n";
        let a = parse(text).unwrap();
        assert_eq!(a.digraph.arc_count(), 2);
        assert_eq!(a.partition, Some([0, 1].into_iter().collect()));
        assert!(a.bipartite().is_ok());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("digraph p=2\n0 0\n"), Err(Error::LoopArc(0))));
        assert!(matches!(parse("digraph p=2\n0 5\n"), Err(Error::OutOfRange { .. })));
        assert!(matches!(parse("digraph p=2\n0 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("digraph p=4\npartition X=0,1 Y=2,3\n0 1\n"), Err(Error::NotBipartite(_))));
        assert!(matches!(parse("digraph p=4\npartition X=0,1 Y=2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn dot_renders_two_cycles_as_two_arcs() {
        let d = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let dot = to_dot(&d, "k2");
        assert!(dot.contains("0 -> 1;"));
        assert!(dot.contains("1 -> 0;"));
        assert!(dot.starts_with("digraph \"k2\" {"));
    }

    proptest! {
        #[test]
        fn arc_list_round_trip(p in 1usize..8, mask in any::<u64>()) {
            let bits = p * (p - 1);
            let m = if bits == 64 { mask } else { mask & ((1u64 << bits) - 1) };
            let d = Digraph::from_arc_mask(p, m).unwrap();
            let back = parse(&to_arc_list_with_header(&d, None, &["note".into()])).unwrap();
            prop_assert_eq!(back.digraph, d);
        }
    }
}
