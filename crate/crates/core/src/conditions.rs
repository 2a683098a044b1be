//! Degree-condition predicates with witnesses, and recognizers for the
//! exceptional digraphs.
//!
//! Two distinct vertices are nonadjacent when neither arc between them is
//! present. Pair conditions range over unordered pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{BipartiteDigraph, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::families;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionId {
    /// `d(v) >= t` for every vertex.
    MinDegree,
    /// `d(x) + d(y) >= t` for nonadjacent pairs.
    MeynielLike,
    /// The triple condition with threshold `3p - 2`.
    ManoussakisTriple,
    /// At most one vertex of degree below `p`.
    OneExceptionDegree,
    /// `d^+(u) + d^-(v) >= a + l` for cross-partition non-arcs `uv`.
    ConditionA,
    /// `d(x) + d(y) + d(w) + d(z) >= t` for two disjoint nonadjacent pairs.
    FourVertex,
}

impl ConditionId {
    pub const ALL: [ConditionId; 6] = [
        ConditionId::MinDegree,
        ConditionId::MeynielLike,
        ConditionId::ManoussakisTriple,
        ConditionId::OneExceptionDegree,
        ConditionId::ConditionA,
        ConditionId::FourVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConditionId::MinDegree => "min-degree",
            ConditionId::MeynielLike => "meyniel-like",
            ConditionId::ManoussakisTriple => "manoussakis-triple",
            ConditionId::OneExceptionDegree => "one-exception-degree",
            ConditionId::ConditionA => "condition-a",
            ConditionId::FourVertex => "four-vertex",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ConditionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConditionId> {
        ConditionId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown condition '{s}'")))
    }
}

/// Which clause of the triple condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TripleClause {
    /// `xz ∉ A`, and `d(x) + d(y) + d^+(x) + d^-(z) < 3p - 2`.
    NoArcXz,
    /// `zx ∉ A`, and `d(x) + d(y) + d^-(x) + d^+(z) < 3p - 2`.
    NoArcZx,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A vertex below the threshold.
    Vertex { v: usize, degree: usize },
    /// Several vertices below the threshold, with degrees.
    Vertices { vertices: Vec<(usize, usize)> },
    /// A nonadjacent pair with small degree sum.
    Pair { x: usize, y: usize, sum: usize },
    Triple { x: usize, y: usize, z: usize, clause: TripleClause, sum: usize },
    Quadruple { x: usize, y: usize, w: usize, z: usize, sum: usize },
    /// A cross-partition non-arc `uv` with `d^+(u) + d^-(v)` too small.
    NonArc { u: usize, v: usize, sum: usize },
    /// The exceptional vertex `z` of a holding one-exception report.
    Exceptional { z: usize, degree: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_to: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub overlapping: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: ConditionId,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub params: Params,
}

impl ConditionReport {
    fn new(condition: ConditionId, params: Params, violation: Option<Witness>) -> Self {
        ConditionReport { condition, holds: violation.is_none(), witness: violation, params }
    }

    /// Recomputes the witness of a failed report from scratch; holding reports
    /// (and the informational witness of one-exception reports) are accepted.
    pub fn revalidate(&self, d: &Digraph) -> bool {
        let p = d.order();
        let deg = |v: usize| d.total_degree(v);
        let t = self.params.threshold.unwrap_or(0);
        let Some(w) = &self.witness else { return self.holds };
        match (self.condition, w) {
            (_, _) if self.holds => matches!(w, Witness::Exceptional { z, degree } if *z < p && deg(*z) == *degree),
            (ConditionId::MinDegree, Witness::Vertex { v, degree }) => deg(*v) == *degree && *degree < t,
            (ConditionId::MeynielLike, Witness::Pair { x, y, sum }) => {
                x != y && !d.adjacent(*x, *y) && deg(*x) + deg(*y) == *sum && *sum < t
            }
            (ConditionId::ManoussakisTriple, Witness::Triple { x, y, z, clause, sum }) => {
                let distinct = x != y && y != z && x != z;
                let s = match clause {
                    TripleClause::NoArcXz if !d.has_arc(*x, *z) => deg(*x) + deg(*y) + d.out_degree(*x) + d.in_degree(*z),
                    TripleClause::NoArcZx if !d.has_arc(*z, *x) => deg(*x) + deg(*y) + d.in_degree(*x) + d.out_degree(*z),
                    _ => return false,
                };
                distinct && !d.adjacent(*x, *y) && s == *sum && s + 2 < 3 * p
            }
            (ConditionId::OneExceptionDegree, Witness::Vertices { vertices }) => {
                vertices.len() >= 2 && vertices.iter().all(|&(v, dv)| deg(v) == dv && dv < p)
            }
            (ConditionId::FourVertex, Witness::Quadruple { x, y, w, z, sum }) => {
                let set: VertexSet = [*x, *y, *w, *z].into_iter().collect();
                let distinct = if self.params.overlapping { x != y && w != z && (x, y) != (w, z) } else { set.len() == 4 };
                distinct
                    && !d.adjacent(*x, *y)
                    && !d.adjacent(*w, *z)
                    && deg(*x) + deg(*y) + deg(*w) + deg(*z) == *sum
                    && *sum < t
            }
            (ConditionId::ConditionA, Witness::NonArc { u, v, sum }) => {
                !d.has_arc(*u, *v) && d.out_degree(*u) + d.in_degree(*v) == *sum && *sum < t
            }
            _ => false,
        }
    }
}

/// `d(v) >= t` for every vertex.
pub fn min_degree_condition(d: &Digraph, t: usize) -> ConditionReport {
    let witness = (0..d.order())
        .min_by_key(|&v| (d.total_degree(v), v))
        .filter(|&v| d.total_degree(v) < t)
        .map(|v| Witness::Vertex { v, degree: d.total_degree(v) });
    ConditionReport::new(ConditionId::MinDegree, Params { threshold: Some(t), ..Params::default() }, witness)
}

/// `d(x) + d(y) >= t` for every nonadjacent pair, optionally only pairs inside `within`.
pub fn meyniel_like(d: &Digraph, t: usize, within: Option<VertexSet>) -> ConditionReport {
    let m = within.unwrap_or_else(|| d.vertices());
    let witness = m
        .iter()
        .flat_map(|x| m.iter().filter(move |&y| y > x).map(move |y| (x, y)))
        .find(|&(x, y)| !d.adjacent(x, y) && d.total_degree(x) + d.total_degree(y) < t)
        .map(|(x, y)| Witness::Pair { x, y, sum: d.total_degree(x) + d.total_degree(y) });
    let params = Params {
        threshold: Some(t),
        restricted_to: within.map(|s| s.iter().collect()),
        ..Params::default()
    };
    ConditionReport::new(ConditionId::MeynielLike, params, witness)
}

/// For distinct `x, y, z` with `x, y` nonadjacent:
/// `xz ∉ A ⇒ d(x)+d(y)+d^+(x)+d^-(z) >= 3p-2` and
/// `zx ∉ A ⇒ d(x)+d(y)+d^-(x)+d^+(z) >= 3p-2`.
pub fn manoussakis_triple(d: &Digraph) -> Result<ConditionReport> {
    let p = d.order();
    if p < 4 {
        return Err(Error::OrderTooSmall { order: p, min: 4 });
    }
    let bound = 3 * p - 2;
    let deg = |v: usize| d.total_degree(v);
    let mut witness = None;
    'outer: for x in 0..p {
        for y in (0..p).filter(|&y| y != x && !d.adjacent(x, y)) {
            for z in (0..p).filter(|&z| z != x && z != y) {
                let base = deg(x) + deg(y);
                if !d.has_arc(x, z) && base + d.out_degree(x) + d.in_degree(z) < bound {
                    let sum = base + d.out_degree(x) + d.in_degree(z);
                    witness = Some(Witness::Triple { x, y, z, clause: TripleClause::NoArcXz, sum });
                    break 'outer;
                }
                if !d.has_arc(z, x) && base + d.in_degree(x) + d.out_degree(z) < bound {
                    let sum = base + d.in_degree(x) + d.out_degree(z);
                    witness = Some(Witness::Triple { x, y, z, clause: TripleClause::NoArcZx, sum });
                    break 'outer;
                }
            }
        }
    }
    Ok(ConditionReport::new(
        ConditionId::ManoussakisTriple,
        Params { threshold: Some(bound), ..Params::default() },
        witness,
    ))
}

/// At most one vertex has degree below `p`. A holding report names that
/// vertex `z` (or, when every degree is at least `p`, the lowest-index vertex
/// of minimum degree).
pub fn one_exception_degree(d: &Digraph) -> ConditionReport {
    let p = d.order();
    let low: Vec<(usize, usize)> = (0..p).map(|v| (v, d.total_degree(v))).filter(|&(_, dv)| dv < p).collect();
    let params = Params { threshold: Some(p), ..Params::default() };
    if low.len() >= 2 {
        return ConditionReport::new(ConditionId::OneExceptionDegree, params, Some(Witness::Vertices { vertices: low }));
    }
    let z = match low.first() {
        Some(&(v, _)) => v,
        None => (0..p).min_by_key(|&v| (d.total_degree(v), v)).unwrap_or(0),
    };
    ConditionReport {
        condition: ConditionId::OneExceptionDegree,
        holds: true,
        witness: Some(Witness::Exceptional { z, degree: d.total_degree(z) }),
        params,
    }
}

/// Condition `A_l` without building a report.
pub fn satisfies_condition_a(b: &BipartiteDigraph, l: usize) -> bool {
    first_condition_a_violation(b, l).is_none()
}

fn first_condition_a_violation(b: &BipartiteDigraph, l: usize) -> Option<Witness> {
    let d = b.digraph();
    let need = b.half_order() + l;
    for u in 0..d.order() {
        let other = if b.in_x(u) { b.y_side() } else { b.x_side() };
        let du = d.out_degree(u);
        for v in other.difference(d.out_neighbors(u)).iter() {
            let sum = du + d.in_degree(v);
            if sum < need {
                return Some(Witness::NonArc { u, v, sum });
            }
        }
    }
    None
}

/// Condition `A_l`: `d^+(u) + d^-(v) >= a + l` for every ordered pair `u, v`
/// from different partite sets with `uv ∉ A`.
pub fn bipartite_condition_a(b: &BipartiteDigraph, l: usize) -> ConditionReport {
    ConditionReport::new(
        ConditionId::ConditionA,
        Params { threshold: Some(b.half_order() + l), l: Some(l), ..Params::default() },
        first_condition_a_violation(b, l),
    )
}

/// `d(x) + d(y) + d(w) + d(z) >= t` for every two nonadjacent pairs `{x, y}`,
/// `{w, z}`. By default the pairs must be disjoint; `overlapping` also admits
/// distinct pairs sharing a vertex.
pub fn four_vertex_condition(d: &Digraph, t: usize, overlapping: bool) -> ConditionReport {
    let p = d.order();
    let pairs: Vec<(usize, usize)> = (0..p)
        .flat_map(|x| (x + 1..p).map(move |y| (x, y)))
        .filter(|&(x, y)| !d.adjacent(x, y))
        .collect();
    let deg = |v: usize| d.total_degree(v);
    let mut witness = None;
    'outer: for (i, &(x, y)) in pairs.iter().enumerate() {
        for &(w, z) in &pairs[i + 1..] {
            let disjoint = x != w && x != z && y != w && y != z;
            if !disjoint && !overlapping {
                continue;
            }
            let sum = deg(x) + deg(y) + deg(w) + deg(z);
            if sum < t {
                witness = Some(Witness::Quadruple { x, y, w, z, sum });
                break 'outer;
            }
        }
    }
    ConditionReport::new(
        ConditionId::FourVertex,
        Params { threshold: Some(t), overlapping, ..Params::default() },
        witness,
    )
}

/// The exceptional digraphs excluded by the bypass statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionClass {
    D0,
    /// `D_{p-k,k}` reported with `k = min block size - 1`.
    Dpkk(usize),
    T5,
    C3,
    B6,
    None,
}

impl fmt::Display for ExceptionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionClass::Dpkk(k) => write!(f, "Dpkk({k})"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// `p` odd and some independent `F` of `(p+1)/2` vertices is joined in both
/// directions to every other vertex. The subdigraph on `B = V \ F` is ignored.
pub fn is_d0(d: &Digraph) -> Option<VertexSet> {
    let p = d.order();
    if p < 3 || p.is_multiple_of(2) {
        return None;
    }
    // any vertex of F has N^+ = N^- = B
    (0..p).find_map(|v| {
        let b = d.out_neighbors(v);
        let f = d.vertices().difference(b);
        let ok = f.len() == p.div_ceil(2)
            && f.iter().all(|u| d.out_neighbors(u) == b && d.in_neighbors(u) == b);
        ok.then_some(f)
    })
}

/// One cut vertex `c` splitting `D` into two parts `S_1, S_2` with
/// `S_i ∪ {c}` complete; returns `(c, k)` with `k = min(|S_1|, |S_2|)`.
pub fn is_dpkk(d: &Digraph) -> Option<(usize, usize)> {
    let p = d.order();
    if p < 3 {
        return None;
    }
    let underlying: Vec<u64> = (0..p).map(|v| d.out_neighbors(v).0 | d.in_neighbors(v).0).collect();
    (0..p).find_map(|c| {
        let rest = d.vertices().difference(VertexSet::singleton(c));
        let s = rest.first()?;
        let mut comp = VertexSet::singleton(s);
        loop {
            let grown = comp.iter().fold(comp.0, |m, v| m | underlying[v]) & rest.0;
            if grown == comp.0 {
                break;
            }
            comp = VertexSet(grown);
        }
        let other = rest.difference(comp);
        let complete = |set: VertexSet| {
            let block = set.union(VertexSet::singleton(c));
            block.iter().all(|u| d.out_neighbors(u).intersection(block) == block.difference(VertexSet::singleton(u)))
        };
        let ok = !other.is_empty() && complete(comp) && complete(other);
        ok.then(|| (c, comp.len().min(other.len())))
    })
}

/// Matches `d` against the exceptional families, in the order `C_3`, `T_5`,
/// `B_6` (by isomorphism), `D_0`, `D_{p-k,k}` (structurally).
pub fn classify_exception(d: &Digraph) -> Result<ExceptionClass> {
    match d.order() {
        3 if d.is_isomorphic(&families::cycle(3)?)? => return Ok(ExceptionClass::C3),
        5 if d.is_isomorphic(&families::t5())? => return Ok(ExceptionClass::T5),
        6 if d.arc_count() == families::b6()?.digraph().arc_count() && d.is_isomorphic(families::b6()?.digraph())? => {
            return Ok(ExceptionClass::B6)
        }
        _ => {}
    }
    if is_d0(d).is_some() {
        return Ok(ExceptionClass::D0);
    }
    if let Some((_, k)) = is_dpkk(d) {
        return Ok(ExceptionClass::Dpkk(k));
    }
    Ok(ExceptionClass::None)
}
