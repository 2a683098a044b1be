//! Loop-free simple digraphs on at most 64 vertices.
//!
//! Adjacency is stored twice, as out- and in-neighbour bitmasks per vertex, so
//! arc membership is a single bit test and neighbourhood restrictions
//! `N^+(u) ∩ X` are a single `and`. Opposite arcs (2-cycles) are allowed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order supported by the bitset representation.
pub const MAX_ORDER: usize = 64;

/// Default order bound for brute-force isomorphism.
pub const ISO_ORDER_LIMIT: usize = 10;

/// A set of vertices of a digraph with at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., p-1}`.
    pub fn full(p: usize) -> VertexSet {
        if p >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << p) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Out-, in- and total degree of a vertex, possibly restricted to a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degree {
    pub out_degree: usize,
    pub in_degree: usize,
    pub total: usize,
}

/// An immutable loop-free digraph without multiple arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(p={}, arcs=[", self.order)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        write!(f, "])")
    }
}

fn check_order(p: usize) -> Result<()> {
    if p == 0 || p > MAX_ORDER {
        Err(Error::BadOrder(p))
    } else {
        Ok(())
    }
}

impl Digraph {
    /// The arcless digraph of order `p`.
    pub fn empty(p: usize) -> Result<Digraph> {
        check_order(p)?;
        Ok(Digraph { order: p, out: vec![0; p], inn: vec![0; p], labels: None })
    }

    /// Builds a digraph from an arc list. Duplicate pairs collapse to one arc.
    pub fn new(p: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
        let mut d = Digraph::empty(p)?;
        for (u, v) in arcs {
            d.insert_arc(u, v)?;
        }
        Ok(d)
    }

    /// Builds a digraph from out-neighbour bitmasks.
    pub fn from_out_masks(out: Vec<u64>) -> Result<Digraph> {
        let p = out.len();
        check_order(p)?;
        let full = VertexSet::full(p).0;
        let mut inn = vec![0u64; p];
        for (u, &m) in out.iter().enumerate() {
            if m >> u & 1 == 1 {
                return Err(Error::LoopArc(u));
            }
            if m & !full != 0 {
                let v = (m & !full).trailing_zeros() as usize;
                return Err(Error::OutOfRange { vertex: v, order: p });
            }
            for v in VertexSet(m).iter() {
                inn[v] |= 1 << u;
            }
        }
        Ok(Digraph { order: p, out, inn, labels: None })
    }

    /// Decodes the arc bitmask produced by [`Digraph::arc_mask`]; bit
    /// `u*(p-1) + (v - [v > u])` stands for the arc `(u, v)`.
    pub fn from_arc_mask(p: usize, mask: u64) -> Result<Digraph> {
        check_order(p)?;
        if p * (p - 1) > 64 {
            return Err(Error::SizeLimit { order: p, limit: 8 });
        }
        let mut out = vec![0u64; p];
        let mut bit = 0;
        for (u, slot) in out.iter_mut().enumerate() {
            for v in (0..p).filter(|&v| v != u) {
                if mask >> bit & 1 == 1 {
                    *slot |= 1 << v;
                }
                bit += 1;
            }
        }
        Digraph::from_out_masks(out)
    }

    /// Inverse of [`Digraph::from_arc_mask`]; only for orders up to 8.
    pub fn arc_mask(&self) -> u64 {
        let p = self.order;
        assert!(p * (p - 1) <= 64, "arc mask needs p <= 8");
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..p {
            for v in (0..p).filter(|&v| v != u) {
                if self.has_arc(u, v) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    fn insert_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopArc(u));
        }
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
        Ok(())
    }

    /// A copy of this digraph with the extra arc `(u, v)`.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        let mut d = self.clone();
        d.insert_arc(u, v)?;
        Ok(d)
    }

    /// A copy of this digraph without the arc `(u, v)` (no-op when absent).
    pub fn without_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut d = self.clone();
        d.out[u] &= !(1 << v);
        d.inn[v] &= !(1 << u);
        Ok(d)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Digraph> {
        if labels.len() != self.order {
            return Err(Error::BadParameters(format!(
                "{} labels for order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `v`: its label if present, otherwise its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::OutOfRange { vertex: v, order: self.order })
        }
    }

    pub fn check_set(&self, x: VertexSet) -> Result<()> {
        match x.difference(self.vertices()).first() {
            Some(v) => Err(Error::OutOfRange { vertex: v, order: self.order }),
            None => Ok(()),
        }
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    /// `u` and `v` are adjacent when at least one of `uv`, `vu` is an arc.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    #[inline]
    pub fn out_neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.out[u])
    }

    #[inline]
    pub fn in_neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.inn[u])
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| VertexSet(self.out[u]).iter().map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    #[inline]
    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, u: usize) -> usize {
        self.inn[u].count_ones() as usize
    }

    /// `d(u) = d^+(u) + d^-(u)`.
    #[inline]
    pub fn total_degree(&self, u: usize) -> usize {
        self.out_degree(u) + self.in_degree(u)
    }

    /// Degree of `u` restricted to `within` (all of `V(D)` when `None`).
    pub fn degree(&self, u: usize, within: Option<VertexSet>) -> Result<Degree> {
        self.check_vertex(u)?;
        let x = within.unwrap_or_else(|| self.vertices());
        self.check_set(x)?;
        let out_degree = (self.out[u] & x.0).count_ones() as usize;
        let in_degree = (self.inn[u] & x.0).count_ones() as usize;
        Ok(Degree { out_degree, in_degree, total: out_degree + in_degree })
    }

    /// Total degree of `u` restricted to `x`, without range checks.
    #[inline]
    pub fn degree_into(&self, u: usize, x: VertexSet) -> usize {
        ((self.out[u] & x.0).count_ones() + (self.inn[u] & x.0).count_ones()) as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|u| self.total_degree(u)).min().unwrap_or(0)
    }

    /// Every pair of distinct vertices joined by exactly one arc.
    pub fn is_tournament(&self) -> bool {
        (0..self.order).all(|u| {
            (u + 1..self.order).all(|v| self.has_arc(u, v) != self.has_arc(v, u))
        })
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet, forward: bool) -> VertexSet {
        let adj = if forward { &self.out } else { &self.inn };
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// `D⟨within⟩` is strong. The empty set and singletons count as strong.
    pub fn is_strong_within(&self, within: VertexSet) -> bool {
        let Some(s) = within.first() else { return true };
        self.reach_within(s, within, true) == within && self.reach_within(s, within, false) == within
    }

    pub fn is_strong(&self) -> bool {
        self.is_strong_within(self.vertices())
    }

    /// `|V(D)| >= k + 1` and deleting any set of at most `k - 1` vertices
    /// leaves a strong digraph. Exhaustive over removal sets.
    pub fn is_k_strong(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.order < k + 1 {
            return false;
        }
        fn rec(d: &Digraph, remaining: VertexSet, from: usize, budget: usize) -> bool {
            if !d.is_strong_within(remaining) {
                return false;
            }
            if budget == 0 {
                return true;
            }
            (from..d.order).all(|v| {
                let mut r = remaining;
                r.remove(v);
                rec(d, r, v + 1, budget - 1)
            })
        }
        rec(self, self.vertices(), 0, k - 1)
    }

    /// `D⟨X⟩` reindexed to `0..|X|` in increasing vertex order, with the map
    /// from new to old indices.
    pub fn induced(&self, x: VertexSet) -> Result<(Digraph, Vec<usize>)> {
        self.check_set(x)?;
        if x.is_empty() {
            return Err(Error::BadOrder(0));
        }
        let map: Vec<usize> = x.iter().collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let out = map
            .iter()
            .map(|&u| VertexSet(self.out[u] & x.0).iter().fold(0u64, |m, v| m | 1 << pos[v]))
            .collect();
        let mut d = Digraph::from_out_masks(out)?;
        if let Some(l) = &self.labels {
            d.labels = Some(map.iter().map(|&v| l[v].clone()).collect());
        }
        Ok((d, map))
    }

    /// Every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph {
            order: self.order,
            out: self.inn.clone(),
            inn: self.out.clone(),
            labels: self.labels.clone(),
        }
    }

    /// The digraph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.order {
            return Err(Error::BadParameters("permutation length".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in perm {
            self.check_vertex(v)?;
            seen.insert(v);
        }
        if seen.len() != self.order {
            return Err(Error::BadParameters("not a permutation".into()));
        }
        Digraph::new(self.order, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// An arc-preserving bijection `f` with `uv ∈ A(self) ⇔ f(u)f(v) ∈ A(other)`,
    /// found by backtracking with degree pruning. Orders above
    /// [`ISO_ORDER_LIMIT`] are refused.
    pub fn isomorphism(&self, other: &Digraph) -> Result<Option<Vec<usize>>> {
        self.isomorphism_with_limit(other, ISO_ORDER_LIMIT)
    }

    pub fn isomorphism_with_limit(&self, other: &Digraph, limit: usize) -> Result<Option<Vec<usize>>> {
        let p = self.order;
        if p > limit || other.order > limit {
            return Err(Error::SizeLimit { order: p.max(other.order), limit });
        }
        if p != other.order || self.arc_count() != other.arc_count() {
            return Ok(None);
        }
        let sig = |d: &Digraph, v: usize| {
            (d.out_degree(v), d.in_degree(v), (d.out[v] & d.inn[v]).count_ones())
        };
        let mut a_sig: Vec<_> = (0..p).map(|v| sig(self, v)).collect();
        let mut b_sig: Vec<_> = (0..p).map(|v| sig(other, v)).collect();
        let (a0, b0) = (a_sig.clone(), b_sig.clone());
        a_sig.sort_unstable();
        b_sig.sort_unstable();
        if a_sig != b_sig {
            return Ok(None);
        }
        // map the most constrained vertices first
        let mut order: Vec<usize> = (0..p).collect();
        order.sort_by_key(|&v| (a0.iter().filter(|s| **s == a0[v]).count(), v));

        #[allow(clippy::too_many_arguments)]
        fn extend(
            a: &Digraph,
            b: &Digraph,
            order: &[usize],
            a_sig: &[(usize, usize, u32)],
            b_sig: &[(usize, usize, u32)],
            depth: usize,
            map: &mut Vec<usize>,
            used: &mut u64,
        ) -> bool {
            if depth == order.len() {
                return true;
            }
            let u = order[depth];
            for w in 0..b.order {
                if *used >> w & 1 == 1 || a_sig[u] != b_sig[w] {
                    continue;
                }
                let consistent = order[..depth].iter().all(|&x| {
                    let y = map[x];
                    a.has_arc(u, x) == b.has_arc(w, y) && a.has_arc(x, u) == b.has_arc(y, w)
                });
                if !consistent {
                    continue;
                }
                map[u] = w;
                *used |= 1 << w;
                if extend(a, b, order, a_sig, b_sig, depth + 1, map, used) {
                    return true;
                }
                *used &= !(1 << w);
            }
            false
        }

        let mut map = vec![usize::MAX; p];
        let mut used = 0u64;
        Ok(extend(self, other, &order, &a0, &b0, 0, &mut map, &mut used).then_some(map))
    }

    pub fn is_isomorphic(&self, other: &Digraph) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    /// Minimum of [`Digraph::arc_mask`] over all relabelings (orders up to 8).
    ///
    /// Two digraphs are isomorphic iff their canonical masks agree.
    pub fn canonical_mask(&self) -> Result<u64> {
        let p = self.order;
        if p > 8 {
            return Err(Error::SizeLimit { order: p, limit: 8 });
        }
        let mut best = u64::MAX;
        let mut perm: Vec<usize> = (0..p).collect();
        for_each_permutation(&mut perm, &mut |perm| {
            let m = self.permuted_arc_mask(perm);
            if m < best {
                best = m;
            }
            true
        });
        Ok(best)
    }

    /// True when no relabeling gives a smaller arc mask (orders up to 8).
    pub fn is_canonical(&self) -> bool {
        let p = self.order;
        assert!(p <= 8, "canonical check needs p <= 8");
        let own = self.arc_mask();
        let mut perm: Vec<usize> = (0..p).collect();
        let mut canonical = true;
        for_each_permutation(&mut perm, &mut |perm| {
            if self.permuted_arc_mask(perm) < own {
                canonical = false;
            }
            canonical
        });
        canonical
    }

    fn permuted_arc_mask(&self, perm: &[usize]) -> u64 {
        let p = self.order;
        let mut m = 0u64;
        for (u, v) in self.arcs() {
            let (a, b) = (perm[u], perm[v]);
            let bit = a * (p - 1) + if b > a { b - 1 } else { b };
            m |= 1 << bit;
        }
        m
    }
}

/// Heap's algorithm; the callback returns `false` to stop early.
pub(crate) fn for_each_permutation(perm: &mut [usize], f: &mut impl FnMut(&[usize]) -> bool) {
    let n = perm.len();
    let mut c = vec![0usize; n];
    if !f(perm) {
        return;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if !f(perm) {
                return;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// A balanced bipartite digraph: every arc joins the two partite sets `X`, `Y`
/// and `|X| = |Y| = a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteDigraph {
    digraph: Digraph,
    x_side: VertexSet,
}

impl BipartiteDigraph {
    pub fn new(digraph: Digraph, x_side: VertexSet) -> Result<BipartiteDigraph> {
        digraph.check_set(x_side)?;
        let p = digraph.order();
        if !p.is_multiple_of(2) || x_side.len() * 2 != p {
            return Err(Error::NotBipartite(format!(
                "partite set of size {} in order {p}",
                x_side.len()
            )));
        }
        if let Some((u, v)) = digraph.arcs().find(|&(u, v)| x_side.contains(u) == x_side.contains(v)) {
            return Err(Error::NotBipartite(format!("arc ({u}, {v}) inside a partite set")));
        }
        Ok(BipartiteDigraph { digraph, x_side })
    }

    /// `X = {0..a}`, `Y = {a..2a}` with arcs given by a cross-arc mask: bit
    /// `i*a + j` is `x_i y_j`, bit `a*a + i*a + j` is `y_i x_j`.
    pub fn from_cross_mask(a: usize, mask: u64) -> Result<BipartiteDigraph> {
        if a == 0 || 2 * a * a > 64 {
            return Err(Error::SizeLimit { order: 2 * a, limit: 10 });
        }
        let mut out = vec![0u64; 2 * a];
        for i in 0..a {
            for j in 0..a {
                if mask >> (i * a + j) & 1 == 1 {
                    out[i] |= 1 << (a + j);
                }
                if mask >> (a * a + i * a + j) & 1 == 1 {
                    out[a + i] |= 1 << j;
                }
            }
        }
        BipartiteDigraph::new(Digraph::from_out_masks(out)?, VertexSet::full(a))
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }

    pub fn half_order(&self) -> usize {
        self.digraph.order() / 2
    }

    pub fn x_side(&self) -> VertexSet {
        self.x_side
    }

    pub fn y_side(&self) -> VertexSet {
        self.digraph.vertices().difference(self.x_side)
    }

    pub fn in_x(&self, v: usize) -> bool {
        self.x_side.contains(v)
    }

    pub fn converse(&self) -> BipartiteDigraph {
        BipartiteDigraph { digraph: self.digraph.converse(), x_side: self.x_side }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WalkKind {
    Path,
    Cycle,
    /// A path `x_1 ... x_m`, `m >= 3`, with the chord `x_1 x_m`.
    Bypass,
}

/// An ordered sequence of distinct vertices interpreted as a path, cycle or bypass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub kind: WalkKind,
}

impl Walk {
    pub fn path(vertices: Vec<usize>) -> Walk {
        Walk { vertices, kind: WalkKind::Path }
    }

    pub fn cycle(vertices: Vec<usize>) -> Walk {
        Walk { vertices, kind: WalkKind::Cycle }
    }

    pub fn bypass(vertices: Vec<usize>) -> Walk {
        Walk { vertices, kind: WalkKind::Bypass }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of arcs: `m - 1` for paths and bypasses, `m` for cycles.
    pub fn length(&self) -> usize {
        match self.kind {
            WalkKind::Cycle => self.vertices.len(),
            _ => self.vertices.len().saturating_sub(1),
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn is_hamiltonian(&self, d: &Digraph) -> bool {
        self.vertices.len() == d.order()
    }

    /// Checks the walk arc by arc against `d`.
    pub fn validate(&self, d: &Digraph) -> Result<()> {
        let vs = &self.vertices;
        let mut seen = VertexSet::EMPTY;
        for &v in vs {
            d.check_vertex(v)?;
            if seen.contains(v) {
                return Err(Error::InvalidWalk(format!("vertex {v} repeated")));
            }
            seen.insert(v);
        }
        let min_len = match self.kind {
            WalkKind::Path => 1,
            WalkKind::Cycle => 2,
            WalkKind::Bypass => 3,
        };
        if vs.len() < min_len {
            return Err(Error::InvalidWalk(format!("{:?} needs at least {min_len} vertices", self.kind)));
        }
        for w in vs.windows(2) {
            if !d.has_arc(w[0], w[1]) {
                return Err(Error::InvalidWalk(format!("missing arc ({}, {})", w[0], w[1])));
            }
        }
        let (first, last) = (vs[0], vs[vs.len() - 1]);
        match self.kind {
            WalkKind::Path => {}
            WalkKind::Cycle if !d.has_arc(last, first) => {
                return Err(Error::InvalidWalk(format!("missing closing arc ({last}, {first})")));
            }
            WalkKind::Bypass if !d.has_arc(first, last) => {
                return Err(Error::InvalidWalk(format!("missing chord ({first}, {last})")));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn is_valid(&self, d: &Digraph) -> bool {
        self.validate(d).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn complete(p: usize) -> Digraph {
        Digraph::new(p, (0..p).flat_map(|u| (0..p).filter(move |&v| v != u).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn build_rejects_loops_and_out_of_range() {
        assert_eq!(Digraph::new(2, [(0, 0)]), Err(Error::LoopArc(0)));
        assert_eq!(Digraph::new(2, [(0, 2)]), Err(Error::OutOfRange { vertex: 2, order: 2 }));
        assert_eq!(Digraph::new(0, []), Err(Error::BadOrder(0)));
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let d = Digraph::new(3, [(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(d.arc_count(), 3);
        assert_eq!(d, c3());
    }

    #[test]
    fn empty_restriction_has_zero_degree() {
        let d = complete(4);
        let deg = d.degree(2, Some(VertexSet::EMPTY)).unwrap();
        assert_eq!(deg, Degree { out_degree: 0, in_degree: 0, total: 0 });
        assert!(d.degree(4, None).is_err());
    }

    #[test]
    fn strong_connectivity() {
        assert!(c3().is_strong());
        assert!(!c3().without_arc(2, 0).unwrap().is_strong());
        assert!(Digraph::empty(1).unwrap().is_strong());
        assert!(complete(4).is_k_strong(3));
        assert!(!complete(4).is_k_strong(4));
        // two K_3* sharing vertex 2
        let glued = Digraph::new(5, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1), (2, 3), (3, 2), (2, 4), (4, 2), (3, 4), (4, 3)]).unwrap();
        assert!(glued.is_strong());
        assert!(!glued.is_k_strong(2));
    }

    #[test]
    fn induced_reindexes_and_keeps_labels() {
        let d = complete(4).with_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()]).unwrap();
        let (sub, map) = d.induced([1, 3].into_iter().collect()).unwrap();
        assert_eq!(map, vec![1, 3]);
        assert_eq!(sub.arc_count(), 2);
        assert_eq!(sub.label(1), "d");
    }

    #[test]
    fn isomorphism_of_triangle_and_relabeling() {
        let d = c3();
        let r = d.relabel(&[2, 0, 1]).unwrap();
        let f = d.isomorphism(&r).unwrap().unwrap();
        for (u, v) in d.arcs() {
            assert!(r.has_arc(f[u], f[v]));
        }
        assert!(d.is_isomorphic(&d.converse()).unwrap());
        assert!(matches!(
            complete(11).isomorphism(&complete(11)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn arc_mask_round_trip_and_canonical() {
        let d = c3();
        let back = Digraph::from_arc_mask(3, d.arc_mask()).unwrap();
        assert_eq!(back, d);
        let other = Digraph::new(3, [(0, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(d.canonical_mask().unwrap(), other.canonical_mask().unwrap());
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_ne!(d.canonical_mask().unwrap(), path.canonical_mask().unwrap());
    }

    #[test]
    fn bipartite_rejects_inner_arcs() {
        let d = Digraph::new(4, [(0, 1)]).unwrap();
        assert!(matches!(
            BipartiteDigraph::new(d, [0, 1].into_iter().collect()),
            Err(Error::NotBipartite(_))
        ));
        let b = BipartiteDigraph::from_cross_mask(2, 0b1).unwrap();
        assert!(b.digraph().has_arc(0, 2));
    }

    #[test]
    fn walk_validation() {
        let d = c3();
        assert!(Walk::cycle(vec![0, 1, 2]).is_valid(&d));
        assert!(Walk::path(vec![0, 1, 2]).is_valid(&d));
        assert!(!Walk::bypass(vec![0, 1, 2]).is_valid(&d));
        assert!(!Walk::path(vec![0, 2]).is_valid(&d));
        assert!(!Walk::path(vec![0, 1, 0]).is_valid(&d));
        assert!(Walk::bypass(vec![1, 2, 0]).validate(&d.with_arc(1, 0).unwrap()).is_ok());
        // a 2-vertex "bypass" would reuse its only arc as the chord
        assert!(!Walk::bypass(vec![0, 1]).is_valid(&complete(2)));
    }
}
