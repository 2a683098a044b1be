//! Exact backtracking searches.
//!
//! Every search counts visited nodes against a [`SolveBudget`]. A search that
//! runs out of budget reports [`Outcome::Exhausted`]; `NotFound` always means
//! the search space was covered completely.
//!
//! Spanning-path searches extend the path from its free end, trying the
//! candidate with the fewest unvisited out-neighbours first (ties by index),
//! and abandon a partial path as soon as some unvisited vertex has no possible
//! predecessor, two unvisited vertices could only be entered from the current
//! end, or two unvisited vertices would both have to be terminal.

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, VertexSet, Walk};
use crate::error::{Error, Result};

/// Backtracking node limit; `node_limit == 0` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SolveBudget {
    pub node_limit: u64,
}

impl SolveBudget {
    pub const UNLIMITED: SolveBudget = SolveBudget { node_limit: 0 };

    pub fn nodes(node_limit: u64) -> SolveBudget {
        SolveBudget { node_limit }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome<T> {
    Found(T),
    NotFound,
    Exhausted,
}

impl<T> Outcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Outcome::Exhausted)
    }

    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::NotFound => Outcome::NotFound,
            Outcome::Exhausted => Outcome::Exhausted,
        }
    }

    /// `"found"`, `"not-found"` or `"exhausted"`.
    pub fn token(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::NotFound => "not-found",
            Outcome::Exhausted => "exhausted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct OutOfBudget;

/// Node counter shared by all sub-searches of one query.
struct Nodes {
    used: u64,
    limit: u64,
}

impl Nodes {
    fn new(budget: SolveBudget) -> Nodes {
        Nodes { used: 0, limit: budget.node_limit }
    }

    #[inline]
    fn tick(&mut self) -> std::result::Result<(), OutOfBudget> {
        self.used += 1;
        if self.limit != 0 && self.used > self.limit {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }
}

type Search<T> = std::result::Result<T, OutOfBudget>;

fn to_outcome<T>(r: Search<Option<T>>) -> Outcome<T> {
    match r {
        Ok(Some(t)) => Outcome::Found(t),
        Ok(None) => Outcome::NotFound,
        Err(OutOfBudget) => Outcome::Exhausted,
    }
}

/// Path from `start` through every vertex of `within` ending in `ends`.
fn spanning_path(d: &Digraph, within: VertexSet, start: usize, ends: VertexSet, nodes: &mut Nodes) -> Search<Option<Vec<usize>>> {
    debug_assert!(within.contains(start));
    let mut path = Vec::with_capacity(within.len());
    path.push(start);
    let mut unvisited = within;
    unvisited.remove(start);
    if extend_spanning(d, &mut path, unvisited.0, ends.0, nodes)? {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn extend_spanning(d: &Digraph, path: &mut Vec<usize>, unvisited: u64, ends: u64, nodes: &mut Nodes) -> Search<bool> {
    let cur = *path.last().expect("nonempty path");
    if unvisited == 0 {
        return Ok(ends >> cur & 1 == 1);
    }
    nodes.tick()?;
    if unvisited & ends == 0 {
        return Ok(false);
    }
    let cur_bit = 1u64 << cur;
    let mut forced: Option<usize> = None;
    let mut terminals = 0;
    for u in VertexSet(unvisited).iter() {
        let pred = d.in_neighbors(u).0 & (unvisited | cur_bit);
        if pred == 0 {
            return Ok(false);
        }
        if pred == cur_bit {
            if forced.is_some() {
                return Ok(false);
            }
            forced = Some(u);
        }
        if d.out_neighbors(u).0 & unvisited == 0 {
            if ends >> u & 1 == 0 {
                return Ok(false);
            }
            terminals += 1;
            if terminals > 1 {
                return Ok(false);
            }
        }
    }
    let mut cands: Vec<usize> = match forced {
        Some(f) => vec![f],
        None => VertexSet(d.out_neighbors(cur).0 & unvisited).iter().collect(),
    };
    if cands.len() > 1 {
        cands.sort_by_key(|&v| ((d.out_neighbors(v).0 & unvisited).count_ones(), v));
    }
    for v in cands {
        path.push(v);
        if extend_spanning(d, path, unvisited & !(1 << v), ends, nodes)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// A Hamiltonian cycle, returned starting at vertex 0.
pub fn hamiltonian_cycle(d: &Digraph, budget: SolveBudget) -> Outcome<Walk> {
    let mut nodes = Nodes::new(budget);
    hamiltonian_cycle_within(d, d.vertices(), &mut nodes)
}

fn hamiltonian_cycle_within(d: &Digraph, within: VertexSet, nodes: &mut Nodes) -> Outcome<Walk> {
    let Some(s) = within.first() else { return Outcome::NotFound };
    if within.len() < 2 {
        return Outcome::NotFound;
    }
    to_outcome(spanning_path(d, within, s, d.in_neighbors(s), nodes)).map(Walk::cycle)
}

/// A Hamiltonian path, optionally with prescribed initial and terminal vertices.
pub fn hamiltonian_path(d: &Digraph, from: Option<usize>, to: Option<usize>, budget: SolveBudget) -> Result<Outcome<Walk>> {
    for v in from.iter().chain(to.iter()) {
        d.check_vertex(*v)?;
    }
    let p = d.order();
    if p == 1 {
        return Ok(Outcome::Found(Walk::path(vec![0])));
    }
    if from.is_some() && from == to {
        return Ok(Outcome::NotFound);
    }
    let ends = to.map_or(d.vertices(), VertexSet::singleton);
    let mut nodes = Nodes::new(budget);
    let starts: Vec<usize> = match from {
        Some(s) => vec![s],
        None => (0..p).filter(|&s| Some(s) != to).collect(),
    };
    for s in starts {
        match spanning_path(d, d.vertices(), s, ends.difference(VertexSet::singleton(s)), &mut nodes) {
            Ok(Some(path)) => return Ok(Outcome::Found(Walk::path(path))),
            Ok(None) => {}
            Err(OutOfBudget) => return Ok(Outcome::Exhausted),
        }
    }
    Ok(Outcome::NotFound)
}

/// A Hamiltonian path `x_1 ... x_p` with `x_1 x_p ∈ A(D)`.
///
/// For each initial vertex `s` this searches a Hamiltonian path from `s`
/// whose terminal vertex lies in `N^+(s)`, i.e. one search per arc `(s, t)`
/// with the terminal constraints merged. Orders below 3 have no bypass.
pub fn hamiltonian_bypass(d: &Digraph, budget: SolveBudget) -> Outcome<Walk> {
    let mut nodes = Nodes::new(budget);
    bypass_within(d, d.vertices(), &mut nodes)
}

fn bypass_within(d: &Digraph, within: VertexSet, nodes: &mut Nodes) -> Outcome<Walk> {
    if within.len() < 3 {
        return Outcome::NotFound;
    }
    for s in within.iter() {
        let ends = d.out_neighbors(s).intersection(within);
        if ends.is_empty() {
            continue;
        }
        match spanning_path(d, within, s, ends, nodes) {
            Ok(Some(path)) => return Outcome::Found(Walk::bypass(path)),
            Ok(None) => {}
            Err(OutOfBudget) => return Outcome::Exhausted,
        }
    }
    Outcome::NotFound
}

/// An `(x_1, x_n)`-bypass of order `n`: a path on `n` vertices with `x_1 x_n ∈ A(D)`,
/// i.e. a copy of `D(n, 2)`.
pub fn bypass_of_order(d: &Digraph, n: usize, budget: SolveBudget) -> Outcome<Walk> {
    let p = d.order();
    if n < 3 || n > p {
        return Outcome::NotFound;
    }
    if n == p {
        return hamiltonian_bypass(d, budget);
    }
    let mut nodes = Nodes::new(budget);
    let r = (|| -> Search<Option<Vec<usize>>> {
        for s in 0..p {
            if d.out_degree(s) == 0 {
                continue;
            }
            let mut path = vec![s];
            if fixed_order_path(d, &mut path, d.vertices().difference(VertexSet::singleton(s)).0, n, d.out_neighbors(s).0, &mut nodes)? {
                return Ok(Some(path));
            }
        }
        Ok(None)
    })();
    to_outcome(r).map(Walk::bypass)
}

fn fixed_order_path(d: &Digraph, path: &mut Vec<usize>, avail: u64, n: usize, ends: u64, nodes: &mut Nodes) -> Search<bool> {
    let cur = *path.last().expect("nonempty");
    if path.len() == n {
        return Ok(ends >> cur & 1 == 1);
    }
    nodes.tick()?;
    let reach = d.reach_within(cur, VertexSet(avail | 1 << cur), true);
    if path.len() + reach.len() - 1 < n || reach.0 & ends & avail == 0 {
        return Ok(false);
    }
    for v in VertexSet(d.out_neighbors(cur).0 & avail).iter() {
        path.push(v);
        if fixed_order_path(d, path, avail & !(1 << v), n, ends, nodes)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// A bypass with at least `min_order` vertices containing `z`.
pub fn bypass_through(d: &Digraph, z: usize, min_order: usize, budget: SolveBudget) -> Result<Outcome<Walk>> {
    d.check_vertex(z)?;
    let p = d.order();
    let min_order = min_order.max(3);
    if min_order > p {
        return Ok(Outcome::NotFound);
    }
    fn rec(d: &Digraph, path: &mut Vec<usize>, avail: u64, z: usize, min_order: usize, nodes: &mut Nodes) -> Search<bool> {
        let cur = *path.last().expect("nonempty");
        let s = path[0];
        let has_z = avail >> z & 1 == 0;
        if path.len() >= min_order && has_z && d.has_arc(s, cur) {
            return Ok(true);
        }
        nodes.tick()?;
        let reach = d.reach_within(cur, VertexSet(avail | 1 << cur), true);
        if path.len() + reach.len() - 1 < min_order || (!has_z && !reach.contains(z)) {
            return Ok(false);
        }
        for v in VertexSet(d.out_neighbors(cur).0 & avail).iter() {
            path.push(v);
            if rec(d, path, avail & !(1 << v), z, min_order, nodes)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
    let mut nodes = Nodes::new(budget);
    let r = (|| -> Search<Option<Vec<usize>>> {
        for s in 0..p {
            let mut path = vec![s];
            if rec(d, &mut path, d.vertices().0 & !(1 << s), z, min_order, &mut nodes)? {
                return Ok(Some(path));
            }
        }
        Ok(None)
    })();
    Ok(to_outcome(r).map(Walk::bypass))
}

/// A longest cycle containing `z`; `NotFound` when `z` lies on no cycle.
pub fn longest_cycle_through(d: &Digraph, z: usize, budget: SolveBudget) -> Result<Outcome<Walk>> {
    d.check_vertex(z)?;
    let mut nodes = Nodes::new(budget);
    let mut best: Option<Vec<usize>> = None;
    let mut path = vec![z];
    let r = longest_rec(d, z, &mut path, d.vertices().0 & !(1 << z), &mut best, &mut nodes);
    Ok(match r {
        Err(OutOfBudget) => Outcome::Exhausted,
        Ok(()) => match best {
            Some(c) => Outcome::Found(Walk::cycle(c)),
            None => Outcome::NotFound,
        },
    })
}

fn longest_rec(d: &Digraph, z: usize, path: &mut Vec<usize>, avail: u64, best: &mut Option<Vec<usize>>, nodes: &mut Nodes) -> Search<()> {
    let cur = *path.last().expect("nonempty");
    let best_len = best.as_ref().map_or(0, Vec::len);
    if path.len() >= 2 && d.has_arc(cur, z) && path.len() > best_len {
        *best = Some(path.clone());
    }
    if best.as_ref().map_or(0, Vec::len) == d.order() {
        return Ok(());
    }
    nodes.tick()?;
    // only vertices reachable from cur that can still reach z can join the cycle
    let from_cur = d.reach_within(cur, VertexSet(avail | 1 << cur), true);
    let to_z = d.reach_within(z, VertexSet(avail | 1 << z), false);
    let bound = path.len() + from_cur.intersection(to_z).difference(VertexSet::singleton(z)).len();
    if bound <= best.as_ref().map_or(0, Vec::len) {
        return Ok(());
    }
    for v in VertexSet(d.out_neighbors(cur).0 & avail).iter() {
        path.push(v);
        longest_rec(d, z, path, avail & !(1 << v), best, nodes)?;
        path.pop();
        if best.as_ref().map_or(0, Vec::len) == d.order() {
            break;
        }
    }
    Ok(())
}

/// A cycle of exactly `len` vertices through `z` using only vertices of `within`.
pub fn cycle_of_length_through(d: &Digraph, z: usize, len: usize, within: VertexSet, budget: SolveBudget) -> Result<Outcome<Walk>> {
    d.check_vertex(z)?;
    d.check_set(within)?;
    if len < 2 || !within.contains(z) || len > within.len() {
        return Ok(Outcome::NotFound);
    }
    let mut nodes = Nodes::new(budget);
    if len == within.len() {
        return Ok(match hamiltonian_cycle_within(d, within, &mut nodes) {
            Outcome::Found(c) => Outcome::Found(rotate_to(c, z)),
            o => o,
        });
    }
    let mut path = vec![z];
    let r = (|| -> Search<Option<Vec<usize>>> {
        let avail = within.0 & !(1 << z);
        let ends = d.in_neighbors(z).0;
        if fixed_order_path(d, &mut path, avail, len, ends, &mut nodes)? {
            Ok(Some(path.clone()))
        } else {
            Ok(None)
        }
    })();
    Ok(to_outcome(r).map(Walk::cycle))
}

fn rotate_to(mut c: Walk, z: usize) -> Walk {
    if let Some(i) = c.vertices.iter().position(|&v| v == z) {
        c.vertices.rotate_left(i);
    }
    c
}

/// A cycle whose vertex set contains `m`.
pub fn cycle_through_set(d: &Digraph, m: VertexSet, budget: SolveBudget) -> Result<Outcome<Walk>> {
    d.check_set(m)?;
    let Some(root) = m.first() else {
        return Err(Error::BadParameters("empty vertex set".into()));
    };
    if m.len() == d.order() {
        return Ok(hamiltonian_cycle(d, budget).map(|c| rotate_to(c, root)));
    }
    fn rec(d: &Digraph, root: usize, m: u64, path: &mut Vec<usize>, avail: u64, nodes: &mut Nodes) -> Search<bool> {
        let cur = *path.last().expect("nonempty");
        if m & avail == 0 && path.len() >= 2 && d.has_arc(cur, root) {
            return Ok(true);
        }
        nodes.tick()?;
        let need = m & avail;
        if need != 0 {
            let from_cur = d.reach_within(cur, VertexSet(avail | 1 << cur), true);
            if need & !from_cur.0 != 0 {
                return Ok(false);
            }
        }
        for v in VertexSet(d.out_neighbors(cur).0 & avail).iter() {
            path.push(v);
            if rec(d, root, m, path, avail & !(1 << v), nodes)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
    let mut nodes = Nodes::new(budget);
    let mut path = vec![root];
    let r = rec(d, root, m.0, &mut path, d.vertices().0 & !(1 << root), &mut nodes);
    Ok(match r {
        Ok(true) => Outcome::Found(Walk::cycle(path)),
        Ok(false) => Outcome::NotFound,
        Err(OutOfBudget) => Outcome::Exhausted,
    })
}

/// Checks that `seq = v_1 ... v_n` realizes `D(n, q)` in `d`: arcs
/// `v_i v_{i+1}` for `i <= n-q+1` and the reversed arcs `v_{i+1} v_i` for the
/// remaining `q - 1` positions of the cycle `v_1 ... v_n v_1`.
pub fn is_dnq_ordering(d: &Digraph, seq: &[usize], q: usize) -> bool {
    let n = seq.len();
    if n < 3 || q < 2 || q > n {
        return false;
    }
    let distinct: VertexSet = seq.iter().copied().collect();
    if distinct.len() != n || seq.iter().any(|&v| v >= d.order()) {
        return false;
    }
    (0..n).all(|i| {
        let (a, b) = (seq[i], seq[(i + 1) % n]);
        if i <= n - q { d.has_arc(a, b) } else { d.has_arc(b, a) }
    })
}

/// An ordering of all vertices realizing `D(p, q)` as a spanning subdigraph.
///
/// `D(p, q)` consists of two internally disjoint paths from `v_1` to
/// `v_{p-q+2}` with `p-q+1` and `q-1` arcs. The short side is enumerated and
/// the long side is completed by a spanning-path search.
pub fn find_spanning_dnq(d: &Digraph, q: usize, budget: SolveBudget) -> Result<Outcome<Vec<usize>>> {
    let p = d.order();
    if p < 3 {
        return Err(Error::OrderTooSmall { order: p, min: 3 });
    }
    if q < 2 || q > p {
        return Err(Error::BadParameters(format!("q = {q} outside [2, {p}]")));
    }
    let mut nodes = Nodes::new(budget);
    // enumerate the side with q-1 arcs, complete the side with p-q+1 arcs
    fn short_side(d: &Digraph, path: &mut Vec<usize>, avail: u64, arcs: usize, nodes: &mut Nodes) -> Search<Option<Vec<usize>>> {
        if path.len() == arcs + 1 {
            let s = path[0];
            let t = *path.last().expect("nonempty");
            let inner: VertexSet = path[1..path.len() - 1].iter().copied().collect();
            let within = d.vertices().difference(inner);
            if let Some(long) = spanning_path(d, within, s, VertexSet::singleton(t), nodes)? {
                if long.len() >= 2 {
                    let mut seq = long;
                    seq.extend(path[1..path.len() - 1].iter().rev());
                    return Ok(Some(seq));
                }
            }
            return Ok(None);
        }
        nodes.tick()?;
        let cur = *path.last().expect("nonempty");
        for v in VertexSet(d.out_neighbors(cur).0 & avail).iter() {
            path.push(v);
            if let Some(seq) = short_side(d, path, avail & !(1 << v), arcs, nodes)? {
                return Ok(Some(seq));
            }
            path.pop();
        }
        Ok(None)
    }
    let r = (|| -> Search<Option<Vec<usize>>> {
        for s in 0..p {
            let mut path = vec![s];
            if let Some(seq) = short_side(d, &mut path, d.vertices().0 & !(1 << s), q - 1, &mut nodes)? {
                return Ok(Some(seq));
            }
        }
        Ok(None)
    })();
    let out = to_outcome(r);
    if let Outcome::Found(seq) = &out {
        debug_assert!(is_dnq_ordering(d, seq, q), "{seq:?} does not realize D({p},{q})");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn c3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn cycle_on_complete_and_h10() {
        let k4 = families::complete(4).unwrap();
        let c = hamiltonian_cycle(&k4, SolveBudget::UNLIMITED).found().unwrap();
        assert!(c.is_valid(&k4) && c.is_hamiltonian(&k4));
        let h = families::h_n(10).unwrap();
        assert_eq!(hamiltonian_cycle(&h, SolveBudget::UNLIMITED), Outcome::NotFound);
    }

    #[test]
    fn path_endpoint_constraints() {
        let d = c3();
        let p = hamiltonian_path(&d, Some(0), None, SolveBudget::UNLIMITED).unwrap();
        assert_eq!(p, Outcome::Found(Walk::path(vec![0, 1, 2])));
        assert_eq!(hamiltonian_path(&d, Some(0), Some(1), SolveBudget::UNLIMITED).unwrap(), Outcome::NotFound);
        assert!(hamiltonian_path(&d, Some(3), None, SolveBudget::UNLIMITED).is_err());
    }

    #[test]
    fn bypass_small_cases() {
        assert_eq!(hamiltonian_bypass(&c3(), SolveBudget::UNLIMITED), Outcome::NotFound);
        assert_eq!(hamiltonian_bypass(&families::t5(), SolveBudget::UNLIMITED), Outcome::NotFound);
        let two = families::complete(2).unwrap();
        assert_eq!(hamiltonian_bypass(&two, SolveBudget::UNLIMITED), Outcome::NotFound);
    }

    #[test]
    fn exhausted_is_distinct() {
        let h = families::h_n(12).unwrap();
        assert_eq!(hamiltonian_cycle(&h, SolveBudget::nodes(1)), Outcome::Exhausted);
        assert_eq!(hamiltonian_bypass(&h, SolveBudget::nodes(1)), Outcome::Exhausted);
    }

    #[test]
    fn longest_cycle_cases() {
        let k5 = families::complete(5).unwrap();
        for z in 0..5 {
            assert_eq!(longest_cycle_through(&k5, z, SolveBudget::UNLIMITED).unwrap().found().unwrap().len(), 5);
        }
        // two K_3* glued at vertex 0
        let glued = families::dpkk(5, 2).unwrap();
        let cut = (0..5).find(|&v| glued.total_degree(v) == 8).unwrap();
        assert_eq!(longest_cycle_through(&glued, cut, SolveBudget::UNLIMITED).unwrap().found().unwrap().len(), 3);
        let pendant = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert_eq!(longest_cycle_through(&pendant, 3, SolveBudget::UNLIMITED).unwrap(), Outcome::NotFound);
    }

    #[test]
    fn cycle_through_set_cases() {
        let k4 = families::complete(4).unwrap();
        let c = cycle_through_set(&k4, k4.vertices(), SolveBudget::UNLIMITED).unwrap().found().unwrap();
        assert_eq!(c.len(), 4);
        let glued = families::dpkk(5, 2).unwrap();
        let cut = (0..5).find(|&v| glued.total_degree(v) == 8).unwrap();
        // one non-cut vertex from each block
        let a = (0..5).find(|&v| v != cut).unwrap();
        let b = (0..5).find(|&v| v != cut && v != a && !glued.adjacent(a, v)).unwrap();
        let m: VertexSet = [a, b].into_iter().collect();
        assert_eq!(cycle_through_set(&glued, m, SolveBudget::UNLIMITED).unwrap(), Outcome::NotFound);
        assert!(cycle_through_set(&c3(), VertexSet::singleton(1), SolveBudget::UNLIMITED).unwrap().is_found());
    }

    #[test]
    fn dnq_generator_self_containment() {
        for n in 3..=8 {
            for q in 2..=n {
                let d = families::dnq(n, q).unwrap();
                let seq = find_spanning_dnq(&d, q, SolveBudget::UNLIMITED).unwrap().found().unwrap();
                assert!(is_dnq_ordering(&d, &seq, q), "n={n} q={q}");
                let ident: Vec<usize> = (0..n).collect();
                assert!(is_dnq_ordering(&d, &ident, q));
            }
        }
        assert_eq!(find_spanning_dnq(&c3(), 2, SolveBudget::UNLIMITED).unwrap(), Outcome::NotFound);
        assert!(find_spanning_dnq(&c3(), 4, SolveBudget::UNLIMITED).is_err());
    }

    #[test]
    fn bypass_of_order_and_through() {
        let h = families::h_n(9).unwrap();
        for n in 3..=9 {
            let b = bypass_of_order(&h, n, SolveBudget::UNLIMITED).found().unwrap();
            assert_eq!(b.len(), n);
            assert!(b.is_valid(&h));
        }
        let b = bypass_through(&h, 0, 7, SolveBudget::UNLIMITED).unwrap().found().unwrap();
        assert!(b.len() >= 7 && b.vertices.contains(&0) && b.is_valid(&h));
        assert_eq!(bypass_through(&c3(), 0, 3, SolveBudget::UNLIMITED).unwrap(), Outcome::NotFound);
    }
}
