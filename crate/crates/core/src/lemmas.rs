//! Constructive insertion and merge procedures, and the bypass construction
//! from a minimal chord of a Hamiltonian cycle in a balanced bipartite digraph.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::digraph::{BipartiteDigraph, Digraph, VertexSet, Walk, WalkKind};
use crate::error::{Error, Result};
use crate::solvers::{cycle_of_length_through, Outcome, SolveBudget};

/// `x` spliced into a path between its `position`-th and `(position+1)`-th
/// vertex (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionWitness {
    pub position: usize,
    pub walk: Walk,
}

/// Which of the three sufficient conditions for inserting `x` into a path
/// `x_1 ... x_m` hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionConditions {
    /// `d(x, V(P))`.
    pub degree: usize,
    /// `d(x, V(P)) >= m + 2`.
    pub large: bool,
    /// `d(x, V(P)) >= m + 1` and `x x_1 ∉ A` or `x_m x ∉ A`.
    pub one_end_missing: bool,
    /// `d(x, V(P)) >= m`, `x x_1 ∉ A` and `x_m x ∉ A`.
    pub both_ends_missing: bool,
}

impl InsertionConditions {
    pub fn any(&self) -> bool {
        self.large || self.one_end_missing || self.both_ends_missing
    }
}

fn check_path(d: &Digraph, path: &[usize], x: usize) -> Result<()> {
    d.check_vertex(x)?;
    if path.len() < 2 {
        return Err(Error::InvalidWalk("path needs at least 2 vertices".into()));
    }
    Walk::path(path.to_vec()).validate(d)?;
    if path.contains(&x) {
        return Err(Error::XOnPath(x));
    }
    Ok(())
}

pub fn insertion_conditions(d: &Digraph, path: &[usize], x: usize) -> Result<InsertionConditions> {
    check_path(d, path, x)?;
    let m = path.len();
    let on_path: VertexSet = path.iter().copied().collect();
    let degree = d.degree_into(x, on_path);
    let no_head = !d.has_arc(x, path[0]);
    let no_tail = !d.has_arc(path[m - 1], x);
    Ok(InsertionConditions {
        degree,
        large: degree >= m + 2,
        one_end_missing: degree > m && (no_head || no_tail),
        both_ends_missing: degree >= m && no_head && no_tail,
    })
}

/// The lowest `i` with `x_i x, x x_{i+1} ∈ A`, or `None`.
pub fn insert_vertex(d: &Digraph, path: &[usize], x: usize) -> Result<Option<InsertionWitness>> {
    check_path(d, path, x)?;
    Ok(path.windows(2).position(|w| d.has_arc(w[0], x) && d.has_arc(x, w[1])).map(|i| {
        let mut vertices = path.to_vec();
        vertices.insert(i + 1, x);
        InsertionWitness { position: i + 1, walk: Walk::path(vertices) }
    }))
}

/// Cycles through `x` of each length `2..=m+1` inside `V(C) ∪ {x}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclesThrough {
    /// `d(x, V(C)) >= m + 1`.
    pub hypothesis_holds: bool,
    pub degree: usize,
    /// Keyed by length (number of arcs).
    pub cycles: BTreeMap<usize, Walk>,
}

impl CyclesThrough {
    pub fn hypothesis_failed(&self) -> bool {
        !self.hypothesis_holds
    }

    /// Every length in `2..=m+1` is present.
    pub fn complete(&self, m: usize) -> bool {
        (2..=m + 1).all(|k| self.cycles.contains_key(&k))
    }
}

/// For a cycle `C` of length `m` and `x ∉ V(C)`, finds a cycle through `x` of
/// every length `k ∈ [2, m+1]` by exact search restricted to `V(C) ∪ {x}`.
/// When `d(x, V(C)) >= m + 1` every length must exist; otherwise the lengths
/// that happen to exist are returned and the report is flagged.
pub fn cycles_through(d: &Digraph, cycle: &[usize], x: usize) -> Result<CyclesThrough> {
    d.check_vertex(x)?;
    Walk::cycle(cycle.to_vec()).validate(d)?;
    if cycle.contains(&x) {
        return Err(Error::XOnCycle(x));
    }
    let m = cycle.len();
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let degree = d.degree_into(x, on_cycle);
    let within = on_cycle.union(VertexSet::singleton(x));
    let mut cycles = BTreeMap::new();
    for k in 2..=m + 1 {
        if let Outcome::Found(c) = cycle_of_length_through(d, x, k, within, SolveBudget::UNLIMITED)? {
            cycles.insert(k, c);
        }
    }
    Ok(CyclesThrough { hypothesis_holds: degree > m, degree, cycles })
}

/// Absorbs `u_1 ... u_k` of the path `P = u_1 ... u_s` into `Q` (a path
/// `v_1 ... v_t` or a cycle), giving a `(v_1, v_t)`-path of length `t+k-1`
/// or a cycle of length `t+k` on `V(Q) ∪ {u_1, ..., u_k}`.
///
/// Requires each `u_i` to have an arc `v_j v_{j+1}` of `Q` with
/// `v_j u_i, u_i v_{j+1} ∈ A`. At each step the longest run `u_a ... u_i` that
/// fits between consecutive vertices of the current walk is inserted; every
/// later `u_l` still has an intact insertion arc, since otherwise the run
/// could have been extended to `u_l`.
pub fn merge_paths(d: &Digraph, p: &[usize], q: &Walk, k: usize) -> Result<Walk> {
    Walk::path(p.to_vec()).validate(d)?;
    q.validate(d)?;
    let closed = match q.kind {
        WalkKind::Path => false,
        WalkKind::Cycle => true,
        WalkKind::Bypass => return Err(Error::InvalidWalk("Q must be a path or a cycle".into())),
    };
    if q.len() < 2 {
        return Err(Error::InvalidWalk("Q needs at least 2 vertices".into()));
    }
    if k == 0 || k > p.len() {
        return Err(Error::BadParameters(format!("k = {k} outside [1, {}]", p.len())));
    }
    if !p.iter().copied().collect::<VertexSet>().intersection(q.vertex_set()).is_empty() {
        return Err(Error::BadParameters("P and Q share a vertex".into()));
    }
    let q_arcs = |walk: &[usize]| -> Vec<(usize, usize)> {
        let n = walk.len();
        let last = if closed { n } else { n - 1 };
        (0..last).map(|j| (walk[j], walk[(j + 1) % n])).collect()
    };
    let original = q_arcs(&q.vertices);
    for &u in &p[..k] {
        if !original.iter().any(|&(a, b)| d.has_arc(a, u) && d.has_arc(u, b)) {
            return Err(Error::HypothesisFailed(u));
        }
    }
    let mut walk = q.vertices.clone();
    let mut next = 0;
    while next < k {
        let u = p[next];
        // (slot j, last index i of the run u_next..=u_i)
        let mut best: Option<(usize, usize)> = None;
        for (j, (a, b)) in q_arcs(&walk).into_iter().enumerate() {
            if !d.has_arc(a, u) {
                continue;
            }
            if let Some(i) = (next..k).rev().find(|&i| d.has_arc(p[i], b)) {
                if best.is_none_or(|(_, bi)| i > bi) {
                    best = Some((j, i));
                }
            }
        }
        let Some((j, i)) = best else {
            return Err(Error::HypothesisFailed(u));
        };
        walk.splice(j + 1..j + 1, p[next..=i].iter().copied());
        next = i + 1;
    }
    let out = Walk { vertices: walk, kind: q.kind };
    out.validate(d)?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChordOrientation {
    /// `y_{i+k-1} x_i`.
    YToX,
    /// `x_{i+k} y_i`, the same shape with the roles of `X` and `Y` exchanged.
    XToY,
}

/// A chord of a Hamiltonian cycle `c_0 c_1 ... c_{2a-1}` jumping back
/// `2k - 1` positions: `tail = c_{h + 2k - 1}`, `head = c_h`.
///
/// Rotating the cycle so that `head` comes first and naming the vertices
/// `x_1 y_1 x_2 y_2 ...` from there, the chord reads `y_k x_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordSpec {
    /// Position of the head on the cycle.
    pub head_position: usize,
    pub k: usize,
    pub orientation: ChordOrientation,
    pub tail: usize,
    pub head: usize,
}

fn check_hamiltonian_cycle(b: &BipartiteDigraph, cycle: &[usize]) -> Result<()> {
    let w = Walk::cycle(cycle.to_vec());
    w.validate(b.digraph())?;
    if !w.is_hamiltonian(b.digraph()) {
        return Err(Error::InvalidWalk("cycle is not Hamiltonian".into()));
    }
    Ok(())
}

/// A non-cycle arc `c_s c_{s-(2k-1)}` with the smallest `k`; ties go to the
/// lowest head position.
pub fn chord_scan(b: &BipartiteDigraph, cycle: &[usize]) -> Result<Option<ChordSpec>> {
    check_hamiltonian_cycle(b, cycle)?;
    let d = b.digraph();
    let n = cycle.len();
    let mut pos = [0usize; 64];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut best: Option<ChordSpec> = None;
    for (tail, head) in d.arcs() {
        let back = (pos[tail] + n - pos[head]) % n;
        if back == n - 1 {
            continue; // cycle arc
        }
        let k = back.div_ceil(2);
        let spec = ChordSpec {
            head_position: pos[head],
            k,
            orientation: if b.in_x(head) { ChordOrientation::YToX } else { ChordOrientation::XToY },
            tail,
            head,
        };
        if best.is_none_or(|c| (k, spec.head_position) < (c.k, c.head_position)) {
            best = Some(spec);
        }
    }
    Ok(best)
}

/// `c'_m = c_{(h+m) mod 2a}`: the cycle read from the chord head.
fn rotated(cycle: &[usize], head_position: usize) -> Vec<usize> {
    let mut c = cycle.to_vec();
    c.rotate_left(head_position);
    c
}

/// For a chord with `k = 1` (tail right after head): the bypass running along
/// the cycle from the tail to the head.
pub fn bypass_from_unit_chord(b: &BipartiteDigraph, cycle: &[usize], chord: &ChordSpec) -> Result<Walk> {
    check_hamiltonian_cycle(b, cycle)?;
    if chord.k != 1 {
        return Err(Error::BadParameters(format!("chord has k = {}, expected 1", chord.k)));
    }
    let mut seq = rotated(cycle, chord.head_position);
    seq.rotate_left(1);
    let w = Walk::bypass(seq);
    validate_arcs(b.digraph(), &w)?;
    Ok(w)
}

fn validate_arcs(d: &Digraph, w: &Walk) -> Result<()> {
    for pair in w.vertices.windows(2) {
        if !d.has_arc(pair[0], pair[1]) {
            return Err(Error::PreconditionFailed(pair[0], pair[1]));
        }
    }
    let (first, last) = (w.vertices[0], w.vertices[w.len() - 1]);
    if !d.has_arc(first, last) {
        return Err(Error::PreconditionFailed(first, last));
    }
    w.validate(d)
}

/// The lowest `j ∈ [k+1, a]` with `x_j y_1, x_k y_j ∈ A` in the rotated
/// labelling of [`ChordSpec`].
pub fn find_chord_index(b: &BipartiteDigraph, cycle: &[usize], chord: &ChordSpec) -> Result<Option<usize>> {
    check_hamiltonian_cycle(b, cycle)?;
    let d = b.digraph();
    let a = b.half_order();
    let c = rotated(cycle, chord.head_position);
    let x = |i: usize| c[2 * i - 2];
    let y = |i: usize| c[2 * i - 1];
    Ok((chord.k + 1..=a).find(|&j| d.has_arc(x(j), y(1)) && d.has_arc(x(chord.k), y(j))))
}

/// With the cycle rotated so the chord is `y_k x_1` (`k >= 2`), and
/// `x_j y_1, x_k y_j ∈ A` for some `j ∈ [k+1, a]`, returns the bypass
///
/// `y_k x_{k+1} y_{k+1} ... x_j  y_1 x_2 y_2 ... x_k  y_j x_{j+1} ... y_a x_1`
///
/// closed by the chord `y_k x_1`. Every arc is checked; a missing one is
/// reported as `PreconditionFailed`.
pub fn bipartite_bypass_from_chord(b: &BipartiteDigraph, cycle: &[usize], chord: &ChordSpec, j: usize) -> Result<Walk> {
    check_hamiltonian_cycle(b, cycle)?;
    let a = b.half_order();
    let k = chord.k;
    if k < 2 {
        return Err(Error::BadParameters("construction needs k >= 2; use bypass_from_unit_chord".into()));
    }
    if !(k + 1..=a).contains(&j) {
        return Err(Error::BadParameters(format!("j = {j} outside [{}, {a}]", k + 1)));
    }
    let c = rotated(cycle, chord.head_position);
    let mut seq = Vec::with_capacity(2 * a);
    seq.extend_from_slice(&c[2 * k - 1..=2 * j - 2]); // y_k .. x_j
    seq.extend_from_slice(&c[1..=2 * k - 2]); // y_1 .. x_k
    seq.extend_from_slice(&c[2 * j - 1..]); // y_j .. y_a
    seq.push(c[0]); // x_1
    let w = Walk::bypass(seq);
    validate_arcs(b.digraph(), &w)?;
    Ok(w)
}

/// Result of trying the chord construction on one Hamiltonian cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChordConstruction {
    NoChord,
    Unit { chord: ChordSpec, bypass: Walk },
    Constructed { chord: ChordSpec, j: usize, bypass: Walk },
    /// Minimal chord with `k >= 2` and no admissible `j`.
    NoIndex { chord: ChordSpec },
}

impl ChordConstruction {
    pub fn bypass(&self) -> Option<&Walk> {
        match self {
            ChordConstruction::Unit { bypass, .. } | ChordConstruction::Constructed { bypass, .. } => Some(bypass),
            _ => None,
        }
    }
}

/// Scans for the minimal chord and builds a bypass from it when possible.
pub fn construct_bypass_from_cycle(b: &BipartiteDigraph, cycle: &[usize]) -> Result<ChordConstruction> {
    let Some(chord) = chord_scan(b, cycle)? else {
        return Ok(ChordConstruction::NoChord);
    };
    if chord.k == 1 {
        let bypass = bypass_from_unit_chord(b, cycle, &chord)?;
        return Ok(ChordConstruction::Unit { chord, bypass });
    }
    Ok(match find_chord_index(b, cycle, &chord)? {
        Some(j) => ChordConstruction::Constructed { chord, j, bypass: bipartite_bypass_from_chord(b, cycle, &chord, j)? },
        None => ChordConstruction::NoIndex { chord },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{canonical_cycle, canonical_cycle_mask, complete};

    #[test]
    fn forced_single_slot() {
        // v1 = 0, v2 = 1, x = 2
        let d = Digraph::new(3, [(0, 1), (0, 2), (2, 1)]).unwrap();
        let c = insertion_conditions(&d, &[0, 1], 2).unwrap();
        assert_eq!(c.degree, 2);
        assert!(c.both_ends_missing);
        let w = insert_vertex(&d, &[0, 1], 2).unwrap().unwrap();
        assert_eq!(w.position, 1);
        assert_eq!(w.walk.vertices, vec![0, 2, 1]);
    }

    #[test]
    fn inapplicable_lemma_has_no_slot() {
        let d = Digraph::new(3, [(0, 1), (2, 0), (1, 2)]).unwrap();
        assert!(!insertion_conditions(&d, &[0, 1], 2).unwrap().any());
        assert_eq!(insert_vertex(&d, &[0, 1], 2).unwrap(), None);
    }

    #[test]
    fn insertion_errors() {
        let d = complete(3).unwrap();
        assert_eq!(insert_vertex(&d, &[0, 1], 1), Err(Error::XOnPath(1)));
        assert!(matches!(insert_vertex(&d, &[0, 1], 7), Err(Error::OutOfRange { .. })));
        assert!(insert_vertex(&d, &[0], 2).is_err());
    }

    #[test]
    fn degree_five_on_three_vertex_path_always_inserts() {
        // oracle: enumerate the 2^6 arc patterns between x = 3 and P = 0 1 2
        let mut checked = 0;
        for pat in 0u32..64 {
            if pat.count_ones() != 5 {
                continue;
            }
            let mut arcs = vec![(0, 1), (1, 2)];
            for i in 0..3 {
                if pat >> i & 1 == 1 {
                    arcs.push((3, i));
                }
                if pat >> (3 + i) & 1 == 1 {
                    arcs.push((i, 3));
                }
            }
            let d = Digraph::new(4, arcs).unwrap();
            let brute = (0..2).any(|i| d.has_arc(i, 3) && d.has_arc(3, i + 1));
            assert!(brute);
            assert!(insert_vertex(&d, &[0, 1, 2], 3).unwrap().is_some());
            checked += 1;
        }
        assert_eq!(checked, 6);
    }

    #[test]
    fn cycles_through_example() {
        // C = v1 v2 v3 = 0 1 2, x = 3 with v1 <-> x, v2 -> x, x -> v3
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 0), (1, 3), (3, 2)]).unwrap();
        let r = cycles_through(&d, &[0, 1, 2], 3).unwrap();
        assert!(r.hypothesis_holds);
        assert_eq!(r.degree, 4);
        assert_eq!(r.cycles.keys().copied().collect::<Vec<_>>(), vec![2, 3, 4]);
        for (len, c) in &r.cycles {
            assert!(c.is_valid(&d) && c.len() == *len && c.vertices.contains(&3));
        }
        assert_eq!(cycles_through(&d, &[0, 1, 2], 0), Err(Error::XOnCycle(0)));
    }

    #[test]
    fn cycles_through_boundary_flagged() {
        // d(x, V(C)) = m = 3
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 0), (1, 3)]).unwrap();
        let r = cycles_through(&d, &[0, 1, 2], 3).unwrap();
        assert!(r.hypothesis_failed());
        let k4 = complete(4).unwrap();
        let r = cycles_through(&k4, &[0, 1, 2], 3).unwrap();
        assert!(r.hypothesis_holds && r.complete(3));
    }

    #[test]
    fn merge_into_two_cycle() {
        // Q = v1 v2 v1 = 0 1 0, u1 = 2 with v1 -> u1 -> v2
        let d = Digraph::new(3, [(0, 1), (1, 0), (0, 2), (2, 1)]).unwrap();
        let w = merge_paths(&d, &[2], &Walk::cycle(vec![0, 1]), 1).unwrap();
        assert_eq!(w, Walk::cycle(vec![0, 2, 1]));
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn merge_reports_first_failing_vertex() {
        let d = Digraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(merge_paths(&d, &[2, 3], &Walk::path(vec![0, 1]), 2), Err(Error::HypothesisFailed(2)));
    }

    #[test]
    fn complete_bipartite_unit_chord() {
        let b = BipartiteDigraph::from_cross_mask(3, (1 << 18) - 1).unwrap();
        let cyc = canonical_cycle(3);
        let chord = chord_scan(&b, &cyc).unwrap().unwrap();
        assert_eq!(chord.k, 1);
        let w = bypass_from_unit_chord(&b, &cyc, &chord).unwrap();
        assert!(w.is_valid(b.digraph()) && w.is_hamiltonian(b.digraph()));
    }

    #[test]
    fn complete_bipartite_k2_construction() {
        let b = BipartiteDigraph::from_cross_mask(3, (1 << 18) - 1).unwrap();
        let cyc = canonical_cycle(3);
        // chord y_2 x_1: head x_1 at position 0, tail y_2 at position 3
        let chord = ChordSpec { head_position: 0, k: 2, orientation: ChordOrientation::YToX, tail: 4, head: 0 };
        let w = bipartite_bypass_from_chord(&b, &cyc, &chord, 3).unwrap();
        assert_eq!(w.len(), 6);
        assert!(w.is_valid(b.digraph()));
    }

    #[test]
    fn missing_arc_is_named() {
        let a = 3;
        // cycle plus chord y_2 -> x_1 and x_3 -> y_1 but no x_2 -> y_3
        let mut mask = canonical_cycle_mask(a);
        mask |= 1 << (a * a + a); // y_2 -> x_1
        mask |= 1 << (2 * a); // x_3 -> y_1
        let b = BipartiteDigraph::from_cross_mask(a, mask).unwrap();
        let cyc = canonical_cycle(a);
        let chord = ChordSpec { head_position: 0, k: 2, orientation: ChordOrientation::YToX, tail: 4, head: 0 };
        assert_eq!(bipartite_bypass_from_chord(&b, &cyc, &chord, 3), Err(Error::PreconditionFailed(1, 5)));
    }

    #[test]
    fn cycle_only_has_no_chord() {
        let b = BipartiteDigraph::from_cross_mask(3, canonical_cycle_mask(3)).unwrap();
        assert_eq!(chord_scan(&b, &canonical_cycle(3)).unwrap(), None);
    }
}
