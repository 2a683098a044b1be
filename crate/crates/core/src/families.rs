//! Generators for the named extremal digraphs.
//!
//! Vertex numbering conventions:
//!
//! * `T_5`: `x_1..x_4 = 0..3`, `y = 4`.
//! * `H(n)`: `x_0..x_{n-4} = 0..=n-4`, `y_1, y_2, y_3 = n-3, n-2, n-1`.
//! * `D_{p-k,k}`: `K*_{p-k}` on `0..p-k`, `K*_{k+1}` on `p-k-1..p`; the
//!   shared vertex is `p-k-1`.
//! * `D_0`: the independent set `F` is `0..(p+1)/2`, `B` the rest.
//! * `D(n, q)`: the ordering `0, 1, ..., n-1` realizes it.
//! * bipartite digraphs: `x_i = i-1`, `y_i = a+i-1`.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::satisfies_condition_a;
use crate::digraph::{BipartiteDigraph, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::solvers::{hamiltonian_bypass, hamiltonian_cycle, Outcome, SolveBudget};

/// The complete digraph `K*_p`.
pub fn complete(p: usize) -> Result<Digraph> {
    Digraph::new(p, (0..p).flat_map(|u| (0..p).filter(move |&v| v != u).map(move |v| (u, v))))
}

/// The directed cycle `0 -> 1 -> ... -> p-1 -> 0`.
pub fn cycle(p: usize) -> Result<Digraph> {
    if p < 2 {
        return Err(Error::BadParameters(format!("cycle needs p >= 2, got {p}")));
    }
    Digraph::new(p, (0..p).map(|i| (i, (i + 1) % p)))
}

/// The tournament `T_5`.
pub fn t5() -> Digraph {
    let (x1, x2, x3, x4, y) = (0, 1, 2, 3, 4);
    Digraph::new(5, [(x1, x2), (x2, x3), (x3, x4), (x4, x1), (x1, y), (x3, y), (y, x2), (y, x4), (x1, x3), (x2, x4)])
        .and_then(|d| d.with_labels(["x1", "x2", "x3", "x4", "y"].map(String::from).to_vec()))
        .expect("T_5 arc list is valid")
}

/// The 2-strong non-Hamiltonian digraph `H(n)`, `n >= 8`, whose vertices
/// other than `x_0` all have degree at least `n` while `d(x_0) = 4`.
pub fn h_n(n: usize) -> Result<Digraph> {
    if !(8..=64).contains(&n) {
        return Err(Error::BadParameters(format!("H(n) needs 8 <= n <= 64, got {n}")));
    }
    let x = |i: usize| i;
    let y = |i: usize| n - 4 + i;
    let m = n - 4; // largest x index
    let mut arcs = Vec::new();
    // {y_i y_j | i != j}
    for i in 1..=3 {
        for j in (1..=3).filter(|&j| j != i) {
            arcs.push((y(i), y(j)));
        }
    }
    // {x_i x_{i+1}}: the path x_0 x_1 ... x_{n-4}
    for i in 0..m {
        arcs.push((x(i), x(i + 1)));
    }
    // {y_i x_j | 1 <= i <= 3, 1 <= j <= n-6}
    for i in 1..=3 {
        for j in 1..=n - 6 {
            arcs.push((y(i), x(j)));
        }
    }
    // {x_i x_j | 1 <= j < i <= n-4}
    for i in 1..=m {
        for j in 1..i {
            arcs.push((x(i), x(j)));
        }
    }
    // {x_{n-4} y_i, x_{n-6} y_i | 1 <= i <= 3}
    for i in 1..=3 {
        arcs.push((x(n - 4), y(i)));
        arcs.push((x(n - 6), y(i)));
    }
    // {x_i x_{n-5} | 1 <= i <= n-7}
    for i in 1..=n - 7 {
        arcs.push((x(i), x(n - 5)));
    }
    arcs.extend([(x(0), x(n - 5)), (x(n - 5), x(0)), (x(n - 4), x(0)), (x(n - 6), x(n - 4))]);
    let mut labels: Vec<String> = (0..=m).map(|i| format!("x{i}")).collect();
    labels.extend((1..=3).map(|i| format!("y{i}")));
    let d = Digraph::new(n, arcs)?.with_labels(labels)?;
    let high = (0..n).filter(|&v| d.total_degree(v) >= n).count();
    assert!(d.total_degree(0) == 4 && high == n - 1, "H({n}) degree facts violated");
    Ok(d)
}

/// The `H(n)` bypass `y_1 y_2 y_3 x_2 x_3 ... x_{n-4} x_0 x_1`.
pub fn h_n_bypass_witness(n: usize) -> Vec<usize> {
    let mut w = vec![n - 3, n - 2, n - 1];
    w.extend(2..=n - 4);
    w.extend([0, 1]);
    w
}

/// `D_{p-k,k}`: `K*_{p-k}` and `K*_{k+1}` sharing one vertex.
pub fn dpkk(p: usize, k: usize) -> Result<Digraph> {
    if !(3..=64).contains(&p) || !(1..=p - 2).contains(&k) {
        return Err(Error::BadParameters(format!("D_(p-k,k) needs p >= 3 and 1 <= k <= p-2, got p={p} k={k}")));
    }
    let shared = p - k - 1;
    let mut arcs = Vec::new();
    for block in [0..shared + 1, shared..p] {
        for u in block.clone() {
            for v in block.clone().filter(|&v| v != u) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(p, arcs)
}

/// `D_0`: an independent set `F` of `(p+1)/2` vertices joined in both
/// directions to every vertex of `B`, which induces `b_sub` (of order `(p-1)/2`).
pub fn d0(p: usize, b_sub: &Digraph) -> Result<Digraph> {
    if !(3..=64).contains(&p) || p.is_multiple_of(2) {
        return Err(Error::BadParameters(format!("D_0 needs odd p >= 3, got {p}")));
    }
    let f = p.div_ceil(2);
    if b_sub.order() != p - f {
        return Err(Error::BadParameters(format!("B-subdigraph must have order {}, got {}", p - f, b_sub.order())));
    }
    let mut arcs: Vec<(usize, usize)> = b_sub.arcs().map(|(u, v)| (u + f, v + f)).collect();
    for u in 0..f {
        for b in f..p {
            arcs.push((u, b));
            arcs.push((b, u));
        }
    }
    Digraph::new(p, arcs)
}

/// `D_0` with an arcless `B`.
pub fn d0_empty(p: usize) -> Result<Digraph> {
    d0(p, &Digraph::empty((p.max(3) - 1) / 2)?)
}

/// `D_0` with a complete `B`.
pub fn d0_complete(p: usize) -> Result<Digraph> {
    d0(p, &complete((p.max(3) - 1) / 2)?)
}

/// `D(n, q)`: the cycle `0 1 ... n-1 0` with its last `q-1` arcs reversed.
pub fn dnq(n: usize, q: usize) -> Result<Digraph> {
    if !(3..=64).contains(&n) || !(2..=n).contains(&q) {
        return Err(Error::BadParameters(format!("D(n,q) needs n >= 3 and 2 <= q <= n, got n={n} q={q}")));
    }
    Digraph::new(
        n,
        (0..n).map(|i| {
            let j = (i + 1) % n;
            if i <= n - q { (i, j) } else { (j, i) }
        }),
    )
}

/// Cross-mask bits of the cycle `x_1 y_1 x_2 y_2 ... x_a y_a x_1`.
pub fn canonical_cycle_mask(a: usize) -> u64 {
    let mut m = 0u64;
    for i in 0..a {
        m |= 1 << (i * a + i); // x_i -> y_i
        m |= 1 << (a * a + i * a + (i + 1) % a); // y_i -> x_{i+1}
    }
    m
}

/// The cycle `x_1 y_1 ... x_a y_a` as a vertex sequence.
pub fn canonical_cycle(a: usize) -> Vec<usize> {
    (0..a).flat_map(|i| [i, a + i]).collect()
}

/// Deposits the bits of `chords` into the cross-mask positions not used by
/// the canonical Hamiltonian cycle.
pub fn fixed_cycle_mask(a: usize, chords: u64) -> u64 {
    let cyc = canonical_cycle_mask(a);
    let mut out = cyc;
    let mut k = 0;
    for bit in 0..2 * a * a {
        if cyc >> bit & 1 == 0 {
            if chords >> k & 1 == 1 {
                out |= 1 << bit;
            }
            k += 1;
        }
    }
    out
}

/// Number of chord positions around the canonical cycle: `2a^2 - 2a`.
pub fn fixed_cycle_free_bits(a: usize) -> usize {
    2 * a * a - 2 * a
}

/// All strong, `A_1`, non-Hamiltonian balanced bipartite digraphs on `3 + 3`
/// vertices, as cross masks in increasing order.
pub fn b6_survivors() -> Vec<u64> {
    (0u64..1 << 18)
        .into_par_iter()
        .filter(|&mask| {
            let b = BipartiteDigraph::from_cross_mask(3, mask).expect("a = 3");
            b.digraph().is_strong()
                && satisfies_condition_a(&b, 1)
                && hamiltonian_cycle(b.digraph(), SolveBudget::UNLIMITED) == Outcome::NotFound
        })
        .collect()
}

/// Reconstructs `B_6` by exhaustive search: the survivors of [`b6_survivors`]
/// must form a single isomorphism class, whose representative (lowest cross
/// mask) must have a Hamiltonian bypass.
pub fn derive_b6() -> Result<BipartiteDigraph> {
    let survivors = b6_survivors();
    let mut classes: Vec<(u64, u64)> = Vec::new(); // (canonical mask, lowest cross mask)
    for &mask in &survivors {
        let d = BipartiteDigraph::from_cross_mask(3, mask)?;
        let canon = d.digraph().canonical_mask()?;
        if !classes.iter().any(|&(c, _)| c == canon) {
            classes.push((canon, mask));
        }
    }
    if classes.len() != 1 {
        return Err(Error::DerivationFailed(format!(
            "{} labelled survivors in {} isomorphism classes, expected exactly one class",
            survivors.len(),
            classes.len()
        )));
    }
    let b = BipartiteDigraph::from_cross_mask(3, classes[0].1)?;
    if !hamiltonian_bypass(b.digraph(), SolveBudget::UNLIMITED).is_found() {
        return Err(Error::DerivationFailed("B_6 candidate has no Hamiltonian bypass".into()));
    }
    Ok(b)
}

/// Cached [`derive_b6`].
pub fn b6() -> Result<BipartiteDigraph> {
    static B6: OnceLock<Result<BipartiteDigraph>> = OnceLock::new();
    B6.get_or_init(derive_b6).clone()
}

/// A bipartite order-8 digraph containing the canonical Hamiltonian cycle,
/// satisfying `A_0`, without a Hamiltonian bypass; `None` when the chord mask
/// does not qualify.
pub fn b8_candidate(chords: u64) -> Option<BipartiteDigraph> {
    let b = BipartiteDigraph::from_cross_mask(4, fixed_cycle_mask(4, chords)).expect("a = 4");
    (satisfies_condition_a(&b, 0) && hamiltonian_bypass(b.digraph(), SolveBudget::UNLIMITED) == Outcome::NotFound)
        .then_some(b)
}

/// Searches the chord subsets of the canonical 8-cycle in increasing order,
/// examining at most `max_candidates` of them (`None`: all `2^24`). Returns
/// the lowest qualifying chord set.
pub fn search_b8(max_candidates: Option<u64>) -> Outcome<BipartiteDigraph> {
    let space = 1u64 << fixed_cycle_free_bits(4);
    let limit = max_candidates.map_or(space, |m| m.min(space));
    if limit == 0 {
        return Outcome::Exhausted;
    }
    match (0..limit).into_par_iter().find_first(|&c| b8_candidate(c).is_some()) {
        Some(c) => Outcome::Found(b8_candidate(c).expect("qualified above")),
        None if limit < space => Outcome::Exhausted,
        None => Outcome::NotFound,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    D0,
    Dpkk,
    T5,
    Hn,
    Dnq,
    Complete,
    Cycle,
    B6,
    B8,
}

impl std::str::FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyId> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "d0" => FamilyId::D0,
            "dpkk" => FamilyId::Dpkk,
            "t5" => FamilyId::T5,
            "hn" | "h" => FamilyId::Hn,
            "dnq" => FamilyId::Dnq,
            "complete" | "k" => FamilyId::Complete,
            "cycle" | "c" => FamilyId::Cycle,
            "b6" => FamilyId::B6,
            "b8" => FamilyId::B8,
            _ => return Err(Error::BadParameters(format!("unknown family '{s}'"))),
        })
    }
}

/// A family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `b_sub = None` means an arcless `B`.
    D0 { p: usize, b_sub: Option<Digraph> },
    Dpkk { p: usize, k: usize },
    T5,
    Hn { n: usize },
    Dnq { n: usize, q: usize },
    Complete { p: usize },
    Cycle { p: usize },
    B6,
    /// Full fixed-cycle search unless a candidate limit is given.
    B8 { max_candidates: Option<u64> },
}

/// A generated digraph, with its bipartition for the bipartite families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub digraph: Digraph,
    pub partition: Option<VertexSet>,
}

impl From<Digraph> for Generated {
    fn from(digraph: Digraph) -> Self {
        Generated { digraph, partition: None }
    }
}

impl From<BipartiteDigraph> for Generated {
    fn from(b: BipartiteDigraph) -> Self {
        let partition = Some(b.x_side());
        Generated { digraph: b.into_digraph(), partition }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    Ok(match spec {
        FamilySpec::D0 { p, b_sub: None } => d0_empty(*p)?.into(),
        FamilySpec::D0 { p, b_sub: Some(b) } => d0(*p, b)?.into(),
        FamilySpec::Dpkk { p, k } => dpkk(*p, *k)?.into(),
        FamilySpec::T5 => t5().into(),
        FamilySpec::Hn { n } => h_n(*n)?.into(),
        FamilySpec::Dnq { n, q } => dnq(*n, *q)?.into(),
        FamilySpec::Complete { p } => complete(*p)?.into(),
        FamilySpec::Cycle { p } => cycle(*p)?.into(),
        FamilySpec::B6 => b6()?.into(),
        FamilySpec::B8 { max_candidates } => match search_b8(*max_candidates) {
            Outcome::Found(b) => b.into(),
            Outcome::Exhausted => return Err(Error::DerivationFailed("B_8 search exhausted its budget".into())),
            Outcome::NotFound => return Err(Error::DerivationFailed("no B_8 candidate in the fixed-cycle space".into())),
        },
    })
}
