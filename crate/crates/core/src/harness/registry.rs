//! The statement registry: each entry pairs a hypothesis, made of condition
//! predicates, with a solver-backed conclusion and an optional exception list.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::conditions::{
    bipartite_condition_a, classify_exception, four_vertex_condition, manoussakis_triple, meyniel_like,
    min_degree_condition, one_exception_degree, ExceptionClass,
};
use crate::digraph::{BipartiteDigraph, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::lemmas::chord_scan;
use crate::solvers::{
    bypass_of_order, bypass_through, cycle_through_set, hamiltonian_bypass, hamiltonian_cycle, longest_cycle_through,
    Outcome, SolveBudget,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "T1.1")]
    T1_1,
    #[serde(rename = "T1.2")]
    T1_2,
    #[serde(rename = "T1.3")]
    T1_3,
    #[serde(rename = "T1.4")]
    T1_4,
    #[serde(rename = "T1.5")]
    T1_5,
    #[serde(rename = "T1.6")]
    T1_6,
    #[serde(rename = "T3.5")]
    T3_5,
    #[serde(rename = "T4.1")]
    T4_1,
    #[serde(rename = "T5.1")]
    T5_1,
    #[serde(rename = "L4.1")]
    L4_1,
    #[serde(rename = "L4.2")]
    L4_2,
    #[serde(rename = "L4.3")]
    L4_3,
    #[serde(rename = "L4.4")]
    L4_4,
    C1,
    C2,
    C3,
    P1,
    GH,
}

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        TheoremId::T1_1,
        TheoremId::T1_2,
        TheoremId::T1_3,
        TheoremId::T1_4,
        TheoremId::T1_5,
        TheoremId::T1_6,
        TheoremId::T3_5,
        TheoremId::T4_1,
        TheoremId::T5_1,
        TheoremId::L4_1,
        TheoremId::L4_2,
        TheoremId::L4_3,
        TheoremId::L4_4,
        TheoremId::C1,
        TheoremId::C2,
        TheoremId::C3,
        TheoremId::P1,
        TheoremId::GH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1_1 => "T1.1",
            TheoremId::T1_2 => "T1.2",
            TheoremId::T1_3 => "T1.3",
            TheoremId::T1_4 => "T1.4",
            TheoremId::T1_5 => "T1.5",
            TheoremId::T1_6 => "T1.6",
            TheoremId::T3_5 => "T3.5",
            TheoremId::T4_1 => "T4.1",
            TheoremId::T5_1 => "T5.1",
            TheoremId::L4_1 => "L4.1",
            TheoremId::L4_2 => "L4.2",
            TheoremId::L4_3 => "L4.3",
            TheoremId::L4_4 => "L4.4",
            TheoremId::C1 => "C1",
            TheoremId::C2 => "C2",
            TheoremId::C3 => "C3",
            TheoremId::P1 => "P1",
            TheoremId::GH => "GH",
        }
    }

    /// Proved statements; a counterexample to one of these is a bug.
    pub fn is_proved(self) -> bool {
        !matches!(self, TheoremId::C1 | TheoremId::C2 | TheoremId::C3 | TheoremId::P1)
    }

    /// Entries stated for balanced bipartite digraphs.
    pub fn is_bipartite(self) -> bool {
        matches!(self, TheoremId::T1_6 | TheoremId::T4_1 | TheoremId::P1)
    }

    /// Exceptional digraphs the statement explicitly allows.
    pub fn allowed_exceptions(self, class: ExceptionClass) -> bool {
        match self {
            TheoremId::T1_1 => class == ExceptionClass::D0,
            TheoremId::T1_3 => matches!(
                class,
                ExceptionClass::D0 | ExceptionClass::Dpkk(_) | ExceptionClass::T5 | ExceptionClass::C3
            ),
            TheoremId::T1_4 => class == ExceptionClass::T5,
            // open statements: any recognised family is logged as a candidate exception
            TheoremId::C1 | TheoremId::C2 | TheoremId::C3 | TheoremId::P1 => class != ExceptionClass::None,
            _ => false,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadParameters(format!("unknown entry '{s}'")))
    }
}

/// What an entry is evaluated on.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    General(&'a Digraph),
    Bipartite(&'a BipartiteDigraph),
}

impl<'a> Subject<'a> {
    pub fn digraph(&self) -> &'a Digraph {
        match self {
            Subject::General(d) => d,
            Subject::Bipartite(b) => b.digraph(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisPart {
    pub name: String,
    /// `None` when skipped after an earlier part failed.
    pub holds: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Holds,
    Fails,
    Exhausted,
    NotEvaluated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    /// Hypothesis does not hold; nothing to check.
    Vacuous,
    ConclusionHolds,
    /// Conclusion fails on an allowed exceptional digraph.
    Exception,
    Counterexample,
    /// A solver ran out of budget.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub entry: TheoremId,
    pub hypothesis: Vec<HypothesisPart>,
    pub hypothesis_holds: bool,
    pub conclusion: Conclusion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception: Option<ExceptionClass>,
    pub status: VerdictStatus,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub budget: SolveBudget,
    /// Evaluate every hypothesis part even after one fails.
    pub full_breakdown: bool,
}

/// Collects hypothesis parts, skipping the rest after a failure unless a full
/// breakdown is requested. Exhaustion of a solver inside the hypothesis is
/// propagated.
struct Hyp {
    parts: Vec<HypothesisPart>,
    ok: bool,
    full: bool,
    exhausted: bool,
}

impl Hyp {
    fn new(full: bool) -> Hyp {
        Hyp { parts: Vec::new(), ok: true, full, exhausted: false }
    }

    fn check(&mut self, name: &str, f: impl FnOnce() -> bool) {
        let holds = (self.ok || self.full).then(f);
        if holds == Some(false) {
            self.ok = false;
        }
        self.parts.push(HypothesisPart { name: name.to_string(), holds });
    }

    fn check_outcome(&mut self, name: &str, f: impl FnOnce() -> Option<bool>) {
        let mut exhausted = false;
        self.check(name, || match f() {
            Some(b) => b,
            None => {
                exhausted = true;
                false
            }
        });
        self.exhausted |= exhausted;
    }
}

/// Vertices that may play the exceptional vertex `z`: the unique vertex of
/// degree below `p`, or all vertices when there is none.
fn exceptional_candidates(d: &Digraph) -> VertexSet {
    let p = d.order();
    let low: VertexSet = (0..p).filter(|&v| d.total_degree(v) < p).collect();
    match low.len() {
        0 => d.vertices(),
        1 => low,
        _ => VertexSet::EMPTY,
    }
}

fn found(o: &Outcome<impl Sized>) -> Option<bool> {
    match o {
        Outcome::Found(_) => Some(true),
        Outcome::NotFound => Some(false),
        Outcome::Exhausted => None,
    }
}

/// Largest `l` with condition `A_l` (`None` when there is no cross non-arc).
fn max_condition_a(b: &BipartiteDigraph) -> Option<i64> {
    let d = b.digraph();
    let a = b.half_order() as i64;
    let mut best: Option<i64> = None;
    for u in 0..d.order() {
        let other = if b.in_x(u) { b.y_side() } else { b.x_side() };
        for v in other.difference(d.out_neighbors(u)).iter() {
            let l = (d.out_degree(u) + d.in_degree(v)) as i64 - a;
            best = Some(best.map_or(l, |x| x.min(l)));
        }
    }
    best
}

pub fn evaluate(entry: TheoremId, subject: Subject<'_>, opts: EvalOptions) -> Result<TheoremVerdict> {
    let d = subject.digraph();
    let p = d.order();
    let budget = opts.budget;
    let bip = match (entry.is_bipartite(), subject) {
        (true, Subject::Bipartite(b)) => Some(b),
        (true, Subject::General(_)) => {
            return Err(Error::ScopeMismatch(format!("{entry} needs a balanced bipartite digraph")))
        }
        (false, _) => None,
    };
    let mut h = Hyp::new(opts.full_breakdown);
    let bypass = || hamiltonian_bypass(d, budget);
    // conclusion: Some(true) holds, Some(false) fails, None exhausted
    let conclusion: Box<dyn Fn() -> Option<bool>> = match entry {
        TheoremId::T1_1 => {
            h.check("2-strong", || d.is_k_strong(2));
            h.check("min degree >= p-1", || min_degree_condition(d, p.saturating_sub(1)).holds);
            Box::new(move || found(&bypass()))
        }
        TheoremId::T1_2 => {
            h.check("p >= 3", || p >= 3);
            h.check("min degree >= p", || min_degree_condition(d, p).holds);
            Box::new(move || found(&bypass()))
        }
        TheoremId::T1_3 => {
            h.check("p >= 3", || p >= 3);
            h.check("strong", || d.is_strong());
            h.check("nonadjacent pairs d(x)+d(y) >= 2p-2", || meyniel_like(d, 2 * p - 2, None).holds);
            Box::new(move || found(&bypass()))
        }
        TheoremId::T1_4 => {
            h.check("p >= 4", || p >= 4);
            h.check("strong", || d.is_strong());
            h.check("triple condition 3p-2", || manoussakis_triple(d).map(|r| r.holds).unwrap_or(false));
            Box::new(move || found(&bypass()))
        }
        TheoremId::T1_5 => {
            h.check("p >= 3", || p >= 3);
            h.check("2-strong", || d.is_k_strong(2));
            h.check("d(x) >= p for all x but z", || one_exception_degree(d).holds);
            h.check_outcome("Hamiltonian or d(z) > (p-1)/3", || {
                let z = exceptional_candidates(d);
                if z.iter().any(|v| 3 * d.total_degree(v) > p - 1) {
                    return Some(true);
                }
                found(&hamiltonian_cycle(d, budget))
            });
            Box::new(move || found(&bypass()))
        }
        TheoremId::T1_6 => {
            let b = bip.expect("bipartite scope checked");
            h.check("2a >= 6", || p >= 6);
            h.check("strong", || d.is_strong());
            h.check("condition A_1", || bipartite_condition_a(b, 1).holds);
            Box::new(move || found(&bypass()))
        }
        TheoremId::T3_5 => {
            let m: VertexSet = (0..p).filter(|&v| d.total_degree(v) + 1 >= p).collect();
            h.check("p >= 3", || p >= 3);
            h.check("strong", || d.is_strong());
            h.check("M = {d(v) >= p-1} nonempty", || !m.is_empty());
            h.check("pairs in M: d(x)+d(y) >= 2p-1", || meyniel_like(d, 2 * p - 1, Some(m)).holds);
            Box::new(move || cycle_through_set(d, m, budget).ok().and_then(|o| found(&o)))
        }
        TheoremId::T4_1 => {
            let b = bip.expect("bipartite scope checked");
            let mut cycle = None;
            h.check("a >= 2", || p >= 4);
            h.check("condition A_0", || bipartite_condition_a(b, 0).holds);
            h.check_outcome("Hamiltonian", || match hamiltonian_cycle(d, budget) {
                Outcome::Found(c) => {
                    cycle = Some(c);
                    Some(true)
                }
                Outcome::NotFound => Some(false),
                Outcome::Exhausted => None,
            });
            let chord = cycle.as_ref().and_then(|c| chord_scan(b, &c.vertices).ok().flatten());
            h.check("cycle has a chord", || chord.is_some());
            let l = max_condition_a(b);
            Box::new(move || match found(&bypass()) {
                Some(true) => Some(true),
                Some(false) => Some(l == Some(0) && chord.map(|c| c.k) == Some(2)),
                None => None,
            })
        }
        TheoremId::T5_1 => {
            h.check("p >= 3", || p >= 3);
            h.check("2-strong", || d.is_k_strong(2));
            // distinct pairs may share a vertex; with disjoint pairs only, the
            // statement fails on 2-strong digraphs of order 5
            h.check("four-vertex sum >= 4p-3", || four_vertex_condition(d, 4 * p - 3, true).holds);
            Box::new(move || found(&hamiltonian_cycle(d, budget)))
        }
        TheoremId::L4_1 => {
            h.check("p >= 5", || p >= 5);
            h.check("d(x) >= p for all x but z", || one_exception_degree(d).holds);
            h.check_outcome("cycle of length >= p-2 through z", || {
                lemma_cycle_through_z(d, budget, |len| len + 2 >= p)
            });
            Box::new(move || found(&bypass()))
        }
        TheoremId::L4_2 => {
            h.check("p >= 3", || p >= 3);
            h.check("2-strong", || d.is_k_strong(2));
            h.check("d(x) >= p for all x but z", || one_exception_degree(d).holds);
            h.check_outcome("bypass of order >= p-2 through z", || {
                let mut exhausted = false;
                for z in exceptional_candidates(d).iter() {
                    match bypass_through(d, z, p.saturating_sub(2), budget).ok()? {
                        Outcome::Found(_) => return Some(true),
                        Outcome::NotFound => {}
                        Outcome::Exhausted => exhausted = true,
                    }
                }
                (!exhausted).then_some(false)
            });
            Box::new(move || found(&bypass()))
        }
        TheoremId::L4_3 | TheoremId::L4_4 => {
            let gap = if entry == TheoremId::L4_3 { 3 } else { 4 };
            h.check("p >= 3", || p >= 3);
            h.check("2-strong", || d.is_k_strong(2));
            h.check("d(x) >= p for all x but z", || one_exception_degree(d).holds);
            let name = format!("longest cycle through z has length p-{gap}");
            h.check_outcome(&name, || lemma_cycle_through_z(d, budget, |len| len + gap == p));
            Box::new(move || found(&bypass()))
        }
        TheoremId::GH => {
            h.check("p >= 2", || p >= 2);
            h.check("strong", || d.is_strong());
            h.check("min degree >= p", || min_degree_condition(d, p).holds);
            Box::new(move || found(&hamiltonian_cycle(d, budget)))
        }
        TheoremId::C1 => {
            h.check("p >= 3", || p >= 3);
            h.check("2-strong", || d.is_k_strong(2));
            h.check("p-1 vertices with d(x) >= p", || one_exception_degree(d).holds);
            Box::new(move || found(&bypass()))
        }
        TheoremId::C2 => {
            h.check("p >= 3", || p >= 3);
            h.check("strong", || d.is_strong());
            h.check("four-vertex sum >= 4p-4", || four_vertex_condition(d, 4 * p - 4, true).holds);
            Box::new(move || found(&bypass()))
        }
        TheoremId::C3 => {
            h.check("p >= 3", || p >= 3);
            h.check("strong", || d.is_strong());
            h.check("nonadjacent pairs d(x)+d(y) >= 2p-1", || meyniel_like(d, 2 * p - 1, None).holds);
            Box::new(move || {
                let mut all = true;
                for n in 3..=p {
                    match found(&bypass_of_order(d, n, budget))? {
                        true => {}
                        false => all = false,
                    }
                    if !all {
                        break;
                    }
                }
                Some(all)
            })
        }
        TheoremId::P1 => {
            let b = bip.expect("bipartite scope checked");
            h.check("condition A_0", || bipartite_condition_a(b, 0).holds);
            h.check_outcome("Hamiltonian", || found(&hamiltonian_cycle(d, budget)));
            Box::new(move || found(&bypass()))
        }
    };

    let hypothesis_holds = h.ok;
    if h.exhausted {
        return Ok(TheoremVerdict {
            entry,
            hypothesis: h.parts,
            hypothesis_holds: false,
            conclusion: Conclusion::NotEvaluated,
            exception: None,
            status: VerdictStatus::Exhausted,
        });
    }
    if !hypothesis_holds {
        return Ok(TheoremVerdict {
            entry,
            hypothesis: h.parts,
            hypothesis_holds,
            conclusion: Conclusion::NotEvaluated,
            exception: None,
            status: VerdictStatus::Vacuous,
        });
    }
    let (conclusion, exception, status) = match conclusion() {
        Some(true) => (Conclusion::Holds, None, VerdictStatus::ConclusionHolds),
        None => (Conclusion::Exhausted, None, VerdictStatus::Exhausted),
        Some(false) => {
            let class = classify_exception(d)?;
            let status = if entry.allowed_exceptions(class) {
                VerdictStatus::Exception
            } else {
                VerdictStatus::Counterexample
            };
            (Conclusion::Fails, Some(class), status)
        }
    };
    Ok(TheoremVerdict { entry, hypothesis: h.parts, hypothesis_holds, conclusion, exception, status })
}

/// Some admissible exceptional vertex `z` has a longest cycle through it whose
/// length satisfies `accept`. `None` when a solver ran out of budget.
fn lemma_cycle_through_z(d: &Digraph, budget: SolveBudget, accept: impl Fn(usize) -> bool) -> Option<bool> {
    let mut exhausted = false;
    for z in exceptional_candidates(d).iter() {
        match longest_cycle_through(d, z, budget).ok()? {
            Outcome::Found(c) if accept(c.len()) => return Some(true),
            Outcome::Found(_) | Outcome::NotFound => {}
            Outcome::Exhausted => exhausted = true,
        }
    }
    (!exhausted).then_some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn eval(entry: TheoremId, d: &Digraph) -> TheoremVerdict {
        evaluate(entry, Subject::General(d), EvalOptions::default()).unwrap()
    }

    #[test]
    fn t13_on_t5_is_an_exception() {
        let v = eval(TheoremId::T1_3, &families::t5());
        assert!(v.hypothesis_holds);
        assert_eq!(v.conclusion, Conclusion::Fails);
        assert_eq!(v.exception, Some(ExceptionClass::T5));
        assert_eq!(v.status, VerdictStatus::Exception);
    }

    #[test]
    fn t12_on_complete() {
        let v = eval(TheoremId::T1_2, &families::complete(4).unwrap());
        assert_eq!(v.status, VerdictStatus::ConclusionHolds);
    }

    #[test]
    fn t16_on_b6() {
        let b6 = families::b6().unwrap();
        let v = evaluate(TheoremId::T1_6, Subject::Bipartite(&b6), EvalOptions::default()).unwrap();
        assert!(v.hypothesis_holds);
        assert_eq!(v.status, VerdictStatus::ConclusionHolds);
        assert!(matches!(
            evaluate(TheoremId::T1_6, Subject::General(b6.digraph()), EvalOptions::default()),
            Err(Error::ScopeMismatch(_))
        ));
    }

    #[test]
    fn l41_small_order_remark() {
        // K_3* and K_2* sharing a vertex
        let d = families::dpkk(4, 1).unwrap();
        let v = evaluate(TheoremId::L4_1, Subject::General(&d), EvalOptions { full_breakdown: true, ..Default::default() }).unwrap();
        let failing: Vec<_> = v.hypothesis.iter().filter(|h| h.holds == Some(false)).map(|h| h.name.as_str()).collect();
        assert_eq!(failing, vec!["p >= 5"]);
        assert_eq!(hamiltonian_bypass(&d, SolveBudget::UNLIMITED), Outcome::NotFound);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let d = families::complete(6).unwrap();
        let v = evaluate(TheoremId::T1_2, Subject::General(&d), EvalOptions { budget: SolveBudget::nodes(1), ..Default::default() }).unwrap();
        assert_eq!(v.status, VerdictStatus::Exhausted);
    }

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(json, format!("\"{}\"", t.name()));
        }
    }
}
